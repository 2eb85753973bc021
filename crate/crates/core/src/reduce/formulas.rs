//! Closed-form parameters of the randomized product: the copy count `N`,
//! the approximation-exponent blow-up, and the weight-ratio window.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightSetDescriptor;

fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta <= 0.5 {
        Ok(())
    } else {
        Err(Error::Parameter(format!("delta must lie in (0, 1/2], got {delta}")))
    }
}

/// `(delta (3 - 2 delta) + 3) / (delta (1 + 2 delta))`, the exponent of `eta`
/// in the number of product copies.
pub fn boosting_exponent(delta: f64) -> Result<f64> {
    check_delta(delta)?;
    Ok((delta * (3.0 - 2.0 * delta) + 3.0) / (delta * (1.0 + 2.0 * delta)))
}

/// `ceil(eta ^ boosting_exponent(delta))`.
///
/// Results within `1e-9` relative of an integer are snapped to it first, so
/// `eta^4` at `delta = 1/2` is not bumped up by a rounding error.
pub fn theoretical_n(eta: u64, delta: f64) -> Result<u64> {
    let exponent = boosting_exponent(delta)?;
    if eta == 0 {
        return Err(Error::Parameter("eta must be at least 1".into()));
    }
    let raw = (eta as f64).powf(exponent);
    let nearest = raw.round();
    let n = if (raw - nearest).abs() <= 1e-9 * nearest.max(1.0) { nearest } else { raw.ceil() };
    if n.is_nan() || n >= u64::MAX as f64 {
        return Err(Error::Capacity(format!(
            "eta^{exponent:.4} with eta = {eta} does not fit in 64 bits"
        )));
    }
    Ok(n as u64)
}

/// `(1 + boosting_exponent(delta)) * epsilon_prime`.
pub fn amplification_factor(delta: f64, epsilon_prime: f64) -> Result<f64> {
    if !(epsilon_prime > 0.0 && epsilon_prime.is_finite()) {
        return Err(Error::Parameter(format!("epsilon' must be positive, got {epsilon_prime}")));
    }
    Ok((1.0 + boosting_exponent(delta)?) * epsilon_prime)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmplificationParams {
    pub epsilon_prime: f64,
    pub delta: f64,
    pub epsilon: f64,
}

impl AmplificationParams {
    pub fn new(epsilon_prime: f64, delta: f64) -> Result<Self> {
        let epsilon = amplification_factor(delta, epsilon_prime)?;
        Ok(Self { epsilon_prime, delta, epsilon })
    }
}

/// `(eta^(delta - 1/2), eta^(1/2 - delta))`: the band a weight ratio
/// `|min S / max S|` must sit in (up to constants) for the hardness transfer.
pub fn ratio_window(eta: f64, delta: f64) -> Result<(f64, f64)> {
    check_delta(delta)?;
    if eta.is_nan() || eta < 1.0 {
        return Err(Error::Parameter(format!("eta must be at least 1, got {eta}")));
    }
    Ok((eta.powf(delta - 0.5), eta.powf(0.5 - delta)))
}

/// Whether `s.ratio` lies in `[lo / c, c * hi]` for the window at `(eta, delta)`.
pub fn within_ratio_window(s: &WeightSetDescriptor, eta: f64, delta: f64, c: f64) -> Result<bool> {
    if c.is_nan() || c < 1.0 {
        return Err(Error::Parameter(format!("window constant must be >= 1, got {c}")));
    }
    let (lo, hi) = ratio_window(eta, delta)?;
    Ok(s.ratio >= lo / c && s.ratio <= c * hi)
}

/// The weight set `{-eta^(1/2 - delta), 1}`, the upper edge of the window.
pub fn skewed_weight_set(eta: f64, delta: f64) -> Result<WeightSetDescriptor> {
    let (_, hi) = ratio_window(eta, delta)?;
    WeightSetDescriptor::new(-hi, 1.0)
}
