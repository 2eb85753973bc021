mod common;

use common::rng;
use mweb_core::samba::*;
use mweb_core::solve::{solve_exact, SolverConfig};
use mweb_core::{BinaryMatrix, Biclique, Objective};
use proptest::prelude::*;
use rand::Rng;
use statrs::distribution::{Binomial, DiscreteCDF};

fn random_matrix(r: &mut impl Rng, n1: usize, n2: usize, density: f64) -> BinaryMatrix {
    loop {
        let cells = (0..n1 * n2).map(|_| r.random_bool(density)).collect();
        let m = BinaryMatrix::new(n1, n2, cells).unwrap();
        if m.ones() > 0 && m.zeros() > 0 {
            return m;
        }
    }
}

#[test]
fn significance_matches_closed_form() {
    let mut r = rng(10);
    for _ in 0..500 {
        let (n1, n2) = (r.random_range(1..8), r.random_range(2..8));
        let m = random_matrix(&mut r, n1, n2, 0.3);
        let (g, p) = simple_weights(&m).unwrap();
        let b = Biclique::new(
            (0..m.n1()).filter(|_| r.random_bool(0.5)).collect(),
            (0..m.n2()).filter(|_| r.random_bool(0.5)).collect(),
        );
        let cells = b.u1.len() * b.u2.len();
        let edges = b.u1.iter().flat_map(|&i| b.u2.iter().map(move |&j| (i, j))).filter(|&(i, j)| m.get(i, j)).count();
        let s = significance(&g, &b).unwrap();
        assert!((s - closed_form_significance(&p, cells, edges)).abs() < 1e-9);
        assert!((s + log2_p_star(cells as u64, edges as u64, p.p).unwrap()).abs() < 1e-9);
    }
}

#[test]
fn binomial_tail_matches_statrs() {
    let mut r = rng(11);
    for _ in 0..500 {
        let n = r.random_range(1..200u64);
        let k = r.random_range(1..=n);
        let p = r.random_range(0.01..0.99);
        let reference = Binomial::new(p, n).unwrap().sf(k - 1);
        let ours = binomial_tail(k, p, n).unwrap();
        assert!((ours - reference).abs() <= 1e-9 * reference.max(1e-300) + 1e-15, "{k} {p} {n}: {ours} vs {reference}");
    }
}

#[test]
fn tail_below_p_star() {
    let mut r = rng(12);
    for _ in 0..1000 {
        let n = r.random_range(0..300u64);
        let k = r.random_range(0..=n);
        let p = r.random_range(1e-4..0.5);
        let tail = ln_binomial_tail(k, p, n).unwrap();
        let bound = log2_p_star(n, k, p).unwrap() * std::f64::consts::LN_2;
        assert!(tail <= bound + 1e-12, "BT({k},{p},{n})");
    }
}

#[test]
fn base_choice_keeps_optimal_witness() {
    let mut r = rng(13);
    for _ in 0..50 {
        let (n1, n2) = (r.random_range(2..7), r.random_range(2..7));
        let m = random_matrix(&mut r, n1, n2, 0.3);
        let (g2, _) = simple_weights_in_base(&m, LogBase::Two).unwrap();
        let (ge, _) = simple_weights_in_base(&m, LogBase::E).unwrap();
        let a = solve_exact(&g2, Objective::EdgeWeight).unwrap();
        let b = solve_exact(&ge, Objective::EdgeWeight).unwrap();
        assert_eq!(a.witness, b.witness);
    }
}

#[test]
fn find_bicluster_score_reevaluates() {
    let mut r = rng(14);
    for _ in 0..50 {
        let m = random_matrix(&mut r, 5, 6, 0.25);
        let (b, score) = find_bicluster(&m, &BiclusterModel::Simple, &SolverConfig::default()).unwrap();
        let (g, _) = simple_weights(&m).unwrap();
        assert_eq!(significance(&g, &b).unwrap(), score);

        let params = SambaRefinedParams {
            p: (0..30).map(|_| r.random_range(0.05..0.3)).collect(),
            p_c: 0.4,
        };
        let (b, score) = find_bicluster(&m, &BiclusterModel::Refined(params.clone()), &SolverConfig::default()).unwrap();
        let g = refined_weights(&m, &params).unwrap();
        assert_eq!(log_likelihood_ratio(&g, &b).unwrap(), score);
    }
}

proptest! {
    #[test]
    fn tail_is_non_increasing_in_k(n in 1u64..120, p in 0.001f64..0.999) {
        let mut prev = binomial_tail(0, p, n).unwrap();
        for k in 1..=n {
            let cur = binomial_tail(k, p, n).unwrap();
            prop_assert!(cur <= prev * (1.0 + 1e-12));
            prev = cur;
        }
    }
}
