use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Incumbent, OptResult, SolverConfig};
use crate::error::Result;
use crate::graph::{evaluate, Biclique, Objective, WeightedBipartiteGraph};

const MIN_GAIN: f64 = 1e-9;

/// Best-improvement local search with seeded random restarts.
///
/// Moves: toggle one vertex on either side (add or remove), or toggle a
/// cross-side pair `(u, v)` at once, which captures the gain of the shared
/// edge. Same-side swaps split into two independent toggles and never
/// improve a state that single toggles cannot, so they are not scanned.
/// Restarts begin from uniformly random subsets at density 1/2.
pub fn solve_local_search(
    g: &WeightedBipartiteGraph,
    objective: Objective,
    config: &SolverConfig,
) -> Result<OptResult> {
    config.validate()?;
    let start = Instant::now();
    let out_of_time =
        || config.time_limit.is_some_and(|t| start.elapsed().as_secs_f64() > t);

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut best: Option<Incumbent> = None;
    let mut explored = 0u64;
    for _ in 0..config.restarts {
        let in1: Vec<bool> = (0..g.n1()).map(|_| rng.random_bool(0.5)).collect();
        let in2: Vec<bool> = (0..g.n2()).map(|_| rng.random_bool(0.5)).collect();
        let mut state = State::new(g, objective, in1, in2);
        explored += 1;
        while let Some(mv) = state.best_move() {
            state.apply(mv);
            explored += 1;
            if out_of_time() {
                break;
            }
        }
        let witness = Biclique::from_masks(&state.in1, &state.in2);
        let value = evaluate(g, &witness, objective)?;
        Incumbent::offer(&mut best, value, || witness);
        if out_of_time() {
            break;
        }
    }
    let best = best.expect("restarts >= 1");
    Ok(OptResult { witness: best.witness, value: best.value, explored, optimal: false, objective })
}

#[derive(Debug, Clone, Copy)]
enum Move {
    Row(usize),
    Col(usize),
    Pair(usize, usize),
}

struct State<'a> {
    g: &'a WeightedBipartiteGraph,
    node: f64,
    in1: Vec<bool>,
    in2: Vec<bool>,
    /// row_sum[u] = sum of w(u, v) over v in U2
    row_sum: Vec<f64>,
    /// col_sum[v] = sum of w(u, v) over u in U1
    col_sum: Vec<f64>,
}

fn sign(inside: bool) -> f64 {
    if inside {
        -1.0
    } else {
        1.0
    }
}

impl<'a> State<'a> {
    fn new(g: &'a WeightedBipartiteGraph, objective: Objective, in1: Vec<bool>, in2: Vec<bool>) -> Self {
        let mut row_sum = vec![0.0; g.n1()];
        let mut col_sum = vec![0.0; g.n2()];
        for u in 0..g.n1() {
            for v in 0..g.n2() {
                let w = g.weight(u, v);
                if in2[v] {
                    row_sum[u] += w;
                }
                if in1[u] {
                    col_sum[v] += w;
                }
            }
        }
        Self { g, node: objective.node_bonus(), in1, in2, row_sum, col_sum }
    }

    fn row_gain(&self, u: usize) -> f64 {
        sign(self.in1[u]) * (self.row_sum[u] + self.node)
    }

    fn col_gain(&self, v: usize) -> f64 {
        sign(self.in2[v]) * (self.col_sum[v] + self.node)
    }

    fn best_move(&self) -> Option<Move> {
        let mut best = (MIN_GAIN, None);
        let mut consider = |gain: f64, mv: Move| {
            if gain > best.0 {
                best = (gain, Some(mv));
            }
        };
        for u in 0..self.g.n1() {
            consider(self.row_gain(u), Move::Row(u));
        }
        for v in 0..self.g.n2() {
            consider(self.col_gain(v), Move::Col(v));
        }
        for u in 0..self.g.n1() {
            let (ru, su) = (self.row_gain(u), sign(self.in1[u]));
            let row = self.g.row(u);
            for (v, &w) in row.iter().enumerate() {
                let gain = ru + self.col_gain(v) + su * sign(self.in2[v]) * w;
                consider(gain, Move::Pair(u, v));
            }
        }
        best.1
    }

    fn toggle_row(&mut self, u: usize) {
        let s = sign(self.in1[u]);
        self.in1[u] = !self.in1[u];
        for (c, w) in self.col_sum.iter_mut().zip(self.g.row(u)) {
            *c += s * w;
        }
    }

    fn toggle_col(&mut self, v: usize) {
        let s = sign(self.in2[v]);
        self.in2[v] = !self.in2[v];
        for u in 0..self.g.n1() {
            self.row_sum[u] += s * self.g.weight(u, v);
        }
    }

    fn apply(&mut self, mv: Move) {
        match mv {
            Move::Row(u) => self.toggle_row(u),
            Move::Col(v) => self.toggle_col(v),
            Move::Pair(u, v) => {
                self.toggle_row(u);
                self.toggle_col(v);
            }
        }
    }
}
