use rayon::prelude::*;

use super::{closure_witness, Incumbent, OptResult, Oriented, MAX_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::graph::{evaluate, Biclique, Objective, WeightedBipartiteGraph};

/// Low mask bits scanned by one work item. The partition depends only on the
/// instance, never on the thread count, so merged results are reproducible.
const CHUNK_BITS: usize = 12;

/// Optimal right side for a fixed left side `u1` of `g`: every column whose
/// contribution is strictly positive. Zero-contribution columns are left out.
pub fn closure_for_rows(
    g: &WeightedBipartiteGraph,
    u1: &[usize],
    objective: Objective,
) -> Result<Biclique> {
    let rows = Biclique::new(u1.to_vec(), Vec::new());
    rows.validate(g)?;
    let mut contrib = vec![objective.node_bonus(); g.n2()];
    for &u in &rows.u1 {
        for (c, w) in contrib.iter_mut().zip(g.row(u)) {
            *c += w;
        }
    }
    let u2 = contrib.iter().enumerate().filter(|(_, &c)| c > 0.0).map(|(v, _)| v).collect();
    Ok(Biclique { u1: rows.u1, u2 })
}

/// Exhaustive enumeration with the default cap.
pub fn solve_exact(g: &WeightedBipartiteGraph, objective: Objective) -> Result<OptResult> {
    solve_exact_with_cap(g, objective, super::DEFAULT_ENUMERATION_CAP)
}

/// Enumerates every subset of the smaller side and closes the other side.
///
/// Among equal-value optima the lexicographically smallest `(u1, u2)` is
/// returned.
pub fn solve_exact_with_cap(
    g: &WeightedBipartiteGraph,
    objective: Objective,
    cap: usize,
) -> Result<OptResult> {
    let o = Oriented::new(g);
    let k = o.work.n1();
    let cap = cap.min(MAX_ENUMERATION_CAP);
    if k > cap {
        return Err(Error::Capacity(format!(
            "smaller side has {k} vertices, enumeration cap is {cap}; use branch-and-bound"
        )));
    }
    let low_bits = k.min(CHUNK_BITS);
    let chunks = 1u64 << (k - low_bits);
    let best = (0..chunks)
        .into_par_iter()
        .map(|c| scan_chunk(&o, objective, c, low_bits))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(None, Incumbent::merge)
        .expect("at least one subset is scanned");

    let value = evaluate(g, &best.witness, objective)?;
    Ok(OptResult { witness: best.witness, value, explored: 1u64 << k, optimal: true, objective })
}

fn scan_chunk(o: &Oriented, objective: Objective, chunk: u64, low_bits: usize) -> Option<Incumbent> {
    let g = &o.work;
    let node = objective.node_bonus();
    let base = chunk << low_bits;
    let mut contrib = vec![node; g.n2()];
    let mut rows_in = 0usize;
    for u in 0..g.n1() {
        if base >> u & 1 == 1 {
            rows_in += 1;
            for (c, w) in contrib.iter_mut().zip(g.row(u)) {
                *c += w;
            }
        }
    }

    let mut best: Option<Incumbent> = None;
    let mut gray = 0u64;
    for i in 0..(1u64 << low_bits) {
        if i > 0 {
            let bit = i.trailing_zeros() as usize;
            gray ^= 1 << bit;
            let sign = if gray >> bit & 1 == 1 { 1.0 } else { -1.0 };
            if sign > 0.0 {
                rows_in += 1;
            } else {
                rows_in -= 1;
            }
            for (c, w) in contrib.iter_mut().zip(g.row(bit)) {
                *c += sign * w;
            }
        }
        let value = node * rows_in as f64 + contrib.iter().filter(|&&c| c > 0.0).sum::<f64>();
        if Incumbent::contends(&best, value) {
            let mask = base | gray;
            Incumbent::offer(&mut best, value, || {
                let rows = (0..g.n1()).filter(|&u| mask >> u & 1 == 1).collect();
                closure_witness(o, rows, &contrib)
            });
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(rows: &[&[f64]]) -> WeightedBipartiteGraph {
        WeightedBipartiteGraph::from_rows(rows).unwrap()
    }

    #[test]
    fn diagonal_tie_returns_smallest_witness() {
        let r = solve_exact(&g(&[&[1.0, -1.0], &[-1.0, 1.0]]), Objective::EdgeWeight).unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(r.witness, Biclique::new(vec![0], vec![0]));
        assert!(r.optimal);
    }

    #[test]
    fn all_positive_takes_everything() {
        let h = g(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let r = solve_exact(&h, Objective::EdgeWeight).unwrap();
        assert_eq!(r.value, 10.0);
        assert_eq!(r.witness, Biclique::full(&h));
    }

    #[test]
    fn single_cell_node_plus_edge() {
        let r = solve_exact(&g(&[&[1.0]]), Objective::NodePlusEdge).unwrap();
        assert_eq!(r.value, 3.0);
    }

    #[test]
    fn all_negative_gives_empty() {
        let h = g(&[&[-1.0, -2.0, -3.0], &[-1.0, -1.0, -1.0], &[-5.0, -1.0, -2.0]]);
        let r = solve_exact(&h, Objective::EdgeWeight).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.witness, Biclique::empty());
    }

    #[test]
    fn tall_graph_is_transposed_back() {
        // 3x1: the witness must still be expressed as (rows, column).
        let h = g(&[&[2.0], &[-1.0], &[3.0]]);
        let r = solve_exact(&h, Objective::EdgeWeight).unwrap();
        assert_eq!(r.value, 5.0);
        assert_eq!(r.witness, Biclique::new(vec![0, 2], vec![0]));
    }

    #[test]
    fn cap_is_enforced() {
        let h = WeightedBipartiteGraph::new(3, 3, vec![1.0; 9]).unwrap();
        let err = solve_exact_with_cap(&h, Objective::EdgeWeight, 2).unwrap_err();
        assert!(matches!(err, Error::Capacity(_)));
        assert!(err.to_string().contains("branch-and-bound"));
    }

    #[test]
    fn multi_chunk_matches_closure_scan() {
        // 14 rows forces several chunks.
        let n1 = 14;
        let n2 = 5;
        let weights: Vec<f64> = (0..n1 * n2).map(|i| ((i * 7 + 3) % 5) as f64 - 2.0).collect();
        let h = WeightedBipartiteGraph::new(n1, n2, weights).unwrap();
        let r = solve_exact(&h.transpose(), Objective::EdgeWeight).unwrap();
        let mut best = f64::NEG_INFINITY;
        for mask in 0u32..(1 << n1) {
            let u1: Vec<usize> = (0..n1).filter(|&u| mask >> u & 1 == 1).collect();
            let b = closure_for_rows(&h, &u1, Objective::EdgeWeight).unwrap();
            best = best.max(evaluate(&h, &b, Objective::EdgeWeight).unwrap());
        }
        assert_eq!(r.value, best);
    }

    #[test]
    fn closure_excludes_zero_columns() {
        let h = g(&[&[1.0, 0.0, -1.0]]);
        let b = closure_for_rows(&h, &[0], Objective::EdgeWeight).unwrap();
        assert_eq!(b.u2, vec![0]);
        let b = closure_for_rows(&h, &[0], Objective::NodePlusEdge).unwrap();
        assert_eq!(b.u2, vec![0, 1]);
    }
}
