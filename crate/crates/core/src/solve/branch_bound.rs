use std::time::Instant;

use super::{closure_witness, Incumbent, OptResult, Oriented, SolverConfig};
use crate::error::Result;
use crate::graph::{evaluate, Objective, WeightedBipartiteGraph};

/// Depth-first branch-and-bound over the smaller side.
///
/// Rows are decided in descending order of their absolute weight sum. Each
/// node is scored by closing the columns over the rows included so far, and
/// pruned when the optimistic bound
/// `node * (|I| + undecided) + sum_v max(0, contrib_v + sum_{undecided} max(0, w))`
/// cannot beat the incumbent. When `config.time_limit` runs out the best
/// biclique found so far is returned with `optimal == false`.
pub fn solve_branch_bound(
    g: &WeightedBipartiteGraph,
    objective: Objective,
    config: &SolverConfig,
) -> Result<OptResult> {
    config.validate()?;
    let o = Oriented::new(g);
    let w = &o.work;
    let (k, m) = (w.n1(), w.n2());

    let mut order: Vec<usize> = (0..k).collect();
    let abs_sum: Vec<f64> = (0..k).map(|u| w.row(u).iter().map(|x| x.abs()).sum()).collect();
    order.sort_by(|&a, &b| abs_sum[b].total_cmp(&abs_sum[a]).then(a.cmp(&b)));

    // optimistic[d][v] = sum over rows order[d..] of max(0, w(row, v))
    let mut optimistic = vec![vec![0.0; m]; k + 1];
    for d in (0..k).rev() {
        let row = w.row(order[d]);
        for v in 0..m {
            optimistic[d][v] = optimistic[d + 1][v] + row[v].max(0.0);
        }
    }

    let mut search = Search {
        o: &o,
        order: &order,
        optimistic: &optimistic,
        node: objective.node_bonus(),
        contrib: vec![objective.node_bonus(); m],
        included: Vec::with_capacity(k),
        best: None,
        explored: 0,
        deadline: config.time_limit.map(|t| (Instant::now(), t)),
        timed_out: false,
    };
    search.descend(0);

    let Search { best, explored, timed_out, .. } = search;
    let best = best.expect("root node is always scored");
    let value = evaluate(g, &best.witness, objective)?;
    Ok(OptResult { witness: best.witness, value, explored, optimal: !timed_out, objective })
}

struct Search<'a> {
    o: &'a Oriented,
    order: &'a [usize],
    optimistic: &'a [Vec<f64>],
    node: f64,
    contrib: Vec<f64>,
    included: Vec<usize>,
    best: Option<Incumbent>,
    explored: u64,
    deadline: Option<(Instant, f64)>,
    timed_out: bool,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize) {
        if self.timed_out {
            return;
        }
        self.explored += 1;
        if self.explored.is_multiple_of(1024) {
            if let Some((start, limit)) = self.deadline {
                if start.elapsed().as_secs_f64() > limit {
                    self.timed_out = true;
                    return;
                }
            }
        }

        let value = self.node * self.included.len() as f64
            + self.contrib.iter().filter(|&&c| c > 0.0).sum::<f64>();
        if Incumbent::contends(&self.best, value) {
            let mut rows = self.included.clone();
            rows.sort_unstable();
            let (o, contrib) = (self.o, &self.contrib);
            Incumbent::offer(&mut self.best, value, || closure_witness(o, rows, contrib));
        }

        let k = self.order.len();
        if depth == k {
            return;
        }
        let undecided = (k - depth) as f64;
        let bound = self.node * (self.included.len() as f64 + undecided)
            + self
                .contrib
                .iter()
                .zip(&self.optimistic[depth])
                .map(|(c, p)| (c + p).max(0.0))
                .sum::<f64>();
        if let Some(best) = &self.best {
            if bound <= best.value {
                return;
            }
        }

        let u = self.order[depth];
        let row = self.o.work.row(u);
        for (c, w) in self.contrib.iter_mut().zip(row) {
            *c += w;
        }
        self.included.push(u);
        self.descend(depth + 1);
        self.included.pop();
        for (c, w) in self.contrib.iter_mut().zip(row) {
            *c -= w;
        }
        self.descend(depth + 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Biclique;
    use crate::reduce::{clique_to_mweb, SimpleGraph};
    use crate::solve::{solve_exact, Method};

    fn cfg() -> SolverConfig {
        SolverConfig::new(Objective::EdgeWeight, Method::BranchAndBound)
    }

    #[test]
    fn matches_exact_on_diagonal() {
        let g = WeightedBipartiteGraph::from_rows(&[[1.0, -1.0], [-1.0, 1.0]]).unwrap();
        let r = solve_branch_bound(&g, Objective::EdgeWeight, &cfg()).unwrap();
        assert_eq!(r.value, 1.0);
        assert!(r.optimal);
    }

    #[test]
    fn path_reduction_value_is_clique_number() {
        let p3 = SimpleGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let g = clique_to_mweb(&p3);
        let r = solve_branch_bound(&g, Objective::EdgeWeight, &cfg()).unwrap();
        assert_eq!(r.value, 2.0);
        assert_eq!(r.value, solve_exact(&g, Objective::EdgeWeight).unwrap().value);
    }

    #[test]
    fn all_negative_returns_empty_witness() {
        let g = WeightedBipartiteGraph::new(3, 3, vec![-1.0, -2.0, -1.0, -3.0, -1.0, -1.0, -2.0, -2.0, -5.0])
            .unwrap();
        let r = solve_branch_bound(&g, Objective::EdgeWeight, &cfg()).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.witness, Biclique::empty());
    }

    #[test]
    fn pruning_explores_less_than_full_tree() {
        let n = 16;
        let weights = (0..n * n).map(|i| if (i * 31 + 7) % 3 == 0 { 1.0 } else { -1.0 }).collect();
        let g = WeightedBipartiteGraph::new(n, n, weights).unwrap();
        let r = solve_branch_bound(&g, Objective::EdgeWeight, &cfg()).unwrap();
        assert!(r.explored < (1u64 << (n + 1)) - 1);
        assert_eq!(r.value, solve_exact(&g, Objective::EdgeWeight).unwrap().value);
    }
}
