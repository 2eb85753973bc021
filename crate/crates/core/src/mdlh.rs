//! Two-dimensional, two-level summarization with holes.
//!
//! Each dimension's hierarchy is a root over leaves, so a region is one row,
//! one column, one cell, or the whole matrix. A summary covers every 1-entry
//! with regions; the 0-entries it covers are listed as holes, and its length
//! is `|regions| + |holes|`.
//!
//! Writing `R` and `C` for the rows and columns *not* used as regions, the
//! length of a row/column/cell summary is
//! `(n1 + n2 + |Z|) - (|R| + |C| + z - w)`, where `z` and `w` count the zeros
//! and ones in `R x C`. Minimizing length is therefore the node-plus-edge
//! biclique problem on the `+1 (zero) / -1 (one)` graph, which is how
//! [`solve_mdlh`] works. [`brute_force_mdlh`] checks it by enumeration.

use serde::{Deserialize, Serialize};

pub use crate::binary::BinaryMatrix;
use crate::error::{Error, Result};
use crate::graph::{Objective, WeightedBipartiteGraph};
use crate::solve::solve_optimal;

/// Largest `n1 + n2` accepted by [`brute_force_mdlh`].
pub const MAX_ORACLE_DIMENSION_SUM: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Region {
    Row { i: usize },
    Col { j: usize },
    Cell { i: usize, j: usize },
    All,
}

impl Region {
    pub fn covers(&self, i: usize, j: usize) -> bool {
        match *self {
            Region::Row { i: r } => r == i,
            Region::Col { j: c } => c == j,
            Region::Cell { i: r, j: c } => r == i && c == j,
            Region::All => true,
        }
    }

    fn in_range(&self, m: &BinaryMatrix) -> bool {
        match *self {
            Region::Row { i } => i < m.n1(),
            Region::Col { j } => j < m.n2(),
            Region::Cell { i, j } => i < m.n1() && j < m.n2(),
            Region::All => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub regions: Vec<Region>,
    pub holes: Vec<(usize, usize)>,
    pub length: usize,
}

impl Summary {
    /// Sorts and dedups the regions, derives the holes and the length.
    pub fn from_regions(m: &BinaryMatrix, mut regions: Vec<Region>) -> Self {
        regions.sort_unstable();
        regions.dedup();
        let holes: Vec<_> = m.positions(false).filter(|&(i, j)| regions.iter().any(|r| r.covers(i, j))).collect();
        let length = regions.len() + holes.len();
        Self { regions, holes, length }
    }

    /// Shorter first, then fewer regions, then lexicographic region order.
    fn preferred_over(&self, other: &Summary) -> bool {
        (self.length, self.regions.len(), &self.regions) < (other.length, other.regions.len(), &other.regions)
    }
}

/// Outcome of [`check_summary`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SummaryCheck {
    pub out_of_range: Vec<Region>,
    pub uncovered_ones: Vec<(usize, usize)>,
    pub missing_holes: Vec<(usize, usize)>,
    pub spurious_holes: Vec<(usize, usize)>,
    pub length_matches: bool,
}

impl SummaryCheck {
    pub fn is_valid(&self) -> bool {
        self.out_of_range.is_empty()
            && self.uncovered_ones.is_empty()
            && self.missing_holes.is_empty()
            && self.spurious_holes.is_empty()
            && self.length_matches
    }
}

pub fn check_summary(m: &BinaryMatrix, s: &Summary) -> SummaryCheck {
    let out_of_range: Vec<Region> = s.regions.iter().filter(|r| !r.in_range(m)).copied().collect();
    if !out_of_range.is_empty() {
        return SummaryCheck { out_of_range, ..Default::default() };
    }
    let covered = |i, j| s.regions.iter().any(|r| r.covers(i, j));
    let uncovered_ones = m.positions(true).filter(|&(i, j)| !covered(i, j)).collect();
    let expected: Vec<_> = m.positions(false).filter(|&(i, j)| covered(i, j)).collect();
    let mut given = s.holes.clone();
    given.sort_unstable();
    given.dedup();
    let missing_holes = expected.iter().filter(|h| given.binary_search(h).is_err()).copied().collect();
    let spurious_holes = given.iter().filter(|h| expected.binary_search(h).is_err()).copied().collect();
    SummaryCheck {
        out_of_range,
        uncovered_ones,
        missing_holes,
        spurious_holes,
        length_matches: s.length == s.regions.len() + s.holes.len() && given.len() == s.holes.len(),
    }
}

/// True iff the regions cover every 1-entry, the holes are exactly the
/// covered 0-entries and the length is `|regions| + |holes|`.
pub fn validate_summary(m: &BinaryMatrix, s: &Summary) -> bool {
    let check = check_summary(m, s);
    if !check.is_valid() {
        log::debug!("invalid summary: {check:?}");
    }
    check.is_valid()
}

/// The quantities in the length identity for one choice of uncovered rows
/// `R` and uncovered columns `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdlhDecomposition {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    /// `|Z|`, zero entries in the whole matrix.
    pub total_zeros: usize,
    /// zeros inside `R x C`
    pub leftover_zeros: usize,
    /// ones inside `R x C`
    pub leftover_ones: usize,
    pub n1: usize,
    pub n2: usize,
}

impl MdlhDecomposition {
    pub fn new(m: &BinaryMatrix, rows: &[usize], cols: &[usize]) -> Self {
        let (mut z, mut w) = (0, 0);
        for &i in rows {
            for &j in cols {
                if m.get(i, j) {
                    w += 1;
                } else {
                    z += 1;
                }
            }
        }
        Self {
            rows: rows.to_vec(),
            cols: cols.to_vec(),
            total_zeros: m.zeros(),
            leftover_zeros: z,
            leftover_ones: w,
            n1: m.n1(),
            n2: m.n2(),
        }
    }

    /// `|R| + |C| + z - w`.
    pub fn gain(&self) -> i64 {
        (self.rows.len() + self.cols.len() + self.leftover_zeros) as i64 - self.leftover_ones as i64
    }

    /// `(n1 + n2 + |Z|) - (|R| + |C| + z - w)`.
    pub fn length(&self) -> usize {
        ((self.n1 + self.n2 + self.total_zeros) as i64 - self.gain()) as usize
    }

    /// Row regions outside `R`, column regions outside `C`, cell regions for
    /// the ones left in `R x C`.
    pub fn summary(&self, m: &BinaryMatrix) -> Summary {
        let in_r = mask(&self.rows, m.n1());
        let in_c = mask(&self.cols, m.n2());
        let mut regions: Vec<Region> = (0..m.n1()).filter(|&i| !in_r[i]).map(|i| Region::Row { i }).collect();
        regions.extend((0..m.n2()).filter(|&j| !in_c[j]).map(|j| Region::Col { j }));
        regions.extend(m.positions(true).filter(|&(i, j)| in_r[i] && in_c[j]).map(|(i, j)| Region::Cell { i, j }));
        Summary::from_regions(m, regions)
    }
}

fn mask(idx: &[usize], n: usize) -> Vec<bool> {
    let mut out = vec![false; n];
    for &i in idx {
        out[i] = true;
    }
    out
}

/// `+1` where `m` is 0, `-1` where `m` is 1.
pub fn mdlh_to_problem_p(m: &BinaryMatrix) -> WeightedBipartiteGraph {
    let weights = m.cells().iter().map(|&c| if c { -1.0 } else { 1.0 }).collect();
    WeightedBipartiteGraph::new(m.n1(), m.n2(), weights).expect("matrix dimensions are positive")
}

/// The single whole-matrix region with every zero as a hole.
pub fn whole_matrix_summary(m: &BinaryMatrix) -> Summary {
    Summary::from_regions(m, vec![Region::All])
}

/// Minimum-length summary via the node-plus-edge optimum on
/// [`mdlh_to_problem_p`], compared against the whole-matrix candidate.
pub fn solve_mdlh(m: &BinaryMatrix) -> Result<Summary> {
    let g = mdlh_to_problem_p(m);
    let opt = solve_optimal(&g, Objective::NodePlusEdge)?;
    let decomposition = MdlhDecomposition::new(m, &opt.witness.u1, &opt.witness.u2);
    debug_assert_eq!(decomposition.gain() as f64, opt.value);
    let routed = decomposition.summary(m);
    let whole = whole_matrix_summary(m);
    Ok(if whole.preferred_over(&routed) { whole } else { routed })
}

/// Exhaustive oracle: every choice of uncovered rows and columns plus the
/// whole-matrix region, each scored by direct coverage counting.
pub fn brute_force_mdlh(m: &BinaryMatrix) -> Result<Summary> {
    let (n1, n2) = (m.n1(), m.n2());
    if n1 + n2 > MAX_ORACLE_DIMENSION_SUM {
        return Err(Error::Capacity(format!(
            "brute force handles n1 + n2 <= {MAX_ORACLE_DIMENSION_SUM}, got {}",
            n1 + n2
        )));
    }
    let mut best = whole_matrix_summary(m);
    for rmask in 0u32..(1 << n1) {
        for cmask in 0u32..(1 << n2) {
            let row_region = |i: usize| rmask >> i & 1 == 0;
            let col_region = |j: usize| cmask >> j & 1 == 0;
            let mut regions = (0..n1).filter(|&i| row_region(i)).count() + (0..n2).filter(|&j| col_region(j)).count();
            let mut holes = 0;
            for i in 0..n1 {
                for j in 0..n2 {
                    let by_line = row_region(i) || col_region(j);
                    match (m.get(i, j), by_line) {
                        (false, true) => holes += 1,
                        (true, false) => regions += 1,
                        _ => {}
                    }
                }
            }
            let length = regions + holes;
            if (length, regions) > (best.length, best.regions.len()) {
                continue;
            }
            let rows: Vec<usize> = (0..n1).filter(|&i| !row_region(i)).collect();
            let cols: Vec<usize> = (0..n2).filter(|&j| !col_region(j)).collect();
            let cand = MdlhDecomposition::new(m, &rows, &cols).summary(m);
            if cand.preferred_over(&best) {
                best = cand;
            }
        }
    }
    Ok(best)
}
