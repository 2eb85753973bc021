use crate::error::{Error, Result};

/// Dense `n1 x n2` matrix of 0/1 entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    n1: usize,
    n2: usize,
    cells: Vec<bool>,
}

impl BinaryMatrix {
    pub fn new(n1: usize, n2: usize, cells: Vec<bool>) -> Result<Self> {
        if n1 == 0 || n2 == 0 {
            return Err(Error::Validation(format!("matrix dimensions must be positive, got {n1}x{n2}")));
        }
        if cells.len() != n1 * n2 {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {n1}x{n2} matrix, got {}",
                n1 * n2,
                cells.len()
            )));
        }
        Ok(Self { n1, n2, cells })
    }

    /// Rows of `0`/`1` values; anything else is rejected.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n2 = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let mut cells = Vec::with_capacity(rows.len() * n2);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n2 {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {n2}", row.len())));
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => cells.push(false),
                    1 => cells.push(true),
                    _ => return Err(Error::Validation(format!("entry ({i}, {j}) is {x}, expected 0 or 1"))),
                }
            }
        }
        Self::new(rows.len(), n2, cells)
    }

    /// Decodes the low `n1 * n2` bits of `bits`, row-major, bit 0 first.
    pub fn from_bits(n1: usize, n2: usize, bits: u64) -> Result<Self> {
        Self::new(n1, n2, (0..n1 * n2).map(|i| bits >> i & 1 == 1).collect())
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.n2 + j]
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    pub fn ones(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn zeros(&self) -> usize {
        self.cells.len() - self.ones()
    }

    /// Row-major `(i, j)` coordinates of every entry equal to `value`.
    pub fn positions(&self, value: bool) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n2 = self.n2;
        self.cells.iter().enumerate().filter(move |(_, &c)| c == value).map(move |(k, _)| (k / n2, k % n2))
    }
}
