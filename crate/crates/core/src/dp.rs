//! Reference computations of the discrete Fréchet distance.
//!
//! * [`classical_full`] fills the whole `n × m` table with the recurrence
//!   `dp(i,j) = max(cost(i,j), min(dp(i-1,j), dp(i-1,j-1), dp(i,j-1)))`.
//! * [`classical_rolling`] runs the same recurrence keeping one row.
//! * [`brute_force`] enumerates every monotone traversal. It is the oracle the
//!   other engines are checked against and shares no code with them.

use crate::cost::CostSource;
use crate::error::{Error, Result};

/// Largest `n + m` accepted by [`brute_force`].
pub const BRUTE_FORCE_LIMIT: usize = 24;

/// The full DP table: entry `(i, j)` is the discrete Fréchet distance of the
/// prefixes ending at `i` and `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct DpMatrix {
    rows: usize,
    cols: usize,
    values: Vec<f64>,
}

impl DpMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.cols..(i + 1) * self.cols]
    }

    /// Value of the bottom-right cell.
    pub fn distance(&self) -> f64 {
        self.values[self.values.len() - 1]
    }
}

fn check_non_empty<C: CostSource + ?Sized>(c: &C) -> Result<(usize, usize)> {
    if c.is_empty() {
        return Err(Error::EmptyGrid);
    }
    Ok((c.rows(), c.cols()))
}

/// Fills the complete table iteratively, row by row.
pub fn classical_full<C: CostSource + ?Sized>(c: &C) -> Result<DpMatrix> {
    let (n, m) = check_non_empty(c)?;
    let mut values = vec![0.0; n * m];
    for i in 0..n {
        for j in 0..m {
            let cost = c.cost(i, j);
            values[i * m + j] = match (i, j) {
                (0, 0) => cost,
                (0, _) => cost.max(values[j - 1]),
                (_, 0) => cost.max(values[(i - 1) * m]),
                _ => {
                    let up = values[(i - 1) * m + j];
                    let diag = values[(i - 1) * m + j - 1];
                    let left = values[i * m + j - 1];
                    cost.max(up.min(diag).min(left))
                }
            };
        }
    }
    Ok(DpMatrix {
        rows: n,
        cols: m,
        values,
    })
}

/// Same value as [`classical_full`] using `O(min(n, m))` working memory.
pub fn classical_rolling<C: CostSource + ?Sized>(c: &C) -> Result<f64> {
    let (n, m) = check_non_empty(c)?;
    if m > n {
        Ok(rolling(&crate::cost::Transposed(c)))
    } else {
        Ok(rolling(&c))
    }
}

fn rolling<C: CostSource>(c: &C) -> f64 {
    let (n, m) = (c.rows(), c.cols());
    let mut row = vec![0.0; m];
    let mut acc = f64::NEG_INFINITY;
    for (j, slot) in row.iter_mut().enumerate() {
        acc = acc.max(c.cost(0, j));
        *slot = acc;
    }
    for i in 1..n {
        // `diag` holds dp(i-1, j-1) while row[j] still holds dp(i-1, j)
        let mut diag = row[0];
        row[0] = row[0].max(c.cost(i, 0));
        for j in 1..m {
            let up = row[j];
            let best = up.min(diag).min(row[j - 1]);
            diag = up;
            row[j] = c.cost(i, j).max(best);
        }
    }
    row[m - 1]
}

/// Minimum over all monotone lattice paths from `(0,0)` to `(n-1,m-1)` of the
/// largest cost on the path, by exhaustive enumeration.
pub fn brute_force<C: CostSource + ?Sized>(c: &C) -> Result<f64> {
    let (n, m) = check_non_empty(c)?;
    if n + m > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            limit: BRUTE_FORCE_LIMIT,
            got: n + m,
        });
    }
    let mut best = f64::INFINITY;
    walk(c, 0, 0, c.cost(0, 0), &mut best);
    Ok(best)
}

fn walk<C: CostSource + ?Sized>(c: &C, i: usize, j: usize, width: f64, best: &mut f64) {
    let (n, m) = (c.rows(), c.cols());
    if i == n - 1 && j == m - 1 {
        if width < *best {
            *best = width;
        }
        return;
    }
    for (di, dj) in [(1, 0), (0, 1), (1, 1)] {
        let (a, b) = (i + di, j + dj);
        if a < n && b < m {
            walk(c, a, b, width.max(c.cost(a, b)), best);
        }
    }
}
