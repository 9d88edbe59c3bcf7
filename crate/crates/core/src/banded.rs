//! One banded, thresholded pass of the Fréchet dynamic program.
//!
//! Only cells with `|i - j| < w` are evaluated. A cell whose cost fails the
//! threshold test is treated as `+inf`, and cells outside the band act as
//! `+inf` predecessors. The pass reports the band-restricted value at
//! `(n-1, m-1)` together with a *breach* flag: whether some cell with a
//! finite value could step forward out of the band. When the pass is not
//! breached and the threshold is realizable, the optimal traversal stays in
//! the band and `min(value, threshold)` is the exact distance.
//!
//! Cells are visited in an L-shaped order over the grid oriented so that
//! rows ≥ columns. Step `s < m` computes the in-band cells of column `s`
//! above the diagonal, then those of row `s` left of the diagonal, then
//! `(s, s)`. Steps `s ≥ m` compute the in-band tail of row `s`. Four buffers
//! of length `m` hold the previous and current column and row.

use crate::cost::{CostSource, Transposed};
use crate::error::{Error, Result};

/// How a cost is compared with the threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Cutoff {
    /// A cost passes when `cost < t`.
    #[default]
    Strict,
    /// A cost passes when `cost <= t`.
    Inclusive,
}

impl Cutoff {
    #[inline]
    fn passes(self, cost: f64, threshold: f64) -> bool {
        match self {
            Cutoff::Strict => cost < threshold,
            Cutoff::Inclusive => cost <= threshold,
        }
    }
}

/// Width, threshold and cutoff rule of a banded pass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandParams {
    width: usize,
    threshold: f64,
    cutoff: Cutoff,
}

impl BandParams {
    /// `width ≥ 1`; `threshold ≥ 0` and not NaN (`+inf` disables thresholding).
    pub fn new(width: usize, threshold: f64) -> Result<Self> {
        if width == 0 {
            return Err(Error::InvalidBand("width must be at least 1".into()));
        }
        if threshold.is_nan() || threshold < 0.0 {
            return Err(Error::InvalidBand(format!(
                "threshold must be non-negative, got {threshold}"
            )));
        }
        Ok(BandParams {
            width,
            threshold,
            cutoff: Cutoff::Strict,
        })
    }

    pub fn with_cutoff(mut self, cutoff: Cutoff) -> Self {
        self.cutoff = cutoff;
        self
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn cutoff(&self) -> Cutoff {
        self.cutoff
    }

    #[inline]
    pub fn in_band(&self, i: usize, j: usize) -> bool {
        i.abs_diff(j) < self.width
    }
}

/// Result of a single banded pass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandedOutcome {
    /// Band-restricted DP value at `(n-1, m-1)`; `+inf` when every in-band
    /// path is cut or the corner lies outside the band.
    pub value: f64,
    pub breached: bool,
    /// Band cells whose DP value was written.
    pub cells_computed: u64,
    /// Cost queries issued. Cells whose predecessors are all `+inf` are
    /// settled without querying their cost.
    pub distance_evals: u64,
}

/// Runs one pass over `c` with the given band parameters.
pub fn banded_pass<C: CostSource + ?Sized>(c: &C, params: &BandParams) -> Result<BandedOutcome> {
    sweep(c, params, |_, _, _| {})
}

/// Runs the pass and reports every written cell, in original coordinates, to
/// `visit(i, j, value)`.
pub(crate) fn sweep<C, F>(c: &C, params: &BandParams, mut visit: F) -> Result<BandedOutcome>
where
    C: CostSource + ?Sized,
    F: FnMut(usize, usize, f64),
{
    if c.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if c.rows() >= c.cols() {
        Sweep::new(&c, params).run(&mut visit)
    } else {
        Sweep::new(&Transposed(c), params).run(&mut |i, j, v| visit(j, i, v))
    }
}

struct Sweep<'a, C> {
    c: &'a C,
    p: &'a BandParams,
    n: usize,
    m: usize,
    // column s above the diagonal and row s left of it, current and previous;
    // the diagonal cell (s, s) is stored in both
    col_prev: Vec<f64>,
    col_cur: Vec<f64>,
    row_prev: Vec<f64>,
    row_cur: Vec<f64>,
    out: BandedOutcome,
}

impl<'a, C: CostSource> Sweep<'a, C> {
    fn new(c: &'a C, p: &'a BandParams) -> Self {
        let (n, m) = (c.rows(), c.cols());
        debug_assert!(n >= m && m >= 1);
        let buf = || vec![f64::INFINITY; m];
        Sweep {
            c,
            p,
            n,
            m,
            col_prev: buf(),
            col_cur: buf(),
            row_prev: buf(),
            row_cur: buf(),
            out: BandedOutcome {
                value: f64::INFINITY,
                breached: false,
                cells_computed: 0,
                distance_evals: 0,
            },
        }
    }

    /// Value of an already settled cell while working on step `s`.
    #[inline]
    fn read(&self, s: usize, i: usize, j: usize) -> f64 {
        if !self.p.in_band(i, j) {
            return f64::INFINITY;
        }
        if j == s && i <= s {
            self.col_cur[i]
        } else if i == s && j <= s {
            self.row_cur[j]
        } else if j + 1 == s && i < s {
            self.col_prev[i]
        } else {
            debug_assert!(i + 1 == s && j < s);
            self.row_prev[j]
        }
    }

    /// Settles cell `(i, j)` given the minimum of its predecessors.
    #[inline]
    fn settle(&mut self, i: usize, j: usize, best_pred: f64) -> f64 {
        self.out.cells_computed += 1;
        if best_pred == f64::INFINITY {
            return f64::INFINITY;
        }
        self.out.distance_evals += 1;
        let cost = self.c.cost(i, j);
        if !self.p.cutoff.passes(cost, self.p.threshold) {
            return f64::INFINITY;
        }
        let value = cost.max(best_pred);
        if value < f64::INFINITY {
            self.check_breach(i, j);
        }
        value
    }

    // (i+1, j+1) keeps |i - j|, so only the axis steps can leave the band
    #[inline]
    fn check_breach(&mut self, i: usize, j: usize) {
        let w = self.p.width;
        let down = i + 1 < self.n && (i + 1).abs_diff(j) >= w;
        let right = j + 1 < self.m && i.abs_diff(j + 1) >= w;
        if down || right {
            self.out.breached = true;
        }
    }

    #[inline]
    fn min3(&self, s: usize, i: usize, j: usize) -> f64 {
        let up = if i > 0 {
            self.read(s, i - 1, j)
        } else {
            f64::INFINITY
        };
        let left = if j > 0 {
            self.read(s, i, j - 1)
        } else {
            f64::INFINITY
        };
        let diag = if i > 0 && j > 0 {
            self.read(s, i - 1, j - 1)
        } else {
            f64::INFINITY
        };
        up.min(left).min(diag)
    }

    /// Predecessor minimum for `(s, j)` once `s ≥ m`: everything needed
    /// lives in the row buffers.
    #[inline]
    fn min3_tail(&self, s: usize, j: usize) -> f64 {
        let band = |i: usize, j: usize, v: f64| {
            if self.p.in_band(i, j) {
                v
            } else {
                f64::INFINITY
            }
        };
        let up = band(s - 1, j, self.row_prev[j]);
        if j == 0 {
            return up;
        }
        let diag = band(s - 1, j - 1, self.row_prev[j - 1]);
        let left = band(s, j - 1, self.row_cur[j - 1]);
        up.min(diag).min(left)
    }

    fn run<F: FnMut(usize, usize, f64)>(mut self, visit: &mut F) -> Result<BandedOutcome> {
        let w = self.p.width;
        let (n, m) = (self.n, self.m);

        // origin: no predecessor, its cost is the starting width
        let origin = self.settle(0, 0, 0.0);
        self.col_cur[0] = origin;
        self.row_cur[0] = origin;
        visit(0, 0, origin);

        for s in 1..m {
            std::mem::swap(&mut self.col_prev, &mut self.col_cur);
            std::mem::swap(&mut self.row_prev, &mut self.row_cur);
            let lo = (s + 1).saturating_sub(w);
            for i in lo..s {
                let v = self.settle(i, s, self.min3(s, i, s));
                self.col_cur[i] = v;
                visit(i, s, v);
            }
            for j in lo..s {
                let v = self.settle(s, j, self.min3(s, s, j));
                self.row_cur[j] = v;
                visit(s, j, v);
            }
            let v = self.settle(s, s, self.min3(s, s, s));
            self.col_cur[s] = v;
            self.row_cur[s] = v;
            visit(s, s, v);
        }

        for s in m..n {
            std::mem::swap(&mut self.row_prev, &mut self.row_cur);
            let lo = (s + 1).saturating_sub(w);
            for j in lo..m {
                let v = self.settle(s, j, self.min3_tail(s, j));
                self.row_cur[j] = v;
                visit(s, j, v);
            }
        }

        // the last written row holds (n-1, m-1) whenever it is in band
        if self.p.in_band(n - 1, m - 1) {
            self.out.value = self.row_cur[m - 1];
        }
        Ok(self.out)
    }
}
