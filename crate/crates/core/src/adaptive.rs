//! Width-doubling driver that computes the exact distance from banded passes.
//!
//! The first pass runs at width 1 with no threshold. While a pass reports a
//! breach the width doubles (capped at `max(n, m)`, where the band covers
//! the whole grid) and the next pass is thresholded by the best value found
//! so far. Every finite pass value is the width of an actual traversal, so
//! thresholds never drop below the true distance and the running minimum of
//! the pass values is exact once a pass completes without a breach.

use crate::banded::{banded_pass, BandParams, BandedOutcome, Cutoff};
use crate::cost::CostSource;
use crate::dp::classical_rolling;
use crate::error::{Error, Result};

/// One banded pass of the driver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Iteration {
    pub width: usize,
    /// Threshold the pass ran with.
    pub threshold: f64,
    /// Value the pass returned.
    pub value: f64,
    pub breached: bool,
    pub cells_computed: u64,
    pub distance_evals: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdaptiveOutcome {
    /// The discrete Fréchet distance; `+inf` when either side is empty.
    pub value: f64,
    /// Width of the last pass, or 0 when no pass ran.
    pub final_width: usize,
    pub iterations: Vec<Iteration>,
    pub total_cells: u64,
    pub total_distance_evals: u64,
}

/// Computes the discrete Fréchet distance by width doubling.
pub fn adaptive_compute<C: CostSource + ?Sized>(c: &C) -> AdaptiveOutcome {
    let mut outcome = AdaptiveOutcome {
        value: f64::INFINITY,
        final_width: 0,
        iterations: Vec::new(),
        total_cells: 0,
        total_distance_evals: 0,
    };
    if c.is_empty() {
        return outcome;
    }
    let cap = c.rows().max(c.cols());
    let mut width = 1;
    loop {
        let threshold = outcome.value;
        let pass = run_pass(c, width, threshold);
        outcome.value = outcome.value.min(pass.value);
        outcome.final_width = width;
        outcome.total_cells += pass.cells_computed;
        outcome.total_distance_evals += pass.distance_evals;
        outcome.iterations.push(Iteration {
            width,
            threshold,
            value: pass.value,
            breached: pass.breached,
            cells_computed: pass.cells_computed,
            distance_evals: pass.distance_evals,
        });
        if !pass.breached || width >= cap {
            return outcome;
        }
        width = (2 * width).min(cap);
    }
}

fn run_pass<C: CostSource + ?Sized>(c: &C, width: usize, threshold: f64) -> BandedOutcome {
    // width ≥ 1, the threshold is +inf or a finite pass value, and the grid is non-empty
    let params = BandParams::new(width, threshold).expect("driver parameters are valid");
    banded_pass(c, &params).expect("non-empty grid")
}

/// Smallest width whose inclusive pass at `t = f` is not breached.
///
/// Computes `f` with the rolling classical DP, then doubles the width until
/// an unbreached pass is found and binary-searches the last doubling
/// interval. Breaching is monotone in the width: a finite path that leaves a
/// band of width `w2` must first leave every narrower band, so the search is
/// exact. The result lies in `[1, max(n, m)]` and upper-bounds the smallest
/// band containing an optimal traversal.
pub fn probe_min_unbreached_width<C: CostSource + ?Sized>(c: &C) -> Result<usize> {
    if c.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let f = classical_rolling(c)?;
    let cap = c.rows().max(c.cols());
    let breached = |w: usize| -> Result<bool> {
        let p = BandParams::new(w, f)?.with_cutoff(Cutoff::Inclusive);
        Ok(banded_pass(c, &p)?.breached)
    };

    // invariant: `lo` breaches (or is 0), `hi` does not
    let mut lo = 0;
    let mut hi = 1;
    while hi < cap && breached(hi)? {
        lo = hi;
        hi = (2 * hi).min(cap);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if breached(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(hi)
}
