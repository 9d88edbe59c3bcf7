//! Adaptive computation of the discrete Fréchet distance.
//!
//! The discrete Fréchet distance between point sequences `P[0..n]` and
//! `Q[0..m]` is the smallest, over all monotone traversals of the `n × m`
//! cost grid, of the largest cost met along the way. The classical dynamic
//! program fills all `n·m` cells. This crate also provides an adaptive
//! engine that evaluates a band `|i - j| < w` around the diagonal, prunes
//! cells whose cost is not below the best distance found so far, and doubles
//! `w` until no finite path can escape the band. On instances whose optimal
//! traversal hugs the diagonal (long-edged curves, near-copies) the work is
//! proportional to `(n + m)·w` instead of `n·m`.
//!
//! ```
//! use frechet_core::{adaptive_compute, classical_rolling, parse_curve, CurvePair};
//!
//! let p = parse_curve("0,0\n1,0\n2,0\n").unwrap();
//! let q = parse_curve("0,1\n1,1\n2,1\n").unwrap();
//! let pair = CurvePair::new(&p, &q).unwrap();
//! let out = adaptive_compute(&pair);
//! assert_eq!(out.value, 1.0);
//! assert_eq!(out.value, classical_rolling(&pair).unwrap());
//! ```

pub mod adaptive;
pub mod banded;
pub mod bench;
pub mod cost;
pub mod dp;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod matrices;

pub use adaptive::{adaptive_compute, probe_min_unbreached_width, AdaptiveOutcome, Iteration};
pub use banded::{banded_pass, BandParams, BandedOutcome, Cutoff};
pub use cost::{
    parse_matrix, write_matrix, CostMatrix, CostSource, CurvePair, MatrixParseOptions, Transposed,
};
pub use dp::{brute_force, classical_full, classical_rolling, DpMatrix, BRUTE_FORCE_LIMIT};
pub use error::{Error, Result};
pub use geometry::{euclidean_distance, parse_curve, write_curve, Curve, Point};
pub use matrices::{
    banded_matrix_dump, euclidean_matrix, frechet_matrix, render_annotated, render_cost_matrix,
    render_dp_matrix, AnnotatedMatrix, CellState,
};
