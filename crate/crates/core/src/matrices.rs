//! Whole-grid dumps: the Euclidean matrix, the Fréchet matrix, and the
//! annotated banded/thresholded matrix, with a text renderer.
//!
//! Rendered values use two decimals (ties to even), threshold-cut cells print
//! as `inf` and cells outside the band as `-`. Rows are tab separated.

use std::fmt::Write as _;

use crate::banded::{sweep, BandParams, BandedOutcome};
use crate::cost::{CostMatrix, CostSource, CurvePair};
use crate::dp::{classical_full, DpMatrix};
use crate::error::{Error, Result};
use crate::geometry::Curve;

/// Default limit on the number of cells a dump may materialize.
pub const DEFAULT_DUMP_CAP: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CellState {
    Value(f64),
    /// Computed in band, but every path reaching it was cut.
    Cut,
    /// Outside the band, never computed.
    OutOfBand,
}

impl CellState {
    /// `+inf` for both sentinels.
    pub fn as_cost(self) -> f64 {
        match self {
            CellState::Value(v) => v,
            CellState::Cut | CellState::OutOfBand => f64::INFINITY,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnnotatedMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<CellState>,
    params: BandParams,
    outcome: BandedOutcome,
}

impl AnnotatedMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> CellState {
        self.cells[i * self.cols + j]
    }

    pub fn params(&self) -> &BandParams {
        &self.params
    }

    /// Outcome of the pass that produced this dump.
    pub fn outcome(&self) -> &BandedOutcome {
        &self.outcome
    }

    pub fn cells(&self) -> &[CellState] {
        &self.cells
    }
}

fn check_cap(rows: usize, cols: usize, cap: usize) -> Result<()> {
    let cells = rows.saturating_mul(cols);
    if cells > cap {
        return Err(Error::DumpTooLarge { cells, cap });
    }
    Ok(())
}

/// Pairwise Euclidean distances between the points of `p` and `q`.
pub fn euclidean_matrix(p: &Curve, q: &Curve) -> Result<CostMatrix> {
    euclidean_matrix_with_cap(p, q, DEFAULT_DUMP_CAP)
}

pub fn euclidean_matrix_with_cap(p: &Curve, q: &Curve, cap: usize) -> Result<CostMatrix> {
    if p.is_empty() || q.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let pair = CurvePair::new(p, q)?;
    check_cap(p.len(), q.len(), cap)?;
    Ok(CostMatrix::from_source(&pair))
}

/// The full Fréchet matrix, identical to the classical table.
pub fn frechet_matrix<C: CostSource + ?Sized>(c: &C) -> Result<DpMatrix> {
    frechet_matrix_with_cap(c, DEFAULT_DUMP_CAP)
}

pub fn frechet_matrix_with_cap<C: CostSource + ?Sized>(c: &C, cap: usize) -> Result<DpMatrix> {
    check_cap(c.rows(), c.cols(), cap)?;
    classical_full(c)
}

/// Runs a banded pass and records the state of every cell of the grid.
pub fn banded_matrix_dump<C: CostSource + ?Sized>(
    c: &C,
    params: &BandParams,
) -> Result<AnnotatedMatrix> {
    banded_matrix_dump_with_cap(c, params, DEFAULT_DUMP_CAP)
}

pub fn banded_matrix_dump_with_cap<C: CostSource + ?Sized>(
    c: &C,
    params: &BandParams,
    cap: usize,
) -> Result<AnnotatedMatrix> {
    if c.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let (rows, cols) = (c.rows(), c.cols());
    check_cap(rows, cols, cap)?;
    let mut cells = vec![CellState::OutOfBand; rows * cols];
    let outcome = sweep(c, params, |i, j, v| {
        cells[i * cols + j] = if v.is_finite() {
            CellState::Value(v)
        } else {
            CellState::Cut
        };
    })?;
    Ok(AnnotatedMatrix {
        rows,
        cols,
        cells,
        params: *params,
        outcome,
    })
}

fn push_value(out: &mut String, v: f64) {
    if v == f64::INFINITY {
        out.push_str("inf");
    } else {
        // std formatting rounds the exact binary value, ties to even
        write!(out, "{v:.2}").unwrap();
    }
}

fn render_rows<I, R>(rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = Option<f64>>,
{
    let mut out = String::new();
    for row in rows {
        for (j, cell) in row.into_iter().enumerate() {
            if j > 0 {
                out.push('\t');
            }
            match cell {
                Some(v) => push_value(&mut out, v),
                None => out.push('-'),
            }
        }
        out.push('\n');
    }
    out
}

/// Renders a plain grid of values (Euclidean matrix or explicit costs).
pub fn render_cost_matrix(m: &CostMatrix) -> String {
    render_rows((0..m.rows()).map(|i| m.row(i).iter().map(|&v| Some(v))))
}

/// Renders a Fréchet matrix.
pub fn render_dp_matrix(m: &DpMatrix) -> String {
    render_rows((0..m.rows()).map(|i| m.row(i).iter().map(|&v| Some(v))))
}

/// Renders an annotated matrix, optionally preceded by a
/// `# n=<n> m=<m> w=<w> t=<t>` comment line.
pub fn render_annotated(a: &AnnotatedMatrix, header: bool) -> String {
    let mut out = String::new();
    if header {
        writeln!(
            out,
            "# n={} m={} w={} t={}",
            a.rows,
            a.cols,
            a.params.width(),
            a.params.threshold()
        )
        .unwrap();
    }
    out.push_str(&render_rows((0..a.rows).map(|i| {
        a.cells[i * a.cols..(i + 1) * a.cols]
            .iter()
            .map(|c| match *c {
                CellState::Value(v) => Some(v),
                CellState::Cut => Some(f64::INFINITY),
                CellState::OutOfBand => None,
            })
    })));
    out
}
