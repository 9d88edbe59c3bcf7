//! Cost grids: the `n × m` matrix of pairwise costs that every DP engine reads.
//!
//! Two backings exist. [`CurvePair`] evaluates Euclidean distances lazily so
//! that no `n × m` buffer is ever allocated; [`CostMatrix`] holds explicit
//! values, which is how hand-made or published matrices are fed in.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{is_skippable, l2, split_fields, Curve};

/// A deterministic, non-negative `rows × cols` cost grid.
pub trait CostSource {
    fn rows(&self) -> usize;
    fn cols(&self) -> usize;
    /// Cost of cell `(i, j)`. Callers keep `i < rows()` and `j < cols()`.
    fn cost(&self, i: usize, j: usize) -> f64;

    fn is_empty(&self) -> bool {
        self.rows() == 0 || self.cols() == 0
    }
}

impl<T: CostSource + ?Sized> CostSource for &T {
    fn rows(&self) -> usize {
        (**self).rows()
    }
    fn cols(&self) -> usize {
        (**self).cols()
    }
    #[inline]
    fn cost(&self, i: usize, j: usize) -> f64 {
        (**self).cost(i, j)
    }
}

/// Euclidean distances between the points of two curves, computed on demand.
#[derive(Debug, Clone, Copy)]
pub struct CurvePair<'a> {
    p: &'a Curve,
    q: &'a Curve,
}

impl<'a> CurvePair<'a> {
    /// Fails when both curves are non-empty and their dimensions differ.
    pub fn new(p: &'a Curve, q: &'a Curve) -> Result<Self> {
        if !p.is_empty() && !q.is_empty() && p.dim() != q.dim() {
            return Err(Error::DimensionMismatch {
                expected: p.dim(),
                found: q.dim(),
            });
        }
        Ok(CurvePair { p, q })
    }

    pub fn p(&self) -> &'a Curve {
        self.p
    }

    pub fn q(&self) -> &'a Curve {
        self.q
    }
}

impl CostSource for CurvePair<'_> {
    fn rows(&self) -> usize {
        self.p.len()
    }
    fn cols(&self) -> usize {
        self.q.len()
    }
    #[inline]
    fn cost(&self, i: usize, j: usize) -> f64 {
        l2(self.p.point(i), self.q.point(j))
    }
}

/// An explicit row-major cost matrix.
///
/// Entries are non-negative; `+inf` is allowed so that threshold-cut dumps
/// can be read back in.
#[derive(Debug, Clone, PartialEq)]
pub struct CostMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl CostMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|v| v.is_nan() || **v < 0.0) {
            return Err(Error::InvalidMatrix(format!(
                "entry {bad} is not a non-negative cost"
            )));
        }
        if rows == 0 || cols == 0 {
            return Ok(CostMatrix {
                rows: 0,
                cols: 0,
                data: Vec::new(),
            });
        }
        Ok(CostMatrix { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.as_ref().len() != cols {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.as_ref().len()
                )));
            }
            data.extend_from_slice(r.as_ref());
        }
        CostMatrix::new(rows.len(), cols, data)
    }

    /// Materializes any cost source.
    pub fn from_source<C: CostSource + ?Sized>(c: &C) -> Self {
        let (rows, cols) = (c.rows(), c.cols());
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(c.cost(i, j));
            }
        }
        CostMatrix { rows, cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.cols + j] = value;
    }
}

impl CostSource for CostMatrix {
    fn rows(&self) -> usize {
        self.rows
    }
    fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    fn cost(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }
}

/// Options for [`parse_matrix`].
#[derive(Debug, Clone, Copy, Default)]
pub struct MatrixParseOptions {
    /// Read the out-of-band marker `-` of banded dumps as `+inf`.
    pub dash_as_inf: bool,
}

/// Parses the explicit-matrix format: one row per line, entries separated by
/// commas and/or blanks, non-negative decimals or the token `inf`.
pub fn parse_matrix(text: &str, opts: MatrixParseOptions) -> Result<CostMatrix> {
    let mut cols = None;
    let mut data = Vec::new();
    let mut rows = 0;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if is_skippable(line) {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let fields = split_fields(line).map_err(parse_err)?;
        match cols {
            None => cols = Some(fields.len()),
            Some(c) if c != fields.len() => {
                return Err(parse_err(format!(
                    "row length mismatch: expected {c} entries, found {}",
                    fields.len()
                )))
            }
            _ => {}
        }
        for f in fields {
            let v = match f {
                "inf" => f64::INFINITY,
                "-" if opts.dash_as_inf => f64::INFINITY,
                _ => {
                    let v: f64 = f
                        .parse()
                        .map_err(|_| parse_err(format!("not a number: {f:?}")))?;
                    if !v.is_finite() || v < 0.0 {
                        return Err(parse_err(format!("not a non-negative finite cost: {f:?}")));
                    }
                    v
                }
            };
            data.push(v);
        }
        rows += 1;
    }
    CostMatrix::new(rows, cols.unwrap_or(0), data)
}

/// Writes a matrix in the explicit-matrix format, tab separated, with
/// shortest round-trip decimals.
pub fn write_matrix(m: &CostMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows {
        for (j, v) in m.row(i).iter().enumerate() {
            if j > 0 {
                out.push('\t');
            }
            write!(out, "{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// View of a cost source with rows and columns swapped.
#[derive(Debug, Clone, Copy)]
pub struct Transposed<C>(pub C);

impl<C: CostSource> CostSource for Transposed<C> {
    fn rows(&self) -> usize {
        self.0.cols()
    }
    fn cols(&self) -> usize {
        self.0.rows()
    }
    #[inline]
    fn cost(&self, i: usize, j: usize) -> f64 {
        self.0.cost(j, i)
    }
}
