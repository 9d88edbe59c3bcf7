//! Points, curves and the Euclidean metric, plus the plain-text curve format.
//!
//! A curve file holds one point per line. Coordinates are separated by
//! commas and/or runs of blanks, `#` starts a comment line, and blank lines
//! are skipped. Every data line must have the same number of coordinates.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A point in `d`-dimensional Euclidean space with finite coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidPoint(
                "a point needs at least one coordinate".into(),
            ));
        }
        if let Some(bad) = coords.iter().find(|c| !c.is_finite()) {
            return Err(Error::InvalidPoint(format!("non-finite coordinate {bad}")));
        }
        Ok(Point { coords })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn distance(&self, other: &Point) -> Result<f64> {
        euclidean_distance(self, other)
    }
}

/// L2 distance between two points of equal dimension.
pub fn euclidean_distance(a: &Point, b: &Point) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(l2(&a.coords, &b.coords))
}

// Squared differences are sign-agnostic, so l2(a, b) and l2(b, a) agree bit for bit.
#[inline]
pub(crate) fn l2(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y;
            d * d
        })
        .sum::<f64>()
        .sqrt()
}

/// An ordered sequence of points sharing one dimension, stored flat.
///
/// The empty curve has dimension 0.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Curve {
    dim: usize,
    coords: Vec<f64>,
}

impl Curve {
    pub fn empty() -> Self {
        Curve::default()
    }

    pub fn new(points: Vec<Point>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Ok(Curve::empty());
        };
        let dim = first.dim();
        let mut coords = Vec::with_capacity(dim * points.len());
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            coords.extend_from_slice(&p.coords);
        }
        Ok(Curve { dim, coords })
    }

    /// Builds a curve from row-major coordinates.
    pub fn from_flat(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Ok(Curve::empty());
        }
        if dim == 0 || !coords.len().is_multiple_of(dim) {
            return Err(Error::InvalidPoint(format!(
                "{} coordinates do not split into points of dimension {dim}",
                coords.len()
            )));
        }
        if let Some(bad) = coords.iter().find(|c| !c.is_finite()) {
            return Err(Error::InvalidPoint(format!("non-finite coordinate {bad}")));
        }
        Ok(Curve { dim, coords })
    }

    pub fn len(&self) -> usize {
        self.coords.len().checked_div(self.dim).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of the `i`-th point. Panics when out of range.
    #[inline]
    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[f64]> + '_ {
        // chunks_exact(0) panics, and the empty curve has dim 0
        self.coords.chunks_exact(self.dim.max(1))
    }

    pub fn to_points(&self) -> Vec<Point> {
        self.iter().map(|c| Point { coords: c.to_vec() }).collect()
    }
}

/// Splits a data line into numeric tokens.
///
/// Tokens are separated by commas and/or blanks; an empty field between two
/// commas (or a trailing comma) is an error.
pub(crate) fn split_fields(line: &str) -> std::result::Result<Vec<&str>, String> {
    let mut out = Vec::new();
    let pieces: Vec<&str> = line.split(',').collect();
    let several = pieces.len() > 1;
    for piece in pieces {
        let before = out.len();
        out.extend(piece.split_whitespace());
        if several && out.len() == before {
            return Err("empty field between separators".into());
        }
    }
    Ok(out)
}

pub(crate) fn is_skippable(line: &str) -> bool {
    let t = line.trim_start();
    t.is_empty() || t.starts_with('#')
}

pub(crate) fn parse_finite(token: &str) -> std::result::Result<f64, String> {
    let v: f64 = token
        .parse()
        .map_err(|_| format!("not a number: {token:?}"))?;
    if !v.is_finite() {
        return Err(format!("non-finite literal {token:?}"));
    }
    Ok(v)
}

/// Parses a curve file. The dimension comes from the first data line.
pub fn parse_curve(text: &str) -> Result<Curve> {
    let mut dim = 0;
    let mut coords = Vec::new();
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
        if dim == 0 {
            dim = fields.len();
        } else if fields.len() != dim {
            return Err(parse_err(format!(
                "dimension mismatch: expected {dim} coordinates, found {}",
                fields.len()
            )));
        }
        for f in fields {
            coords.push(parse_finite(f).map_err(parse_err)?);
        }
    }
    Curve::from_flat(dim, coords)
}

/// Renders a curve in the curve file format.
///
/// Coordinates use the shortest decimal that parses back to the same `f64`,
/// so `parse_curve(&write_curve(c))` reproduces `c` exactly.
pub fn write_curve(curve: &Curve) -> String {
    let mut out = String::new();
    for p in curve.iter() {
        for (k, x) in p.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            write!(out, "{x}").unwrap();
        }
        out.push('\n');
    }
    out
}
