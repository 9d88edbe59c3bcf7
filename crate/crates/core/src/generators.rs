//! Seeded generators for long-edged curves and perturbed copies.
//!
//! The random stream is ChaCha8 seeded through `SeedableRng::seed_from_u64`,
//! which is portable and stable across platforms. Angles are one uniform
//! `f64` in `[0, 1)` scaled by `2π`; perturbation offsets are uniform
//! integers in `{-d, ..., d}`. Changing any of these breaks the goldens.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::Curve;

pub type GenRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Parameters of a long-edged instance: `n` points per curve, edges of
/// length `edge_length`, integer perturbation up to `perturb` per coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenConfig {
    pub n: usize,
    pub edge_length: f64,
    pub perturb: u32,
    pub seed: u64,
}

impl GenConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidConfig("n must be at least 1".into()));
        }
        if !(self.edge_length.is_finite() && self.edge_length > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "edge length must be positive and finite, got {}",
                self.edge_length
            )));
        }
        Ok(())
    }
}

pub fn random_point_on_unit_circle<R: Rng + ?Sized>(rng: &mut R) -> [f64; 2] {
    let angle = rng.gen::<f64>() * TAU;
    [angle.cos(), angle.sin()]
}

/// A 2D curve of exactly `n` points: the first on the unit circle, each next
/// one `edge_length` away in a uniformly random direction.
pub fn random_long_edged_curve<R: Rng + ?Sized>(
    n: usize,
    edge_length: f64,
    rng: &mut R,
) -> Result<Curve> {
    GenConfig {
        n,
        edge_length,
        perturb: 0,
        seed: 0,
    }
    .validate()?;
    let [mut x, mut y] = random_point_on_unit_circle(rng);
    let mut coords = Vec::with_capacity(2 * n);
    coords.extend([x, y]);
    for _ in 1..n {
        let [dx, dy] = random_point_on_unit_circle(rng);
        x += dx * edge_length;
        y += dy * edge_length;
        coords.extend([x, y]);
    }
    Curve::from_flat(2, coords)
}

/// Shifts every coordinate of a 2D curve by an independent integer drawn
/// uniformly from `{-d, ..., d}`.
pub fn perturbed_curve<R: Rng + ?Sized>(p: &Curve, d: u32, rng: &mut R) -> Result<Curve> {
    if p.is_empty() {
        return Ok(Curve::empty());
    }
    if p.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: p.dim(),
        });
    }
    let d = i64::from(d);
    let mut coords = Vec::with_capacity(2 * p.len());
    for pt in p.iter() {
        for &c in pt {
            coords.push(c + rng.gen_range(-d..=d) as f64);
        }
    }
    Curve::from_flat(2, coords)
}

/// A long-edged curve and a perturbed copy, both drawn from one stream
/// seeded with `cfg.seed`.
pub fn long_edged_instance(cfg: &GenConfig) -> Result<(Curve, Curve)> {
    cfg.validate()?;
    let mut rng = rng_from_seed(cfg.seed);
    let p = random_long_edged_curve(cfg.n, cfg.edge_length, &mut rng)?;
    let q = perturbed_curve(&p, cfg.perturb, &mut rng)?;
    Ok((p, q))
}
