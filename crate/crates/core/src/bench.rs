//! Benchmark harness over generated long-edged instances.
//!
//! Each `(size, trial)` pair draws one instance from seed `seed + trial`,
//! runs every requested algorithm on it, and records the instrumentation
//! counters. Rows are sorted by `(n, trial, algo)`; every column except `ns`
//! is a function of the parameters alone.

use std::io;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::adaptive::{adaptive_compute, probe_min_unbreached_width};
use crate::cost::CurvePair;
use crate::dp::classical_rolling;
use crate::error::{Error, Result};
use crate::generators::{long_edged_instance, GenConfig};

/// Column order of the bench CSV.
pub const CSV_HEADER: [&str; 11] = [
    "n",
    "L",
    "d",
    "seed",
    "algo",
    "value",
    "final_width",
    "probe_width",
    "cells",
    "dist_evals",
    "ns",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Adaptive,
    Classical,
}

impl Algo {
    pub fn as_str(self) -> &'static str {
        match self {
            Algo::Adaptive => "adaptive",
            Algo::Classical => "classical",
        }
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adaptive" => Ok(Algo::Adaptive),
            "classical" => Ok(Algo::Classical),
            _ => Err(Error::InvalidConfig(format!("unknown algorithm {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub edge_length: f64,
    pub perturb: u32,
    pub algos: Vec<Algo>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![100, 200],
            trials: 2,
            seed: 0,
            edge_length: 100.0,
            perturb: 10,
            algos: vec![Algo::Classical, Algo::Adaptive],
        }
    }
}

/// One CSV row. For the classical engine `final_width` is the full band
/// `max(n, m)` and both counters are `n·m`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub n: usize,
    #[serde(rename = "L")]
    pub edge_length: f64,
    pub d: u32,
    pub seed: u64,
    pub algo: Algo,
    pub value: f64,
    pub final_width: usize,
    pub probe_width: usize,
    pub cells: u64,
    pub dist_evals: u64,
    pub ns: u128,
    #[serde(skip)]
    pub trial: usize,
}

pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if cfg.sizes.is_empty() || cfg.trials == 0 || cfg.algos.is_empty() {
        return Err(Error::InvalidConfig(
            "bench needs at least one size, one trial and one algorithm".into(),
        ));
    }
    let mut records = Vec::with_capacity(cfg.sizes.len() * cfg.trials * cfg.algos.len());
    for &n in &cfg.sizes {
        for trial in 0..cfg.trials {
            let gen = GenConfig {
                n,
                edge_length: cfg.edge_length,
                perturb: cfg.perturb,
                seed: cfg.seed.wrapping_add(trial as u64),
            };
            let (p, q) = long_edged_instance(&gen)?;
            let pair = CurvePair::new(&p, &q)?;
            let probe_width = probe_min_unbreached_width(&pair)?;
            for &algo in &cfg.algos {
                let start = Instant::now();
                let (value, final_width, cells, dist_evals) = match algo {
                    Algo::Classical => {
                        let v = classical_rolling(&pair)?;
                        let cells = (p.len() * q.len()) as u64;
                        (v, p.len().max(q.len()), cells, cells)
                    }
                    Algo::Adaptive => {
                        let out = adaptive_compute(&pair);
                        (
                            out.value,
                            out.final_width,
                            out.total_cells,
                            out.total_distance_evals,
                        )
                    }
                };
                let ns = start.elapsed().as_nanos();
                records.push(BenchRecord {
                    n,
                    edge_length: cfg.edge_length,
                    d: cfg.perturb,
                    seed: gen.seed,
                    algo,
                    value,
                    final_width,
                    probe_width,
                    cells,
                    dist_evals,
                    ns,
                    trial,
                });
            }
        }
    }
    records.sort_by_key(|r| (r.n, r.trial, r.algo));
    Ok(records)
}

pub fn write_csv<W: io::Write>(records: &[BenchRecord], out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if records.is_empty() {
        w.write_record(CSV_HEADER)?;
    }
    for r in records {
        w.serialize(r)?;
    }
    w.flush()
}

pub fn read_csv<R: io::Read>(input: R) -> std::result::Result<Vec<BenchRecord>, csv::Error> {
    csv::Reader::from_reader(input).deserialize().collect()
}

/// Checks the harness invariants and returns a description of each
/// violation: classical and adaptive agree on every instance, adaptive work
/// stays within `8·final_width·(n+m)`, and `final_width ≤ 2·probe_width`.
pub fn check_records(records: &[BenchRecord]) -> Vec<String> {
    let mut bad = Vec::new();
    for r in records {
        if r.algo != Algo::Adaptive {
            continue;
        }
        let n_plus_m = 2 * r.n as u64;
        if r.cells > 8 * r.final_width as u64 * n_plus_m {
            bad.push(format!(
                "n={} seed={}: cells {} > 8*{}*{}",
                r.n, r.seed, r.cells, r.final_width, n_plus_m
            ));
        }
        if r.final_width > 2 * r.probe_width {
            bad.push(format!(
                "n={} seed={}: final width {} > 2*probe {}",
                r.n, r.seed, r.final_width, r.probe_width
            ));
        }
        for other in records
            .iter()
            .filter(|o| o.n == r.n && o.seed == r.seed && o.algo != r.algo)
        {
            if other.value != r.value {
                bad.push(format!(
                    "n={} seed={}: {} = {} but adaptive = {}",
                    r.n,
                    r.seed,
                    other.algo.as_str(),
                    other.value,
                    r.value
                ));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bench_row_count_and_order() {
        let recs = run_bench(&BenchConfig {
            sizes: vec![20, 10],
            ..BenchConfig::default()
        })
        .unwrap();
        assert_eq!(recs.len(), 8);
        let keys: Vec<_> = recs.iter().map(|r| (r.n, r.trial, r.algo)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(
            check_records(&recs).is_empty(),
            "{:?}",
            check_records(&recs)
        );
    }

    #[test]
    fn csv_header_is_frozen() {
        let recs = run_bench(&BenchConfig {
            sizes: vec![5],
            trials: 1,
            ..BenchConfig::default()
        })
        .unwrap();
        let mut buf = Vec::new();
        write_csv(&recs, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(read_csv(text.as_bytes()).unwrap().len(), 2);

        let mut empty = Vec::new();
        write_csv(&[], &mut empty).unwrap();
        assert_eq!(
            String::from_utf8(empty).unwrap().trim_end(),
            CSV_HEADER.join(",")
        );
    }

    #[test]
    fn rejects_empty_configs() {
        let cfg = BenchConfig {
            trials: 0,
            ..BenchConfig::default()
        };
        assert!(run_bench(&cfg).is_err());
        assert!("fast".parse::<Algo>().is_err());
    }
}
