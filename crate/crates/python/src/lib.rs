//! Python bindings for `frechet-core`.
//!
//! Most functions take either a `CostMatrix`, or two `Curve`s whose pairwise
//! Euclidean distances form the cost grid: `f(matrix)` or `f(p, q)`.

use frechet_core::{
    self as core, generators, BandParams, CostSource, CurvePair, Cutoff, MatrixParseOptions,
};
use pyo3::exceptions::{PyIndexError, PyTypeError, PyValueError};
use pyo3::prelude::*;

fn py_bool(b: bool) -> &'static str {
    if b {
        "True"
    } else {
        "False"
    }
}

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Curve", module = "frechet", frozen)]
pub struct PyCurve(core::Curve);

#[pymethods]
impl PyCurve {
    #[new]
    fn new(points: Vec<Vec<f64>>) -> PyResult<Self> {
        let points = points
            .into_iter()
            .map(core::Point::new)
            .collect::<core::Result<Vec<_>>>();
        Ok(PyCurve(
            core::Curve::new(points.map_err(err)?).map_err(err)?,
        ))
    }

    /// Parse one point per line, coordinates separated by commas or whitespace.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        core::parse_curve(text).map(PyCurve).map_err(err)
    }

    fn to_text(&self) -> String {
        core::write_curve(&self.0)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn points(&self) -> Vec<Vec<f64>> {
        self.0.iter().map(<[f64]>::to_vec).collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __getitem__(&self, i: usize) -> PyResult<Vec<f64>> {
        if i >= self.0.len() {
            return Err(PyIndexError::new_err("curve index out of range"));
        }
        Ok(self.0.point(i).to_vec())
    }

    fn __repr__(&self) -> String {
        format!("Curve(len={}, dim={})", self.0.len(), self.0.dim())
    }
}

#[pyclass(name = "CostMatrix", module = "frechet", frozen)]
pub struct PyCostMatrix(core::CostMatrix);

#[pymethods]
impl PyCostMatrix {
    #[new]
    fn new(rows: Vec<Vec<f64>>) -> PyResult<Self> {
        core::CostMatrix::from_rows(&rows)
            .map(PyCostMatrix)
            .map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (text, dash_as_inf = false))]
    fn parse(text: &str, dash_as_inf: bool) -> PyResult<Self> {
        core::parse_matrix(text, MatrixParseOptions { dash_as_inf })
            .map(PyCostMatrix)
            .map_err(err)
    }

    /// Pairwise Euclidean distances between the points of `p` and `q`.
    #[staticmethod]
    fn euclidean(p: &PyCurve, q: &PyCurve) -> PyResult<Self> {
        core::euclidean_matrix(&p.0, &q.0)
            .map(PyCostMatrix)
            .map_err(err)
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.0.rows(), self.0.cols())
    }

    fn get(&self, i: usize, j: usize) -> PyResult<f64> {
        if i >= self.0.rows() || j >= self.0.cols() {
            return Err(PyIndexError::new_err("matrix index out of range"));
        }
        Ok(self.0.get(i, j))
    }

    fn to_list(&self) -> Vec<Vec<f64>> {
        (0..self.0.rows()).map(|i| self.0.row(i).to_vec()).collect()
    }

    fn to_text(&self) -> String {
        core::write_matrix(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("CostMatrix(rows={}, cols={})", self.0.rows(), self.0.cols())
    }
}

#[pyclass(name = "BandedOutcome", module = "frechet", frozen, get_all)]
pub struct PyBandedOutcome {
    value: f64,
    breached: bool,
    cells_computed: u64,
    distance_evals: u64,
}

#[pymethods]
impl PyBandedOutcome {
    fn __repr__(&self) -> String {
        format!(
            "BandedOutcome(value={}, breached={}, cells_computed={}, distance_evals={})",
            self.value,
            py_bool(self.breached),
            self.cells_computed,
            self.distance_evals
        )
    }
}

#[pyclass(name = "Iteration", module = "frechet", frozen, get_all)]
pub struct PyIteration {
    width: usize,
    threshold: f64,
    value: f64,
    breached: bool,
    cells_computed: u64,
    distance_evals: u64,
}

#[pymethods]
impl PyIteration {
    fn __repr__(&self) -> String {
        format!(
            "Iteration(width={}, threshold={}, value={}, breached={})",
            self.width,
            self.threshold,
            self.value,
            py_bool(self.breached)
        )
    }
}

#[pyclass(name = "AdaptiveOutcome", module = "frechet", frozen, get_all)]
pub struct PyAdaptiveOutcome {
    value: f64,
    final_width: usize,
    total_cells: u64,
    total_distance_evals: u64,
    iterations: Vec<Py<PyIteration>>,
}

#[pymethods]
impl PyAdaptiveOutcome {
    fn __repr__(&self) -> String {
        format!(
            "AdaptiveOutcome(value={}, final_width={}, iterations={}, total_cells={})",
            self.value,
            self.final_width,
            self.iterations.len(),
            self.total_cells
        )
    }
}

fn with_source<R>(
    p: &Bound<'_, PyAny>,
    q: Option<&Bound<'_, PyAny>>,
    f: impl FnOnce(&dyn CostSource) -> PyResult<R>,
) -> PyResult<R> {
    const USAGE: &str = "expected a CostMatrix, or two Curves";
    match q {
        None => match p.cast::<PyCostMatrix>() {
            Ok(m) => f(&m.get().0),
            Err(_) => Err(PyTypeError::new_err(USAGE)),
        },
        Some(q) => match (p.cast::<PyCurve>(), q.cast::<PyCurve>()) {
            (Ok(p), Ok(q)) => f(&CurvePair::new(&p.get().0, &q.get().0).map_err(err)?),
            _ => Err(PyTypeError::new_err(USAGE)),
        },
    }
}

fn band(width: usize, threshold: f64, inclusive: bool) -> PyResult<BandParams> {
    let cutoff = if inclusive {
        Cutoff::Inclusive
    } else {
        Cutoff::Strict
    };
    Ok(BandParams::new(width, threshold)
        .map_err(err)?
        .with_cutoff(cutoff))
}

/// Full quadratic dynamic program.
#[pyfunction]
#[pyo3(signature = (p, q = None))]
fn classical(p: &Bound<'_, PyAny>, q: Option<&Bound<'_, PyAny>>) -> PyResult<f64> {
    with_source(p, q, |c| core::classical_rolling(c).map_err(err))
}

/// Enumerates every monotone path; small grids only.
#[pyfunction]
#[pyo3(signature = (p, q = None))]
fn brute_force(p: &Bound<'_, PyAny>, q: Option<&Bound<'_, PyAny>>) -> PyResult<f64> {
    with_source(p, q, |c| core::brute_force(c).map_err(err))
}

#[pyfunction]
#[pyo3(signature = (p, q = None))]
fn distance(p: &Bound<'_, PyAny>, q: Option<&Bound<'_, PyAny>>) -> PyResult<f64> {
    with_source(p, q, |c| Ok(core::adaptive_compute(c).value))
}

#[pyfunction]
#[pyo3(signature = (p, q = None))]
fn adaptive(
    py: Python<'_>,
    p: &Bound<'_, PyAny>,
    q: Option<&Bound<'_, PyAny>>,
) -> PyResult<PyAdaptiveOutcome> {
    let out = with_source(p, q, |c| Ok(core::adaptive_compute(c)))?;
    let iterations = out
        .iterations
        .iter()
        .map(|it| {
            Py::new(
                py,
                PyIteration {
                    width: it.width,
                    threshold: it.threshold,
                    value: it.value,
                    breached: it.breached,
                    cells_computed: it.cells_computed,
                    distance_evals: it.distance_evals,
                },
            )
        })
        .collect::<PyResult<_>>()?;
    Ok(PyAdaptiveOutcome {
        value: out.value,
        final_width: out.final_width,
        total_cells: out.total_cells,
        total_distance_evals: out.total_distance_evals,
        iterations,
    })
}

/// One pass over the band `|i - j| < width`, pruning costs at `threshold`.
#[pyfunction]
#[pyo3(signature = (p, q = None, *, width, threshold = f64::INFINITY, inclusive = false))]
fn banded_pass(
    p: &Bound<'_, PyAny>,
    q: Option<&Bound<'_, PyAny>>,
    width: usize,
    threshold: f64,
    inclusive: bool,
) -> PyResult<PyBandedOutcome> {
    let params = band(width, threshold, inclusive)?;
    let out = with_source(p, q, |c| core::banded_pass(c, &params).map_err(err))?;
    Ok(PyBandedOutcome {
        value: out.value,
        breached: out.breached,
        cells_computed: out.cells_computed,
        distance_evals: out.distance_evals,
    })
}

/// Smallest width whose inclusive pass at the exact distance is unbreached.
#[pyfunction]
#[pyo3(signature = (p, q = None))]
fn probe_width(p: &Bound<'_, PyAny>, q: Option<&Bound<'_, PyAny>>) -> PyResult<usize> {
    with_source(p, q, |c| core::probe_min_unbreached_width(c).map_err(err))
}

#[pyfunction]
#[pyo3(signature = (p, q = None))]
fn frechet_matrix(p: &Bound<'_, PyAny>, q: Option<&Bound<'_, PyAny>>) -> PyResult<Vec<Vec<f64>>> {
    let dp = with_source(p, q, |c| core::frechet_matrix(c).map_err(err))?;
    Ok((0..dp.rows()).map(|i| dp.row(i).to_vec()).collect())
}

/// Cell values of a banded pass: a float, `inf` when cut, `None` outside the band.
#[pyfunction]
#[pyo3(signature = (p, q = None, *, width, threshold = f64::INFINITY, inclusive = false))]
fn banded_cells(
    p: &Bound<'_, PyAny>,
    q: Option<&Bound<'_, PyAny>>,
    width: usize,
    threshold: f64,
    inclusive: bool,
) -> PyResult<Vec<Vec<Option<f64>>>> {
    let params = band(width, threshold, inclusive)?;
    let a = with_source(p, q, |c| core::banded_matrix_dump(c, &params).map_err(err))?;
    Ok((0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|j| match a.get(i, j) {
                    core::CellState::OutOfBand => None,
                    s => Some(s.as_cost()),
                })
                .collect()
        })
        .collect())
}

#[pyfunction]
#[pyo3(signature = (p, q = None))]
fn render_costs(p: &Bound<'_, PyAny>, q: Option<&Bound<'_, PyAny>>) -> PyResult<String> {
    with_source(p, q, |c| {
        Ok(core::render_cost_matrix(&core::CostMatrix::from_source(c)))
    })
}

#[pyfunction]
#[pyo3(signature = (p, q = None))]
fn render_frechet(p: &Bound<'_, PyAny>, q: Option<&Bound<'_, PyAny>>) -> PyResult<String> {
    with_source(p, q, |c| {
        Ok(core::render_dp_matrix(
            &core::frechet_matrix(c).map_err(err)?,
        ))
    })
}

#[pyfunction]
#[pyo3(signature = (p, q = None, *, width, threshold = f64::INFINITY, inclusive = false, header = true))]
fn render_banded(
    p: &Bound<'_, PyAny>,
    q: Option<&Bound<'_, PyAny>>,
    width: usize,
    threshold: f64,
    inclusive: bool,
    header: bool,
) -> PyResult<String> {
    let params = band(width, threshold, inclusive)?;
    with_source(p, q, |c| {
        let a = core::banded_matrix_dump(c, &params).map_err(err)?;
        Ok(core::render_annotated(&a, header))
    })
}

#[pyfunction]
fn long_edged_curve(n: usize, edge_length: f64, seed: u64) -> PyResult<PyCurve> {
    generators::random_long_edged_curve(n, edge_length, &mut generators::rng_from_seed(seed))
        .map(PyCurve)
        .map_err(err)
}

#[pyfunction]
fn perturbed_curve(base: &PyCurve, perturb: u32, seed: u64) -> PyResult<PyCurve> {
    generators::perturbed_curve(&base.0, perturb, &mut generators::rng_from_seed(seed))
        .map(PyCurve)
        .map_err(err)
}

/// A long-edged curve and a perturbed copy, both drawn from one seeded stream.
#[pyfunction]
fn long_edged_instance(
    n: usize,
    edge_length: f64,
    perturb: u32,
    seed: u64,
) -> PyResult<(PyCurve, PyCurve)> {
    let cfg = generators::GenConfig {
        n,
        edge_length,
        perturb,
        seed,
    };
    let (p, q) = generators::long_edged_instance(&cfg).map_err(err)?;
    Ok((PyCurve(p), PyCurve(q)))
}

/// Runs the benchmark and returns the CSV text.
#[pyfunction]
#[pyo3(signature = (sizes, trials = 1, seed = 0, edge_length = 100.0, perturb = 10, algos = None))]
fn bench_csv(
    sizes: Vec<usize>,
    trials: usize,
    seed: u64,
    edge_length: f64,
    perturb: u32,
    algos: Option<Vec<String>>,
) -> PyResult<String> {
    let algos = match algos {
        Some(a) => a
            .iter()
            .map(|s| s.parse())
            .collect::<core::Result<_>>()
            .map_err(err)?,
        None => core::bench::BenchConfig::default().algos,
    };
    let cfg = core::bench::BenchConfig {
        sizes,
        trials,
        seed,
        edge_length,
        perturb,
        algos,
    };
    let records = core::bench::run_bench(&cfg).map_err(err)?;
    let mut out = Vec::new();
    core::bench::write_csv(&records, &mut out).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(String::from_utf8(out).expect("csv output is utf-8"))
}

/// Adds every class and function to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCurve>()?;
    m.add_class::<PyCostMatrix>()?;
    m.add_class::<PyBandedOutcome>()?;
    m.add_class::<PyIteration>()?;
    m.add_class::<PyAdaptiveOutcome>()?;
    m.add_function(wrap_pyfunction!(classical, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(adaptive, m)?)?;
    m.add_function(wrap_pyfunction!(banded_pass, m)?)?;
    m.add_function(wrap_pyfunction!(probe_width, m)?)?;
    m.add_function(wrap_pyfunction!(frechet_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(banded_cells, m)?)?;
    m.add_function(wrap_pyfunction!(render_costs, m)?)?;
    m.add_function(wrap_pyfunction!(render_frechet, m)?)?;
    m.add_function(wrap_pyfunction!(render_banded, m)?)?;
    m.add_function(wrap_pyfunction!(long_edged_curve, m)?)?;
    m.add_function(wrap_pyfunction!(perturbed_curve, m)?)?;
    m.add_function(wrap_pyfunction!(long_edged_instance, m)?)?;
    m.add_function(wrap_pyfunction!(bench_csv, m)?)?;
    m.add("BRUTE_FORCE_LIMIT", core::BRUTE_FORCE_LIMIT)?;
    Ok(())
}

#[pymodule]
#[pyo3(name = "frechet")]
fn frechet_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}
