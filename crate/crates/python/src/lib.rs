//! Python bindings. Exact values cross the boundary as `fractions.Fraction`;
//! rational arguments accept `int`, `Fraction` or a string such as `"3/2"`.

use jacobi_moments::asymptotics::{self, LimitQuery};
use jacobi_moments::oracle::{self, ChainConfig, MonomialPoly, SpectralParams};
use jacobi_moments::rational::parse_rational;
use jacobi_moments::{combinat, mn, schur_moments, verify};
use jacobi_moments::{Error, Rational};
use pyo3::create_exception;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyFloat, PyString};

create_exception!(jacobi_moments, JacobiError, PyValueError, "Domain or input error raised by the exact engine.");

fn err(e: Error) -> PyErr {
    JacobiError::new_err(e.to_string())
}

/// Exact rational argument.
pub struct Exact(pub Rational);

impl<'a, 'py> FromPyObject<'a, 'py> for Exact {
    type Error = PyErr;

    fn extract(ob: Borrowed<'a, 'py, PyAny>) -> PyResult<Self> {
        if ob.is_instance_of::<PyFloat>() || ob.is_instance_of::<PyBool>() {
            return Err(PyTypeError::new_err("expected int, Fraction or str, not a float or bool"));
        }
        if let Ok(s) = ob.cast::<PyString>() {
            return parse_rational(&s.to_cow()?).map(Exact).map_err(err);
        }
        ob.extract::<Rational>().map(Exact).map_err(|_| {
            PyTypeError::new_err(format!("expected int, Fraction or str, got {}", ob.get_type().name().map_or("?".into(), |n| n.to_string())))
        })
    }
}

#[pyclass(name = "Partition", module = "jacobi_moments", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyPartition(pub jacobi_moments::Partition);

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        jacobi_moments::Partition::new(parts).map(Self).map_err(err)
    }

    #[staticmethod]
    fn hook(k: usize, i: usize) -> PyResult<Self> {
        if k == 0 || i >= k {
            return Err(PyValueError::new_err(format!("hook needs 0 <= i < k, got k={k} i={i}")));
        }
        Ok(Self(jacobi_moments::Partition::hook(k, i)))
    }

    #[staticmethod]
    fn all_of_weight(n: usize) -> Vec<Self> {
        jacobi_moments::Partition::all_of_weight(n).into_iter().map(Self).collect()
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn weight(&self) -> usize {
        self.0.weight()
    }

    fn __len__(&self) -> usize {
        self.0.length()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

#[pyclass(name = "ScalingParams", module = "jacobi_moments", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyScalingParams(pub jacobi_moments::ScalingParams);

#[pymethods]
impl PyScalingParams {
    /// `a = a1 N + a0`, `b = b1 N + b0`.
    #[new]
    #[pyo3(signature = (a1, b1, a0 = Exact(Rational::from_integer(1.into())), b0 = Exact(Rational::from_integer(1.into()))))]
    fn new(a1: Exact, b1: Exact, a0: Exact, b0: Exact) -> Self {
        Self(jacobi_moments::ScalingParams::new(a1.0, a0.0, b1.0, b0.0))
    }

    #[staticmethod]
    fn fixed(a: Exact, b: Exact) -> Self {
        Self(jacobi_moments::ScalingParams::fixed(a.0, b.0))
    }

    #[getter]
    fn a1(&self) -> Rational {
        self.0.a1.clone()
    }

    #[getter]
    fn a0(&self) -> Rational {
        self.0.a0.clone()
    }

    #[getter]
    fn b1(&self) -> Rational {
        self.0.b1.clone()
    }

    #[getter]
    fn b0(&self) -> Rational {
        self.0.b0.clone()
    }

    fn a_at(&self, n: Exact) -> Rational {
        self.0.a_at(&n.0)
    }

    fn b_at(&self, n: Exact) -> Rational {
        self.0.b_at(&n.0)
    }

    fn __repr__(&self) -> String {
        let p = &self.0;
        format!("ScalingParams(a1={}, b1={}, a0={}, b0={})", p.a1, p.b1, p.a0, p.b0)
    }
}

/// Reduced rational function of `N` with a monic denominator.
#[pyclass(name = "RationalFunction", module = "jacobi_moments", frozen)]
pub struct PyRationalFunction(pub jacobi_moments::RationalFunction);

#[pymethods]
impl PyRationalFunction {
    /// Numerator coefficients, constant term first.
    #[getter]
    fn numerator(&self) -> Vec<Rational> {
        self.0.numerator().coeffs().to_vec()
    }

    #[getter]
    fn denominator(&self) -> Vec<Rational> {
        self.0.denominator().coeffs().to_vec()
    }

    fn __call__(&self, n: Exact) -> PyResult<Rational> {
        self.0.eval(&n.0).map_err(err)
    }

    fn limit_at_infinity(&self) -> PyResult<Rational> {
        self.0.limit_at_infinity().map_err(err)
    }

    /// `f(N) / N^m`.
    fn div_n_pow(&self, m: usize) -> Self {
        Self(self.0.div_x_pow(m))
    }

    fn __str__(&self) -> String {
        self.0.to_string().replace('x', "N")
    }

    fn __repr__(&self) -> String {
        format!("RationalFunction({})", self.__str__())
    }
}

/// `I_k = <p_k>` at fixed `(a, b, N)`.
#[pyfunction]
fn ik(k: i64, a: Exact, b: Exact, n: i64) -> PyResult<Rational> {
    schur_moments::ik_closed(k, &a.0, &b.0, n).map_err(err)
}

/// `I_k` through the hook expansion of `p_k`.
#[pyfunction]
fn ik_via_schur(k: i64, a: Exact, b: Exact, n: i64) -> PyResult<Rational> {
    schur_moments::ik_via_schur(k, &a.0, &b.0, n).map_err(err)
}

/// `I_k / N` as a rational function of `N` under the given scaling.
#[pyfunction]
fn ik_rf(k: i64, params: PyScalingParams) -> PyResult<PyRationalFunction> {
    schur_moments::ik_rf(k, &params.0).map(PyRationalFunction).map_err(err)
}

#[pyfunction]
fn schur_average(partition: PyPartition, a: Exact, b: Exact, n: i64) -> PyResult<Rational> {
    schur_moments::schur_average(&partition.0, &a.0, &b.0, n).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (partition, params, n_min = None))]
fn schur_average_rf(partition: PyPartition, params: PyScalingParams, n_min: Option<i64>) -> PyResult<PyRationalFunction> {
    let n_min = n_min.unwrap_or(partition.0.length().max(1) as i64);
    schur_moments::schur_average_rf(&partition.0, &params.0, n_min)
        .map(PyRationalFunction)
        .map_err(err)
}

/// `lim <p_λ> / (N^len(λ) <1>)`.
#[pyfunction]
fn plambda_limit(partition: PyPartition, params: PyScalingParams) -> PyResult<Rational> {
    schur_moments::plambda_limit(&partition.0, &params.0).map_err(err)
}

/// `lim I_k / N`. Only the slopes of `params` matter.
#[pyfunction]
fn ik_limit(k: i64, params: PyScalingParams) -> PyResult<Rational> {
    LimitQuery::new(k, params.0).map(|q| asymptotics::ik_limit(&q)).map_err(err)
}

#[pyfunction]
fn ik_limit_l1l2(k: i64, l1: Exact, l2: Exact) -> PyResult<Rational> {
    asymptotics::ik_limit_l1l2(k, &l1.0, &l2.0).map_err(err)
}

#[pyfunction]
fn l1l2_from_slopes(a1: Exact, b1: Exact) -> PyResult<(Rational, Rational)> {
    asymptotics::l1l2_from_slopes(&a1.0, &b1.0).map_err(err)
}

/// Names of the closed-form families containing `(a1, b1)`, most specific first.
#[pyfunction]
fn special_cases(a1: Exact, b1: Exact) -> Vec<&'static str> {
    asymptotics::special_cases(&a1.0, &b1.0).iter().map(|c| c.name()).collect()
}

/// Expansion of `p_λ` in Schur functions as `(μ, coefficient)` pairs.
#[pyfunction]
fn power_sum_to_schur(partition: PyPartition) -> PyResult<Vec<(PyPartition, Rational)>> {
    let terms = mn::mn_expand(&partition.0).map_err(err)?;
    Ok(terms.into_iter().map(|(mu, c)| (PyPartition(mu), c)).collect())
}

#[pyfunction]
fn gimel(k: i64, i: i64) -> PyResult<Rational> {
    combinat::gimel(k, i).map_err(err)
}

#[pyfunction]
fn stirling2(p: i64, k: i64) -> PyResult<Rational> {
    combinat::stirling2(p, k).map_err(err)
}

/// `<p_k>` by exact integration over at most five eigenvalues.
#[pyfunction]
fn brute_force_ik(k: u32, n: usize, a: Exact, b: Exact) -> PyResult<Rational> {
    oracle::brute_average(&MonomialPoly::power_sum(n, k), n, &a.0, &b.0).map_err(err)
}

/// `I_k` from the one-point density; `a` and `b` must be integers.
#[pyfunction]
fn density_ik(k: i64, a: Exact, b: Exact, n: i64) -> PyResult<Rational> {
    let sp = SpectralParams::from_ab(&a.0, &b.0, n).map_err(err)?;
    oracle::density_ik(k, &sp).map_err(err)
}

/// Metropolis estimate of `<p_k>`. Returns a dict with the estimate,
/// its batch-means standard error and the acceptance rate.
#[pyfunction]
#[pyo3(signature = (k, n, a, b, *, seed = 42, samples = 100_000, burn_in = 2_000, thinning = 1, step_width = 0.2))]
#[allow(clippy::too_many_arguments)]
fn mc_estimate<'py>(
    py: Python<'py>,
    k: u32,
    n: usize,
    a: f64,
    b: f64,
    seed: u64,
    samples: u64,
    burn_in: u64,
    thinning: u64,
    step_width: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let cfg = ChainConfig { seed, burn_in, thinning, step_width, samples };
    let est = py.detach(|| oracle::mc_sample_pk(k, n, a, b, &cfg)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("mean", est.mean)?;
    d.set_item("std_error", est.std_error)?;
    d.set_item("acceptance_rate", est.acceptance_rate)?;
    d.set_item("batches", est.batches)?;
    d.set_item("warning", est.warning)?;
    Ok(d)
}

/// Runs one suite (`"all"`, `"identities"`, `"oracles"`, `"limits"`,
/// `"conjecture"`) and returns `(suite, name, passed, detail)` tuples.
#[pyfunction]
#[pyo3(signature = (suite = "all"))]
fn run_checks(py: Python<'_>, suite: &str) -> PyResult<Vec<(String, String, bool, String)>> {
    let checks = if suite == "all" {
        verify::all_checks()
    } else {
        verify::checks(suite.parse().map_err(err)?)
    };
    let results = py.detach(|| checks.iter().map(|c| c.run()).collect::<Vec<_>>());
    Ok(results.into_iter().map(|r| (r.suite.name().to_string(), r.name, r.passed, r.detail)).collect())
}

#[pymodule]
#[pyo3(name = "jacobi_moments")]
pub fn jacobi_moments_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("JacobiError", m.py().get_type::<JacobiError>())?;
    m.add_class::<PyPartition>()?;
    m.add_class::<PyScalingParams>()?;
    m.add_class::<PyRationalFunction>()?;
    m.add_function(wrap_pyfunction!(ik, m)?)?;
    m.add_function(wrap_pyfunction!(ik_via_schur, m)?)?;
    m.add_function(wrap_pyfunction!(ik_rf, m)?)?;
    m.add_function(wrap_pyfunction!(schur_average, m)?)?;
    m.add_function(wrap_pyfunction!(schur_average_rf, m)?)?;
    m.add_function(wrap_pyfunction!(plambda_limit, m)?)?;
    m.add_function(wrap_pyfunction!(ik_limit, m)?)?;
    m.add_function(wrap_pyfunction!(ik_limit_l1l2, m)?)?;
    m.add_function(wrap_pyfunction!(l1l2_from_slopes, m)?)?;
    m.add_function(wrap_pyfunction!(special_cases, m)?)?;
    m.add_function(wrap_pyfunction!(power_sum_to_schur, m)?)?;
    m.add_function(wrap_pyfunction!(gimel, m)?)?;
    m.add_function(wrap_pyfunction!(stirling2, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_ik, m)?)?;
    m.add_function(wrap_pyfunction!(density_ik, m)?)?;
    m.add_function(wrap_pyfunction!(mc_estimate, m)?)?;
    m.add_function(wrap_pyfunction!(run_checks, m)?)?;
    Ok(())
}
