//! Python bindings. Structured results are returned as plain Python objects
//! (dicts and lists) decoded from the library's JSON forms.

use lexseg::lexsegment::{classify, completeness, LexSegmentIdeal};
use lexseg::monomial::{Monomial, MonomialOrder};
use lexseg::quotients::{has_linear_quotients, power_generators, prescribed_order, OrderedGenerators};
use lexseg::sweep::{sweep, SweepOptions};
use lexseg::tableau::{is_standard_pair, standard_representation, standard_tableau_from_support, Support};
use lexseg::toric::{check_groebner, check_l_exchange, check_sigma_exchange, koszul_certificate, rees_gb, veronese_gb, ProductOrder, TOrder};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;
use serde_json::{json, Value};

fn err(e: lexseg::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py(py: Python<'_>, value: &Value) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn serialize<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("library types serialize")
}

/// Accepts a `Monomial`, an exponent string such as `"1,0,1"` or a list of ints.
fn monomial_arg(obj: &Bound<'_, PyAny>) -> PyResult<Monomial> {
    if let Ok(m) = obj.extract::<PyRef<'_, PyMonomial>>() {
        return Ok(m.inner.clone());
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse().map_err(err);
    }
    let exps: Vec<u32> = obj
        .extract()
        .map_err(|_| PyValueError::new_err("expected a Monomial, an exponent string or a list of ints"))?;
    Monomial::new(exps).map_err(err)
}

fn parse_order(name: &str) -> PyResult<MonomialOrder> {
    name.parse().map_err(err)
}

fn parse_t_order(name: &str) -> PyResult<TOrder> {
    name.parse().map_err(err)
}

#[pyclass(name = "Monomial", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyMonomial {
    inner: Monomial,
}

#[pymethods]
impl PyMonomial {
    #[new]
    fn new(exponents: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyMonomial {
            inner: monomial_arg(exponents)?,
        })
    }

    #[getter]
    fn exponents(&self) -> Vec<u32> {
        self.inner.exponents().to_vec()
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn support(&self) -> Vec<usize> {
        self.inner.support()
    }

    fn pretty(&self) -> String {
        self.inner.pretty()
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyMonomial {
            inner: self.inner.mul(&monomial_arg(other)?).map_err(err)?,
        })
    }

    fn gcd(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyMonomial {
            inner: self.inner.gcd(&monomial_arg(other)?).map_err(err)?,
        })
    }

    /// `self / gcd(self, other)`.
    fn colon(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyMonomial {
            inner: self.inner.colon(&monomial_arg(other)?).map_err(err)?,
        })
    }

    fn divides(&self, other: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(self.inner.divides(&monomial_arg(other)?))
    }

    /// Compares under `order` (`lex`, `revlex-dec` or `succ`): -1, 0 or 1.
    #[pyo3(signature = (other, order = "lex"))]
    fn compare(&self, other: &Bound<'_, PyAny>, order: &str) -> PyResult<i8> {
        let ord = parse_order(order)?.compare(&self.inner, &monomial_arg(other)?).map_err(err)?;
        Ok(ord as i8)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Monomial('{}')", self.inner)
    }
}

#[pyclass(name = "LexSegment", frozen)]
struct PyLexSegment {
    inner: LexSegmentIdeal,
}

#[pymethods]
impl PyLexSegment {
    #[new]
    fn new(u: &Bound<'_, PyAny>, v: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyLexSegment {
            inner: LexSegmentIdeal::new(monomial_arg(u)?, monomial_arg(v)?).map_err(err)?,
        })
    }

    #[getter]
    fn u(&self) -> PyMonomial {
        PyMonomial {
            inner: self.inner.u().clone(),
        }
    }

    #[getter]
    fn v(&self) -> PyMonomial {
        PyMonomial {
            inner: self.inner.v().clone(),
        }
    }

    fn generators(&self) -> Vec<PyMonomial> {
        self.inner
            .generators()
            .iter()
            .map(|m| PyMonomial { inner: m.clone() })
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __contains__(&self, m: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(self.inner.contains(&monomial_arg(m)?))
    }

    /// Whether the first `iterations` shadows are lexsegment sets.
    #[pyo3(signature = (iterations = None))]
    fn is_completely_lexsegment(&self, iterations: Option<usize>) -> PyResult<bool> {
        let budget = iterations.unwrap_or_else(|| self.inner.default_shadow_iterations()).max(1);
        Ok(completeness(self.inner.generators(), budget).map_err(err)?.complete)
    }

    fn classify(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let class = classify(&self.inner).map_err(err)?;
        to_py(
            py,
            &json!({
                "label": class.verdict.label(),
                "verdict": class.verdict,
                "linear_resolution": class.verdict.is_positive(),
                "completely": class.completely,
                "shadow_iterations": class.shadow_iterations,
            }),
        )
    }

    /// Linear-quotient certificate of the `power`-th power, in `order` or the
    /// order prescribed by the classification.
    #[pyo3(signature = (power = 1, order = None))]
    fn power_quotients(&self, py: Python<'_>, power: usize, order: Option<&str>) -> PyResult<Py<PyAny>> {
        let order = match order {
            Some(name) => parse_order(name)?,
            None => {
                let verdict = classify(&self.inner).map_err(err)?.verdict;
                prescribed_order(&verdict)
                    .ok_or_else(|| PyValueError::new_err(format!("{verdict}: no order is prescribed")))?
            }
        };
        let gens = power_generators(self.inner.generators(), power).map_err(err)?;
        let og = OrderedGenerators::sorted(gens, order).map_err(err)?;
        let cert = has_linear_quotients(&og);
        to_py(
            py,
            &json!({
                "order": order,
                "generators": og.gens().iter().map(Monomial::to_string).collect::<Vec<_>>(),
                "certificate": cert,
            }),
        )
    }

    #[pyo3(signature = (sigma = "revlex-dec", verify = false))]
    fn rees_gb(&self, py: Python<'_>, sigma: &str, verify: bool) -> PyResult<Py<PyAny>> {
        let sigma = parse_order(sigma)?;
        let basis = rees_gb(&self.inner, sigma, None).map_err(err)?;
        let all = basis.all();
        let check = if verify {
            Some(check_groebner(&all, ProductOrder::new(sigma, TOrder::Lex)).map_err(err)?)
        } else {
            None
        };
        to_py(
            py,
            &json!({
                "binomials": all.iter().map(|g| g.to_json()).collect::<Vec<_>>(),
                "quadratic": koszul_certificate(&all),
                "groebner": check,
            }),
        )
    }

    /// `mode` is `"l"` or `"sigma"`.
    #[pyo3(signature = (mode = "sigma", bound = 2, sigma = "revlex-dec", t_order = "lex"))]
    fn exchange(&self, py: Python<'_>, mode: &str, bound: usize, sigma: &str, t_order: &str) -> PyResult<Py<PyAny>> {
        let t_order = parse_t_order(t_order)?;
        let report = match mode {
            "l" => check_l_exchange(self.inner.generators(), bound, t_order),
            "sigma" => check_sigma_exchange(self.inner.generators(), parse_order(sigma)?, bound, t_order),
            other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
        }
        .map_err(err)?;
        to_py(py, &serialize(&report))
    }

    fn __repr__(&self) -> String {
        format!("LexSegment('{}', '{}')", self.inner.u(), self.inner.v())
    }
}

/// Rows of the standard tableau with the given support and row length.
#[pyfunction]
fn standard_tableau(n: usize, d: usize, support: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
    if d == 0 || !support.len().is_multiple_of(d) {
        return Err(PyValueError::new_err("support does not split into rows of length d"));
    }
    let s = Support::from_entries(n, &support).map_err(err)?;
    Ok(standard_tableau_from_support(&s, support.len() / d, d)
        .map_err(err)?
        .rows()
        .to_vec())
}

#[pyfunction(name = "standard_representation")]
fn py_standard_representation(factors: &Bound<'_, PyList>) -> PyResult<Vec<PyMonomial>> {
    let factors: Vec<Monomial> = factors.iter().map(|f| monomial_arg(&f)).collect::<PyResult<_>>()?;
    Ok(standard_representation(&factors)
        .map_err(err)?
        .into_iter()
        .map(|inner| PyMonomial { inner })
        .collect())
}

#[pyfunction(name = "is_standard_pair")]
fn py_is_standard_pair(a: Vec<usize>, b: Vec<usize>) -> PyResult<bool> {
    is_standard_pair(&a, &b).map_err(err)
}

#[pyfunction(name = "veronese_gb")]
fn py_veronese_gb(py: Python<'_>, n: usize, d: u32) -> PyResult<Py<PyAny>> {
    let gb = veronese_gb(n, d).map_err(err)?;
    to_py(py, &Value::Array(gb.iter().map(|g| g.to_json()).collect()))
}

#[pyfunction(name = "sweep")]
#[pyo3(signature = (n_max = 3, d_max = 2, max_power = 2))]
fn py_sweep(py: Python<'_>, n_max: usize, d_max: u32, max_power: usize) -> PyResult<Py<PyAny>> {
    let opts = SweepOptions {
        n_max,
        d_max,
        max_power,
        ..SweepOptions::default()
    };
    let records = py.detach(|| sweep(&opts)).map_err(err)?;
    to_py(py, &Value::Array(records.iter().map(|r| r.to_json()).collect()))
}

#[pyfunction]
fn worked_examples(py: Python<'_>) -> PyResult<Py<PyAny>> {
    to_py(py, &serialize(&lexseg::worked_examples::worked_examples().map_err(err)?))
}

#[pyfunction]
#[pyo3(signature = (cases = 1000, seed = 0))]
fn run_lemmas(py: Python<'_>, cases: usize, seed: u64) -> PyResult<Py<PyAny>> {
    to_py(py, &serialize(&lexseg::lemmas::run_all_lemmas(cases, seed).map_err(err)?))
}

#[pymodule]
#[pyo3(name = "lexseg")]
fn lexseg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMonomial>()?;
    m.add_class::<PyLexSegment>()?;
    m.add_function(wrap_pyfunction!(standard_tableau, m)?)?;
    m.add_function(wrap_pyfunction!(py_standard_representation, m)?)?;
    m.add_function(wrap_pyfunction!(py_is_standard_pair, m)?)?;
    m.add_function(wrap_pyfunction!(py_veronese_gb, m)?)?;
    m.add_function(wrap_pyfunction!(py_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(worked_examples, m)?)?;
    m.add_function(wrap_pyfunction!(run_lemmas, m)?)?;
    Ok(())
}
