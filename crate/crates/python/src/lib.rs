//! Python bindings: `bolword.Word` and `bolword.BolLoop`.

use std::cmp::Ordering;
use std::sync::Arc;

use pyo3::basic::CompareOp;
use pyo3::exceptions::{PyRuntimeError, PyTimeoutError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use bolword::verify::{run_suite, Suite, SuiteOptions};
use bolword::word::{spine, star_set, transpose_t, transpose_tt};
use bolword::{Alphabet, BolLoop as CoreLoop, Budget, Error, LoopElement, Notation};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => PyTimeoutError::new_err(e.to_string()),
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn notation_of(name: &str) -> PyResult<Notation> {
    match name {
        "nested" => Ok(Notation::Nested),
        "compact" => Ok(Notation::Compact),
        other => Err(PyValueError::new_err(format!(
            "unknown notation `{other}`; expected `nested` or `compact`"
        ))),
    }
}

/// A non-associative word over an alphabet.
#[pyclass(frozen, skip_from_py_object, name = "Word", module = "bolword")]
#[derive(Clone)]
struct PyWord {
    word: bolword::Word,
    alphabet: Alphabet,
}

impl PyWord {
    fn wrap(&self, word: bolword::Word) -> PyWord {
        PyWord {
            word,
            alphabet: self.alphabet.clone(),
        }
    }

    fn text(&self) -> String {
        bolword::render(&self.word, &self.alphabet, Notation::Nested)
    }
}

#[pymethods]
impl PyWord {
    #[new]
    fn new(text: &str, alphabet: &str) -> PyResult<PyWord> {
        let alphabet = Alphabet::new(alphabet).map_err(py_err)?;
        let word = bolword::parse(text, &alphabet).map_err(py_err)?;
        Ok(PyWord { word, alphabet })
    }

    #[pyo3(signature = (notation = "nested"))]
    fn render(&self, notation: &str) -> PyResult<String> {
        Ok(bolword::render(
            &self.word,
            &self.alphabet,
            notation_of(notation)?,
        ))
    }

    fn is_identity(&self) -> bool {
        self.word.is_identity()
    }

    fn is_reduced(&self) -> bool {
        bolword::in_w(&self.word)
    }

    fn normalize(&self) -> PyWord {
        self.wrap(bolword::pi(&self.word).into_word())
    }

    fn spine(&self) -> PyResult<Vec<PyWord>> {
        let sp = spine(&self.word).map_err(py_err)?;
        Ok(sp.factors().iter().map(|f| self.wrap(f.clone())).collect())
    }

    fn transpose_t(&self) -> PyResult<PyWord> {
        Ok(self.wrap(transpose_t(&self.word).map_err(py_err)?))
    }

    fn transpose_tt(&self) -> PyResult<PyWord> {
        Ok(self.wrap(transpose_tt(&self.word).map_err(py_err)?))
    }

    fn star(&self) -> PyResult<Vec<PyWord>> {
        let set = star_set(&self.word).map_err(py_err)?;
        Ok(set.into_iter().map(|w| self.wrap(w)).collect())
    }

    fn __len__(&self) -> usize {
        self.word.len()
    }

    fn __str__(&self) -> String {
        self.text()
    }

    fn __repr__(&self) -> String {
        format!("Word({:?}, {:?})", self.text(), self.alphabet.as_string())
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.word.hash(&mut h);
        h.finish()
    }

    fn __richcmp__(&self, other: &PyWord, op: CompareOp) -> bool {
        op.matches(self.word.cmp(&other.word))
    }
}

/// The free Bol loop of exponent two over an alphabet. Words go in and come
/// out as strings.
#[pyclass(frozen, name = "BolLoop", module = "bolword")]
struct PyLoop {
    inner: Arc<CoreLoop>,
    notation: Notation,
}

impl PyLoop {
    fn show(&self, w: &bolword::Word) -> String {
        bolword::render(w, self.inner.alphabet(), self.notation)
    }

    fn word(&self, text: &str) -> PyResult<bolword::Word> {
        bolword::parse(text, self.inner.alphabet()).map_err(py_err)
    }

    fn element(&self, text: &str) -> PyResult<LoopElement> {
        self.inner.parse_element(text).map_err(py_err)
    }
}

#[pymethods]
impl PyLoop {
    #[new]
    #[pyo3(signature = (alphabet, notation = "nested"))]
    fn new(alphabet: &str, notation: &str) -> PyResult<PyLoop> {
        let alphabet = Alphabet::new(alphabet).map_err(py_err)?;
        Ok(PyLoop {
            inner: Arc::new(CoreLoop::new(alphabet)),
            notation: notation_of(notation)?,
        })
    }

    #[getter]
    fn alphabet(&self) -> String {
        self.inner.alphabet().as_string()
    }

    fn parse(&self, text: &str) -> PyResult<PyWord> {
        Ok(PyWord {
            word: self.word(text)?,
            alphabet: self.inner.alphabet().clone(),
        })
    }

    fn normalize(&self, text: &str) -> PyResult<String> {
        Ok(self.show(bolword::pi(&self.word(text)?).word()))
    }

    fn in_w(&self, text: &str) -> PyResult<bool> {
        Ok(bolword::in_w(&self.word(text)?))
    }

    fn in_d(&self, text: &str) -> PyResult<bool> {
        self.inner.cache().in_d(&self.word(text)?).map_err(py_err)
    }

    fn in_r(&self, text: &str) -> PyResult<bool> {
        self.inner.cache().in_r(&self.word(text)?).map_err(py_err)
    }

    fn in_b(&self, text: &str) -> PyResult<bool> {
        Ok(self.inner.cache().in_b(&self.word(text)?))
    }

    fn mul(&self, x: &str, y: &str) -> PyResult<String> {
        let p = self
            .inner
            .mul(&self.element(x)?, &self.element(y)?)
            .map_err(py_err)?;
        Ok(self.show(p.word()))
    }

    fn rdiv(&self, b: &str, a: &str) -> PyResult<String> {
        let q = self
            .inner
            .rdiv(&self.element(b)?, &self.element(a)?)
            .map_err(py_err)?;
        Ok(self.show(q.word()))
    }

    /// The `x` with `a∘x = b` among elements of length at most `bound`, or `None`.
    #[pyo3(signature = (a, b, bound = None))]
    fn ldiv(&self, a: &str, b: &str, bound: Option<usize>) -> PyResult<Option<String>> {
        let (a, b) = (self.element(a)?, self.element(b)?);
        let bound = bound.unwrap_or(a.word().len().max(b.word().len()) + 1);
        let q = self.inner.ldiv(&a, &b, bound).map_err(py_err)?;
        Ok(q.map(|q| self.show(q.word())))
    }

    /// Half of the canonical palindromic form.
    fn canon(&self, g: &str) -> PyResult<Vec<String>> {
        let g = self.element(g)?;
        if g.is_identity() {
            return Err(py_err(Error::IdentityInput("canon")));
        }
        let form = self.inner.symmetric_form(&g).map_err(py_err)?;
        Ok(form.half().iter().map(|y| self.show(y)).collect())
    }

    /// `set` is one of `W` (exact length), `D`, `R`, `B` (up to the length).
    fn enumerate(&self, set: &str, max_len: usize) -> PyResult<Vec<String>> {
        let cache = self.inner.cache();
        let words = match set {
            "W" | "w" => cache.enumerate_w(max_len),
            "D" | "d" => cache.enumerate_d(max_len),
            "R" | "r" => cache.enumerate_r(max_len),
            "B" | "b" => cache.enumerate_b(max_len),
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown set `{other}`; expected W, D, R or B"
                )))
            }
        };
        Ok(words.iter().map(|w| self.show(w)).collect())
    }

    /// -1, 0 or 1.
    fn compare(&self, u: &str, v: &str) -> PyResult<i8> {
        let ord = bolword::word::compare(&self.word(u)?, &self.word(v)?).map_err(py_err)?;
        Ok(match ord {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        })
    }

    fn transpose<'py>(&self, py: Python<'py>, y: &str) -> PyResult<Bound<'py, PyDict>> {
        let y = self.word(y)?;
        let sp = spine(&y).map_err(py_err)?;
        let d = PyDict::new(py);
        let factors: Vec<String> = sp.factors().iter().map(|f| self.show(f)).collect();
        d.set_item("spine", factors)?;
        d.set_item("norm", sp.norm())?;
        d.set_item("t", self.show(&transpose_t(&y).map_err(py_err)?))?;
        d.set_item("tt", self.show(&transpose_tt(&y).map_err(py_err)?))?;
        let star: Vec<String> = star_set(&y)
            .map_err(py_err)?
            .iter()
            .map(|w| self.show(w))
            .collect();
        d.set_item("star", star)?;
        Ok(d)
    }

    #[pyo3(signature = (
        suite,
        max_len = 3,
        samples = 0,
        sample_len = 5,
        seed = 0,
        half_len = 3,
        factor_len = 5,
        generators = 3,
        budget_ms = None
    ))]
    #[allow(clippy::too_many_arguments)]
    fn check<'py>(
        &self,
        py: Python<'py>,
        suite: &str,
        max_len: usize,
        samples: usize,
        sample_len: usize,
        seed: u64,
        half_len: usize,
        factor_len: usize,
        generators: usize,
        budget_ms: Option<u64>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let suite: Suite = suite.parse().map_err(PyValueError::new_err)?;
        let opts = SuiteOptions {
            max_len,
            sample_len,
            samples,
            seed,
            half_len,
            factor_len,
            generators,
        };
        let budget = budget_ms.map(Budget::millis).unwrap_or_default();
        let inner = self.inner.clone();
        let report = py
            .detach(move || run_suite(&inner, suite, &opts, &budget))
            .map_err(py_err)?;
        let d = PyDict::new(py);
        d.set_item("property", &report.property)?;
        d.set_item("passed", report.is_pass())?;
        d.set_item("cases", report.cases)?;
        d.set_item("skipped", report.skipped)?;
        d.set_item("failures", &report.failures)?;
        d.set_item("failure_count", report.failure_count)?;
        d.set_item("notes", &report.notes)?;
        d.set_item("elapsed_ms", report.elapsed_ms)?;
        d.set_item("bounds", &report.universe.bounds)?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!("BolLoop({:?})", self.inner.alphabet().as_string())
    }
}

#[pymodule(name = "bolword")]
fn init_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWord>()?;
    m.add_class::<PyLoop>()?;
    Ok(())
}
