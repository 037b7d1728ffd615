//! Python bindings: exposes Coxeter systems, subword complexes and the
//! doubling/pipeline machinery as the `subword_complexes` module.
//!
//! Words cross the boundary as lists of 1-based generator indices; group
//! elements are always passed as words and canonicalized inside.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use subword_core::coxeter::CoxeterSystem as CoreSystem;
use subword_core::io::{to_canonical_json, ComplexDoc};
use subword_core::simplicial::SimplicialComplex;
use subword_core::subword::{self, SubwordSpec};
use subword_core::transforms::{self, NilCase, PipelineMode};
use subword_core::words::{self, HeckeReduceOptions, Move, Word};

fn err(e: subword_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_word(letters: Vec<usize>) -> Word {
    Word::new(letters)
}

/// A finite Coxeter system, e.g. `CoxeterSystem("A3")` or
/// `CoxeterSystem("I2(7)")`.
#[pyclass(name = "CoxeterSystem", frozen)]
struct PyCoxeterSystem {
    inner: CoreSystem,
}

#[pymethods]
impl PyCoxeterSystem {
    #[new]
    fn new(descriptor: &str) -> PyResult<Self> {
        Ok(PyCoxeterSystem {
            inner: CoreSystem::parse(descriptor).map_err(err)?,
        })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn group_order(&self) -> u128 {
        self.inner.group_order()
    }

    #[getter]
    fn descriptor(&self) -> String {
        self.inner.descriptor()
    }

    #[getter]
    fn simply_laced(&self) -> bool {
        self.inner.is_simply_laced()
    }

    fn coxeter_matrix(&self) -> Vec<Vec<usize>> {
        self.inner.matrix().rows().to_vec()
    }

    /// The length of the group element expressed by a word.
    fn word_length(&self, word: Vec<usize>) -> PyResult<usize> {
        Ok(self
            .inner
            .element_of_word(&word)
            .map_err(err)?
            .length())
    }

    fn is_reduced(&self, word: Vec<usize>) -> PyResult<bool> {
        words::is_reduced(&self.inner, &to_word(word)).map_err(err)
    }

    /// A reduced word for the Demazure product of the given word.
    fn demazure(&self, word: Vec<usize>) -> PyResult<Vec<usize>> {
        let delta = words::demazure_product(&self.inner, &to_word(word)).map_err(err)?;
        Ok(words::reduced_word(&self.inner, &delta).letters().to_vec())
    }

    /// The lexicographically smallest reduced word of the longest element.
    fn longest_word(&self) -> Vec<usize> {
        words::reduced_word(&self.inner, &self.inner.longest_element())
            .letters()
            .to_vec()
    }

    /// True iff two words express the same group element.
    fn words_equal(&self, a: Vec<usize>, b: Vec<usize>) -> PyResult<bool> {
        Ok(self.inner.element_of_word(&a).map_err(err)?
            == self.inner.element_of_word(&b).map_err(err)?)
    }

    /// The c-sorting word of the element expressed by `w_word`.
    fn c_sorting_word(&self, c: Vec<usize>, w_word: Vec<usize>) -> PyResult<Vec<usize>> {
        let w = self.inner.element_of_word(&w_word).map_err(err)?;
        Ok(words::c_sorting_word(&self.inner, &to_word(c), &w)
            .map_err(err)?
            .letters()
            .to_vec())
    }

    /// All embedded reduced expressions of `rho` in `word`, as sorted
    /// 1-based position lists.
    fn embeddings(&self, word: Vec<usize>, rho_word: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
        let rho = self.inner.element_of_word(&rho_word).map_err(err)?;
        words::enumerate_embeddings(&self.inner, &to_word(word), &rho).map_err(err)
    }

    fn contains_reduced_expression(
        &self,
        word: Vec<usize>,
        rho_word: Vec<usize>,
    ) -> PyResult<bool> {
        let rho = self.inner.element_of_word(&rho_word).map_err(err)?;
        words::contains_reduced_expression(&self.inner, &to_word(word), &rho).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("CoxeterSystem(\"{}\")", self.inner.descriptor())
    }
}

/// A computed subword complex. All invariants are evaluated eagerly at
/// construction.
#[pyclass(name = "SubwordComplex", frozen)]
struct PySubwordComplex {
    system: String,
    word: Vec<usize>,
    rho_word: Vec<usize>,
    complex: SimplicialComplex,
    spherical: bool,
}

impl PySubwordComplex {
    fn build(sys: &CoreSystem, spec: &SubwordSpec) -> PyResult<Self> {
        let complex = subword::subword_complex(sys, spec).map_err(err)?;
        Ok(PySubwordComplex {
            system: sys.descriptor(),
            word: spec.word.letters().to_vec(),
            rho_word: words::reduced_word(sys, &spec.rho).letters().to_vec(),
            spherical: subword::is_spherical(sys, spec).map_err(err)?,
            complex,
        })
    }
}

#[pymethods]
impl PySubwordComplex {
    #[new]
    fn new(system: &PyCoxeterSystem, word: Vec<usize>, rho_word: Vec<usize>) -> PyResult<Self> {
        let spec = SubwordSpec::from_rho_word(
            &system.inner,
            to_word(word),
            &to_word(rho_word),
        )
        .map_err(err)?;
        PySubwordComplex::build(&system.inner, &spec)
    }

    #[getter]
    fn system(&self) -> String {
        self.system.clone()
    }

    #[getter]
    fn word(&self) -> Vec<usize> {
        self.word.clone()
    }

    #[getter]
    fn rho_word(&self) -> Vec<usize> {
        self.rho_word.clone()
    }

    #[getter]
    fn spherical(&self) -> bool {
        self.spherical
    }

    fn facets(&self) -> Vec<Vec<String>> {
        self.complex
            .facets()
            .map(|f| f.iter().cloned().collect())
            .collect()
    }

    fn vertices(&self) -> Vec<String> {
        self.complex.vertices().into_iter().collect()
    }

    fn f_vector(&self) -> Vec<u64> {
        self.complex.f_vector().from_dim_zero()
    }

    fn dim(&self) -> Option<i64> {
        self.complex.dim()
    }

    fn euler_characteristic(&self) -> i64 {
        self.complex.euler_characteristic()
    }

    fn reduced_euler_characteristic(&self) -> i64 {
        self.complex.reduced_euler_characteristic()
    }

    fn is_closed_pseudomanifold(&self) -> PyResult<bool> {
        self.complex.is_closed_pseudomanifold().map_err(err)
    }

    fn is_void(&self) -> bool {
        self.complex.is_void()
    }

    fn is_empty(&self) -> bool {
        self.complex.is_empty_complex()
    }

    /// Canonical JSON of the complex document.
    fn to_json(&self) -> PyResult<String> {
        to_canonical_json(&ComplexDoc::new(&self.complex)).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "SubwordComplex(system=\"{}\", word={:?}, facets={})",
            self.system,
            self.word,
            self.complex.facet_count()
        )
    }
}

/// Verifies the doubling theorem for `(word, rho_word, pos)` and returns a
/// report dict.
#[pyfunction]
fn verify_nil<'py>(
    py: Python<'py>,
    system: &PyCoxeterSystem,
    word: Vec<usize>,
    rho_word: Vec<usize>,
    pos: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let sys = &system.inner;
    let rho = sys.element_of_word(&rho_word).map_err(err)?;
    let report = transforms::verify_nil_theorem(sys, &to_word(word), &rho, pos).map_err(err)?;
    let dict = PyDict::new(py);
    dict.set_item(
        "case",
        match report.case {
            NilCase::Suspension => "suspension",
            NilCase::InverseEdgeSubdivision => "inverse_edge_subdivision",
        },
    )?;
    dict.set_item("doubled_position", report.doubled_position)?;
    dict.set_item("q1", &report.q1)?;
    dict.set_item("q2", &report.q2)?;
    dict.set_item("q0", report.q0.as_deref())?;
    dict.set_item("transform_matches_direct", report.transform_matches_direct)?;
    dict.set_item("case_check", report.case_check)?;
    dict.set_item("link_check_q1", report.link_check_q1)?;
    dict.set_item("link_check_q2", report.link_check_q2)?;
    dict.set_item("ok", report.ok())?;
    Ok(dict)
}

/// Builds and replays the transformation script for `(word, rho_word)`,
/// returning a report dict with the final facets and per-step records.
#[pyfunction]
#[pyo3(signature = (system, word, rho_word, verified = true, seed = None))]
fn run_pipeline<'py>(
    py: Python<'py>,
    system: &PyCoxeterSystem,
    word: Vec<usize>,
    rho_word: Vec<usize>,
    verified: bool,
    seed: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let sys = &system.inner;
    let rho = sys.element_of_word(&rho_word).map_err(err)?;
    let opts = HeckeReduceOptions {
        budget: 1_000_000,
        seed,
    };
    let script = transforms::build_pipeline(sys, &to_word(word), &rho, &opts).map_err(err)?;
    let mode = if verified {
        PipelineMode::Verified
    } else {
        PipelineMode::Fast
    };
    let run = transforms::run_pipeline(sys, &script, mode).map_err(err)?;

    let dict = PyDict::new(py);
    dict.set_item("ok", run.ok)?;
    dict.set_item(
        "start_word",
        script.start.word.letters().to_vec(),
    )?;
    dict.set_item("final_word", run.final_word.letters().to_vec())?;
    let steps = PyList::empty(py);
    for report in &run.steps {
        let step = PyDict::new(py);
        let (op, pos, pair) = match report.step {
            Move::Double { pos } => ("double", pos, None),
            Move::Braid { pos, pair } => ("braid", pos, Some(pair)),
            Move::HeckeNil { pos } => ("hecke_nil", pos, None),
        };
        step.set_item("op", op)?;
        step.set_item("pos", pos)?;
        if let Some((i, j)) = pair {
            step.set_item("pair", (i, j))?;
        }
        step.set_item("word_after", &report.word_after)?;
        step.set_item("verified", report.verified)?;
        steps.append(step)?;
    }
    dict.set_item("steps", steps)?;
    let facets: Vec<Vec<String>> = run
        .final_complex
        .facets()
        .map(|f| f.iter().cloned().collect())
        .collect();
    dict.set_item("final_facets", facets)?;
    dict.set_item(
        "f_vector",
        run.final_complex.f_vector().from_dim_zero(),
    )?;
    Ok(dict)
}

/// The cluster complex `Δ(c·w_o(c); w_o)`; `c` defaults to `1,2,…,n`.
#[pyfunction]
#[pyo3(signature = (system, c = None))]
fn cluster_complex(system: &PyCoxeterSystem, c: Option<Vec<usize>>) -> PyResult<PySubwordComplex> {
    multicluster_complex(system, 1, c)
}

/// The k-cluster complex `Δ(c^k·w_o(c); w_o)`.
#[pyfunction]
#[pyo3(signature = (system, k, c = None))]
fn multicluster_complex(
    system: &PyCoxeterSystem,
    k: usize,
    c: Option<Vec<usize>>,
) -> PyResult<PySubwordComplex> {
    let sys = &system.inner;
    let c = to_word(c.unwrap_or_else(|| (1..=sys.rank()).collect()));
    let spec = subword::multicluster_spec(sys, &c, k).map_err(err)?;
    PySubwordComplex::build(sys, &spec)
}

#[pymodule]
fn subword_complexes(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCoxeterSystem>()?;
    m.add_class::<PySubwordComplex>()?;
    m.add_function(wrap_pyfunction!(verify_nil, m)?)?;
    m.add_function(wrap_pyfunction!(run_pipeline, m)?)?;
    m.add_function(wrap_pyfunction!(cluster_complex, m)?)?;
    m.add_function(wrap_pyfunction!(multicluster_complex, m)?)?;
    Ok(())
}
