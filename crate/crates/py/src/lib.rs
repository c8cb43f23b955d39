//! Python bindings: the main types and operations of the workbench,
//! exposed as the `trisphere` extension module.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use trisphere::algebra as alg;
use trisphere::binform as bf;
use trisphere::cyclo::CycloNum;
use trisphere::groups::{FiniteSubgroup, GroupName};
use trisphere::invariants as inv;
use trisphere::report;
use trisphere::sphere as sph;
use trisphere::Error;

fn convert(e: Error) -> PyErr {
    match e {
        Error::Certification(msg) => PyRuntimeError::new_err(msg),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn parse_group(name: &str, n: Option<u32>) -> PyResult<GroupName> {
    let g = match (name, n) {
        ("cyclic", Some(n)) => GroupName::Cyclic(n),
        ("binary-dihedral", Some(n)) => GroupName::BinaryDihedral(n),
        ("binary-tetrahedral", None) => GroupName::BinaryTetrahedral,
        ("binary-octahedral", None) => GroupName::BinaryOctahedral,
        ("binary-icosahedral", None) => GroupName::BinaryIcosahedral,
        ("cyclic" | "binary-dihedral", None) => {
            return Err(PyValueError::new_err(format!("{name} needs n")))
        }
        (other, Some(_)) if matches!(other, "binary-tetrahedral" | "binary-octahedral" | "binary-icosahedral") => {
            return Err(PyValueError::new_err(format!("{name} takes no n")))
        }
        _ => return Err(PyValueError::new_err(format!("unknown group {name}"))),
    };
    Ok(g)
}

/// An exact element of the cyclotomic field Q(zeta_120).
#[pyclass(name = "CycloNum", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyCycloNum(CycloNum);

#[pymethods]
impl PyCycloNum {
    #[staticmethod]
    fn zero() -> Self {
        PyCycloNum(CycloNum::zero())
    }

    #[staticmethod]
    fn one() -> Self {
        PyCycloNum(CycloNum::one())
    }

    #[staticmethod]
    fn rational(num: i64, den: i64) -> PyResult<Self> {
        if den == 0 {
            return Err(PyValueError::new_err("zero denominator"));
        }
        Ok(PyCycloNum(CycloNum::from_ratio(num, den)))
    }

    #[staticmethod]
    fn integer(n: i64) -> Self {
        PyCycloNum(CycloNum::from_integer(n))
    }

    /// zeta_120^k.
    #[staticmethod]
    fn zeta(k: i64) -> Self {
        PyCycloNum(CycloNum::zeta_pow(k))
    }

    /// An n-th root of unity zeta_n^k; n must divide 120.
    #[staticmethod]
    fn root_of_unity(n: u32, k: i64) -> PyResult<Self> {
        CycloNum::root_of_unity(n, k).map(PyCycloNum).map_err(convert)
    }

    #[staticmethod]
    fn i() -> Self {
        PyCycloNum(CycloNum::i())
    }

    #[staticmethod]
    fn sqrt2() -> Self {
        PyCycloNum(CycloNum::sqrt2())
    }

    #[staticmethod]
    fn sqrt3() -> Self {
        PyCycloNum(CycloNum::sqrt3())
    }

    #[staticmethod]
    fn sqrt5() -> Self {
        PyCycloNum(CycloNum::sqrt5())
    }

    fn __add__(&self, other: &Self) -> Self {
        PyCycloNum(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyCycloNum(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyCycloNum(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        PyCycloNum(-&self.0)
    }

    fn inv(&self) -> PyResult<Self> {
        self.0.inv().map(PyCycloNum).map_err(convert)
    }

    fn conj(&self) -> Self {
        PyCycloNum(self.0.conj())
    }

    fn pow(&self, e: u64) -> Self {
        PyCycloNum(self.0.pow(e))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_rational(&self) -> bool {
        self.0.is_rational()
    }

    /// Numerical embedding (re, im); reports only, never decisions.
    fn approx(&self) -> (f64, f64) {
        self.0.approx()
    }

    fn __repr__(&self) -> String {
        format!("CycloNum({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// A homogeneous binary form in (s, t).
#[pyclass(name = "BinaryForm", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyBinaryForm(bf::BinaryForm);

#[pymethods]
impl PyBinaryForm {
    #[staticmethod]
    fn zero(degree: usize) -> Self {
        PyBinaryForm(bf::BinaryForm::zero(degree))
    }

    /// c * s^a t^b.
    #[staticmethod]
    fn monomial(c: &PyCycloNum, a: usize, b: usize) -> Self {
        PyBinaryForm(bf::BinaryForm::monomial(c.0.clone(), a, b))
    }

    /// s^n + t^n.
    #[staticmethod]
    fn power_sum(n: usize) -> Self {
        PyBinaryForm(bf::BinaryForm::power_sum(n))
    }

    /// s^n - t^n.
    #[staticmethod]
    fn power_difference(n: usize) -> Self {
        PyBinaryForm(bf::BinaryForm::power_difference(n))
    }

    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn coeff(&self, a: usize) -> PyResult<PyCycloNum> {
        if a > self.0.degree() {
            return Err(PyValueError::new_err("coefficient index out of range"));
        }
        Ok(PyCycloNum(self.0.coeff(a).clone()))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, other: &Self) -> PyResult<Self> {
        self.0.add(&other.0).map(PyBinaryForm).map_err(convert)
    }

    fn mul(&self, other: &Self) -> Self {
        PyBinaryForm(self.0.mul(&other.0))
    }

    fn scale(&self, c: &PyCycloNum) -> Self {
        PyBinaryForm(self.0.scale(&c.0))
    }

    fn diff_s(&self) -> Self {
        PyBinaryForm(self.0.diff_s())
    }

    fn diff_t(&self) -> Self {
        PyBinaryForm(self.0.diff_t())
    }

    /// The scalar c with other = c * self, when it exists.
    fn proportionality_to(&self, other: &Self) -> Option<PyCycloNum> {
        self.0.proportionality_to(&other.0).map(PyCycloNum)
    }

    fn __repr__(&self) -> String {
        format!("BinaryForm({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// A polynomial function on the 3-sphere in canonical form.
#[pyclass(name = "SphereFunction", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySphereFunction(sph::SphereFunction);

#[pymethods]
impl PySphereFunction {
    #[staticmethod]
    fn from_binary_form(f: &PyBinaryForm) -> Self {
        PySphereFunction(sph::SphereFunction::from_binary_form(&f.0))
    }

    /// c * s^a t^b sbar^c tbar^d, reduced on the sphere.
    #[staticmethod]
    fn monomial(coeff: &PyCycloNum, a: u16, b: u16, c: u16, d: u16) -> Self {
        PySphereFunction(sph::SphereFunction::monomial(coeff.0.clone(), [a, b, c, d]))
    }

    fn add(&self, other: &Self) -> Self {
        PySphereFunction(self.0.add(&other.0))
    }

    fn mul(&self, other: &Self) -> Self {
        PySphereFunction(self.0.mul(&other.0))
    }

    fn conj(&self) -> Self {
        PySphereFunction(self.0.conj())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn num_terms(&self) -> usize {
        self.0.num_terms()
    }

    fn __repr__(&self) -> String {
        format!("SphereFunction({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// A spin-j family of sphere functions grown from a highest weight.
#[pyclass(name = "Multiplet", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMultiplet(sph::Multiplet);

#[pymethods]
impl PyMultiplet {
    #[staticmethod]
    fn from_highest_weight(hw: &PyBinaryForm) -> Self {
        PyMultiplet(sph::Multiplet::from_highest_weight(&hw.0))
    }

    fn two_j(&self) -> u32 {
        self.0.two_j()
    }

    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn component(&self, l: usize) -> PyResult<PySphereFunction> {
        if l >= self.0.dim() {
            return Err(PyValueError::new_err("component index out of range"));
        }
        Ok(PySphereFunction(self.0.component(l).clone()))
    }

    fn __repr__(&self) -> String {
        format!("Multiplet(two_j={}, dim={})", self.0.two_j(), self.0.dim())
    }
}

/// A certified finite subgroup of SU(2).
#[pyclass(name = "FiniteSubgroup", frozen)]
struct PyFiniteSubgroup(FiniteSubgroup);

#[pymethods]
impl PyFiniteSubgroup {
    fn order(&self) -> usize {
        self.0.order()
    }

    fn name(&self) -> String {
        self.0.name.to_string()
    }

    fn center_size(&self) -> usize {
        self.0.center().len()
    }

    /// Dimension of the degree-d invariant forms by exact character
    /// averaging.
    fn molien_dim(&self, d: usize) -> PyResult<usize> {
        self.0.molien_dim(d, None).map_err(convert)
    }

    fn is_invariant(&self, f: &PyBinaryForm) -> PyResult<bool> {
        self.0.is_invariant(&f.0).map_err(convert)
    }

    /// Order of the character of a semi-invariant form; None when the form
    /// is not semi-invariant.
    fn character_order(&self, f: &PyBinaryForm) -> PyResult<Option<u32>> {
        Ok(self.0.character_of(&f.0).map_err(convert)?.map(|c| c.order()))
    }

    fn __repr__(&self) -> String {
        format!("FiniteSubgroup({}, order={})", self.0.name, self.0.order())
    }
}

/// The fundamental (semi-)invariant system of one group.
#[pyclass(name = "InvariantSystem", frozen)]
struct PyInvariantSystem(inv::InvariantSystem);

#[pymethods]
impl PyInvariantSystem {
    fn seed(&self) -> PyBinaryForm {
        PyBinaryForm(self.0.seed.form.clone())
    }

    fn hessian_form(&self) -> PyBinaryForm {
        PyBinaryForm(self.0.hessian_form.form.clone())
    }

    fn cross_form(&self) -> Option<PyBinaryForm> {
        self.0.cross_form.as_ref().map(|nf| PyBinaryForm(nf.form.clone()))
    }

    fn extra(&self) -> Option<PyBinaryForm> {
        self.0.extra.as_ref().map(|nf| PyBinaryForm(nf.form.clone()))
    }

    /// Degrees of the fully invariant generators.
    fn invariant_degrees(&self) -> Vec<usize> {
        self.0
            .invariant_generators
            .iter()
            .map(|g| g.degree())
            .collect()
    }

    /// The syzygy as (degree, [(a, b, c), ...], [CycloNum, ...]).
    fn syzygy(&self) -> PyResult<(usize, Vec<(u32, u32, u32)>, Vec<PyCycloNum>)> {
        let s = inv::syzygy(&self.0).map_err(convert)?;
        Ok((
            s.degree,
            s.monomials.clone(),
            s.coefficients.iter().cloned().map(PyCycloNum).collect(),
        ))
    }

    fn __repr__(&self) -> String {
        format!("InvariantSystem({})", self.0.group.name)
    }
}

/// Builds and certifies one of the five families; n selects the order
/// parameter for the cyclic and binary dihedral cases.
#[pyfunction]
#[pyo3(signature = (name, n=None))]
fn build_group(name: &str, n: Option<u32>) -> PyResult<PyFiniteSubgroup> {
    let g = parse_group(name, n)?;
    FiniteSubgroup::build(g).map(PyFiniteSubgroup).map_err(convert)
}

/// The fundamental invariant system of a group.
#[pyfunction]
fn fundamental(group: &PyFiniteSubgroup) -> PyResult<PyInvariantSystem> {
    inv::fundamental(&group.0).map(PyInvariantSystem).map_err(convert)
}

/// The k-th transvectant of two binary forms.
#[pyfunction]
fn transvectant(f: &PyBinaryForm, g: &PyBinaryForm, k: u32) -> PyResult<PyBinaryForm> {
    bf::transvectant(&f.0, &g.0, k).map(PyBinaryForm).map_err(convert)
}

#[pyfunction]
fn hessian(f: &PyBinaryForm) -> PyResult<PyBinaryForm> {
    bf::hessian(&f.0).map(PyBinaryForm).map_err(convert)
}

#[pyfunction]
fn cross(f: &PyBinaryForm, g: &PyBinaryForm) -> PyResult<PyBinaryForm> {
    bf::cross(&f.0, &g.0).map(PyBinaryForm).map_err(convert)
}

/// Applies one of the six generator actions: "LeftZ", "LeftRaise",
/// "LeftLower", "RightZ", "RightRaise", "RightLower".
#[pyfunction]
fn apply_generator(which: &str, f: &PySphereFunction) -> PyResult<PySphereFunction> {
    let gen = match which {
        "LeftZ" => sph::Generator::LeftZ,
        "LeftRaise" => sph::Generator::LeftRaise,
        "LeftLower" => sph::Generator::LeftLower,
        "RightZ" => sph::Generator::RightZ,
        "RightRaise" => sph::Generator::RightRaise,
        "RightLower" => sph::Generator::RightLower,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown generator {other}"
            )))
        }
    };
    Ok(PySphereFunction(sph::apply_generator(gen, &f.0)))
}

/// Highest weight of the spin (j1 + j2 - k) part of a product of two
/// multiplets, reduced on the sphere.
#[pyfunction]
fn cg_highest(m1: &PyMultiplet, m2: &PyMultiplet, k: u32) -> PyResult<PySphereFunction> {
    sph::cg_highest(&m1.0, &m2.0, k)
        .map(PySphereFunction)
        .map_err(convert)
}

/// Runs the verification battery for a group and returns the JSON report
/// as a string (parse with json.loads).
#[pyfunction]
#[pyo3(signature = (name, n=None, max_degree=60))]
fn verify_json(name: &str, n: Option<u32>, max_degree: usize) -> PyResult<String> {
    let g = parse_group(name, n)?;
    let rep = alg::verify_group(g, max_degree).map_err(convert)?;
    Ok(report::to_pretty_string(&report::group_report(&rep)))
}

#[pymodule]
#[pyo3(name = "trisphere")]
fn trisphere_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCycloNum>()?;
    m.add_class::<PyBinaryForm>()?;
    m.add_class::<PySphereFunction>()?;
    m.add_class::<PyMultiplet>()?;
    m.add_class::<PyFiniteSubgroup>()?;
    m.add_class::<PyInvariantSystem>()?;
    m.add_function(wrap_pyfunction!(build_group, m)?)?;
    m.add_function(wrap_pyfunction!(fundamental, m)?)?;
    m.add_function(wrap_pyfunction!(transvectant, m)?)?;
    m.add_function(wrap_pyfunction!(hessian, m)?)?;
    m.add_function(wrap_pyfunction!(cross, m)?)?;
    m.add_function(wrap_pyfunction!(apply_generator, m)?)?;
    m.add_function(wrap_pyfunction!(cg_highest, m)?)?;
    m.add_function(wrap_pyfunction!(verify_json, m)?)?;
    Ok(())
}
