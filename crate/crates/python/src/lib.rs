//! Python bindings. Polynomials and root systems cross the boundary as the
//! same JSON documents the command line reads and writes.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use dunkl_slice::io::{basis_to_value, parse_poly, parse_root_system, serialize_poly};
use dunkl_slice::suite::{self, Selector, SuiteConfig};
use dunkl_slice::{dirac, ops, Error, RootSystem};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn root_system_or_trivial(roots: Option<&str>, m: usize) -> Result<RootSystem, Error> {
    match roots {
        Some(text) => parse_root_system(text),
        None => Ok(RootSystem::trivial(m)),
    }
}

pub fn apply_json(op: &str, poly: &str, roots: Option<&str>) -> Result<String, Error> {
    let p = parse_poly(poly)?;
    let rs = root_system_or_trivial(roots, p.dim())?;
    Ok(serialize_poly(&ops::apply_named(op, &rs, &p)?))
}

pub fn suite_json(selector: &str, m: Option<usize>, roots: Option<&str>, seed: u64, max_degree: usize, max_power: u32, samples: usize) -> Result<(bool, String), Error> {
    let sel: Selector = selector.parse()?;
    let root_system = roots.map(parse_root_system).transpose()?;
    let cfg = SuiteConfig { m, root_system, seed, max_degree, max_power, samples };
    let report = suite::run_suite(sel, &cfg)?;
    Ok((report.passed(), report.to_json()))
}

pub fn basis_json(degree: usize, m: Option<usize>, roots: Option<&str>) -> Result<String, Error> {
    let rs = match (roots, m) {
        (Some(text), _) => parse_root_system(text)?,
        (None, Some(m)) => RootSystem::trivial(m),
        (None, None) => return Err(Error::InvalidRootSystem("give m or a root-system document".into())),
    };
    let b = dirac::monogenic_basis(&rs, degree)?;
    Ok(basis_to_value(&b).to_string())
}

/// Applies a named operator to a polynomial document.
#[pyfunction]
#[pyo3(signature = (op, poly, roots=None))]
fn apply(op: &str, poly: &str, roots: Option<&str>) -> PyResult<String> {
    apply_json(op, poly, roots).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (poly, roots))]
fn intertwine(poly: &str, roots: &str) -> PyResult<String> {
    apply_json("intertwine", poly, Some(roots)).map_err(py_err)
}

#[pyfunction]
fn fueter(poly: &str) -> PyResult<String> {
    apply_json("fueter", poly, None).map_err(py_err)
}

/// Returns (passed, report JSON).
#[pyfunction]
#[pyo3(signature = (selector, m=None, roots=None, seed=0, max_degree=4, max_power=8, samples=8))]
fn run_suite(
    selector: &str,
    m: Option<usize>,
    roots: Option<&str>,
    seed: u64,
    max_degree: usize,
    max_power: u32,
    samples: usize,
) -> PyResult<(bool, String)> {
    suite_json(selector, m, roots, seed, max_degree, max_power, samples).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (degree, m=None, roots=None))]
fn basis(degree: usize, m: Option<usize>, roots: Option<&str>) -> PyResult<String> {
    basis_json(degree, m, roots).map_err(py_err)
}

#[pyfunction]
fn operator_names() -> Vec<String> {
    ops::operator_names()
}

#[pyfunction]
fn version() -> &'static str {
    env!("CARGO_PKG_VERSION")
}

#[pymodule]
#[pyo3(name = "dunkl_slice")]
fn dunkl_slice_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(apply, m)?)?;
    m.add_function(wrap_pyfunction!(intertwine, m)?)?;
    m.add_function(wrap_pyfunction!(fueter, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(basis, m)?)?;
    m.add_function(wrap_pyfunction!(operator_names, m)?)?;
    m.add_function(wrap_pyfunction!(version, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_helpers() {
        let x3 = r#"{"m":3,"terms":[{"exp":[0,0,0,1],"blade":[],"coeff":"1"}]}"#;
        let roots = r#"{"m":3,"positive_roots":[["1","0","0"],["0","1","0"],["0","0","1"]],"kappa":["0","0","-1"]}"#;
        assert_eq!(
            apply_json("dunkl:3", x3, Some(roots)).unwrap(),
            r#"{"m":3,"terms":[{"exp":[0,0,0,0],"blade":[],"coeff":"-1"}]}"#
        );
        assert!(apply_json("dunkl:3", "{", None).is_err());
        let (ok, _) = suite_json("clifford", Some(2), None, 1, 3, 3, 2).unwrap();
        assert!(ok);
        assert!(basis_json(1, None, None).is_err());
        assert!(basis_json(1, Some(2), None).unwrap().contains("\"degree\":1"));
    }
}
