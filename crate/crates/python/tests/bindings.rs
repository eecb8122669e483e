use jacobi_moments_py::jacobi_moments_module;
use pyo3::prelude::*;
use pyo3::types::PyModule;

fn with_module(code: &str) {
    Python::attach(|py| {
        let m = PyModule::new(py, "jacobi_moments").unwrap();
        jacobi_moments_module(&m).unwrap();
        let locals = pyo3::types::PyDict::new(py);
        locals.set_item("jm", m).unwrap();
        let code = std::ffi::CString::new(code).unwrap();
        if let Err(e) = py.run(&code, None, Some(&locals)) {
            e.print(py);
            panic!("python assertion failed");
        }
    });
}

#[test]
fn exact_values_are_fractions() {
    with_module(
        r#"
from fractions import Fraction
assert jm.ik(1, 1, 1, 2) == 1
assert isinstance(jm.ik(2, "1", Fraction(1), 1), Fraction)
assert jm.ik(2, 1, 1, 1) == Fraction(1, 3)
assert jm.ik(3, "3/2", 2, 3) == jm.ik_via_schur(3, Fraction(3, 2), 2, 3)
"#,
    );
}

#[test]
fn rejects_floats_and_reports_domain_errors() {
    with_module(
        r#"
try:
    jm.ik(1, 0.5, 1, 1)
    raise AssertionError("float accepted")
except TypeError:
    pass
try:
    jm.ik(2, -1, 0, 1)
    raise AssertionError("vanishing factor accepted")
except jm.JacobiError as e:
    assert "vanishing" in str(e)
"#,
    );
}

#[test]
fn types_round_trip() {
    with_module(
        r#"
from fractions import Fraction
p = jm.Partition([3, 1])
assert p.parts == [3, 1] and p.weight == 4 and len(p) == 2
assert p == jm.Partition([3, 1]) and hash(p) == hash(jm.Partition([3, 1]))
sp = jm.ScalingParams(0, 0)
assert (sp.a0, sp.b0) == (1, 1)
rf = jm.ik_rf(2, sp)
assert rf(7) == jm.ik(2, 1, 1, 7) / 7
assert rf.limit_at_infinity() == Fraction(3, 8) == jm.ik_limit(2, sp)
assert jm.special_cases(0, 0)[0] == "central-binomial"
"#,
    );
}
