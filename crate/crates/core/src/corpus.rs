//! Built-in example curves.
//!
//! These are the standard fixtures used by the test suite, the benchmarks,
//! and the CLI's `verify-appendix` self-test.

use crate::algebra::{CurveSpec, ParamSeries};
use crate::poly::{MultiPoly, UniPoly};
use crate::rational::rat_int;

fn vars(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn eqs(sources: &[&str], variables: &[String]) -> Vec<MultiPoly> {
    sources
        .iter()
        .map(|s| MultiPoly::parse(s, variables).expect("corpus equation parses"))
        .collect()
}

fn mono(e: usize) -> ParamSeries {
    ParamSeries::monomial(e, rat_int(1))
}

/// The cusp `(t², t³)` with equation `y² − x³`.
pub fn cusp() -> CurveSpec {
    let variables = vars(&["x", "y"]);
    let equations = eqs(&["y^2 - x^3"], &variables);
    CurveSpec {
        name: "cusp".into(),
        variables,
        param: vec![vec![mono(2), mono(3)]],
        equations,
    }
}

/// The node: two smooth branches `(t, 0)` and `(0, s)` with equation `x·y`.
pub fn node() -> CurveSpec {
    let variables = vars(&["x", "y"]);
    let equations = eqs(&["x*y"], &variables);
    CurveSpec {
        name: "node".into(),
        variables,
        param: vec![
            vec![mono(1), ParamSeries::zero()],
            vec![ParamSeries::zero(), mono(1)],
        ],
        equations,
    }
}

/// The branch `(t³, t⁴)` with equation `x⁴ − y³`.
pub fn branch34() -> CurveSpec {
    let variables = vars(&["x", "y"]);
    let equations = eqs(&["x^4 - y^3"], &variables);
    CurveSpec {
        name: "branch34".into(),
        variables,
        param: vec![vec![mono(3), mono(4)]],
        equations,
    }
}

/// The monomial space curve `(t³, t⁴, t⁵)`; no equations supplied (it is not
/// a complete intersection).
pub fn space_curve() -> CurveSpec {
    CurveSpec {
        name: "space-curve".into(),
        variables: vars(&["x", "y", "z"]),
        param: vec![vec![mono(3), mono(4), mono(5)]],
        equations: Vec::new(),
    }
}

/// A smooth line `x = t`; one coordinate, no equations.
pub fn smooth_line() -> CurveSpec {
    CurveSpec {
        name: "smooth-line".into(),
        variables: vars(&["x"]),
        param: vec![vec![mono(1)]],
        equations: Vec::new(),
    }
}

/// The non-quasihomogeneous plane curve `x⁴ − y(x+y)⁴ = 0` with
/// normalization `x = t⁵/(1−t)`, `y = t⁴`.
pub fn appendix_curve() -> CurveSpec {
    let variables = vars(&["x", "y"]);
    let equations = eqs(&["x^4 - y*(x+y)^4"], &variables);
    let x = ParamSeries::Rational {
        num: UniPoly::from_terms(&[(5, rat_int(1))]),
        den: UniPoly::new(vec![rat_int(1), rat_int(-1)]),
    };
    CurveSpec {
        name: "appendix".into(),
        variables,
        param: vec![vec![x, mono(4)]],
        equations,
    }
}

/// All corpus curves that admit a full model build, for sweep-style tests.
pub fn all() -> Vec<CurveSpec> {
    vec![cusp(), node(), branch34(), space_curve(), smooth_line(), appendix_curve()]
}
