//! Curve invariants and the quasihomogeneity verdicts.
//!
//! The objects in play:
//!
//! * the module generated over the algebra by the Euler derivative of the
//!   maximal ideal, and the plain linear image of the maximal ideal under
//!   the Euler derivative (no module closure);
//! * the Jacobian ideal of a complete-intersection presentation, generated
//!   by the maximal minors of the Jacobian matrix along the branches;
//! * the colengths `ρ = ℓ(End(J⁻¹)/A)` and `ρ′ = ℓ(End(M⁻¹)/A)`.
//!
//! A non-smooth curve is quasihomogeneous iff the Euler image of the maximal
//! ideal is already a module (the two Euler objects coincide), iff a unit of
//! the normalization multiplies the Euler module onto the maximal ideal;
//! for Gorenstein curves these are further equivalent to `ρ′ = 1`, and for
//! complete intersections `ρ = ρ′` with quasihomogeneity equivalent to
//! `ρ = 1`. [`qh_report`] evaluates every applicable criterion and treats
//! any disagreement as an internal error, since the equivalences are
//! theorems.

use crate::algebra::{verify_equations, AlgebraModel};
use crate::error::Error;
use crate::ideal::{FracIdeal, IsoVerdict};
use crate::linalg::{nullspace, SubspaceBasis};
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::semigroup::SemigroupTable;
use crate::series::{MultiSeries, TruncatedSeries};
use crate::Result;
use num::{BigInt, Signed, Zero};

/// The module generated over the algebra by the Euler derivative `t·d/dt`
/// of the maximal ideal.
pub fn euler_module<'m>(model: &'m AlgebraModel) -> Result<FracIdeal<'m>> {
    let m = model.maximal_ideal();
    let gens: Vec<MultiSeries> = (0..m.dim()).map(|k| m.row_series(k).euler_derivative()).collect();
    FracIdeal::from_generators(model, gens)
}

/// The linear image of the maximal ideal under the Euler derivative, as a
/// plain subspace (no module closure).
pub fn euler_subspace(model: &AlgebraModel) -> SubspaceBasis {
    let m = model.maximal_ideal();
    let mut s = SubspaceBasis::zero(m.window().clone());
    for k in 0..m.dim() {
        let v = m.row_series(k).euler_derivative();
        // derivatives of window polynomials stay inside the window
        s.insert_series(&v).expect("Euler derivative fits the window");
    }
    s
}

/// Whether the Euler image of the maximal ideal is already the full Euler
/// module (criterion: every Zariski differential is exact).
pub fn euler_criterion(model: &AlgebraModel) -> Result<bool> {
    let module = euler_module(model)?;
    let span = euler_subspace(model);
    let padded = module
        .subspace()
        .reembed(span.window().clone(), module.tail())?;
    Ok(padded == span)
}

/// The Jacobian ideal of a complete-intersection curve: all maximal minors
/// of the Jacobian matrix of the equations, evaluated along the branches.
pub fn jacobian_ideal<'m>(model: &'m AlgebraModel) -> Result<FracIdeal<'m>> {
    let spec = model.spec().ok_or(Error::NoEquations)?;
    if !spec.is_complete_intersection() {
        return Err(Error::NoEquations);
    }
    let n = spec.coord_count();
    let k = spec.equations.len();
    let max_n = *model.moduli().iter().max().unwrap();
    if k > 0 && !verify_equations(spec, 2 * max_n)? {
        return Err(Error::EquationsFailVerification);
    }
    let order = 3 * max_n + 4;
    let coords: Vec<MultiSeries> = (0..n).map(|j| spec.coordinate(j, order)).collect::<Result<_>>()?;
    let mut partials: Vec<Vec<MultiSeries>> = Vec::with_capacity(k);
    for f in &spec.equations {
        partials.push((0..n).map(|j| f.partial(j).eval_multi(&coords)).collect());
    }
    let r = model.branch_count();
    let mut gens = Vec::with_capacity(n);
    for dropped in 0..n {
        let cols: Vec<usize> = (0..n).filter(|&j| j != dropped).collect();
        let mut branches = Vec::with_capacity(r);
        for b in 0..r {
            let mat: Vec<Vec<TruncatedSeries>> = (0..k)
                .map(|a| cols.iter().map(|&j| partials[a][j].branch(b).clone()).collect())
                .collect();
            branches.push(det(&mat));
        }
        gens.push(MultiSeries::new(branches));
    }
    FracIdeal::from_generators(model, gens)
}

fn det(m: &[Vec<TruncatedSeries>]) -> TruncatedSeries {
    let n = m.len();
    if n == 0 {
        return TruncatedSeries::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = TruncatedSeries::zero_exact();
    for j in 0..n {
        let minor: Vec<Vec<TruncatedSeries>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, s)| s.clone()).collect())
            .collect();
        let term = m[0][j].mul(&det(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// `ρ = ℓ(End(J⁻¹)/A)`; zero exactly for smooth curves.
pub fn rho(model: &AlgebraModel) -> Result<usize> {
    let j = jacobian_ideal(model)?;
    let e = j.dual()?.endomorphism_ring()?;
    e.length_over(&FracIdeal::ring(model)?)
}

/// `ρ′ = ℓ(End(M⁻¹)/A)` for the Euler module `M`. On Gorenstein curves the
/// equal colength of `End(M)` is verified as a cross-check.
pub fn rho_prime(model: &AlgebraModel) -> Result<usize> {
    let m = euler_module(model)?;
    let a = FracIdeal::ring(model)?;
    let through_dual = m.dual()?.endomorphism_ring()?.length_over(&a)?;
    let table = SemigroupTable::for_curve(model)?;
    if table.is_symmetric() {
        let direct = m.endomorphism_ring()?.length_over(&a)?;
        if direct != through_dual {
            return Err(Error::CriteriaDisagree(format!(
                "End(M) and End(M⁻¹) have different colengths ({direct} vs {through_dual}) on a Gorenstein curve"
            )));
        }
    }
    Ok(through_dual)
}

/// Colengths reported alongside the verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lengths {
    /// `ℓ(Ã/A)`, the delta invariant.
    pub normalization: usize,
    /// `ℓ(𝔪⁻¹/A)`; equals 1 exactly on Gorenstein curves.
    pub dual_maximal: usize,
    /// `ℓ(End(M)/A)` for the Euler module.
    pub endo_euler: usize,
}

/// Everything the analyzer knows about one curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub name: Option<String>,
    pub branches: usize,
    pub moduli: Vec<i64>,
    pub delta: Vec<i64>,
    pub tau: Vec<i64>,
    pub gamma_box: Vec<Vec<i64>>,
    pub smooth: bool,
    pub gorenstein: bool,
    pub complete_intersection: bool,
    /// Criterion: the Euler image of the maximal ideal is a module.
    pub qh_by_euler_space: bool,
    /// Criterion: a unit of the normalization maps the Euler module onto
    /// the maximal ideal.
    pub qh_by_unit_isomorphism: bool,
    pub unit_witness: Option<MultiSeries>,
    /// Criterion (Gorenstein): `ρ′ = 1`.
    pub qh_by_rho_prime: bool,
    pub quasihomogeneous: bool,
    pub rho: Option<usize>,
    pub rho_prime: usize,
    pub syntactic_weights: Option<Vec<Rational>>,
    pub lengths: Lengths,
}

/// Evaluates every applicable quasihomogeneity criterion, asserting the
/// theorem-guaranteed equivalences between them.
pub fn qh_report(model: &AlgebraModel) -> Result<InvariantReport> {
    let table = SemigroupTable::for_curve(model)?;
    let gorenstein = table.is_symmetric();
    let a = FracIdeal::ring(model)?;
    let m_ideal = FracIdeal::maximal_ideal(model)?;
    let tilde = FracIdeal::normalization(model)?;
    let euler = euler_module(model)?;
    let end_euler = euler.endomorphism_ring()?;

    let lengths = Lengths {
        normalization: tilde.length_over(&a)?,
        dual_maximal: m_ideal.dual()?.length_over(&a)?,
        endo_euler: end_euler.length_over(&a)?,
    };
    // Delgado's symmetry and the colength-one test must agree
    if gorenstein != (lengths.dual_maximal == 1) {
        return Err(Error::CriteriaDisagree(
            "semigroup symmetry and ℓ(𝔪⁻¹/A) = 1 disagree".into(),
        ));
    }

    let qh_by_euler_space = euler_criterion(model)?;
    let iso = euler.is_isomorphic_to(&m_ideal)?;
    let qh_by_unit_isomorphism = iso.holds(true);
    let unit_witness = match &iso {
        IsoVerdict::Isomorphic { witness, unit: true } => Some(witness.clone()),
        _ => None,
    };
    let rho_prime_val = rho_prime(model)?;
    let qh_by_rho_prime = rho_prime_val == 1;

    let spec = model.spec();
    let complete_intersection = spec.map_or(false, |s| s.is_complete_intersection());
    let rho_val = match spec {
        Some(s) if s.is_complete_intersection() => Some(rho(model)?),
        _ => None,
    };
    let syntactic_weights = spec.and_then(|s| {
        if s.has_equations() {
            detect_weights(&s.equations, s.coord_count())
        } else {
            None
        }
    });

    // End(𝔪) ⊆ End(M), on every curve
    let end_m = m_ideal.endomorphism_ring()?;
    if !end_euler.contains_ideal(&end_m)? {
        return Err(Error::CriteriaDisagree(
            "End(maximal ideal) is not contained in End(Euler module)".into(),
        ));
    }

    if model.is_smooth() {
        if rho_prime_val != 0 || rho_val.map_or(false, |r| r != 0) {
            return Err(Error::CriteriaDisagree("smooth curve with nonzero rho".into()));
        }
        return Ok(InvariantReport {
            name: spec.map(|s| s.name.clone()),
            branches: model.branch_count(),
            moduli: model.moduli().to_vec(),
            delta: model.delta().to_vec(),
            tau: table.tau().to_vec(),
            gamma_box: table.box_members().cloned().collect(),
            smooth: true,
            gorenstein,
            complete_intersection,
            qh_by_euler_space,
            qh_by_unit_isomorphism,
            unit_witness,
            qh_by_rho_prime,
            quasihomogeneous: true,
            rho: rho_val,
            rho_prime: rho_prime_val,
            syntactic_weights,
            lengths,
        });
    }

    // the Kunz–Ruppert criteria agree on every curve
    if qh_by_euler_space != qh_by_unit_isomorphism {
        return Err(Error::CriteriaDisagree(format!(
            "Euler-space criterion ({qh_by_euler_space}) and unit-isomorphism criterion ({qh_by_unit_isomorphism}) disagree"
        )));
    }
    // Gorenstein curves: quasihomogeneous iff ρ′ = 1
    if gorenstein && qh_by_euler_space != qh_by_rho_prime {
        return Err(Error::CriteriaDisagree(format!(
            "Gorenstein curve: Euler criterion ({qh_by_euler_space}) and ρ′ = 1 ({qh_by_rho_prime}) disagree"
        )));
    }
    // complete intersections: ρ = ρ′ and quasihomogeneity iff ρ = 1
    if let Some(rv) = rho_val {
        if rv != rho_prime_val {
            return Err(Error::CriteriaDisagree(format!("ρ = {rv} but ρ′ = {rho_prime_val} on a complete intersection")));
        }
        if qh_by_euler_space != (rv == 1) {
            return Err(Error::CriteriaDisagree("complete intersection: ρ = 1 disagrees with the Euler criterion".into()));
        }
        // the Jacobian ideal and the Euler module are isomorphic, with equal
        // endomorphism rings
        let j = jacobian_ideal(model)?;
        if !j.is_isomorphic_to(&euler)?.holds(false) {
            return Err(Error::CriteriaDisagree("Jacobian ideal is not isomorphic to the Euler module".into()));
        }
        let end_j = j.endomorphism_ring()?;
        if !end_j.equals(&end_euler)? {
            return Err(Error::CriteriaDisagree("End(J) differs from End(M) on a complete intersection".into()));
        }
    }
    // a positive syntactic weight vector certifies quasihomogeneity
    if syntactic_weights.is_some() && !qh_by_euler_space {
        return Err(Error::CriteriaDisagree("syntactic weights found on a curve the semantic criteria reject".into()));
    }

    Ok(InvariantReport {
        name: spec.map(|s| s.name.clone()),
        branches: model.branch_count(),
        moduli: model.moduli().to_vec(),
        delta: model.delta().to_vec(),
        tau: table.tau().to_vec(),
        gamma_box: table.box_members().cloned().collect(),
        smooth: false,
        gorenstein,
        complete_intersection,
        qh_by_euler_space,
        qh_by_unit_isomorphism,
        unit_witness,
        qh_by_rho_prime,
        quasihomogeneous: qh_by_euler_space,
        rho: rho_val,
        rho_prime: rho_prime_val,
        syntactic_weights,
        lengths,
    })
}

/// One normalization step: replaces the algebra by `End(J⁻¹)`. Smooth
/// curves (principal Jacobian ideal) are fixed points and are returned
/// unchanged. The instance identity `End(J⁻¹) = (J·J⁻¹)⁻¹` is verified.
pub fn normalization_step(model: &AlgebraModel) -> Result<AlgebraModel> {
    let j = jacobian_ideal(model)?;
    if j.is_principal()? {
        return Ok(model.clone());
    }
    let jd = j.dual()?;
    let e = jd.endomorphism_ring()?;
    let via_product = j.product(&jd)?.dual()?;
    if !e.equals(&via_product)? {
        return Err(Error::CriteriaDisagree(
            "End(J⁻¹) differs from (J·J⁻¹)⁻¹".into(),
        ));
    }
    let window = crate::linalg::Window::nonnegative(model.moduli());
    let basis = e.subspace().reembed(window, e.tail())?;
    AlgebraModel::from_subring(model, basis)
}

/// Searches for positive rational weights making every equation
/// weight-homogeneous (of one degree per equation). A result certifies
/// quasihomogeneity in the given coordinates; `None` certifies nothing.
pub fn detect_weights(equations: &[MultiPoly], nvars: usize) -> Option<Vec<Rational>> {
    let mut constraints: Vec<Vec<Rational>> = Vec::new();
    for f in equations {
        let monomials: Vec<&Vec<u32>> = f.terms().map(|(e, _)| e).collect();
        if let Some(first) = monomials.first() {
            for e in &monomials[1..] {
                constraints.push(
                    (0..nvars)
                        .map(|j| Rational::from_integer(BigInt::from(e[j] as i64 - first[j] as i64)))
                        .collect(),
                );
            }
        }
    }
    let kernel = nullspace(&constraints, nvars);
    let coeffs = positive_combination(&kernel)?;
    let mut w = vec![Rational::zero(); nvars];
    for (c, basis_vec) in coeffs.iter().zip(&kernel) {
        for (wi, b) in w.iter_mut().zip(basis_vec) {
            *wi += c * b;
        }
    }
    if w.iter().any(|x| !x.is_positive()) {
        return None;
    }
    let primitive = crate::rational::primitive_positive_scaling(&w)?;
    Some(primitive.into_iter().map(Rational::from_integer).collect())
}

/// Finds coefficients `c` with `Σ c_l·basis_l` strictly positive in every
/// coordinate, by Fourier–Motzkin elimination on the strict homogeneous
/// system. Exact and deterministic.
fn positive_combination(basis: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let k = basis.len();
    if k == 0 {
        return None;
    }
    let n = basis[0].len();
    // inequality rows over c: for each coordinate j, Σ_l basis_l[j]·c_l > 0
    let rows: Vec<Vec<Rational>> = (0..n).map(|j| (0..k).map(|l| basis[l][j].clone()).collect()).collect();
    // levels[v] = system over variables c_0..c_v
    let mut levels: Vec<Vec<Vec<Rational>>> = vec![Vec::new(); k];
    levels[k - 1] = rows;
    for v in (1..k).rev() {
        let mut next: Vec<Vec<Rational>> = Vec::new();
        let mut lower: Vec<&Vec<Rational>> = Vec::new();
        let mut upper: Vec<&Vec<Rational>> = Vec::new();
        for row in &levels[v] {
            if row.iter().all(|c| c.is_zero()) {
                return None; // 0 > 0
            }
            if row[v].is_zero() {
                next.push(row.clone());
            } else if row[v].is_positive() {
                lower.push(row);
            } else {
                upper.push(row);
            }
        }
        for p in &lower {
            for q in &upper {
                // combine c_v > -L/p_v with c_v < Q/(-q_v)
                let mut row: Vec<Rational> = (0..k)
                    .map(|i| &q[i] * &p[v] - &p[i] * &q[v])
                    .collect();
                row[v] = Rational::zero();
                if row.iter().all(|c| c.is_zero()) {
                    return None;
                }
                next.push(row);
            }
        }
        levels[v - 1] = next;
    }
    // solve for c_0
    let mut c = vec![Rational::zero(); k];
    let mut sign = 0i32;
    for row in &levels[0] {
        if row[0].is_zero() {
            return None;
        }
        let s = if row[0].is_positive() { 1 } else { -1 };
        if sign == 0 {
            sign = s;
        } else if sign != s {
            return None;
        }
    }
    c[0] = Rational::from_integer(if sign < 0 { (-1).into() } else { 1.into() });
    // back-substitute upwards
    for v in 1..k {
        let mut low: Option<Rational> = None;
        let mut high: Option<Rational> = None;
        for row in &levels[v] {
            if row[v].is_zero() {
                continue;
            }
            let s: Rational = (0..v).map(|i| &row[i] * &c[i]).sum();
            let bound = -s / row[v].clone();
            if row[v].is_positive() {
                low = Some(low.map_or(bound.clone(), |l: Rational| if bound > l { bound.clone() } else { l }));
            } else {
                high = Some(high.map_or(bound.clone(), |h: Rational| if bound < h { bound.clone() } else { h }));
            }
        }
        c[v] = match (low, high) {
            (Some(l), Some(h)) => {
                if l >= h {
                    return None;
                }
                (l + h) / Rational::from_integer(2.into())
            }
            (Some(l), None) => l + Rational::from_integer(1.into()),
            (None, Some(h)) => h - Rational::from_integer(1.into()),
            (None, None) => Rational::from_integer(1.into()),
        };
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ModelOptions;
    use crate::corpus;
    use crate::rational::rat_int;

    fn model_for(spec: &crate::algebra::CurveSpec) -> AlgebraModel {
        AlgebraModel::build(spec, &ModelOptions::default()).unwrap()
    }

    #[test]
    fn euler_module_of_cusp_is_maximal_ideal() {
        let model = model_for(&corpus::cusp());
        let m = euler_module(&model).unwrap();
        let max = FracIdeal::maximal_ideal(&model).unwrap();
        assert!(m.equals(&max).unwrap());
        assert!(euler_criterion(&model).unwrap());
    }

    #[test]
    fn euler_module_of_node_is_maximal_ideal() {
        let model = model_for(&corpus::node());
        let m = euler_module(&model).unwrap();
        let max = FracIdeal::maximal_ideal(&model).unwrap();
        assert!(m.equals(&max).unwrap());
        assert!(euler_criterion(&model).unwrap());
    }

    #[test]
    fn cusp_jacobian_is_shifted_maximal_ideal() {
        let model = model_for(&corpus::cusp());
        let j = jacobian_ideal(&model).unwrap();
        let m = FracIdeal::maximal_ideal(&model).unwrap();
        let t = MultiSeries::new(vec![TruncatedSeries::monomial(1, rat_int(1))]);
        assert!(j.equals(&m.scale_by(&t).unwrap()).unwrap());
    }

    #[test]
    fn node_jacobian_is_maximal_ideal() {
        let model = model_for(&corpus::node());
        let j = jacobian_ideal(&model).unwrap();
        let m = FracIdeal::maximal_ideal(&model).unwrap();
        assert!(j.equals(&m).unwrap());
    }

    #[test]
    fn rho_values_on_plane_corpus() {
        assert_eq!(rho(&model_for(&corpus::cusp())).unwrap(), 1);
        assert_eq!(rho(&model_for(&corpus::node())).unwrap(), 1);
        assert_eq!(rho(&model_for(&corpus::branch34())).unwrap(), 1);
        assert_eq!(rho(&model_for(&corpus::smooth_line())).unwrap(), 0);
    }

    #[test]
    fn rho_prime_values() {
        assert_eq!(rho_prime(&model_for(&corpus::cusp())).unwrap(), 1);
        assert_eq!(rho_prime(&model_for(&corpus::node())).unwrap(), 1);
        assert_eq!(rho_prime(&model_for(&corpus::smooth_line())).unwrap(), 0);
        // the non-Gorenstein space curve is quasihomogeneous with ρ′ = 2
        assert_eq!(rho_prime(&model_for(&corpus::space_curve())).unwrap(), 2);
    }

    #[test]
    fn jacobian_requires_equations() {
        let model = model_for(&corpus::space_curve());
        assert!(matches!(jacobian_ideal(&model), Err(Error::NoEquations)));
    }

    #[test]
    fn jacobian_rejects_wrong_equations() {
        let mut spec = corpus::cusp();
        spec.equations = vec![MultiPoly::parse("y^2 - x^2", &spec.variables).unwrap()];
        let model = model_for(&spec);
        assert!(matches!(jacobian_ideal(&model), Err(Error::EquationsFailVerification)));
    }

    #[test]
    fn weight_detection_examples() {
        let vars = ["x", "y"].map(String::from).to_vec();
        let cusp_eq = vec![MultiPoly::parse("y^2 - x^3", &vars).unwrap()];
        let w = detect_weights(&cusp_eq, 2).unwrap();
        assert_eq!(w, vec![rat_int(2), rat_int(3)]);

        let node_eq = vec![MultiPoly::parse("x*y", &vars).unwrap()];
        let w = detect_weights(&node_eq, 2).unwrap();
        assert!(w.iter().all(|x| x.is_positive()));

        // x^4 + x*y^4 + y^5 admits no positive weights
        let neq = vec![MultiPoly::parse("x^4 + x*y^4 + y^5", &vars).unwrap()];
        assert_eq!(detect_weights(&neq, 2), None);

        // and neither does the transformed appendix equation
        let app = vec![MultiPoly::parse("x^4 - y*(x+y)^4", &vars).unwrap()];
        assert_eq!(detect_weights(&app, 2), None);
    }

    #[test]
    fn qh_reports_on_quasihomogeneous_corpus() {
        for spec in [corpus::cusp(), corpus::node(), corpus::branch34()] {
            let model = model_for(&spec);
            let report = qh_report(&model).unwrap();
            assert!(report.gorenstein, "{}", spec.name);
            assert!(report.quasihomogeneous, "{}", spec.name);
            assert_eq!(report.rho, Some(1), "{}", spec.name);
            assert_eq!(report.rho_prime, 1, "{}", spec.name);
            assert!(report.syntactic_weights.is_some(), "{}", spec.name);
            assert_eq!(report.lengths.dual_maximal, 1, "{}", spec.name);
        }
    }

    #[test]
    fn qh_report_on_space_curve() {
        let report = qh_report(&model_for(&corpus::space_curve())).unwrap();
        assert!(!report.gorenstein);
        assert!(report.quasihomogeneous);
        assert_eq!(report.rho, None);
        assert_eq!(report.rho_prime, 2);
        assert_eq!(report.lengths.dual_maximal, 2);
    }

    #[test]
    fn qh_report_on_smooth_line() {
        let report = qh_report(&model_for(&corpus::smooth_line())).unwrap();
        assert!(report.smooth);
        assert!(report.quasihomogeneous);
        assert_eq!(report.rho, Some(0));
        assert_eq!(report.rho_prime, 0);
    }

    #[test]
    fn normalization_step_examples() {
        // the cusp normalizes in one step
        let model = model_for(&corpus::cusp());
        let next = normalization_step(&model).unwrap();
        assert!(next.is_smooth());
        assert_eq!(next.delta(), &[0]);
        assert_eq!(next.basis().dim() - model.basis().dim(), 1);

        // a smooth curve is a fixed point
        let line = model_for(&corpus::smooth_line());
        let same = normalization_step(&line).unwrap();
        assert_eq!(same.basis(), line.basis());
    }
}
