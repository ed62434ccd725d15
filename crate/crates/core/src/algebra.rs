//! The coordinate ring of a curve as an echelonized subspace of its
//! truncated normalization.
//!
//! A [`CurveSpec`] holds branch parametrizations (exact recipes: polynomials
//! or rational functions, re-expandable at any order) plus optional defining
//! equations. [`AlgebraModel::build`] spans all monomials in the coordinate
//! functions inside `⊕_i k[t_i]/(t_i^(N_i))`, locates the conductor exponent
//! `δ`, and certifies it by recomputing at doubled order. The working moduli
//! leave one conductor of headroom beyond `δ` so the downstream ideal
//! calculus stays exact.

use crate::error::Error;
use crate::linalg::{SubspaceBasis, Window};
use crate::poly::{MultiPoly, UniPoly};
use crate::rational::Rational;
use crate::series::{expand_rational_function, BranchValuation, MultiSeries, TruncatedSeries};
use crate::Result;

/// Exact recipe for one coordinate function on one branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamSeries {
    /// A polynomial in the branch parameter; expands to an exact series.
    Polynomial(UniPoly),
    /// `num/den` with `den(0) ≠ 0`; expandable to any requested order.
    Rational { num: UniPoly, den: UniPoly },
}

impl ParamSeries {
    pub fn zero() -> Self {
        ParamSeries::Polynomial(UniPoly::zero())
    }

    pub fn monomial(e: usize, c: Rational) -> Self {
        ParamSeries::Polynomial(UniPoly::from_terms(&[(e, c)]))
    }

    pub fn expand(&self, order: i64) -> Result<TruncatedSeries> {
        match self {
            ParamSeries::Polynomial(p) => expand_rational_function(p.coeffs(), &[Rational::from_integer(1.into())], order),
            ParamSeries::Rational { num, den } => expand_rational_function(num.coeffs(), den.coeffs(), order),
        }
    }
}

/// A curve given by branch parametrizations, with an optional
/// complete-intersection presentation (`n−1` equations in `n` variables).
#[derive(Debug, Clone)]
pub struct CurveSpec {
    pub name: String,
    pub variables: Vec<String>,
    /// `param[i][j]` = coordinate `j` on branch `i`.
    pub param: Vec<Vec<ParamSeries>>,
    pub equations: Vec<MultiPoly>,
}

impl CurveSpec {
    pub fn branch_count(&self) -> usize {
        self.param.len()
    }

    pub fn coord_count(&self) -> usize {
        self.variables.len()
    }

    pub fn has_equations(&self) -> bool {
        !self.equations.is_empty()
    }

    /// Whether the equations form a complete-intersection presentation.
    pub fn is_complete_intersection(&self) -> bool {
        self.coord_count() >= 1 && self.equations.len() + 1 == self.coord_count()
    }

    /// Expands coordinate `j` as a multi-branch series at the given order.
    pub fn coordinate(&self, j: usize, order: i64) -> Result<MultiSeries> {
        let mut branches = Vec::with_capacity(self.branch_count());
        for row in &self.param {
            branches.push(row[j].expand(order)?);
        }
        Ok(MultiSeries::new(branches))
    }

    fn coordinates(&self, order: i64) -> Result<Vec<MultiSeries>> {
        (0..self.coord_count()).map(|j| self.coordinate(j, order)).collect()
    }

    fn validate(&self, order: i64) -> Result<()> {
        if self.param.is_empty() || self.variables.is_empty() {
            return Err(Error::DegenerateInput("curve needs at least one branch and one coordinate".into()));
        }
        for row in &self.param {
            if row.len() != self.coord_count() {
                return Err(Error::DegenerateInput("every branch must define every coordinate".into()));
            }
        }
        let coords = self.coordinates(order)?;
        for (i, _) in self.param.iter().enumerate() {
            let mut all_zero = true;
            for x in &coords {
                match x.branch(i).valuation() {
                    BranchValuation::Finite(v) => {
                        all_zero = false;
                        if v < 1 {
                            return Err(Error::DegenerateInput(format!(
                                "coordinate does not vanish at the origin on branch {i}"
                            )));
                        }
                    }
                    BranchValuation::Infinity => {}
                    BranchValuation::Unknown => all_zero = false,
                }
            }
            if all_zero {
                return Err(Error::DegenerateInput(format!("branch {i} is parametrized by zero")));
            }
        }
        // reducedness guard: branches must differ within the working order
        for a in 0..self.branch_count() {
            for b in (a + 1)..self.branch_count() {
                let same = coords.iter().all(|x| {
                    x.branch(a).sub(x.branch(b)).is_zero_known()
                });
                if same {
                    return Err(Error::DegenerateInput(format!(
                        "branches {a} and {b} coincide up to the working order"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Verifies that every equation vanishes on every branch modulo `t^order`.
pub fn verify_equations(spec: &CurveSpec, order: i64) -> Result<bool> {
    if !spec.has_equations() {
        return Err(Error::NoEquations);
    }
    let coords = spec.coordinates(order + 2)?;
    for f in &spec.equations {
        let v = f.eval_multi(&coords);
        for (i, b) in v.branches().iter().enumerate() {
            if !b.is_zero_mod(order, i)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Tuning knobs for model construction.
#[derive(Debug, Clone, Copy)]
pub struct ModelOptions {
    /// First truncation order tried.
    pub initial_order: i64,
    /// Cap for the doubling scheme; exceeding it raises `NoStabilization`.
    pub max_order: i64,
}

impl Default for ModelOptions {
    fn default() -> Self {
        ModelOptions { initial_order: 16, max_order: 512 }
    }
}

impl ModelOptions {
    pub fn with_initial_order(order: i64) -> Self {
        ModelOptions { initial_order: order, ..Default::default() }
    }
}

/// The curve algebra realized inside `⊕_i k[t_i]/(t_i^(N_i))`, with a
/// certified conductor.
#[derive(Debug, Clone)]
pub struct AlgebraModel {
    source: Option<CurveSpec>,
    moduli: Vec<i64>,
    basis: SubspaceBasis,
    delta: Vec<i64>,
    smooth: bool,
    stability_certified: bool,
    /// Parametrization-built models are local rings; rings obtained from
    /// endomorphism enlargements need not be.
    local: bool,
}

impl AlgebraModel {
    /// Builds and certifies the model; see the module docs for the scheme.
    pub fn build(spec: &CurveSpec, opts: &ModelOptions) -> Result<Self> {
        let initial = spec_floor(spec, opts.initial_order.max(2))?;
        spec.validate(initial)?;
        let r = spec.branch_count();

        // Phase 1: stabilize the conductor candidate under doubling.
        let max_gen_val = max_generator_valuation(spec, initial)?;
        let mut n = initial;
        let mut prev = conductor_candidate(spec, &vec![n; r], max_gen_val)?;
        let mut delta_hat: Option<Vec<i64>> = None;
        while 2 * n <= opts.max_order {
            let next = conductor_candidate(spec, &vec![2 * n; r], max_gen_val)?;
            if prev == next {
                delta_hat = Some(prev.clone());
                break;
            }
            prev = next;
            n *= 2;
        }
        let mut delta_hat = delta_hat.ok_or(Error::NoStabilization { cap: opts.max_order })?;

        // Phase 2: working moduli with conductor headroom, re-certified.
        loop {
            let moduli: Vec<i64> = delta_hat.iter().map(|&d| (2 * d + max_gen_val + 2).max(3)).collect();
            if moduli.iter().any(|&m| m > opts.max_order) {
                return Err(Error::NoStabilization { cap: opts.max_order });
            }
            let basis = closure(spec, &moduli, max_gen_val)?;
            let delta = conductor_of_basis(&basis, &moduli);
            let doubled: Vec<i64> = moduli.iter().map(|&m| 2 * m).collect();
            let basis2 = closure(spec, &doubled, max_gen_val)?;
            let delta2 = conductor_of_basis(&basis2, &doubled);
            if delta == delta_hat && delta2 == delta_hat {
                let smooth = r == 1 && delta.iter().all(|&d| d == 0);
                return Ok(AlgebraModel {
                    source: Some(spec.clone()),
                    moduli,
                    basis,
                    delta,
                    smooth,
                    stability_certified: true,
                    local: true,
                });
            }
            delta_hat = delta2;
        }
    }

    /// Wraps an already-computed subring of the normalization (for
    /// endomorphism-ring enlargements). The subspace must contain 1 and be
    /// multiplicatively closed; this is checked.
    pub fn from_subring(parent: &AlgebraModel, basis: SubspaceBasis) -> Result<Self> {
        let moduli = parent.moduli.clone();
        let window = Window::nonnegative(&moduli);
        if basis.window() != &window {
            return Err(Error::ModelMismatch);
        }
        let one = basis.vector_of(&MultiSeries::one(basis.window().branch_count()))?;
        if !basis.contains_vec(&one) {
            return Err(Error::ContainmentViolation("subring does not contain 1".into()));
        }
        for a in 0..basis.dim() {
            let sa = basis.row_series(a);
            for b in a..basis.dim() {
                let p = sa.mul(&basis.row_series(b)).truncate_to(&moduli);
                if !basis.contains_series(&p)? {
                    return Err(Error::ContainmentViolation("subspace is not multiplicatively closed".into()));
                }
            }
        }
        let delta = conductor_of_basis(&basis, &moduli);
        let r = moduli.len();
        let smooth = r == 1 && delta.iter().all(|&d| d == 0);
        Ok(AlgebraModel {
            source: None,
            moduli,
            basis,
            delta,
            smooth,
            stability_certified: parent.stability_certified,
            local: false,
        })
    }

    pub fn spec(&self) -> Option<&CurveSpec> {
        self.source.as_ref()
    }

    pub fn branch_count(&self) -> usize {
        self.moduli.len()
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    pub fn basis(&self) -> &SubspaceBasis {
        &self.basis
    }

    pub fn delta(&self) -> &[i64] {
        &self.delta
    }

    pub fn is_smooth(&self) -> bool {
        self.smooth
    }

    pub fn is_certified(&self) -> bool {
        self.stability_certified
    }

    pub fn is_local(&self) -> bool {
        self.local
    }

    /// Recomputes the conductor from the basis; always equals `delta()`.
    pub fn compute_conductor(&self) -> Vec<i64> {
        conductor_of_basis(&self.basis, &self.moduli)
    }

    /// Membership of `x` in the algebra: its reduction against the basis is
    /// zero modulo `t^N`.
    pub fn contains(&self, x: &MultiSeries) -> Result<bool> {
        for b in x.branches() {
            if b.terms().any(|(e, _)| e < 0) {
                return Ok(false);
            }
        }
        self.basis.contains_series(&x.truncate_to(&self.moduli))
    }

    /// The maximal ideal as a subspace: elements with zero constant part on
    /// every branch.
    pub fn maximal_ideal(&self) -> SubspaceBasis {
        let mut s = self.basis.clone();
        for i in 0..self.branch_count() {
            s = s.kernel_of_coefficient(0, i);
        }
        s
    }

    /// Colength of the algebra inside its normalization (the delta
    /// invariant within the moduli).
    pub fn normalization_colength(&self) -> usize {
        let total: i64 = self.moduli.iter().sum();
        total as usize - self.basis.dim()
    }
}

fn spec_floor(spec: &CurveSpec, initial: i64) -> Result<i64> {
    // start high enough that every finite coordinate valuation is visible
    let mut order = initial;
    'grow: loop {
        for row in &spec.param {
            for p in row {
                let s = p.expand(order)?;
                if s.is_zero_known() && !s.is_exact_zero() {
                    order *= 2;
                    if order > (1 << 20) {
                        return Err(Error::DegenerateInput("coordinate vanishes to enormous order".into()));
                    }
                    continue 'grow;
                }
            }
        }
        return Ok(order);
    }
}

fn max_generator_valuation(spec: &CurveSpec, order: i64) -> Result<i64> {
    let coords = spec.coordinates(order)?;
    let mut best = 1;
    for x in &coords {
        for v in x.valuation() {
            if let BranchValuation::Finite(k) = v {
                best = best.max(k);
            }
        }
    }
    Ok(best)
}

/// Spans all monomials in the coordinate functions inside the moduli:
/// a worklist closure. Every vector that enlarged the span gets multiplied
/// by every generator in turn, so on exit the span is multiplicatively
/// closed modulo `t^N`.
fn closure(spec: &CurveSpec, moduli: &[i64], max_gen_val: i64) -> Result<SubspaceBasis> {
    let order = *moduli.iter().max().unwrap() + max_gen_val + 2;
    let gens = spec.coordinates(order)?;
    let window = Window::nonnegative(moduli);
    let mut basis = SubspaceBasis::zero(window);
    let one = MultiSeries::one(spec.branch_count()).truncate_to(moduli);
    basis.insert_series(&one)?;
    let mut queue: Vec<MultiSeries> = vec![one];
    while let Some(x) = queue.pop() {
        for g in &gens {
            let p = x.mul(g).truncate_to(moduli);
            if basis.insert_series(&p)? {
                queue.push(p);
            }
        }
    }
    Ok(basis)
}

/// Minimal `δ` with `t_i^k ∈` basis for all `δ_i ≤ k < N_i`.
fn conductor_of_basis(basis: &SubspaceBasis, moduli: &[i64]) -> Vec<i64> {
    let r = moduli.len();
    let mut delta = Vec::with_capacity(r);
    for i in 0..r {
        let mut d = moduli[i];
        while d > 0 && basis.contains_monomial(d - 1, i) {
            d -= 1;
        }
        delta.push(d);
    }
    delta
}

fn conductor_candidate(spec: &CurveSpec, moduli: &[i64], max_gen_val: i64) -> Result<Vec<i64>> {
    let basis = closure(spec, moduli, max_gen_val)?;
    Ok(conductor_of_basis(&basis, moduli))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn cusp_model() {
        let model = AlgebraModel::build(&corpus::cusp(), &ModelOptions::default()).unwrap();
        assert_eq!(model.delta(), &[2]);
        assert_eq!(model.normalization_colength(), 1);
        assert!(model.is_certified());
        assert!(!model.is_smooth());
    }

    #[test]
    fn node_model() {
        let model = AlgebraModel::build(&corpus::node(), &ModelOptions::default()).unwrap();
        assert_eq!(model.delta(), &[1, 1]);
        assert_eq!(model.normalization_colength(), 1);
    }

    #[test]
    fn space_curve_model() {
        let model = AlgebraModel::build(&corpus::space_curve(), &ModelOptions::default()).unwrap();
        assert_eq!(model.delta(), &[3]);
        assert_eq!(model.normalization_colength(), 2);
    }

    #[test]
    fn smooth_line_model() {
        let model = AlgebraModel::build(&corpus::smooth_line(), &ModelOptions::default()).unwrap();
        assert_eq!(model.delta(), &[0]);
        assert!(model.is_smooth());
        assert_eq!(model.normalization_colength(), 0);
    }

    #[test]
    fn cusp_membership() {
        let model = AlgebraModel::build(&corpus::cusp(), &ModelOptions::default()).unwrap();
        let t2 = MultiSeries::new(vec![TruncatedSeries::monomial(2, Rational::from_integer(1.into()))]);
        let t3 = MultiSeries::new(vec![TruncatedSeries::monomial(3, Rational::from_integer(1.into()))]);
        let t = MultiSeries::new(vec![TruncatedSeries::monomial(1, Rational::from_integer(1.into()))]);
        assert!(model.contains(&t2.add(&t3)).unwrap());
        assert!(!model.contains(&t).unwrap());
        assert!(model.contains(&MultiSeries::one(1)).unwrap());
    }

    #[test]
    fn maximal_ideal_shapes() {
        let cusp = AlgebraModel::build(&corpus::cusp(), &ModelOptions::default()).unwrap();
        let m = cusp.maximal_ideal();
        assert_eq!(m.dim(), cusp.basis().dim() - 1);
        assert!(m.functional_is_zero(0, 0));
        assert!(m.contains_monomial(2, 0));
        assert!(!m.contains_monomial(1, 0));

        let node = AlgebraModel::build(&corpus::node(), &ModelOptions::default()).unwrap();
        let m = node.maximal_ideal();
        assert_eq!(m.dim(), node.basis().dim() - 1);
        assert!(m.contains_monomial(1, 0));
        assert!(m.contains_monomial(1, 1));
    }

    #[test]
    fn verify_equation_examples() {
        assert!(verify_equations(&corpus::cusp(), 24).unwrap());
        assert!(verify_equations(&corpus::node(), 24).unwrap());
        assert!(verify_equations(&corpus::appendix_curve(), 40).unwrap());
        assert!(matches!(verify_equations(&corpus::space_curve(), 24), Err(Error::NoEquations)));

        // a wrong equation is detected
        let mut bad = corpus::cusp();
        bad.equations = vec![MultiPoly::parse("y^2 - x^2", &bad.variables).unwrap()];
        assert!(!verify_equations(&bad, 24).unwrap());
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        let mut zero_branch = corpus::cusp();
        zero_branch.param = vec![vec![ParamSeries::zero(), ParamSeries::zero()]];
        assert!(matches!(
            AlgebraModel::build(&zero_branch, &ModelOptions::default()),
            Err(Error::DegenerateInput(_))
        ));

        let mut dup = corpus::node();
        dup.param[1] = dup.param[0].clone();
        assert!(matches!(
            AlgebraModel::build(&dup, &ModelOptions::default()),
            Err(Error::DegenerateInput(_))
        ));

        // parametrization not landing in the maximal ideal
        let mut unit = corpus::cusp();
        unit.param[0][0] = ParamSeries::Polynomial(UniPoly::from_terms(&[(0, Rational::from_integer(1.into()))]));
        assert!(matches!(
            AlgebraModel::build(&unit, &ModelOptions::default()),
            Err(Error::DegenerateInput(_))
        ));
    }
}
