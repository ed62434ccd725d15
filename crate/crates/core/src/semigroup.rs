//! Value semigroups and the Delgado/Kunz symmetry test.
//!
//! The multivaluation set of a subspace is computed on a finite box by a
//! sweep of coefficient-functional kernels: a point `α` is a value of `S`
//! exactly when on the subspace `S_{≥α} = {x ∈ S : ν(x) ≥ α}` none of the
//! per-branch coefficient functionals at `α_i` vanishes identically. Over an
//! infinite field a finite union of proper subspaces cannot cover a space,
//! so checking each functional separately is exact.
//!
//! A curve's semigroup is stored on the box `∏ [0, δ_i]`; membership outside
//! the box is decided by capping coordinates at `δ` (the conductor makes
//! every coordinate at or above `δ_i` freely adjustable).

use std::collections::BTreeSet;

use crate::algebra::AlgebraModel;
use crate::error::Error;
use crate::linalg::SubspaceBasis;
use crate::Result;

/// Lattice points of `∏ [lo_i, hi_i]` (inclusive) in lexicographic order.
pub fn box_points(lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    assert_eq!(lo.len(), hi.len());
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = lo.to_vec();
    loop {
        out.push(cur.clone());
        let mut k = lo.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < hi[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = lo[k];
        }
    }
}

/// The multivaluation set `ν(S ∩ D(L))` of a subspace, restricted to the
/// inclusive box `∏ [lo_i, hi_i]`.
///
/// The box must sit strictly inside the subspace window (each functional at
/// `α_i` needs a column, and everything below the box must be constrainable).
pub fn gamma_of_subspace(s: &SubspaceBasis, lo: &[i64], hi: &[i64]) -> Result<BTreeSet<Vec<i64>>> {
    let r = s.window().branch_count();
    assert_eq!(lo.len(), r);
    assert_eq!(hi.len(), r);
    for i in 0..r {
        if lo[i] < s.window().lo()[i] || hi[i] >= s.window().hi()[i] {
            return Err(Error::BoxExceedsModuli);
        }
    }
    let mut out = BTreeSet::new();
    let mut alpha = vec![0i64; r];
    scan(s, lo, hi, 0, &mut alpha, &mut out);
    Ok(out)
}

fn scan(
    constrained: &SubspaceBasis,
    lo: &[i64],
    hi: &[i64],
    branch: usize,
    alpha: &mut Vec<i64>,
    out: &mut BTreeSet<Vec<i64>>,
) {
    let r = lo.len();
    if branch == r {
        let hit = (0..r).all(|i| !constrained.functional_is_zero(alpha[i], i));
        if hit {
            out.insert(alpha.clone());
        }
        return;
    }
    // constrain ν_branch ≥ lo_branch first
    let mut t = constrained.clone();
    for e in t.window().lo()[branch]..lo[branch] {
        t = t.kernel_of_coefficient(e, branch);
    }
    for a in lo[branch]..=hi[branch] {
        alpha[branch] = a;
        scan(&t, lo, hi, branch + 1, alpha, out);
        t = t.kernel_of_coefficient(a, branch);
    }
}

/// A Δ-set query: `Δ(alpha)`, or `Δ_i(alpha)` when `branch` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaQuery {
    pub alpha: Vec<i64>,
    pub branch: Option<usize>,
}

impl DeltaQuery {
    pub fn full(alpha: Vec<i64>) -> Self {
        DeltaQuery { alpha, branch: None }
    }

    pub fn at_branch(alpha: Vec<i64>, i: usize) -> Self {
        DeltaQuery { alpha, branch: Some(i) }
    }
}

/// The value semigroup of a curve on the conductor box, with cap-saturated
/// queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupTable {
    delta: Vec<i64>,
    tau: Vec<i64>,
    members: BTreeSet<Vec<i64>>,
}

impl SemigroupTable {
    /// Computes `Γ` of the curve algebra on `∏ [0, δ_i]` and validates the
    /// structural facts every curve semigroup satisfies.
    pub fn for_curve(model: &AlgebraModel) -> Result<Self> {
        let delta = model.delta().to_vec();
        let lo = vec![0i64; delta.len()];
        let members = gamma_of_subspace(model.basis(), &lo, &delta)?;
        let tau: Vec<i64> = delta.iter().map(|&d| d - 1).collect();
        let table = SemigroupTable { delta, tau, members };

        assert!(table.members.contains(&lo), "0 must be a semigroup member");
        assert!(
            table.members.contains(&table.delta),
            "the capped conductor must be a semigroup member"
        );
        if model.is_local() {
            // no nonzero member of a local ring's semigroup has a zero component
            for m in &table.members {
                assert!(
                    m.iter().all(|&x| x == 0) || m.iter().all(|&x| x >= 1),
                    "semigroup box shape violated at {m:?}"
                );
            }
        }
        // closure under capped addition
        for a in &table.members {
            for b in &table.members {
                let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                assert!(
                    table.contains_capped(&sum),
                    "semigroup not closed under capped addition at {a:?} + {b:?}"
                );
            }
        }
        Ok(table)
    }

    pub fn branch_count(&self) -> usize {
        self.delta.len()
    }

    pub fn delta(&self) -> &[i64] {
        &self.delta
    }

    /// `τ = δ − (1, …, 1)`.
    pub fn tau(&self) -> &[i64] {
        &self.tau
    }

    /// The members of the box `∏ [0, δ_i]`, sorted.
    pub fn box_members(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.members.iter()
    }

    /// Membership of an arbitrary lattice point: negative coordinates are
    /// never members; coordinates at or above `δ_i` are capped to `δ_i`.
    pub fn contains_capped(&self, alpha: &[i64]) -> bool {
        if alpha.iter().any(|&a| a < 0) {
            return false;
        }
        let capped: Vec<i64> = alpha.iter().zip(&self.delta).map(|(&a, &d)| a.min(d)).collect();
        self.members.contains(&capped)
    }

    /// Whether `Δ(α)` (or `Δ_i(α)`) meets the semigroup.
    pub fn delta_set_meets(&self, q: &DeltaQuery) -> bool {
        assert_eq!(q.alpha.len(), self.delta.len());
        match q.branch {
            Some(i) => self.delta_i_meets(&q.alpha, i),
            None => (0..self.delta.len()).any(|i| self.delta_i_meets(&q.alpha, i)),
        }
    }

    fn delta_i_meets(&self, alpha: &[i64], i: usize) -> bool {
        if alpha[i] < 0 {
            // the fixed coordinate is negative, so no member qualifies
            return false;
        }
        let r = self.delta.len();
        let mut lo = Vec::with_capacity(r);
        let mut hi = Vec::with_capacity(r);
        for j in 0..r {
            if j == i {
                let c = alpha[i].min(self.delta[i]);
                lo.push(c);
                hi.push(c);
            } else {
                // β_j > α_j, capped at δ_j; points beyond δ_j all cap to δ_j
                lo.push((alpha[j] + 1).clamp(0, self.delta[j]));
                hi.push(self.delta[j]);
            }
        }
        box_points(&lo, &hi).iter().any(|p| self.members.contains(p))
    }

    /// The Delgado/Kunz symmetry test: `α ∈ Γ ⇔ Δ(τ−α) ∩ Γ = ∅` over the
    /// conductor box plus a margin of width 1. Together with the conductor
    /// containment and cap saturation this decides the condition on all of
    /// `ℤ^r`. A curve is Gorenstein exactly when this returns true.
    pub fn is_symmetric(&self) -> bool {
        let lo: Vec<i64> = self.delta.iter().map(|_| -1).collect();
        let hi: Vec<i64> = self.delta.iter().map(|&d| d + 1).collect();
        for alpha in box_points(&lo, &hi) {
            let lhs = self.contains_capped(&alpha);
            let beta: Vec<i64> = self.tau.iter().zip(&alpha).map(|(t, a)| t - a).collect();
            let rhs = !self.delta_set_meets(&DeltaQuery::full(beta));
            if lhs != rhs {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ModelOptions;
    use crate::corpus;

    fn table_for(spec: &crate::algebra::CurveSpec) -> SemigroupTable {
        let model = AlgebraModel::build(spec, &ModelOptions::default()).unwrap();
        SemigroupTable::for_curve(&model).unwrap()
    }

    #[test]
    fn cusp_semigroup() {
        let t = table_for(&corpus::cusp());
        assert_eq!(t.delta(), &[2]);
        let members: Vec<Vec<i64>> = t.box_members().cloned().collect();
        assert_eq!(members, vec![vec![0], vec![2]]);
        assert!(t.contains_capped(&[5]));
        assert!(!t.contains_capped(&[1]));
        assert!(!t.contains_capped(&[-1]));
    }

    #[test]
    fn node_semigroup() {
        let t = table_for(&corpus::node());
        assert_eq!(t.delta(), &[1, 1]);
        let members: Vec<Vec<i64>> = t.box_members().cloned().collect();
        assert_eq!(members, vec![vec![0, 0], vec![1, 1]]);
        assert!(t.contains_capped(&[3, 7]));
        assert!(!t.contains_capped(&[0, 3]));
    }

    #[test]
    fn space_curve_semigroup() {
        let t = table_for(&corpus::space_curve());
        assert_eq!(t.delta(), &[3]);
        let members: Vec<Vec<i64>> = t.box_members().cloned().collect();
        assert_eq!(members, vec![vec![0], vec![3]]);
    }

    #[test]
    fn delta_set_examples() {
        let cusp = table_for(&corpus::cusp());
        // Δ(τ) ∩ Γ = ∅
        assert!(!cusp.delta_set_meets(&DeltaQuery::full(cusp.tau().to_vec())));

        let node = table_for(&corpus::node());
        assert!(!node.delta_set_meets(&DeltaQuery::full(node.tau().to_vec())));
        // fixed negative coordinate: every Δ_i((-1,-1)) misses Γ
        for i in 0..2 {
            assert!(!node.delta_set_meets(&DeltaQuery::at_branch(vec![-1, -1], i)));
        }
        // Δ((0,0)) = points with exactly one zero coordinate: misses Γ
        assert!(!node.delta_set_meets(&DeltaQuery::full(vec![0, 0])));
        // Δ_2((-1,0)) meets Γ at (0,0)
        assert!(node.delta_set_meets(&DeltaQuery::at_branch(vec![-1, 0], 1)));
    }

    #[test]
    fn symmetry_verdicts() {
        assert!(table_for(&corpus::cusp()).is_symmetric());
        assert!(table_for(&corpus::node()).is_symmetric());
        assert!(table_for(&corpus::branch34()).is_symmetric());
        assert!(!table_for(&corpus::space_curve()).is_symmetric());
        assert!(table_for(&corpus::smooth_line()).is_symmetric());
        assert!(table_for(&corpus::appendix_curve()).is_symmetric());
    }

    #[test]
    fn kunz_reduction_matches_classical_test_for_one_branch() {
        for spec in [corpus::cusp(), corpus::branch34(), corpus::space_curve(), corpus::appendix_curve()] {
            let t = table_for(&spec);
            let tau = t.tau()[0];
            let classical = (0..=tau.max(0)).all(|a| t.contains_capped(&[a]) == !t.contains_capped(&[tau - a]));
            assert_eq!(t.is_symmetric(), classical, "curve {}", spec.name);
        }
    }

    #[test]
    fn gamma_of_tail_is_full_box() {
        // the conductor tail alone has every value in its shifted box
        let model = AlgebraModel::build(&corpus::cusp(), &ModelOptions::default()).unwrap();
        let n = model.moduli()[0];
        let window = crate::linalg::Window::nonnegative(&[n]);
        let mut tail = SubspaceBasis::zero(window);
        for e in 2..n {
            let v = tail.monomial_vec(e, 0).unwrap();
            tail.insert_vec(v);
        }
        let g = gamma_of_subspace(&tail, &[2], &[n - 1]).unwrap();
        assert_eq!(g.len() as i64, n - 2);
    }

    #[test]
    fn box_exceeding_moduli_is_rejected() {
        let model = AlgebraModel::build(&corpus::cusp(), &ModelOptions::default()).unwrap();
        let n = model.moduli()[0];
        assert!(matches!(
            gamma_of_subspace(model.basis(), &[0], &[n]),
            Err(Error::BoxExceedsModuli)
        ));
    }

    #[test]
    fn maximal_ideal_gamma_of_node() {
        let model = AlgebraModel::build(&corpus::node(), &ModelOptions::default()).unwrap();
        let m = model.maximal_ideal();
        let g = gamma_of_subspace(&m, &[0, 0], &[1, 1]).unwrap();
        let members: Vec<Vec<i64>> = g.into_iter().collect();
        assert_eq!(members, vec![vec![1, 1]]);
    }
}
