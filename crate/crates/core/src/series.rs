//! Truncated power-series arithmetic with exact rational coefficients.
//!
//! A [`TruncatedSeries`] is one branch's Laurent series known modulo `t^k`
//! for an explicit exclusive bound `k`, or known exactly when it is a Laurent
//! polynomial. "Zero up to the truncation order" and "exactly zero" are
//! different values; conflating them is how valuation bugs happen, so the
//! distinction is carried in the [`Trunc`] tag and surfaces in
//! [`BranchValuation::Unknown`].
//!
//! A [`MultiSeries`] is one series per branch, an element of the total ring
//! of fractions the curve lives in; its per-branch vanishing orders form the
//! multivaluation.

use std::fmt;

use crate::error::Error;
use crate::rational::{rational_to_string, Rational};
use crate::Result;
use num::Zero;

/// Precision tag of a series: known modulo `t^k`, or exactly known
/// (a Laurent polynomial, every unstored coefficient is truly zero).
///
/// The derived ordering puts `At(a) < At(b)` for `a < b` and `At(_) < Exact`,
/// so `min` combines precisions of operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Trunc {
    At(i64),
    Exact,
}

impl Trunc {
    pub fn shifted(self, by: i64) -> Trunc {
        match self {
            Trunc::At(k) => Trunc::At(k + by),
            Trunc::Exact => Trunc::Exact,
        }
    }

    /// The bound as a number, if finite.
    pub fn finite(self) -> Option<i64> {
        match self {
            Trunc::At(k) => Some(k),
            Trunc::Exact => None,
        }
    }
}

/// Valuation of one branch component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchValuation {
    /// Least exponent with a nonzero coefficient.
    Finite(i64),
    /// The component is exactly zero.
    Infinity,
    /// All stored coefficients vanish but the series is only known modulo a
    /// finite order; the caller must retry at higher order or fail loudly.
    Unknown,
}

impl BranchValuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            BranchValuation::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, BranchValuation::Finite(_))
    }
}

/// The multivaluation: one [`BranchValuation`] per branch.
pub type Valuation = Vec<BranchValuation>;

/// One branch's power series over ℚ, possibly Laurent-shifted, known modulo
/// `t^order`.
///
/// Stored coefficients cover `low .. low + coeffs.len()`; the first stored
/// coefficient is nonzero (normalization trims zeros at both ends, keeping
/// valuations O(1) and echelon pivots canonical). Exponents between the
/// stored range and the order bound are known to be zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    low: i64,
    coeffs: Vec<Rational>,
    order: Trunc,
}

impl TruncatedSeries {
    /// Builds a series from the coefficients of `t^low .. t^(low+len)`,
    /// normalizing zero padding away.
    pub fn from_coeffs(low: i64, coeffs: Vec<Rational>, order: Trunc) -> Self {
        let mut s = TruncatedSeries { low, coeffs, order };
        s.normalize();
        s
    }

    /// The exact zero series.
    pub fn zero_exact() -> Self {
        TruncatedSeries { low: 0, coeffs: Vec::new(), order: Trunc::Exact }
    }

    /// Zero modulo `t^k`: nothing is known below `t^k`.
    pub fn zero_mod(k: i64) -> Self {
        TruncatedSeries { low: k, coeffs: Vec::new(), order: Trunc::At(k) }
    }

    /// The exact monomial `c·t^e`.
    pub fn monomial(e: i64, c: Rational) -> Self {
        Self::from_coeffs(e, vec![c], Trunc::Exact)
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::from_integer(1.into()))
    }

    fn normalize(&mut self) {
        while let Some(c) = self.coeffs.first() {
            if c.is_zero() {
                self.coeffs.remove(0);
                self.low += 1;
            } else {
                break;
            }
        }
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            // canonical empty form: low coincides with the truncation bound
            self.low = self.order.finite().unwrap_or(0);
        }
        if let Trunc::At(k) = self.order {
            let keep = (k - self.low).max(0) as usize;
            self.coeffs.truncate(keep.min(self.coeffs.len()));
            while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
                self.coeffs.pop();
            }
            if self.coeffs.is_empty() {
                self.low = k;
            }
        }
    }

    pub fn order(&self) -> Trunc {
        self.order
    }

    /// True when the series is the exact zero element.
    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.order == Trunc::Exact
    }

    /// True when no nonzero coefficient is known (exact zero or zero up to
    /// the truncation order).
    pub fn is_zero_known(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn valuation(&self) -> BranchValuation {
        if !self.coeffs.is_empty() {
            BranchValuation::Finite(self.low)
        } else if self.order == Trunc::Exact {
            BranchValuation::Infinity
        } else {
            BranchValuation::Unknown
        }
    }

    /// Lower bound for the valuation: the valuation if known, otherwise the
    /// truncation order (the first exponent that could be nonzero).
    fn valuation_floor(&self) -> Option<i64> {
        match self.valuation() {
            BranchValuation::Finite(v) => Some(v),
            BranchValuation::Infinity => None,
            BranchValuation::Unknown => self.order.finite(),
        }
    }

    /// Coefficient of `t^e`; `None` when `e` lies at or beyond the truncation
    /// order (unknown), `Some(0)` for known zeros.
    pub fn coeff(&self, e: i64) -> Option<Rational> {
        if let Trunc::At(k) = self.order {
            if e >= k {
                return None;
            }
        }
        let idx = e - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            Some(Rational::zero())
        } else {
            Some(self.coeffs[idx as usize].clone())
        }
    }

    /// Coefficient of `t^e` or an `OrderTooLow` error when it is unknown.
    pub fn coeff_known(&self, e: i64, branch: usize) -> Result<Rational> {
        self.coeff(e).ok_or(Error::OrderTooLow {
            branch,
            needed: e + 1,
            have: self.order.finite().unwrap_or(i64::MAX),
        })
    }

    /// Iterates the stored nonzero coefficients as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        if self.coeffs.is_empty() && other.coeffs.is_empty() {
            return match order {
                Trunc::Exact => Self::zero_exact(),
                Trunc::At(k) => Self::zero_mod(k),
            };
        }
        let low = match (self.coeffs.is_empty(), other.coeffs.is_empty()) {
            (true, false) => other.low,
            (false, true) => self.low,
            _ => self.low.min(other.low),
        };
        let hi_stored = (self.low + self.coeffs.len() as i64).max(other.low + other.coeffs.len() as i64);
        let mut coeffs = Vec::with_capacity((hi_stored - low).max(0) as usize);
        for e in low..hi_stored {
            let a = self.coeff(e).unwrap_or_else(Rational::zero);
            let b = other.coeff(e).unwrap_or_else(Rational::zero);
            coeffs.push(a + b);
        }
        Self::from_coeffs(low, coeffs, order)
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            order: self.order,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return match self.order {
                Trunc::Exact => Self::zero_exact(),
                Trunc::At(k) => Self::zero_mod(k),
            };
        }
        TruncatedSeries {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            order: self.order,
        }
    }

    /// Multiplication. The result order follows the convolution rule
    /// `min(order(a) + val(b), order(b) + val(a))`: what is unknown in one
    /// factor is shifted by the valuation of the other.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_exact_zero() || other.is_exact_zero() {
            return Self::zero_exact();
        }
        let order = match (self.order, self.valuation_floor(), other.order, other.valuation_floor()) {
            (Trunc::Exact, _, Trunc::Exact, _) => Trunc::Exact,
            (oa, va, ob, vb) => {
                let left = oa.finite().map(|k| k + vb.expect("non-exact-zero series has a valuation floor"));
                let right = ob.finite().map(|k| k + va.expect("non-exact-zero series has a valuation floor"));
                match (left, right) {
                    (None, None) => Trunc::Exact,
                    (Some(k), None) | (None, Some(k)) => Trunc::At(k),
                    (Some(k), Some(m)) => Trunc::At(k.min(m)),
                }
            }
        };
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return match order {
                Trunc::Exact => Self::zero_exact(),
                Trunc::At(k) => Self::zero_mod(k),
            };
        }
        let low = self.low + other.low;
        let len = match order {
            Trunc::Exact => self.coeffs.len() + other.coeffs.len() - 1,
            Trunc::At(k) => ((k - low).max(0) as usize).min(self.coeffs.len() + other.coeffs.len() - 1),
        };
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(low, coeffs, order)
    }

    /// Inverse of a series with known nonzero leading term, modulo
    /// `t^target`. The achievable precision is capped by the operand's own
    /// order (shifted by twice the valuation, since `a = t^v·u` inverts to
    /// `t^(−v)·u^(−1)`).
    pub fn invert_unit(&self, target: i64) -> Result<Self> {
        if self.coeffs.is_empty() {
            return Err(Error::NotInvertible);
        }
        let v = self.low;
        let order = match self.order {
            Trunc::Exact => Trunc::At(target),
            Trunc::At(k) => Trunc::At(target.min(k - 2 * v)),
        };
        let out_low = -v;
        let n = match order {
            Trunc::At(k) => (k - out_low).max(0) as usize,
            Trunc::Exact => unreachable!(),
        };
        if n == 0 {
            return Ok(Self::zero_mod(out_low));
        }
        // long division of 1 by the unit part u = t^(-v)·self
        let u = |i: usize| -> Rational {
            self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
        };
        let u0 = u(0);
        let mut inv: Vec<Rational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = if k == 0 { Rational::from_integer(1.into()) } else { Rational::zero() };
            for j in 1..=k {
                acc -= u(j) * inv[k - j].clone();
            }
            inv.push(acc / u0.clone());
        }
        Ok(Self::from_coeffs(out_low, inv, order))
    }

    /// The Euler derivative `t·d/dt`: the coefficient of `t^e` is scaled
    /// by `e`. Orders are preserved and constants are killed.
    pub fn euler_derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * Rational::from_integer((self.low + i as i64).into()))
            .collect();
        Self::from_coeffs(self.low, coeffs, self.order)
    }

    /// Multiplies by the monomial `t^m`.
    pub fn shift(&self, m: i64) -> Self {
        TruncatedSeries {
            low: self.low + m,
            coeffs: self.coeffs.clone(),
            order: self.order.shifted(m),
        }
    }

    /// Restricts the known range to `t^k`.
    pub fn truncate_to(&self, k: i64) -> Self {
        let mut s = self.clone();
        s.order = s.order.min(Trunc::At(k));
        s.normalize();
        s
    }

    /// True when all coefficients known below `k` vanish. Errors when the
    /// series is not known up to `k`.
    pub fn is_zero_mod(&self, k: i64, branch: usize) -> Result<bool> {
        if let Trunc::At(o) = self.order {
            if o < k && !self.coeffs.is_empty() && self.low < k {
                // stored data may still decide the question
            }
            if o < k {
                if self.terms().any(|(e, _)| e < k) {
                    return Ok(false);
                }
                return Err(Error::OrderTooLow { branch, needed: k, have: o });
            }
        }
        Ok(!self.terms().any(|(e, _)| e < k))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let cs = rational_to_string(c);
            if first {
                first = false;
            } else if cs.starts_with('-') {
                write!(f, " - ")?;
                return_term(f, e, &cs[1..])?;
                continue;
            } else {
                write!(f, " + ")?;
            }
            return_term(f, e, &cs)?;
        }
        if first {
            write!(f, "0")?;
        }
        if let Trunc::At(k) = self.order {
            write!(f, " + O(t^{k})")?;
        }
        Ok(())
    }
}

fn return_term(f: &mut fmt::Formatter<'_>, e: i64, coeff: &str) -> fmt::Result {
    match (e, coeff) {
        (0, c) => write!(f, "{c}"),
        (1, "1") => write!(f, "t"),
        (_, "1") => write!(f, "t^{e}"),
        (1, c) => write!(f, "{c}*t"),
        (_, c) => write!(f, "{c}*t^{e}"),
    }
}

/// Expands the rational function `num/den` (dense ascending coefficients)
/// modulo `t^order`. The denominator must be a unit of the power-series ring.
pub fn expand_rational_function(num: &[Rational], den: &[Rational], order: i64) -> Result<TruncatedSeries> {
    let q0 = den.first().cloned().unwrap_or_else(Rational::zero);
    if q0.is_zero() {
        return Err(Error::NonUnitDenominator);
    }
    if num.iter().all(|c| c.is_zero()) {
        return Ok(TruncatedSeries::zero_exact());
    }
    let n = order.max(0) as usize;
    let p = |i: usize| num.get(i).cloned().unwrap_or_else(Rational::zero);
    let q = |i: usize| den.get(i).cloned().unwrap_or_else(Rational::zero);
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = p(k);
        for j in 1..=k {
            acc -= q(j) * out[k - j].clone();
        }
        out.push(acc / q0.clone());
    }
    // a polynomial divided by a constant stays exact
    let order = if den.iter().skip(1).all(|c| c.is_zero()) { Trunc::Exact } else { Trunc::At(order) };
    let coeffs = match order {
        Trunc::Exact => num.iter().map(|c| c / q0.clone()).collect(),
        Trunc::At(_) => out,
    };
    Ok(TruncatedSeries::from_coeffs(0, coeffs, order))
}

/// An element of the product of branch fraction fields: one series per branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiSeries {
    branches: Vec<TruncatedSeries>,
}

impl MultiSeries {
    pub fn new(branches: Vec<TruncatedSeries>) -> Self {
        assert!(!branches.is_empty(), "a curve has at least one branch");
        MultiSeries { branches }
    }

    /// Constant 1 on every branch.
    pub fn one(r: usize) -> Self {
        Self::new(vec![TruncatedSeries::one(); r])
    }

    /// Exact zero on every branch except `branch`, where it is `s`.
    pub fn single_branch(r: usize, branch: usize, s: TruncatedSeries) -> Self {
        let mut branches = vec![TruncatedSeries::zero_exact(); r];
        branches[branch] = s;
        Self::new(branches)
    }

    /// The monomial `t^e` on every branch (`e` per branch).
    pub fn monomial(exps: &[i64]) -> Self {
        Self::new(exps.iter().map(|&e| TruncatedSeries::monomial(e, Rational::from_integer(1.into()))).collect())
    }

    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    pub fn branch(&self, i: usize) -> &TruncatedSeries {
        &self.branches[i]
    }

    pub fn branches(&self) -> &[TruncatedSeries] {
        &self.branches
    }

    /// The multivaluation: per-branch least exponent with nonzero
    /// coefficient, `Infinity` on exact zeros, `Unknown` when only zeros are
    /// stored on a branch that is not exactly zero.
    pub fn valuation(&self) -> Valuation {
        self.branches.iter().map(|b| b.valuation()).collect()
    }

    fn zip(&self, other: &Self, f: impl Fn(&TruncatedSeries, &TruncatedSeries) -> TruncatedSeries) -> Self {
        assert_eq!(self.branches.len(), other.branches.len(), "branch count mismatch");
        Self::new(self.branches.iter().zip(&other.branches).map(|(a, b)| f(a, b)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, TruncatedSeries::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, TruncatedSeries::sub)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip(other, TruncatedSeries::mul)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.branches.iter().map(TruncatedSeries::neg).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.branches.iter().map(|b| b.scale(c)).collect())
    }

    pub fn euler_derivative(&self) -> Self {
        Self::new(self.branches.iter().map(TruncatedSeries::euler_derivative).collect())
    }

    /// Multiplies branch `i` by `t^(m_i)`.
    pub fn shift(&self, m: &[i64]) -> Self {
        assert_eq!(m.len(), self.branches.len());
        Self::new(self.branches.iter().zip(m).map(|(b, &s)| b.shift(s)).collect())
    }

    pub fn truncate_to(&self, moduli: &[i64]) -> Self {
        assert_eq!(moduli.len(), self.branches.len());
        Self::new(self.branches.iter().zip(moduli).map(|(b, &k)| b.truncate_to(k)).collect())
    }

    /// True when every branch is a non-zerodivisor (finite valuation).
    pub fn is_non_zerodivisor(&self) -> bool {
        self.valuation().iter().all(|v| v.is_finite())
    }
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.branches.len() == 1 {
            return write!(f, "{}", self.branches[0]);
        }
        write!(f, "(")?;
        for (i, b) in self.branches.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn series(low: i64, coeffs: &[i64], order: Trunc) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(low, coeffs.iter().map(|&c| rat_int(c)).collect(), order)
    }

    #[test]
    fn expand_geometric_tail() {
        // t^5/(1-t) = t^5 + t^6 + t^7 + ... truncated at t^8
        let num: Vec<Rational> = (0..6).map(|i| rat_int(if i == 5 { 1 } else { 0 })).collect();
        let den = vec![rat_int(1), rat_int(-1)];
        let s = expand_rational_function(&num, &den, 8).unwrap();
        assert_eq!(s, series(5, &[1, 1, 1], Trunc::At(8)));
    }

    #[test]
    fn expand_alternating_geometric() {
        let s = expand_rational_function(&[rat_int(1)], &[rat_int(1), rat_int(1)], 3).unwrap();
        assert_eq!(s, series(0, &[1, -1, 1], Trunc::At(3)));
    }

    #[test]
    fn expand_polynomial_passthrough() {
        let num = vec![rat_int(0), rat_int(0), rat_int(1)];
        let s = expand_rational_function(&num, &[rat_int(1)], 10).unwrap();
        assert_eq!(s, TruncatedSeries::monomial(2, rat_int(1)));
        assert_eq!(s.order(), Trunc::Exact);
    }

    #[test]
    fn expand_rejects_non_unit_denominator() {
        let err = expand_rational_function(&[rat_int(1)], &[rat_int(0), rat_int(1)], 4).unwrap_err();
        assert_eq!(err, Error::NonUnitDenominator);
    }

    #[test]
    fn mul_examples() {
        let one_plus_t = series(0, &[1, 1], Trunc::Exact);
        let one_minus_t = series(0, &[1, -1], Trunc::Exact);
        assert_eq!(one_plus_t.mul(&one_minus_t), series(0, &[1, 0, -1], Trunc::Exact));
        let t2 = TruncatedSeries::monomial(2, rat_int(1));
        let t3 = TruncatedSeries::monomial(3, rat_int(1));
        assert_eq!(t2.mul(&t3), TruncatedSeries::monomial(5, rat_int(1)));
    }

    #[test]
    fn invert_unit_geometric() {
        let s = series(0, &[1, -1], Trunc::Exact);
        let inv = s.invert_unit(4).unwrap();
        assert_eq!(inv, series(0, &[1, 1, 1, 1], Trunc::At(4)));
        let prod = s.mul(&inv);
        assert!(prod.sub(&TruncatedSeries::one()).is_zero_known());
    }

    #[test]
    fn invert_requires_known_nonzero_term() {
        assert_eq!(TruncatedSeries::zero_mod(5).invert_unit(4).unwrap_err(), Error::NotInvertible);
        assert_eq!(TruncatedSeries::zero_exact().invert_unit(4).unwrap_err(), Error::NotInvertible);
    }

    #[test]
    fn invert_laurent_shifted() {
        // (t^2 + t^3)^(-1) = t^(-2)·(1 - t + t^2 - ...)
        let s = series(2, &[1, 1], Trunc::Exact);
        let inv = s.invert_unit(3).unwrap();
        let prod = s.mul(&inv);
        assert!(prod.sub(&TruncatedSeries::one()).is_zero_known());
        assert_eq!(inv.valuation(), BranchValuation::Finite(-2));
    }

    #[test]
    fn euler_derivative_examples() {
        let t4 = TruncatedSeries::monomial(4, rat_int(1));
        assert_eq!(t4.euler_derivative(), TruncatedSeries::monomial(4, rat_int(4)));

        // the 7-jet of t^5/(1-t) maps to 5t^5 + 6t^6 + 7t^7
        let s = series(5, &[1, 1, 1], Trunc::At(8));
        assert_eq!(s.euler_derivative(), series(5, &[5, 6, 7], Trunc::At(8)));

        assert!(TruncatedSeries::one().euler_derivative().is_exact_zero());
    }

    #[test]
    fn multivaluation_examples() {
        let node_x = MultiSeries::new(vec![TruncatedSeries::monomial(1, rat_int(1)), TruncatedSeries::zero_exact()]);
        assert_eq!(node_x.valuation(), vec![BranchValuation::Finite(1), BranchValuation::Infinity]);

        let cusp_x = MultiSeries::new(vec![TruncatedSeries::monomial(2, rat_int(1))]);
        assert_eq!(cusp_x.valuation(), vec![BranchValuation::Finite(2)]);

        let unknown = MultiSeries::new(vec![TruncatedSeries::zero_mod(5)]);
        assert_eq!(unknown.valuation(), vec![BranchValuation::Unknown]);
    }

    #[test]
    fn order_propagation_on_mul() {
        // (t^2 + O(t^5)) · (t^3 + O(t^6)) is known modulo t^8
        let a = series(2, &[1], Trunc::At(5));
        let b = series(3, &[1], Trunc::At(6));
        assert_eq!(a.mul(&b).order(), Trunc::At(8));
    }

    #[test]
    fn display_forms() {
        assert_eq!(series(5, &[5, 6, 7], Trunc::At(8)).to_string(), "5*t^5 + 6*t^6 + 7*t^7 + O(t^8)");
        assert_eq!(TruncatedSeries::zero_exact().to_string(), "0");
        assert_eq!(series(0, &[1, -1], Trunc::Exact).to_string(), "1 - t");
        assert_eq!(
            TruncatedSeries::from_coeffs(0, vec![rat(1, 2)], Trunc::Exact).to_string(),
            "1/2"
        );
    }
}
