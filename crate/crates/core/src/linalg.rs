//! Echelonized subspaces of truncated normalization modules.
//!
//! Everything the crate computes lives inside a finite window
//! `⊕_i t_i^(lo_i)·k[t_i]/(t_i^(hi_i))`: per branch the exponents
//! `lo_i .. hi_i` (half-open). Columns are ordered by exponent first, then by
//! branch index, which fixes the pivot order globally. A module containing
//! the monomial tail `t^c·Ã` with `c ≤ hi` is determined exactly by its image
//! in such a window, so subspace equality and dimension counts below are
//! statements about the actual modules, not approximations.

use crate::error::Error;
use crate::rational::Rational;
use crate::series::{MultiSeries, Trunc, TruncatedSeries};
use crate::Result;
use num::Zero;

/// Per-branch half-open exponent ranges together with the induced column
/// enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    lo: Vec<i64>,
    hi: Vec<i64>,
    cols: Vec<(i64, usize)>,
}

impl Window {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        assert_eq!(lo.len(), hi.len());
        assert!(lo.iter().zip(&hi).all(|(a, b)| a <= b), "window bounds out of order");
        let mut cols = Vec::new();
        let emin = *lo.iter().min().unwrap();
        let emax = *hi.iter().max().unwrap();
        for e in emin..emax {
            for (i, (&l, &h)) in lo.iter().zip(&hi).enumerate() {
                if l <= e && e < h {
                    cols.push((e, i));
                }
            }
        }
        Window { lo, hi, cols }
    }

    /// The window `[0, N)` on every branch.
    pub fn nonnegative(moduli: &[i64]) -> Self {
        Self::new(vec![0; moduli.len()], moduli.to_vec())
    }

    pub fn branch_count(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// The `(exponent, branch)` label of a column.
    pub fn col(&self, idx: usize) -> (i64, usize) {
        self.cols[idx]
    }

    pub fn col_index(&self, e: i64, branch: usize) -> Option<usize> {
        self.cols.binary_search(&(e, branch)).ok()
    }
}

/// A subspace in reduced row-echelon form over a [`Window`].
///
/// Rows are canonical: pivots are 1, strictly increasing, and the pivot
/// column of each row vanishes on all other rows. Two subspaces over the
/// same window are equal iff their row lists are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    window: Window,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(window: Window) -> Self {
        SubspaceBasis { window, rows: Vec::new(), pivots: Vec::new() }
    }

    /// The full window space (identity rows).
    pub fn full(window: Window) -> Self {
        let n = window.ncols();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = vec![Rational::zero(); n];
            row[i] = Rational::from_integer(1.into());
            rows.push(row);
        }
        SubspaceBasis { window, rows, pivots: (0..n).collect() }
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Reduces `v` against the basis in place; afterwards `v` is the
    /// canonical residue modulo the subspace.
    pub fn reduce_vec(&self, v: &mut [Rational]) {
        assert_eq!(v.len(), self.window.ncols());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
    }

    /// Inserts a vector, returning whether the dimension grew.
    pub fn insert_vec(&mut self, mut v: Vec<Rational>) -> bool {
        self.reduce_vec(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let lead = v[p].clone();
        for c in v.iter_mut() {
            if !c.is_zero() {
                *c /= lead.clone();
            }
        }
        // clear the new pivot column in existing rows
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn contains_vec(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce_vec(&mut w);
        w.iter().all(|c| c.is_zero())
    }

    /// Converts a [`MultiSeries`] to window coordinates. Errors when the
    /// series is not known through the window top or has nonzero terms below
    /// the window bottom.
    pub fn vector_of(&self, m: &MultiSeries) -> Result<Vec<Rational>> {
        window_vector(&self.window, m)
    }

    pub fn insert_series(&mut self, m: &MultiSeries) -> Result<bool> {
        let v = self.vector_of(m)?;
        Ok(self.insert_vec(v))
    }

    pub fn contains_series(&self, m: &MultiSeries) -> Result<bool> {
        let v = self.vector_of(m)?;
        Ok(self.contains_vec(&v))
    }

    /// Reads a row back as an exact Laurent polynomial. When the represented
    /// module contains the monomial tail above the window, these polynomials
    /// are genuine module elements.
    pub fn row_series(&self, idx: usize) -> MultiSeries {
        vec_series(&self.window, &self.rows[idx])
    }

    /// The unit vector of the monomial `t^e` on `branch`.
    pub fn monomial_vec(&self, e: i64, branch: usize) -> Option<Vec<Rational>> {
        let idx = self.window.col_index(e, branch)?;
        let mut v = vec![Rational::zero(); self.window.ncols()];
        v[idx] = Rational::from_integer(1.into());
        Some(v)
    }

    pub fn contains_monomial(&self, e: i64, branch: usize) -> bool {
        match self.monomial_vec(e, branch) {
            Some(v) => self.contains_vec(&v),
            None => false,
        }
    }

    /// Whether the coefficient functional at `(e, branch)` vanishes on the
    /// whole subspace.
    pub fn functional_is_zero(&self, e: i64, branch: usize) -> bool {
        match self.window.col_index(e, branch) {
            Some(idx) => self.rows.iter().all(|r| r[idx].is_zero()),
            None => true,
        }
    }

    /// The kernel of the coefficient functional at `(e, branch)`: the
    /// subspace of elements whose `t^e` coefficient on `branch` vanishes.
    pub fn kernel_of_coefficient(&self, e: i64, branch: usize) -> Self {
        let Some(idx) = self.window.col_index(e, branch) else {
            return self.clone();
        };
        let Some(lead) = self.rows.iter().position(|r| !r[idx].is_zero()) else {
            return self.clone();
        };
        let mut out = SubspaceBasis::zero(self.window.clone());
        let lead_row = &self.rows[lead];
        let lead_c = lead_row[idx].clone();
        for (k, row) in self.rows.iter().enumerate() {
            if k == lead {
                continue;
            }
            let mut v = row.clone();
            if !v[idx].is_zero() {
                let c = v[idx].clone() / lead_c.clone();
                for (x, y) in v.iter_mut().zip(lead_row) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
            out.insert_vec(v);
        }
        out
    }

    /// Span of both subspaces (windows must agree).
    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.window, other.window, "window mismatch in sum");
        let mut out = self.clone();
        for row in &other.rows {
            out.insert_vec(row.clone());
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        assert_eq!(self.window, other.window, "window mismatch in containment");
        self.rows.iter().all(|r| other.contains_vec(r))
    }

    /// Per-branch least exponent carrying a nonzero entry in some row
    /// (`None` when the branch is zero throughout the window).
    pub fn min_valuations(&self) -> Vec<Option<i64>> {
        let mut out = vec![None; self.window.branch_count()];
        for row in &self.rows {
            for (idx, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    let (e, i) = self.window.col(idx);
                    if out[i].map_or(true, |cur| e < cur) {
                        out[i] = Some(e);
                    }
                }
            }
        }
        out
    }

    /// Re-represents the subspace on another window.
    ///
    /// * lowering `lo` pads zero columns;
    /// * raising `lo` drops columns, which must be zero in every row;
    /// * lowering `hi` truncates columns, valid when the certified `tail`
    ///   stays within the new window;
    /// * raising `hi` adds the free monomial columns above the old top,
    ///   valid when `tail` is at most the old top.
    pub fn reembed(&self, window: Window, tail: &[i64]) -> Result<Self> {
        assert_eq!(window.branch_count(), self.window.branch_count());
        for i in 0..window.branch_count() {
            if window.hi()[i] < self.window.hi[i] && tail[i] > window.hi()[i] {
                return Err(Error::OrderTooLow { branch: i, needed: tail[i], have: window.hi()[i] });
            }
            if window.hi()[i] > self.window.hi[i] && tail[i] > self.window.hi[i] {
                return Err(Error::OrderTooLow { branch: i, needed: tail[i], have: self.window.hi[i] });
            }
        }
        let mut out = SubspaceBasis::zero(window.clone());
        for row in &self.rows {
            let mut v = vec![Rational::zero(); window.ncols()];
            for (idx, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (e, i) = self.window.col(idx);
                match window.col_index(e, i) {
                    Some(j) => v[j] = c.clone(),
                    None => {
                        if e < window.lo()[i] {
                            return Err(Error::OutsideWindow { branch: i, exponent: e });
                        }
                        // above the new top: truncated away
                    }
                }
            }
            out.insert_vec(v);
        }
        // free monomials above the old top
        for i in 0..window.branch_count() {
            for e in self.window.hi[i].max(window.lo()[i])..window.hi()[i] {
                if let Some(v) = out.monomial_vec(e, i) {
                    out.insert_vec(v);
                }
            }
        }
        Ok(out)
    }

    /// Relabels branch exponents by `e ↦ e + by_i` (multiplication by the
    /// monomial `t^by`). Column order can change across branches, so rows are
    /// re-echelonized.
    pub fn shift_exponents(&self, by: &[i64]) -> Self {
        let lo: Vec<i64> = self.window.lo.iter().zip(by).map(|(a, b)| a + b).collect();
        let hi: Vec<i64> = self.window.hi.iter().zip(by).map(|(a, b)| a + b).collect();
        let window = Window::new(lo, hi);
        let mut out = SubspaceBasis::zero(window.clone());
        for row in &self.rows {
            let mut v = vec![Rational::zero(); window.ncols()];
            for (idx, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    let (e, i) = self.window.col(idx);
                    let j = window.col_index(e + by[i], i).expect("shifted column exists");
                    v[j] = c.clone();
                }
            }
            out.insert_vec(v);
        }
        out
    }
}

/// Coordinates of a series over a window; see [`SubspaceBasis::vector_of`].
pub fn window_vector(window: &Window, m: &MultiSeries) -> Result<Vec<Rational>> {
    assert_eq!(m.branch_count(), window.branch_count());
    let mut v = vec![Rational::zero(); window.ncols()];
    for (i, b) in m.branches().iter().enumerate() {
        if let Trunc::At(k) = b.order() {
            if k < window.hi()[i] {
                return Err(Error::OrderTooLow { branch: i, needed: window.hi()[i], have: k });
            }
        }
        for (e, c) in b.terms() {
            if e >= window.hi()[i] {
                continue;
            }
            match window.col_index(e, i) {
                Some(idx) => v[idx] = c.clone(),
                None => return Err(Error::OutsideWindow { branch: i, exponent: e }),
            }
        }
    }
    Ok(v)
}

/// Reads window coordinates back as an exact Laurent polynomial.
pub fn vec_series(window: &Window, v: &[Rational]) -> MultiSeries {
    let r = window.branch_count();
    let mut branches = Vec::with_capacity(r);
    for i in 0..r {
        let lo = window.lo()[i];
        let len = (window.hi()[i] - lo) as usize;
        let mut coeffs = vec![Rational::zero(); len];
        for (idx, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let (e, j) = window.col(idx);
                if j == i {
                    coeffs[(e - lo) as usize] = c.clone();
                }
            }
        }
        branches.push(TruncatedSeries::from_coeffs(lo, coeffs, Trunc::Exact));
    }
    MultiSeries::new(branches)
}

/// Basis of `{x : row·x = 0 for every constraint row}`.
pub fn nullspace(constraints: &[Vec<Rational>], nvars: usize) -> Vec<Vec<Rational>> {
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in constraints {
        assert_eq!(row.len(), nvars);
        let mut v = row.clone();
        for (r, &p) in echelon.iter().zip(&pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, y) in v.iter_mut().zip(r) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        if let Some(p) = v.iter().position(|c| !c.is_zero()) {
            let lead = v[p].clone();
            for c in v.iter_mut() {
                *c /= lead.clone();
            }
            for (r, _) in echelon.iter_mut().zip(&pivots) {
                if !r[p].is_zero() {
                    let c = r[p].clone();
                    for (x, y) in r.iter_mut().zip(&v) {
                        if !y.is_zero() {
                            *x -= &c * y;
                        }
                    }
                }
            }
            let at = pivots.partition_point(|&q| q < p);
            pivots.insert(at, p);
            echelon.insert(at, v);
        }
    }
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..nvars {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); nvars];
        v[free] = Rational::from_integer(1.into());
        for (r, &p) in echelon.iter().zip(&pivots) {
            if !r[free].is_zero() {
                v[p] = -r[free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn column_order_is_exponent_then_branch() {
        let w = Window::new(vec![0, -1], vec![2, 1]);
        let cols: Vec<(i64, usize)> = (0..w.ncols()).map(|i| w.col(i)).collect();
        assert_eq!(cols, vec![(-1, 1), (0, 0), (0, 1), (1, 0)]);
        assert_eq!(w.col_index(0, 1), Some(2));
        assert_eq!(w.col_index(5, 0), None);
    }

    #[test]
    fn insert_reduce_dim() {
        let w = Window::nonnegative(&[3]);
        let mut s = SubspaceBasis::zero(w);
        assert!(s.insert_vec(q(&[1, 1, 0])));
        assert!(s.insert_vec(q(&[0, 1, 1])));
        assert!(!s.insert_vec(q(&[1, 2, 1])));
        assert_eq!(s.dim(), 2);
        assert!(s.contains_vec(&q(&[1, 0, -1])));
        assert!(!s.contains_vec(&q(&[0, 0, 1])));
        // canonical reduced form
        assert_eq!(s.rows()[0], q(&[1, 0, -1]));
        assert_eq!(s.rows()[1], q(&[0, 1, 1]));
    }

    #[test]
    fn kernel_of_coefficient_drops_dimension() {
        let w = Window::nonnegative(&[3]);
        let mut s = SubspaceBasis::full(w);
        let k = s.kernel_of_coefficient(0, 0);
        assert_eq!(k.dim(), 2);
        assert!(k.functional_is_zero(0, 0));
        s = k.kernel_of_coefficient(1, 0);
        assert_eq!(s.dim(), 1);
        assert!(s.contains_monomial(2, 0));
    }

    #[test]
    fn nullspace_example() {
        // x + y + z = 0, y - z = 0  →  span{(-2, 1, 1)}
        let ns = nullspace(&[q(&[1, 1, 1]), q(&[0, 1, -1])], 3);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert!((v[0].clone() + v[1].clone() + v[2].clone()).is_zero());
        assert_eq!(v[1], v[2]);
        assert!(!v[2].is_zero());
    }

    #[test]
    fn reembed_tail_extension() {
        let w = Window::nonnegative(&[3]);
        let mut s = SubspaceBasis::zero(w);
        s.insert_vec(q(&[0, 1, 0]));
        s.insert_vec(q(&[0, 0, 1]));
        // tail = 1: everything from t^1 on is free, so extending to [0, 5) adds monomials
        let big = s.reembed(Window::nonnegative(&[5]), &[1]).unwrap();
        assert_eq!(big.dim(), 4);
        assert!(big.contains_monomial(4, 0));
        assert!(!big.contains_monomial(0, 0));
        // and truncating back is the identity
        let back = big.reembed(Window::nonnegative(&[3]), &[1]).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn reembed_refuses_unsound_truncation() {
        let w = Window::nonnegative(&[4]);
        let mut s = SubspaceBasis::zero(w);
        s.insert_vec(q(&[1, 0, 0, 0]));
        let err = s.reembed(Window::nonnegative(&[2]), &[3]).unwrap_err();
        assert!(matches!(err, Error::OrderTooLow { .. }));
    }

    #[test]
    fn shift_reorders_columns_across_branches() {
        let w = Window::new(vec![0, 0], vec![2, 2]);
        let mut s = SubspaceBasis::zero(w);
        s.insert_vec(q(&[1, 1, 0, 0])); // t^0 on both branches
        let shifted = s.shift_exponents(&[0, 3]);
        assert_eq!(shifted.window().lo(), &[0, 3]);
        let m = shifted.row_series(0);
        assert_eq!(m.branch(0), &TruncatedSeries::monomial(0, rat_int(1)));
        assert_eq!(m.branch(1), &TruncatedSeries::monomial(3, rat_int(1)));
    }

    #[test]
    fn row_series_round_trip() {
        let w = Window::new(vec![-1], vec![3]);
        let mut s = SubspaceBasis::zero(w);
        s.insert_vec(q(&[1, 0, 2, 0]));
        let m = s.row_series(0);
        assert_eq!(m.branch(0).to_string(), "t^-1 + 2*t");
        let v = s.vector_of(&m).unwrap();
        assert_eq!(v, q(&[1, 0, 2, 0]));
    }
}
