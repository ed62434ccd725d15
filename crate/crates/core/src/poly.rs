//! Polynomials over ℚ: dense univariate polynomials for series recipes and
//! sparse multivariate polynomials for curve equations.
//!
//! The multivariate side carries what the Jacobian-ideal computation needs:
//! partial derivatives, evaluation along a branch parametrization, and a
//! parser for equation strings such as `x^4 - y*(x+y)^4`. Supported syntax:
//! `+ - * / ^` with integer exponents (`/` only by nonzero constants),
//! parentheses, integer literals, and the declared variable names.

use std::collections::BTreeMap;
use std::fmt;

use crate::rational::{rational_to_string, Rational};
use crate::series::{MultiSeries, TruncatedSeries};
use num::{BigInt, One, Zero};

/// Dense univariate polynomial, ascending coefficients, trailing zeros
/// trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while matches!(coeffs.last(), Some(c) if c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn from_terms(terms: &[(usize, Rational)]) -> Self {
        let deg = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (e, c) in terms {
            coeffs[*e] += c.clone();
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at `t = 0`.
    pub fn constant_term(&self) -> Rational {
        self.0.first().cloned().unwrap_or_else(Rational::zero)
    }
}

/// Sparse multivariate polynomial over ℚ; keys are exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(self.nvars, Rational::one());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.add_term(f, c * Rational::from_integer(BigInt::from(e[i])));
        }
        out
    }

    /// Evaluates along one branch: each variable is a single-branch series.
    pub fn eval_branch(&self, coords: &[TruncatedSeries]) -> TruncatedSeries {
        assert_eq!(coords.len(), self.nvars);
        let mut powers: Vec<Vec<TruncatedSeries>> = coords.iter().map(|x| vec![TruncatedSeries::one(), x.clone()]).collect();
        let mut acc = TruncatedSeries::zero_exact();
        for (e, c) in &self.terms {
            let mut term = TruncatedSeries::monomial(0, c.clone());
            for (j, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[j].len() <= k as usize {
                    let next = powers[j].last().unwrap().mul(&coords[j]);
                    powers[j].push(next);
                }
                term = term.mul(&powers[j][k as usize]);
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Evaluates on every branch of a parametrization: `coords[j]` is the
    /// multi-branch series of variable `j`.
    pub fn eval_multi(&self, coords: &[MultiSeries]) -> MultiSeries {
        assert_eq!(coords.len(), self.nvars);
        let r = coords[0].branch_count();
        let mut branches = Vec::with_capacity(r);
        for i in 0..r {
            let slice: Vec<TruncatedSeries> = coords.iter().map(|x| x.branch(i).clone()).collect();
            branches.push(self.eval_branch(&slice));
        }
        MultiSeries::new(branches)
    }

    /// Parses an equation string over the named variables.
    pub fn parse(src: &str, vars: &[String]) -> Result<Self, String> {
        Parser::new(src, vars)?.parse_all()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", rational_to_string(c))?;
            for (j, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*{}", names[j])?,
                    _ => write!(f, "*{}^{}", names[j], p)?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn new(src: &str, vars: &[String]) -> Result<Self, String> {
        let mut tokens = Vec::new();
        let chars: Vec<char> = src.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            match c {
                ' ' | '\t' | '\n' | '\r' => i += 1,
                '+' => {
                    tokens.push(Token::Plus);
                    i += 1;
                }
                '-' => {
                    tokens.push(Token::Minus);
                    i += 1;
                }
                '*' => {
                    tokens.push(Token::Star);
                    i += 1;
                }
                '/' => {
                    tokens.push(Token::Slash);
                    i += 1;
                }
                '^' => {
                    tokens.push(Token::Caret);
                    i += 1;
                }
                '(' => {
                    tokens.push(Token::LParen);
                    i += 1;
                }
                ')' => {
                    tokens.push(Token::RParen);
                    i += 1;
                }
                _ if c.is_ascii_digit() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let lit: String = chars[start..i].iter().collect();
                    tokens.push(Token::Int(lit.parse().map_err(|_| format!("bad integer literal `{lit}`"))?));
                }
                _ if c.is_ascii_alphabetic() || c == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    let name: String = chars[start..i].iter().collect();
                    match vars.iter().position(|v| v == &name) {
                        Some(idx) => tokens.push(Token::Var(idx)),
                        None => return Err(format!("unknown variable `{name}`")),
                    }
                }
                _ => return Err(format!("unexpected character `{c}`")),
            }
        }
        Ok(Parser { tokens, pos: 0, nvars: vars.len() })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_all(&mut self) -> Result<MultiPoly, String> {
        let p = self.expr()?;
        if self.pos != self.tokens.len() {
            return Err("trailing input after expression".to_string());
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<MultiPoly, String> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Token::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Token::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, String> {
        let mut acc = self.unary()?;
        while let Some(t) = self.peek() {
            match t {
                Token::Star => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Token::Slash => {
                    self.bump();
                    let d = self.unary()?;
                    let c = constant_of(&d).ok_or("division only by nonzero constants")?;
                    if c.is_zero() {
                        return Err("division by zero".to_string());
                    }
                    acc = acc.mul(&MultiPoly::constant(self.nvars, c.recip()));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, String> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly, String> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            match self.bump() {
                Some(Token::Int(n)) => {
                    let e: u32 = n.to_string().parse().map_err(|_| "exponent out of range")?;
                    Ok(base.pow(e))
                }
                _ => Err("expected integer exponent after `^`".to_string()),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, String> {
        match self.bump() {
            Some(Token::Int(n)) => Ok(MultiPoly::constant(self.nvars, Rational::from_integer(n))),
            Some(Token::Var(i)) => Ok(MultiPoly::var(self.nvars, i)),
            Some(Token::LParen) => {
                let p = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(p),
                    _ => Err("missing closing parenthesis".to_string()),
                }
            }
            other => Err(format!("unexpected token {other:?}")),
        }
    }
}

fn constant_of(p: &MultiPoly) -> Option<Rational> {
    if p.is_zero() {
        return Some(Rational::zero());
    }
    if p.terms.len() == 1 {
        let (e, c) = p.terms.iter().next().unwrap();
        if e.iter().all(|&x| x == 0) {
            return Some(c.clone());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;
    use crate::series::Trunc;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_cusp_equation() {
        let f = MultiPoly::parse("y^2 - x^3", &vars(&["x", "y"])).unwrap();
        assert_eq!(f.terms.len(), 2);
        let x = TruncatedSeries::monomial(2, rat_int(1));
        let y = TruncatedSeries::monomial(3, rat_int(1));
        assert!(f.eval_branch(&[x, y]).is_exact_zero());
    }

    #[test]
    fn parse_appendix_equation() {
        let f = MultiPoly::parse("x^4 - y*(x+y)^4", &vars(&["x", "y"])).unwrap();
        // x^4 and -y(x+y)^4 expand to six monomials: x^4, -yx^4 cancels nothing
        assert_eq!(f.terms.len(), 6);
        let fx = f.partial(0);
        let fy = f.partial(1);
        assert!(!fx.is_zero() && !fy.is_zero());
    }

    #[test]
    fn appendix_parametrization_satisfies_equation() {
        use crate::series::expand_rational_function;
        let f = MultiPoly::parse("x^4 - y*(x+y)^4", &vars(&["x", "y"])).unwrap();
        let order = 40;
        let num: Vec<Rational> = (0..6).map(|i| rat_int(if i == 5 { 1 } else { 0 })).collect();
        let x = expand_rational_function(&num, &[rat_int(1), rat_int(-1)], order).unwrap();
        let y = TruncatedSeries::monomial(4, rat_int(1));
        let v = f.eval_branch(&[x, y]);
        assert!(v.is_zero_known());
        // composition keeps at least the expansion order
        assert!(matches!(v.order(), Trunc::At(k) if k >= order));
    }

    #[test]
    fn parser_rejects_garbage() {
        assert!(MultiPoly::parse("x^2 + z", &vars(&["x", "y"])).is_err());
        assert!(MultiPoly::parse("x^", &vars(&["x"])).is_err());
        assert!(MultiPoly::parse("(x", &vars(&["x"])).is_err());
        assert!(MultiPoly::parse("x/(y)", &vars(&["x", "y"])).is_err());
        assert!(MultiPoly::parse("x/0", &vars(&["x"])).is_err());
    }

    #[test]
    fn rational_coefficients() {
        let f = MultiPoly::parse("3/2*x - x", &vars(&["x"])).unwrap();
        let x = TruncatedSeries::monomial(1, rat_int(2));
        let v = f.eval_branch(&[x]);
        assert_eq!(v, TruncatedSeries::monomial(1, rat_int(1)));
    }

    #[test]
    fn partial_derivative() {
        let f = MultiPoly::parse("x^3*y + 2*y^2", &vars(&["x", "y"])).unwrap();
        let fx = f.partial(0);
        let expect = MultiPoly::parse("3*x^2*y", &vars(&["x", "y"])).unwrap();
        assert_eq!(fx, expect);
    }
}
