//! Exact rational scalars.
//!
//! All coefficient arithmetic in this crate happens in ℚ. `num::BigRational`
//! already keeps values in lowest terms with a positive denominator, which is
//! exactly the canonical form we rely on; this module adds the `"a/b"` string
//! form used by every external interface.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rational = BigRational;

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`; panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical string form: `"a/b"`, or `"a"` when the denominator is 1.
/// The sign always sits on the numerator.
pub fn rational_to_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"a"` or `"a/b"` with optional leading sign; whitespace is trimmed.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((num, den)) => {
            let n = num.trim().parse::<BigInt>().ok()?;
            let d = den.trim().parse::<BigInt>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
    }
}

/// Scales a rational vector to the unique primitive positive integer vector
/// on the same ray. Returns `None` on the zero vector.
pub fn primitive_positive_scaling(v: &[Rational]) -> Option<Vec<BigInt>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut denom_lcm = BigInt::one();
    for x in v {
        denom_lcm = num::integer::lcm(denom_lcm, x.denom().clone());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&denom_lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = num::integer::gcd(g, n.clone());
    }
    let mut out: Vec<BigInt> = ints.into_iter().map(|n| n / &g).collect();
    if out.iter().any(|n| n.is_negative()) && out.iter().all(|n| !n.is_positive()) {
        for n in &mut out {
            *n = -n.clone();
        }
    }
    Some(out)
}
