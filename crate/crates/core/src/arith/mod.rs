//! Exact coefficient arithmetic.
//!
//! Every coefficient in the crate is a [`ParamRational`]: a reduced quotient of
//! sparse polynomials over Q in the parameters `q, t, g (γ), b (β), u, e (ε)`.

pub mod poly;
pub mod ratfun;
pub mod text;

pub use poly::{Mono, Param, Poly};
pub use ratfun::{expand_at_infinity, param_pow, ParamRational};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Parses `"p/q"`, `"-3"` and similar into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().ok()?;
    let d: num_bigint::BigInt = d.parse().ok()?;
    if d == 0.into() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
