//! Reduced rational functions in the formal parameters.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{gcd, Mono, Param, Poly, NPARAMS};
use super::Rational;
use crate::error::{Error, Result};

/// `num/den` with `gcd(num, den) = 1` and `den` of leading coefficient 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamRational {
    num: Poly,
    den: Poly,
}

impl Default for ParamRational {
    fn default() -> Self {
        ParamRational::zero()
    }
}

impl ParamRational {
    pub fn zero() -> Self {
        ParamRational {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        ParamRational::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        ParamRational::from_rational(Rational::from_integer(n.into()))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        ParamRational::from_rational(Rational::new(n.into(), d.into()))
    }

    pub fn from_rational(r: Rational) -> Self {
        ParamRational {
            num: Poly::constant(r),
            den: Poly::one(),
        }
    }

    pub fn param(p: Param) -> Self {
        ParamRational {
            num: Poly::var(p),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        ParamRational {
            num: p,
            den: Poly::one(),
        }
    }

    /// Builds `num/den`, reducing to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ParamRational::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return ParamRational::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        ParamRational::normalize(num, den)
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            ParamRational { num, den }
        } else {
            let inv = Rational::one() / lc;
            ParamRational {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Bitmask of parameters occurring in num or den.
    pub fn var_mask(&self) -> u8 {
        self.num.var_mask() | self.den.var_mask()
    }

    pub fn depends_on(&self, p: Param) -> bool {
        self.var_mask() & (1 << p.index()) != 0
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ParamRational::zero();
        }
        ParamRational {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ParamRational::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = ParamRational::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    fn add_impl(&self, o: &Self, negate: bool) -> Self {
        let on = if negate { o.num.neg() } else { o.num.clone() };
        if self.is_zero() {
            return ParamRational {
                num: on,
                den: o.den.clone(),
            };
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = self.num.add(&on);
            if self.den.is_one() {
                return ParamRational {
                    num: n,
                    den: self.den.clone(),
                };
            }
            return ParamRational::reduce(n, self.den.clone());
        }
        if self.den.is_one() {
            // a + c/d with gcd(c, d) = 1 stays reduced.
            return ParamRational {
                num: self.num.mul(&o.den).add(&on),
                den: o.den.clone(),
            };
        }
        if o.den.is_one() {
            return ParamRational {
                num: self.num.add(&on.mul(&self.den)),
                den: self.den.clone(),
            };
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let n = self.num.mul(&o.den).add(&on.mul(&self.den));
            let d = self.den.mul(&o.den);
            return ParamRational::normalize(n, d);
        }
        let bg = self.den.div_exact(&g).expect("gcd divides");
        let dg = o.den.div_exact(&g).expect("gcd divides");
        let n = self.num.mul(&dg).add(&on.mul(&bg));
        if n.is_zero() {
            return ParamRational::zero();
        }
        let g2 = gcd(&n, &g);
        let (n, gq) = if g2.is_one() {
            (n, g)
        } else {
            (
                n.div_exact(&g2).expect("gcd divides"),
                g.div_exact(&g2).expect("gcd divides"),
            )
        };
        ParamRational::normalize(n, bg.mul(&gq).mul(&dg))
    }

    fn mul_impl(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return ParamRational::zero();
        }
        if let Some(c) = self.as_rational() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_rational() {
            return self.scale(&c);
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = o.den.div_exact(&g1).expect("gcd divides");
        let c = o.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        ParamRational::normalize(a.mul(&c), b.mul(&d))
    }

    /// Substitutes `value` for the parameter `p`.
    pub fn substitute(&self, p: Param, value: &ParamRational) -> Result<Self> {
        if !self.depends_on(p) {
            return Ok(self.clone());
        }
        if let Some(v) = value.as_rational() {
            let mut vals: [Option<Rational>; NPARAMS] = Default::default();
            vals[p.index()] = Some(v);
            let n = self.num.eval_rational(&vals);
            let d = self.den.eval_rational(&vals);
            if d.is_zero() {
                return Err(Error::Pole(format!("{}:={}", p.symbol(), value)));
            }
            return Ok(ParamRational::reduce(n, d));
        }
        let dn = self.num.degree_in(p) as u32;
        let dd = self.den.degree_in(p) as u32;
        let nn = homogenize(&self.num, p, value, dn);
        let mut dd_poly = homogenize(&self.den, p, value, dd);
        if dd_poly.is_zero() {
            return Err(Error::Pole(format!("{}:={}", p.symbol(), value)));
        }
        // f = nn / b^dn  divided by  dd_poly / b^dd
        let b = value.den.clone();
        let mut nn = nn;
        if dd >= dn {
            nn = nn.mul(&b.pow(dd - dn));
        } else {
            dd_poly = dd_poly.mul(&b.pow(dn - dd));
        }
        Ok(ParamRational::reduce(nn, dd_poly))
    }

    /// Evaluates the limit along `p -> inf` by `p := 1/e, e := 0`.
    pub fn limit_at_infinity(&self, p: Param) -> Result<Self> {
        let inv_e = ParamRational::param(Param::E).inv()?;
        self.substitute(p, &inv_e)?
            .substitute(Param::E, &ParamRational::zero())
    }

    /// True when every coefficient of num and den is positive.
    pub fn has_positive_coefficients(&self) -> bool {
        self.num.all_coeffs_positive() && self.den.all_coeffs_positive()
    }
}

/// Σ c_i a^i b^(d-i) for `poly = Σ c_i p^i`, `value = a/b`.
fn homogenize(poly: &Poly, p: Param, value: &ParamRational, d: u32) -> Poly {
    let coeffs = poly.to_univariate(p);
    let a = &value.num;
    let b = &value.den;
    let mut apow = vec![Poly::one()];
    let mut bpow = vec![Poly::one()];
    for i in 1..=d as usize {
        apow.push(apow[i - 1].mul(a));
        bpow.push(bpow[i - 1].mul(b));
    }
    let mut acc = Poly::zero();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&c.mul(&apow[i]).mul(&bpow[d as usize - i]));
    }
    acc
}

/// Coefficients of `u^-1 .. u^-order` of `f` expanded at `u = inf`; `f(inf)` must be 1.
pub fn expand_at_infinity(f: &ParamRational, order: usize) -> Result<Vec<ParamRational>> {
    let n = f.num.to_univariate(Param::U);
    let d = f.den.to_univariate(Param::U);
    if n.len() != d.len() || n.last() != d.last() {
        return Err(Error::Invalid(format!(
            "expansion at infinity needs value 1 at u=inf, got {}",
            f
        )));
    }
    let deg = n.len() - 1;
    let coef = |v: &Vec<Poly>, k: usize| -> ParamRational {
        if k <= deg {
            ParamRational::from_poly(v[deg - k].clone())
        } else {
            ParamRational::zero()
        }
    };
    let d0 = coef(&d, 0);
    let mut c = vec![ParamRational::one()];
    for k in 1..=order {
        let mut acc = coef(&n, k);
        for j in 1..=k {
            let dj = coef(&d, j);
            if !dj.is_zero() {
                acc = &acc - &(&dj * &c[k - j]);
            }
        }
        c.push(acc.try_div(&d0)?);
    }
    Ok(c.split_off(1))
}

impl fmt::Display for ParamRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let single = |p: &Poly| p.terms().len() == 1;
        if single(&self.num) {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        let den_plain = single(&self.den) && {
            let (m, c) = &self.den.terms()[0];
            c.is_one() && m.0.iter().filter(|&&e| e > 0).count() == 1
        };
        if den_plain {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for ParamRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::str::FromStr for ParamRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        super::text::parse(s)
    }
}

impl Serialize for ParamRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ParamRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a ParamRational> for &'a ParamRational {
            type Output = ParamRational;
            fn $m(self, o: &'a ParamRational) -> ParamRational {
                let f: fn(&ParamRational, &ParamRational) -> ParamRational = $body;
                f(self, o)
            }
        }
        impl $tr<ParamRational> for ParamRational {
            type Output = ParamRational;
            fn $m(self, o: ParamRational) -> ParamRational {
                (&self).$m(&o)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_impl(b, false));
binop!(Sub, sub, |a, b| a.add_impl(b, true));
binop!(Mul, mul, |a, b| a.mul_impl(b));
binop!(Div, div, |a, b| a.try_div(b).expect("division by zero"));

impl Neg for &ParamRational {
    type Output = ParamRational;
    fn neg(self) -> ParamRational {
        ParamRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for ParamRational {
    type Output = ParamRational;
    fn neg(self) -> ParamRational {
        -&self
    }
}

impl From<i64> for ParamRational {
    fn from(n: i64) -> Self {
        ParamRational::from_int(n)
    }
}

impl From<Rational> for ParamRational {
    fn from(r: Rational) -> Self {
        ParamRational::from_rational(r)
    }
}

impl From<Param> for ParamRational {
    fn from(p: Param) -> Self {
        ParamRational::param(p)
    }
}

/// Monomial `p^e` as a rational function.
pub fn param_pow(p: Param, e: u16) -> ParamRational {
    ParamRational::from_poly(Poly::monomial(Mono::var(p, e), Rational::one()))
}
