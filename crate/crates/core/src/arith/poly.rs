//! Sparse polynomials over Q in the fixed parameter set `q, t, g, b, u, e`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Number of formal parameters.
pub const NPARAMS: usize = 6;

/// Formal parameters in their fixed global order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    Q = 0,
    T = 1,
    /// γ, printed `g`.
    G = 2,
    /// β, printed `b`.
    B = 3,
    U = 4,
    /// ε, used for limits at infinity, printed `e`.
    E = 5,
}

impl Param {
    pub const ALL: [Param; NPARAMS] = [Param::Q, Param::T, Param::G, Param::B, Param::U, Param::E];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        ['q', 't', 'g', 'b', 'u', 'e'][self as usize]
    }

    pub fn from_symbol(c: char) -> Option<Param> {
        Param::ALL.iter().copied().find(|p| p.symbol() == c)
    }
}

/// Exponent vector; ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub [u16; NPARAMS]);

impl Mono {
    pub fn one() -> Mono {
        Mono([0; NPARAMS])
    }

    pub fn var(p: Param, e: u16) -> Mono {
        let mut m = [0; NPARAMS];
        m[p.index()] = e;
        Mono(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Mono(m)
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming divisibility.
    pub fn quotient_of(&self, o: &Mono) -> Mono {
        let mut m = o.0;
        for (a, b) in m.iter_mut().zip(self.0.iter()) {
            *a -= *b;
        }
        Mono(m)
    }

    fn mask(&self) -> u8 {
        let mut m = 0;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                m |= 1 << i;
            }
        }
        m
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with terms sorted by decreasing monomial; no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, Rational)>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Mono::one(), c)],
            }
        }
    }

    pub fn var(p: Param) -> Poly {
        Poly {
            terms: vec![(Mono::var(p, 1), Rational::one())],
        }
    }

    pub fn monomial(m: Mono, c: Rational) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary terms, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Rational)>>(it: I) -> Poly {
        let mut map: BTreeMap<Mono, Rational> = BTreeMap::new();
        for (m, c) in it {
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        Poly::from_map(map)
    }

    fn from_map(map: BTreeMap<Mono, Rational>) -> Poly {
        Poly {
            terms: map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Mono, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Constant value if the polynomial has no parameter dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            Some(Rational::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<&(Mono, Rational)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Bitmask of parameters that occur.
    pub fn var_mask(&self) -> u8 {
        self.terms.iter().fold(0, |m, (mo, _)| m | mo.mask())
    }

    pub fn degree_in(&self, p: Param) -> u16 {
        self.terms.iter().map(|(m, _)| m.0[p.index()]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_mono(&self, mo: &Mono) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.mul(mo), a.clone())).collect(),
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.combine(o, true)
    }

    fn combine(&self, o: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            let ord = match (self.terms.get(i), o.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &o.terms[j];
                    out.push((*m, if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &self.terms[i].1 - &o.terms[j].1
                    } else {
                        &self.terms[i].1 + &o.terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        let mut map: BTreeMap<Mono, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let e = map.entry(ma.mul(mb)).or_insert_with(Rational::zero);
                *e += ca * cb;
            }
        }
        Poly::from_map(map)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division; `None` if `o` does not divide `self`.
    pub fn div_exact(&self, o: &Poly) -> Option<Poly> {
        assert!(!o.is_zero(), "division by zero polynomial");
        if let Some(c) = o.as_constant() {
            return Some(self.scale(&(Rational::one() / c)));
        }
        let (lm, lc) = o.terms[0].clone();
        let mut rem: BTreeMap<Mono, Rational> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Mono, Rational)> = Vec::new();
        while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient_of(&m);
            let qc = &c / &lc;
            for (om, oc) in &o.terms {
                let key = om.mul(&qm);
                let e = rem.entry(key).or_insert_with(Rational::zero);
                *e -= &qc * oc;
                if e.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
        }
        Some(Poly::from_terms(quot))
    }

    /// Coefficients as a polynomial in `p`: index `i` holds the coefficient of `p^i`.
    pub fn to_univariate(&self, p: Param) -> Vec<Poly> {
        let d = self.degree_in(p) as usize;
        let mut buckets: Vec<Vec<(Mono, Rational)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let mut m2 = *m;
            let e = m2.0[p.index()] as usize;
            m2.0[p.index()] = 0;
            buckets[e].push((m2, c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    pub fn from_univariate(p: Param, coeffs: &[Poly]) -> Poly {
        let mut acc = Poly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&c.mul_mono(&Mono::var(p, i as u16)));
            }
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&(Rational::one() / c)),
        }
    }

    /// Evaluates at rational values for every parameter present.
    pub fn eval_rational(&self, vals: &[Option<Rational>; NPARAMS]) -> Poly {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let mut m2 = *m;
            let mut c2 = c.clone();
            for (k, v) in vals.iter().enumerate() {
                if let Some(v) = v {
                    if m2.0[k] > 0 {
                        c2 *= pow_rat(v, m2.0[k] as u32);
                        m2.0[k] = 0;
                    }
                }
            }
            out.push((m2, c2));
        }
        Poly::from_terms(out)
    }

    /// Least common multiple of coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()))
    }

    /// True if every coefficient is positive.
    pub fn all_coeffs_positive(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_positive())
    }
}

pub fn pow_rat(v: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= v;
    }
    acc
}

/// Greatest common divisor, normalized to leading coefficient 1.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a.monic();
    }
    let (ma, mb) = (a.var_mask(), b.var_mask());
    let all = ma | mb;
    let x = Param::ALL[all.trailing_zeros() as usize];
    let bit = 1u8 << x.index();
    if mb & bit == 0 {
        return gcd(&content(a, x), b);
    }
    if ma & bit == 0 {
        return gcd(a, &content(b, x));
    }
    let ca = content(a, x);
    let cb = content(b, x);
    let g = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides").to_univariate(x);
    let mut r = b.div_exact(&cb).expect("content divides").to_univariate(x);
    if p.len() < r.len() {
        std::mem::swap(&mut p, &mut r);
    }
    loop {
        let rem = prem(&p, &r);
        if rem.is_empty() {
            break;
        }
        if rem.len() == 1 {
            return g.monic();
        }
        p = r;
        r = primitive_univariate(&rem);
    }
    let res = Poly::from_univariate(x, &primitive_univariate(&r));
    res.mul(&g).monic()
}

/// Gcd of the coefficients of `a` viewed as a polynomial in `x`.
pub fn content(a: &Poly, x: Param) -> Poly {
    let coeffs = a.to_univariate(x);
    let mut g = Poly::zero();
    // Smaller coefficients first keeps the recursion cheap.
    let mut cs: Vec<&Poly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    cs.sort_by_key(|c| (c.total_degree(), c.terms.len()));
    for c in cs {
        g = gcd(&g, c);
        if g.is_constant() {
            return Poly::one();
        }
    }
    g
}

fn primitive_univariate(c: &[Poly]) -> Vec<Poly> {
    let mut g = Poly::zero();
    for k in c.iter().filter(|k| !k.is_zero()) {
        g = gcd(&g, k);
        if g.is_constant() {
            break;
        }
    }
    let lead = c.last().expect("nonempty");
    let g = if g.is_constant() { Poly::one() } else { g };
    let mut out: Vec<Poly> = c
        .iter()
        .map(|k| k.div_exact(&g).expect("content divides"))
        .collect();
    // Keep rational coefficients small: normalize the leading numeric coefficient.
    let lc = lead.div_exact(&g).expect("content divides").leading_coeff();
    if !lc.is_one() {
        let inv = Rational::one() / lc;
        for k in out.iter_mut() {
            *k = k.scale(&inv);
        }
    }
    out
}

/// Pseudo-remainder of univariate polynomials with polynomial coefficients.
fn prem(p: &[Poly], q: &[Poly]) -> Vec<Poly> {
    let dq = q.len() - 1;
    let lq = &q[dq];
    let mut r: Vec<Poly> = p.to_vec();
    trim(&mut r);
    while !r.is_empty() && r.len() > dq {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dq;
        let mut next: Vec<Poly> = r.iter().map(|c| c.mul(lq)).collect();
        for (i, qc) in q.iter().enumerate() {
            next[i + shift] = next[i + shift].sub(&qc.mul(&lr));
        }
        debug_assert!(next[dr].is_zero());
        r = next;
        trim(&mut r);
        let pp = primitive_univariate_opt(&r);
        r = pp;
    }
    r
}

fn primitive_univariate_opt(r: &[Poly]) -> Vec<Poly> {
    if r.is_empty() {
        Vec::new()
    } else {
        primitive_univariate(r)
    }
}

fn trim(v: &mut Vec<Poly>) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for p in Param::ALL {
                let e = m.0[p.index()];
                if e == 1 {
                    factors.push(p.symbol().to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", p.symbol(), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
