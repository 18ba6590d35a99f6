//! Laurent polynomials in `n` variables, Cherednik–Dunkl operators and
//! non-symmetric Jack polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{int, Param, ParamRational, Rational};
use crate::error::{Error, Result};
use crate::partition::{prec_compare, Composition};
use crate::symfunc::{truncate_to_n_variables, Basis, SymFunc};

/// Sparse Laurent polynomial; exponent vectors have length `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Vec<i64>, ParamRational>,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let v: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| format!("({})*z{:?}", c, e))
            .collect();
        write!(f, "{}", v.join(" + "))
    }
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: ParamRational) -> Self {
        LaurentPoly::monomial(vec![0; n], c)
    }

    pub fn one(n: usize) -> Self {
        LaurentPoly::constant(n, ParamRational::one())
    }

    pub fn monomial(exp: Vec<i64>, c: ParamRational) -> Self {
        let mut p = LaurentPoly::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// `z_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        LaurentPoly::monomial(e, ParamRational::one())
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, ParamRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[i64]) -> ParamRational {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: ParamRational) {
        debug_assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), -c);
        }
        r
    }

    pub fn scale(&self, c: &ParamRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.n);
        }
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = LaurentPoly::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                r.add_term(e, ca * cb);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `f*`: exponents negated.
    pub fn star(&self) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// `K_ij f`: exchange of `z_i` and `z_j` (1-based).
    pub fn swap(&self, i: usize, j: usize) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i - 1, j - 1);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// `D_i = z_i ∂/∂z_i`.
    pub fn euler(&self, i: usize) -> LaurentPoly {
        let mut r = LaurentPoly::zero(self.n);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), c.scale(&int(e[i - 1])));
        }
        r
    }

    pub fn try_map_coeffs<F: Fn(&ParamRational) -> Result<ParamRational>>(&self, f: F) -> Result<LaurentPoly> {
        let mut r = LaurentPoly::zero(self.n);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), f(c)?);
        }
        Ok(r)
    }
}

pub fn constant_term(f: &LaurentPoly) -> ParamRational {
    f.coeff(&vec![0; f.n])
}

/// `θ_ij (1 − K_ij) f` with `θ_ij = z_i/(z_i − z_j)`; always a Laurent polynomial.
pub fn apply_theta_diff(i: usize, j: usize, f: &LaurentPoly) -> LaurentPoly {
    let (ii, jj) = (i - 1, j - 1);
    let mut r = LaurentPoly::zero(f.n);
    for (e, c) in &f.terms {
        let (a, b) = (e[ii], e[jj]);
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => {}
            std::cmp::Ordering::Greater => {
                for m in 0..(a - b) {
                    let mut e2 = e.clone();
                    e2[ii] = a - m;
                    e2[jj] = b + m;
                    r.add_term(e2, c.clone());
                }
            }
            std::cmp::Ordering::Less => {
                for m in 0..(b - a) {
                    let mut e2 = e.clone();
                    e2[ii] = b - m;
                    e2[jj] = a + m;
                    r.add_term(e2, -c);
                }
            }
        }
    }
    r
}

/// Number of variables and the coupling β.
#[derive(Clone, Debug, PartialEq)]
pub struct DunklSpec {
    pub n: usize,
    pub beta: ParamRational,
}

impl DunklSpec {
    pub fn new(n: usize, beta: ParamRational) -> Result<Self> {
        if beta.is_zero() {
            return Err(Error::Invalid("β must be nonzero".into()));
        }
        if let Some(b) = beta.as_rational() {
            if b <= Rational::zero() {
                return Err(Error::Invalid("numeric β must be positive".into()));
            }
        }
        Ok(DunklSpec { n, beta })
    }

    pub fn formal(n: usize) -> Self {
        DunklSpec {
            n,
            beta: ParamRational::param(Param::B),
        }
    }

    pub fn beta_inv(&self) -> ParamRational {
        self.beta.inv().expect("β nonzero")
    }
}

/// `d_i(β) = β⁻¹D_i + n − i + Σ_{j>i} θ_ji(K_ij − 1) − Σ_{j<i} θ_ij(K_ij − 1)`.
pub fn apply_dunkl(i: usize, f: &LaurentPoly, spec: &DunklSpec) -> LaurentPoly {
    let n = spec.n;
    let mut r = f.euler(i).scale(&spec.beta_inv());
    r = r.add(&f.scale(&ParamRational::from_int((n - i) as i64)));
    for j in (i + 1)..=n {
        r = r.sub(&apply_theta_diff(j, i, f));
    }
    for j in 1..i {
        r = r.add(&apply_theta_diff(i, j, f));
    }
    r
}

/// `f_i(t; β) = β⁻¹ t_i + n − ρ_i(t)`.
pub fn dunkl_eigenvalue(t: &Composition, i: usize, beta: &ParamRational) -> ParamRational {
    let n = t.len();
    let ti = t.0[i - 1];
    let rho = t.0[..i].iter().filter(|&&x| x >= ti).count()
        + t.0[i..].iter().filter(|&&x| x > ti).count();
    let binv = beta.inv().expect("β nonzero");
    &binv.scale(&int(ti)) + &ParamRational::from_int(n as i64 - rho as i64)
}

/// Linear extension of `≺`: larger keys are higher.
fn prec_key(r: &[i64]) -> (Vec<i64>, std::cmp::Reverse<Vec<i64>>) {
    let mut s = r.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    let ps: Vec<i64> = s
        .iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let mut rev = r.to_vec();
    rev.reverse();
    (ps, std::cmp::Reverse(rev))
}

/// `{r : r ⪯ t}`, highest first.
pub fn prec_support(t: &Composition) -> Vec<Vec<i64>> {
    let n = t.len();
    if n == 0 {
        return vec![Vec::new()];
    }
    let lo = *t.0.iter().min().expect("nonempty");
    let hi = *t.0.iter().max().expect("nonempty");
    let w = t.weight();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, lo: i64, hi: i64, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let k = n - cur.len();
        if k == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if left < lo * k as i64 || left > hi * k as i64 {
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            rec(n, lo, hi, left - v, cur, out);
            cur.pop();
        }
    }
    rec(n, lo, hi, w, &mut cur, &mut out);
    out.retain(|r| *r == t.0 || prec_compare(&Composition(r.clone()), t).unwrap_or(false));
    out.sort_by_key(|r| std::cmp::Reverse(prec_key(r)));
    out
}

/// Non-symmetric Jack polynomial `E_t = z^t + Σ_{r ≺ t} e_r z^r`.
pub fn nonsym_jack(t: &Composition, spec: &DunklSpec) -> Result<LaurentPoly> {
    if t.len() != spec.n {
        return Err(Error::Invalid("composition length differs from n".into()));
    }
    let n = spec.n;
    let support = prec_support(t);
    let index: BTreeMap<&Vec<i64>, usize> = support.iter().enumerate().map(|(k, r)| (r, k)).collect();
    // images[k][i] = d_{i+1} z^{support[k]}
    let mut images: Vec<Vec<LaurentPoly>> = Vec::with_capacity(support.len());
    for r in &support {
        let z = LaurentPoly::monomial(r.clone(), ParamRational::one());
        let row: Vec<LaurentPoly> = (1..=n).map(|i| apply_dunkl(i, &z, spec)).collect();
        for img in &row {
            if img.terms.keys().any(|e| !index.contains_key(e)) {
                return Err(Error::Invalid(format!("support of {:?} is not d-invariant", t)));
            }
        }
        images.push(row);
    }
    let ft: Vec<ParamRational> = (1..=n).map(|i| dunkl_eigenvalue(t, i, &spec.beta)).collect();
    let mut coeffs: Vec<ParamRational> = vec![ParamRational::zero(); support.len()];
    coeffs[0] = ParamRational::one();
    for k in 1..support.len() {
        let r = Composition(support[k].clone());
        let mut solved = false;
        for i in 1..=n {
            let gap = &ft[i - 1] - &dunkl_eigenvalue(&r, i, &spec.beta);
            if gap.is_zero() {
                continue;
            }
            let mut rhs = ParamRational::zero();
            for kk in 0..k {
                if coeffs[kk].is_zero() {
                    continue;
                }
                let m = images[kk][i - 1].coeff(&support[k]);
                if !m.is_zero() {
                    rhs = &rhs + &(&m * &coeffs[kk]);
                }
            }
            coeffs[k] = rhs.try_div(&gap)?;
            solved = true;
            break;
        }
        if !solved {
            return Err(Error::NonGeneric(format!(
                "spectrum of {:?} and {:?} coincides at β = {}",
                t, r, spec.beta
            )));
        }
    }
    let mut e = LaurentPoly::zero(n);
    for (r, c) in support.into_iter().zip(coeffs) {
        e.add_term(r, c);
    }
    Ok(e)
}

/// `(A_i, B_i)` with `K_{i,i+1} E_t = A_i E_t + B_i E_{(i,i+1)t}`.
pub fn k_action_coeffs(t: &Composition, i: usize, beta: &ParamRational) -> Result<(ParamRational, ParamRational)> {
    let d = &dunkl_eigenvalue(t, i, beta) - &dunkl_eigenvalue(t, i + 1, beta);
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let a = d.inv()?;
    let (ti, tj) = (t.0[i - 1], t.0[i]);
    let b = match ti.cmp(&tj) {
        std::cmp::Ordering::Greater => {
            let d2 = &d * &d;
            (&d2 - &ParamRational::one()).try_div(&d2)?
        }
        std::cmp::Ordering::Equal => ParamRational::zero(),
        std::cmp::Ordering::Less => ParamRational::one(),
    };
    Ok((a, b))
}

/// Symmetric weight functions for constant-term products.
#[derive(Clone, Debug)]
pub enum WeightKind {
    /// `∇(b,N) = ∏_{i≠j}(1 − x_i^N x_j^{−N})^b`.
    Nabla { b: u32, n: usize },
    /// `Δ(b,N) = ∇(b,N) ∏_{i≠j}(1 − x_i/x_j)`.
    Delta { b: u32, n: usize },
    /// `□(q,q^k) = ∏_{i≠j} ∏_{r<k} (1 − q^r x_i/x_j)`.
    Box { k: u32 },
    /// `Δ(w;δ) = ∏_{i≠j}(1 − w_i/w_j)^δ`.
    Sutherland { delta: u32 },
}

fn pair_factor(nv: usize, i: usize, j: usize, power: i64, c: ParamRational) -> LaurentPoly {
    let mut e = vec![0; nv];
    e[i] = power;
    e[j] = -power;
    let mut f = LaurentPoly::one(nv);
    f.add_term(e, -c);
    f
}

pub fn weight_function(kind: &WeightKind, nv: usize) -> LaurentPoly {
    let mut w = LaurentPoly::one(nv);
    for i in 0..nv {
        for j in 0..nv {
            if i == j {
                continue;
            }
            match kind {
                WeightKind::Nabla { b, n } | WeightKind::Delta { b, n } => {
                    let f = pair_factor(nv, i, j, *n as i64, ParamRational::one());
                    w = w.mul(&f.pow(*b));
                    if matches!(kind, WeightKind::Delta { .. }) {
                        w = w.mul(&pair_factor(nv, i, j, 1, ParamRational::one()));
                    }
                }
                WeightKind::Box { k } => {
                    for r in 0..*k {
                        let q = ParamRational::param(Param::Q).pow(r as i32).expect("q power");
                        w = w.mul(&pair_factor(nv, i, j, 1, q));
                    }
                }
                WeightKind::Sutherland { delta } => {
                    w = w.mul(&pair_factor(nv, i, j, 1, ParamRational::one()).pow(*delta));
                }
            }
        }
    }
    w
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(int(1), |a, k| a * int(k as i64))
}

/// Serialized Laurent polynomial; terms in decreasing exponent order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub nvars: usize,
    pub terms: Vec<LaurentTermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaurentTermJson {
    pub exp: Vec<i64>,
    pub coeff: ParamRational,
}

impl LaurentPoly {
    pub fn to_json(&self) -> LaurentJson {
        LaurentJson {
            nvars: self.n,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| LaurentTermJson { exp: e.clone(), coeff: c.clone() })
                .collect(),
        }
    }

    pub fn from_json(j: &LaurentJson) -> Result<LaurentPoly> {
        let mut f = LaurentPoly::zero(j.nvars);
        for t in &j.terms {
            if t.exp.len() != j.nvars {
                return Err(Error::Invalid("exponent length differs from nvars".into()));
            }
            f.add_term(t.exp.clone(), t.coeff.clone());
        }
        Ok(f)
    }
}

/// `(1/n!) [weight · f* · g]_1`.
pub fn scalar_laurent(f: &LaurentPoly, g: &LaurentPoly, weight: &LaurentPoly) -> ParamRational {
    let h = f.star().mul(g);
    let mut s = ParamRational::zero();
    for (e, c) in &h.terms {
        let neg: Vec<i64> = e.iter().map(|x| -x).collect();
        if let Some(w) = weight.terms.get(&neg) {
            s = &s + &(c * w);
        }
    }
    s.scale(&(int(1) / factorial(f.n)))
}

/// `H^K = β² Σ_i (d_i + (1−n)/2)²`.
pub fn hamiltonian_via_dunkl(f: &LaurentPoly, spec: &DunklSpec) -> LaurentPoly {
    let shift = ParamRational::frac(1 - spec.n as i64, 2);
    let mut acc = LaurentPoly::zero(spec.n);
    for i in 1..=spec.n {
        let once = apply_dunkl(i, f, spec).add(&f.scale(&shift));
        let twice = apply_dunkl(i, &once, spec).add(&once.scale(&shift));
        acc = acc.add(&twice);
    }
    acc.scale(&(&spec.beta * &spec.beta))
}

/// Distinct rearrangements of `v` (multiset permutations).
pub fn distinct_permutations(v: &[i64]) -> Vec<Vec<i64>> {
    let mut s = v.to_vec();
    s.sort_unstable();
    let mut out = vec![s.clone()];
    // Next lexicographic permutation loop.
    loop {
        let n = s.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && s[i - 1] >= s[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while s[j] <= s[i - 1] {
            j -= 1;
        }
        s.swap(i - 1, j);
        s[i..].reverse();
        out.push(s.clone());
    }
    out
}

/// Expands a symmetric function in `n` variables.
pub fn symfunc_to_laurent(f: &SymFunc, n: usize) -> Result<LaurentPoly> {
    let m = truncate_to_n_variables(&f.to_basis(Basis::Monomial), n)?;
    let mut p = LaurentPoly::zero(n);
    for (l, c) in m.terms() {
        let mut e: Vec<i64> = l.parts().iter().map(|&x| x as i64).collect();
        e.resize(n, 0);
        for perm in distinct_permutations(&e) {
            p.add_term(perm, c.clone());
        }
    }
    Ok(p)
}
