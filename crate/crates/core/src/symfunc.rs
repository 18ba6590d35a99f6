//! Symmetric functions in the monomial, Schur and power-sum bases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::arith::{Param, ParamRational, Rational};
use crate::error::{Error, Result};
use crate::partition::{enumerate_tableau_chains, partitions_of, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "s")]
    Schur,
    #[serde(rename = "p")]
    Power,
}

impl Basis {
    pub fn parse(s: &str) -> Result<Basis> {
        match s {
            "m" | "monomial" => Ok(Basis::Monomial),
            "s" | "schur" => Ok(Basis::Schur),
            "p" | "power" => Ok(Basis::Power),
            _ => Err(Error::Parse(format!("unknown basis {:?}", s))),
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Schur => "s",
            Basis::Power => "p",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Sparse symmetric function; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, ParamRational>,
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .iter()
            .map(|(l, c)| format!("({})*{}{}", c, self.basis.letter(), l))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: Basis, l: Partition) -> Self {
        let mut f = SymFunc::zero(basis);
        f.terms.insert(l, ParamRational::one());
        f
    }

    pub fn monomial(l: Partition) -> Self {
        SymFunc::basis_element(Basis::Monomial, l)
    }

    pub fn schur(l: Partition) -> Self {
        SymFunc::basis_element(Basis::Schur, l)
    }

    pub fn power(l: Partition) -> Self {
        SymFunc::basis_element(Basis::Power, l)
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, ParamRational)>>(basis: Basis, it: I) -> Self {
        let mut f = SymFunc::zero(basis);
        for (l, c) in it {
            f.add_term(l, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, ParamRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, l: &Partition) -> ParamRational {
        self.terms.get(l).cloned().unwrap_or_else(ParamRational::zero)
    }

    pub fn add_term(&mut self, l: Partition, c: ParamRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(l) {
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

    /// Terms ordered by weight, then dominance-compatible reverse-lex.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &ParamRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.weight().cmp(&b.0.weight()).then_with(|| b.0.cmp(a.0)));
        v
    }

    pub fn add(&self, o: &SymFunc) -> SymFunc {
        let o = o.to_basis(self.basis);
        let mut r = self.clone();
        for (l, c) in o.terms {
            r.add_term(l, c);
        }
        r
    }

    pub fn sub(&self, o: &SymFunc) -> SymFunc {
        self.add(&o.scale(&ParamRational::from_int(-1)))
    }

    pub fn scale(&self, c: &ParamRational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    pub fn try_map_coeffs<F: Fn(&ParamRational) -> Result<ParamRational>>(&self, f: F) -> Result<SymFunc> {
        let mut out = SymFunc::zero(self.basis);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn substitute(&self, p: Param, v: &ParamRational) -> Result<SymFunc> {
        self.try_map_coeffs(|c| c.substitute(p, v))
    }

    pub fn to_basis(&self, target: Basis) -> SymFunc {
        basis_convert(self, target)
    }

    /// Equality as symmetric functions, independent of basis.
    pub fn equals(&self, o: &SymFunc) -> bool {
        self.to_basis(Basis::Monomial) == o.to_basis(Basis::Monomial)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|l| l.weight()).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> SymFuncJson {
        SymFuncJson {
            basis: self.basis,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(l, c)| TermJson {
                    label: l.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &SymFuncJson) -> SymFunc {
        SymFunc::from_terms(j.basis, j.terms.iter().map(|t| (t.label.clone(), t.coeff.clone())))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub label: Partition,
    pub coeff: ParamRational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub basis: Basis,
    pub terms: Vec<TermJson>,
}

/// Dense transition matrices for one degree; rows expand the source basis.
pub struct Tables {
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `mats[from][to]`.
    mats: [[Vec<Vec<Rational>>; 3]; 3],
}

impl Tables {
    pub fn index_of(&self, l: &Partition) -> usize {
        self.index[l]
    }

    pub fn matrix(&self, from: Basis, to: Basis) -> &Vec<Vec<Rational>> {
        &self.mats[from.index()][to.index()]
    }

    fn build(d: usize) -> Tables {
        let parts = partitions_of(d);
        let n = parts.len();
        let index: HashMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut kostka = vec![vec![Rational::zero(); n]; n];
        let mut pm = vec![vec![Rational::zero(); n]; n];
        for (i, l) in parts.iter().enumerate() {
            for (j, mu) in parts.iter().enumerate() {
                let k = enumerate_tableau_chains(l, mu.parts()).len();
                kostka[i][j] = Rational::from_integer(k.into());
                pm[i][j] = Rational::from_integer(power_in_monomial(l, mu).into());
            }
        }
        let ks = invert(&kostka);
        let pminv = invert(&pm);
        let ident = identity(n);
        let sp = matmul(&kostka, &pminv);
        let ps = matmul(&pm, &ks);
        // Indices: m=0, s=1, p=2.
        let mats = [
            [ident.clone(), ks, pminv],
            [kostka, ident.clone(), sp],
            [pm, ps, ident],
        ];
        Tables { parts, index, mats }
    }
}

static TABLES: Lazy<Mutex<HashMap<usize, Arc<Tables>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Memoized transition tables for degree `d`.
pub fn tables(d: usize) -> Arc<Tables> {
    if let Some(t) = TABLES.lock().expect("tables lock").get(&d) {
        return t.clone();
    }
    let t = Arc::new(Tables::build(d));
    TABLES.lock().expect("tables lock").entry(d).or_insert(t).clone()
}

/// Coefficient of `x^mu` in `p_lambda`, by expanding in `ℓ(mu)` variables.
fn power_in_monomial(l: &Partition, mu: &Partition) -> u64 {
    fn rec(parts: &[usize], slots: &mut Vec<usize>) -> u64 {
        match parts.split_first() {
            None => slots.iter().all(|&s| s == 0) as u64,
            Some((&p, rest)) => {
                let mut total = 0;
                for j in 0..slots.len() {
                    if slots[j] >= p {
                        slots[j] -= p;
                        total += rec(rest, slots);
                        slots[j] += p;
                    }
                }
                total
            }
        }
    }
    rec(l.parts(), &mut mu.parts().to_vec())
}

fn identity(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

fn matmul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut s = Rational::zero();
                    for (k, bk) in b.iter().enumerate() {
                        if !a[i][k].is_zero() && !bk[j].is_zero() {
                            s += &a[i][k] * &bk[j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Gauss–Jordan inverse of an invertible rational matrix.
pub fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv = identity(n);
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible matrix");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    inv
}

pub fn basis_convert(f: &SymFunc, target: Basis) -> SymFunc {
    if f.basis == target {
        return f.clone();
    }
    let mut acc: BTreeMap<Partition, Vec<(Rational, ParamRational)>> = BTreeMap::new();
    for (l, c) in &f.terms {
        let t = tables(l.weight());
        let row = &t.matrix(f.basis, target)[t.index_of(l)];
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() {
                acc.entry(t.parts[j].clone()).or_default().push((x.clone(), c.clone()));
            }
        }
    }
    let mut out = SymFunc::zero(target);
    for (l, contributions) in acc {
        let mut s = ParamRational::zero();
        for (x, c) in contributions {
            s = &s + &c.scale(&x);
        }
        out.add_term(l, s);
    }
    out
}

/// `z_λ = ∏ i^{m_i} m_i!`.
pub fn z_lambda(l: &Partition) -> Rational {
    let mut z = Rational::one();
    for (i, &m) in l.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m {
            z *= Rational::from_integer((i * k).into());
        }
    }
    z
}

/// Diagonal action on the power basis, returned in the input basis.
fn power_diagonal<F: Fn(&Partition) -> Result<ParamRational>>(f: &SymFunc, factor: F) -> Result<SymFunc> {
    let p = f.to_basis(Basis::Power);
    let mut out = SymFunc::zero(Basis::Power);
    for (l, c) in &p.terms {
        out.add_term(l.clone(), c * &factor(l)?);
    }
    Ok(out.to_basis(f.basis))
}

fn sign_of(l: &Partition) -> i64 {
    if (l.weight() - l.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `ω: p_i ↦ (−1)^{i−1} p_i`.
pub fn omega(f: &SymFunc) -> SymFunc {
    if f.basis == Basis::Schur {
        return SymFunc::from_terms(
            Basis::Schur,
            f.terms.iter().map(|(l, c)| (l.conjugate(), c.clone())),
        );
    }
    power_diagonal(f, |l| Ok(ParamRational::from_int(sign_of(l)))).expect("infallible")
}

/// `ω_{γ,N}: p_i ↦ (−1)^{i−1} γ^{−δ(N|i)} p_i`.
pub fn omega_gamma_n(f: &SymFunc, gamma: &ParamRational, n: usize) -> Result<SymFunc> {
    if gamma.is_zero() {
        return Err(Error::Invalid("ω_{γ,N} needs γ ≠ 0".into()));
    }
    let ginv = gamma.inv()?;
    power_diagonal(f, |l| {
        Ok(ginv.pow(l.parts_divisible_by(n) as i32)?.scale(&Rational::from_integer(sign_of(l).into())))
    })
}

#[derive(Clone, Debug)]
pub enum ScalarKind {
    Standard,
    GammaN(ParamRational, usize),
}

pub fn scalar_product(f: &SymFunc, g: &SymFunc, kind: &ScalarKind) -> Result<ParamRational> {
    let fp = f.to_basis(Basis::Power);
    let gp = g.to_basis(Basis::Power);
    let mut s = ParamRational::zero();
    for (l, c) in &fp.terms {
        if let Some(d) = gp.terms.get(l) {
            let mut w = (c * d).scale(&z_lambda(l));
            if let ScalarKind::GammaN(gamma, n) = kind {
                w = &w * &gamma.pow(-(l.parts_divisible_by(*n) as i32))?;
            }
            s = &s + &w;
        }
    }
    Ok(s)
}

/// Drops power sums having a part divisible by `N`; result in the input basis.
pub fn project_pi(f: &SymFunc, n: usize) -> SymFunc {
    power_diagonal(f, |l| {
        Ok(if l.parts_divisible_by(n) > 0 {
            ParamRational::zero()
        } else {
            ParamRational::one()
        })
    })
    .expect("infallible")
}

pub fn truncate_to_n_variables(f: &SymFunc, n: usize) -> Result<SymFunc> {
    if f.basis == Basis::Power {
        return Err(Error::Invalid("truncation is not defined in the power basis".into()));
    }
    Ok(SymFunc {
        basis: f.basis,
        terms: f
            .terms
            .iter()
            .filter(|(l, _)| l.len() <= n)
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect(),
    })
}
