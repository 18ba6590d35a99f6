//! Yangian blocks of the Fock and basic modules: coordinate and spin
//! configurations, block members, Gelfand–Zetlin spectra, ribbons and
//! Drinfeld polynomials.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{int, Param, ParamRational};
use crate::error::{Error, Result};
use crate::fock::{join_index, split_index, WedgeIndex};
use crate::partition::Partition;

/// `m = ((r_1)^{p_1} … (r_l)^{p_l})` followed by the vacuum tail of `ō`.
///
/// Stored canonically: trailing groups that already agree with `ō` are
/// dropped, so the vacuum is the empty prefix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoordinateConfig {
    pub big_n: usize,
    groups: Vec<(i64, usize)>,
}

impl CoordinateConfig {
    /// Validates the prefix and canonicalizes it.
    pub fn new(big_n: usize, groups: Vec<(i64, usize)>) -> Result<Self> {
        if big_n == 0 {
            return Err(Error::Invalid("N must be positive".into()));
        }
        for w in groups.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::Invalid(format!("values {} and {} are not increasing", w[0].0, w[1].0)));
            }
        }
        if let Some(&(r, p)) = groups.iter().find(|(_, p)| *p == 0 || *p > big_n) {
            return Err(Error::Invalid(format!("multiplicity {} of {} outside 1..={}", p, r, big_n)));
        }
        let len: usize = groups.iter().map(|g| g.1).sum();
        if !len.is_multiple_of(big_n) {
            return Err(Error::Invalid(format!(
                "prefix length {} is not a multiple of N = {}; the tail cannot match the vacuum",
                len, big_n
            )));
        }
        if let Some(&(r, _)) = groups.last() {
            if r > (len / big_n) as i64 {
                return Err(Error::Invalid(format!("value {} collides with the vacuum tail", r)));
            }
        }
        let mut c = CoordinateConfig { big_n, groups };
        c.canonicalize();
        Ok(c)
    }

    pub fn vacuum(big_n: usize) -> Self {
        CoordinateConfig { big_n, groups: vec![] }
    }

    fn canonicalize(&mut self) {
        loop {
            let len: usize = self.groups.iter().map(|g| g.1).sum();
            match self.groups.last() {
                Some(&(r, p)) if p == self.big_n && r == (len / self.big_n) as i64 => {
                    self.groups.pop();
                }
                _ => break,
            }
        }
    }

    /// Parses `"0^2,1,2^3"`; the empty string is the vacuum.
    pub fn parse(s: &str, big_n: usize) -> Result<Self> {
        let s = s.trim();
        let mut groups = vec![];
        if !s.is_empty() {
            for tok in s.split(',') {
                let tok = tok.trim();
                let (r, p) = match tok.split_once('^') {
                    Some((r, p)) => (r.trim(), p.trim()),
                    None => (tok, "1"),
                };
                let r: i64 = r.parse().map_err(|_| Error::Parse(format!("bad value {:?}", r)))?;
                let p: usize = p.parse().map_err(|_| Error::Parse(format!("bad multiplicity {:?}", p)))?;
                groups.push((r, p));
            }
        }
        CoordinateConfig::new(big_n, groups)
    }

    pub fn groups(&self) -> &[(i64, usize)] {
        &self.groups
    }

    pub fn prefix_len(&self) -> usize {
        self.groups.iter().map(|g| g.1).sum()
    }

    pub fn is_vacuum(&self) -> bool {
        self.groups.is_empty()
    }

    /// `l(m)`: index of the last group with multiplicity below `N`.
    pub fn l(&self) -> usize {
        self.groups.iter().rposition(|g| g.1 < self.big_n).map(|i| i + 1).unwrap_or(0)
    }

    /// The first `len` entries, continuing with `ō`.
    pub fn sequence(&self, len: usize) -> Vec<i64> {
        let mut v: Vec<i64> = self.groups.iter().flat_map(|&(r, p)| std::iter::repeat_n(r, p)).collect();
        while v.len() < len {
            v.push((v.len() / self.big_n) as i64 + 1);
        }
        v.truncate(len.max(self.prefix_len()));
        v
    }

    /// Membership in `W_N`: all values up to the tail are consecutive.
    pub fn in_w_n(&self) -> bool {
        let tail = (self.prefix_len() / self.big_n) as i64 + 1;
        let mut vals: Vec<i64> = self.groups.iter().map(|g| g.0).collect();
        vals.push(tail);
        vals.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

impl fmt::Display for CoordinateConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.prefix_len();
        let tail = (len / self.big_n) as i64 + 1;
        let mut parts: Vec<String> = self
            .groups
            .iter()
            .map(|&(r, p)| if p == 1 { format!("({})", r) } else { format!("({})^{}", r, p) })
            .collect();
        parts.push(format!("({})^{}…", tail, self.big_n));
        write!(f, "({})", parts.join(""))
    }
}

/// Spin prefix over `1..=N` followed by `(N, N−1, …, 1)` repeated.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SpinConfig {
    pub big_n: usize,
    prefix: Vec<usize>,
}

impl SpinConfig {
    pub fn new(big_n: usize, mut prefix: Vec<usize>) -> Result<Self> {
        if prefix.iter().any(|&s| s == 0 || s > big_n) {
            return Err(Error::Invalid(format!("spins outside 1..={}", big_n)));
        }
        while !prefix.len().is_multiple_of(big_n) {
            let i = prefix.len();
            prefix.push(vacuum_spin(i, big_n));
        }
        // Drop trailing vacuum blocks.
        while prefix.len() >= big_n {
            let start = prefix.len() - big_n;
            if (start..prefix.len()).all(|i| prefix[i] == vacuum_spin(i, big_n)) {
                prefix.truncate(start);
            } else {
                break;
            }
        }
        Ok(SpinConfig { big_n, prefix })
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn sequence(&self, len: usize) -> Vec<usize> {
        let mut v = self.prefix.clone();
        while v.len() < len {
            v.push(vacuum_spin(v.len(), self.big_n));
        }
        v
    }
}

/// Spin of `o_{i+1}` (0-based `i`).
fn vacuum_spin(i: usize, big_n: usize) -> usize {
    big_n - i % big_n
}

/// Cut length: a multiple of `N` that covers `ℓ(λ)`.
fn cut(len: usize, big_n: usize) -> usize {
    len.div_ceil(big_n) * big_n
}

/// `(m(λ), ε(λ)) = (ov(o+λ), un(o+λ))`.
pub fn configs_of(l: &Partition, big_n: usize) -> (CoordinateConfig, SpinConfig) {
    let n = cut(l.len(), big_n);
    let k = WedgeIndex::o_plus(l, n).expect("cut covers ℓ(λ)");
    let mut groups: Vec<(i64, usize)> = vec![];
    for m in k.over(big_n) {
        match groups.last_mut() {
            Some(g) if g.0 == m => g.1 += 1,
            _ => groups.push((m, 1)),
        }
    }
    let m = CoordinateConfig::new(big_n, groups).expect("o + λ gives a coordinate configuration");
    let e = SpinConfig::new(big_n, k.under(big_n)).expect("spins in range");
    (m, e)
}

/// Inverse of [`configs_of`].
pub fn partition_of(m: &CoordinateConfig, e: &SpinConfig) -> Result<Partition> {
    if m.big_n != e.big_n {
        return Err(Error::Invalid("configurations for different N".into()));
    }
    let big_n = m.big_n;
    let n = cut(m.prefix_len().max(e.prefix.len()), big_n);
    let mv = m.sequence(n);
    let ev = e.sequence(n);
    let k: Vec<i64> = mv.iter().zip(&ev).map(|(&r, &s)| join_index(s, r, big_n)).collect();
    let w = WedgeIndex::new(k).map_err(|_| Error::Invalid(format!("({}, {:?}) is not a wedge", m, e.prefix)))?;
    w.partition()
        .ok_or_else(|| Error::Invalid(format!("({}, {:?}) lies below the vacuum", m, e.prefix)))
}

fn subsets_desc(big_n: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(top: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for s in (1..=top).rev() {
            if s < p - cur.len() {
                break;
            }
            cur.push(s);
            rec(s - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    rec(big_n, p, &mut vec![], &mut out);
    out
}

/// All spin prefixes compatible with `m`: a decreasing `p`-subset per group.
fn spin_fillings(m: &CoordinateConfig) -> Vec<Vec<usize>> {
    let mut acc: Vec<Vec<usize>> = vec![vec![]];
    for &(_, p) in m.groups() {
        let choices = subsets_desc(m.big_n, p);
        acc = acc
            .iter()
            .flat_map(|pre| {
                choices.iter().map(move |c| {
                    let mut v = pre.clone();
                    v.extend_from_slice(c);
                    v
                })
            })
            .collect();
    }
    acc
}

/// A block of the Fock space: its members, listed by degree and then
/// reverse-lexicographically, and the singular (minimal degree) member.
#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    pub members: Vec<Partition>,
    pub singular: Partition,
}

fn sort_members(v: &mut [Partition]) {
    v.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| b.cmp(a)));
}

/// `{λ : m(λ) = m}`.
pub fn block_members(m: &CoordinateConfig) -> Block {
    let mut members: Vec<Partition> = spin_fillings(m)
        .into_iter()
        .map(|s| {
            let e = SpinConfig::new(m.big_n, s).expect("spins in range");
            partition_of(m, &e).expect("group fillings are wedges")
        })
        .collect();
    sort_members(&mut members);
    let singular = members[0].clone();
    Block { members, singular }
}

/// `(p_s, a_s)` with `a_s = β⁻¹ r_s − 1 + p_1 + … + p_s`, for `s ≤ l(m)`.
pub fn fock_block_factors(m: &CoordinateConfig, beta: &ParamRational) -> Result<Vec<(usize, ParamRational)>> {
    let binv = beta.inv()?;
    let mut out = vec![];
    let mut acc = 0i64;
    for &(r, p) in &m.groups()[..m.l()] {
        acc += p as i64;
        out.push((p, &binv.scale(&int(r)) + &ParamRational::from_int(acc - 1)));
    }
    Ok(out)
}

/// `β` or `β = ∞`.
#[derive(Clone, Debug, PartialEq)]
pub enum Coupling {
    Value(ParamRational),
    Infinity,
}

fn u() -> ParamRational {
    ParamRational::param(Param::U)
}

fn ratio(num: ParamRational, den: ParamRational) -> ParamRational {
    num.try_div(&den).expect("nonzero linear factor in u")
}

/// `A_m(u; β; k)` at finite `n`.
pub fn yangian_eigenvalue_finite(m_index: usize, k: &WedgeIndex, beta: &ParamRational, big_n: usize) -> Result<ParamRational> {
    let binv = beta.inv()?;
    let mut acc = ParamRational::one();
    for (i, (ob, ub)) in k.over(big_n).into_iter().zip(k.under(big_n)).enumerate() {
        let base = &(&u() + &binv.scale(&int(ob))) + &ParamRational::from_int(i as i64);
        let num = &base + &ParamRational::from_int((ub <= m_index) as i64);
        acc = &acc * &ratio(num, base);
    }
    Ok(acc)
}

/// `A_m(u; β; λ)` on the Fock space, normalized to 1 on the vacuum.
pub fn yangian_eigenvalue(m_index: usize, l: &Partition, beta: &Coupling, big_n: usize) -> Result<ParamRational> {
    if m_index == 0 || m_index > big_n {
        return Err(Error::Invalid(format!("m = {} outside 1..={}", m_index, big_n)));
    }
    let n = l.len();
    let k = WedgeIndex::o_plus(l, n)?;
    let o = WedgeIndex::vacuum(n);
    let binv = match beta {
        Coupling::Value(b) => Some(b.inv()?),
        Coupling::Infinity => None,
    };
    let base = |over: i64, i: usize| -> ParamRational {
        let shift = ParamRational::from_int(i as i64);
        match &binv {
            Some(bi) => &(&u() + &bi.scale(&int(over))) + &shift,
            None => &u() + &shift,
        }
    };
    let (ko, ku) = (k.over(big_n), k.under(big_n));
    let (oo, ou) = (o.over(big_n), o.under(big_n));
    let mut acc = ParamRational::one();
    for i in 0..n {
        let d = |s: usize| ParamRational::from_int((s <= m_index) as i64);
        let (bk, bo) = (base(ko[i], i), base(oo[i], i));
        let num = &(&bk + &d(ku[i])) * &bo;
        let den = &(&bo + &d(ou[i])) * &bk;
        acc = &acc * &ratio(num, den);
    }
    Ok(acc)
}

/// `A_m(u; λ)` on the basic module.
pub fn basic_eigenvalue(m_index: usize, l: &Partition, big_n: usize) -> Result<ParamRational> {
    if !l.is_n_regular(big_n) {
        return Err(Error::Invalid(format!("{} is not {}-regular", l, big_n)));
    }
    yangian_eigenvalue(m_index, l, &Coupling::Infinity, big_n)
}

/// The N-tuple `(A_1, …, A_N)`.
pub fn spectrum(l: &Partition, beta: &Coupling, big_n: usize) -> Result<Vec<ParamRational>> {
    (1..=big_n).map(|m| yangian_eigenvalue(m, l, beta, big_n)).collect()
}

/// `Λ₀ − Σ c_i α_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineWeight {
    pub lambda0: i64,
    /// Coefficients of `α_0, …, α_{N−1}`.
    pub alpha: Vec<i64>,
}

impl AffineWeight {
    /// `⟨wt, h_i⟩` with the Cartan matrix of type `A_{N−1}^{(1)}`.
    pub fn pair_h(&self, i: usize) -> i64 {
        let n = self.alpha.len() as i64;
        let mut s = self.lambda0 * (i == 0) as i64;
        for (j, &c) in self.alpha.iter().enumerate() {
            let (i, j) = (i as i64, j as i64);
            let a = 2 * (i == j) as i64 - ((j - i - 1).rem_euclid(n) == 0) as i64 - ((j - i + 1).rem_euclid(n) == 0) as i64;
            s += c * a;
        }
        s
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}Λ0", if self.lambda0 == 1 { String::new() } else { self.lambda0.to_string() })?;
        for (i, &c) in self.alpha.iter().enumerate() {
            if c != 0 {
                let sign = if c < 0 { "−" } else { "+" };
                write!(f, " {} {}α{}", sign, c.abs(), i)?;
            }
        }
        Ok(())
    }
}

pub fn affine_weight(l: &Partition, big_n: usize) -> AffineWeight {
    AffineWeight {
        lambda0: 1,
        alpha: l.colour_multiplicities(big_n).into_iter().map(|c| -(c as i64)).collect(),
    }
}

/// Column heights `[p_1, …, p_l]`, read right to left.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ribbon(pub Vec<usize>);

impl Ribbon {
    pub fn len(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(top, bottom)` rows of each column, 1-based, right to left.
    fn rows(&self) -> Vec<(usize, usize)> {
        let mut top = 1;
        self.0
            .iter()
            .map(|&p| {
                let r = (top, top + p - 1);
                top += p - 1;
                r
            })
            .collect()
    }

    /// The canonical skew shape `ν/μ` with `ℓ(μ) < ℓ(ν)`, `ℓ(μ') < ℓ(ν')`.
    pub fn skew_shape(&self) -> (Partition, Partition) {
        let l = self.0.len();
        if l == 0 {
            return (Partition::empty(), Partition::empty());
        }
        let rows = self.rows();
        let height = rows[l - 1].1;
        let mut nu = vec![0; height];
        let mut mu = vec![usize::MAX; height];
        for (s, &(t, b)) in rows.iter().enumerate() {
            let col = l - s;
            for r in t..=b {
                nu[r - 1] = nu[r - 1].max(col);
                mu[r - 1] = mu[r - 1].min(col - 1);
            }
        }
        (Partition::new(nu).expect("ribbon rows"), Partition::new(mu).expect("ribbon rows"))
    }

    /// `R_N`: heights in `1..=N`, leftmost below `N`, length divisible by `N`.
    pub fn check_rank(&self, big_n: usize) -> Result<()> {
        if self.0.iter().any(|&p| p == 0 || p > big_n) {
            return Err(Error::Invalid(format!("{:?} has a column outside 1..={}", self.0, big_n)));
        }
        if let Some(&last) = self.0.last() {
            if last >= big_n {
                return Err(Error::Invalid(format!("leftmost column of {:?} has height ≥ N", self.0)));
            }
        }
        if !self.len().is_multiple_of(big_n) {
            return Err(Error::Invalid(format!("length {} of {:?} is not divisible by {}", self.len(), self.0, big_n)));
        }
        Ok(())
    }
}

impl fmt::Display for Ribbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// `θ(m) = [p_1, …, p_{l(m)}]` for `m ∈ W_N`.
pub fn ribbon_of(m: &CoordinateConfig) -> Result<Ribbon> {
    if !m.in_w_n() {
        return Err(Error::Invalid(format!("{} is not in W_N", m)));
    }
    Ok(Ribbon(m.groups().iter().map(|g| g.1).collect()))
}

/// Inverse of [`ribbon_of`]: `((s−l+1)^{p_1} … (s)^{p_l})` with `Σp = sN`.
pub fn config_of_ribbon(theta: &Ribbon, big_n: usize) -> Result<CoordinateConfig> {
    theta.check_rank(big_n)?;
    let l = theta.0.len() as i64;
    let s = (theta.len() / big_n) as i64;
    let groups = theta.0.iter().enumerate().map(|(i, &p)| (s - l + 1 + i as i64, p)).collect();
    CoordinateConfig::new(big_n, groups)
}

/// Semi-standard fillings in the ribbon convention, as entry sequences
/// read column by column from the right, top to bottom. With
/// `rows = false` only the column condition is imposed.
pub fn enumerate_fillings(theta: &Ribbon, big_n: usize, rows: bool) -> Result<Vec<Vec<usize>>> {
    if theta.0.iter().any(|&p| p == 0 || p > big_n) {
        return Err(Error::Invalid(format!("{} has rank above {}", theta, big_n)));
    }
    let mut acc: Vec<Vec<usize>> = vec![vec![]];
    for &p in &theta.0 {
        let mut next = vec![];
        for pre in &acc {
            for col in subsets_desc(big_n, p) {
                // The top of this column shares a row with the bottom of the previous one.
                if rows && !pre.is_empty() && col[0] < *pre.last().expect("nonempty") {
                    continue;
                }
                let mut v = pre.clone();
                v.extend_from_slice(&col);
                next.push(v);
            }
        }
        acc = next;
    }
    Ok(acc)
}

pub fn enumerate_sst(theta: &Ribbon, big_n: usize) -> Result<Vec<Vec<usize>>> {
    enumerate_fillings(theta, big_n, true)
}

/// `φ_m`: a tableau on `θ(m)` as a spin configuration.
pub fn phi(tableau: &[usize], big_n: usize) -> Result<SpinConfig> {
    SpinConfig::new(big_n, tableau.to_vec())
}

/// `{λ ∈ block(m) : λ N-regular}`.
pub fn basic_block_members(m: &CoordinateConfig) -> Vec<Partition> {
    block_members(m).members.into_iter().filter(|l| l.is_n_regular(m.big_n)).collect()
}

/// Reconstructs `m` from `ε` for N-regular partitions, going backwards
/// from the tail: `m_i = m_{i+1} − 1` if `ε_{i+1} ≥ ε_i`, else `m_i = m_{i+1}`.
pub fn coordinates_from_spins(e: &SpinConfig) -> Result<CoordinateConfig> {
    let big_n = e.big_n;
    let n = e.prefix().len();
    let ev = e.sequence(n + 1);
    let mut m = vec![0i64; n + 1];
    m[n] = (n / big_n) as i64 + 1;
    for i in (0..n).rev() {
        m[i] = if ev[i + 1] >= ev[i] { m[i + 1] - 1 } else { m[i + 1] };
    }
    let mut groups: Vec<(i64, usize)> = vec![];
    for &r in &m[..n] {
        match groups.last_mut() {
            Some(g) if g.0 == r => g.1 += 1,
            _ => groups.push((r, 1)),
        }
    }
    CoordinateConfig::new(big_n, groups)
}

/// `N − 1` monic polynomials, each kept as its multiset of roots.
#[derive(Clone, Debug, PartialEq)]
pub struct DrinfeldSet {
    roots: Vec<Vec<ParamRational>>,
}

fn sort_roots(v: &mut [ParamRational]) {
    v.sort_by(|a, b| match (a.as_rational(), b.as_rational()) {
        (Some(x), Some(y)) => y.cmp(&x),
        _ => a.to_string().cmp(&b.to_string()),
    });
}

impl DrinfeldSet {
    pub fn trivial(big_n: usize) -> Self {
        DrinfeldSet { roots: vec![vec![]; big_n.saturating_sub(1)] }
    }

    pub fn from_roots(mut roots: Vec<Vec<ParamRational>>) -> Self {
        for r in &mut roots {
            sort_roots(r);
        }
        DrinfeldSet { roots }
    }

    /// Roots of `P_m`, 1-based.
    pub fn roots(&self, m: usize) -> &[ParamRational] {
        &self.roots[m - 1]
    }

    pub fn all_roots(&self) -> &[Vec<ParamRational>] {
        &self.roots
    }

    fn push_root(&mut self, m: usize, z: ParamRational) {
        self.roots[m - 1].push(z);
        sort_roots(&mut self.roots[m - 1]);
    }

    /// `P_m` as text, e.g. `(u-1)*(u+2)`.
    pub fn polynomial(&self, m: usize) -> String {
        let r = self.roots(m);
        if r.is_empty() {
            return "1".into();
        }
        let f: Vec<String> = r
            .iter()
            .map(|z| {
                let c = -z.clone();
                let s = c.to_string();
                if c.is_zero() {
                    "u".to_string()
                } else if c.as_rational().is_some() && !s.starts_with('-') {
                    format!("(u+{})", s)
                } else if c.as_rational().is_some() {
                    format!("(u{})", s)
                } else {
                    format!("(u+({}))", s)
                }
            })
            .collect();
        let s = f.join("*");
        if f.len() == 1 {
            s.trim_start_matches('(').trim_end_matches(')').to_string()
        } else {
            s
        }
    }

    pub fn to_json(&self) -> Vec<DrinfeldJson> {
        self.roots
            .iter()
            .map(|r| DrinfeldJson { roots: r.iter().map(|z| z.to_string()).collect() })
            .collect()
    }

    pub fn from_json(j: &[DrinfeldJson]) -> Result<Self> {
        let roots: Result<Vec<Vec<ParamRational>>> = j
            .iter()
            .map(|p| p.roots.iter().map(|s| s.parse()).collect())
            .collect();
        Ok(DrinfeldSet::from_roots(roots?))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DrinfeldJson {
    pub roots: Vec<String>,
}

/// `P_m(u) = ∏ (u + c)` over bottom squares (content `c`) of height-`m`
/// columns of `ν/μ`. Height-`N` columns only affect the quantum determinant.
pub fn drinfeld_skew(nu: &Partition, mu: &Partition, big_n: usize) -> Result<DrinfeldSet> {
    if !nu.contains(mu) {
        return Err(Error::Invalid(format!("{} does not contain {}", nu, mu)));
    }
    let (nc, mc) = (nu.conjugate(), mu.conjugate());
    let mut d = DrinfeldSet::trivial(big_n);
    for j in 1..=nc.len() {
        let h = nc.part(j - 1) - mc.part(j - 1);
        if h == 0 {
            continue;
        }
        if h > big_n {
            return Err(Error::Invalid(format!("column {} of {}/{} has height {} > N", j, nu, mu, h)));
        }
        if h < big_n {
            let content = j as i64 - nc.part(j - 1) as i64;
            d.push_root(h, ParamRational::from_int(-content));
        }
    }
    Ok(d)
}

#[derive(Clone, Debug, PartialEq)]
pub enum DrinfeldTransform {
    /// `^σP_m(u) = (−1)^{deg} P_m(−u + m − 1)`: root `z ↦ m − 1 − z`.
    Sigma,
    /// Root `z ↦ z − h`.
    Shift(ParamRational),
}

pub fn drinfeld_transform(d: &DrinfeldSet, kind: &DrinfeldTransform) -> DrinfeldSet {
    let roots = d
        .roots
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .map(|z| match kind {
                    DrinfeldTransform::Sigma => &ParamRational::from_int(i as i64) - z,
                    DrinfeldTransform::Shift(h) => z - h,
                })
                .collect()
        })
        .collect();
    DrinfeldSet::from_roots(roots)
}

/// Drinfeld data of the basic block `V_N(m)` from its ribbon:
/// `P_m(u) = ∏ (u + ν_1 − c − m)` over bottom squares of height-`m` columns.
pub fn drinfeld_block(m: &CoordinateConfig) -> Result<DrinfeldSet> {
    let theta = ribbon_of(m)?;
    drinfeld_ribbon(&theta, m.big_n)
}

pub fn drinfeld_ribbon(theta: &Ribbon, big_n: usize) -> Result<DrinfeldSet> {
    theta.check_rank(big_n)?;
    let (nu, mu) = theta.skew_shape();
    let (nc, mc) = (nu.conjugate(), mu.conjugate());
    let nu1 = nu.part(0) as i64;
    let mut d = DrinfeldSet::trivial(big_n);
    for j in 1..=nc.len() {
        let h = nc.part(j - 1) - mc.part(j - 1);
        if h == 0 || h == big_n {
            continue;
        }
        let content = j as i64 - nc.part(j - 1) as i64;
        d.push_root(h, ParamRational::from_int(content + h as i64 - nu1));
    }
    Ok(d)
}

/// A ribbon with its skew shape and semi-standard tableaux.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RibbonTable {
    pub m: Vec<(i64, usize)>,
    pub ribbon: Vec<usize>,
    pub nu: Partition,
    pub mu: Partition,
    pub tableaux: Vec<Vec<usize>>,
}

pub fn ribbon_table(m: &CoordinateConfig) -> Result<RibbonTable> {
    let theta = ribbon_of(m)?;
    let (nu, mu) = theta.skew_shape();
    Ok(RibbonTable {
        m: m.groups().to_vec(),
        tableaux: enumerate_sst(&theta, m.big_n)?,
        ribbon: theta.0,
        nu,
        mu,
    })
}

/// Drinfeld polynomials as text and as root lists.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DrinfeldReport {
    pub polynomials: Vec<String>,
    pub roots: Vec<DrinfeldJson>,
}

impl DrinfeldSet {
    pub fn report(&self) -> DrinfeldReport {
        DrinfeldReport {
            polynomials: (1..=self.roots.len()).map(|m| self.polynomial(m)).collect(),
            roots: self.to_json(),
        }
    }
}

/// JSON table for one block.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockTable {
    pub m: Vec<(i64, usize)>,
    pub members: Vec<Partition>,
    pub singular: Partition,
    pub drinfeld: Vec<DrinfeldJson>,
}

/// Which module a block belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Fock,
    Basic,
}

pub fn block_table(m: &CoordinateConfig, kind: ModuleKind) -> Result<BlockTable> {
    let block = block_members(m);
    let members = match kind {
        ModuleKind::Fock => block.members,
        ModuleKind::Basic => {
            if !m.in_w_n() {
                return Err(Error::Invalid(format!("{} is not in W_N", m)));
            }
            basic_block_members(m)
        }
    };
    let drinfeld = if m.in_w_n() { drinfeld_block(m)?.to_json() } else { vec![] };
    Ok(BlockTable {
        m: m.groups().to_vec(),
        singular: members.first().cloned().unwrap_or_else(Partition::empty),
        members,
        drinfeld,
    })
}

/// Blocks met by partitions of weight `≤ degree_max`.
pub fn blocks_up_to(degree_max: usize, big_n: usize) -> BTreeSet<CoordinateConfig> {
    crate::partition::enumerate_partitions(degree_max)
        .map(|l| configs_of(&l, big_n).0)
        .collect()
}

/// `split_index` re-exported for spin bookkeeping.
pub fn spin_of(k: i64, big_n: usize) -> usize {
    split_index(k, big_n).0
}
