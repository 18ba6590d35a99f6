//! Wedge spaces `F_{N,n}`, their semi-infinite limit at charge 0, and the
//! operators acting on them.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{int, Param, ParamRational};
use crate::dunkl::{apply_dunkl, weight_function, DunklSpec, LaurentPoly, WeightKind};
use crate::error::{Error, Result};
use crate::macdonald::{jack_gln_p, JackContext};
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};

/// `k = k̲ − N·k̄` with `k̲ ∈ 1..=N`. Returns `(k̲, k̄)`.
pub fn split_index(k: i64, n: usize) -> (usize, i64) {
    let nn = n as i64;
    let under = (k - 1).rem_euclid(nn) + 1;
    (under as usize, (under - k) / nn)
}

pub fn join_index(under: usize, over: i64, n: usize) -> i64 {
    under as i64 - n as i64 * over
}

/// Sorts `raw` decreasingly. `None` on a repeated entry, else the sign of
/// the sorting permutation and the sorted sequence.
pub fn normal_order(raw: &[i64]) -> Option<(i64, Vec<i64>)> {
    let mut v = raw.to_vec();
    let mut sign = 1;
    // Insertion sort; counts transpositions.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some((sign, v))
}

/// A strictly decreasing finite index sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct WedgeIndex(Vec<i64>);

impl TryFrom<Vec<i64>> for WedgeIndex {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        WedgeIndex::new(v)
    }
}

impl From<WedgeIndex> for Vec<i64> {
    fn from(w: WedgeIndex) -> Vec<i64> {
        w.0
    }
}

impl WedgeIndex {
    pub fn new(v: Vec<i64>) -> Result<Self> {
        if v.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Invalid(format!("{:?} is not strictly decreasing", v)));
        }
        Ok(WedgeIndex(v))
    }

    /// `o = (0, −1, …, 1−n)`.
    pub fn vacuum(n: usize) -> Self {
        WedgeIndex((0..n as i64).map(|i| -i).collect())
    }

    /// `o + λ` truncated to `n` entries.
    pub fn o_plus(l: &Partition, n: usize) -> Result<Self> {
        if l.len() > n {
            return Err(Error::Invalid(format!("{} has more than {} parts", l, n)));
        }
        Ok(WedgeIndex((0..n).map(|i| l.part(i) as i64 - i as i64).collect()))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn over(&self, n: usize) -> Vec<i64> {
        self.0.iter().map(|&k| split_index(k, n).1).collect()
    }

    pub fn under(&self, n: usize) -> Vec<usize> {
        self.0.iter().map(|&k| split_index(k, n).0).collect()
    }

    /// `k − o` when `k ⊇ o`.
    pub fn partition(&self) -> Option<Partition> {
        let n = self.0.len();
        if n > 0 && self.0[n - 1] < 1 - n as i64 {
            return None;
        }
        let parts: Vec<usize> = self.0.iter().enumerate().map(|(i, &k)| (k + i as i64) as usize).collect();
        Some(Partition::new(parts).expect("weakly decreasing"))
    }
}

impl fmt::Display for WedgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Serialized wedge vector; wedges in decreasing order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WedgeJson {
    pub n: usize,
    pub terms: Vec<WedgeTermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WedgeTermJson {
    pub wedge: WedgeIndex,
    pub coeff: ParamRational,
}

/// `X_{o+λ}` together with its energy.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FockEigenJson {
    pub partition: Partition,
    pub big_n: usize,
    pub beta: ParamRational,
    pub energy: ParamRational,
    pub vector: WedgeJson,
}

pub fn fock_eigen_json(l: &Partition, n: usize, beta: &ParamRational, big_n: usize) -> Result<FockEigenJson> {
    let k = WedgeIndex::o_plus(l, n)?;
    let x = x_vector(l, n, beta, big_n)?;
    Ok(FockEigenJson {
        partition: l.clone(),
        big_n,
        beta: beta.clone(),
        energy: energy(&k, beta, big_n),
        vector: x.to_json(),
    })
}

/// Linear combination of normally ordered wedges `û_k` of fixed length.
#[derive(Clone, Debug, PartialEq)]
pub struct WedgeVector {
    n: usize,
    terms: BTreeMap<WedgeIndex, ParamRational>,
}

impl WedgeVector {
    pub fn zero(n: usize) -> Self {
        WedgeVector { n, terms: BTreeMap::new() }
    }

    pub fn basis(k: WedgeIndex) -> Self {
        let mut v = WedgeVector::zero(k.len());
        v.add_term(k, ParamRational::one());
        v
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<WedgeIndex, ParamRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &WedgeIndex) -> ParamRational {
        self.terms.get(k).cloned().unwrap_or_else(ParamRational::zero)
    }

    pub fn add_term(&mut self, k: WedgeIndex, c: ParamRational) {
        assert_eq!(k.len(), self.n, "wedge length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Adds `c · u_{raw_1} ∧ … ∧ u_{raw_n}` after normal ordering.
    pub fn add_raw(&mut self, raw: &[i64], c: &ParamRational) {
        if let Some((sign, v)) = normal_order(raw) {
            let c = if sign < 0 { -c.clone() } else { c.clone() };
            self.add_term(WedgeIndex(v), c);
        }
    }

    pub fn add(&self, o: &WedgeVector) -> WedgeVector {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(k.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &WedgeVector) -> WedgeVector {
        self.add(&o.scale(&ParamRational::from_int(-1)))
    }

    pub fn scale(&self, c: &ParamRational) -> WedgeVector {
        let mut r = WedgeVector::zero(self.n);
        if c.is_zero() {
            return r;
        }
        for (k, v) in &self.terms {
            r.terms.insert(k.clone(), v * c);
        }
        r
    }

    pub fn to_json(&self) -> WedgeJson {
        WedgeJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(k, c)| WedgeTermJson { wedge: k.clone(), coeff: c.clone() })
                .collect(),
        }
    }

    pub fn from_json(j: &WedgeJson) -> Result<WedgeVector> {
        let mut v = WedgeVector::zero(j.n);
        for t in &j.terms {
            if t.wedge.len() != j.n {
                return Err(Error::Invalid("wedge length differs from n".into()));
            }
            v.add_term(t.wedge.clone(), t.coeff.clone());
        }
        Ok(v)
    }

    pub fn try_map_coeffs<F: Fn(&ParamRational) -> Result<ParamRational>>(&self, f: F) -> Result<WedgeVector> {
        let mut r = WedgeVector::zero(self.n);
        for (k, c) in &self.terms {
            r.add_term(k.clone(), f(c)?);
        }
        Ok(r)
    }
}

/// Vectors `Σ c · z^m ⊗ v(s)` in `C[z^{±1}] ⊗ V^{⊗n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinCoordVector {
    pub n: usize,
    pub big_n: usize,
    terms: BTreeMap<(Vec<i64>, Vec<usize>), ParamRational>,
}

impl SpinCoordVector {
    pub fn zero(n: usize, big_n: usize) -> Self {
        SpinCoordVector { n, big_n, terms: BTreeMap::new() }
    }

    /// `z^{k̄} ⊗ v(k̲)`, so that `A_n` of it is `û_k`.
    pub fn representative(k: &WedgeIndex, big_n: usize) -> Self {
        let mut v = SpinCoordVector::zero(k.len(), big_n);
        v.add_term(k.over(big_n), k.under(big_n), ParamRational::one());
        v
    }

    pub fn terms(&self) -> &BTreeMap<(Vec<i64>, Vec<usize>), ParamRational> {
        &self.terms
    }

    pub fn add_term(&mut self, exp: Vec<i64>, spins: Vec<usize>, c: ParamRational) {
        if c.is_zero() {
            return;
        }
        let key = (exp, spins);
        let s = match self.terms.get(&key) {
            Some(old) => old + &c,
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, s);
        }
    }

    /// Tensors a Laurent polynomial with a fixed spin vector.
    pub fn from_laurent(f: &LaurentPoly, spins: &[usize], big_n: usize) -> Self {
        let mut v = SpinCoordVector::zero(f.nvars(), big_n);
        for (e, c) in f.terms() {
            v.add_term(e.clone(), spins.to_vec(), c.clone());
        }
        v
    }

    /// `A_n`, with `A_n(u_{k_1} ⊗ … ⊗ u_{k_n}) = u_{k_1} ∧ … ∧ u_{k_n}`.
    pub fn antisymmetrize(&self) -> WedgeVector {
        let mut out = WedgeVector::zero(self.n);
        for ((e, s), c) in &self.terms {
            let raw: Vec<i64> = e.iter().zip(s).map(|(&m, &a)| join_index(a, m, self.big_n)).collect();
            out.add_raw(&raw, c);
        }
        out
    }
}

/// `û_{o+λ} ↦ s_λ`.
pub fn omega_iso(v: &WedgeVector) -> Result<SymFunc> {
    let mut f = SymFunc::zero(Basis::Schur);
    for (k, c) in v.terms() {
        let l = k
            .partition()
            .ok_or_else(|| Error::Invalid(format!("wedge {} lies below the vacuum", k)))?;
        f.add_term(l, c.clone());
    }
    Ok(f)
}

/// Inverse of [`omega_iso`] on symmetric polynomials in `n` variables;
/// Schur functions with more than `n` parts vanish.
pub fn omega_inv(f: &SymFunc, n: usize) -> WedgeVector {
    let s = f.to_basis(Basis::Schur);
    let mut v = WedgeVector::zero(n);
    for (l, c) in s.terms() {
        if let Ok(k) = WedgeIndex::o_plus(l, n) {
            v.add_term(k, c.clone());
        }
    }
    v
}

/// `E(k) = Σ k̄_i² + β Σ (2i−n−1) k̄_i + β² n(n²−1)/12`.
pub fn energy(k: &WedgeIndex, beta: &ParamRational, big_n: usize) -> ParamRational {
    let n = k.len() as i64;
    let kb = k.over(big_n);
    let sq: i64 = kb.iter().map(|x| x * x).sum();
    let lin: i64 = kb.iter().enumerate().map(|(i, x)| (2 * (i as i64 + 1) - n - 1) * x).sum();
    let b2 = beta * beta;
    &(&ParamRational::from_int(sq) + &beta.scale(&int(lin))) + &b2.scale(&(int(n * (n * n - 1)) / int(12)))
}

/// `H û_k = E(k) û_k + 2β Σ_{i<j} h_ij û_k`.
pub fn hamiltonian_wedge(v: &WedgeVector, beta: &ParamRational, big_n: usize) -> WedgeVector {
    let mut out = WedgeVector::zero(v.nvars());
    let nn = big_n as i64;
    let two_beta = beta.scale(&int(2));
    for (k, c) in v.terms() {
        out.add_term(k.clone(), &energy(k, beta, big_n) * c);
        let kb = k.over(big_n);
        let n = k.len();
        let cb = &two_beta * c;
        for i in 0..n {
            for j in (i + 1)..n {
                let d = kb[j] - kb[i];
                for r in 1..d {
                    let mut raw = k.entries().to_vec();
                    raw[i] -= nn * r;
                    raw[j] += nn * r;
                    out.add_raw(&raw, &cb.scale(&int(d - r)));
                }
            }
        }
    }
    out
}

/// Orders wedges so that every off-diagonal `H`-edge goes forward.
fn topological(nodes: &[WedgeIndex], edges: &HashMap<WedgeIndex, Vec<WedgeIndex>>) -> Vec<WedgeIndex> {
    let mut indeg: HashMap<&WedgeIndex, usize> = nodes.iter().map(|k| (k, 0)).collect();
    for outs in edges.values() {
        for l in outs {
            *indeg.get_mut(l).expect("closed span") += 1;
        }
    }
    let mut queue: VecDeque<&WedgeIndex> = nodes.iter().filter(|k| indeg[k] == 0).collect();
    let mut order = Vec::with_capacity(nodes.len());
    while let Some(k) = queue.pop_front() {
        order.push(k.clone());
        if let Some(outs) = edges.get(k) {
            for l in outs {
                let d = indeg.get_mut(l).expect("closed span");
                *d -= 1;
                if *d == 0 {
                    queue.push_back(l);
                }
            }
        }
    }
    assert_eq!(order.len(), nodes.len(), "Hamiltonian is not triangular");
    order
}

/// The eigenvector `Ψ_k = û_k + Σ ψ_kl û_l` of `H`.
pub fn psi_vector(k: &WedgeIndex, beta: &ParamRational, big_n: usize) -> Result<WedgeVector> {
    // Span reachable from û_k under H, with the matrix columns.
    let mut cols: HashMap<WedgeIndex, WedgeVector> = HashMap::new();
    let mut queue = VecDeque::from([k.clone()]);
    let mut nodes = vec![];
    while let Some(l) = queue.pop_front() {
        if cols.contains_key(&l) {
            continue;
        }
        let img = hamiltonian_wedge(&WedgeVector::basis(l.clone()), beta, big_n);
        for m in img.terms().keys() {
            if !cols.contains_key(m) {
                queue.push_back(m.clone());
            }
        }
        nodes.push(l.clone());
        cols.insert(l, img);
    }
    let mut edges: HashMap<WedgeIndex, Vec<WedgeIndex>> = HashMap::new();
    for (l, img) in &cols {
        for m in img.terms().keys() {
            if m != l {
                edges.entry(l.clone()).or_default().push(m.clone());
            }
        }
    }
    let order = topological(&nodes, &edges);
    let ek = energy(k, beta, big_n);
    let mut coeff: HashMap<WedgeIndex, ParamRational> = HashMap::new();
    let mut out = WedgeVector::zero(k.len());
    for l in &order {
        let c = if l == k {
            ParamRational::one()
        } else {
            // (E(l) − E(k)) c_l = −Σ_{m ≠ l} H_{lm} c_m
            let mut rhs = ParamRational::zero();
            for (m, cm) in &coeff {
                let h = cols[m].coeff(l);
                if !h.is_zero() {
                    rhs = &rhs - &(&h * cm);
                }
            }
            let gap = &energy(l, beta, big_n) - &ek;
            if gap.is_zero() {
                if !rhs.is_zero() {
                    return Err(Error::NonGeneric(format!("E({}) = E({}) at β = {}", l, k, beta)));
                }
                ParamRational::zero()
            } else {
                rhs.try_div(&gap)?
            }
        };
        if !c.is_zero() {
            coeff.insert(l.clone(), c.clone());
            out.add_term(l.clone(), c);
        }
    }
    Ok(out)
}

/// `X_{o+λ} = Ω⁻¹(P_λ^{(Nβ+1,N)})` in `n` variables.
pub fn x_vector(l: &Partition, n: usize, beta: &ParamRational, big_n: usize) -> Result<WedgeVector> {
    if l.len() > n {
        return Err(Error::Invalid(format!("{} has more than {} parts", l, n)));
    }
    let gamma = &beta.scale(&int(big_n as i64)) + &ParamRational::one();
    let p = jack_gln_p(l, &JackContext::formal(big_n))?.substitute(Param::G, &gamma)?;
    Ok(omega_inv(&p, n))
}

/// Multiplication by a symmetric Laurent polynomial in `z`.
pub fn multiply_symmetric(v: &WedgeVector, p: &LaurentPoly, big_n: usize) -> WedgeVector {
    let nn = big_n as i64;
    let mut out = WedgeVector::zero(v.nvars());
    for (k, c) in v.terms() {
        for (e, pc) in p.terms() {
            let raw: Vec<i64> = k.entries().iter().zip(e).map(|(&ki, &ei)| ki - nn * ei).collect();
            out.add_raw(&raw, &(c * pc));
        }
    }
    out
}

/// `T^(1)_ab = Σ_i E_ba^(i)`.
pub fn apply_t1(a: usize, b: usize, v: &WedgeVector, big_n: usize) -> WedgeVector {
    let mut out = WedgeVector::zero(v.nvars());
    for (k, c) in v.terms() {
        let under = k.under(big_n);
        let over = k.over(big_n);
        for i in 0..k.len() {
            if under[i] == a {
                let mut raw = k.entries().to_vec();
                raw[i] = join_index(b, over[i], big_n);
                out.add_raw(&raw, c);
            }
        }
    }
    out
}

/// `T^(2)_ab`, applied as `A_n Ť^(2)_ab` on the representatives with
/// `Ť^(2)_ab = −Σ_i d_i E_ba^(i) + Σ_{j<i} Σ_c E_ca^(i) E_bc^(j)`.
pub fn apply_t2(a: usize, b: usize, v: &WedgeVector, beta: &ParamRational, big_n: usize) -> Result<WedgeVector> {
    let n = v.nvars();
    let spec = DunklSpec::new(n, beta.clone())?;
    let mut acc = SpinCoordVector::zero(n, big_n);
    for (k, c) in v.terms() {
        let over = k.over(big_n);
        let spins = k.under(big_n);
        let z = LaurentPoly::monomial(over.clone(), c.clone());
        for i in 0..n {
            if spins[i] != a {
                continue;
            }
            let mut s = spins.clone();
            s[i] = b;
            let dz = apply_dunkl(i + 1, &z, &spec);
            for (e, dc) in dz.terms() {
                acc.add_term(e.clone(), s.clone(), -dc.clone());
            }
            for j in 0..i {
                let mut s = spins.clone();
                s[i] = spins[j];
                s[j] = b;
                acc.add_term(over.clone(), s, c.clone());
            }
        }
    }
    Ok(acc.antisymmetrize())
}

/// `T^(level)_ab` for `level ∈ {1, 2}`.
pub fn apply_t(level: u8, a: usize, b: usize, v: &WedgeVector, beta: &ParamRational, big_n: usize) -> Result<WedgeVector> {
    if a == 0 || b == 0 || a > big_n || b > big_n {
        return Err(Error::Invalid(format!("indices {},{} outside 1..={}", a, b, big_n)));
    }
    match level {
        1 => Ok(apply_t1(a, b, v, big_n)),
        2 => apply_t2(a, b, v, beta, big_n),
        _ => Err(Error::Invalid(format!("level {} is not supported", level))),
    }
}

/// `⟨u, v⟩_{b,N} = ⟨u, Δ(z;b) v⟩_{0,N}`. Coefficients are treated as real.
pub fn scalar_f(u: &WedgeVector, v: &WedgeVector, b: u32, big_n: usize) -> ParamRational {
    let w = weight_function(&WeightKind::Sutherland { delta: b }, v.nvars());
    let dv = multiply_symmetric(v, &w, big_n);
    let mut s = ParamRational::zero();
    for (k, c) in u.terms() {
        let d = dv.coeff(k);
        if !d.is_zero() {
            s = &s + &(c * &d);
        }
    }
    s
}

/// Vectors of the semi-infinite space at charge 0, indexed by `λ = k − o`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct FockVector {
    terms: BTreeMap<Partition, ParamRational>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn basis(l: Partition) -> Self {
        let mut v = FockVector::zero();
        v.add_term(l, ParamRational::one());
        v
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
        let s = match self.terms.get(&l) {
            Some(old) => old + &c,
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&l);
        } else {
            self.terms.insert(l, s);
        }
    }

    pub fn add(&self, o: &FockVector) -> FockVector {
        let mut r = self.clone();
        for (l, c) in &o.terms {
            r.add_term(l.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &FockVector) -> FockVector {
        let mut r = self.clone();
        for (l, c) in &o.terms {
            r.add_term(l.clone(), -c.clone());
        }
        r
    }

    pub fn scale(&self, c: &ParamRational) -> FockVector {
        let mut r = FockVector::zero();
        for (l, v) in &self.terms {
            r.add_term(l.clone(), v * c);
        }
        r
    }

    /// Truncation to `n ≥ ℓ(λ)` entries for every term.
    pub fn truncate(&self, n: usize) -> Result<WedgeVector> {
        let mut v = WedgeVector::zero(n);
        for (l, c) in &self.terms {
            v.add_term(WedgeIndex::o_plus(l, n)?, c.clone());
        }
        Ok(v)
    }
}

/// Generators of `U(\hat{sl}_N)` and the homogeneous degree operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chevalley {
    E(usize),
    F(usize),
    H(usize),
    D,
}

fn same_colour(under: usize, i: i64, big_n: usize) -> bool {
    (under as i64 - i).rem_euclid(big_n as i64) == 0
}

/// `h_i` on `û_{o+λ}`: spin count over the first `n` entries plus the
/// boundary term from `|−n⟩`.
pub fn h_eigenvalue(l: &Partition, i: usize, big_n: usize) -> i64 {
    let n = l.len() + 1;
    let k = WedgeIndex::o_plus(l, n).expect("n > ℓ(λ)");
    let mut s = 0;
    for u in k.under(big_n) {
        s += same_colour(u, i as i64, big_n) as i64 - same_colour(u, i as i64 + 1, big_n) as i64;
    }
    s + (-(n as i64) - i as i64).rem_euclid(big_n as i64).eq(&0) as i64
}

/// `deg_h(û_{o+λ}) = Σ_i (ō_i − k̄_i)`.
pub fn homogeneous_degree(l: &Partition, big_n: usize) -> i64 {
    let n = l.len();
    let k = WedgeIndex::o_plus(l, n).expect("n = ℓ(λ)");
    let o = WedgeIndex::vacuum(n);
    o.over(big_n).iter().zip(k.over(big_n)).map(|(a, b)| a - b).sum()
}

/// Action of a Chevalley generator (or `D`) at level one, charge 0.
pub fn chevalley(g: Chevalley, v: &FockVector, big_n: usize) -> Result<FockVector> {
    if big_n < 2 {
        return Err(Error::Invalid("the affine action needs N ≥ 2".into()));
    }
    let check = |i: usize| {
        if i >= big_n {
            Err(Error::Invalid(format!("generator index {} outside 0..{}", i, big_n)))
        } else {
            Ok(())
        }
    };
    let mut out = FockVector::zero();
    match g {
        Chevalley::H(i) => {
            check(i)?;
            for (l, c) in v.terms() {
                out.add_term(l.clone(), c.scale(&int(h_eigenvalue(l, i, big_n))));
            }
        }
        Chevalley::D => {
            for (l, c) in v.terms() {
                out.add_term(l.clone(), c.scale(&int(-homogeneous_degree(l, big_n))));
            }
        }
        Chevalley::E(i) | Chevalley::F(i) => {
            check(i)?;
            let (colour, step) = match g {
                Chevalley::E(_) => (i as i64 + 1, -1),
                _ => (i as i64, 1),
            };
            for (l, c) in v.terms() {
                // With n > ℓ(λ) the boundary terms vanish.
                let n = l.len() + 1;
                let k = WedgeIndex::o_plus(l, n)?;
                for (j, &u) in k.under(big_n).iter().enumerate() {
                    if !same_colour(u, colour, big_n) {
                        continue;
                    }
                    let mut raw = k.entries().to_vec();
                    raw[j] += step;
                    let ok = raw.windows(2).all(|w| w[0] > w[1]) && raw[n - 1] > -(n as i64);
                    if ok {
                        let nl = WedgeIndex(raw).partition().expect("above vacuum");
                        out.add_term(nl, c.clone());
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Collects `{k : ⟨û_k, v⟩ ≠ 0}` across several vectors.
pub fn support<'a, I: IntoIterator<Item = &'a WedgeVector>>(vs: I) -> BTreeSet<WedgeIndex> {
    vs.into_iter().flat_map(|v| v.terms().keys().cloned()).collect()
}
