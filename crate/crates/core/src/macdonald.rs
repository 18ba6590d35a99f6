//! Macdonald polynomials from the tableau formula and their Jack(gl_N)
//! degenerations.
//!
//! All coefficients are computed formally (in `q, t` or in `g` = γ) and then
//! specialized; `γ = ∞` goes through `γ := 1/ε, ε := 0`.

use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use crate::arith::{int, Mono, Param, ParamRational, Poly};
use crate::error::{Error, Result};
use crate::partition::{enumerate_tableau_chains, partitions_of, Dominance, Partition};
use crate::symfunc::{omega, omega_gamma_n, project_pi, Basis, SymFunc};

/// Value of γ.
#[derive(Clone, Debug, PartialEq)]
pub enum Gamma {
    Formal,
    Value(ParamRational),
    Infinity,
}

impl Gamma {
    /// Parses `formal`, `inf`, or an exact rational expression.
    pub fn parse(s: &str) -> Result<Gamma> {
        match s.trim() {
            "formal" | "g" => Ok(Gamma::Formal),
            "inf" | "infinity" => Ok(Gamma::Infinity),
            other => Ok(Gamma::Value(other.parse()?)),
        }
    }

    /// Specializes a formal coefficient in `g`.
    pub fn specialize(&self, c: &ParamRational) -> Result<ParamRational> {
        match self {
            Gamma::Formal => Ok(c.clone()),
            Gamma::Value(v) => c.substitute(Param::G, v),
            Gamma::Infinity => c.limit_at_infinity(Param::G),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct JackContext {
    pub n: usize,
    pub gamma: Gamma,
}

impl JackContext {
    pub fn new(n: usize, gamma: Gamma) -> Self {
        JackContext { n, gamma }
    }

    pub fn formal(n: usize) -> Self {
        JackContext::new(n, Gamma::Formal)
    }
}

/// Which `b_λ(s)` enters the strip weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PsiMode {
    /// `b(s; q, t)`.
    Qt,
    /// `b^{(γ,N)}(s)` with formal γ.
    GammaN(usize),
}

fn lin(terms: &[(Param, i64)], c: i64) -> Poly {
    let mut p = Poly::constant(int(c));
    for &(v, k) in terms {
        p = p.add(&Poly::var(v).scale(&int(k)));
    }
    p
}

/// `b_λ(s)` for the square `(i, j)` of `l`.
pub fn b_square(l: &Partition, i: usize, j: usize, mode: PsiMode) -> ParamRational {
    let (a, leg) = l.arm_leg(i, j);
    match mode {
        PsiMode::Qt => {
            let q = |e: usize, f: usize| {
                let m = Mono::var(Param::Q, e as u16).mul(&Mono::var(Param::T, f as u16));
                Poly::monomial(m, int(1))
            };
            let num = Poly::one().sub(&q(a, leg + 1));
            let den = Poly::one().sub(&q(a + 1, leg));
            ParamRational::new(num, den).expect("nonzero denominator")
        }
        PsiMode::GammaN(n) => {
            if (a + leg + 1) % n != 0 {
                return ParamRational::one();
            }
            let (a, leg) = (a as i64, leg as i64);
            let num = lin(&[(Param::G, leg + 1)], a);
            let den = lin(&[(Param::G, leg)], a + 1);
            ParamRational::new(num, den).expect("nonzero denominator")
        }
    }
}

/// `ψ_{λ/μ} = ∏ b_μ(s)/b_λ(s)` over squares of μ in rows meeting the strip
/// and in columns not meeting it.
pub fn psi_strip(l: &Partition, mu: &Partition, mode: PsiMode) -> Result<ParamRational> {
    if !l.is_horizontal_strip_over(mu) {
        return Err(Error::Invalid(format!("{}/{} is not a horizontal strip", l, mu)));
    }
    let rows = l.strip_rows(mu);
    let cols = l.strip_columns(mu);
    let mut acc = ParamRational::one();
    for &i in &rows {
        for j in 1..=mu.part(i - 1) {
            if cols.contains(&j) {
                continue;
            }
            let r = &b_square(mu, i, j, mode) / &b_square(l, i, j, mode);
            acc = &acc * &r;
        }
    }
    Ok(acc)
}

type PsiKey = (Partition, Partition, PsiMode);
static PSI_CACHE: Lazy<Mutex<HashMap<PsiKey, ParamRational>>> = Lazy::new(|| Mutex::new(HashMap::new()));
static POLY_CACHE: Lazy<Mutex<HashMap<(Partition, PsiMode), SymFunc>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn psi_cached(l: &Partition, mu: &Partition, mode: PsiMode) -> ParamRational {
    let key = (l.clone(), mu.clone(), mode);
    if let Some(v) = PSI_CACHE.lock().expect("psi lock").get(&key) {
        return v.clone();
    }
    let v = psi_strip(l, mu, mode).expect("chain steps are horizontal strips");
    PSI_CACHE.lock().expect("psi lock").insert(key, v.clone());
    v
}

/// `u_{λμ} = Σ_T ψ_T` over tableaux of shape λ and weight μ.
pub fn u_coefficient(l: &Partition, mu: &Partition, mode: PsiMode) -> ParamRational {
    let mut s = ParamRational::zero();
    for ch in enumerate_tableau_chains(l, mu.parts()) {
        let mut w = ParamRational::one();
        for k in 1..ch.chain.len() {
            w = &w * &psi_cached(&ch.chain[k], &ch.chain[k - 1], mode);
        }
        s = &s + &w;
    }
    s
}

fn tableau_polynomial(l: &Partition, mode: PsiMode) -> SymFunc {
    let key = (l.clone(), mode);
    if let Some(v) = POLY_CACHE.lock().expect("poly lock").get(&key) {
        return v.clone();
    }
    let mut f = SymFunc::monomial(l.clone());
    for mu in partitions_of(l.weight()) {
        if mu != *l && l.dominance(&mu) == Dominance::Greater {
            f.add_term(mu.clone(), u_coefficient(l, &mu, mode));
        }
    }
    POLY_CACHE.lock().expect("poly lock").insert(key, f.clone());
    f
}

/// `P_λ(q, t)` in the monomial basis.
pub fn macdonald_p(l: &Partition) -> SymFunc {
    tableau_polynomial(l, PsiMode::Qt)
}

/// `P_λ^{(γ,N)}` in the monomial basis.
pub fn jack_gln_p(l: &Partition, ctx: &JackContext) -> Result<SymFunc> {
    if ctx.n == 0 {
        return Err(Error::Invalid("N must be positive".into()));
    }
    let f = tableau_polynomial(l, PsiMode::GammaN(ctx.n));
    f.try_map_coeffs(|c| ctx.gamma.specialize(c))
}

/// `b_λ^{(γ,N)} = ∏_s b_λ^{(γ,N)}(s)`.
pub fn b_norm(l: &Partition, ctx: &JackContext) -> Result<ParamRational> {
    let mut acc = ParamRational::one();
    for (i, j) in l.squares() {
        acc = &acc * &b_square(l, i, j, PsiMode::GammaN(ctx.n));
    }
    ctx.gamma.specialize(&acc)
}

/// `ω_{γ,N}(P_λ) = b_{λ'}^{(1/γ,N)} P_{λ'}^{(1/γ,N)}`.
pub fn duality_check(l: &Partition, ctx: &JackContext) -> Result<bool> {
    let n = ctx.n;
    let g = ParamRational::param(Param::G);
    let ginv = g.inv()?;
    let formal = JackContext::formal(n);
    let lhs = omega_gamma_n(&jack_gln_p(l, &formal)?, &g, n)?;
    let lc = l.conjugate();
    let rhs = jack_gln_p(&lc, &formal)?
        .substitute(Param::G, &ginv)?
        .scale(&b_norm(&lc, &formal)?.substitute(Param::G, &ginv)?);
    let spec = |f: &SymFunc| f.to_basis(Basis::Monomial).try_map_coeffs(|c| ctx.gamma.specialize(c));
    Ok(spec(&lhs)? == spec(&rhs)?)
}

/// Both routes to `P_λ^{(N)}`: `π(P_λ^{(∞,N)})` and `b_{λ'} ω(P_{λ'}^{(0,N)})`.
pub fn basic_p_routes(l: &Partition, n: usize) -> Result<(SymFunc, SymFunc)> {
    let inf = JackContext::new(n, Gamma::Infinity);
    let route1 = project_pi(&jack_gln_p(l, &inf)?, n);
    let zero = JackContext::new(n, Gamma::Value(ParamRational::zero()));
    let lc = l.conjugate();
    let b = b_norm(&lc, &zero)?;
    let route2 = if b.is_zero() {
        SymFunc::zero(Basis::Monomial)
    } else {
        omega(&jack_gln_p(&lc, &zero)?).scale(&b)
    };
    Ok((route1, route2.to_basis(Basis::Monomial)))
}

/// `P_λ^{(N)}`; zero unless λ is N-regular. Errors if the two routes disagree.
pub fn basic_p(l: &Partition, n: usize) -> Result<SymFunc> {
    let (r1, r2) = basic_p_routes(l, n)?;
    if !r1.equals(&r2) {
        return Err(Error::Invalid(format!("projection routes disagree for {}", l)));
    }
    Ok(r1)
}
