//! Small built-in property suites for `jackgl verify`.

use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use jackgl::dunkl::*;
use jackgl::fock::*;
use jackgl::macdonald::*;
use jackgl::partition::*;
use jackgl::symfunc::*;
use jackgl::yangian::*;
use jackgl::{Param, ParamRational};

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum Suite {
    Arith,
    Partitions,
    Symfunc,
    Jack,
    Dunkl,
    Fock,
    Yangian,
    All,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(&format!("{} {}\n", if c.passed { "pass" } else { "FAIL" }, c.name));
        }
        s.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        s
    }
}

type Prop = fn() -> bool;

fn pr(s: &str) -> ParamRational {
    s.parse().expect("literal")
}

fn arith() -> Vec<(&'static str, Prop)> {
    vec![
        ("arith: canonical quotient", || pr("(g^2-1)/(g-1)") == pr("g+1")),
        ("arith: display roundtrip", || {
            let x = pr("2*g/(g+1)");
            x.to_string().parse::<ParamRational>().ok() == Some(x)
        }),
        ("arith: substitution", || pr("(g+1)/(b-2)").substitute(Param::G, &pr("3")).ok() == Some(pr("4/(b-2)"))),
        ("arith: division by zero rejected", || pr("g").try_div(&ParamRational::zero()).is_err()),
    ]
}

fn partitions() -> Vec<(&'static str, Prop)> {
    vec![
        ("partitions: p(10) = 42", || partitions_of(10).len() == 42),
        ("partitions: conjugation involution", || enumerate_partitions(10).all(|l| l.conjugate().conjugate() == l)),
        ("partitions: hook-length count", || {
            enumerate_partitions(6).all(|l| {
                let n: u64 = (1..=l.weight() as u64).product();
                let h: u64 = l.squares().map(|(i, j)| l.stats(i, j).map(|s| s.hook as u64).unwrap_or(0)).product();
                enumerate_tableau_chains(&l, &vec![1; l.weight()]).len() as u64 == n / h
            })
        }),
    ]
}

fn symfunc() -> Vec<(&'static str, Prop)> {
    vec![
        ("symfunc: basis roundtrip", || {
            enumerate_partitions(6).all(|l| {
                let f = SymFunc::schur(l);
                basis_convert(&basis_convert(&f, Basis::Power), Basis::Schur) == f
            })
        }),
        ("symfunc: omega(s) = s'", || {
            enumerate_partitions(6).all(|l| omega(&SymFunc::schur(l.clone())).to_basis(Basis::Schur) == SymFunc::schur(l.conjugate()))
        }),
        ("symfunc: schur orthonormal", || {
            partitions_of(5).iter().all(|a| {
                partitions_of(5).iter().all(|b| {
                    scalar_product(&SymFunc::schur(a.clone()), &SymFunc::schur(b.clone()), &ScalarKind::Standard).ok()
                        == Some(ParamRational::from_int((a == b) as i64))
                })
            })
        }),
    ]
}

fn jack() -> Vec<(&'static str, Prop)> {
    vec![
        ("jack: P_(2) coefficient", || {
            jack_gln_p(&Partition::of(&[2]), &JackContext::formal(1))
                .map(|f| f.coeff(&Partition::of(&[1, 1])) == pr("2*g/(g+1)"))
                .unwrap_or(false)
        }),
        ("jack: duality", || {
            (2..=3).all(|n| enumerate_partitions(4).all(|l| duality_check(&l, &JackContext::formal(n)).unwrap_or(false)))
        }),
        ("jack: projection routes", || {
            (2..=3).all(|n| {
                enumerate_partitions(5).all(|l| basic_p_routes(&l, n).map(|(a, b)| a.equals(&b)).unwrap_or(false))
            })
        }),
        ("jack: orthogonality", || {
            let g = pr("5/3");
            let ctx = JackContext::new(2, Gamma::Value(g.clone()));
            let kind = ScalarKind::GammaN(g, 2);
            let ps: Vec<_> = partitions_of(4).into_iter().map(|l| jack_gln_p(&l, &ctx).expect("jack")).collect();
            (0..ps.len()).all(|i| (0..i).all(|j| scalar_product(&ps[i], &ps[j], &kind).map(|x| x.is_zero()).unwrap_or(false)))
        }),
    ]
}

fn dunkl() -> Vec<(&'static str, Prop)> {
    vec![
        ("dunkl: eigenfunctions", || {
            let beta = pr("2/5");
            let spec = DunklSpec::new(3, beta.clone()).expect("spec");
            [vec![0, 1, 2], vec![2, -1, 0], vec![1, 1, 0]].into_iter().all(|t| {
                let t = Composition::new(t);
                let e = nonsym_jack(&t, &spec).expect("E_t");
                (1..=3).all(|i| apply_dunkl(i, &e, &spec) == e.scale(&dunkl_eigenvalue(&t, i, &beta)))
            })
        }),
        ("dunkl: commutativity", || {
            let spec = DunklSpec::formal(3);
            let f = LaurentPoly::monomial(vec![2, -1, 0], ParamRational::one()).add(&LaurentPoly::var(3, 3));
            apply_dunkl(1, &apply_dunkl(2, &f, &spec), &spec) == apply_dunkl(2, &apply_dunkl(1, &f, &spec), &spec)
        }),
    ]
}

fn fock() -> Vec<(&'static str, Prop)> {
    vec![
        ("fock: X eigenvectors", || {
            let beta = pr("3/7");
            enumerate_partitions(3).all(|l| {
                let k = WedgeIndex::o_plus(&l, 4).expect("wedge");
                let x = x_vector(&l, 4, &beta, 2).expect("X");
                hamiltonian_wedge(&x, &beta, 2) == x.scale(&energy(&k, &beta, 2))
            })
        }),
        ("fock: h weights", || {
            (2..=3).all(|n| {
                enumerate_partitions(5).all(|l| {
                    let v = FockVector::basis(l.clone());
                    let w = affine_weight(&l, n);
                    (0..n).all(|i| {
                        chevalley(Chevalley::H(i), &v, n).map(|h| h.coeff(&l) == ParamRational::from_int(w.pair_h(i))).unwrap_or(false)
                    })
                })
            })
        }),
    ]
}

fn yangian() -> Vec<(&'static str, Prop)> {
    vec![
        ("yangian: configuration roundtrip", || {
            (2..=3).all(|n| {
                enumerate_partitions(7).all(|l| {
                    let (m, e) = configs_of(&l, n);
                    partition_of(&m, &e).ok() == Some(l)
                })
            })
        }),
        ("yangian: census", || {
            let m = CoordinateConfig::parse("0^2,1,2^3", 3).expect("config");
            block_members(&m).members.len() == 9 && basic_block_members(&m).len() == 8
        }),
        ("yangian: skew drinfeld", || {
            drinfeld_skew(&Partition::of(&[5, 5, 3, 3, 1]), &Partition::of(&[3, 3, 2, 2]), 3)
                .map(|d| d.polynomial(1) == "u-4" && d.polynomial(2) == "(u-1)*(u+2)*(u+3)")
                .unwrap_or(false)
        }),
    ]
}

pub fn run(suite: Suite) -> Report {
    let props: Vec<(&'static str, Prop)> = match suite {
        Suite::Arith => arith(),
        Suite::Partitions => partitions(),
        Suite::Symfunc => symfunc(),
        Suite::Jack => jack(),
        Suite::Dunkl => dunkl(),
        Suite::Fock => fock(),
        Suite::Yangian => yangian(),
        Suite::All => [arith(), partitions(), symfunc(), jack(), dunkl(), fock(), yangian()].concat(),
    };
    let hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));
    let checks: Vec<Check> = props
        .into_iter()
        .map(|(name, p)| Check {
            name: name.to_string(),
            passed: catch_unwind(AssertUnwindSafe(p)).unwrap_or(false),
        })
        .collect();
    std::panic::set_hook(hook);
    let passed = checks.iter().filter(|c| c.passed).count();
    Report {
        failed: checks.len() - passed,
        passed,
        checks,
    }
}
