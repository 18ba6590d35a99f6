use jackgl::arith::{expand_at_infinity, int, Param};
use jackgl::dunkl::{hamiltonian_via_dunkl, symfunc_to_laurent, DunklSpec, LaurentPoly};
use jackgl::fock::*;
use jackgl::partition::{partitions_of, Dominance, Partition};
use jackgl::symfunc::{Basis, SymFunc};
use jackgl::ParamRational;
use proptest::prelude::*;

fn beta() -> ParamRational {
    ParamRational::param(Param::B)
}

fn pr(s: &str) -> ParamRational {
    s.parse().unwrap()
}

fn partitions_upto(d: usize, max_len: usize) -> Vec<Partition> {
    (0..=d).flat_map(partitions_of).filter(|l| l.len() <= max_len).collect()
}

/// Strictly decreasing sequences of length n with entries in [lo, hi].
fn wedges(n: usize, lo: i64, hi: i64) -> Vec<WedgeIndex> {
    fn rec(n: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<WedgeIndex>) {
        if cur.len() == n {
            out.push(WedgeIndex::new(cur.clone()).unwrap());
            return;
        }
        let top = cur.last().map(|&x| x - 1).unwrap_or(hi);
        for k in (lo..=top).rev() {
            cur.push(k);
            rec(n, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    rec(n, lo, hi, &mut vec![], &mut out);
    out
}

/// `H` through the Dunkl operators on the coordinate part of a representative.
fn hamiltonian_two(k: &WedgeIndex, b: &ParamRational, big_n: usize) -> WedgeVector {
    let spec = DunklSpec::new(k.len(), b.clone()).unwrap();
    let z = LaurentPoly::monomial(k.over(big_n), ParamRational::one());
    let hz = hamiltonian_via_dunkl(&z, &spec);
    SpinCoordVector::from_laurent(&hz, &k.under(big_n), big_n).antisymmetrize()
}

#[test]
fn two_engine_hamiltonian() {
    for big_n in 1..=3 {
        for n in 1..=3 {
            for k in wedges(n, -3, 3) {
                let lhs = hamiltonian_wedge(&WedgeVector::basis(k.clone()), &beta(), big_n);
                assert_eq!(lhs, hamiltonian_two(&k, &beta(), big_n), "k = {} N = {}", k, big_n);
            }
        }
    }
}

#[test]
fn x_vectors_are_eigenvectors_and_unitriangular() {
    for big_n in 2..=3 {
        for l in partitions_upto(4, 4) {
            let n = 4;
            let x = x_vector(&l, n, &beta(), big_n).unwrap();
            let k = WedgeIndex::o_plus(&l, n).unwrap();
            assert!(x.coeff(&k).is_one());
            for m in x.terms().keys() {
                let ml = m.partition().unwrap();
                assert!(ml == l || l.dominance(&ml) == Dominance::Greater);
            }
            let hx = hamiltonian_wedge(&x, &beta(), big_n);
            assert_eq!(hx, x.scale(&energy(&k, &beta(), big_n)), "λ = {} N = {}", l, big_n);
        }
    }
}

fn maximal(v: &WedgeVector) -> WedgeIndex {
    let ls: Vec<(WedgeIndex, Partition)> = v.terms().keys().map(|k| (k.clone(), k.partition().unwrap())).collect();
    ls.iter()
        .find(|(_, m)| ls.iter().all(|(_, o)| m.dominance(o) != Dominance::Less))
        .map(|(k, _)| k.clone())
        .unwrap()
}

#[test]
fn x_minus_psi_stays_in_one_block() {
    // X_k = Ψ_k + Σ c_l Ψ_l with l̄ = k̄.
    let n = 3;
    for big_n in 2..=3 {
        for l in partitions_upto(4, n) {
            let k = WedgeIndex::o_plus(&l, n).unwrap();
            let mut rest = x_vector(&l, n, &beta(), big_n).unwrap();
            assert_eq!(maximal(&rest), k);
            while !rest.is_zero() {
                let top = maximal(&rest);
                assert_eq!(top.over(big_n), k.over(big_n), "λ = {} N = {}", l, big_n);
                let c = rest.coeff(&top);
                rest = rest.sub(&psi_vector(&top, &beta(), big_n).unwrap().scale(&c));
            }
        }
    }
}

fn a1_eigenvalue(k: &WedgeIndex, b: &ParamRational, big_n: usize) -> ParamRational {
    let u = ParamRational::param(Param::U);
    let binv = b.inv().unwrap();
    let mut acc = ParamRational::one();
    for (i, (ob, ub)) in k.over(big_n).iter().zip(k.under(big_n)).enumerate() {
        let base = &(&u + &binv.scale(&int(*ob))) + &ParamRational::from_int(i as i64);
        let num = &base + &ParamRational::from_int((ub <= 1) as i64);
        acc = &acc * &num.try_div(&base).unwrap();
    }
    acc
}

#[test]
fn t_coefficients_on_x_vectors() {
    let b = pr("3/7");
    for big_n in 1..=3 {
        for n in 1..=3 {
            for l in partitions_upto(3, n) {
                let x = x_vector(&l, n, &b, big_n).unwrap();
                let k = WedgeIndex::o_plus(&l, n).unwrap();
                let c = expand_at_infinity(&a1_eigenvalue(&k, &b, big_n), 2).unwrap();
                assert_eq!(apply_t(1, 1, 1, &x, &b, big_n).unwrap(), x.scale(&c[0]));
                assert_eq!(apply_t(2, 1, 1, &x, &b, big_n).unwrap(), x.scale(&c[1]), "λ = {} N = {} n = {}", l, big_n, n);
            }
        }
    }
}

#[test]
fn scalar_product_is_an_isometry() {
    // ⟨u, v⟩_{b,N} against the Laurent side under Δ(b,N).
    use jackgl::dunkl::{scalar_laurent, weight_function, WeightKind};
    for big_n in 2..=3 {
        for b in 0..=1 {
            let n = 2;
            let ls = partitions_upto(3, n);
            for l in &ls {
                for m in &ls {
                    let u = WedgeVector::basis(WedgeIndex::o_plus(l, n).unwrap());
                    let v = WedgeVector::basis(WedgeIndex::o_plus(m, n).unwrap());
                    let lhs = scalar_f(&u, &v, b, big_n);
                    let w = weight_function(&WeightKind::Delta { b, n: big_n }, n);
                    let f = symfunc_to_laurent(&SymFunc::schur(l.clone()), n).unwrap();
                    let g = symfunc_to_laurent(&SymFunc::schur(m.clone()), n).unwrap();
                    let rhs = scalar_laurent(&f, &g, &w);
                    assert_eq!(lhs, rhs, "λ = {} μ = {} N = {} b = {}", l, m, big_n, b);
                }
            }
        }
    }
}

#[test]
fn x_vectors_orthogonal() {
    let (n, big_n, b) = (2, 2, 1u32);
    let bq = ParamRational::from_int(b as i64);
    let ls = partitions_upto(4, n);
    let xs: Vec<_> = ls.iter().map(|l| x_vector(l, n, &bq, big_n).unwrap()).collect();
    for i in 0..xs.len() {
        for j in 0..xs.len() {
            if i != j {
                assert!(scalar_f(&xs[i], &xs[j], b, big_n).is_zero(), "{} {}", ls[i], ls[j]);
            }
        }
    }
}

/// `p_r · f` in Schur coordinates through the power-sum basis.
fn times_power(f: &SymFunc, r: usize) -> SymFunc {
    let p = f.to_basis(Basis::Power);
    let mut out = SymFunc::zero(Basis::Power);
    for (l, c) in p.terms() {
        let mut parts = l.parts().to_vec();
        parts.push(r);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        out.add_term(Partition::new(parts).unwrap(), c.clone());
    }
    out.to_basis(Basis::Schur)
}

#[test]
fn multiplicative_transfer() {
    for big_n in 1..=2 {
        for n in 1..=3 {
            for r in 1..=2 {
                let mut e = vec![0; n];
                let mut pz = LaurentPoly::zero(n);
                for i in 0..n {
                    e[i] = -(r as i64);
                    pz.add_term(e.clone(), ParamRational::one());
                    e[i] = 0;
                }
                for l in partitions_upto(3, n) {
                    let v = WedgeVector::basis(WedgeIndex::o_plus(&l, n).unwrap());
                    let lhs = omega_iso(&multiply_symmetric(&v, &pz, big_n)).unwrap();
                    let rhs = times_power(&SymFunc::schur(l.clone()), r * big_n);
                    let rhs = jackgl::symfunc::truncate_to_n_variables(&rhs, n).unwrap();
                    assert!(lhs.equals(&rhs), "λ = {} r = {} n = {}", l, r, n);
                }
            }
        }
    }
}

#[test]
fn degree_matches_zero_colour_count() {
    for big_n in 2..=3 {
        for l in partitions_upto(6, 6) {
            let c = l.colour_multiplicities(big_n);
            assert_eq!(homogeneous_degree(&l, big_n), c[0] as i64, "λ = {}", l);
            let d = chevalley(Chevalley::D, &FockVector::basis(l.clone()), big_n).unwrap();
            assert_eq!(d.coeff(&l), ParamRational::from_int(-(c[0] as i64)));
        }
    }
}

#[test]
fn h_eigenvalue_stable_in_cut() {
    for big_n in 2..=3 {
        for l in partitions_upto(5, 6) {
            for i in 0..big_n {
                let h = h_eigenvalue(&l, i, big_n);
                // Direct count at a larger cut.
                let n = l.len() + 1 + big_n;
                let k = WedgeIndex::o_plus(&l, n).unwrap();
                let col = |u: usize, c: i64| (u as i64 - c).rem_euclid(big_n as i64) == 0;
                let mut s: i64 = k.under(big_n).iter().map(|&u| col(u, i as i64) as i64 - col(u, i as i64 + 1) as i64).sum();
                s += ((-(n as i64) - i as i64).rem_euclid(big_n as i64) == 0) as i64;
                assert_eq!(h, s);
            }
        }
    }
}

fn fock_vec(coeffs: &[(Vec<usize>, i64)]) -> FockVector {
    let mut v = FockVector::zero();
    for (l, c) in coeffs {
        v.add_term(Partition::new(l.clone()).unwrap(), ParamRational::from_int(*c));
    }
    v
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..5, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.retain(|&x| x > 0);
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn chevalley_commutators(
        terms in prop::collection::vec((arb_partition(), -3i64..4), 1..4),
        big_n in 2usize..4,
        i in 0usize..3,
        j in 0usize..3,
    ) {
        let i = i % big_n;
        let j = j % big_n;
        let v = fock_vec(&terms.iter().map(|(l, c)| (l.parts().to_vec(), *c)).collect::<Vec<_>>());
        let ef = chevalley(Chevalley::E(i), &chevalley(Chevalley::F(j), &v, big_n).unwrap(), big_n).unwrap();
        let fe = chevalley(Chevalley::F(j), &chevalley(Chevalley::E(i), &v, big_n).unwrap(), big_n).unwrap();
        let expect = if i == j { chevalley(Chevalley::H(i), &v, big_n).unwrap() } else { FockVector::zero() };
        prop_assert_eq!(ef.sub(&fe), expect);
    }

    #[test]
    fn omega_roundtrip(terms in prop::collection::vec((arb_partition(), -5i64..6), 0..5)) {
        let n = 5;
        let mut v = WedgeVector::zero(n);
        for (l, c) in &terms {
            v.add_term(WedgeIndex::o_plus(l, n).unwrap(), ParamRational::from_int(*c));
        }
        let f = omega_iso(&v).unwrap();
        prop_assert_eq!(omega_inv(&f, n), v);
    }

    #[test]
    fn hamiltonian_is_triangular(raw in prop::collection::btree_set(-6i64..6, 1..4), big_n in 1usize..4) {
        let mut v: Vec<i64> = raw.into_iter().collect();
        v.reverse();
        let k = WedgeIndex::new(v).unwrap();
        let h = hamiltonian_wedge(&WedgeVector::basis(k.clone()), &beta(), big_n);
        prop_assert_eq!(h.coeff(&k), energy(&k, &beta(), big_n));
        let kb = k.over(big_n);
        for l in h.terms().keys() {
            if *l != k {
                let mut a = l.over(big_n);
                let mut c = kb.clone();
                a.sort_unstable();
                c.sort_unstable();
                // Sorted decreasingly, partial sums of l̄ bound those of k̄ from below.
                a.reverse();
                c.reverse();
                let (mut sa, mut sc) = (0, 0);
                let mut strict = false;
                for t in 0..a.len() {
                    sa += a[t];
                    sc += c[t];
                    prop_assert!(sa <= sc);
                    strict |= sa < sc;
                }
                prop_assert!(strict);
            }
        }
    }

    #[test]
    fn energy_depends_only_on_over(raw in prop::collection::btree_set(-9i64..9, 1..4), big_n in 1usize..4) {
        let mut v: Vec<i64> = raw.into_iter().collect();
        v.reverse();
        let k = WedgeIndex::new(v).unwrap();
        let kb = k.over(big_n);
        // Same k̄, all spins equal to N where the ordering allows.
        let shifted: Vec<i64> = kb.iter().map(|&m| join_index(big_n, m, big_n)).collect();
        if let Ok(l) = WedgeIndex::new(shifted) {
            prop_assert_eq!(energy(&k, &beta(), big_n), energy(&l, &beta(), big_n));
        }
    }
}
