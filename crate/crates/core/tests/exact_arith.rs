use jackgl::arith::text::parse;
use jackgl::arith::{expand_at_infinity, int, Mono, Param, Poly};
use jackgl::ParamRational;
use proptest::prelude::*;

fn poly_in(vars: &[Param], coeffs: &[(u16, u16, i64)]) -> Poly {
    Poly::from_terms(coeffs.iter().map(|&(a, b, c)| {
        let m = Mono::var(vars[0], a).mul(&Mono::var(vars[1], b));
        (m, int(c))
    }))
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((0u16..3, 0u16..3, -4i64..5), 0..4).prop_map(|c| poly_in(&[Param::G, Param::B], &c))
}

fn arb_rational() -> impl Strategy<Value = ParamRational> {
    (arb_poly(), arb_poly()).prop_filter_map("zero denominator", |(n, d)| {
        if d.is_zero() {
            None
        } else {
            ParamRational::new(n, d).ok()
        }
    })
}

#[test]
fn worked_examples() {
    let g = ParamRational::param(Param::G);
    let one = ParamRational::one();
    let x = &(&g * &ParamRational::from_int(2)) * &(&g + &one).inv().unwrap();
    assert_eq!(x.to_string(), "2*g/(g+1)");
    let y = parse("(g^2-1)/(g-1)").unwrap();
    assert_eq!(y, &g + &one);
    assert_eq!(y.substitute(Param::G, &ParamRational::from_int(3)).unwrap(), ParamRational::from_int(4));
    assert!(parse("1/(g-g)").is_err());
    let e = expand_at_infinity(&parse("(u+2)/(u+1)").unwrap(), 3).unwrap();
    let want: Vec<ParamRational> = ["1", "-1", "1"].iter().map(|s| s.parse().unwrap()).collect();
    assert_eq!(e, want);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_unique(a in arb_rational(), k in arb_poly()) {
        // Multiplying numerator and denominator by a common factor changes nothing.
        prop_assume!(!k.is_zero());
        let b = ParamRational::new(a.numer().mul(&k), a.denom().mul(&k)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.to_string(), b.to_string());
    }

    #[test]
    fn ring_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn substitution_is_a_homomorphism(a in arb_rational(), b in arb_rational(), v in -5i64..6) {
        let v = ParamRational::from_int(v);
        let s = |x: &ParamRational| x.substitute(Param::G, &v);
        if let (Ok(sa), Ok(sb)) = (s(&a), s(&b)) {
            prop_assert_eq!(s(&(&a + &b)).unwrap(), &sa + &sb);
            if let Ok(sab) = s(&(&a * &b)) {
                prop_assert_eq!(sab, &sa * &sb);
            }
        }
    }

    #[test]
    fn display_parse_roundtrip(a in arb_rational()) {
        let back: ParamRational = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }
}
