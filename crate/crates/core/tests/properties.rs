use proptest::prelude::*;
use qweyl_core::weylcore::{reduce_with, Strategy as Rewrite};
use qweyl_core::{
    act, braid_t, omega_spec, psi_spec, qint, reduce, BraidKind, BraidParams, FreeExpr,
    PolyElement, QScalar, Sign, Variant, WeylElement, WeylLetter,
};

fn scalar() -> impl Strategy<Value = QScalar> {
    (
        -2i64..=2,
        prop::collection::vec(-3i64..=3, 1..4),
        -1i64..=1,
        prop::collection::vec(-2i64..=2, 0..3),
    )
        .prop_map(|(lo, num, dlo, den)| {
            let n = QScalar::laurent(lo, &num);
            let mut d = QScalar::laurent(dlo, &den);
            if d.is_zero() {
                d = QScalar::one();
            }
            n.checked_div(&d).unwrap()
        })
}

fn variant() -> impl Strategy<Value = Variant> {
    (1u32..=2, any::<bool>()).prop_map(|(r, j)| {
        if j {
            Variant::jmath(r).unwrap()
        } else {
            Variant::imath(r).unwrap()
        }
    })
}

fn word(v: Variant, max: usize) -> impl Strategy<Value = Vec<WeylLetter>> {
    prop::collection::vec(prop::sample::select(WeylLetter::all(&v)), 0..=max)
}

fn element(v: Variant) -> impl Strategy<Value = WeylElement> {
    prop::collection::vec((word(v, 4), -2i64..=2, -2i64..=2), 1..4).prop_map(move |terms| {
        let mut out = WeylElement::zero(v);
        for (w, c, k) in terms {
            let t = WeylElement::word(v, &w)
                .unwrap()
                .scale(&QScalar::monomial(c, k));
            out = &out + &t;
        }
        out
    })
}

fn with_elements(n: usize) -> impl Strategy<Value = (Variant, Vec<WeylElement>)> {
    variant().prop_flat_map(move |v| (Just(v), prop::collection::vec(element(v), n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn bar_is_ring_involution(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn qint_is_bar_invariant(n in -6i64..=6) {
        prop_assert_eq!(qint(n).bar(), qint(n));
    }

    #[test]
    fn product_is_associative((_v, es) in with_elements(3)) {
        let (a, b, c) = (&es[0], &es[1], &es[2]);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
    }

    #[test]
    fn product_distributes((_v, es) in with_elements(3)) {
        let (a, b, c) = (&es[0], &es[1], &es[2]);
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(&(a + b) * c, &(a * c) + &(b * c));
    }

    #[test]
    fn canonical_form_is_idempotent((v, es) in with_elements(1)) {
        let a = &es[0];
        let again = WeylElement::one(v) * a.clone();
        prop_assert_eq!(&again, a);
        for (mono, c) in a.terms() {
            let w = WeylElement::word(v, &mono.word()).unwrap().scale(c);
            prop_assert_eq!(w.terms().len(), 1);
            prop_assert_eq!(w.terms().get(mono), Some(c));
        }
    }

    #[test]
    fn rewriting_strategies_agree(w in variant().prop_flat_map(|v| (Just(v), word(v, 7)))) {
        let (v, w) = w;
        let e = FreeExpr::word(w);
        let s = reduce(v, &e).unwrap();
        prop_assert_eq!(&reduce_with(v, &e, Rewrite::Leftmost).unwrap(), &s);
        prop_assert_eq!(&reduce_with(v, &e, Rewrite::Rightmost).unwrap(), &s);
    }

    #[test]
    fn anti_endomorphisms_reverse_products((v, es) in with_elements(2)) {
        let (a, b) = (&es[0], &es[1]);
        for s in [omega_spec(v), psi_spec(v)] {
            prop_assert_eq!(s.apply(&(a * b)).unwrap(), &s.apply(b).unwrap() * &s.apply(a).unwrap());
        }
    }

    #[test]
    fn braid_operators_are_multiplicative((v, es) in with_elements(2), e in prop::sample::select(Sign::BOTH.to_vec())) {
        let (a, b) = (&es[0], &es[1]);
        for i in v.braid_indices() {
            for kind in BraidKind::BOTH {
                let t = braid_t(v, BraidParams::new(&v, i, e, kind).unwrap()).unwrap();
                prop_assert_eq!(t.apply(&(a * b)).unwrap(), &t.apply(a).unwrap() * &t.apply(b).unwrap());
            }
        }
    }

    #[test]
    fn module_action_is_multiplicative((v, es) in with_elements(2)) {
        let f = PolyElement::monomial(vec![2; v.weyl_len() as usize]);
        let (a, b) = (&es[0], &es[1]);
        let lhs = act(&v, &(a * b), &f).unwrap();
        let rhs = act(&v, a, &act(&v, b, &f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
