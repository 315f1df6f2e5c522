use proptest::prelude::*;
use qweyl_cli::{parse_iqg, parse_poly, parse_weyl};
use qweyl_core::{phi, reduce, PolyElement, QScalar, Variant, WeylElement, WeylLetter};

fn variant() -> impl Strategy<Value = Variant> {
    (1u32..=3, any::<bool>()).prop_map(|(r, j)| {
        if j {
            Variant::jmath(r).unwrap()
        } else {
            Variant::imath(r).unwrap()
        }
    })
}

fn coeff() -> impl Strategy<Value = QScalar> {
    (
        -2i64..=2,
        prop::collection::vec(-3i64..=3, 1..4),
        0i64..=2,
        prop::collection::vec(-2i64..=2, 1..3),
    )
        .prop_map(|(lo, num, dlo, den)| {
            let d = QScalar::laurent(dlo, &den);
            let d = if d.is_zero() { QScalar::one() } else { d };
            QScalar::laurent(lo, &num).checked_div(&d).unwrap()
        })
}

fn weyl_element() -> impl Strategy<Value = WeylElement> {
    variant().prop_flat_map(|v| {
        let letters = WeylLetter::all(&v);
        prop::collection::vec(
            (
                prop::collection::vec(prop::sample::select(letters), 0..6),
                coeff(),
            ),
            0..4,
        )
        .prop_map(move |terms| {
            terms.into_iter().fold(WeylElement::zero(v), |acc, (w, c)| {
                &acc + &WeylElement::word(v, &w).unwrap().scale(&c)
            })
        })
    })
}

fn poly_element() -> impl Strategy<Value = (Variant, PolyElement)> {
    variant().prop_flat_map(|v| {
        let n = v.weyl_len() as usize;
        let terms = prop::collection::vec((prop::collection::vec(0u32..4, n), coeff()), 0..4);
        (Just(v), terms).prop_map(move |(v, terms)| {
            let mut f = PolyElement::zero(n as u32);
            for (a, c) in terms {
                f.add_term(a, c);
            }
            (v, f)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn weyl_render_parses_back(x in weyl_element()) {
        let v = x.variant();
        let text = x.to_string();
        let back = reduce(v, &parse_weyl(&text, &v).unwrap()).unwrap();
        prop_assert_eq!(back, x, "{}", text);
    }

    #[test]
    fn poly_render_parses_back((v, f) in poly_element()) {
        let text = f.to_string();
        prop_assert_eq!(parse_poly(&text, &v).unwrap(), f, "{}", text);
    }
}

#[test]
fn iqg_letters_render_back() {
    let v = Variant::jmath(2).unwrap();
    let u = parse_iqg("K1^-2 B3 + (q^2+1)/(q) * K4", &v).unwrap();
    let text = qweyl_core::expr::render_combination(&u.expand());
    let again = parse_iqg(&text, &v).unwrap();
    assert_eq!(phi(v, &again).unwrap(), phi(v, &u).unwrap());
}
