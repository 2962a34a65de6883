use proptest::prelude::*;

use koornwinder::exactalg::{parse_laurent, parse_scalar, LaurentPoly, Param, Scalar, Substitution};

const VARS: [Param; 4] = [Param::A, Param::T, Param::Alpha, Param::Gamma];

fn poly_from(terms: &[([u8; 4], i64)]) -> Scalar {
    terms.iter().fold(Scalar::zero(), |acc, (e, c)| {
        let m = VARS.iter().zip(e).fold(Scalar::from_i64(*c), |m, (p, k)| {
            m.mul(&Scalar::param(*p).pow(i32::from(*k)).unwrap())
        });
        acc.add(&m)
    })
}

fn poly() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((prop::array::uniform4(0u8..=2), -6i64..=6), 1..4).prop_map(|t| poly_from(&t))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| n.div(&d).ok())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::array::uniform2(-2i32..=2), -5i64..=5), 1..5).prop_map(|terms| {
        terms.into_iter().fold(LaurentPoly::zero(2), |acc, (e, c)| {
            acc.add(&LaurentPoly::monomial(e.to_vec(), Scalar::from_i64(c))).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert!(x.sub(&x).is_zero());
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_stable(x in scalar()) {
        let again = Scalar::from_zfraction(x.znum().clone(), x.zden().clone()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert_eq!(parse_scalar(&x.to_string()).unwrap(), x.clone());
        prop_assert_eq!(Scalar::from_json(&x.to_json()).unwrap(), x);
    }

    #[test]
    fn substitution_is_a_homomorphism(x in scalar(), y in scalar(), v in poly()) {
        let sub = Substitution::new().with(Param::A, v).with(Param::Gamma, Scalar::from_ratio(3, 7).unwrap());
        if let (Ok(sx), Ok(sy), Ok(sxy), Ok(ssum)) =
            (sub.apply(&x), sub.apply(&y), sub.apply(&x.mul(&y)), sub.apply(&x.add(&y)))
        {
            prop_assert_eq!(sx.mul(&sy), sxy);
            prop_assert_eq!(sx.add(&sy), ssum);
        }
    }

    #[test]
    fn exact_division_inverts_multiplication(f in laurent(), g in laurent(), c in scalar()) {
        prop_assume!(!g.is_zero());
        let f = f.scale(&c);
        prop_assert_eq!(f.mul(&g).unwrap().divide_exact(&g).unwrap(), f.clone());
        prop_assert_eq!(LaurentPoly::from_json(&f.to_json()).unwrap(), f.clone());
        prop_assert_eq!(parse_laurent(&f.to_string(), 2).unwrap(), f);
    }
}

#[test]
fn printing_examples() {
    let r = parse_scalar("beta*t^2 + gamma*t + beta*gamma*t + gamma*delta").unwrap();
    assert_eq!(r.to_string(), "beta*t^2 + beta*gamma*t + gamma*t + gamma*delta");
    assert_eq!(parse_scalar("1/q").unwrap().to_string(), "1/q");
    assert_eq!(parse_scalar("(t-1)/(a*c)").unwrap().to_string(), "(t - 1)/(a*c)");
    let f = parse_laurent("-z1 + 2 - z1^-1", 1).unwrap();
    assert_eq!(f.to_string(), "-z1 + 2 - z1^-1");
}

#[test]
fn change_of_variables_values() {
    let cv = Substitution::change_of_variables();
    let gamma = cv.apply(&Scalar::param(Param::Gamma)).unwrap();
    assert_eq!(gamma, parse_scalar("(1-t)/((a-1)*(c-1))").unwrap());
    let alpha = cv.apply(&Scalar::param(Param::Alpha)).unwrap();
    assert_eq!(alpha, parse_scalar("-a*c*(1-t)/((a-1)*(c-1))").unwrap());
}
