use num_bigint::BigInt;
use proptest::prelude::*;

use qdet_core::exactring::{rational, LaurentPoly, Rational, XPoly};
use qdet_core::Error;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-6i64..=6, prop::collection::vec(-20i64..=20, 0..6))
        .prop_map(|(low, c)| LaurentPoly::from_i64s(low, &c))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn point() -> impl Strategy<Value = Rational> {
    (prop_oneof![-7i64..=-1, 1i64..=7], 1i64..=5).prop_map(|(n, d)| rational(n, d))
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert_eq!(&a + &(-&a), LaurentPoly::zero());
    }

    #[test]
    fn exact_division_round_trip(a in laurent(), b in nonzero_laurent()) {
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn non_multiples_are_rejected(a in nonzero_laurent(), k in 2i64..=9) {
        // a * (q + k) + 1 is never a multiple of q + k
        let d = LaurentPoly::from_i64s(0, &[k, 1]);
        let p = &(&a * &d) + &LaurentPoly::one();
        prop_assert_eq!(p.div_exact(&d), Err(Error::NonExactDivision));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in laurent(), b in laurent(), x in point()) {
        let (ea, eb) = (a.eval(&x).unwrap(), b.eval(&x).unwrap());
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval(&x).unwrap(), ea + eb);
    }

    #[test]
    fn inflation_is_an_injective_homomorphism(a in laurent(), b in laurent(), n in 1u32..=7) {
        prop_assert_eq!((&a * &b).inflate(n), &a.inflate(n) * &b.inflate(n));
        prop_assert_eq!((&a + &b).inflate(n), &a.inflate(n) + &b.inflate(n));
        prop_assert_eq!(a.inflate(n) == b.inflate(n), a == b);
    }

    #[test]
    fn text_round_trip(a in laurent()) {
        prop_assert_eq!(LaurentPoly::parse(&a.to_string()).unwrap(), a.clone());
        let js = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&js).unwrap(), a);
    }

    #[test]
    fn xpoly_division_round_trip(c0 in laurent(), c1 in laurent(), r in nonzero_laurent()) {
        let p = XPoly::new(vec![c0, c1]);
        let d = XPoly::x_plus(r);
        prop_assert_eq!((&p * &d).div_exact(&d).unwrap(), p);
    }
}

#[test]
fn big_coefficients_stay_exact() {
    // (q - 1)^60 has binomial coefficients past i64
    let p = LaurentPoly::from_i64s(0, &[-1, 1]).pow(60);
    let mid = p.coeff(30);
    let expect: BigInt = (31..=60u32).map(BigInt::from).product::<BigInt>()
        / (1..=30u32).map(BigInt::from).product::<BigInt>();
    assert_eq!(mid, expect);
    assert_eq!(p.div_exact(&LaurentPoly::from_i64s(0, &[-1, 1]).pow(59)).unwrap(), LaurentPoly::from_i64s(0, &[-1, 1]));
}
