use num_rational::BigRational;
use proptest::prelude::*;

use super::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn bar_negates_exponents() {
    let s = Scalar::q_pow(1) + Scalar::q_pow(-3);
    assert_eq!(s.bar(), Scalar::q_pow(-1) + Scalar::q_pow(3));
    assert_eq!(Scalar::one().bar(), Scalar::one());
    let x = Scalar::one() / q_minus_q_inv();
    assert_eq!(x.bar(), -x.clone());
    assert_eq!(x.bar(), Scalar::one() / (Scalar::q_pow(-1) - Scalar::q_pow(1)));
}

#[test]
fn eval_at_one_examples() {
    let s = (Scalar::q_pow(3) - Scalar::q_pow(-3)) / q_minus_q_inv();
    assert!(s.is_laurent());
    assert_eq!(s.eval_at_one().unwrap(), rat(3, 1));
    assert_eq!(Scalar::from_int(5).eval_at_one().unwrap(), rat(5, 1));
    let pole = Scalar::one() / (Scalar::q_pow(1) - Scalar::one());
    assert!(matches!(pole.eval_at_one(), Err(Error::DenominatorVanishesAtOne)));
}

#[test]
fn in_a1_examples() {
    let s = (Scalar::q_pow(2) + Scalar::one()) / (Scalar::q_pow(1) + Scalar::one());
    assert!(s.in_a1());
    let s = Scalar::one() / (Scalar::t_pow(1) - Scalar::one());
    assert!(!s.in_a1());
    assert!(Scalar::zero().in_a1());
}

#[test]
fn canonical_form_makes_equal_fractions_identical() {
    // (q^2 - 1)/(q - 1) == q + 1
    let a = (Scalar::q_pow(2) - Scalar::one()) / (Scalar::q_pow(1) - Scalar::one());
    assert_eq!(a, Scalar::q_pow(1) + Scalar::one());
    assert!(a.is_laurent());
    // denominators are monic polynomials with nonzero constant term
    let b = Scalar::from_int(3) / (Scalar::t_pow(3).scale(&rat(2, 1)) + Scalar::t_pow(1));
    assert!(b.denominator().leading().unwrap() == &rat(1, 1));
    assert!(!b.denominator().coeff(0).is_zero());
    assert_eq!(&b * &(Scalar::t_pow(3).scale(&rat(2, 1)) + Scalar::t_pow(1)), Scalar::from_int(3));
}

#[test]
fn q_integers() {
    assert_eq!(q_integer(1), Scalar::one());
    assert_eq!(q_integer(2), Scalar::q_pow(1) + Scalar::q_pow(-1));
    assert_eq!(q_integer(4).eval_at_one().unwrap(), rat(4, 1));
}

fn arb_laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-6i64..=6, -4i64..=4), 0..4)
        .prop_map(|ts| Laurent::from_terms(ts.into_iter().map(|(e, c)| (e, rat(c, 1)))))
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (arb_laurent(), arb_laurent()).prop_map(|(n, d)| {
        if d.is_zero() {
            Scalar::from_laurent(n)
        } else {
            Scalar::from_fraction(n, d).unwrap()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, Scalar::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        }
    }

    #[test]
    fn bar_is_an_involutive_automorphism(a in arb_scalar(), b in arb_scalar()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn eval_at_one_is_multiplicative(a in arb_scalar(), b in arb_scalar()) {
        if let (Ok(x), Ok(y)) = (a.eval_at_one(), b.eval_at_one()) {
            prop_assert_eq!((&a * &b).eval_at_one().unwrap(), x * y);
        }
    }

    #[test]
    fn text_form_round_trips(a in arb_scalar()) {
        let text = a.to_string();
        let back: Scalar = text.parse().unwrap();
        prop_assert_eq!(back, a);
    }
}
