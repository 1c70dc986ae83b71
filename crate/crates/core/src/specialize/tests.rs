use super::*;
use crate::relations::{constants, prerelations, Side};
use crate::tensor::Word;
use proptest::prelude::*;

fn example() -> CartanMatrix {
    CartanMatrix::new(vec![vec![2, -2, -1], vec![-1, 2, -1], vec![-3, -1, 2]]).unwrap()
}

fn a2() -> CartanMatrix {
    CartanMatrix::new(vec![vec![2, -1], vec![-1, 2]]).unwrap()
}

fn r(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn cl(terms: &[(i64, &[u8])]) -> ClassicalElement {
    ClassicalElement::from_terms(terms.iter().map(|(c, f)| (ClassicalWord::f_word(f.to_vec()), r(*c))))
}

#[test]
fn cartan_validation() {
    assert!(matches!(CartanMatrix::new(vec![vec![2, 1], vec![-1, 2]]), Err(Error::InvalidCartan(_))));
    assert!(matches!(CartanMatrix::new(vec![vec![2, 0], vec![-1, 2]]), Err(Error::InvalidCartan(_))));
    assert!(matches!(CartanMatrix::new(vec![vec![1]]), Err(Error::InvalidCartan(_))));
    assert!(matches!(CartanMatrix::new(vec![]), Err(Error::InvalidCartan(_))));
}

#[test]
fn average_examples() {
    let half = |n: i64| BigRational::new(n.into(), 2.into());
    let av = average(&example());
    assert_eq!(
        av.rows(),
        &[
            vec![r(2), half(-3), r(-2)],
            vec![half(-3), r(2), r(-1)],
            vec![r(-2), r(-1), r(2)],
        ]
    );
    let sym = average(&a2());
    assert_eq!(sym.rows(), &[vec![r(2), r(-1)], vec![r(-1), r(2)]]);
    let one = CartanMatrix::new(vec![vec![2]]).unwrap();
    assert_eq!(average(&one).rows(), &[vec![r(2)]]);
}

#[test]
fn braiding_examples() {
    let b = average(&example()).braiding(BraidingSide::Negative);
    assert!(b.is_symmetric());
    assert_eq!(b.q(1, 2).as_t_power(), Some(-3));
    let p = average(&example()).braiding(BraidingSide::Positive);
    assert_eq!(p.q(1, 2).as_t_power(), Some(3));
    let c = example().braiding(BraidingSide::Negative);
    assert_eq!(c.q(3, 1).as_t_power(), Some(-6));
    assert!(!c.is_symmetric());
}

fn golden() -> TensorElement {
    let s = |x: &str| x.parse::<Scalar>().unwrap();
    let w = |l: &[usize]| Word::new(l).unwrap();
    TensorElement::from_terms([
        (w(&[3, 3, 3, 1]), s("1")),
        (w(&[3, 3, 1, 3]), s("-(q^-3 + q^-1 + q)")),
        (w(&[3, 1, 3, 3]), s("q^-4 + q^-2 + 1")),
        (w(&[1, 3, 3, 3]), s("-q^-3")),
    ])
}

#[test]
fn example_chain() {
    let c = example();
    let u = specialize_element(&golden()).unwrap();
    assert_eq!(u, cl(&[(1, &[3, 3, 3, 1]), (-3, &[3, 3, 1, 3]), (3, &[3, 1, 3, 3]), (-1, &[1, 3, 3, 3])]));
    let s1 = ad_e(&c, 3, &u).unwrap();
    assert_eq!(s1, cl(&[(1, &[3, 3, 1]), (-2, &[3, 1, 3]), (1, &[1, 3, 3])]).scale(&r(3)));
    let s2 = ad_e(&c, 3, &cl(&[(1, &[3, 3, 1]), (-2, &[3, 1, 3]), (1, &[1, 3, 3])])).unwrap();
    assert_eq!(s2, cl(&[(1, &[3, 1]), (-1, &[1, 3])]).scale(&r(4)));
    let s3 = ad_e(&c, 3, &cl(&[(1, &[3, 1]), (-1, &[1, 3])])).unwrap();
    assert_eq!(s3, cl(&[(3, &[1])]));
    assert!(ad_e(&c, 3, &ClassicalElement::one()).unwrap().is_zero());
    match r_minus_witness(&c, &u, 3).unwrap() {
        Verdict::NotInRadical { chain, steps } => {
            assert_eq!(chain, vec![3, 3, 3]);
            assert_eq!(steps.last().unwrap().value, cl(&[(36, &[1])]));
        }
        v => panic!("expected a witness, got {v:?}"),
    }
}

#[test]
fn specialization_examples() {
    let mut x = TensorElement::from_word(Word::new(&[1, 2]).unwrap());
    x.add_term(Word::new(&[2, 1]).unwrap(), -Scalar::q_pow(1));
    assert_eq!(specialize_element(&x).unwrap(), cl(&[(1, &[1, 2]), (-1, &[2, 1])]));
    let bad = TensorElement::monomial((Scalar::q_pow(1) - Scalar::one()).inv().unwrap(), Word::new(&[1]).unwrap());
    assert!(matches!(specialize_element(&bad), Err(Error::NotInA1(_))));
}

#[test]
fn witness_on_radical_elements() {
    assert_eq!(r_minus_witness(&example(), &ClassicalElement::zero(), 3).unwrap(), Verdict::Inconclusive);
    let c = a2();
    let serre = ad_f(1, &ad_f(1, &ClassicalElement::generator(2)));
    assert_eq!(r_minus_witness(&c, &serre, 3).unwrap(), Verdict::Inconclusive);
}

#[test]
fn serre_membership_examples() {
    let c = a2();
    let serre = ad_f(1, &ad_f(1, &ClassicalElement::generator(2)));
    assert!(serre_ideal_member(&c, &serre, 3).unwrap());
    assert!(!serre_ideal_member(&c, &cl(&[(1, &[1, 2])]), 2).unwrap());
    assert!(matches!(serre_ideal_member(&c, &serre, 2), Err(Error::DegreeMismatch { .. })));
    let a = c.braiding(BraidingSide::Negative);
    let pre = prerelations(&a, 3, Side::Right).unwrap();
    assert_eq!(pre.dim(), 2);
    for x in pre.elements() {
        assert!(serre_ideal_member(&c, &specialize_element(x).unwrap(), 3).unwrap());
    }
}

#[test]
fn symmetrizable_prerelations_specialize_into_serre_ideal() {
    let b2 = CartanMatrix::new(vec![vec![2, -2], vec![-1, 2]]).unwrap();
    // B₂ braids through the symmetrized matrix D·C = [[2,-2],[-2,4]]
    let dc: Vec<Vec<BigRational>> = vec![vec![r(2), r(-2)], vec![r(-2), r(4)]];
    let cases = [
        (a2(), a2().braiding(BraidingSide::Negative)),
        (b2.clone(), braiding_from_matrix(&dc, BraidingSide::Negative, Origin::Cartan).unwrap()),
    ];
    for (c, a) in cases {
        let mut found = 0;
        for n in 2..=4 {
            for x in prerelations(&a, n, Side::Right).unwrap().elements() {
                assert!(serre_ideal_member(&c, &specialize_element(x).unwrap(), n).unwrap());
                found += 1;
            }
        }
        assert_eq!(found, 2);
    }
}

#[test]
fn q_adjoint_examples() {
    let a = average(&example()).braiding(BraidingSide::Negative);
    let inv = q_minus_q_inv().inv().unwrap();
    let (k, kinv) = q_adjoint(&a, 1, &TensorElement::generator(1)).unwrap();
    assert_eq!(k, TensorElement::one().scale(&inv));
    assert_eq!(kinv, TensorElement::one().scale(&-inv.clone()));
    let (k, kinv) = q_adjoint(&a, 1, &TensorElement::generator(2)).unwrap();
    assert!(k.is_zero() && kinv.is_zero());
    for n in 2..=4 {
        for x in constants(&a, n, Side::Right).unwrap().elements() {
            for i in 1..=3 {
                let (_, kinv) = q_adjoint(&a, i, x).unwrap();
                assert!(kinv.is_zero());
            }
        }
    }
    let nonsym = example().braiding(BraidingSide::Negative);
    assert!(matches!(q_adjoint(&nonsym, 1, &TensorElement::generator(1)), Err(Error::NotSymmetric)));
}

fn arb_f(n: u8) -> impl Strategy<Value = ClassicalElement> {
    proptest::collection::vec((proptest::collection::vec(1..=n, 0..4), -3i64..=3), 1..4)
        .prop_map(|t| ClassicalElement::from_terms(t.into_iter().map(|(f, c)| (ClassicalWord::f_word(f), r(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ad_e_is_a_derivation(u in arb_f(3), v in arb_f(3), i in 1u8..=3) {
        let c = example();
        let lhs = ad_e(&c, i, &u.mul(&c, &v)).unwrap();
        let rhs = ad_e(&c, i, &u).unwrap().mul(&c, &v).add(&u.mul(&c, &ad_e(&c, i, &v).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_adjoint_forms_agree(x in proptest::collection::vec((proptest::collection::vec(1usize..=3, 0..5), -3i64..=3), 1..4), i in 1u8..=3) {
        let a = average(&example()).braiding(BraidingSide::Negative);
        let w = TensorElement::from_terms(x.into_iter().map(|(l, e)| (Word::new(&l).unwrap(), Scalar::t_pow(e))));
        prop_assert!(q_adjoint(&a, i, &w).is_ok());
    }
}

