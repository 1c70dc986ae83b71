use super::*;
use crate::braid::{make_operator, theta_scalar, OperatorName};
use crate::braiding::Origin;
use crate::tensor::{block, Multidegree};
use proptest::prelude::*;

fn s(x: &str) -> Scalar {
    x.parse().unwrap()
}

fn mat(rows: &[&[&str]]) -> ScalarMatrix {
    let cols = rows[0].len();
    ScalarMatrix::from_rows(rows.iter().map(|r| r.iter().map(|x| s(x)).collect()).collect(), cols).unwrap()
}

#[test]
fn operator_matrix_examples() {
    let a = BraidingMatrix::from_t_exponents(&[vec![2, -3], vec![5, 1]], Origin::Free).unwrap();
    let b = block(&Multidegree(vec![1, 1]));
    let id = operator_matrix(&a, &BraidOperator::identity(2), &b).unwrap();
    assert_eq!(id, ScalarMatrix::identity(2));
    let t2 = operator_matrix(&a, &make_operator(OperatorName::Tn, 2).unwrap(), &b).unwrap();
    // basis (12, 21): T₂(12) = 12 + q₁₂·21, T₂(21) = 21 + q₂₁·12
    let expected = ScalarMatrix::from_rows(
        vec![vec![Scalar::one(), a.q(2, 1).clone()], vec![a.q(1, 2).clone(), Scalar::one()]],
        2,
    )
    .unwrap();
    assert_eq!(t2, expected);
    let md = Multidegree(vec![2, 1]);
    let theta = operator_matrix(&a, &make_operator(OperatorName::Theta, 3).unwrap(), &block(&md)).unwrap();
    let sc = theta_scalar(&a, &md);
    let mut want = ScalarMatrix::zeros(3, 3);
    for i in 0..3 {
        want.set(i, i, sc.clone());
    }
    assert_eq!(theta, want);
    assert!(matches!(
        operator_matrix(&a, &BraidOperator::identity(3), &b),
        Err(Error::DegreeMismatch { .. })
    ));
}

#[test]
fn kernel_examples() {
    assert!(kernel(&ScalarMatrix::identity(3)).is_zero());
    assert_eq!(kernel(&ScalarMatrix::zeros(2, 3)), Subspace::full(3));
    // q₁₂ = q^2, q₂₁ = q^-2
    let a = BraidingMatrix::from_t_exponents(&[vec![2, 4], vec![-4, 6]], Origin::Free).unwrap();
    let b = block(&Multidegree(vec![1, 1]));
    let s2 = operator_matrix(&a, &make_operator(OperatorName::SnDirect, 2).unwrap(), &b).unwrap();
    let k = kernel(&s2);
    assert_eq!(k.dim(), 1);
    assert_eq!(k.basis()[0], vec![Scalar::one(), -Scalar::q_pow(2)]);
}

#[test]
fn subspace_examples() {
    let x = Subspace::span(3, vec![vec![s("1"), s("q"), s("0")], vec![s("0"), s("1"), s("q^-1")]]).unwrap();
    assert_eq!(x.intersect(&x).unwrap(), x);
    assert!(x.intersect(&Subspace::zero(3)).unwrap().is_zero());
    assert_eq!(x.complement_in(&Subspace::zero(3)).unwrap(), x);
    let y = Subspace::span(3, vec![vec![s("0"), s("0"), s("1")]]).unwrap();
    assert!(matches!(x.complement_in(&y), Err(Error::NotSubspace(_))));
    let line = Subspace::span(3, vec![vec![s("1"), s("q + 1"), s("q^-1")]]).unwrap();
    assert!(x.contains_subspace(&line));
    let c = x.complement_in(&line).unwrap();
    assert_eq!(c.dim(), 1);
    assert_eq!(c.sum(&line).unwrap(), x);
    assert!(c.intersect(&line).unwrap().is_zero());
}

#[test]
fn rref_is_reduced() {
    let m = mat(&[&["0", "2", "q"], &["1", "q", "0"], &["1", "q + 2", "q"]]);
    let r = rref(m.to_rows(), 3);
    assert_eq!(r.len(), 2);
    let half = Scalar::from_rational(num_rational::BigRational::new(1.into(), 2.into()));
    assert_eq!(r[0], vec![s("1"), s("0"), -(&half * &Scalar::q_pow(2))]);
    assert_eq!(r[1], vec![s("0"), s("1"), &half * &Scalar::q_pow(1)]);
    assert_eq!(m.rank(), 2);
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        3 => Just(Scalar::zero()),
        4 => (-2i64..=2, -3i64..=3).prop_map(|(c, e)| Scalar::from_int(c) * Scalar::t_pow(e)),
        1 => (-2i64..=2, 1i64..=2).prop_map(|(c, d)| {
            Scalar::from_int(c) / (Scalar::q_pow(d) + Scalar::one())
        }),
    ]
}

fn arb_matrix() -> impl Strategy<Value = ScalarMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(arb_scalar(), r * c).prop_map(move |v| {
            ScalarMatrix::from_rows(v.chunks(c).map(|x| x.to_vec()).collect(), c).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_is_exact(m in arb_matrix()) {
        let k = kernel(&m);
        for v in k.basis() {
            prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
    }

    #[test]
    fn rref_independent_of_row_order(m in arb_matrix()) {
        let mut rows = m.to_rows();
        let a = rref(rows.clone(), m.cols());
        rows.reverse();
        prop_assert_eq!(a, rref(rows, m.cols()));
    }

    #[test]
    fn intersection_and_complement(m in arb_matrix(), n in arb_matrix()) {
        let c = m.cols();
        let u = Subspace::span(c, m.to_rows()).unwrap();
        let rows: Vec<Vec<Scalar>> = n.to_rows().into_iter().map(|mut r| { r.resize(c, Scalar::zero()); r }).collect();
        let w = Subspace::span(c, rows).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert!(u.contains_subspace(&i) && w.contains_subspace(&i));
        prop_assert_eq!(i.dim() + u.sum(&w).unwrap().dim(), u.dim() + w.dim());
        let comp = u.complement_in(&i).unwrap();
        prop_assert_eq!(comp.dim() + i.dim(), u.dim());
        prop_assert_eq!(comp.sum(&i).unwrap(), u);
    }
}
