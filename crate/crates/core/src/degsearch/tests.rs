use super::*;
use crate::braid::theta_scalar;
use crate::braiding::Origin;
use proptest::prelude::*;

fn cartan(c: &[&[i64]]) -> BraidingMatrix {
    let e: Vec<Vec<i64>> = c.iter().map(|r| r.iter().map(|x| 2 * x).collect()).collect();
    BraidingMatrix::from_t_exponents(&e, Origin::Cartan).unwrap()
}

fn example() -> ThetaForm {
    ThetaForm::new(&cartan(&[&[2, -2, -1], &[-1, 2, -1], &[-3, -1, 2]])).unwrap()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn qf2(b: i64) -> QuadraticForm {
    QuadraticForm::new(vec![vec![rat(0), rat(b)], vec![rat(0), rat(0)]]).unwrap()
}

#[test]
fn theta_exponent_examples() {
    assert_eq!(theta_exponent(&example(), &Multidegree(vec![1, 0, 3])), 0);
    let free = ThetaForm::new(&BraidingMatrix::from_t_exponents(&[vec![3, 1], vec![-1, 5]], Origin::Free).unwrap()).unwrap();
    assert_eq!(theta_exponent(&free, &Multidegree(vec![1, 1])), 0);
    let one = ThetaForm::new(&BraidingMatrix::from_t_exponents(&[vec![-4]], Origin::Free).unwrap()).unwrap();
    for m in 1..=4 {
        let md = Multidegree(vec![m]);
        assert_eq!(theta_exponent(&one, &md), -4 * (m as i64) * (m as i64 - 1));
    }
    let nonmono = BraidingMatrix::new(vec![vec![crate::Scalar::from_int(-1)]]).unwrap();
    assert!(matches!(ThetaForm::new(&nonmono), Err(Error::NonMonomialBraiding)));
}

#[test]
fn zero_block_examples() {
    assert!(zero_blocks(&example(), 4).contains(&Multidegree(vec![1, 0, 3])));
    let one = ThetaForm::new(&BraidingMatrix::from_t_exponents(&[vec![-4]], Origin::Free).unwrap()).unwrap();
    assert!(zero_blocks(&one, 8).is_empty());
    // averaged sl3
    let a2 = ThetaForm::new(&cartan(&[&[2, -1], &[-1, 2]])).unwrap();
    let z = zero_blocks(&a2, 3);
    assert_eq!(z, vec![Multidegree(vec![1, 2]), Multidegree(vec![2, 1])]);
}

#[test]
fn semipositive_examples() {
    let x2 = QuadraticForm::new(vec![vec![rat(0)]]).unwrap();
    assert!(is_semipositive(&x2));
    assert!(is_semipositive(&qf2(2)));
    assert!(!is_semipositive(&qf2(4)));
    assert_eq!(qf2(4).eval(&[1, 1]), rat(-2));
    assert!(is_semipositive(&qf2(1)));
    assert!(!is_semipositive(&QuadraticForm::from_theta(&example()).unwrap()));
}

#[test]
fn enumeration_examples() {
    let x2 = QuadraticForm::new(vec![vec![rat(0)]]).unwrap();
    let e = enumerate_e(&x2, EnumerateOptions::default());
    assert!(matches!(e, Enumeration::Finite(_)));
    assert!(e.points().iter().all(|p| p[0] < 2));
    let ex = enumerate_e(&QuadraticForm::from_theta(&example()).unwrap(), EnumerateOptions { all_integers: false, bound: 4 });
    assert!(matches!(ex, Enumeration::Unbounded { .. }));
    assert!(ex.points().contains(&vec![1, 0, 3]));
    for n in 1..=4 {
        let zero = QuadraticForm::new(vec![vec![rat(0); n]; n]).unwrap();
        let e = enumerate_e(&zero, EnumerateOptions::default());
        assert_eq!(e.points().len(), 1 << n);
        assert!(e.points().iter().all(|p| p.iter().all(|&v| v == 0 || v == 1)));
    }
    let a2 = QuadraticForm::from_theta(&ThetaForm::new(&cartan(&[&[2, -1], &[-1, 2]])).unwrap()).unwrap();
    let e = enumerate_e(&a2, EnumerateOptions::default());
    assert_eq!(e, Enumeration::Finite(vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 2], vec![2, 1], vec![2, 2]]));
    let all = enumerate_e(&a2, EnumerateOptions { all_integers: true, bound: 0 });
    assert!(all.points().len() >= e.points().len());
    assert!(e.points().iter().all(|p| all.points().contains(p)));
}

fn arb_cartan_like(n: usize) -> impl Strategy<Value = BraidingMatrix> {
    proptest::collection::vec(-3i64..=0, n * n).prop_map(move |v| {
        let e: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 4 } else { 2 * v[i * n + j] }).collect())
            .collect();
        BraidingMatrix::from_t_exponents(&e, Origin::Free).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zero_blocks_match_theta(a in arb_cartan_like(3)) {
        let tf = ThetaForm::new(&a).unwrap();
        let z = zero_blocks(&tf, 5);
        for h in 2..=5 {
            for md in multidegrees_of_degree(3, h) {
                prop_assert_eq!(theta_scalar(&a, &md).is_one(), z.contains(&md));
                prop_assert_eq!(theta_scalar(&a, &md).as_t_power(), Some(theta_exponent(&tf, &md)));
            }
        }
    }

    #[test]
    fn finite_e_matches_zero_blocks(a in arb_cartan_like(3)) {
        let tf = ThetaForm::new(&a).unwrap();
        let qf = QuadraticForm::from_theta(&tf).unwrap();
        if let Enumeration::Finite(pts) = enumerate_e(&qf, EnumerateOptions::default()) {
            let max_h = pts.iter().map(|p| p.iter().sum::<i64>()).max().unwrap_or(0) as usize;
            let z = zero_blocks(&tf, max_h + 3);
            let from_e: Vec<Multidegree> = pts
                .iter()
                .filter(|p| p.iter().sum::<i64>() >= 2)
                .map(|p| Multidegree(p.iter().map(|&v| v as usize).collect()))
                .collect();
            prop_assert_eq!(z, from_e);
        }
    }

    #[test]
    fn semipositive_agrees_with_sampling(b in proptest::collection::vec(-4i64..=4, 3)) {
        let qf = QuadraticForm::new(vec![
            vec![rat(0), rat(b[0]), rat(b[1])],
            vec![rat(0), rat(0), rat(b[2])],
            vec![rat(0); 3],
        ]).unwrap();
        let sampled_negative = !boxed(3, -6, 6, |x| qf.eval(x) < rat(0)).is_empty();
        if is_semipositive(&qf) {
            prop_assert!(!sampled_negative);
        }
        if sampled_negative {
            prop_assert!(!is_semipositive(&qf));
        }
    }
}
