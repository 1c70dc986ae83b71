use super::*;
use crate::braiding::Origin;
use crate::calculus::{d_l, d_r};

fn cartan(c: &[&[i64]]) -> BraidingMatrix {
    let e: Vec<Vec<i64>> = c.iter().map(|r| r.iter().map(|x| 2 * x).collect()).collect();
    BraidingMatrix::from_t_exponents(&e, Origin::Cartan).unwrap()
}

fn example() -> BraidingMatrix {
    cartan(&[&[2, -2, -1], &[-1, 2, -1], &[-3, -1, 2]])
}

fn a2() -> BraidingMatrix {
    cartan(&[&[2, -1], &[-1, 2]])
}

fn s(x: &str) -> Scalar {
    x.parse().unwrap()
}

fn w(l: &[usize]) -> Word {
    Word::new(l).unwrap()
}

#[test]
fn golden_example_block() {
    let a = example();
    let rel = prerelations(&a, 4, Side::Right).unwrap();
    let md = Multidegree(vec![1, 0, 3]);
    let br = rel.block(&md).expect("block (1,0,3) present");
    let golden = TensorElement::from_terms([
        (w(&[3, 3, 3, 1]), s("1")),
        (w(&[3, 3, 1, 3]), s("-(q^-3 + q^-1 + q)")),
        (w(&[3, 1, 3, 3]), s("q^-4 + q^-2 + 1")),
        (w(&[1, 3, 3, 3]), s("-q^-3")),
    ]);
    let b = block(&md);
    let expected = Subspace::span(b.dim(), vec![b.coordinates(&golden).unwrap()]).unwrap();
    assert_eq!(br.subspace, expected);
    assert_eq!(br.relations.len(), 1);
    let p = make_operator(OperatorName::Pn, 4).unwrap();
    for (r, wit) in br.relations.iter().zip(&br.witnesses) {
        assert_eq!(&crate::braid::apply_operator(&a, &p, wit).unwrap(), r);
    }
}


#[test]
fn degree2_examples() {
    // q₁₂ = q^3, q₂₁ = q^-3
    let a = BraidingMatrix::from_t_exponents(&[vec![2, 6], vec![-6, 4]], Origin::Free).unwrap();
    let r = degree2_relations(&a);
    assert_eq!(r.dim(), 1);
    let mut x = TensorElement::from_word(w(&[1, 2]));
    x.add_term(w(&[2, 1]), -Scalar::q_pow(3));
    assert_eq!(r.blocks[0].relations, vec![x]);
    let generic = BraidingMatrix::from_t_exponents(&[vec![2, 6], vec![-4, 4]], Origin::Free).unwrap();
    assert_eq!(degree2_relations(&generic).dim(), 0);
    let minus = BraidingMatrix::new(vec![vec![Scalar::from_int(-1)]]).unwrap();
    let r = degree2_relations(&minus);
    assert_eq!(r.blocks[0].relations, vec![TensorElement::from_word(w(&[1, 1]))]);
}

#[test]
fn degree_two_sets_coincide() {
    for seed in 0..10 {
        let mut a = BraidingMatrix::random_monomial(3, seed, 2).unwrap();
        if seed % 2 == 0 {
            // force q₁₂q₂₁ = 1 and q₃₃ = -1
            let mut e: Vec<Vec<Scalar>> = a.entries().to_vec();
            e[1][0] = e[0][1].inv().unwrap();
            e[2][2] = Scalar::from_int(-1);
            a = BraidingMatrix::new(e).unwrap();
        }
        let d2 = degree2_relations(&a);
        for side in [Side::Right, Side::Left] {
            let c = constants(&a, 2, side).unwrap();
            let p = prerelations(&a, 2, side).unwrap();
            assert_eq!(c.blocks, d2.blocks);
            assert_eq!(p.blocks.iter().map(|b| &b.subspace).collect::<Vec<_>>(),
                d2.blocks.iter().map(|b| &b.subspace).collect::<Vec<_>>());
        }
    }
}

#[test]
fn single_letter_has_no_constants() {
    let a = BraidingMatrix::from_t_exponents(&[vec![2]], Origin::Free).unwrap();
    for n in 2..=6 {
        assert_eq!(constants(&a, n, Side::Right).unwrap().dim(), 0);
    }
    let dims = nichols_dims(&a, 6).unwrap();
    assert!(dims.iter().all(|d| d.len() == 1 && d[0].1 == 1));
}

#[test]
fn serre_constant_for_sl3() {
    let c = constants(&a2(), 3, Side::Right).unwrap();
    let md = Multidegree(vec![2, 1]);
    assert_eq!(c.block(&md).unwrap().dim(), 1);
    let b = block(&md);
    let brute = symmetrizer_kernel(&a2(), &b).unwrap();
    assert_eq!(brute.dim(), 1);
}

#[test]
fn nichols_dims_examples() {
    let a = BraidingMatrix::from_t_exponents(&[vec![2, 6], vec![-6, 4]], Origin::Free).unwrap();
    let d = nichols_dims(&a, 2).unwrap();
    assert_eq!(d[0], vec![(Multidegree(vec![0, 0]), 1)]);
    assert_eq!(d[1].iter().map(|x| x.1).sum::<usize>(), 2);
    assert_eq!(d[2].iter().map(|x| x.1).sum::<usize>(), 3);
}

#[test]
fn rejects_small_degree() {
    assert!(matches!(constants(&a2(), 1, Side::Right), Err(Error::BadParameters(_))));
    assert!(matches!(prerelations(&a2(), 0, Side::Left), Err(Error::BadParameters(_))));
}

fn all_test_matrices() -> Vec<BraidingMatrix> {
    let mut v = vec![example(), a2(), cartan(&[&[2, -3], &[-1, 2]])];
    v.extend((0..4).map(|s| BraidingMatrix::random_monomial(2, s, 3).unwrap()));
    v
}

#[test]
fn relations_lie_in_symmetrizer_kernel() {
    for a in all_test_matrices() {
        for n in 2..=4 {
            let sn = make_operator(OperatorName::SnFactoredT, n).unwrap();
            let pre = prerelations(&a, n, Side::Right).unwrap();
            let con = constants(&a, n, Side::Right).unwrap();
            for x in pre.elements().chain(con.elements()) {
                assert!(crate::braid::apply_operator(&a, &sn, x).unwrap().is_zero());
            }
            for br in &pre.blocks {
                let c = con.block(&br.multidegree).expect("constants block");
                assert!(c.subspace.contains_subspace(&br.subspace));
                let xop = if n == 2 { BraidOperator::identity(2) } else { make_operator(OperatorName::Xmn(n - 2), n).unwrap() };
                for wit in &br.witnesses {
                    assert!(!crate::braid::apply_operator(&a, &xop, wit).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn constants_are_common_kernels_of_derivations() {
    for a in all_test_matrices() {
        for n in 2..=4 {
            for (side, d) in [(Side::Right, d_r as fn(&BraidingMatrix, u8, &TensorElement) -> TensorElement), (Side::Left, d_l)] {
                let con = constants(&a, n, side).unwrap();
                for md in multidegrees_of_degree(a.n_letters(), n) {
                    let b = block(&md);
                    // stack the matrices of every ∂_i on the block
                    let mut rows: Vec<Vec<Scalar>> = Vec::new();
                    for i in 1..=a.n_letters() as u8 {
                        let Some(lmd) = md.minus_letter(i) else { continue };
                        let lb = block(&lmd);
                        let cols: Vec<Vec<Scalar>> = b
                            .basis()
                            .iter()
                            .map(|word| lb.coordinates(&d(&a, i, &TensorElement::from_word(word.clone()))).unwrap())
                            .collect();
                        for r in 0..lb.dim() {
                            rows.push(cols.iter().map(|c| c[r].clone()).collect());
                        }
                    }
                    let m = ScalarMatrix::from_rows(rows, b.dim()).unwrap();
                    let k = kernel(&m);
                    let zero = Subspace::zero(b.dim());
                    assert_eq!(&k, con.block(&md).map_or(&zero, |x| &x.subspace));
                }
            }
        }
    }
}

#[test]
fn derivatives_of_prerelations_stay_in_the_ideal() {
    for a in all_test_matrices() {
        let mut lower: Vec<TensorElement> = Vec::new();
        for m in 2..=5 {
            let pre = prerelations(&a, m, Side::Right).unwrap();
            for x in pre.elements() {
                for i in 1..=a.n_letters() as u8 {
                    let dx = d_r(&a, i, x);
                    if dx.is_zero() {
                        continue;
                    }
                    let md = multidegree(a.n_letters(), dx.terms().next().unwrap().0).unwrap();
                    let ideal = ideal_component(a.n_letters(), &lower, &md).unwrap();
                    assert!(ideal.contains(&block(&md).coordinates(&dx).unwrap()));
                }
            }
            lower.extend(pre.elements().cloned());
        }
    }
}

#[test]
fn span_is_stable_under_basis_permutation() {
    let a = example();
    let n = 4;
    let ops = PrerelationOps::new(n, Side::Right);
    for md in multidegrees_of_degree(3, n) {
        if !theta_scalar(&a, &md).is_one() {
            continue;
        }
        let b = block(&md);
        let d = b.dim();
        let mats = [&ops.prime, &ops.lower, &ops.dynkin].map(|o| operator_matrix(&a, o, &b).unwrap());
        let perm: Vec<usize> = (0..d).rev().collect();
        let permute = |m: &ScalarMatrix| {
            let mut p = ScalarMatrix::zeros(d, d);
            for i in 0..d {
                for j in 0..d {
                    p.set(i, j, m.get(perm[i], perm[j]).clone());
                }
            }
            p
        };
        let (rows, _) = extract(&mats[0], &mats[1], &mats[2]).unwrap();
        let (prow, _) = extract(&permute(&mats[0]), &permute(&mats[1]), &permute(&mats[2])).unwrap();
        let back: Vec<Vec<Scalar>> = prow
            .iter()
            .map(|r| {
                let mut v = vec![Scalar::zero(); d];
                for i in 0..d {
                    v[perm[i]] = r[i].clone();
                }
                v
            })
            .collect();
        assert_eq!(Subspace::span(d, rows).unwrap(), Subspace::span(d, back).unwrap());
    }
}

#[test]
fn redundancy_flags_ideal_members() {
    let a = a2();
    let pre3 = prerelations(&a, 3, Side::Right).unwrap();
    let lower: Vec<TensorElement> = pre3.elements().cloned().collect();
    let flags = redundancy(2, &[], &pre3).unwrap();
    assert!(flags.iter().all(|(_, f)| f.iter().all(|x| !x)));
    let flags = redundancy(2, &lower, &pre3).unwrap();
    assert!(flags.iter().all(|(_, f)| f.iter().all(|x| *x)));
}
