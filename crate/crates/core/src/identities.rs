//! Named identity suites, checked block by block as exact operator equalities.

use rayon::prelude::*;

use crate::braid::{make_operator, matsumoto_lift, theta_scalar, BraidOperator, BraidWord, OperatorName};
use crate::braiding::BraidingMatrix;
use crate::calculus::{d_l, d_r};
use crate::error::Result;
use crate::linalg::{kernel, operator_matrix, ScalarMatrix, Subspace};
use crate::relations::symmetrizer_kernel;
use crate::tensor::{block, multidegree, multidegrees_of_degree, Letter, Multidegree, TensorElement, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityResult {
    pub name: &'static str,
    pub degree: usize,
    /// First block where the two sides differ.
    pub failure: Option<String>,
}

impl IdentityResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn op(name: OperatorName, n: usize) -> Result<BraidOperator> {
    make_operator(name, n)
}

fn word_op(n: usize, gens: &[i32]) -> Result<BraidOperator> {
    BraidOperator::from_word(n, BraidWord::new(gens.to_vec())?)
}

/// Compares `f(w)` and `g(w)` on every basis word of degree `n`.
fn compare<F, G>(a: &BraidingMatrix, n: usize, f: F, g: G) -> Result<Option<String>>
where
    F: Fn(&Word) -> Result<TensorElement> + Sync,
    G: Fn(&Word) -> Result<TensorElement> + Sync,
{
    let mds = multidegrees_of_degree(a.n_letters(), n);
    let bad: Vec<Option<String>> = mds
        .par_iter()
        .map(|md| -> Result<Option<String>> {
            for w in block(md).basis() {
                if f(w)? != g(w)? {
                    return Ok(Some(format!("block {:?}, word {:?}", md.counts(), w)));
                }
            }
            Ok(None)
        })
        .collect::<Result<_>>()?;
    Ok(bad.into_iter().flatten().next())
}

fn compare_ops(a: &BraidingMatrix, x: &BraidOperator, y: &BraidOperator) -> Result<Option<String>> {
    compare(a, x.strands(), |w| x.apply_to_word(a, w), |w| y.apply_to_word(a, w))
}

/// Matrix of `∂_i^R` from block `md` to the block with one fewer `i`, if that block exists.
fn derivation_matrix(a: &BraidingMatrix, i: Letter, md: &Multidegree) -> Result<Option<ScalarMatrix>> {
    let Some(lower) = md.minus_letter(i) else { return Ok(None) };
    let lb = block(&lower);
    let images: Vec<Vec<_>> = block(md)
        .basis()
        .iter()
        .map(|w| lb.coordinates(&d_r(a, i, &TensorElement::from_word(w.clone()))))
        .collect::<Result<_>>()?;
    Ok(Some(ScalarMatrix::from_rows(images, lb.dim())?.transpose()))
}

/// The braid-operator identities on `n` strands.
pub fn braid_suite(a: &BraidingMatrix, n: usize) -> Result<Vec<IdentityResult>> {
    let mut out = Vec::new();
    let mut push = |name, failure| out.push(IdentityResult { name, degree: n, failure });
    let ni = n as i32;
    let id = BraidOperator::identity(n);

    let mut failure = None;
    for i in 1..ni {
        failure = failure.or(compare_ops(a, &word_op(n, &[i, -i])?, &id)?);
        for j in i + 1..ni {
            let (l, r) = if j == i + 1 { (vec![i, j, i], vec![j, i, j]) } else { (vec![i, j], vec![j, i]) };
            failure = failure.or(compare_ops(a, &word_op(n, &l)?, &word_op(n, &r)?)?);
        }
    }
    push("braid_relations", failure);

    // two reduced words of the longest permutation, against its Matsumoto lift
    let w0: Vec<usize> = (0..n).rev().collect();
    let lift = BraidOperator::from_word(n, matsumoto_lift(&w0))?;
    let alt: Vec<usize> = (1..n).flat_map(|k| (1..=k).rev()).collect();
    let garside = op(OperatorName::Garside, n)?;
    let failure = compare_ops(a, &lift, &BraidOperator::from_word(n, BraidWord::positive(&alt))?)?
        .or(compare_ops(a, &lift, &garside)?);
    push("matsumoto_reduced_words", failure);

    let sn = op(OperatorName::SnDirect, n)?;
    push("symmetrizer_factored_t", compare_ops(a, &sn, &op(OperatorName::SnFactoredT, n)?)?);
    push("symmetrizer_factored_u", compare_ops(a, &sn, &op(OperatorName::SnFactoredU, n)?)?);

    let tn = op(OperatorName::Tn, n)?;
    let un = op(OperatorName::Un, n)?;
    let pn = op(OperatorName::Pn, n)?;
    let qn = op(OperatorName::Qn, n)?;
    push("tn_pn_is_tn_prime", compare_ops(a, &tn.compose(&pn), &op(OperatorName::TnPrime, n)?)?);
    push("un_qn_is_un_prime", compare_ops(a, &un.compose(&qn), &op(OperatorName::UnPrime, n)?)?);

    let mut failure = None;
    for i in 1..ni {
        let s = word_op(n, &[i])?;
        let t = word_op(n, &[ni - i])?;
        failure = failure.or(compare_ops(a, &s.compose(&garside), &garside.compose(&t))?);
    }
    push("garside_conjugation", failure);

    let theta = op(OperatorName::Theta, n)?;
    let down: Vec<i32> = (1..ni).rev().collect();
    push("theta_cycle_power", compare_ops(a, &theta, &word_op(n, &down)?.pow(n))?);
    let mut sq = vec![ni - 1];
    sq.extend(&down);
    let c = word_op(n, &sq)?;
    push("theta_squared_cycle_power", compare_ops(a, &theta, &c.pow(n - 1))?);

    let mut geom = BraidOperator::zero(n);
    for k in 0..n - 1 {
        geom = geom.add(&c.pow(k));
    }
    push("telescoping", compare_ops(a, &geom.compose(&id.sub(&c)), &id.sub(&theta))?);

    push("garside_tn_un", compare_ops(a, &garside.compose(&tn), &un.compose(&garside))?);
    push("garside_pn_qn", compare_ops(a, &garside.compose(&pn), &qn.compose(&garside))?);

    let failure = compare(
        a,
        n,
        |w| theta.apply_to_word(a, w),
        |w| {
            let md = multidegree(a.n_letters(), w)?;
            Ok(TensorElement::monomial(theta_scalar(a, &md), w.clone()))
        },
    )?;
    push("theta_block_scalar", failure);
    Ok(out)
}

/// Identities linking the differential elements with the skew-derivations.
pub fn calculus_suite(a: &BraidingMatrix, n: usize) -> Result<Vec<IdentityResult>> {
    let letters: Vec<Letter> = (1..=a.n_letters() as Letter).collect();
    let tn = op(OperatorName::Tn, n)?;
    let un = op(OperatorName::Un, n)?;
    let mut out = Vec::new();

    let failure = compare(
        a,
        n,
        |w| tn.apply_to_word(a, w),
        |w| {
            let x = TensorElement::from_word(w.clone());
            Ok(letters.iter().fold(TensorElement::zero(), |acc, &i| {
                acc.add(&d_r(a, i, &x).concat_mul(&TensorElement::generator(i)))
            }))
        },
    )?;
    out.push(IdentityResult { name: "tn_via_right_derivations", degree: n, failure });

    let failure = compare(
        a,
        n,
        |w| un.apply_to_word(a, w),
        |w| {
            let x = TensorElement::from_word(w.clone());
            Ok(letters.iter().fold(TensorElement::zero(), |acc, &i| {
                acc.add(&TensorElement::generator(i).concat_mul(&d_l(a, i, &x)))
            }))
        },
    )?;
    out.push(IdentityResult { name: "un_via_left_derivations", degree: n, failure });

    let mut failure = None;
    for &i in &letters {
        for &j in &letters {
            let f = compare(
                a,
                n,
                |w| Ok(d_l(a, i, &d_r(a, j, &TensorElement::from_word(w.clone())))),
                |w| Ok(d_r(a, j, &d_l(a, i, &TensorElement::from_word(w.clone())))),
            )?;
            failure = failure.or(f);
        }
    }
    out.push(IdentityResult { name: "left_right_derivations_commute", degree: n, failure });

    let mut failure = None;
    for md in multidegrees_of_degree(a.n_letters(), n) {
        let b = block(&md);
        let mut common = Subspace::full(b.dim());
        for &i in &letters {
            if let Some(d) = derivation_matrix(a, i, &md)? {
                common = common.intersect(&kernel(&d))?;
            }
        }
        if common != kernel(&operator_matrix(a, &tn, &b)?) {
            failure = Some(format!("block {:?}", md.counts()));
            break;
        }
    }
    out.push(IdentityResult { name: "tn_kernel_is_derivation_kernel", degree: n, failure });

    Ok(out)
}

/// `x ∈ ker S_n` exactly when every `∂_i^R x` lies in `ker S_{n-1}`.
pub fn symmetrizer_suite(a: &BraidingMatrix, n: usize) -> Result<Vec<IdentityResult>> {
    let letters: Vec<Letter> = (1..=a.n_letters() as Letter).collect();
    let mut failure = None;
    for md in multidegrees_of_degree(a.n_letters(), n) {
        let b = block(&md);
        let mut preimage = Subspace::full(b.dim());
        for &i in &letters {
            let Some(d) = derivation_matrix(a, i, &md)? else { continue };
            let lb = block(&md.minus_letter(i).expect("letter present"));
            let lower_kernel = if n == 2 { Subspace::zero(lb.dim()) } else { symmetrizer_kernel(a, &lb)? };
            let ann = lower_kernel.annihilator();
            if ann.dim() == 0 {
                continue;
            }
            let test = ScalarMatrix::from_rows(ann.basis().to_vec(), lb.dim())?.mul(&d)?;
            preimage = preimage.intersect(&kernel(&test))?;
        }
        if preimage != symmetrizer_kernel(a, &b)? {
            failure = Some(format!("block {:?}", md.counts()));
            break;
        }
    }
    Ok(vec![IdentityResult { name: "symmetrizer_kernel_recursion", degree: n, failure }])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn suites_pass_on_random_braidings() {
        for seed in 0..3 {
            let a = BraidingMatrix::random_monomial(2, seed, 4).unwrap();
            for n in 2..=4 {
                for r in braid_suite(&a, n).unwrap().into_iter().chain(calculus_suite(&a, n).unwrap()).chain(symmetrizer_suite(&a, n).unwrap()) {
                    assert!(r.passed(), "{} n={n}: {:?}", r.name, r.failure);
                }
            }
        }
    }

    #[test]
    fn a_broken_identity_is_reported() {
        let a = BraidingMatrix::random_monomial(2, 7, 4).unwrap();
        let tn = op(OperatorName::Tn, 3).unwrap();
        let wrong = tn.scale(&Scalar::from_int(2));
        assert!(compare_ops(&a, &tn, &wrong).unwrap().is_some());
    }
}
