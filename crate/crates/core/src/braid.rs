//! The braid group algebra `K[B_n]` acting on `V^⊗n` through a diagonal braiding.
//!
//! A [`BraidWord`] `σ_{g1} σ_{g2} ⋯ σ_{gk}` acts right to left: `σ_{gk}` is applied first.
//! Generator `σ_i` acts on positions `i, i+1` (1-based) by
//! `v_a ⊗ v_b ↦ q_ab · v_b ⊗ v_a`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::braiding::BraidingMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{Multidegree, TensorElement, Word};

/// A word in `σ_i^{±1}`; the entry `+i` stands for `σ_i`, `-i` for `σ_i⁻¹`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BraidWord(Vec<i32>);

impl BraidWord {
    pub fn identity() -> Self {
        BraidWord(Vec::new())
    }

    /// Builds from signed generator indices; zero is rejected.
    pub fn new(gens: Vec<i32>) -> Result<Self> {
        if gens.contains(&0) {
            return Err(Error::BadParameters("generator index 0".into()));
        }
        Ok(BraidWord(gens))
    }

    /// Positive word `σ_{i1} ⋯ σ_{ik}`.
    pub fn positive(indices: &[usize]) -> Self {
        BraidWord(indices.iter().map(|&i| i as i32).collect())
    }

    pub fn generators(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.0.iter().map(|&g| (g.unsigned_abs() as usize, g > 0))
    }

    pub fn raw(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index used (0 for the identity).
    pub fn max_index(&self) -> usize {
        self.0.iter().map(|g| g.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn then(&self, other: &BraidWord) -> BraidWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BraidWord(v)
    }

    /// Shifts every index by `offset` (the strand embedding `σ_i ↦ σ_{i+offset}`).
    pub fn shifted(&self, offset: usize) -> BraidWord {
        BraidWord(self.0.iter().map(|&g| g.signum() * (g.abs() + offset as i32)).collect())
    }

    /// Image `(factor, word)` of a monomial, with the scalar factor built from `counts`.
    pub fn act_on_word(&self, a: &BraidingMatrix, w: &Word) -> Result<(Scalar, Word)> {
        let n = a.n_letters();
        let mut counts = vec![0i32; n * n];
        let img = self.act_counting(n, w, &mut counts)?;
        Ok((a.factor(&counts), img))
    }

    /// Permutes `w` and records the braiding exponents used into `counts` (`N×N`, row-major).
    pub fn act_counting(&self, n_letters: usize, w: &Word, counts: &mut [i32]) -> Result<Word> {
        let mut letters = w.0.clone();
        for &g in self.0.iter().rev() {
            let i = g.unsigned_abs() as usize;
            if i + 1 > letters.len() {
                return Err(Error::DegreeTooSmall { index: i, needed: i + 1, degree: letters.len() });
            }
            let (x, y) = (letters[i - 1] as usize - 1, letters[i] as usize - 1);
            if g > 0 {
                counts[x * n_letters + y] += 1;
            } else {
                // σ⁻¹(v_x ⊗ v_y) = q_yx⁻¹ v_y ⊗ v_x
                counts[y * n_letters + x] -= 1;
            }
            letters.swap(i - 1, i);
        }
        Ok(Word(letters))
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for g in &self.0 {
            if *g > 0 {
                write!(f, "s{g}")?;
            } else {
                write!(f, "s{}'", -g)?;
            }
        }
        Ok(())
    }
}

/// A formal combination of braid words on a fixed number of strands.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidOperator {
    strands: usize,
    terms: BTreeMap<BraidWord, Scalar>,
}

impl BraidOperator {
    pub fn zero(strands: usize) -> Self {
        BraidOperator { strands, terms: BTreeMap::new() }
    }

    pub fn identity(strands: usize) -> Self {
        BraidOperator::from_word(strands, BraidWord::identity()).unwrap()
    }

    pub fn from_word(strands: usize, word: BraidWord) -> Result<Self> {
        if word.max_index() >= strands.max(1) && !word.is_empty() {
            return Err(Error::BadParameters(format!(
                "{word:?} does not fit on {strands} strands"
            )));
        }
        let mut op = BraidOperator::zero(strands);
        op.add_term(word, Scalar::one());
        Ok(op)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BraidWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: BraidWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_insert_with(Scalar::zero);
        *e = e.add_ref(&c);
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &BraidOperator) -> BraidOperator {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut r = self.clone();
        for (w, c) in other.terms() {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &BraidOperator) -> BraidOperator {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> BraidOperator {
        let mut r = BraidOperator::zero(self.strands);
        for (w, x) in self.terms() {
            r.add_term(w.clone(), x * c);
        }
        r
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &BraidOperator) -> BraidOperator {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut r = BraidOperator::zero(self.strands);
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                r.add_term(u.then(v), a * b);
            }
        }
        r
    }

    pub fn pow(&self, k: usize) -> BraidOperator {
        (0..k).fold(BraidOperator::identity(self.strands), |acc, _| acc.compose(self))
    }

    /// The embedding `σ_i ↦ σ_{i+offset}` into `strands` strands.
    pub fn embed(&self, strands: usize, offset: usize) -> Result<BraidOperator> {
        if self.strands + offset > strands {
            return Err(Error::BadParameters(format!(
                "cannot place {} strands at offset {offset} inside {strands}",
                self.strands
            )));
        }
        let mut r = BraidOperator::zero(strands);
        for (w, c) in self.terms() {
            r.add_term(w.shifted(offset), c.clone());
        }
        Ok(r)
    }

    /// Image of one monomial as a tensor element.
    pub fn apply_to_word(&self, a: &BraidingMatrix, w: &Word) -> Result<TensorElement> {
        let n = a.n_letters();
        let mut out = TensorElement::zero();
        let mut counts = vec![0i32; n * n];
        for (bw, c) in self.terms() {
            counts.iter_mut().for_each(|x| *x = 0);
            let img = bw.act_counting(n, w, &mut counts)?;
            out.add_term(img, c * &a.factor(&counts));
        }
        Ok(out)
    }
}

/// `σ_i^{±1}` applied to every word of `x` (1-based `i`).
pub fn apply_generator(a: &BraidingMatrix, i: usize, inverse: bool, x: &TensorElement) -> Result<TensorElement> {
    if i == 0 {
        return Err(Error::BadParameters("generator index 0".into()));
    }
    let g = if inverse { -(i as i32) } else { i as i32 };
    let word = BraidWord(vec![g]);
    let mut out = TensorElement::zero();
    for (w, c) in x.terms() {
        let (f, img) = word.act_on_word(a, w)?;
        out.add_term(img, c * &f);
    }
    Ok(out)
}

/// Linear action of an operator on an element homogeneous of degree `op.strands()`.
pub fn apply_operator(a: &BraidingMatrix, op: &BraidOperator, x: &TensorElement) -> Result<TensorElement> {
    x.check_letters(a.n_letters())?;
    let mut out = TensorElement::zero();
    for (w, c) in x.terms() {
        if w.len() != op.strands() {
            return Err(Error::DegreeMismatch { expected: op.strands(), found: w.len() });
        }
        for (img, f) in op.apply_to_word(a, w)?.into_terms() {
            out.add_term(img, c * &f);
        }
    }
    Ok(out)
}

/// A reduced positive word for the permutation `p` of `0..n` (one-line notation), so that
/// `p = s_{i1} ∘ ⋯ ∘ s_{ir}` where `s_i` swaps entries `i, i+1` when composed on the right.
pub fn matsumoto_lift(p: &[usize]) -> BraidWord {
    let mut p = p.to_vec();
    let mut rev = Vec::new();
    while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
        p.swap(i, i + 1);
        rev.push(i as i32 + 1);
    }
    rev.reverse();
    BraidWord(rev)
}

/// Number of inversions of a permutation.
pub fn inversions(p: &[usize]) -> usize {
    (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
}

/// The named operators of the braid-identity toolkit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorName {
    /// Right differential element `1 + σ_{n-1} + σ_{n-1}σ_{n-2} + ⋯`.
    Tn,
    /// Left differential element `1 + σ_1 + σ_1σ_2 + ⋯`.
    Un,
    /// Right Dynkin element.
    Pn,
    /// Left Dynkin element.
    Qn,
    TnPrime,
    UnPrime,
    /// Positive half twist.
    Garside,
    /// Full twist, the square of the Garside element.
    Theta,
    /// `T'_{m+1}` placed on the last `m+1` strands.
    Xmn(usize),
    /// `U'_{m+1}` placed on the first `m+1` strands (left mirror of `Xmn`).
    Ymn(usize),
    /// Sum of the lifts of all permutations.
    SnDirect,
    /// `T_2 T_3 ⋯ T_n`, each `T_k` on the first `k` strands.
    SnFactoredT,
    /// `U_2 U_3 ⋯ U_n`, each `U_k` on the last `k` strands.
    SnFactoredU,
}

impl FromStr for OperatorName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parametric = |prefix: &str| -> Option<Result<usize>> {
            let rest = s.strip_prefix(prefix)?;
            let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
            Some(inner.trim().parse().map_err(|_| Error::BadParameters(s.to_string())))
        };
        Ok(match s {
            "Tn" => OperatorName::Tn,
            "Un" => OperatorName::Un,
            "Pn" => OperatorName::Pn,
            "Qn" => OperatorName::Qn,
            "TnPrime" => OperatorName::TnPrime,
            "UnPrime" => OperatorName::UnPrime,
            "Garside" => OperatorName::Garside,
            "Theta" => OperatorName::Theta,
            "SnDirect" => OperatorName::SnDirect,
            "SnFactoredT" => OperatorName::SnFactoredT,
            "SnFactoredU" => OperatorName::SnFactoredU,
            _ => {
                if let Some(m) = parametric("Xmn") {
                    OperatorName::Xmn(m?)
                } else if let Some(m) = parametric("Ymn") {
                    OperatorName::Ymn(m?)
                } else {
                    return Err(Error::UnknownName(s.to_string()));
                }
            }
        })
    }
}

impl fmt::Display for OperatorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorName::Xmn(m) => write!(f, "Xmn({m})"),
            OperatorName::Ymn(m) => write!(f, "Ymn({m})"),
            other => write!(f, "{other:?}"),
        }
    }
}

fn one_minus(n: usize, w: BraidWord) -> BraidOperator {
    let id = BraidOperator::identity(n);
    id.sub(&BraidOperator::from_word(n, w).expect("word fits"))
}

fn descending(from: usize, to: usize) -> Vec<usize> {
    (to..=from).rev().collect()
}

fn product(n: usize, factors: impl Iterator<Item = BraidOperator>) -> BraidOperator {
    factors.fold(BraidOperator::identity(n), |acc, f| acc.compose(&f))
}

fn right_differential(k: usize, n: usize) -> BraidOperator {
    let mut op = BraidOperator::zero(n);
    for len in 0..k {
        // σ_{k-1} σ_{k-2} ⋯ σ_{k-len}
        op.add_term(BraidWord::positive(&descending(k - 1, k - len)), Scalar::one());
    }
    op
}

fn left_differential(k: usize, n: usize) -> BraidOperator {
    let mut op = BraidOperator::zero(n);
    for len in 0..k {
        op.add_term(BraidWord::positive(&(1..=len).collect::<Vec<_>>()), Scalar::one());
    }
    op
}

fn t_prime(k: usize, n: usize) -> BraidOperator {
    // (1 - σ_{k-1}² σ_{k-2} ⋯ σ_1)(1 - σ_{k-1}² ⋯ σ_2) ⋯ (1 - σ_{k-1}²)
    product(
        n,
        (1..k).map(|j| {
            let mut idx = vec![k - 1];
            idx.extend(descending(k - 1, j));
            one_minus(n, BraidWord::positive(&idx))
        }),
    )
}

fn u_prime(k: usize, n: usize) -> BraidOperator {
    // (1 - σ_1² σ_2 ⋯ σ_{k-1})(1 - σ_1² ⋯ σ_{k-2}) ⋯ (1 - σ_1²)
    product(
        n,
        (1..k).rev().map(|j| {
            let mut idx = vec![1];
            idx.extend(1..=j);
            one_minus(n, BraidWord::positive(&idx))
        }),
    )
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Expanded term list of a named operator on `n` strands.
pub fn make_operator(name: OperatorName, n: usize) -> Result<BraidOperator> {
    if n < 2 {
        return Err(Error::BadParameters(format!("{name} needs at least 2 strands, got {n}")));
    }
    Ok(match name {
        OperatorName::Tn => right_differential(n, n),
        OperatorName::Un => left_differential(n, n),
        OperatorName::Pn => product(n, (1..n).map(|k| one_minus(n, BraidWord::positive(&descending(n - 1, k))))),
        OperatorName::Qn => product(
            n,
            (1..n).rev().map(|k| one_minus(n, BraidWord::positive(&(1..=k).collect::<Vec<_>>()))),
        ),
        OperatorName::TnPrime => t_prime(n, n),
        OperatorName::UnPrime => u_prime(n, n),
        OperatorName::Garside => {
            let idx: Vec<usize> = (1..n).rev().flat_map(|k| 1..=k).collect();
            BraidOperator::from_word(n, BraidWord::positive(&idx))?
        }
        OperatorName::Theta => {
            let d = make_operator(OperatorName::Garside, n)?;
            d.compose(&d)
        }
        OperatorName::Xmn(m) | OperatorName::Ymn(m) => {
            if m == 0 || m >= n {
                return Err(Error::BadParameters(format!("{name} needs 1 <= m <= n-1 = {}", n - 1)));
            }
            match name {
                OperatorName::Xmn(_) => t_prime(m + 1, m + 1).embed(n, n - m - 1)?,
                _ => u_prime(m + 1, m + 1).embed(n, 0)?,
            }
        }
        OperatorName::SnDirect => {
            let mut op = BraidOperator::zero(n);
            for p in all_permutations(n) {
                op.add_term(matsumoto_lift(&p), Scalar::one());
            }
            op
        }
        OperatorName::SnFactoredT => product(n, (2..=n).map(|k| right_differential(k, n))),
        OperatorName::SnFactoredU => product(
            n,
            (2..=n).map(|k| left_differential(k, k).embed(n, n - k).expect("fits")),
        ),
    })
}

/// The scalar by which the full twist acts on the block of multidegree `md`:
/// `∏_k q_kk^{m_k(m_k-1)} · ∏_{p<q} (q_pq q_qp)^{m_p m_q}`.
pub fn theta_scalar(a: &BraidingMatrix, md: &Multidegree) -> Scalar {
    let n = a.n_letters();
    let m = md.counts();
    let mut counts = vec![0i32; n * n];
    for p in 0..n {
        counts[p * n + p] += (m[p] * m[p].saturating_sub(1)) as i32;
        for q in p + 1..n {
            let e = (m[p] * m[q]) as i32;
            counts[p * n + q] += e;
            counts[q * n + p] += e;
        }
    }
    a.factor(&counts)
}
