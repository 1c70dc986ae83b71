//! Cartan data, `q → 1` specialization and the classical witness computations.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::braiding::{BraidingMatrix, Origin};
use crate::calculus::{d_l, d_r, dbar_r};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::scalar::{q_minus_q_inv, Scalar};
use crate::tensor::{Letter, TensorElement, MAX_LETTERS};

/// A generalized Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    c: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(c: Vec<Vec<i64>>) -> Result<Self> {
        let n = c.len();
        if n == 0 || n > MAX_LETTERS {
            return Err(Error::InvalidCartan(format!("size {n} outside 1..={MAX_LETTERS}")));
        }
        if c.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        for i in 0..n {
            if c[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry ({i},{i}) is {}", c[i][i])));
            }
            for j in 0..n {
                if i != j && c[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!("entry ({i},{j}) is positive")));
                }
                if (c[i][j] == 0) != (c[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!("entries ({i},{j}) and ({j},{i}) violate zero symmetry")));
                }
            }
        }
        Ok(CartanMatrix { c })
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    /// Entry for 1-based letters.
    pub fn get(&self, i: Letter, j: Letter) -> i64 {
        self.c[i as usize - 1][j as usize - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.c
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n()).all(|i| (0..self.n()).all(|j| self.c[i][j] == self.c[j][i]))
    }

    fn rational(&self) -> Vec<Vec<BigRational>> {
        self.c.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect()
    }

    pub fn braiding(&self, side: BraidingSide) -> BraidingMatrix {
        braiding_from_matrix(&self.rational(), side, Origin::Cartan).expect("integral Cartan entries")
    }
}

/// `c̄_ij = (c_ij + c_ji) / 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AveragedMatrix {
    c: Vec<Vec<BigRational>>,
}

impl AveragedMatrix {
    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.c
    }

    pub fn braiding(&self, side: BraidingSide) -> BraidingMatrix {
        braiding_from_matrix(&self.c, side, Origin::Averaged).expect("half-integral entries")
    }
}

pub fn average(c: &CartanMatrix) -> AveragedMatrix {
    let n = c.n();
    let two = BigInt::from(2);
    AveragedMatrix {
        c: (0..n)
            .map(|i| (0..n).map(|j| BigRational::new(BigInt::from(c.c[i][j] + c.c[j][i]), two.clone())).collect())
            .collect(),
    }
}

/// Which half of the quantum group the braiding is read from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidingSide {
    /// The `F` generators, `q_ij = q^{c_ij}`.
    Negative,
    /// The `E` generators, `q_ij = q^{-c_ij}`.
    Positive,
}

/// `q_ij = q^{±c_ij}` for a matrix with half-integral entries.
pub fn braiding_from_matrix(c: &[Vec<BigRational>], side: BraidingSide, origin: Origin) -> Result<BraidingMatrix> {
    let sign = if side == BraidingSide::Negative { 1 } else { -1 };
    let two = BigRational::from_integer(2.into());
    let exps: Result<Vec<Vec<i64>>> = c
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let d = x * &two;
                    if !d.is_integer() {
                        return Err(Error::InvalidCartan(format!("entry {x} is not a half-integer")));
                    }
                    let e: i64 = d.to_integer().try_into().map_err(|_| Error::InvalidCartan("entry too large".into()))?;
                    Ok(sign * e)
                })
                .collect()
        })
        .collect();
    BraidingMatrix::from_t_exponents(&exps?, origin)
}

/// A normal-form word: `f`-letters followed by ascending `h`-letters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassicalWord {
    pub f: Vec<Letter>,
    pub h: Vec<Letter>,
}

impl ClassicalWord {
    pub fn f_word(f: Vec<Letter>) -> Self {
        ClassicalWord { f, h: Vec::new() }
    }

    pub fn new(f: Vec<Letter>, mut h: Vec<Letter>) -> Self {
        h.sort_unstable();
        ClassicalWord { f, h }
    }

    pub fn is_pure(&self) -> bool {
        self.h.is_empty()
    }
}

/// An element of `U(ñ₋)` extended by the Cartan letters `h_i`, with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ClassicalElement {
    terms: BTreeMap<ClassicalWord, BigRational>,
}

impl ClassicalElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        ClassicalElement::f_monomial(BigRational::one(), Vec::new())
    }

    pub fn f_monomial(c: BigRational, f: Vec<Letter>) -> Self {
        let mut x = ClassicalElement::zero();
        x.add_term(ClassicalWord::f_word(f), c);
        x
    }

    pub fn generator(i: Letter) -> Self {
        ClassicalElement::f_monomial(BigRational::one(), vec![i])
    }

    pub fn from_terms<I: IntoIterator<Item = (ClassicalWord, BigRational)>>(terms: I) -> Self {
        let mut x = ClassicalElement::zero();
        for (w, c) in terms {
            x.add_term(w, c);
        }
        x
    }

    pub fn add_term(&mut self, w: ClassicalWord, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ClassicalWord, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &ClassicalWord) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &ClassicalElement) -> ClassicalElement {
        let mut r = self.clone();
        for (w, c) in other.terms() {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &ClassicalElement) -> ClassicalElement {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> ClassicalElement {
        ClassicalElement::from_terms(self.terms().map(|(w, x)| (w.clone(), x * c)))
    }

    /// The terms without `h`-letters.
    pub fn pure_part(&self) -> ClassicalElement {
        ClassicalElement::from_terms(self.terms().filter(|(w, _)| w.is_pure()).map(|(w, c)| (w.clone(), c.clone())))
    }

    /// The terms carrying at least one `h`-letter.
    pub fn h_part(&self) -> ClassicalElement {
        ClassicalElement::from_terms(self.terms().filter(|(w, _)| !w.is_pure()).map(|(w, c)| (w.clone(), c.clone())))
    }

    pub fn is_pure(&self) -> bool {
        self.terms.keys().all(ClassicalWord::is_pure)
    }

    /// Lengths of the `f`-parts present.
    pub fn heights(&self) -> Vec<usize> {
        let mut h: Vec<usize> = self.terms.keys().map(|w| w.f.len()).collect();
        h.sort_unstable();
        h.dedup();
        h
    }

    /// Product in `U(g̃)`, normal-ordering with `h_i f_j = f_j h_i − c_ij f_j`.
    pub fn mul(&self, c: &CartanMatrix, other: &ClassicalElement) -> ClassicalElement {
        let mut out = ClassicalElement::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                // h_k v.f = v.f (h_k − α_k) with α_k = Σ_l c_{k, v.f_l}
                let shifts: Vec<i64> = u.h.iter().map(|&k| v.f.iter().map(|&l| c.get(k, l)).sum()).collect();
                let mut f = u.f.clone();
                f.extend_from_slice(&v.f);
                let coeff = a * b;
                for mask in 0..1usize << u.h.len() {
                    let mut h = v.h.clone();
                    let mut factor = BigRational::one();
                    for (bit, (&k, &alpha)) in u.h.iter().zip(&shifts).enumerate() {
                        if mask >> bit & 1 == 1 {
                            h.push(k);
                        } else {
                            factor *= BigRational::from_integer(BigInt::from(-alpha));
                        }
                    }
                    out.add_term(ClassicalWord::new(f.clone(), h), &coeff * factor);
                }
            }
        }
        out
    }
}

impl fmt::Display for ClassicalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            let mut idx = 0;
            while idx < w.f.len() {
                let l = w.f[idx];
                let run = w.f[idx..].iter().take_while(|&&x| x == l).count();
                factors.push(if run == 1 { format!("f{l}") } else { format!("f{l}^{run}") });
                idx += run;
            }
            factors.extend(w.h.iter().map(|l| format!("h{l}")));
            let body = factors.join("*");
            if body.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&body)?;
            } else {
                write!(f, "{mag}*{body}")?;
            }
        }
        Ok(())
    }
}

/// Reads words as `f`-words and evaluates coefficients at `q^(1/2) = 1`.
pub fn specialize_element(x: &TensorElement) -> Result<ClassicalElement> {
    let mut out = ClassicalElement::zero();
    for (w, c) in x.terms() {
        let v = c.eval_at_one().map_err(|_| Error::NotInA1(c.to_string()))?;
        out.add_term(ClassicalWord::f_word(w.0.clone()), v);
    }
    Ok(out)
}

/// `[e_i, u]` for a pure-`f` element; each `f_i` becomes `h_i`, moved to the right.
pub fn ad_e(c: &CartanMatrix, i: Letter, u: &ClassicalElement) -> Result<ClassicalElement> {
    if i == 0 || i as usize > c.n() {
        return Err(Error::LetterOutOfRange { letter: i as usize, n: c.n() });
    }
    let mut out = ClassicalElement::zero();
    for (w, coeff) in u.terms() {
        if !w.is_pure() {
            return Err(Error::BadParameters("ad e_i is applied to f-words only".into()));
        }
        for k in 0..w.f.len() {
            if w.f[k] != i {
                continue;
            }
            let mut rest = w.f.clone();
            rest.remove(k);
            let shift: i64 = w.f[k + 1..].iter().map(|&l| c.get(i, l)).sum();
            out.add_term(ClassicalWord::new(rest.clone(), vec![i]), coeff.clone());
            out.add_term(ClassicalWord::f_word(rest), coeff * BigRational::from_integer(BigInt::from(-shift)));
        }
    }
    Ok(out)
}

/// `(ad f_i)(u) = f_i u − u f_i` on pure-`f` elements.
pub fn ad_f(i: Letter, u: &ClassicalElement) -> ClassicalElement {
    let mut out = ClassicalElement::zero();
    for (w, coeff) in u.terms() {
        let mut left = vec![i];
        left.extend_from_slice(&w.f);
        let mut right = w.f.clone();
        right.push(i);
        out.add_term(ClassicalWord::new(left, w.h.clone()), coeff.clone());
        out.add_term(ClassicalWord::new(right, w.h.clone()), -coeff.clone());
    }
    out
}

/// One step of a witness chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub letter: Letter,
    /// Pure-`f` part of `[e_i, previous]`.
    pub value: ClassicalElement,
    /// Terms with `h`-letters, dropped before the next step.
    pub h_residue: ClassicalElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Reached a nonzero combination of single generators; the input is not in `U(r₋)`.
    NotInRadical { chain: Vec<Letter>, steps: Vec<ChainStep> },
    Inconclusive,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::NotInRadical { .. } => "NotInRadical",
            Verdict::Inconclusive => "Inconclusive",
        }
    }
}

fn run_chain(c: &CartanMatrix, u: &ClassicalElement, chain: &[Letter]) -> Result<Option<Vec<ChainStep>>> {
    let mut cur = u.clone();
    let mut steps = Vec::new();
    for &i in chain {
        let full = ad_e(c, i, &cur)?;
        cur = full.pure_part();
        steps.push(ChainStep { letter: i, value: cur.clone(), h_residue: full.h_part() });
        if cur.is_zero() {
            return Ok(None);
        }
    }
    Ok((!cur.is_zero() && cur.heights() == [1]).then_some(steps))
}

/// Searches chains `(i_1, …, i_k)`, `k ≤ depth_max`, with `[e_{i_k}, …[e_{i_1}, u]]` a nonzero
/// multiple of single generators. Constant chains `(i, …, i)` are tried first, then all chains
/// by length and lexicographic order.
pub fn r_minus_witness(c: &CartanMatrix, u: &ClassicalElement, depth_max: usize) -> Result<Verdict> {
    if !u.is_pure() {
        return Err(Error::BadParameters("witness search needs a pure f-element".into()));
    }
    if u.is_zero() {
        return Ok(Verdict::Inconclusive);
    }
    let n = c.n() as Letter;
    for k in 1..=depth_max {
        for i in 1..=n {
            let chain = vec![i; k];
            if let Some(steps) = run_chain(c, u, &chain)? {
                return Ok(Verdict::NotInRadical { chain, steps });
            }
        }
    }
    for k in 1..=depth_max {
        let mut chain = vec![1 as Letter; k];
        loop {
            if let Some(steps) = run_chain(c, u, &chain)? {
                return Ok(Verdict::NotInRadical { chain, steps });
            }
            let Some(pos) = chain.iter().rposition(|&x| x < n) else { break };
            chain[pos] += 1;
            for x in chain[pos + 1..].iter_mut() {
                *x = 1;
            }
        }
    }
    Ok(Verdict::Inconclusive)
}

/// `(ad f_i)^{1−c_ij}(f_j)` for every `i ≠ j`.
pub fn serre_elements(c: &CartanMatrix) -> Vec<ClassicalElement> {
    let n = c.n() as Letter;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let mut x = ClassicalElement::generator(j);
            for _ in 0..(1 - c.get(i, j)) {
                x = ad_f(i, &x);
            }
            out.push(x);
        }
    }
    out
}

fn f_words(n: Letter, len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| (1..=n).map(move |l| {
                let mut v = w.clone();
                v.push(l);
                v
            }))
            .collect();
    }
    out
}

/// Whether the pure-`f` element `u` of the given degree lies in the two-sided ideal of
/// `U(ñ₋)` generated by the Serre elements.
pub fn serre_ideal_member(c: &CartanMatrix, u: &ClassicalElement, degree: usize) -> Result<bool> {
    if !u.is_pure() {
        return Err(Error::BadParameters("Serre membership needs a pure f-element".into()));
    }
    if let Some(w) = u.terms().map(|(w, _)| w).find(|w| w.f.len() != degree) {
        return Err(Error::DegreeMismatch { expected: degree, found: w.f.len() });
    }
    if u.is_zero() {
        return Ok(true);
    }
    let n = c.n() as Letter;
    let basis = f_words(n, degree);
    let index: BTreeMap<&Vec<Letter>, usize> = basis.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let coords = |x: &ClassicalElement| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); basis.len()];
        for (w, c) in x.terms() {
            v[index[&w.f]] = Scalar::from_rational(c.clone());
        }
        v
    };
    let mut gens = Vec::new();
    for s in serre_elements(c) {
        let Some(sd) = s.terms().next().map(|(w, _)| w.f.len()) else { continue };
        if sd > degree {
            continue;
        }
        for a_len in 0..=degree - sd {
            for a in f_words(n, a_len) {
                for b in f_words(n, degree - sd - a_len) {
                    let left = ClassicalElement::f_monomial(BigRational::one(), a.clone());
                    let right = ClassicalElement::f_monomial(BigRational::one(), b);
                    gens.push(coords(&left.mul(c, &s).mul(c, &right)));
                }
            }
        }
    }
    let span = Subspace::span(basis.len(), gens)?;
    Ok(span.contains(&coords(u)))
}

/// `[E_i, w] = (d_i^R(w) K_i − ∂_i^R(w) K_i⁻¹)/(q − q⁻¹)`, returned as the two coefficients.
/// Also checks the other form `K_i ∂_i^L(w) = d_i^R(w) K_i`.
pub fn q_adjoint(a: &BraidingMatrix, i: Letter, w: &TensorElement) -> Result<(TensorElement, TensorElement)> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    w.check_letters(a.n_letters())?;
    let inv = q_minus_q_inv().inv()?;
    let dr = dbar_r(a, i, w);
    let plain = d_r(a, i, w);
    // K_i u K_i⁻¹ = ∏_{j ∈ u} q_ij⁻¹ · u
    let mut moved = TensorElement::zero();
    for (u, c) in d_l(a, i, w).into_terms() {
        let chi = a.row_product(i, u.letters()).inv()?;
        moved.add_term(u, c * chi);
    }
    if moved != dr {
        return Err(Error::Verification(format!("K_i commutation disagrees for letter {i}")));
    }
    Ok((dr.scale(&inv), plain.scale(&-inv)))
}

#[cfg(test)]
mod tests;
