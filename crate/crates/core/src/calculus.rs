//! Braided coproduct, Hopf pairing and the skew derivations `∂_i`.

use std::collections::BTreeMap;

use crate::braiding::BraidingMatrix;
use crate::error::Result;
use crate::scalar::Scalar;
use crate::tensor::{Letter, TensorElement, Word};

/// An element of `T(V) ⊗ T(V)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorSquareElement {
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TensorSquareElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e = e.add_ref(&c);
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &Word, right: &Word) -> Scalar {
        self.terms.get(&(left.clone(), right.clone())).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Braided product `(a⊗b)(c⊗d) = φ(b,c)·ac⊗bd`, `φ(b,c) = ∏ q_{x y}` over `x ∈ b`, `y ∈ c`.
    pub fn mul(&self, a: &BraidingMatrix, other: &TensorSquareElement) -> TensorSquareElement {
        let n = a.n_letters();
        let mut out = TensorSquareElement::zero();
        let mut counts = vec![0i32; n * n];
        for ((l1, r1), c1) in self.terms() {
            for ((l2, r2), c2) in other.terms() {
                counts.iter_mut().for_each(|x| *x = 0);
                for &x in r1.letters() {
                    for &y in l2.letters() {
                        counts[(x as usize - 1) * n + y as usize - 1] += 1;
                    }
                }
                let f = a.factor(&counts);
                out.add_term(l1.concat(l2), r1.concat(r2), &(c1 * c2) * &f);
            }
        }
        out
    }
}

/// `Δ(x)`, with `Δ(v) = v⊗1 + 1⊗v` extended multiplicatively.
pub fn coproduct(a: &BraidingMatrix, x: &TensorElement) -> Result<TensorSquareElement> {
    x.check_letters(a.n_letters())?;
    let mut out = TensorSquareElement::zero();
    for (w, c) in x.terms() {
        let mut acc = TensorSquareElement::zero();
        acc.add_term(Word::empty(), Word::empty(), c.clone());
        for &letter in w.letters() {
            let mut d = TensorSquareElement::zero();
            d.add_term(Word(vec![letter]), Word::empty(), Scalar::one());
            d.add_term(Word::empty(), Word(vec![letter]), Scalar::one());
            acc = acc.mul(a, &d);
        }
        for ((l, r), c) in acc.terms {
            out.add_term(l, r, c);
        }
    }
    Ok(out)
}

/// Right derivation `∂_i^R(x) = Σ x_(1) φ(v_i, x_(2))` (letter `i` is 1-based).
pub fn d_r(a: &BraidingMatrix, i: Letter, x: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (w, c) in x.terms() {
        let l = w.letters();
        for k in 0..l.len() {
            if l[k] == i {
                let f = a.row_product(i, &l[k + 1..]);
                out.add_term(w.without(k), c * &f);
            }
        }
    }
    out
}

/// Left derivation `∂_i^L(x) = Σ φ(v_i, x_(1)) x_(2)`.
pub fn d_l(a: &BraidingMatrix, i: Letter, x: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (w, c) in x.terms() {
        let l = w.letters();
        for k in 0..l.len() {
            if l[k] == i {
                let f = a.column_product(&l[..k], i);
                out.add_term(w.without(k), c * &f);
            }
        }
    }
    out
}

/// The Hopf pairing, through `φ(v_i u, y) = φ(u, ∂_i^R y)`.
pub fn pairing(a: &BraidingMatrix, x: &TensorElement, y: &TensorElement) -> Scalar {
    let mut total = Scalar::zero();
    for (w, c) in x.terms() {
        let mut z = y.clone();
        for &letter in w.letters() {
            z = d_r(a, letter, &z);
            if z.is_zero() {
                break;
            }
        }
        total = total.add_ref(&(c * &z.coeff(&Word::empty())));
    }
    total
}

/// Conjugates every coefficient.
pub fn bar_element(x: &TensorElement) -> TensorElement {
    x.bar()
}

fn twisted(
    a: &BraidingMatrix,
    i: Letter,
    x: &TensorElement,
    d: fn(&BraidingMatrix, Letter, &TensorElement) -> TensorElement,
) -> TensorElement {
    let mut out = TensorElement::zero();
    for (w, c) in x.terms() {
        let img = d(a, i, &TensorElement::from_word(w.clone())).bar();
        for (v, f) in img.into_terms() {
            out.add_term(v, c * &f);
        }
    }
    out
}

/// `d_i^R(c·w) = c · bar(∂_i^R w)` on monomials, extended linearly.
pub fn dbar_r(a: &BraidingMatrix, i: Letter, x: &TensorElement) -> TensorElement {
    twisted(a, i, x, d_r)
}

/// `d_i^L(c·w) = c · bar(∂_i^L w)`.
pub fn dbar_l(a: &BraidingMatrix, i: Letter, x: &TensorElement) -> TensorElement {
    twisted(a, i, x, d_l)
}
