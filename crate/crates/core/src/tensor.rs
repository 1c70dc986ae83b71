//! Words, elements of the tensor algebra, and multidegree blocks.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A letter `1..=N`.
pub type Letter = u8;

/// Largest supported alphabet.
pub const MAX_LETTERS: usize = Letter::MAX as usize;

/// A monomial `v_{i1} ⋯ v_{in}`; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: &[usize]) -> Result<Self> {
        letters
            .iter()
            .map(|&l| {
                Letter::try_from(l)
                    .ok()
                    .filter(|&l| l > 0)
                    .ok_or(Error::LetterOutOfRange { letter: l, n: MAX_LETTERS })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The word with position `k` (0-based) deleted.
    pub fn without(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        v.remove(k);
        Word(v)
    }

    pub fn to_usize(&self) -> Vec<usize> {
        self.0.iter().map(|&l| l as usize).collect()
    }

    pub fn check_letters(&self, n_letters: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l == 0 || l as usize > n_letters) {
            Some(&l) => Err(Error::LetterOutOfRange { letter: l as usize, n: n_letters }),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

/// Letter counts `(m_1, …, m_N)` of a word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Multidegree(pub Vec<usize>);

impl Multidegree {
    pub fn zero(n_letters: usize) -> Self {
        Multidegree(vec![0; n_letters])
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn n_letters(&self) -> usize {
        self.0.len()
    }

    /// Removes one copy of `letter`, if present.
    pub fn minus_letter(&self, letter: Letter) -> Option<Multidegree> {
        let k = letter as usize - 1;
        let mut c = self.0.clone();
        c[k] = c[k].checked_sub(1)?;
        Some(Multidegree(c))
    }
}

/// Letter counts of a word over the alphabet `1..=n_letters`.
pub fn multidegree(n_letters: usize, w: &Word) -> Result<Multidegree> {
    w.check_letters(n_letters)?;
    let mut counts = vec![0; n_letters];
    for &l in w.letters() {
        counts[l as usize - 1] += 1;
    }
    Ok(Multidegree(counts))
}

/// All multidegrees of total degree `degree` over `n_letters` letters, lexicographically sorted.
pub fn multidegrees_of_degree(n_letters: usize, degree: usize) -> Vec<Multidegree> {
    fn rec(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Multidegree>) {
        if slots == 1 {
            cur.push(left);
            out.push(Multidegree(cur.clone()));
            cur.pop();
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(left - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n_letters == 0 {
        if degree == 0 {
            out.push(Multidegree(Vec::new()));
        }
        return out;
    }
    rec(degree, n_letters, &mut Vec::with_capacity(n_letters), &mut out);
    out
}

/// Finite `Scalar`-linear combination of words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<Word, Scalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn one() -> Self {
        TensorElement::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        TensorElement::monomial(Scalar::one(), w)
    }

    pub fn monomial(c: Scalar, w: Word) -> Self {
        let mut t = TensorElement::zero();
        t.add_term(w, c);
        t
    }

    /// The generator `v_letter`.
    pub fn generator(letter: Letter) -> Self {
        TensorElement::from_word(Word(vec![letter]))
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(terms: I) -> Self {
        let mut t = TensorElement::zero();
        for (w, c) in terms {
            t.add_term(w, c);
        }
        t
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add_ref(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Distinct word lengths present.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Word::len).collect()
    }

    /// The common length of all words, or `None` if zero or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.degrees();
        (d.len() == 1).then(|| *d.iter().next().unwrap())
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut r = self.clone();
        for (w, c) in other.terms() {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut r = self.clone();
        for (w, c) in other.terms() {
            r.add_term(w.clone(), c.neg_ref());
        }
        r
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        if c.is_zero() {
            return TensorElement::zero();
        }
        TensorElement { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// Concatenation product, extended bilinearly.
    pub fn concat_mul(&self, other: &TensorElement) -> TensorElement {
        let mut r = TensorElement::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                r.add_term(u.concat(v), a * b);
            }
        }
        r
    }

    /// Bar involution on coefficients; words are unchanged.
    pub fn bar(&self) -> TensorElement {
        TensorElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.bar())).collect() }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> TensorElement {
        TensorElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn check_letters(&self, n_letters: usize) -> Result<()> {
        self.terms.keys().try_for_each(|w| w.check_letters(n_letters))
    }

    /// Splits into components supported on single multidegree blocks.
    pub fn block_components(&self, n_letters: usize) -> Result<BTreeMap<Multidegree, TensorElement>> {
        let mut out: BTreeMap<Multidegree, TensorElement> = BTreeMap::new();
        for (w, c) in self.terms() {
            let md = multidegree(n_letters, w)?;
            out.entry(md).or_default().terms.insert(w.clone(), c.clone());
        }
        Ok(out)
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{w:?}")?;
        }
        Ok(())
    }
}

/// A multidegree sector of `V^⊗n`: all distinct arrangements of one letter multiset.
#[derive(Debug)]
pub struct Block {
    multidegree: Multidegree,
    basis: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl Block {
    fn build(md: &Multidegree) -> Block {
        let mut basis = Vec::new();
        let mut counts = md.0.clone();
        let mut cur = Vec::with_capacity(md.degree());
        fn rec(counts: &mut [usize], left: usize, cur: &mut Vec<Letter>, out: &mut Vec<Word>) {
            if left == 0 {
                out.push(Word(cur.clone()));
                return;
            }
            for k in 0..counts.len() {
                if counts[k] > 0 {
                    counts[k] -= 1;
                    cur.push(k as Letter + 1);
                    rec(counts, left - 1, cur, out);
                    cur.pop();
                    counts[k] += 1;
                }
            }
        }
        rec(&mut counts, md.degree(), &mut cur, &mut basis);
        let index = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Block { multidegree: md.clone(), basis, index }
    }

    pub fn multidegree(&self) -> &Multidegree {
        &self.multidegree
    }

    pub fn n_letters(&self) -> usize {
        self.multidegree.n_letters()
    }

    pub fn degree(&self) -> usize {
        self.multidegree.degree()
    }

    /// Basis words in lexicographic order.
    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Coordinates of an element supported on this block.
    pub fn coordinates(&self, x: &TensorElement) -> Result<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (w, c) in x.terms() {
            let k = self.position(w).ok_or_else(|| {
                Error::NotSubspace(format!("word {w:?} is outside block {:?}", self.multidegree.0))
            })?;
            v[k] = c.clone();
        }
        Ok(v)
    }

    pub fn element(&self, coords: &[Scalar]) -> TensorElement {
        TensorElement::from_terms(self.basis.iter().cloned().zip(coords.iter().cloned()))
    }
}

type BlockCache = RwLock<HashMap<Multidegree, Arc<Block>>>;

fn cache() -> &'static BlockCache {
    static CACHE: OnceLock<BlockCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The block of all words with letter multiset `md`; cached per multidegree.
pub fn block(md: &Multidegree) -> Arc<Block> {
    if let Some(b) = cache().read().unwrap().get(md) {
        return b.clone();
    }
    let mut guard = cache().write().unwrap();
    guard.entry(md.clone()).or_insert_with(|| Arc::new(Block::build(md))).clone()
}
