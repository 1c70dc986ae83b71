//! Diagonal braiding matrices `(q_ij)`.

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{Letter, MAX_LETTERS};

/// Where a braiding matrix came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Free,
    Cartan,
    Averaged,
}

/// The braiding `σ(v_a ⊗ v_b) = q_ab · v_b ⊗ v_a`.
#[derive(Clone, Debug)]
pub struct BraidingMatrix {
    entries: Vec<Vec<Scalar>>,
    origin: Origin,
    /// `(c, e)` with `q_ab = c·t^e`, when every entry has that shape.
    monomial: Option<Vec<(BigRational, i64)>>,
}

impl BraidingMatrix {
    pub fn new(entries: Vec<Vec<Scalar>>) -> Result<Self> {
        BraidingMatrix::with_origin(entries, Origin::Free)
    }

    pub fn with_origin(entries: Vec<Vec<Scalar>>, origin: Origin) -> Result<Self> {
        let n = entries.len();
        if n == 0 || n > MAX_LETTERS {
            return Err(Error::InvalidBraiding(format!("size {n} outside 1..={MAX_LETTERS}")));
        }
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidBraiding("matrix is not square".into()));
        }
        if entries.iter().flatten().any(Scalar::is_zero) {
            return Err(Error::InvalidBraiding("zero entry".into()));
        }
        let monomial = entries
            .iter()
            .flatten()
            .map(|s| s.as_monomial().map(|(c, e)| (c.clone(), e)))
            .collect();
        Ok(BraidingMatrix { entries, origin, monomial })
    }

    /// `q_ab = t^{exponents[a][b]}`, i.e. the exponents are twice the powers of `q`.
    pub fn from_t_exponents(exponents: &[Vec<i64>], origin: Origin) -> Result<Self> {
        BraidingMatrix::with_origin(
            exponents.iter().map(|row| row.iter().map(|&e| Scalar::t_pow(e)).collect()).collect(),
            origin,
        )
    }

    /// A reproducible random braiding `q_ab = t^e` with `e` uniform in `-bound..=bound`.
    pub fn random_monomial(n_letters: usize, seed: u64, bound: i64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let exps: Vec<Vec<i64>> = (0..n_letters)
            .map(|_| (0..n_letters).map(|_| rng.gen_range(-bound..=bound)).collect())
            .collect();
        BraidingMatrix::from_t_exponents(&exps, Origin::Free)
    }

    pub fn n_letters(&self) -> usize {
        self.entries.len()
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    /// `q_ab` for letters `a, b` in `1..=N`.
    pub fn q(&self, a: Letter, b: Letter) -> &Scalar {
        &self.entries[a as usize - 1][b as usize - 1]
    }

    /// Zero-based access.
    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n_letters();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial.is_some()
    }

    /// Exponents of `t` when every entry is a pure power of `t`.
    pub fn t_exponents(&self) -> Option<Vec<Vec<i64>>> {
        let n = self.n_letters();
        let mono = self.monomial.as_ref()?;
        if mono.iter().any(|(c, _)| !c.is_one()) {
            return None;
        }
        Some((0..n).map(|i| (0..n).map(|j| mono[i * n + j].1).collect()).collect())
    }

    /// `∏ q_ab^{counts[a·N + b]}` over zero-based letter pairs.
    pub fn factor(&self, counts: &[i32]) -> Scalar {
        let n = self.n_letters();
        debug_assert_eq!(counts.len(), n * n);
        if let Some(mono) = &self.monomial {
            let mut c = BigRational::one();
            let mut e = 0i64;
            for (k, &m) in counts.iter().enumerate() {
                if m == 0 {
                    continue;
                }
                let (ck, ek) = &mono[k];
                e += ek * m as i64;
                if !ck.is_one() {
                    let p = num_traits::pow(ck.clone(), m.unsigned_abs() as usize);
                    c = if m > 0 { c * p } else { c / p };
                }
            }
            return Scalar::monomial(c, e);
        }
        let mut acc = Scalar::one();
        for (k, &m) in counts.iter().enumerate() {
            if m != 0 {
                acc = acc.mul_ref(&self.entries[k / n][k % n].pow(m as i64).expect("nonzero entry"));
            }
        }
        acc
    }

    /// The character-like product `∏_{b in letters} q_{a b}`.
    pub fn row_product(&self, a: Letter, letters: &[Letter]) -> Scalar {
        let n = self.n_letters();
        let mut counts = vec![0i32; n * n];
        for &b in letters {
            counts[(a as usize - 1) * n + b as usize - 1] += 1;
        }
        self.factor(&counts)
    }

    /// `∏_{b in letters} q_{b a}`.
    pub fn column_product(&self, letters: &[Letter], a: Letter) -> Scalar {
        let n = self.n_letters();
        let mut counts = vec![0i32; n * n];
        for &b in letters {
            counts[(b as usize - 1) * n + a as usize - 1] += 1;
        }
        self.factor(&counts)
    }
}
