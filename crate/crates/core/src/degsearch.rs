//! Which multidegrees can carry relations: the full-twist exponent and its quadratic form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::braiding::BraidingMatrix;
use crate::error::{Error, Result};
use crate::tensor::{multidegrees_of_degree, Multidegree};

/// Exponent data of a braiding whose entries are pure powers of `t = q^(1/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaForm {
    n: usize,
    /// `q_kk = t^{d_k}`.
    diagonal: Vec<i64>,
    /// `q_pq q_qp = t^{e_pq}`, stored for `p < q` in row-major order of the full matrix.
    pair: Vec<i64>,
}

impl ThetaForm {
    pub fn new(a: &BraidingMatrix) -> Result<Self> {
        let n = a.n_letters();
        let mut exps = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                exps[i * n + j] = a.entry(i, j).as_t_power().ok_or(Error::NonMonomialBraiding)?;
            }
        }
        let diagonal = (0..n).map(|k| exps[k * n + k]).collect();
        let mut pair = vec![0i64; n * n];
        for p in 0..n {
            for q in p + 1..n {
                pair[p * n + q] = exps[p * n + q] + exps[q * n + p];
            }
        }
        Ok(ThetaForm { n, diagonal, pair })
    }

    pub fn n_letters(&self) -> usize {
        self.n
    }

    pub fn diagonal(&self) -> &[i64] {
        &self.diagonal
    }

    /// `e_pq` for zero-based `p < q`.
    pub fn pair(&self, p: usize, q: usize) -> i64 {
        let (p, q) = (p.min(q), p.max(q));
        self.pair[p * self.n + q]
    }

    fn exponent_of(&self, m: &[i64]) -> i64 {
        let mut e = 0;
        for k in 0..self.n {
            e += self.diagonal[k] * m[k] * (m[k] - 1);
            for q in k + 1..self.n {
                e += self.pair[k * self.n + q] * m[k] * m[q];
            }
        }
        e
    }
}

/// `Σ d_k m_k(m_k−1) + Σ_{p<q} e_pq m_p m_q`, the exponent of `t` by which `θ_n` acts.
pub fn theta_exponent(tf: &ThetaForm, md: &Multidegree) -> i64 {
    let m: Vec<i64> = md.counts().iter().map(|&x| x as i64).collect();
    tf.exponent_of(&m)
}

/// All multidegrees of height `2..=height_max` on which the full twist acts trivially.
pub fn zero_blocks(tf: &ThetaForm, height_max: usize) -> Vec<Multidegree> {
    let mut out: Vec<Multidegree> = (2..=height_max)
        .flat_map(|h| multidegrees_of_degree(tf.n, h))
        .filter(|md| theta_exponent(tf, md) == 0)
        .collect();
    out.sort();
    out
}

/// `Q(x) = Σ x_i² − Σ_{i<j} b_ij x_i x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    n: usize,
    b: Vec<BigRational>,
}

impl QuadraticForm {
    /// `b` is read for `i < j` only.
    pub fn new(b: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = b.len();
        if b.iter().any(|r| r.len() != n) {
            return Err(Error::BadParameters("quadratic form data must be square".into()));
        }
        let mut flat = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                flat[i * n + j] = b[i][j].clone();
            }
        }
        Ok(QuadraticForm { n, b: flat })
    }

    /// The form with `λ = 0 ⇔ Q(x) + S(x) = N`, using `b_pq = −2 e_pq / d`.
    /// Needs one nonzero diagonal exponent `d` shared by all letters.
    pub fn from_theta(tf: &ThetaForm) -> Result<Self> {
        let d = tf.diagonal[0];
        if d == 0 || tf.diagonal.iter().any(|&x| x != d) {
            return Err(Error::BadParameters(
                "the quadratic form needs equal nonzero diagonal exponents".into(),
            ));
        }
        let n = tf.n;
        let mut b = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                b[i][j] = BigRational::new(BigInt::from(-2 * tf.pair(i, j)), BigInt::from(d));
            }
        }
        QuadraticForm::new(b)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn b(&self, i: usize, j: usize) -> &BigRational {
        let (i, j) = (i.min(j), i.max(j));
        &self.b[i * self.n + j]
    }

    pub fn eval(&self, x: &[i64]) -> BigRational {
        let mut acc = BigRational::zero();
        for i in 0..self.n {
            acc += BigRational::from_integer(BigInt::from(x[i] * x[i]));
            for j in i + 1..self.n {
                acc -= self.b(i, j) * BigRational::from_integer(BigInt::from(x[i] * x[j]));
            }
        }
        acc
    }

    /// Symmetric Gram matrix: `G_ii = 1`, `G_ij = −b_ij / 2`.
    pub fn gram(&self) -> Vec<Vec<BigRational>> {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| if i == j { BigRational::from_integer(1.into()) } else { -(self.b(i, j) * &half) })
                    .collect()
            })
            .collect()
    }
}

/// `S(x) = Σ (x_i − 1)²`.
pub fn shift_form(x: &[i64]) -> i64 {
    x.iter().map(|&v| (v - 1) * (v - 1)).sum()
}

/// Exact test for `Q ≥ 0`, by symmetric elimination with diagonal pivoting.
pub fn is_semipositive(qf: &QuadraticForm) -> bool {
    let mut g = qf.gram();
    let mut live: Vec<usize> = (0..qf.n).collect();
    while !live.is_empty() {
        if live.iter().any(|&i| g[i][i].is_negative()) {
            return false;
        }
        let Some(pos) = live.iter().position(|&i| g[i][i].is_positive()) else {
            // all remaining diagonal entries vanish, so the rest must vanish too
            return live.iter().all(|&i| live.iter().all(|&j| g[i][j].is_zero()));
        };
        let p = live.remove(pos);
        let piv = g[p][p].clone();
        for &i in &live {
            for &j in &live {
                let delta = &g[i][p] * &g[p][j] / &piv;
                g[i][j] -= delta;
            }
        }
    }
    true
}

/// Options for [`enumerate_e`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Include points with negative coordinates.
    pub all_integers: bool,
    /// Search bound when the form is not semi-positive: the height for non-negative
    /// points, the largest `|x_i|` otherwise.
    pub bound: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { all_integers: false, bound: 8 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Enumeration {
    Finite(Vec<Vec<i64>>),
    /// The form is indefinite; only points within the bound were searched.
    Unbounded { partial: Vec<Vec<i64>>, bound: usize },
}

impl Enumeration {
    pub fn points(&self) -> &[Vec<i64>] {
        match self {
            Enumeration::Finite(p) => p,
            Enumeration::Unbounded { partial, .. } => partial,
        }
    }
}

fn in_e(qf: &QuadraticForm, x: &[i64]) -> bool {
    qf.eval(x) + BigRational::from_integer(BigInt::from(shift_form(x))) == BigRational::from_integer(BigInt::from(qf.n as i64))
}

fn boxed(n: usize, lo: i64, hi: i64, mut keep: impl FnMut(&[i64]) -> bool) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut x = vec![lo; n];
    loop {
        if keep(&x) {
            out.push(x.clone());
        }
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if x[k] < hi {
                x[k] += 1;
                break;
            }
            x[k] = lo;
        }
    }
}

/// Integral points with `Q(x) + S(x) = N`: the multidegrees where the full twist is trivial.
pub fn enumerate_e(qf: &QuadraticForm, opts: EnumerateOptions) -> Enumeration {
    let n = qf.n;
    if is_semipositive(qf) {
        // Q ≥ 0 forces S(x) ≤ N, hence |x_i − 1| ≤ √N
        let mut r = 0i64;
        while (r + 1) * (r + 1) <= n as i64 {
            r += 1;
        }
        let lo = if opts.all_integers { 1 - r } else { 0 };
        let mut pts = boxed(n, lo, 1 + r, |x| in_e(qf, x));
        pts.sort();
        return Enumeration::Finite(pts);
    }
    let b = opts.bound as i64;
    let mut partial = if opts.all_integers {
        boxed(n, -b, b, |x| in_e(qf, x))
    } else {
        (0..=opts.bound)
            .flat_map(|h| multidegrees_of_degree(n, h))
            .map(|md| md.counts().iter().map(|&v| v as i64).collect::<Vec<_>>())
            .filter(|x| in_e(qf, x))
            .collect()
    };
    partial.sort();
    Enumeration::Unbounded { partial, bound: opts.bound }
}

#[cfg(test)]
mod tests;
