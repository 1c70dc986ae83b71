//! Exact linear algebra over [`Scalar`]: block matrices, RREF, kernels and subspaces.

use std::fmt;

use rayon::prelude::*;

use crate::braid::BraidOperator;
use crate::braiding::BraidingMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::Block;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ScalarMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::BadParameters("ragged matrix rows".into()));
        }
        let n = rows.len();
        Ok(ScalarMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_columns(columns: Vec<Vec<Scalar>>, rows: usize) -> Result<Self> {
        let mut m = ScalarMatrix::zeros(rows, columns.len());
        for (j, col) in columns.into_iter().enumerate() {
            if col.len() != rows {
                return Err(Error::BadParameters("ragged matrix columns".into()));
            }
            for (i, x) in col.into_iter().enumerate() {
                m.data[i * m.cols + j] = x;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut m = ScalarMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &ScalarMatrix) -> Result<ScalarMatrix> {
        if self.cols != other.rows {
            return Err(Error::BadParameters(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let rows: Vec<Vec<Scalar>> = (0..self.rows)
            .into_par_iter()
            .map(|i| {
                let mut out = vec![Scalar::zero(); other.cols];
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    for (j, o) in out.iter_mut().enumerate() {
                        let b = other.get(k, j);
                        if !b.is_zero() {
                            *o = o.add_ref(&a.mul_ref(b));
                        }
                    }
                }
                out
            })
            .collect();
        ScalarMatrix::from_rows(rows, other.cols)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn rank(&self) -> usize {
        rref(self.to_rows(), self.cols).len()
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc.add_ref(&x.mul_ref(y));
        }
    }
    acc
}

/// Matrix of `op` on a block; column `j` holds the coordinates of `op(basis_j)`.
pub fn operator_matrix(a: &BraidingMatrix, op: &BraidOperator, b: &Block) -> Result<ScalarMatrix> {
    if op.strands() != b.degree() {
        return Err(Error::DegreeMismatch { expected: op.strands(), found: b.degree() });
    }
    let columns: Result<Vec<Vec<Scalar>>> = b
        .basis()
        .par_iter()
        .map(|w| b.coordinates(&op.apply_to_word(a, w)?))
        .collect();
    ScalarMatrix::from_columns(columns?, b.dim())
}

/// Index of the first nonzero entry.
pub fn leading_index(v: &[Scalar]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// Scales `v` so its first nonzero entry is 1.
pub fn normalize(v: &mut [Scalar]) {
    if let Some(p) = leading_index(v) {
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.mul_ref(&inv);
            }
        }
    }
}

/// `target -= factor * source`, skipping zeros.
fn axpy(target: &mut [Scalar], factor: &Scalar, source: &[Scalar]) {
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t = t.sub_ref(&factor.mul_ref(s));
        }
    }
}

/// Reduced row echelon form of the given rows; zero rows are dropped.
///
/// Among the candidate rows for a pivot column the one with the simplest entry is chosen.
/// The result does not depend on that choice.
pub fn rref(mut rows: Vec<Vec<Scalar>>, cols: usize) -> Vec<Vec<Scalar>> {
    let mut done: Vec<Vec<Scalar>> = Vec::new();
    for col in 0..cols {
        let best = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| !r[col].is_zero())
            .min_by_key(|(_, r)| r[col].complexity())
            .map(|(i, _)| i);
        let Some(i) = best else { continue };
        let mut pivot = rows.swap_remove(i);
        normalize(&mut pivot);
        rows.par_iter_mut().for_each(|r| {
            if !r[col].is_zero() {
                let f = r[col].clone();
                axpy(r, &f, &pivot);
            }
        });
        for r in done.iter_mut() {
            if !r[col].is_zero() {
                let f = r[col].clone();
                axpy(r, &f, &pivot);
            }
        }
        done.push(pivot);
        if rows.is_empty() {
            break;
        }
    }
    done
}

/// A subspace of `K^dim`, stored as its RREF basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Subspace { dim, basis: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        Subspace { dim, basis: ScalarMatrix::identity(dim).to_rows() }
    }

    /// The span of `vectors`.
    pub fn span(dim: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != dim) {
            return Err(Error::BadParameters(format!("vector length differs from ambient {dim}")));
        }
        Ok(Subspace { dim, basis: rref(vectors, dim) })
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|v| leading_index(v).expect("nonzero basis vector")).collect()
    }

    /// Remainder of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (b, p) in self.basis.iter().zip(self.pivots()) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                axpy(&mut r, &f, b);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.dim && self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.dim == self.dim && other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Subspace::span(self.dim, self.basis.iter().chain(&other.basis).cloned().collect())
    }

    /// Vectors `x` with `b · x = 0` for every basis vector `b`.
    pub fn annihilator(&self) -> Subspace {
        kernel_of_rref(&self.basis, self.dim)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let ann = self.annihilator().sum(&other.annihilator())?;
        Ok(ann.annihilator())
    }

    /// The RREF-canonical complement of `w` inside `self`: the reduced remainders of
    /// `self`'s basis modulo `w`, row reduced.
    pub fn complement_in(&self, w: &Subspace) -> Result<Subspace> {
        self.check_ambient(w)?;
        if !self.contains_subspace(w) {
            return Err(Error::NotSubspace("second space is not contained in the first".into()));
        }
        let rem: Vec<Vec<Scalar>> = self.basis.iter().map(|v| w.reduce(v)).collect();
        Subspace::span(self.dim, rem)
    }

    /// Image under a matrix acting on coordinate vectors.
    pub fn image(&self, m: &ScalarMatrix) -> Result<Subspace> {
        if m.cols() != self.dim {
            return Err(Error::BadParameters("matrix width differs from ambient dimension".into()));
        }
        Subspace::span(m.rows(), self.basis.iter().map(|v| m.apply(v)).collect())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::BadParameters(format!(
                "ambient dimensions differ: {} vs {}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }
}

fn kernel_of_rref(rows: &[Vec<Scalar>], cols: usize) -> Subspace {
    let pivots: Vec<usize> = rows.iter().map(|r| leading_index(r).expect("nonzero row")).collect();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for (r, &p) in rows.iter().zip(&pivots) {
            if !r[free].is_zero() {
                v[p] = -r[free].clone();
            }
        }
        basis.push(v);
    }
    Subspace { dim: cols, basis: rref(basis, cols) }
}

/// Right null space of `m`.
pub fn kernel(m: &ScalarMatrix) -> Subspace {
    kernel_of_rref(&rref(m.to_rows(), m.cols()), m.cols())
}

#[cfg(test)]
mod tests;
