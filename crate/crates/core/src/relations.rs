//! Generating sets of the defining ideal: degree-2 relations, constants and pre-relations.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::braid::{make_operator, theta_scalar, BraidOperator, OperatorName};
use crate::braiding::BraidingMatrix;
use crate::error::{Error, Result};
use crate::linalg::{kernel, leading_index, normalize, operator_matrix, ScalarMatrix, Subspace};
use crate::scalar::Scalar;
use crate::tensor::{block, multidegree, multidegrees_of_degree, Block, Multidegree, TensorElement, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            _ => Err(Error::Input(format!("side must be right or left, got {s:?}"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Right => "right",
            Side::Left => "left",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Degree2,
    Constant,
    Prerelation,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Degree2 => "degree2",
            Kind::Constant => "constant",
            Kind::Prerelation => "prerelation",
        })
    }
}

/// Relations found in one multidegree block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockRelations {
    pub multidegree: Multidegree,
    /// RREF coordinates over the block basis.
    pub subspace: Subspace,
    pub relations: Vec<TensorElement>,
    /// For pre-relations, `relations[k] = P_n witnesses[k]` (or `Q_n` on the left).
    pub witnesses: Vec<TensorElement>,
}

impl BlockRelations {
    fn from_subspace(md: Multidegree, b: &Block, subspace: Subspace, witnesses: Vec<TensorElement>) -> Self {
        let relations = subspace.basis().iter().map(|v| b.element(v)).collect();
        BlockRelations { multidegree: md, subspace, relations, witnesses }
    }

    pub fn dim(&self) -> usize {
        self.relations.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSet {
    pub side: Side,
    pub kind: Kind,
    pub degree: usize,
    /// Nonempty blocks, sorted by multidegree.
    pub blocks: Vec<BlockRelations>,
}

impl RelationSet {
    pub fn elements(&self) -> impl Iterator<Item = &TensorElement> {
        self.blocks.iter().flat_map(|b| b.relations.iter())
    }

    pub fn block(&self, md: &Multidegree) -> Option<&BlockRelations> {
        self.blocks.iter().find(|b| &b.multidegree == md)
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(BlockRelations::dim).sum()
    }
}

/// `v_s v_t − q_st v_t v_s` for `s < t` with `q_st q_ts = 1`, and `v_s²` when `q_ss = −1`.
pub fn degree2_relations(a: &BraidingMatrix) -> RelationSet {
    let n = a.n_letters();
    let mut blocks = Vec::new();
    for s in 1..=n {
        for t in s..=n {
            let (ls, lt) = (s as u8, t as u8);
            let mut md = vec![0; n];
            md[s - 1] += 1;
            md[t - 1] += 1;
            let md = Multidegree(md);
            let b = block(&md);
            let x = if s == t {
                if !(a.q(ls, ls) + &Scalar::one()).is_zero() {
                    continue;
                }
                TensorElement::from_word(Word(vec![ls, ls]))
            } else {
                if !(a.q(ls, lt) * a.q(lt, ls)).is_one() {
                    continue;
                }
                let mut x = TensorElement::from_word(Word(vec![ls, lt]));
                x.add_term(Word(vec![lt, ls]), -a.q(ls, lt).clone());
                x
            };
            let coords = b.coordinates(&x).expect("word in block");
            let sub = Subspace::span(b.dim(), vec![coords]).expect("dimensions agree");
            blocks.push(BlockRelations::from_subspace(md, &b, sub, Vec::new()));
        }
    }
    blocks.sort_by(|x, y| x.multidegree.cmp(&y.multidegree));
    RelationSet { side: Side::Right, kind: Kind::Degree2, degree: 2, blocks }
}

fn op(name: OperatorName, n: usize) -> BraidOperator {
    make_operator(name, n).expect("valid operator parameters")
}

fn check_degree(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::BadParameters(format!("relation degree must be at least 2, got {n}")));
    }
    Ok(())
}

fn sorted(mut blocks: Vec<BlockRelations>) -> Vec<BlockRelations> {
    blocks.retain(|b| b.dim() > 0);
    blocks.sort_by(|x, y| x.multidegree.cmp(&y.multidegree));
    blocks
}

/// Right constants `ker T_n` or left constants `ker U_n`, per block.
pub fn constants(a: &BraidingMatrix, n: usize, side: Side) -> Result<RelationSet> {
    check_degree(n)?;
    let t = op(if side == Side::Right { OperatorName::Tn } else { OperatorName::Un }, n);
    let blocks: Result<Vec<BlockRelations>> = multidegrees_of_degree(a.n_letters(), n)
        .into_par_iter()
        .map(|md| {
            let b = block(&md);
            let k = kernel(&operator_matrix(a, &t, &b)?);
            Ok(BlockRelations::from_subspace(md, &b, k, Vec::new()))
        })
        .collect();
    Ok(RelationSet { side, kind: Kind::Constant, degree: n, blocks: sorted(blocks?) })
}

/// Which blocks the pre-relation search visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pruning {
    /// Only blocks on which the full twist acts trivially.
    Theta,
    /// Every block.
    None,
}

/// The operators `(T'_n, X_{n-2,n}, P_n)` or their left mirrors.
struct PrerelationOps {
    prime: BraidOperator,
    lower: BraidOperator,
    dynkin: BraidOperator,
}

impl PrerelationOps {
    fn new(n: usize, side: Side) -> Self {
        let lower = if n == 2 {
            BraidOperator::identity(2)
        } else if side == Side::Right {
            op(OperatorName::Xmn(n - 2), n)
        } else {
            op(OperatorName::Ymn(n - 2), n)
        };
        let (prime, dynkin) = match side {
            Side::Right => (op(OperatorName::TnPrime, n), op(OperatorName::Pn, n)),
            Side::Left => (op(OperatorName::UnPrime, n), op(OperatorName::Qn, n)),
        };
        PrerelationOps { prime, lower, dynkin }
    }
}

/// Row reduction of `images` carrying the same operations on `witnesses`; rows whose
/// image vanishes are dropped.
fn rref_tracked(images: Vec<Vec<Scalar>>, witnesses: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
    let Some(d) = images.first().map(Vec::len) else { return (Vec::new(), Vec::new()) };
    let rows: Vec<Vec<Scalar>> = images.into_iter().zip(witnesses).map(|(mut i, w)| {
        i.extend(w);
        i
    }).collect();
    let mut rows = rows;
    let mut done: Vec<Vec<Scalar>> = Vec::new();
    for col in 0..d {
        let best = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| !r[col].is_zero())
            .min_by_key(|(_, r)| r[col].complexity())
            .map(|(i, _)| i);
        let Some(i) = best else { continue };
        let mut pivot = rows.swap_remove(i);
        normalize(&mut pivot);
        for r in rows.iter_mut().chain(done.iter_mut()) {
            if !r[col].is_zero() {
                let f = r[col].clone();
                for (x, p) in r.iter_mut().zip(&pivot) {
                    if !p.is_zero() {
                        *x = x.sub_ref(&f.mul_ref(p));
                    }
                }
            }
        }
        done.push(pivot);
    }
    done.into_iter().map(|mut r| {
        let w = r.split_off(d);
        (r, w)
    }).unzip()
}

type Rows = Vec<Vec<Scalar>>;

/// The pre-relation extraction on coordinate matrices: returns the RREF image rows and
/// the matching witness coordinates.
pub(crate) fn extract(
    prime: &ScalarMatrix,
    lower: &ScalarMatrix,
    dynkin: &ScalarMatrix,
) -> Result<(Rows, Rows)> {
    let k = kernel(prime);
    let k0 = k.intersect(&kernel(lower))?;
    let comp = k.complement_in(&k0)?;
    let images: Vec<Vec<Scalar>> = comp.basis().iter().map(|w| dynkin.apply(w)).collect();
    Ok(rref_tracked(images, comp.basis().to_vec()))
}

fn prerelations_block(a: &BraidingMatrix, ops: &PrerelationOps, md: Multidegree) -> Result<BlockRelations> {
    let b = block(&md);
    let (rows, wit) = extract(
        &operator_matrix(a, &ops.prime, &b)?,
        &operator_matrix(a, &ops.lower, &b)?,
        &operator_matrix(a, &ops.dynkin, &b)?,
    )?;
    debug_assert!(rows.iter().all(|r| leading_index(r).is_some()));
    let sub = Subspace::span(b.dim(), rows)?;
    let witnesses = wit.iter().map(|w| b.element(w)).collect();
    Ok(BlockRelations::from_subspace(md, &b, sub, witnesses))
}

/// Pre-relations `P_n w` with `T'_n w = 0` and `X_{n-2,n} w ≠ 0` (right), or the
/// mirrored `Q_n w` with `U'_n w = 0` and `U'_{n-1} w ≠ 0` on the first strands (left).
pub fn prerelations(a: &BraidingMatrix, n: usize, side: Side) -> Result<RelationSet> {
    prerelations_with(a, n, side, Pruning::Theta)
}

pub fn prerelations_with(a: &BraidingMatrix, n: usize, side: Side, pruning: Pruning) -> Result<RelationSet> {
    check_degree(n)?;
    let ops = PrerelationOps::new(n, side);
    let mds: Vec<Multidegree> = multidegrees_of_degree(a.n_letters(), n)
        .into_iter()
        .filter(|md| pruning == Pruning::None || theta_scalar(a, md).is_one())
        .collect();
    let blocks: Result<Vec<BlockRelations>> =
        mds.into_par_iter().map(|md| prerelations_block(a, &ops, md)).collect();
    Ok(RelationSet { side, kind: Kind::Prerelation, degree: n, blocks: sorted(blocks?) })
}

/// Per-block comparison of the Garside image of a right set with a left set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceEntry {
    pub multidegree: Multidegree,
    pub right_dim: usize,
    pub left_dim: usize,
    pub balanced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub degree: usize,
    pub constants: Vec<BalanceEntry>,
    pub prerelations: Vec<BalanceEntry>,
}

impl BalanceReport {
    pub fn balanced(&self) -> bool {
        self.constants.iter().chain(&self.prerelations).all(|e| e.balanced)
    }
}

fn compare_sides(a: &BraidingMatrix, right: &RelationSet, left: &RelationSet) -> Result<Vec<BalanceEntry>> {
    let n = right.degree;
    let garside = op(OperatorName::Garside, n);
    let mut mds: Vec<Multidegree> =
        right.blocks.iter().chain(&left.blocks).map(|b| b.multidegree.clone()).collect();
    mds.sort();
    mds.dedup();
    mds.into_iter()
        .map(|md| {
            let b = block(&md);
            let zero = Subspace::zero(b.dim());
            let r = right.block(&md).map_or(&zero, |x| &x.subspace);
            let l = left.block(&md).map_or(&zero, |x| &x.subspace);
            let image = r.image(&operator_matrix(a, &garside, &b)?)?;
            Ok(BalanceEntry { right_dim: r.dim(), left_dim: l.dim(), balanced: &image == l, multidegree: md })
        })
        .collect()
}

/// Checks that `Δ_n` carries right constants and right pre-relations onto the left ones.
pub fn balance_check(a: &BraidingMatrix, n: usize) -> Result<BalanceReport> {
    let constants_r = constants(a, n, Side::Right)?;
    let constants_l = constants(a, n, Side::Left)?;
    let pre_r = prerelations(a, n, Side::Right)?;
    let pre_l = prerelations(a, n, Side::Left)?;
    Ok(BalanceReport {
        degree: n,
        constants: compare_sides(a, &constants_r, &constants_l)?,
        prerelations: compare_sides(a, &pre_r, &pre_l)?,
    })
}

/// Matrix of the total symmetrizer `S_n = T_2 T_3 ⋯ T_n` on a block.
pub fn symmetrizer_matrix(a: &BraidingMatrix, b: &Block) -> Result<ScalarMatrix> {
    let n = b.degree();
    let mut m = ScalarMatrix::identity(b.dim());
    for k in 2..=n {
        let t = op(OperatorName::Tn, k).embed(n, 0)?;
        m = m.mul(&operator_matrix(a, &t, b)?)?;
    }
    Ok(m)
}

/// `ker S_n` on a block.
pub fn symmetrizer_kernel(a: &BraidingMatrix, b: &Block) -> Result<Subspace> {
    Ok(kernel(&symmetrizer_matrix(a, b)?))
}

/// Rank of `S_n` on every block of every degree up to `n_max`.
pub fn nichols_dims(a: &BraidingMatrix, n_max: usize) -> Result<Vec<Vec<(Multidegree, usize)>>> {
    (0..=n_max)
        .map(|n| {
            multidegrees_of_degree(a.n_letters(), n)
                .into_par_iter()
                .map(|md| {
                    let b = block(&md);
                    let rank = if n < 2 { b.dim() } else { symmetrizer_matrix(a, &b)?.rank() };
                    Ok((md, rank))
                })
                .collect()
        })
        .collect()
}

/// All words whose letter counts are `md`.
fn words_of(md: &Multidegree) -> Vec<Word> {
    block(md).basis().to_vec()
}

/// The block-`md` component of the two-sided ideal generated by homogeneous `generators`.
pub fn ideal_component(n_letters: usize, generators: &[TensorElement], md: &Multidegree) -> Result<Subspace> {
    let b = block(md);
    let mut vectors = Vec::new();
    for g in generators {
        let Some(first) = g.terms().next().map(|(w, _)| w) else { continue };
        let gmd = multidegree(n_letters, first)?;
        let Some(rest) = subtract(md, &gmd) else { continue };
        for w in words_of(&rest) {
            for k in 0..=w.len() {
                let u = TensorElement::from_word(Word(w.0[..k].to_vec()));
                let v = TensorElement::from_word(Word(w.0[k..].to_vec()));
                vectors.push(b.coordinates(&u.concat_mul(g).concat_mul(&v))?);
            }
        }
    }
    Subspace::span(b.dim(), vectors)
}

fn subtract(md: &Multidegree, other: &Multidegree) -> Option<Multidegree> {
    md.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Multidegree)
}

/// For each relation of `set`, whether it already lies in the ideal generated by `lower`.
pub fn redundancy(n_letters: usize, lower: &[TensorElement], set: &RelationSet) -> Result<Vec<(Multidegree, Vec<bool>)>> {
    set.blocks
        .iter()
        .map(|br| {
            let ideal = ideal_component(n_letters, lower, &br.multidegree)?;
            Ok((br.multidegree.clone(), br.subspace.basis().iter().map(|v| ideal.contains(v)).collect()))
        })
        .collect()
}

#[cfg(test)]
mod tests;
