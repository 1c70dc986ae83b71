//! JSON wire formats: matrix files, tensor elements and relation tables.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::braid::{apply_operator, make_operator, OperatorName};
use crate::braiding::{BraidingMatrix, Origin};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::relations::{BlockRelations, Kind, RelationSet, Side};
use crate::scalar::Scalar;
use crate::specialize::{average, BraidingSide, CartanMatrix, ClassicalElement};
use crate::tensor::{block, multidegree, Multidegree, TensorElement, Word};

/// Where a braiding matrix comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixSource {
    /// `q_ij = q^{c_ij}`.
    Cartan(CartanMatrix),
    /// `q_ij = q^{c̄_ij}` with `c̄` the averaged matrix; the classical side still uses `C`.
    Averaged(CartanMatrix),
    /// `q_ij = t^{e_ij}` with `t = q^(1/2)`.
    Exponents(Vec<Vec<i64>>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    cartan: Option<Vec<Vec<i64>>>,
    averaged_from_cartan: Option<Vec<Vec<i64>>>,
    braiding_exponents_doubled: Option<Vec<Vec<i64>>>,
}

impl MatrixSource {
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Input(format!("matrix JSON: {e}")))?;
        MatrixSource::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let f: MatrixFile =
            serde_json::from_value(v.clone()).map_err(|e| Error::Input(format!("matrix JSON: {e}")))?;
        let given = [f.cartan.is_some(), f.averaged_from_cartan.is_some(), f.braiding_exponents_doubled.is_some()];
        if given.iter().filter(|&&x| x).count() != 1 {
            return Err(Error::Input(
                "matrix JSON needs exactly one of \"cartan\", \"averaged_from_cartan\", \"braiding_exponents_doubled\"".into(),
            ));
        }
        let cartan = |c: Vec<Vec<i64>>| CartanMatrix::new(c).map_err(|e| Error::Input(e.to_string()));
        if let Some(c) = f.cartan {
            return Ok(MatrixSource::Cartan(cartan(c)?));
        }
        if let Some(c) = f.averaged_from_cartan {
            return Ok(MatrixSource::Averaged(cartan(c)?));
        }
        let e = f.braiding_exponents_doubled.expect("one source present");
        BraidingMatrix::from_t_exponents(&e, Origin::Free).map_err(|e| Error::Input(e.to_string()))?;
        Ok(MatrixSource::Exponents(e))
    }

    pub fn to_value(&self) -> Value {
        match self {
            MatrixSource::Cartan(c) => json!({ "cartan": c.rows() }),
            MatrixSource::Averaged(c) => json!({ "averaged_from_cartan": c.rows() }),
            MatrixSource::Exponents(e) => json!({ "braiding_exponents_doubled": e }),
        }
    }

    pub fn braiding(&self) -> BraidingMatrix {
        match self {
            MatrixSource::Cartan(c) => c.braiding(BraidingSide::Negative),
            MatrixSource::Averaged(c) => average(c).braiding(BraidingSide::Negative),
            MatrixSource::Exponents(e) => BraidingMatrix::from_t_exponents(e, Origin::Free).expect("validated"),
        }
    }

    pub fn cartan(&self) -> Option<&CartanMatrix> {
        match self {
            MatrixSource::Cartan(c) | MatrixSource::Averaged(c) => Some(c),
            MatrixSource::Exponents(_) => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    word: Vec<usize>,
    coeff: String,
}

pub fn tensor_to_value(x: &TensorElement) -> Value {
    let terms: Vec<TermJson> =
        x.terms().map(|(w, c)| TermJson { word: w.to_usize(), coeff: c.to_string() }).collect();
    serde_json::to_value(terms).expect("serializable")
}

pub fn tensor_from_value(v: &Value) -> Result<TensorElement> {
    let terms: Vec<TermJson> =
        serde_json::from_value(v.clone()).map_err(|e| Error::Input(format!("tensor element JSON: {e}")))?;
    let mut x = TensorElement::zero();
    for t in terms {
        let w = Word::new(&t.word)?;
        let c: Scalar = t.coeff.parse()?;
        x.add_term(w, c);
    }
    Ok(x)
}

pub fn tensor_from_json(text: &str) -> Result<TensorElement> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Input(format!("tensor element JSON: {e}")))?;
    tensor_from_value(&v)
}

pub fn classical_to_value(x: &ClassicalElement) -> Value {
    Value::Array(
        x.terms()
            .map(|(w, c)| json!({ "f": w.f, "h": w.h, "coeff": c.to_string() }))
            .collect(),
    )
}

pub fn block_to_value(b: &BlockRelations) -> Value {
    let mut v = json!({
        "multidegree": b.multidegree.counts(),
        "relations": b.relations.iter().map(tensor_to_value).collect::<Vec<_>>(),
    });
    if !b.witnesses.is_empty() {
        v["witnesses"] = Value::Array(b.witnesses.iter().map(tensor_to_value).collect());
    }
    v
}

/// Header fields shared by the streamed and whole-table forms.
pub fn table_header(matrix: &MatrixSource, set: &RelationSet) -> Value {
    json!({
        "matrix": matrix.to_value(),
        "degree": set.degree,
        "side": set.side.to_string(),
        "kind": set.kind.to_string(),
    })
}

pub fn table_to_value(matrix: &MatrixSource, set: &RelationSet) -> Value {
    let mut v = table_header(matrix, set);
    v["blocks"] = Value::Array(set.blocks.iter().map(block_to_value).collect());
    v
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableJson {
    matrix: Value,
    degree: usize,
    side: String,
    #[serde(default)]
    kind: Option<String>,
    blocks: Vec<BlockJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockJson {
    multidegree: Vec<usize>,
    relations: Vec<Value>,
    #[serde(default)]
    witnesses: Vec<Value>,
}

/// Reads a relation table and re-verifies it: every relation is killed by `T_n` (`U_n`
/// on the left) and pre-relations match their witnesses.
pub fn table_from_json(text: &str) -> Result<(MatrixSource, RelationSet)> {
    let t: TableJson = serde_json::from_str(text).map_err(|e| Error::Input(format!("relation table JSON: {e}")))?;
    let matrix = MatrixSource::from_value(&t.matrix)?;
    let a = matrix.braiding();
    let side: Side = t.side.parse()?;
    let kind = match t.kind.as_deref() {
        None | Some("prerelation") => Kind::Prerelation,
        Some("constant") => Kind::Constant,
        Some("degree2") => Kind::Degree2,
        Some(other) => return Err(Error::Input(format!("unknown relation kind {other:?}"))),
    };
    if t.degree < 2 || t.degree > 16 {
        return Err(Error::Input(format!("relation degree {} outside 2..=16", t.degree)));
    }
    let n = t.degree;
    let annihilator = make_operator(if side == Side::Right { OperatorName::Tn } else { OperatorName::Un }, n)?;
    let dynkin = make_operator(if side == Side::Right { OperatorName::Pn } else { OperatorName::Qn }, n)?;
    let mut blocks = Vec::new();
    for bj in t.blocks {
        if bj.multidegree.len() != a.n_letters() || bj.multidegree.iter().sum::<usize>() != n {
            return Err(Error::Input(format!("multidegree {:?} does not fit degree {n}", bj.multidegree)));
        }
        let md = Multidegree(bj.multidegree);
        let b = block(&md);
        let relations: Vec<TensorElement> = bj.relations.iter().map(tensor_from_value).collect::<Result<_>>()?;
        let witnesses: Vec<TensorElement> = bj.witnesses.iter().map(tensor_from_value).collect::<Result<_>>()?;
        for x in relations.iter().chain(&witnesses) {
            x.check_letters(a.n_letters())?;
            for (w, _) in x.terms() {
                if multidegree(a.n_letters(), w)? != md {
                    return Err(Error::Input(format!("word {w:?} lies outside block {md:?}")));
                }
            }
        }
        for x in &relations {
            if !apply_operator(&a, &annihilator, x)?.is_zero() {
                return Err(Error::Verification(format!("relation in block {md:?} is not annihilated")));
            }
        }
        if kind == Kind::Prerelation && !witnesses.is_empty() {
            if witnesses.len() != relations.len() {
                return Err(Error::Input(format!("block {md:?} has mismatched witness count")));
            }
            for (x, w) in relations.iter().zip(&witnesses) {
                if &apply_operator(&a, &dynkin, w)? != x {
                    return Err(Error::Verification(format!("witness in block {md:?} does not reproduce its relation")));
                }
            }
        }
        let coords: Vec<Vec<Scalar>> = relations.iter().map(|x| b.coordinates(x)).collect::<Result<_>>()?;
        let subspace = Subspace::span(b.dim(), coords)?;
        blocks.push(BlockRelations { multidegree: md, subspace, relations, witnesses });
    }
    blocks.sort_by(|x, y| x.multidegree.cmp(&y.multidegree));
    Ok((matrix, RelationSet { side, kind, degree: n, blocks }))
}
