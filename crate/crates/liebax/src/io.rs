//! JSON file formats.
//!
//! Scalars serialize as strings `"p/q"` or `"p"`; quadratic scalars as
//! `{"a": "p/q", "b": "p/q", "d": int}`. Algebra files carry the dimension,
//! optional basis names, sparse brackets for pairs `i < j` (1-based), and a
//! field descriptor. Matrices and tensors are dense row-major arrays.
//! Emitted files round-trip bit-exactly.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bialg::ClassificationReport;
use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::liealg::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalars::{Quad, Rat, Scalar};

/// One scalar as it appears in a file.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Str(String),
    Quad { a: String, b: String, d: i64 },
}

/// The scalar field a file's entries live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldRepr {
    Q,
    QuadExt { d: i64 },
}

fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Conversion between scalars and their file representation, in the context
/// of a field descriptor.
pub trait ScalarCodec: Scalar {
    /// The field descriptor matching this scalar type over discriminant d.
    fn field_repr(ambient: Option<i64>) -> FieldRepr;
    fn from_repr(repr: &ScalarRepr, ambient: Option<i64>) -> Result<Self>;
    fn to_repr(&self) -> ScalarRepr;
}

impl ScalarCodec for Rat {
    fn field_repr(_ambient: Option<i64>) -> FieldRepr {
        FieldRepr::Q
    }

    fn from_repr(repr: &ScalarRepr, _ambient: Option<i64>) -> Result<Self> {
        match repr {
            ScalarRepr::Str(s) => parse_rat(s),
            ScalarRepr::Quad { .. } => Err(Error::Parse(
                "quadratic scalar in a rational context".into(),
            )),
        }
    }

    fn to_repr(&self) -> ScalarRepr {
        ScalarRepr::Str(self.to_string())
    }
}

impl ScalarCodec for Quad {
    fn field_repr(ambient: Option<i64>) -> FieldRepr {
        FieldRepr::QuadExt {
            d: ambient.unwrap_or(1),
        }
    }

    fn from_repr(repr: &ScalarRepr, ambient: Option<i64>) -> Result<Self> {
        match repr {
            ScalarRepr::Str(s) => {
                let a = parse_rat(s)?;
                Ok(match ambient {
                    Some(d) => Quad::embed(a, d),
                    None => Quad::from_rat(a),
                })
            }
            ScalarRepr::Quad { a, b, d } => {
                let tag = crate::scalars::squarefree_tag(*d);
                if let Some(amb) = ambient {
                    if tag != amb && tag != 1 {
                        return Err(Error::Parse(format!(
                            "scalar in Q(sqrt({d})) but the file declares Q(sqrt({amb}))"
                        )));
                    }
                }
                let q = Quad::new(parse_rat(a)?, parse_rat(b)?, *d);
                Ok(match ambient {
                    // rational values adopt the file's ambient tag
                    Some(amb) if q.is_rational() => Quad::embed(q.rational_part().clone(), amb),
                    _ => q,
                })
            }
        }
    }

    fn to_repr(&self) -> ScalarRepr {
        if self.is_rational() {
            ScalarRepr::Str(self.rational_part().to_string())
        } else {
            ScalarRepr::Quad {
                a: self.rational_part().to_string(),
                b: self.radical_part().to_string(),
                d: self.discriminant(),
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<ScalarRepr>,
}

#[derive(Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub brackets: Vec<BracketEntry>,
    pub field: FieldRepr,
}

#[derive(Serialize, Deserialize)]
pub struct MatrixFile {
    pub matrix: Vec<Vec<ScalarRepr>>,
}

#[derive(Serialize, Deserialize)]
pub struct TensorFile {
    pub coeffs: Vec<Vec<ScalarRepr>>,
}

/// Ambient discriminant named by a field descriptor, if any.
pub fn ambient_of(field: &FieldRepr) -> Option<i64> {
    match field {
        FieldRepr::Q => None,
        FieldRepr::QuadExt { d } => Some(*d),
    }
}

/// Field descriptor of an algebra file without fully parsing it.
pub fn peek_field(json: &str) -> Result<FieldRepr> {
    let file: AlgebraFile =
        serde_json::from_str(json).map_err(|e| Error::Parse(format!("algebra file: {e}")))?;
    Ok(file.field)
}

/// Parse an algebra file. Bracket entries use 1-based indices with `i < j`;
/// unlisted pairs are zero, and `i >= j` entries are rejected since
/// antisymmetry is implied.
pub fn parse_algebra<S: ScalarCodec>(json: &str) -> Result<LieAlgebra<S>> {
    let file: AlgebraFile =
        serde_json::from_str(json).map_err(|e| Error::Parse(format!("algebra file: {e}")))?;
    let ambient = ambient_of(&file.field);
    let n = file.dim;
    if n == 0 {
        return Err(Error::Parse("algebra dimension must be positive".into()));
    }
    if let Some(names) = &file.basis {
        if names.len() != n {
            return Err(Error::Parse(format!(
                "expected {n} basis names, found {}",
                names.len()
            )));
        }
    }
    let mut entries = Vec::with_capacity(file.brackets.len());
    for entry in &file.brackets {
        if entry.i == 0 || entry.j == 0 || entry.i > n || entry.j > n {
            return Err(Error::Parse(format!(
                "bracket indices ({}, {}) out of range 1..={n}",
                entry.i, entry.j
            )));
        }
        if entry.i >= entry.j {
            return Err(Error::Parse(format!(
                "bracket pair ({}, {}) rejected: antisymmetry is implied, list only i < j",
                entry.i, entry.j
            )));
        }
        if entry.coeffs.len() != n {
            return Err(Error::Parse(format!(
                "bracket ({}, {}) has {} coefficients, expected {n}",
                entry.i,
                entry.j,
                entry.coeffs.len()
            )));
        }
        let coeffs = entry
            .coeffs
            .iter()
            .map(|c| S::from_repr(c, ambient))
            .collect::<Result<Vec<S>>>()?;
        entries.push((entry.i - 1, entry.j - 1, coeffs));
    }
    LieAlgebra::from_brackets(n, file.basis.clone(), &entries)
        .map_err(|e| Error::Parse(e.to_string()))
}

/// Emit an algebra file; only nonzero brackets with `i < j` are listed.
pub fn emit_algebra<S: ScalarCodec>(alg: &LieAlgebra<S>, ambient: Option<i64>) -> AlgebraFile {
    let n = alg.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let v = alg.bracket_basis(i, j);
            if v.iter().any(|c| !c.is_zero()) {
                brackets.push(BracketEntry {
                    i: i + 1,
                    j: j + 1,
                    coeffs: v.iter().map(ScalarCodec::to_repr).collect(),
                });
            }
        }
    }
    AlgebraFile {
        dim: n,
        basis: alg.basis_names().map(<[String]>::to_vec),
        brackets,
        field: S::field_repr(ambient),
    }
}

fn parse_grid<S: ScalarCodec>(
    rows: &[Vec<ScalarRepr>],
    ambient: Option<i64>,
    what: &str,
) -> Result<Matrix<S>> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!(
            "{what} must be a nonempty square array"
        )));
    }
    let mut m = Matrix::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            m.set(i, j, S::from_repr(c, ambient)?);
        }
    }
    Ok(m)
}

pub fn parse_matrix<S: ScalarCodec>(json: &str, ambient: Option<i64>) -> Result<Matrix<S>> {
    let file: MatrixFile =
        serde_json::from_str(json).map_err(|e| Error::Parse(format!("matrix file: {e}")))?;
    parse_grid(&file.matrix, ambient, "matrix")
}

pub fn parse_tensor<S: ScalarCodec>(json: &str, ambient: Option<i64>) -> Result<Matrix<S>> {
    let file: TensorFile =
        serde_json::from_str(json).map_err(|e| Error::Parse(format!("tensor file: {e}")))?;
    parse_grid(&file.coeffs, ambient, "tensor")
}

pub fn matrix_repr<S: ScalarCodec>(m: &Matrix<S>) -> Vec<Vec<ScalarRepr>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ScalarCodec::to_repr).collect())
        .collect()
}

pub fn emit_matrix<S: ScalarCodec>(m: &Matrix<S>) -> MatrixFile {
    MatrixFile {
        matrix: matrix_repr(m),
    }
}

pub fn emit_tensor<S: ScalarCodec>(m: &Matrix<S>) -> TensorFile {
    TensorFile {
        coeffs: matrix_repr(m),
    }
}

pub fn parse_form<S: ScalarCodec>(json: &str, ambient: Option<i64>) -> Result<BilinearForm<S>> {
    BilinearForm::new(parse_matrix(json, ambient)?)
}

/// Structured rendering of a classification report.
pub fn report_to_json<S: ScalarCodec>(report: &ClassificationReport<S>) -> serde_json::Value {
    let mut residuals = serde_json::Map::new();
    let d = &report.diagnostics;
    if let Some(v) = d.theta_nonzero {
        residuals.insert("theta_nonzero_pairs".into(), v.into());
    }
    if let Some(v) = d.cybe_nonzero {
        residuals.insert("cybe_nonzero_entries".into(), v.into());
    }
    if let Some(v) = d.symmetric_part_invariant {
        residuals.insert("symmetric_part_invariant".into(), v.into());
    }
    if let Some(v) = d.symmetric_part_nondegenerate {
        residuals.insert("symmetric_part_nondegenerate".into(), v.into());
    }
    if let Some(v) = d.dual_jacobi {
        residuals.insert("dual_jacobi".into(), v.into());
    }
    if let Some(v) = d.reverified_over_extension {
        residuals.insert("reverified_over_extension".into(), v.into());
    }
    if !d.notes.is_empty() {
        residuals.insert("notes".into(), d.notes.clone().into());
    }
    let matrix_value = |m: &Vec<Vec<ScalarRepr>>| serde_json::to_value(m).expect("scalar json");
    let mut out = serde_json::Map::new();
    out.insert("verdict".into(), report.verdict.as_str().into());
    if let Some(nu) = &report.nu {
        out.insert("nu".into(), matrix_value(&matrix_repr(nu)));
    }
    if let Some(mu) = &report.mu {
        out.insert("mu".into(), matrix_value(&matrix_repr(mu)));
    }
    if let Some(mu) = &report.mu_extension {
        out.insert("mu".into(), matrix_value(&matrix_repr(mu)));
    }
    if let Some(d) = report.extension_d {
        out.insert("extension_d".into(), d.into());
    }
    out.insert("residuals".into(), serde_json::Value::Object(residuals));
    serde_json::Value::Object(out)
}
