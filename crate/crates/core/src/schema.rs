//! JSON file formats for algebras, pairs and cubic elements.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::kostant::{Decomposition, PairData};
use crate::liesuper::SuperLie;
use crate::linalg::{zero_vector, Matrix};
use crate::multilinear::{ExtElem, ExtTermRecord};
use crate::scalar::Scalar;
use crate::space::{GramForm, QuadSpace, SuperSpace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub z: String,
    pub c: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketRecord {
    pub x: String,
    pub y: String,
    pub value: Vec<TermRecord>,
}

/// A Lie superalgebra file. Brackets not listed are zero; a bracket given
/// only as `[x, y]` determines `[y, x]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieFile {
    pub name: String,
    #[serde(default)]
    pub even_basis: Vec<String>,
    #[serde(default)]
    pub odd_basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram_even: Option<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram_odd: Option<Vec<Vec<Scalar>>>,
    #[serde(default)]
    pub brackets: Vec<BracketRecord>,
}

/// A graded space with a form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub even_basis: Vec<String>,
    #[serde(default)]
    pub odd_basis: Vec<String>,
    #[serde(default)]
    pub gram_even: Vec<Vec<Scalar>>,
    #[serde(default)]
    pub gram_odd: Vec<Vec<Scalar>>,
}

/// A pair given directly by `(r, p, ν, φ_p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitPairFile {
    pub r: LieFile,
    pub p: SpaceFile,
    #[serde(default)]
    pub nu: BTreeMap<String, Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi_p: Option<Vec<ExtTermRecord>>,
}

/// A pair given by a quadratic algebra and a subalgebra spanned by basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitPairFile {
    pub g: LieFile,
    pub r_span: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairFile {
    Explicit(ExplicitPairFile),
    Split(SplitPairFile),
}

/// A cubic element on a space with a form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubicFile {
    pub name: String,
    #[serde(default)]
    pub even_basis: Vec<String>,
    #[serde(default)]
    pub odd_basis: Vec<String>,
    #[serde(default)]
    pub gram_even: Vec<Vec<Scalar>>,
    #[serde(default)]
    pub gram_odd: Vec<Vec<Scalar>>,
    pub phi: Vec<ExtTermRecord>,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
}

fn matrix(rows: &[Vec<Scalar>], n: usize, what: &str) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!("{what} must be {n}x{n}")));
    }
    Matrix::from_rows(rows.to_vec())
}

fn rows(m: &Matrix) -> Vec<Vec<Scalar>> {
    m.to_rows()
}

impl LieFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(parse_err)
    }

    pub fn space(&self) -> Result<SuperSpace> {
        SuperSpace::new(&self.name, &self.even_basis, &self.odd_basis)
    }

    pub fn form(&self, space: &SuperSpace) -> Result<Option<GramForm>> {
        if self.gram_even.is_none() && self.gram_odd.is_none() {
            return Ok(None);
        }
        let even = matrix(self.gram_even.as_deref().unwrap_or(&[]), space.even_dim(), "gram_even")?;
        let odd = matrix(self.gram_odd.as_deref().unwrap_or(&[]), space.odd_dim(), "gram_odd")?;
        Ok(Some(GramForm::new(even, odd)))
    }

    pub fn to_lie(&self) -> Result<SuperLie> {
        let space = self.space()?;
        let form = self.form(&space)?;
        let n = space.dim();
        let mut brackets = BTreeMap::new();
        for b in &self.brackets {
            let i = space.index_of(&b.x)?;
            let j = space.index_of(&b.y)?;
            let mut v = zero_vector(n);
            for t in &b.value {
                let k = space.index_of(&t.z)?;
                v[k] += &t.c;
            }
            if brackets.insert((i, j), v).is_some() {
                return Err(Error::Input(format!("bracket [{}, {}] listed twice", b.x, b.y)));
            }
        }
        SuperLie::new(space, brackets, form)
    }

    /// Writes the nonzero brackets `[x_i, x_j]` with `i ≤ j`.
    pub fn from_lie(g: &SuperLie) -> Self {
        let sp = g.space();
        let brackets = g
            .nonzero_brackets()
            .into_iter()
            .filter(|((i, j), _)| i <= j)
            .map(|((i, j), v)| BracketRecord {
                x: sp.label(i).to_string(),
                y: sp.label(j).to_string(),
                value: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| TermRecord {
                        z: sp.label(k).to_string(),
                        c: c.clone(),
                    })
                    .collect(),
            })
            .collect();
        Self {
            name: sp.name().to_string(),
            even_basis: sp.even_labels(),
            odd_basis: sp.odd_labels(),
            gram_even: g.form().map(|f| rows(&f.even_block)),
            gram_odd: g.form().map(|f| rows(&f.odd_block)),
            brackets,
        }
    }
}

impl SpaceFile {
    pub fn to_quad(&self, default_name: &str) -> Result<Arc<QuadSpace>> {
        let space = SuperSpace::new(self.name.as_deref().unwrap_or(default_name), &self.even_basis, &self.odd_basis)?;
        let even = matrix(&self.gram_even, space.even_dim(), "gram_even")?;
        let odd = matrix(&self.gram_odd, space.odd_dim(), "gram_odd")?;
        Ok(Arc::new(QuadSpace::new(space, GramForm::new(even, odd))?))
    }
}

impl PairFile {
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(parse_err)?;
        let split = value.get("g").is_some();
        if split {
            serde_json::from_value(value).map(PairFile::Split)
        } else {
            serde_json::from_value(value).map(PairFile::Explicit)
        }
        .map_err(|e| Error::Parse(e.to_string()))
    }

    /// Loaded pair; for the split form also the decomposition it came from.
    pub fn load(&self) -> Result<(PairData, Option<Decomposition>)> {
        match self {
            PairFile::Explicit(f) => Ok((f.to_pair()?, None)),
            PairFile::Split(f) => {
                let d = Decomposition::new(&f.g.to_lie()?, &f.r_span)?;
                Ok((d.pair().clone(), Some(d)))
            }
        }
    }
}

impl ExplicitPairFile {
    pub fn to_pair(&self) -> Result<PairData> {
        let r = self.r.to_lie()?;
        let p = self.p.to_quad("p")?;
        let n = p.dim();
        let mut nu = vec![Matrix::zeros(n, n); r.dim()];
        for (label, m) in &self.nu {
            let i = r.space().index_of(label)?;
            nu[i] = matrix(m, n, &format!("nu[{label}]"))?;
        }
        let phi_p = match &self.phi_p {
            Some(records) => Some(ExtElem::from_records(&p, records)?),
            None => None,
        };
        PairData::new(r, p, nu, phi_p)
    }
}

impl CubicFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(parse_err)
    }

    pub fn to_phi(&self) -> Result<ExtElem> {
        let space = SuperSpace::new(&self.name, &self.even_basis, &self.odd_basis)?;
        let even = matrix(&self.gram_even, space.even_dim(), "gram_even")?;
        let odd = matrix(&self.gram_odd, space.odd_dim(), "gram_odd")?;
        let qs = Arc::new(QuadSpace::new(space, GramForm::new(even, odd))?);
        ExtElem::from_records(&qs, &self.phi)
    }

    pub fn from_phi(name: &str, phi: &ExtElem) -> Self {
        let qs = phi.space();
        Self {
            name: name.to_string(),
            even_basis: qs.space().even_labels(),
            odd_basis: qs.space().odd_labels(),
            gram_even: rows(&qs.form().even_block),
            gram_odd: rows(&qs.form().odd_block),
            phi: phi.to_records(),
        }
    }
}
