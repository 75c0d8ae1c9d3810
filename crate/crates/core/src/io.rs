//! File formats and list parsing used by the command-line front end.
//!
//! - link: `{"components": k, "coloring": [1-based colors], "linking": k×k integers}`
//! - Seifert matrix: a bare integer matrix, or `{"matrix": ...}`
//! - C-complex: `{"colors": n, "matrices": {"+-": ..., ...}}`
//! - signature source: `{"seifert": ...}`, `{"ccomplex": ...}` or
//!   `{"table": [{"omega": ["1/3", ...], "sigma": -2}, ...]}`
//! - Lagrangian triple: `{"lagrangians": [L1, L2, L3], "omega": optional form}`
//!   with entries `"re,im"` and each `L` a list of basis vectors

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::field::Mat;
use crate::hermitian::{GaussianRational, Lagrangian, SymplecticSpace};
use crate::link::{ColoredRep, Framing};
use crate::signatures::{CComplexData, SeifertMatrix};
use crate::{Error, Rational, RationalAngle, Result};

pub fn read_json<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Serializes through `serde_json::Value`, so object keys come out sorted
/// and re-serializing parsed output reproduces it byte for byte.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report types serialize");
    serde_json::to_string_pretty(&v).expect("values serialize")
}

/// Comma-separated rationals, e.g. `"5,−2/3"`.
pub fn parse_rationals(list: &str) -> Result<Vec<Rational>> {
    list.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect()
}

pub fn parse_framing(list: &str) -> Result<Framing> {
    Ok(Framing::new(parse_rationals(list)?))
}

pub fn parse_rep(list: &str) -> Result<ColoredRep> {
    Ok(ColoredRep::new(parse_rationals(list)?.into_iter().map(RationalAngle::new).collect()))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SeifertRepr {
    Bare(SeifertMatrix),
    Wrapped { matrix: SeifertMatrix },
}

pub fn parse_seifert(text: &str) -> Result<SeifertMatrix> {
    match serde_json::from_str::<SeifertRepr>(text) {
        Ok(SeifertRepr::Bare(a)) | Ok(SeifertRepr::Wrapped { matrix: a }) => Ok(a),
        Err(e) => Err(Error::Parse(format!("Seifert matrix: {e}"))),
    }
}

pub fn read_seifert(path: impl AsRef<Path>) -> Result<SeifertMatrix> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_seifert(&text)
}

pub fn read_ccomplex(path: impl AsRef<Path>) -> Result<CComplexData> {
    read_json(path)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LagrangianFile {
    pub lagrangians: Vec<Mat<GaussianRational>>,
    #[serde(default)]
    pub omega: Option<Mat<GaussianRational>>,
}

impl LagrangianFile {
    /// The ambient space (standard unless a form is given) and the validated subspaces.
    pub fn build(&self) -> Result<(SymplecticSpace, Vec<Lagrangian>)> {
        let space = match &self.omega {
            Some(form) => SymplecticSpace::new(form.clone())?,
            None => {
                let dim = self
                    .lagrangians
                    .iter()
                    .flatten()
                    .map(Vec::len)
                    .next()
                    .ok_or_else(|| Error::Parse("no vectors given".into()))?;
                if dim % 2 != 0 {
                    return Err(Error::NotSymplectic(format!("odd dimension {dim}")));
                }
                SymplecticSpace::standard(dim / 2)
            }
        };
        let ls = self
            .lagrangians
            .iter()
            .map(|b| Lagrangian::new(&space, b.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok((space, ls))
    }
}
