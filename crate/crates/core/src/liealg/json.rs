//! `{"name":…,"basis":[{"name","parity","degree"}…],"brackets":[{"i","j","coeffs":{"k":"num/den"}}…]}`

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::LieSuperAlgebra;
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::scalars::{format_rational, parse_rational, Parity};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisJson {
    pub name: String,
    pub parity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    #[serde(default)]
    pub name: String,
    pub basis: Vec<BasisJson>,
    pub brackets: Vec<BracketJson>,
}

pub(crate) fn basis_to_json(
    names: &[String],
    parities: &[Parity],
    degrees: Option<&[i32]>,
) -> Vec<BasisJson> {
    names
        .iter()
        .enumerate()
        .map(|(i, n)| BasisJson {
            name: n.clone(),
            parity: parities[i].as_str().into(),
            degree: degrees.map(|d| d[i]),
        })
        .collect()
}

pub(crate) type BasisMeta = (Vec<String>, Vec<Parity>, Option<Vec<i32>>);

pub(crate) fn basis_from_json(basis: &[BasisJson]) -> Result<BasisMeta> {
    let names: Vec<String> = basis.iter().map(|b| b.name.clone()).collect();
    let parities = basis.iter().map(|b| Parity::parse(&b.parity)).collect::<Result<_>>()?;
    let degrees = match basis.iter().filter(|b| b.degree.is_some()).count() {
        0 => None,
        n if n == basis.len() => Some(basis.iter().map(|b| b.degree.unwrap_or(0)).collect()),
        _ => return Err(Error::InvalidInput("degrees must be given for all or no basis elements".into())),
    };
    Ok((names, parities, degrees))
}

pub(crate) fn coeffs_to_json(v: &SparseVec<usize>) -> BTreeMap<String, String> {
    v.iter().map(|(k, c)| (k.to_string(), format_rational(c))).collect()
}

pub(crate) fn coeffs_from_json(coeffs: &BTreeMap<String, String>) -> Result<SparseVec<usize>> {
    coeffs
        .iter()
        .map(|(k, c)| {
            let k = k
                .parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("coefficient key {k:?} is not an index")))?;
            Ok((k, parse_rational(c)?))
        })
        .collect()
}

impl LieSuperAlgebra {
    /// Serializes every nonzero ordered bracket `[e_i, e_j]`.
    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson {
            name: self.name.clone(),
            basis: basis_to_json(&self.names, &self.parities, self.degrees()),
            brackets: self
                .brackets()
                .map(|((i, j), v)| BracketJson { i, j, coeffs: coeffs_to_json(v) })
                .collect(),
        }
    }

    /// Reads a table verbatim. Axioms are not checked here.
    pub fn from_json(doc: &AlgebraJson) -> Result<Self> {
        let (names, parities, degrees) = basis_from_json(&doc.basis)?;
        let mut brackets = BTreeMap::new();
        for b in &doc.brackets {
            if brackets.insert((b.i, b.j), coeffs_from_json(&b.coeffs)?).is_some() {
                return Err(Error::InvalidInput(format!("bracket ({}, {}) given twice", b.i, b.j)));
            }
        }
        Self::from_table(doc.name.clone(), names, parities, degrees, brackets)
    }
}
