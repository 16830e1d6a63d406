//! Jordan tables in the Lie format with `"products"` for `"brackets"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::JordanSuperAlgebra;
use crate::error::{Error, Result};
use crate::liealg::json_support::{basis_from_json, basis_to_json, coeffs_from_json, coeffs_to_json};
use crate::liealg::{BasisJson, BracketJson};
use crate::scalars::{format_rational, parse_rational, Parity};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JordanJson {
    #[serde(default)]
    pub name: String,
    #[serde(default = "even", skip_serializing_if = "is_even")]
    pub product_parity: String,
    pub basis: Vec<BasisJson>,
    pub products: Vec<BracketJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
}

fn even() -> String {
    "even".into()
}

fn is_even(s: &String) -> bool {
    s == "even"
}

impl JordanSuperAlgebra {
    pub fn to_json(&self) -> JordanJson {
        JordanJson {
            name: self.name.clone(),
            product_parity: self.product_parity.as_str().into(),
            basis: basis_to_json(&self.names, &self.parities, None),
            products: self
                .products()
                .map(|((i, j), v)| BracketJson { i, j, coeffs: coeffs_to_json(v) })
                .collect(),
            unit: self.unit.as_ref().map(|u| u.iter().map(format_rational).collect()),
        }
    }

    pub fn from_json(doc: &JordanJson) -> Result<Self> {
        let (names, parities, degrees) = basis_from_json(&doc.basis)?;
        if degrees.is_some() {
            return Err(Error::InvalidInput("Jordan basis elements carry no degree".into()));
        }
        let mut products = BTreeMap::new();
        for b in &doc.products {
            if products.insert((b.i, b.j), coeffs_from_json(&b.coeffs)?).is_some() {
                return Err(Error::InvalidInput(format!("product ({}, {}) given twice", b.i, b.j)));
            }
        }
        let unit = doc
            .unit
            .as_ref()
            .map(|u| u.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>())
            .transpose()?;
        Self::from_table(
            doc.name.clone(),
            names,
            parities,
            Parity::parse(&doc.product_parity)?,
            products,
            unit,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::{jordan_hamiltonian_odd, jordan_matrix, MatrixKind};

    #[test]
    fn round_trip() {
        for j in [jordan_matrix(MatrixKind::Mat(1, 1)).unwrap(), jordan_hamiltonian_odd(2).unwrap()] {
            let text = serde_json::to_string(&j.to_json()).unwrap();
            let back = JordanSuperAlgebra::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(back, j);
        }
    }
}
