use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use superalg::jordan::{
    jordan_bilinear, jordan_hamiltonian_odd, jordan_matrix, JordanJson, JordanSuperAlgebra, MatrixKind,
};
use superalg::liealg::{AlgebraJson, LieSuperAlgebra, Series};
use superalg::scalars::{ContextJson, SuperPolynomial, TermJson};
use superalg::supermatrix::BlockSignature;

use crate::report::{sha256_hex, Failure, Provenance};

pub fn read_doc<T: DeserializeOwned>(path: &Path, prov: &mut Provenance) -> Result<T, Failure> {
    let bytes =
        std::fs::read(path).map_err(|e| Failure::invalid(format!("cannot read {}: {e}", path.display())))?;
    prov.inputs.push((path.display().to_string(), sha256_hex(&bytes)));
    serde_json::from_slice(&bytes).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

pub fn series(params: &str) -> Result<LieSuperAlgebra, Failure> {
    let s: Series = params.parse()?;
    Ok(s.build()?)
}

/// `Mat(m|n)`, `Q(n)`, `OSp(m|2n)`, `Pe(n)`, `Q(m|2n)` for the bilinear
/// construction and `HK(m)` for the odd Hamiltonian one.
pub fn jordan(params: &str) -> Result<JordanSuperAlgebra, Failure> {
    let p = params.trim();
    let bad = || Failure::invalid(format!("cannot parse Jordan kind {p:?}"));
    if let Some(inner) = p.strip_prefix("HK(").and_then(|r| r.strip_suffix(')')) {
        let m = inner.rsplit('|').next().and_then(|t| t.trim().parse().ok()).ok_or_else(bad)?;
        return Ok(jordan_hamiltonian_odd(m)?);
    }
    if let Some(inner) = p.strip_prefix("Q(").and_then(|r| r.strip_suffix(')')) {
        if let Some((m, k)) = inner.split_once('|') {
            let m: usize = m.trim().parse().map_err(|_| bad())?;
            let k: usize = k.trim().parse().map_err(|_| bad())?;
            if k % 2 == 1 {
                return Err(bad());
            }
            return Ok(jordan_bilinear(m, k / 2)?);
        }
    }
    let kind: MatrixKind = p.parse()?;
    Ok(jordan_matrix(kind)?)
}

pub fn signature(params: &str) -> Result<BlockSignature, Failure> {
    let bad = || Failure::invalid(format!("expected a signature (m|n), got {params:?}"));
    let inner = params.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
    let (m, n) = inner.split_once('|').ok_or_else(bad)?;
    Ok(BlockSignature::new(m.trim().parse().map_err(|_| bad())?, n.trim().parse().map_err(|_| bad())?))
}

pub fn algebra_from(doc: &AlgebraJson) -> Result<LieSuperAlgebra, Failure> {
    Ok(LieSuperAlgebra::from_json(doc)?)
}

pub fn jordan_from(doc: &JordanJson) -> Result<JordanSuperAlgebra, Failure> {
    Ok(JordanSuperAlgebra::from_json(doc)?)
}

/// A graded algebra together with an element of it.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraWithElement {
    pub algebra: AlgebraJson,
    pub p: Vec<String>,
}

/// Four Λ-points of a quadratic space.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadricJson {
    pub context: ContextJson,
    pub signature: [usize; 2],
    /// Gram matrix; defaults to the identity on the even part and `J` on
    /// the odd part.
    #[serde(default)]
    pub gram: Option<Vec<Vec<String>>>,
    pub points: Vec<Vec<Vec<TermJson>>>,
}

pub type Point = Vec<SuperPolynomial>;
