//! `{"context":…,"rows":[m,n],"cols":[p,q],"parity":"even","entries":[[terms,…],…]}`

use serde::{Deserialize, Serialize};

use super::{BlockSignature, SuperMatrix};
use crate::error::{Error, Result};
use crate::scalars::{ContextJson, Parity, SuperPolynomial, TermJson, VariableContext};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub context: ContextJson,
    pub rows: [usize; 2],
    pub cols: [usize; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<String>,
    pub entries: Vec<Vec<Vec<TermJson>>>,
}

impl SuperMatrix {
    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            context: ContextJson::from_context(&self.ctx),
            rows: [self.rows.even, self.rows.odd],
            cols: [self.cols.even, self.cols.odd],
            parity: self.declared.map(|p| p.as_str().to_string()),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(SuperPolynomial::to_term_list).collect())
                .collect(),
        }
    }

    pub fn from_json(doc: &MatrixJson) -> Result<Self> {
        let ctx = doc.context.to_context()?;
        Self::from_json_in(&ctx, doc)
    }

    /// Reads the matrix into an existing context, which must have the same
    /// variable counts as the document header.
    pub fn from_json_in(ctx: &VariableContext, doc: &MatrixJson) -> Result<Self> {
        if doc.context.even != ctx.even_count() || doc.context.odd != ctx.odd_count() {
            return Err(Error::ContextMismatch(
                "matrix document context differs from the shared context".into(),
            ));
        }
        let rows = BlockSignature::new(doc.rows[0], doc.rows[1]);
        let cols = BlockSignature::new(doc.cols[0], doc.cols[1]);
        let parity = doc.parity.as_deref().map(Parity::parse).transpose()?;
        let entries = doc
            .entries
            .iter()
            .map(|r| r.iter().map(|t| SuperPolynomial::from_term_list(ctx, t)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Self::new(ctx, rows, cols, entries, parity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let ctx = VariableContext::grassmann(2);
        let t1 = SuperPolynomial::odd_var(&ctx, 0);
        let t2 = SuperPolynomial::odd_var(&ctx, 1);
        let one = SuperPolynomial::one(&ctx);
        let sig = BlockSignature::new(1, 1);
        let m =
            SuperMatrix::new(&ctx, sig, sig, vec![vec![one.clone(), t1], vec![t2, one]], Some(Parity::Even))
                .unwrap();
        let text = serde_json::to_string(&m.to_json()).unwrap();
        assert!(text.contains("\"rows\":[1,1]"));
        let back: MatrixJson = serde_json::from_str(&text).unwrap();
        assert_eq!(SuperMatrix::from_json(&back).unwrap(), m);
    }

    #[test]
    fn rejects_wrong_parity() {
        let text = r#"{"context":{"even":0,"odd":1},"rows":[1,1],"cols":[1,1],"parity":"odd",
            "entries":[[[{"even":[],"odd":[],"c":"1"}],[]],[[],[]]]}"#;
        let doc: MatrixJson = serde_json::from_str(text).unwrap();
        assert!(SuperMatrix::from_json(&doc).is_err());
    }
}
