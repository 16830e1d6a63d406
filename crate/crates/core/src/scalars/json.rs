//! Serialized forms: a term list `{"even":[..],"odd":[..],"c":"num/den"}`
//! plus a context header carrying the variable counts and names.

use serde::{Deserialize, Serialize};

use super::{format_rational, parse_rational, Monomial, SuperPolynomial, VariableContext};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub even: Vec<u16>,
    pub odd: Vec<usize>,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextJson {
    pub even: usize,
    pub odd: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub even_names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odd_names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub context: ContextJson,
    pub terms: Vec<TermJson>,
}

impl ContextJson {
    pub fn from_context(ctx: &VariableContext) -> Self {
        Self {
            even: ctx.even_count(),
            odd: ctx.odd_count(),
            even_names: ctx.even_names().map(<[String]>::to_vec),
            odd_names: ctx.odd_names().map(<[String]>::to_vec),
            degree_cap: (ctx.degree_cap() != super::DEFAULT_DEGREE_CAP).then_some(ctx.degree_cap()),
        }
    }

    pub fn to_context(&self) -> Result<VariableContext> {
        VariableContext::build(
            self.even,
            self.odd,
            self.even_names.clone(),
            self.odd_names.clone(),
            self.degree_cap.unwrap_or(super::DEFAULT_DEGREE_CAP),
        )
    }
}

impl SuperPolynomial {
    pub fn to_term_list(&self) -> Vec<TermJson> {
        self.terms()
            .map(|(m, c)| TermJson {
                even: m.even_exponents().to_vec(),
                odd: m.odd_indices(),
                c: format_rational(c),
            })
            .collect()
    }

    /// Parses a term list. Odd indices must be strictly increasing so that
    /// the serialized form is canonical.
    pub fn from_term_list(ctx: &VariableContext, terms: &[TermJson]) -> Result<Self> {
        let mut parsed = Vec::with_capacity(terms.len());
        for t in terms {
            if t.odd.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidInput(format!(
                    "odd indices must be strictly increasing: {:?}",
                    t.odd
                )));
            }
            if let Some(&i) = t.odd.iter().find(|&&i| i >= ctx.odd_count()) {
                return Err(Error::InvalidInput(format!("odd index {i} out of range")));
            }
            let (m, _) = Monomial::from_odd_indices(t.even.clone(), &t.odd)
                .expect("strictly increasing indices are distinct");
            parsed.push((m, parse_rational(&t.c)?));
        }
        Self::from_terms(ctx, parsed)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson { context: ContextJson::from_context(self.context()), terms: self.to_term_list() }
    }

    pub fn from_json(doc: &PolyJson) -> Result<Self> {
        let ctx = doc.context.to_context()?;
        Self::from_term_list(&ctx, &doc.terms)
    }
}
