use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{ContextJson, Parity, SuperPolynomial, TermJson, Var, VariableContext};

/// A derivation `X = Σ_k X_k ∂_k` of a super-polynomial algebra. Components
/// are indexed by coordinate: even variables first, then odd ones.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyVectorField {
    ctx: VariableContext,
    components: Vec<SuperPolynomial>,
}

pub fn coordinate_count(ctx: &VariableContext) -> usize {
    ctx.even_count() + ctx.odd_count()
}

pub fn coordinate(ctx: &VariableContext, k: usize) -> Var {
    if k < ctx.even_count() {
        Var::Even(k)
    } else {
        Var::Odd(k - ctx.even_count())
    }
}

pub fn coordinate_index(ctx: &VariableContext, v: Var) -> usize {
    match v {
        Var::Even(i) => i,
        Var::Odd(i) => ctx.even_count() + i,
    }
}

impl PolyVectorField {
    pub fn new(ctx: &VariableContext, components: Vec<SuperPolynomial>) -> Result<Self> {
        if components.len() != coordinate_count(ctx) {
            return Err(Error::Shape(format!(
                "{} components for {} coordinates",
                components.len(),
                coordinate_count(ctx)
            )));
        }
        for c in &components {
            ctx.check_same(c.context())?;
        }
        Ok(Self { ctx: ctx.clone(), components })
    }

    pub fn zero(ctx: &VariableContext) -> Self {
        Self { ctx: ctx.clone(), components: vec![SuperPolynomial::zero(ctx); coordinate_count(ctx)] }
    }

    /// `f ∂_v`.
    pub fn monomial_field(f: SuperPolynomial, v: Var) -> Self {
        let ctx = f.context().clone();
        let mut x = Self::zero(&ctx);
        x.components[coordinate_index(&ctx, v)] = f;
        x
    }

    /// The constant field `∂_v`.
    pub fn partial(ctx: &VariableContext, v: Var) -> Self {
        Self::monomial_field(SuperPolynomial::one(ctx), v)
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn components(&self) -> &[SuperPolynomial] {
        &self.components
    }

    pub fn component(&self, v: Var) -> &SuperPolynomial {
        &self.components[coordinate_index(&self.ctx, v)]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(SuperPolynomial::is_zero)
    }

    /// Homogeneous parity: component `X_k` has parity `p(X) + p(z_k)`.
    pub fn parity(&self) -> Option<Parity> {
        let mut found = None;
        for (k, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = c.parity()? + coordinate(&self.ctx, k).parity();
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    pub fn parity_part(&self, p: Parity) -> Self {
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(k, c)| c.parity_part(p + coordinate(&self.ctx, k).parity()))
            .collect();
        Self { ctx: self.ctx.clone(), components }
    }

    /// `X(f) = Σ_k X_k ∂_k f`.
    pub fn apply(&self, f: &SuperPolynomial) -> Result<SuperPolynomial> {
        let mut out = SuperPolynomial::zero(&self.ctx);
        for (k, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = f.partial(coordinate(&self.ctx, k));
            if !d.is_zero() {
                out = out.checked_add(&c.checked_mul(&d)?)?;
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(Self { ctx: self.ctx.clone(), components })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&-crate::scalars::int(1)))
    }

    pub fn scale(&self, c: &crate::scalars::Rational) -> Self {
        Self { ctx: self.ctx.clone(), components: self.components.iter().map(|x| x.scale(c)).collect() }
    }

    /// Left multiplication by a function: `(fX)_k = f X_k`.
    pub fn scale_left(&self, f: &SuperPolynomial) -> Result<Self> {
        let components = self.components.iter().map(|x| f.checked_mul(x)).collect::<Result<_>>()?;
        Ok(Self { ctx: self.ctx.clone(), components })
    }

    /// `[X, Y] = X∘Y − (−1)^{p(X)p(Y)} Y∘X`, extended bilinearly over the
    /// parity components of inhomogeneous fields.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = Self::zero(&self.ctx);
        for p in [Parity::Even, Parity::Odd] {
            let x = self.parity_part(p);
            if x.is_zero() {
                continue;
            }
            for q in [Parity::Even, Parity::Odd] {
                let y = other.parity_part(q);
                if y.is_zero() {
                    continue;
                }
                for k in 0..self.components.len() {
                    let a = x.apply(&y.components[k])?;
                    let b = y.apply(&x.components[k])?;
                    let term = if p.koszul(q) { a.checked_add(&b)? } else { a.checked_sub(&b)? };
                    out.components[k] = out.components[k].checked_add(&term)?;
                }
            }
        }
        Ok(out)
    }

    /// Highest total degree among the components.
    pub fn degree(&self) -> u32 {
        self.components.iter().map(SuperPolynomial::degree).max().unwrap_or(0)
    }

    pub fn with_context(&self, ctx: &VariableContext) -> Result<Self> {
        let components = self.components.iter().map(|c| c.with_context(ctx)).collect::<Result<_>>()?;
        Self::new(ctx, components)
    }

    pub fn to_json(&self) -> FieldJson {
        FieldJson {
            context: ContextJson::from_context(&self.ctx),
            components: self.components.iter().map(SuperPolynomial::to_term_list).collect(),
        }
    }

    pub fn from_json(doc: &FieldJson) -> Result<Self> {
        let ctx = doc.context.to_context()?;
        let components =
            doc.components.iter().map(|t| SuperPolynomial::from_term_list(&ctx, t)).collect::<Result<_>>()?;
        Self::new(&ctx, components)
    }
}

/// `{"context":…,"components":[[term,…],…]}`, one term list per coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldJson {
    pub context: ContextJson,
    pub components: Vec<Vec<TermJson>>,
}

impl fmt::Display for PolyVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = match coordinate(&self.ctx, k) {
                Var::Even(i) => self.ctx.even_name(i),
                Var::Odd(i) => self.ctx.odd_name(i),
            };
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})∂_{name}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyVectorField({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    #[test]
    fn bracket_examples() {
        let ctx = VariableContext::new(1, 1).unwrap();
        let x = SuperPolynomial::even_var(&ctx, 0);
        let t = SuperPolynomial::odd_var(&ctx, 0);
        let dx = PolyVectorField::partial(&ctx, Var::Even(0));
        let xdx = PolyVectorField::monomial_field(x, Var::Even(0));
        assert_eq!(dx.bracket(&xdx).unwrap(), dx);
        let dt = PolyVectorField::partial(&ctx, Var::Odd(0));
        let tdt = PolyVectorField::monomial_field(t, Var::Odd(0));
        assert_eq!(dt.bracket(&tdt).unwrap(), dt);
        assert!(xdx.bracket(&xdx).unwrap().is_zero());
        assert_eq!(dt.parity(), Some(Parity::Odd));
        assert_eq!(tdt.parity(), Some(Parity::Even));
        assert_eq!(dt.scale(&int(2)).apply(&SuperPolynomial::odd_var(&ctx, 0)).unwrap().body(), int(2));
    }

    #[test]
    fn json_round_trip() {
        let ctx = VariableContext::grassmann(3);
        let f = &SuperPolynomial::odd_var(&ctx, 0) * &SuperPolynomial::odd_var(&ctx, 1);
        let x = PolyVectorField::monomial_field(f, Var::Odd(2));
        let back = PolyVectorField::from_json(
            &serde_json::from_str(&serde_json::to_string(&x.to_json()).unwrap()).unwrap(),
        )
        .unwrap();
        assert_eq!(back, x);
    }
}
