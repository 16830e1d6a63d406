//! The Kantor functor: `J ↦ kan(J) ⊂ vect(J)`.
//!
//! With coordinates `x_a` on `J`, `g₋₁` is spanned by `∂_a`, and the even
//! quadratic field
//!
//! `P = ½ Σ q_{ij}^k x_j x_i ∂_k`
//!
//! satisfies `[[P, ∂_a], ∂_b] = Σ_k q_{ab}^k ∂_k`. The linear fields are
//! `L_a = [∂_a, P]`, and the algebra is the bracket closure of
//! `{∂_a, L_a, P}`.

use serde::Serialize;

use super::closure::{close_fields, FieldAlgebra};
use super::PolyVectorField;
use crate::error::{Error, Result};
use crate::jordan::{jordan_from_graded, JordanSuperAlgebra};
use crate::scalars::{format_rational, rat, Parity, Rational, SuperPolynomial, Var, VariableContext};

pub const DEFAULT_KAN_DEGREE_CAP: u32 = 4;
pub const DEFAULT_KAN_MAX_DIM: usize = 12;

#[derive(Debug, Clone, Copy)]
pub struct KanConfig {
    pub degree_cap: u32,
    pub max_dim: usize,
}

impl Default for KanConfig {
    fn default() -> Self {
        Self { degree_cap: DEFAULT_KAN_DEGREE_CAP, max_dim: DEFAULT_KAN_MAX_DIM }
    }
}

#[derive(Debug, Clone)]
pub struct Kan {
    pub fields: FieldAlgebra,
    /// Coordinates of `P` in the basis of `kan(J)`.
    pub p: Vec<Rational>,
}

impl Kan {
    pub fn algebra(&self) -> &crate::liealg::LieSuperAlgebra {
        &self.fields.algebra
    }
}

/// Coordinate variable of each basis element of `J`.
pub fn jordan_coordinates(j: &JordanSuperAlgebra, cap: u32) -> Result<(VariableContext, Vec<Var>)> {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    let vars = (0..j.dim())
        .map(|a| {
            let name = format!("x[{}]", j.names()[a]);
            match j.parities()[a] {
                Parity::Even => {
                    even.push(name);
                    Var::Even(even.len() - 1)
                }
                Parity::Odd => {
                    odd.push(name);
                    Var::Odd(odd.len() - 1)
                }
            }
        })
        .collect();
    let ctx = VariableContext::build(even.len(), odd.len(), Some(even), Some(odd), cap)?;
    Ok((ctx, vars))
}

pub fn kan_build(j: &JordanSuperAlgebra) -> Result<Kan> {
    kan_build_with(j, &KanConfig::default())
}

pub fn kan_build_with(j: &JordanSuperAlgebra, config: &KanConfig) -> Result<Kan> {
    if j.dim() > config.max_dim {
        return Err(Error::Unsupported(format!("dim J = {} exceeds the bound {}", j.dim(), config.max_dim)));
    }
    if j.product_parity() == Parity::Odd {
        return Err(Error::Unsupported("kan needs an even product".into()));
    }
    let (ctx, vars) = jordan_coordinates(j, config.degree_cap)?;
    let x: Vec<SuperPolynomial> = vars.iter().map(|&v| SuperPolynomial::var(&ctx, v)).collect();
    let mut components = vec![SuperPolynomial::zero(&ctx); vars.len()];
    for ((a, b), v) in j.products() {
        let quad = x[b].checked_mul(&x[a])?.scale(&rat(1, 2));
        for (k, c) in v {
            let idx = super::coordinate_index(&ctx, vars[*k]);
            components[idx] = components[idx].checked_add(&quad.scale(c))?;
        }
    }
    let p_field = PolyVectorField::new(&ctx, components)?;
    let mut generators: Vec<(PolyVectorField, String)> = vars
        .iter()
        .zip(j.names())
        .map(|(&v, n)| (PolyVectorField::partial(&ctx, v), format!("∂{n}")))
        .collect();
    for (a, &v) in vars.iter().enumerate() {
        let l = PolyVectorField::partial(&ctx, v).bracket(&p_field)?;
        generators.push((l, format!("L({})", j.names()[a])));
    }
    generators.push((p_field.clone(), "P".into()));
    let fields = close_fields(format!("kan({})", j.name()), generators)?;
    let p = fields.coordinates(&p_field).ok_or_else(|| Error::Closure("P is not in the span".into()))?;
    Ok(Kan { fields, p })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundtripMismatch {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub ok: bool,
    pub mismatches: Vec<RoundtripMismatch>,
}

/// Rebuilds `J` from `kan(J)` with `x ∘ y = [[P, x], y]` and compares the
/// tables coefficient by coefficient under `a ↦ ∂_a`.
pub fn kan_roundtrip(j: &JordanSuperAlgebra) -> Result<RoundtripReport> {
    let kan = kan_build(j)?;
    roundtrip_of(j, &kan)
}

pub fn roundtrip_of(j: &JordanSuperAlgebra, kan: &Kan) -> Result<RoundtripReport> {
    let back = jordan_from_graded(kan.algebra(), &kan.p)?;
    let n = j.dim();
    if back.dim() != n {
        return Err(Error::Closure(format!("kan(J)₋₁ has dimension {} ≠ {n}", back.dim())));
    }
    let mut mismatches = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for k in 0..n {
                let (e, f) = (j.structure_constant(a, b, k), back.structure_constant(a, b, k));
                if e != f {
                    mismatches.push(RoundtripMismatch {
                        i: a,
                        j: b,
                        k,
                        expected: format_rational(&e),
                        found: format_rational(&f),
                    });
                }
            }
        }
    }
    Ok(RoundtripReport { ok: mismatches.is_empty(), mismatches })
}
