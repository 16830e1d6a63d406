//! Jordan superalgebras as exact product tables.
//!
//! The super Jordan identity is verified on the Grassmann envelope: `x` and
//! `y` become generic Λ-points with fresh formal coefficients and
//! `(x²∘y)∘x − x²∘(y∘x)` is expanded as an identity of super-polynomials.
//! Because `x` enters cubically, every odd basis element gets three
//! independent odd coefficients in `x`, enough to see every multilinear
//! term; `y` enters linearly and needs one.

mod constructions;
mod json;

pub use constructions::{
    jordan_bilinear, jordan_from_graded, jordan_generalized, jordan_hamiltonian_odd, jordan_matrix,
    IdentityFlags, MatrixKind,
};
pub use json::JordanJson;

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{sparse_add_scaled, SparseVec};
use crate::scalars::{format_rational, sign, Parity, Rational, SuperPolynomial, VariableContext};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanSuperAlgebra {
    name: String,
    names: Vec<String>,
    parities: Vec<Parity>,
    product_parity: Parity,
    table: Vec<SparseVec<usize>>,
    unit: Option<Vec<Rational>>,
}

/// Outcome of an identity check with the first failing coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub identity: String,
    /// Basis indices involved, or the output component for envelope checks.
    pub indices: Vec<usize>,
    pub monomial: String,
    pub coefficient: String,
}

impl IdentityReport {
    fn pass() -> Self {
        Self { ok: true, witness: None }
    }

    fn fail(w: Witness) -> Self {
        Self { ok: false, witness: Some(w) }
    }
}

const ENVELOPE_DEGREE_CAP: u32 = 8;

impl JordanSuperAlgebra {
    /// Builds a table without verifying any identity.
    pub fn from_table(
        name: impl Into<String>,
        names: Vec<String>,
        parities: Vec<Parity>,
        product_parity: Parity,
        products: BTreeMap<(usize, usize), SparseVec<usize>>,
        unit: Option<Vec<Rational>>,
    ) -> Result<Self> {
        let dim = names.len();
        if parities.len() != dim || unit.as_ref().is_some_and(|u| u.len() != dim) {
            return Err(Error::InvalidInput("basis metadata lengths differ".into()));
        }
        let mut table = vec![SparseVec::new(); dim * dim];
        for ((i, j), v) in products {
            if i >= dim || j >= dim || v.keys().any(|&k| k >= dim) {
                return Err(Error::InvalidInput(format!("product index out of range in ({i},{j})")));
            }
            table[i * dim + j] = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        Ok(Self { name: name.into(), names, parities, product_parity, table, unit })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn sdim(&self) -> (usize, usize) {
        let odd = self.parities.iter().filter(|p| p.is_odd()).count();
        (self.dim() - odd, odd)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn product_parity(&self) -> Parity {
        self.product_parity
    }

    pub fn unit(&self) -> Option<&[Rational]> {
        self.unit.as_deref()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn structure(&self, i: usize, j: usize) -> &SparseVec<usize> {
        &self.table[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.structure(i, j).get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn products(&self) -> impl Iterator<Item = ((usize, usize), &SparseVec<usize>)> {
        let dim = self.dim();
        self.table
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_empty())
            .map(move |(s, v)| ((s / dim, s % dim), v))
    }

    /// Overwrites a single constant `q_ij^k` (no symmetrization).
    pub fn with_structure_constant(mut self, i: usize, j: usize, k: usize, c: Rational) -> Self {
        let slot = i * self.dim() + j;
        if c.is_zero() {
            self.table[slot].remove(&k);
        } else {
            self.table[slot].insert(k, c);
        }
        self
    }

    pub fn is_zero_product(&self) -> bool {
        self.table.iter().all(SparseVec::is_empty)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::from_integer(1.into());
        v
    }

    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.dim() || y.len() != self.dim() {
            return Err(Error::Shape("vector length differs from the dimension".into()));
        }
        let mut out = SparseVec::new();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                sparse_add_scaled(&mut out, self.structure(i, j), &(a * b));
            }
        }
        let mut v = vec![Rational::zero(); self.dim()];
        for (k, c) in out {
            v[k] = c;
        }
        Ok(v)
    }

    /// `e_i ∘ e_j = (−1)^{p_i p_j} e_j ∘ e_i` on all basis pairs.
    pub fn check_supercommutativity(&self) -> IdentityReport {
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let s = sign(self.parities[i].koszul(self.parities[j]));
                let mut d = self.structure(i, j).clone();
                sparse_add_scaled(&mut d, self.structure(j, i), &-s);
                if let Some((&k, c)) = d.iter().next() {
                    return IdentityReport::fail(Witness {
                        identity: "supercommutativity".into(),
                        indices: vec![i, j, k],
                        monomial: String::new(),
                        coefficient: format_rational(c),
                    });
                }
            }
        }
        IdentityReport::pass()
    }

    /// `p(e_i ∘ e_j) = p_i + p_j + p(∘)` on all basis pairs.
    pub fn check_parity(&self) -> IdentityReport {
        for ((i, j), v) in self.products() {
            let want = self.parities[i] + self.parities[j] + self.product_parity;
            if let Some((&k, c)) = v.iter().find(|(&k, _)| self.parities[k] != want) {
                return IdentityReport::fail(Witness {
                    identity: "parity".into(),
                    indices: vec![i, j, k],
                    monomial: String::new(),
                    coefficient: format_rational(c),
                });
            }
        }
        IdentityReport::pass()
    }

    /// Ungraded commutativity `e_i ∘ e_j = e_j ∘ e_i`.
    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.structure(i, j) == self.structure(j, i)))
    }

    /// Product of Λ-points `x = Σ a_i e_i`, `y = Σ b_j e_j`:
    /// `(a e_i)∘(b e_j) = (−1)^{p(∘)p(a) + (p_i + p(∘))p(b)} a b (e_i ∘ e_j)`.
    pub fn product_lambda(
        &self,
        ctx: &VariableContext,
        x: &[SuperPolynomial],
        y: &[SuperPolynomial],
    ) -> Result<Vec<SuperPolynomial>> {
        let eps = self.product_parity;
        let mut out = vec![SuperPolynomial::zero(ctx); self.dim()];
        let split = |v: &SuperPolynomial| [Parity::Even, Parity::Odd].map(|p| (p, v.parity_part(p)));
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            let a_parts = split(a);
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let c = self.structure(i, j);
                if c.is_empty() {
                    continue;
                }
                let mut coeff = SuperPolynomial::zero(ctx);
                for (pa, ap) in a_parts.iter().filter(|(_, v)| !v.is_zero()) {
                    for (pb, bp) in split(b).iter().filter(|(_, v)| !v.is_zero()) {
                        let negative = eps.koszul(*pa) ^ (self.parities[i] + eps).koszul(*pb);
                        let t = ap.checked_mul(bp)?;
                        coeff = if negative { coeff.checked_sub(&t)? } else { coeff.checked_add(&t)? };
                    }
                }
                if coeff.is_zero() {
                    continue;
                }
                for (&k, s) in c {
                    out[k] = out[k].checked_add(&coeff.scale(s))?;
                }
            }
        }
        Ok(out)
    }

    /// The generic envelope points `x` (three odd coefficients per odd
    /// basis element) and `y`, and their context.
    fn envelope_points(&self) -> Result<(VariableContext, Vec<SuperPolynomial>, Vec<SuperPolynomial>)> {
        let even: Vec<usize> = (0..self.dim()).filter(|&i| !self.parities[i].is_odd()).collect();
        let odd: Vec<usize> = (0..self.dim()).filter(|&i| self.parities[i].is_odd()).collect();
        let (ne, no) = (even.len(), odd.len());
        let mut even_names = Vec::new();
        let mut odd_names = Vec::new();
        for &i in &even {
            even_names.push(format!("a[{}]", self.names[i]));
        }
        for &i in &even {
            even_names.push(format!("b[{}]", self.names[i]));
        }
        for r in 1..=3 {
            for &i in &odd {
                odd_names.push(format!("α{r}[{}]", self.names[i]));
            }
        }
        for &i in &odd {
            odd_names.push(format!("β[{}]", self.names[i]));
        }
        let ctx =
            VariableContext::build(2 * ne, 4 * no, Some(even_names), Some(odd_names), ENVELOPE_DEGREE_CAP)?;
        let mut x = vec![SuperPolynomial::zero(&ctx); self.dim()];
        let mut y = x.clone();
        for (k, &i) in even.iter().enumerate() {
            x[i] = SuperPolynomial::even_var(&ctx, k);
            y[i] = SuperPolynomial::even_var(&ctx, ne + k);
        }
        for (k, &i) in odd.iter().enumerate() {
            x[i] = (0..3).fold(SuperPolynomial::zero(&ctx), |acc, r| {
                &acc + &SuperPolynomial::odd_var(&ctx, r * no + k)
            });
            y[i] = SuperPolynomial::odd_var(&ctx, 3 * no + k);
        }
        Ok((ctx, x, y))
    }

    /// `(x²∘y)∘x = x²∘(y∘x)` on the Grassmann envelope.
    pub fn check_jordan_identity(&self) -> Result<IdentityReport> {
        if self.dim() == 0 {
            return Ok(IdentityReport::pass());
        }
        let (ctx, x, y) = self.envelope_points()?;
        let x2 = self.product_lambda(&ctx, &x, &x)?;
        let lhs = self.product_lambda(&ctx, &self.product_lambda(&ctx, &x2, &y)?, &x)?;
        let rhs = self.product_lambda(&ctx, &x2, &self.product_lambda(&ctx, &y, &x)?)?;
        for (k, (l, r)) in lhs.iter().zip(&rhs).enumerate() {
            let d = l.checked_sub(r)?;
            let first = d.terms().next().map(|(m, c)| (m.clone(), c.clone()));
            if let Some((m, c)) = first {
                let mono = SuperPolynomial::from_terms(&ctx, [(m, Rational::from_integer(1.into()))])?;
                return Ok(IdentityReport::fail(Witness {
                    identity: "jordan".into(),
                    indices: vec![k],
                    monomial: mono.to_string(),
                    coefficient: format_rational(&c),
                }));
            }
        }
        Ok(IdentityReport::pass())
    }

    /// `(x∘y)∘z = x∘(y∘z)` on basis triples (ungraded, for reports).
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let (ei, ej, ek) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let l = self.product(&self.product(&ei, &ej).unwrap(), &ek).unwrap();
                    let r = self.product(&ei, &self.product(&ej, &ek).unwrap()).unwrap();
                    l == r
                })
            })
        })
    }

    /// Checks that the stored unit acts as the identity on every basis
    /// element.
    pub fn check_unit(&self) -> Option<bool> {
        let u = self.unit.as_ref()?;
        Some((0..self.dim()).all(|i| {
            let e = self.basis_vector(i);
            self.product(u, &e).ok() == Some(e.clone()) && self.product(&e, u).ok() == Some(e)
        }))
    }
}
