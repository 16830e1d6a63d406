//! Chevalley–Eilenberg fields, derived brackets and generating functions.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::closure::{close_fields, FieldAlgebra};
use super::{coordinate_index, OddPoissonContext, PolyVectorField};
use crate::error::{Error, Result};
use crate::liealg::LieSuperAlgebra;
use crate::linalg::{dense, SparseVec};
use crate::scalars::{format_rational, rat, sign, Parity, Rational, SuperPolynomial, Var, VariableContext};

/// Variables `X_i^*` of parity `p(X_i) + 1`, one per basis element.
pub fn ce_coordinates(g: &LieSuperAlgebra) -> Result<(VariableContext, Vec<Var>)> {
    let (mut even, mut odd) = (Vec::new(), Vec::new());
    let vars = (0..g.dim())
        .map(|i| {
            let name = format!("{}*", g.names()[i]);
            match g.parity(i) {
                Parity::Odd => {
                    even.push(name);
                    Var::Even(even.len() - 1)
                }
                Parity::Even => {
                    odd.push(name);
                    Var::Odd(odd.len() - 1)
                }
            }
        })
        .collect();
    let ctx = VariableContext::build(even.len(), odd.len(), Some(even), Some(odd), 16)?;
    Ok((ctx, vars))
}

/// `p = ½ Σ (−1)^{p(X_i)(p(X_j)+1)} c_{ij}^k X_i^* X_j^* ∂/∂X_k^*`.
///
/// The sign is the one picked up by moving `X_j^*` past `X_i` when the
/// bracket of the odd point `Σ X_i^* X_i` with itself is expanded.
pub fn ce_field(g: &LieSuperAlgebra) -> Result<PolyVectorField> {
    let (ctx, vars) = ce_coordinates(g)?;
    let x: Vec<SuperPolynomial> = vars.iter().map(|&v| SuperPolynomial::var(&ctx, v)).collect();
    let mut comps = vec![SuperPolynomial::zero(&ctx); vars.len()];
    for ((i, j), v) in g.brackets() {
        let s = sign(g.parity(i).is_odd() && !g.parity(j).is_odd()) * rat(1, 2);
        let quad = x[i].checked_mul(&x[j])?.scale(&s);
        if quad.is_zero() {
            continue;
        }
        for (k, c) in v {
            let idx = coordinate_index(&ctx, vars[*k]);
            comps[idx] = comps[idx].checked_add(&quad.scale(c))?;
        }
    }
    PolyVectorField::new(&ctx, comps)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologicalWitness {
    pub coordinate: String,
    pub monomial: String,
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologicalReport {
    pub homological: bool,
    pub witness: Option<HomologicalWitness>,
}

/// Whether the odd field `X` satisfies `[X, X] = 0`.
pub fn is_homological(x: &PolyVectorField) -> Result<HomologicalReport> {
    if x.parity() != Some(Parity::Odd) && !x.is_zero() {
        return Err(Error::Precondition("is_homological needs an odd field".into()));
    }
    let sq = x.bracket(x)?;
    let ctx = x.context();
    for (k, c) in sq.components().iter().enumerate() {
        if let Some((m, a)) = c.terms().next() {
            let mono = SuperPolynomial::from_terms(ctx, [(m.clone(), Rational::from_integer(1.into()))])?;
            let coordinate = match super::coordinate(ctx, k) {
                Var::Even(i) => ctx.even_name(i),
                Var::Odd(i) => ctx.odd_name(i),
            };
            return Ok(HomologicalReport {
                homological: false,
                witness: Some(HomologicalWitness {
                    coordinate,
                    monomial: mono.to_string(),
                    coefficient: format_rational(a),
                }),
            });
        }
    }
    Ok(HomologicalReport { homological: true, witness: None })
}

/// `[x, y]' = (−1)^{p(x)} [[p, x], y]` on `Π(g₋₁)`.
///
/// Parities are shifted, and the sign makes the result super
/// antisymmetric in the shifted parity. The super Jacobi identity is
/// checked before returning.
pub fn derived_bracket(g: &LieSuperAlgebra, p: &[Rational]) -> Result<LieSuperAlgebra> {
    let degrees =
        g.degrees().ok_or_else(|| Error::Precondition("the Lie superalgebra carries no grading".into()))?;
    if p.len() != g.dim() {
        return Err(Error::Shape("p has the wrong length".into()));
    }
    for (i, c) in p.iter().enumerate() {
        if !c.is_zero() && (degrees[i] != 1 || g.parity(i) != Parity::Odd) {
            return Err(Error::Precondition(format!(
                "p has a component on {} which is not odd of degree 1",
                g.names()[i]
            )));
        }
    }
    if g.bracket(p, p)?.iter().any(|c| !c.is_zero()) {
        return Err(Error::Precondition("[p, p] ≠ 0".into()));
    }
    let idx = g.degree_indices(-1);
    let local: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(a, &i)| (i, a)).collect();
    let mut table = BTreeMap::new();
    for (a, &i) in idx.iter().enumerate() {
        let px = g.bracket(p, &g.basis_vector(i))?;
        let s = sign(g.parity(i).is_odd());
        for (b, &j) in idx.iter().enumerate() {
            let z = g.bracket(&px, &g.basis_vector(j))?;
            let mut v = SparseVec::new();
            for (k, c) in z.into_iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let kk = local.get(&k).ok_or_else(|| {
                    Error::Closure(format!("[[p, {}], {}] leaves g₋₁", g.names()[i], g.names()[j]))
                })?;
                v.insert(*kk, c * &s);
            }
            if !v.is_empty() {
                table.insert((a, b), v);
            }
        }
    }
    let h = LieSuperAlgebra::from_table(
        format!("Π({})₋₁'", g.name()),
        idx.iter().map(|&i| format!("Π{}", g.names()[i])).collect(),
        idx.iter().map(|&i| g.parity(i).flip()).collect(),
        None,
        table,
    )?;
    let report = h.check_axioms();
    if !report.ok {
        return Err(Error::Closure(format!("derived bracket violates {:?}", report.violations.first())));
    }
    Ok(h)
}

/// The depth-one algebra spanned by `∂/∂X_k^*` and `ce_field(g)`, closed
/// under the bracket. Its degree `−1` part lists `∂/∂X_k^*` in the order
/// of the basis of `g`.
pub fn ce_graded_algebra(g: &LieSuperAlgebra) -> Result<(FieldAlgebra, Vec<Rational>)> {
    let q = ce_field(g)?;
    let (ctx, vars) = ce_coordinates(g)?;
    let q = q.with_context(&ctx)?;
    let mut gens: Vec<(PolyVectorField, String)> = vars
        .iter()
        .zip(g.names())
        .map(|(&v, n)| (PolyVectorField::partial(&ctx, v), format!("∂{n}*")))
        .collect();
    gens.push((q.clone(), "ce".into()));
    let fa = close_fields(format!("ce({})", g.name()), gens)?;
    let p = fa.coordinates(&q).ok_or_else(|| Error::Closure("ce field not in span".into()))?;
    Ok((fa, p))
}

/// Checks `⟨[x, y], z⟩ = ⟨x, [y, z]⟩` on basis triples and
/// nondegeneracy.
pub fn check_invariant_form(g: &LieSuperAlgebra, form: &[Vec<Rational>]) -> Result<()> {
    let n = g.dim();
    if form.len() != n || form.iter().any(|r| r.len() != n) {
        return Err(Error::Shape("form must be dim × dim".into()));
    }
    if (0..n).any(|i| (0..n).any(|j| form[i][j] != form[j][i])) {
        return Err(Error::InvalidInput("form is not symmetric".into()));
    }
    if dense::rank(form, n) != n {
        return Err(Error::Degenerate("form is degenerate".into()));
    }
    let pair = |x: &[Rational], y: &[Rational]| -> Rational {
        let mut acc = Rational::zero();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                acc += a * b * &form[i][j];
            }
        }
        acc
    };
    for i in 0..n {
        for j in 0..n {
            let xy = g.bracket(&g.basis_vector(i), &g.basis_vector(j))?;
            for k in 0..n {
                let yz = g.bracket(&g.basis_vector(j), &g.basis_vector(k))?;
                if pair(&xy, &g.basis_vector(k)) != pair(&g.basis_vector(i), &yz) {
                    return Err(Error::InvalidInput(format!(
                        "form is not invariant on ({}, {}, {})",
                        g.names()[i],
                        g.names()[j],
                        g.names()[k]
                    )));
                }
            }
        }
    }
    Ok(())
}

/// A cubic `H` with `hamiltonian_field(H) = ce_field(g)` for the Poisson
/// structure whose pairing is the inverse of the form.
pub fn generating_function(
    g: &LieSuperAlgebra,
    form: &[Vec<Rational>],
) -> Result<(OddPoissonContext, SuperPolynomial)> {
    if (0..g.dim()).any(|i| g.parity(i) == Parity::Odd) {
        return Err(Error::Unsupported("generating_function needs an ordinary Lie algebra".into()));
    }
    check_invariant_form(g, form)?;
    let n = g.dim();
    let q = ce_field(g)?;
    let ctx = q.context().clone();
    let pairing = dense::inverse(form).ok_or_else(|| Error::Degenerate("form is degenerate".into()))?;
    let pc = OddPoissonContext::new(&ctx, pairing)?;

    let mut cubics = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                cubics.push(SuperPolynomial::monomial(
                    &ctx,
                    &[],
                    &[a, b, c],
                    Rational::from_integer(1.into()),
                )?);
            }
        }
    }
    let mut keys = BTreeMap::new();
    let mut columns: Vec<BTreeMap<usize, Rational>> = Vec::new();
    let mut key_of = |k: usize, m: &crate::scalars::Monomial| {
        let next = keys.len();
        *keys.entry((k, m.clone())).or_insert(next)
    };
    for f in &cubics {
        let h = pc.hamiltonian_field(f)?;
        let mut col = BTreeMap::new();
        for (k, comp) in h.components().iter().enumerate() {
            for (m, c) in comp.terms() {
                col.insert(key_of(k, m), c.clone());
            }
        }
        columns.push(col);
    }
    let mut rhs_sparse = BTreeMap::new();
    for (k, comp) in q.components().iter().enumerate() {
        for (m, c) in comp.terms() {
            rhs_sparse.insert(key_of(k, m), c.clone());
        }
    }
    let rows = keys.len();
    let mut mat = dense::zeros(rows, cubics.len());
    for (col, entries) in columns.iter().enumerate() {
        for (r, c) in entries {
            mat[*r][col] = c.clone();
        }
    }
    let mut rhs = vec![Rational::zero(); rows];
    for (r, c) in rhs_sparse {
        rhs[r] = c;
    }
    let coeffs = dense::solve(&mat, &rhs, cubics.len())
        .ok_or_else(|| Error::Precondition("no cubic generating function exists".into()))?;
    let mut h = SuperPolynomial::zero(&ctx);
    for (f, c) in cubics.iter().zip(&coeffs) {
        h = h.checked_add(&f.scale(c))?;
    }
    if pc.hamiltonian_field(&h)? != q {
        return Err(Error::Closure("generating function does not reproduce ce_field".into()));
    }
    if !pc.bracket(&h, &h)?.is_zero() {
        return Err(Error::Closure("{H, H} ≠ 0".into()));
    }
    Ok((pc, h))
}

/// `div X = Σ_k (−1)^{p(X_k)+1} ∂_k X_k` on a purely odd superspace; for
/// homogeneous `X` this is `(−1)^{p(X)} Σ_k ∂_k X_k`.
pub fn divergence(x: &PolyVectorField) -> Result<SuperPolynomial> {
    let ctx = x.context();
    if ctx.even_count() != 0 {
        return Err(Error::Unsupported("divergence is implemented on 0|n only".into()));
    }
    let mut acc = SuperPolynomial::zero(ctx);
    for (k, comp) in x.components().iter().enumerate() {
        for p in [Parity::Even, Parity::Odd] {
            let d = comp.parity_part(p).partial(Var::Odd(k));
            acc = if p == Parity::Odd { acc.checked_add(&d)? } else { acc.checked_sub(&d)? };
        }
    }
    Ok(acc)
}
