//! Lie superalgebras as exact structure-constant tables.
//!
//! A [`LieSuperAlgebra`] stores a homogeneous basis and, for every ordered
//! pair of basis elements, the sparse coordinate vector of their bracket.
//! Elements are dense coefficient vectors over ℚ, or over a Grassmann
//! algebra for Λ-points.

mod builders;
mod grading;
mod json;

pub(crate) mod json_support {
    pub(crate) use super::json::{basis_from_json, basis_to_json, coeffs_from_json, coeffs_to_json};
}

pub use builders::{split_orthogonal_form, MatrixRealization, Series};
pub use grading::GradingReport;
pub use json::{AlgebraJson, BasisJson, BracketJson};

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{dense, sparse_add_scaled, Reducer, SparseVec};
use crate::scalars::{format_rational, Parity, Rational, SuperPolynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSuperAlgebra {
    name: String,
    names: Vec<String>,
    parities: Vec<Parity>,
    degrees: Option<Vec<i32>>,
    /// `table[i * dim + j] = [e_i, e_j]`.
    table: Vec<SparseVec<usize>>,
}

/// One failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: String,
    pub indices: Vec<usize>,
    pub component: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub ok: bool,
    pub checked_triples: usize,
    pub violations: Vec<Violation>,
}

const MAX_REPORTED: usize = 16;

impl LieSuperAlgebra {
    /// Builds a table without verifying the axioms.
    pub fn from_table(
        name: impl Into<String>,
        names: Vec<String>,
        parities: Vec<Parity>,
        degrees: Option<Vec<i32>>,
        brackets: BTreeMap<(usize, usize), SparseVec<usize>>,
    ) -> Result<Self> {
        let dim = names.len();
        if parities.len() != dim || degrees.as_ref().is_some_and(|d| d.len() != dim) {
            return Err(Error::InvalidInput("basis metadata lengths differ".into()));
        }
        let mut table = vec![SparseVec::new(); dim * dim];
        for ((i, j), v) in brackets {
            if i >= dim || j >= dim || v.keys().any(|&k| k >= dim) {
                return Err(Error::InvalidInput(format!("bracket index out of range in ({i},{j})")));
            }
            table[i * dim + j] = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        Ok(Self { name: name.into(), names, parities, degrees, table })
    }

    /// Builds a table and rejects it unless [`check_axioms`](Self::check_axioms)
    /// passes.
    pub fn new(
        name: impl Into<String>,
        names: Vec<String>,
        parities: Vec<Parity>,
        degrees: Option<Vec<i32>>,
        brackets: BTreeMap<(usize, usize), SparseVec<usize>>,
    ) -> Result<Self> {
        let g = Self::from_table(name, names, parities, degrees, brackets)?;
        let report = g.check_axioms();
        if let Some(v) = report.violations.first() {
            return Err(Error::Closure(format!(
                "{} violates {} at {:?} (component {} = {})",
                g.name, v.kind, v.indices, v.component, v.value
            )));
        }
        Ok(g)
    }

    /// Abelian algebra with the given parities.
    pub fn abelian(parities: &[Parity]) -> Self {
        let names = (0..parities.len()).map(|i| format!("a{}", i + 1)).collect();
        Self::from_table("abelian", names, parities.to_vec(), None, BTreeMap::new())
            .expect("consistent metadata")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// `(even, odd)` dimension.
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

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn degrees(&self) -> Option<&[i32]> {
        self.degrees.as_deref()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `[e_i, e_j]` as a sparse vector.
    pub fn structure(&self, i: usize, j: usize) -> &SparseVec<usize> {
        &self.table[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.structure(i, j).get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Sets `c_ij^k` and its partner `c_ji^k = −(−1)^{p_i p_j} c_ij^k`.
    pub fn with_structure_constant(mut self, i: usize, j: usize, k: usize, c: Rational) -> Self {
        let dim = self.dim();
        let partner = -crate::scalars::sign(self.parities[i].koszul(self.parities[j])) * &c;
        for (slot, value) in [(i * dim + j, c), (j * dim + i, partner)] {
            if value.is_zero() {
                self.table[slot].remove(&k);
            } else {
                self.table[slot].insert(k, value);
            }
        }
        self
    }

    /// All nonzero brackets in index order.
    pub fn brackets(&self) -> impl Iterator<Item = ((usize, usize), &SparseVec<usize>)> {
        let dim = self.dim();
        self.table
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_empty())
            .map(move |(s, v)| ((s / dim, s % dim), v))
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(SparseVec::is_empty)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::Shape(format!(
                "vector of length {len} in an algebra of dimension {}",
                self.dim()
            )));
        }
        Ok(())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::from_integer(1.into());
        v
    }

    /// Bilinear bracket of coefficient vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        let mut out = SparseVec::new();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                sparse_add_scaled(&mut out, self.structure(i, j), &(a * b));
            }
        }
        Ok(self.densify(&out))
    }

    fn bracket_sparse(&self, x: &SparseVec<usize>, y: &SparseVec<usize>) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        for (&i, a) in x {
            for (&j, b) in y {
                sparse_add_scaled(&mut out, self.structure(i, j), &(a * b));
            }
        }
        out
    }

    pub fn densify(&self, v: &SparseVec<usize>) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (&k, c) in v {
            out[k] = c.clone();
        }
        out
    }

    /// Bracket of Λ-points `x = Σ a_i e_i`, `y = Σ b_j e_j` with
    /// Grassmann-valued coefficients written to the left of the basis:
    /// `[a e_i, b e_j] = (−1)^{p(e_i) p(b)} a b [e_i, e_j]`.
    pub fn bracket_lambda(
        &self,
        x: &[SuperPolynomial],
        y: &[SuperPolynomial],
    ) -> Result<Vec<SuperPolynomial>> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        let ctx =
            x.first().map(|a| a.context().clone()).ok_or_else(|| Error::Shape("empty algebra".into()))?;
        let mut out = vec![SuperPolynomial::zero(&ctx); self.dim()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let c = self.structure(i, j);
                if c.is_empty() {
                    continue;
                }
                let mut coeff = SuperPolynomial::zero(&ctx);
                for q in [Parity::Even, Parity::Odd] {
                    let bq = b.parity_part(q);
                    let term = a.checked_mul(&bq)?;
                    coeff = if self.parities[i].koszul(q) {
                        coeff.checked_sub(&term)?
                    } else {
                        coeff.checked_add(&term)?
                    };
                }
                for (&k, s) in c {
                    out[k] = out[k].checked_add(&coeff.scale(s))?;
                }
            }
        }
        Ok(out)
    }

    /// Super-antisymmetry, parity and degree compatibility, and the super
    /// Jacobi identity `(−1)^{p(x)p(z)}[x,[y,z]] + cyclic = 0`, checked on all
    /// basis triples `i ≤ j ≤ k`.
    pub fn check_axioms(&self) -> AxiomReport {
        let dim = self.dim();
        let mut violations = Vec::new();
        let mut push = |v: Violation| {
            if violations.len() < MAX_REPORTED {
                violations.push(v);
            }
        };
        for i in 0..dim {
            for j in 0..dim {
                let s = crate::scalars::sign(self.parities[i].koszul(self.parities[j]));
                let mut sum = self.structure(i, j).clone();
                sparse_add_scaled(&mut sum, self.structure(j, i), &s);
                if let Some((&k, c)) = sum.iter().next() {
                    push(Violation {
                        kind: "antisymmetry".into(),
                        indices: vec![i, j],
                        component: k,
                        value: format_rational(c),
                    });
                }
                for &k in self.structure(i, j).keys() {
                    if self.parities[k] != self.parities[i] + self.parities[j] {
                        push(Violation {
                            kind: "parity".into(),
                            indices: vec![i, j],
                            component: k,
                            value: format_rational(&self.structure_constant(i, j, k)),
                        });
                    }
                    if let Some(d) = &self.degrees {
                        if d[k] != d[i] + d[j] {
                            push(Violation {
                                kind: "degree".into(),
                                indices: vec![i, j],
                                component: k,
                                value: format_rational(&self.structure_constant(i, j, k)),
                            });
                        }
                    }
                }
            }
        }
        let mut checked = 0;
        for i in 0..dim {
            for j in i..dim {
                for k in j..dim {
                    checked += 1;
                    let sum = self.jacobiator(i, j, k);
                    if let Some((&c, v)) = sum.iter().next() {
                        push(Violation {
                            kind: "jacobi".into(),
                            indices: vec![i, j, k],
                            component: c,
                            value: format_rational(v),
                        });
                    }
                }
            }
        }
        AxiomReport { ok: violations.is_empty(), checked_triples: checked, violations }
    }

    /// `(−1)^{p_i p_k}[e_i,[e_j,e_k]] + (−1)^{p_j p_i}[e_j,[e_k,e_i]] + (−1)^{p_k p_j}[e_k,[e_i,e_j]]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> SparseVec<usize> {
        let p = &self.parities;
        let mut sum = SparseVec::new();
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let inner = self.structure(b, c);
            let mut term = SparseVec::new();
            for (&l, x) in inner {
                sparse_add_scaled(&mut term, self.structure(a, l), x);
            }
            sparse_add_scaled(&mut sum, &term, &crate::scalars::sign(p[a].koszul(p[c])));
        }
        sum
    }

    /// Basis (in RREF-independent insertion order) of the subalgebra
    /// generated by `seeds`.
    pub fn subalgebra_closure(&self, seeds: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
        let mut reducer = Reducer::new();
        let mut basis: Vec<SparseVec<usize>> = Vec::new();
        for s in seeds {
            self.check_len(s.len())?;
            let v: SparseVec<usize> =
                s.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
            if reducer.insert(&v).is_some() {
                basis.push(v);
            }
        }
        let mut done = 0;
        while done < basis.len() {
            for j in 0..=done {
                let (x, y) = (basis[done].clone(), basis[j].clone());
                for w in [self.bracket_sparse(&x, &y), self.bracket_sparse(&y, &x)] {
                    if reducer.insert(&w).is_some() {
                        basis.push(w);
                    }
                }
            }
            done += 1;
        }
        Ok(basis.iter().map(|v| self.densify(v)).collect())
    }

    /// The algebra in a new basis given by the rows of `vectors`, which
    /// must be homogeneous and span a subalgebra.
    pub fn rebase(
        &self,
        vectors: &[Vec<Rational>],
        names: Vec<String>,
        degrees: Option<Vec<i32>>,
    ) -> Result<Self> {
        let mut reducer = Reducer::new();
        let mut parities = Vec::with_capacity(vectors.len());
        for v in vectors {
            self.check_len(v.len())?;
            let sv: SparseVec<usize> =
                v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
            let mut ps = sv.keys().map(|&k| self.parities[k]);
            let p = ps.next().unwrap_or(Parity::Even);
            if ps.any(|q| q != p) {
                return Err(Error::Inhomogeneous("rebasing vector mixes parities".into()));
            }
            parities.push(p);
            if reducer.insert(&sv).is_none() {
                return Err(Error::InvalidInput("rebasing vectors are dependent".into()));
            }
        }
        let mut brackets = BTreeMap::new();
        for (a, x) in vectors.iter().enumerate() {
            for (b, y) in vectors.iter().enumerate() {
                let z = self.bracket(x, y)?;
                let sz: SparseVec<usize> =
                    z.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
                if sz.is_empty() {
                    continue;
                }
                let coords = reducer
                    .coordinates(&sz)
                    .ok_or_else(|| Error::Closure(format!("[{}, {}] leaves the span", names[a], names[b])))?;
                brackets.insert((a, b), coords);
            }
        }
        Self::from_table(self.name.clone(), names, parities, degrees, brackets)
    }

    /// Matrix of `ad x` in the basis, `ad[k][j]` = component `k` of `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        self.check_len(x.len())?;
        let mut m = dense::zeros(self.dim(), self.dim());
        for j in 0..self.dim() {
            let col = self.bracket(x, &self.basis_vector(j))?;
            for (k, c) in col.into_iter().enumerate() {
                m[k][j] = c;
            }
        }
        Ok(m)
    }

    /// Killing-type form `str(ad x ∘ ad y)` on basis elements.
    pub fn killing_form(&self) -> Result<Vec<Vec<Rational>>> {
        let ads: Vec<_> =
            (0..self.dim()).map(|i| self.ad_matrix(&self.basis_vector(i))).collect::<Result<_>>()?;
        let n = self.dim();
        let mut k = dense::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let prod = dense::mul(&ads[i], &ads[j]);
                k[i][j] = (0..n).fold(Rational::zero(), |acc, l| {
                    if self.parities[l].is_odd() {
                        acc - &prod[l][l]
                    } else {
                        acc + &prod[l][l]
                    }
                });
            }
        }
        Ok(k)
    }
}
