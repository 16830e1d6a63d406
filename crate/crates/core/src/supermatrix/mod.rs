//! Supermatrices over [`SuperPolynomial`] and their traces and
//! determinants.
//!
//! Rows and columns carry a [`BlockSignature`] `(m|n)`: the first `m`
//! indices are even, the last `n` odd. A homogeneous matrix of parity `π`
//! has entry `(i, j)` of parity `π + p(i) + p(j)`, so products of
//! homogeneous matrices are ordinary matrix products and stay homogeneous.

mod invariants;
mod json;
mod queer;
mod series;

pub use json::MatrixJson;

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{Parity, Rational, SuperPolynomial, VariableContext};

/// Format `(even|odd)` of a row or column index set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockSignature {
    pub even: usize,
    pub odd: usize,
}

impl BlockSignature {
    pub fn new(even: usize, odd: usize) -> Self {
        Self { even, odd }
    }

    pub fn dim(self) -> usize {
        self.even + self.odd
    }

    pub fn parity_of(self, i: usize) -> Parity {
        if i < self.even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for BlockSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SuperMatrix {
    ctx: VariableContext,
    rows: BlockSignature,
    cols: BlockSignature,
    entries: Vec<Vec<SuperPolynomial>>,
    declared: Option<Parity>,
}

impl SuperMatrix {
    /// Builds a matrix, checking entry parities against `declared` when
    /// given.
    pub fn new(
        ctx: &VariableContext,
        rows: BlockSignature,
        cols: BlockSignature,
        entries: Vec<Vec<SuperPolynomial>>,
        declared: Option<Parity>,
    ) -> Result<Self> {
        if entries.len() != rows.dim() || entries.iter().any(|r| r.len() != cols.dim()) {
            return Err(Error::Shape(format!("entry grid does not match signature {rows}x{cols}")));
        }
        for row in &entries {
            for e in row {
                ctx.check_same(e.context())?;
            }
        }
        let m = Self { ctx: ctx.clone(), rows, cols, entries, declared };
        if let Some(p) = declared {
            m.check_parity(p)?;
        }
        Ok(m)
    }

    fn check_parity(&self, p: Parity) -> Result<()> {
        for i in 0..self.rows.dim() {
            for j in 0..self.cols.dim() {
                let e = &self.entries[i][j];
                if e.is_zero() {
                    continue;
                }
                let want = p + self.rows.parity_of(i) + self.cols.parity_of(j);
                if e.parity() != Some(want) {
                    return Err(Error::Inhomogeneous(format!(
                        "entry ({i},{j}) = {e} should be {want} in a matrix of parity {p}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(ctx: &VariableContext, rows: BlockSignature, cols: BlockSignature) -> Self {
        Self {
            ctx: ctx.clone(),
            rows,
            cols,
            entries: vec![vec![SuperPolynomial::zero(ctx); cols.dim()]; rows.dim()],
            declared: None,
        }
    }

    pub fn identity(ctx: &VariableContext, sig: BlockSignature) -> Self {
        let mut m = Self::zero(ctx, sig, sig);
        for i in 0..sig.dim() {
            m.entries[i][i] = SuperPolynomial::one(ctx);
        }
        m.declared = Some(Parity::Even);
        m
    }

    /// Rational matrix lifted into the context.
    pub fn from_rational(
        ctx: &VariableContext,
        rows: BlockSignature,
        cols: BlockSignature,
        values: &[Vec<Rational>],
        declared: Option<Parity>,
    ) -> Result<Self> {
        let entries = values
            .iter()
            .map(|r| r.iter().map(|c| SuperPolynomial::constant(ctx, c.clone())).collect())
            .collect();
        Self::new(ctx, rows, cols, entries, declared)
    }

    /// Matrix unit `E_ij` (zero-based), homogeneous of parity `p(i) + p(j)`.
    pub fn unit(ctx: &VariableContext, sig: BlockSignature, i: usize, j: usize) -> Self {
        let mut m = Self::zero(ctx, sig, sig);
        m.entries[i][j] = SuperPolynomial::one(ctx);
        m.declared = Some(sig.parity_of(i) + sig.parity_of(j));
        m
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn rows(&self) -> BlockSignature {
        self.rows
    }

    pub fn cols(&self) -> BlockSignature {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &SuperPolynomial {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<SuperPolynomial>] {
        &self.entries
    }

    pub fn set_entry(&mut self, i: usize, j: usize, value: SuperPolynomial) {
        self.entries[i][j] = value;
        self.declared = None;
    }

    pub fn declared_parity(&self) -> Option<Parity> {
        self.declared
    }

    /// Declared parity, or the parity inferred from the entries. The zero
    /// matrix is even.
    pub fn parity(&self) -> Result<Parity> {
        if let Some(p) = self.declared {
            return Ok(p);
        }
        let mut found: Option<Parity> = None;
        for i in 0..self.rows.dim() {
            for j in 0..self.cols.dim() {
                let e = &self.entries[i][j];
                if e.is_zero() {
                    continue;
                }
                let Some(pe) = e.parity() else {
                    return Err(Error::Inhomogeneous(format!("entry ({i},{j}) = {e}")));
                };
                let p = pe + self.rows.parity_of(i) + self.cols.parity_of(j);
                match found {
                    None => found = Some(p),
                    Some(q) if q != p => return Err(Error::Inhomogeneous("matrix mixes parities".into())),
                    _ => {}
                }
            }
        }
        Ok(found.unwrap_or(Parity::Even))
    }

    /// Re-declares the parity after checking the entries.
    pub fn with_parity(mut self, p: Parity) -> Result<Self> {
        self.check_parity(p)?;
        self.declared = Some(p);
        Ok(self)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(SuperPolynomial::is_zero)
    }

    /// The four blocks `A` (even-even), `B` (even-odd), `C` (odd-even) and
    /// `D` (odd-odd) as plain grids.
    pub fn blocks(&self) -> [Vec<Vec<SuperPolynomial>>; 4] {
        let (m, p) = (self.rows.even, self.cols.even);
        let cut = |r: std::ops::Range<usize>, c: std::ops::Range<usize>| {
            self.entries[r].iter().map(|row| row[c.clone()].to_vec()).collect::<Vec<_>>()
        };
        let (rn, cn) = (self.rows.dim(), self.cols.dim());
        [cut(0..m, 0..p), cut(0..m, p..cn), cut(m..rn, 0..p), cut(m..rn, p..cn)]
    }

    /// Body (constant terms) as a rational matrix.
    pub fn body(&self) -> Vec<Vec<Rational>> {
        self.entries.iter().map(|r| r.iter().map(SuperPolynomial::body).collect()).collect()
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        self.ctx.check_same(&other.ctx)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::SignatureMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn combine_parity(&self, other: &Self) -> Option<Parity> {
        match (self.declared, other.declared) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.checked_add(y)).collect())
            .collect::<Result<_>>()?;
        Ok(Self { entries, declared: self.combine_parity(other), ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|r| r.iter().map(|x| -x).collect()).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            entries: self.entries.iter().map(|r| r.iter().map(|x| x.scale(c)).collect()).collect(),
            ..self.clone()
        }
    }

    /// Left multiplication by a scalar `s`: entries become `s · X_ij`.
    pub fn scale_left(&self, s: &SuperPolynomial) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| s.checked_mul(x)).collect())
            .collect::<Result<_>>()?;
        let declared = match (s.parity(), self.declared) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        Ok(Self { entries, declared, ..self.clone() })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        if self.cols != other.rows {
            return Err(Error::SignatureMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let n = other.cols.dim();
        let mut entries = Vec::with_capacity(self.rows.dim());
        for row in &self.entries {
            let mut out = Vec::with_capacity(n);
            for j in 0..n {
                let mut acc = SuperPolynomial::zero(&self.ctx);
                for (k, x) in row.iter().enumerate() {
                    let y = &other.entries[k][j];
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc.checked_add(&x.checked_mul(y)?)?;
                    }
                }
                out.push(acc);
            }
            entries.push(out);
        }
        let declared = match (self.declared, other.declared) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        Ok(Self { ctx: self.ctx.clone(), rows: self.rows, cols: other.cols, entries, declared })
    }

    /// Superbracket `XY − (−1)^{p(X)p(Y)} YX`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        let (p, q) = (self.parity()?, other.parity()?);
        let xy = self.mul(other)?;
        let yx = other.mul(self)?.scale(&p.koszul_sign(q));
        Ok(xy.sub(&yx)?.with_declared(p + q))
    }

    /// Super anticommutator `XY + (−1)^{p(X)p(Y)} YX`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        let (p, q) = (self.parity()?, other.parity()?);
        let xy = self.mul(other)?;
        let yx = other.mul(self)?.scale(&p.koszul_sign(q));
        Ok(xy.add(&yx)?.with_declared(p + q))
    }

    fn with_declared(mut self, p: Parity) -> Self {
        self.declared = Some(p);
        self
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape("power of a non-square matrix".into()));
        }
        let mut acc = Self::identity(&self.ctx, self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Shape(format!("{what} of a non-square matrix {}x{}", self.rows, self.cols)))
        }
    }
}

impl fmt::Debug for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SuperMatrix {}x{} parity {:?}", self.rows, self.cols, self.declared)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Rational identity check used by several modules.
pub(crate) fn is_rational_identity(m: &[Vec<Rational>]) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
}
