//! Supertrace, supertranspose and Berezinian.

use super::{BlockSignature, SuperMatrix};
use crate::error::{Error, Result};
use crate::ring::det_bareiss;
use crate::scalars::{Parity, SuperPolynomial};

/// Wraps a plain grid as a purely even-indexed matrix; used for block
/// arithmetic inside the Berezinian where only products and sums matter.
fn grid(m: &SuperMatrix, g: Vec<Vec<SuperPolynomial>>, cols: usize) -> SuperMatrix {
    SuperMatrix {
        ctx: m.ctx.clone(),
        rows: BlockSignature::new(g.len(), 0),
        cols: BlockSignature::new(cols, 0),
        entries: g,
        declared: None,
    }
}

impl SuperMatrix {
    /// `str X = tr A − (−1)^{p(X)} tr D`.
    pub fn supertrace(&self) -> Result<SuperPolynomial> {
        self.require_square("supertrace")?;
        let p = self.parity()?;
        let mut acc = SuperPolynomial::zero(&self.ctx);
        for i in 0..self.rows.dim() {
            let e = &self.entries[i][i];
            acc = if self.rows.parity_of(i) == Parity::Odd && !p.is_odd() {
                acc.checked_sub(e)?
            } else {
                acc.checked_add(e)?
            };
        }
        Ok(acc)
    }

    /// Supertranspose: `(X^{st})_{ij} = (−1)^{(p(i)+p(j))(p(i)+p(X))} X_{ji}`.
    ///
    /// For even `X = [[A, B], [C, D]]` this is `[[Aᵗ, Cᵗ], [−Bᵗ, Dᵗ]]`. The
    /// sign rule makes `(XY)^{st} = (−1)^{p(X)p(Y)} Y^{st} X^{st}` hold for
    /// Grassmann-valued entries and leaves the diagonal, hence the
    /// supertrace, unchanged.
    pub fn supertranspose(&self) -> Result<Self> {
        let p = self.parity()?;
        let (rows, cols) = (self.cols, self.rows);
        let mut entries = Vec::with_capacity(rows.dim());
        for i in 0..rows.dim() {
            let pi = rows.parity_of(i);
            let mut row = Vec::with_capacity(cols.dim());
            for j in 0..cols.dim() {
                let pj = cols.parity_of(j);
                let negative = (pi + pj).is_odd() && (pi + p).is_odd();
                let e = &self.entries[j][i];
                row.push(if negative { -e } else { e.clone() });
            }
            entries.push(row);
        }
        Ok(Self { ctx: self.ctx.clone(), rows, cols, entries, declared: Some(p) })
    }

    fn even_square(&self, what: &str) -> Result<()> {
        self.require_square(what)?;
        match self.parity()? {
            Parity::Even => Ok(()),
            Parity::Odd => Err(Error::Precondition(format!("{what} of an odd matrix"))),
        }
    }

    /// Ordinary determinant of an even-indexed square grid over the even
    /// (commutative) subalgebra.
    fn det_of(&self, g: &[Vec<SuperPolynomial>]) -> Result<SuperPolynomial> {
        det_bareiss(g, &SuperPolynomial::one(&self.ctx))
    }

    /// `Ber X = det(A − B D⁻¹ C) · det(D)⁻¹` for even `X` whose `D` block
    /// has invertible body.
    pub fn berezinian(&self) -> Result<SuperPolynomial> {
        self.even_square("Berezinian")?;
        let [a, b, c, d] = self.blocks();
        let (m, n) = (self.rows.even, self.rows.odd);
        if n == 0 {
            return self.det_of(&a);
        }
        let d = grid(self, d, n);
        let d_inv = d.inverse().map_err(|e| match e {
            Error::NotInvertible(_) => Error::NotInvertible("D block body is singular".into()),
            other => other,
        })?;
        let det_d_inv = self.det_of(&d.entries)?.inverse()?;
        if m == 0 {
            return Ok(det_d_inv);
        }
        let schur = grid(self, a, m).sub(&grid(self, b, n).mul(&d_inv)?.mul(&grid(self, c, m))?)?;
        self.det_of(&schur.entries)?.checked_mul(&det_d_inv)
    }

    /// The other Schur-complement form, `det(A) · det(D − C A⁻¹ B)⁻¹`,
    /// which needs `A` invertible instead of `D`.
    pub fn berezinian_via_a(&self) -> Result<SuperPolynomial> {
        self.even_square("Berezinian")?;
        let [a, b, c, d] = self.blocks();
        let (m, n) = (self.rows.even, self.rows.odd);
        if m == 0 {
            return self.det_of(&d)?.inverse();
        }
        let a = grid(self, a, m);
        let det_a = self.det_of(&a.entries)?;
        if n == 0 {
            return Ok(det_a);
        }
        let a_inv = a.inverse()?;
        let schur = grid(self, d, n).sub(&grid(self, c, m).mul(&a_inv)?.mul(&grid(self, b, n))?)?;
        det_a.checked_mul(&self.det_of(&schur.entries)?.inverse()?)
    }
}
