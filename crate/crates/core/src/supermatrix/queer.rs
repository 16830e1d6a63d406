//! The queer trace and determinant on `q(n)`.
//!
//! `q(n)` is the supercommutant of the odd involution `Π = [[0, 1], [1, 0]]`
//! in `Mat(n|n)`. Solving `XΠ = (−1)^{p(X)} ΠX` gives the shapes
//!
//! * even `X = [[a, b], [b, a]]`,
//! * odd  `X = [[a, b], [−b, −a]]`.
//!
//! Over the rationals both reduce to the usual `diag(a, a)` and
//! `antidiag(b, b)`, which also commute with `J = [[0, 1], [−1, 0]]`.

use super::{is_rational_identity, BlockSignature, SuperMatrix};
use crate::error::{Error, Result};
use crate::linalg::dense;
use crate::scalars::{Parity, SuperPolynomial, VariableContext};

impl SuperMatrix {
    /// Assembles a `q(n)`-shaped matrix from its blocks `a` and `b`.
    pub fn queer(
        ctx: &VariableContext,
        a: &[Vec<SuperPolynomial>],
        b: &[Vec<SuperPolynomial>],
        parity: Parity,
    ) -> Result<Self> {
        let n = a.len();
        if b.len() != n || a.iter().chain(b).any(|r| r.len() != n) {
            return Err(Error::Shape("q(n) blocks must be n×n".into()));
        }
        let flip = |x: &SuperPolynomial| if parity.is_odd() { -x } else { x.clone() };
        let mut entries = Vec::with_capacity(2 * n);
        for i in 0..n {
            entries.push(a[i].iter().chain(&b[i]).cloned().collect());
        }
        for i in 0..n {
            entries.push(b[i].iter().map(flip).chain(a[i].iter().map(flip)).collect());
        }
        let sig = BlockSignature::new(n, n);
        Self::new(ctx, sig, sig, entries, Some(parity))
    }

    /// Returns the parity after checking the `q(n)` shape.
    pub fn check_queer(&self) -> Result<Parity> {
        self.require_square("queer shape check")?;
        if self.rows.even != self.rows.odd {
            return Err(Error::Shape(format!("q(n) needs signature (n|n), got {}", self.rows)));
        }
        let p = self.parity()?;
        let n = self.rows.even;
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (&self.entries[i][j], &self.entries[i][j + n]);
                let (c, d) = (&self.entries[i + n][j], &self.entries[i + n][j + n]);
                let ok = match p {
                    Parity::Even => c == b && d == a,
                    Parity::Odd => *c == -b && *d == -a,
                };
                if !ok {
                    return Err(Error::Shape(format!("entry ({i},{j}) breaks the {p} q({n}) shape")));
                }
            }
        }
        Ok(p)
    }

    /// `qtr X = tr b` for `X` of `q(n)` shape.
    pub fn queer_trace(&self) -> Result<SuperPolynomial> {
        self.check_queer()?;
        let n = self.rows.even;
        let mut acc = SuperPolynomial::zero(&self.ctx);
        for i in 0..n {
            acc = acc.checked_add(&self.entries[i][i + n])?;
        }
        Ok(acc)
    }

    /// `qet X = qtr log(X₀⁻¹ X)` where `X₀` is the body of `X`.
    ///
    /// `X₀⁻¹X − 1` has nilpotent entries, so the logarithm terminates. The
    /// result is additive, `qet(XY) = qet X + qet Y`, because `qtr` kills
    /// brackets and is conjugation invariant.
    pub fn queer_determinant(&self) -> Result<SuperPolynomial> {
        if self.check_queer()? != Parity::Even {
            return Err(Error::Precondition("qet of an odd matrix".into()));
        }
        let body = self.body();
        let body_inv = dense::inverse(&body)
            .ok_or_else(|| Error::NotInvertible("body of the q(n) matrix is singular".into()))?;
        if is_rational_identity(&body) {
            return self.log_unipotent()?.queer_trace();
        }
        let b = Self::from_rational(&self.ctx, self.rows, self.cols, &body_inv, Some(Parity::Even))?;
        b.mul(self)?.with_parity(Parity::Even)?.log_unipotent()?.queer_trace()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    fn c(ctx: &VariableContext, v: i64) -> SuperPolynomial {
        SuperPolynomial::constant(ctx, int(v))
    }

    #[test]
    fn queer_trace_examples() {
        let ctx = VariableContext::grassmann(0);
        let z = || c(&ctx, 0);
        let id = vec![vec![c(&ctx, 1), z()], vec![z(), c(&ctx, 1)]];
        let zero = vec![vec![z(), z()], vec![z(), z()]];
        let x = SuperMatrix::queer(&ctx, &zero, &id, Parity::Odd).unwrap();
        assert_eq!(x.queer_trace().unwrap().body(), int(2));
        let y = SuperMatrix::queer(&ctx, &id, &zero, Parity::Even).unwrap();
        assert!(y.queer_trace().unwrap().is_zero());
    }

    #[test]
    fn qet_one_by_one() {
        let ctx = VariableContext::grassmann(1);
        let t = SuperPolynomial::odd_var(&ctx, 0);
        let x = SuperMatrix::queer(&ctx, &[vec![c(&ctx, 1)]], &[vec![t.clone()]], Parity::Even).unwrap();
        assert_eq!(x.queer_determinant().unwrap(), t);
    }

    #[test]
    fn qet_of_purely_even_is_zero() {
        let ctx = VariableContext::grassmann(2);
        let a = vec![vec![c(&ctx, 2), c(&ctx, 1)], vec![c(&ctx, 1), c(&ctx, 1)]];
        let zero = vec![vec![c(&ctx, 0); 2]; 2];
        let x = SuperMatrix::queer(&ctx, &a, &zero, Parity::Even).unwrap();
        assert!(x.queer_determinant().unwrap().is_zero());
    }

    #[test]
    fn shape_violations() {
        let ctx = VariableContext::grassmann(0);
        let s = BlockSignature::new(1, 1);
        let e11 = SuperMatrix::unit(&ctx, s, 0, 0);
        assert!(matches!(e11.queer_trace(), Err(Error::Shape(_))));
        let s21 = BlockSignature::new(2, 1);
        assert!(SuperMatrix::identity(&ctx, s21).queer_trace().is_err());
    }
}
