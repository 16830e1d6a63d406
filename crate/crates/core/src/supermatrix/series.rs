//! Inverse, exponential and logarithm by terminating series.

use num_traits::Zero;

use super::SuperMatrix;
use crate::error::{Error, Result};
use crate::linalg::dense;
use crate::scalars::{rat, Rational};

impl SuperMatrix {
    /// Upper bound on the nilpotency index of a matrix whose entries are
    /// nilpotent or whose body is nilpotent.
    fn nilpotency_bound(&self) -> u32 {
        ((self.rows.dim() as u32) * (self.ctx.odd_count() as u32 + 1)) + 1
    }

    /// Splits `X = X₀ + N` into its rational body and soul.
    fn body_and_soul(&self) -> Result<(Vec<Vec<Rational>>, SuperMatrix)> {
        let mut soul = self.clone();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let s = e.soul();
                if !s.is_nilpotent() {
                    return Err(Error::Unsupported(format!(
                        "entry ({i},{j}) has pure even-variable terms: {e}"
                    )));
                }
                soul.entries[i][j] = s;
            }
        }
        Ok((self.body(), soul))
    }

    /// `X⁻¹ = Σ_k (−X₀⁻¹N)^k X₀⁻¹` for `X = X₀ + N` with invertible body.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square("inverse")?;
        let declared = self.parity().ok();
        let (body, soul) = self.body_and_soul()?;
        let body_inv = dense::inverse(&body)
            .ok_or_else(|| Error::NotInvertible("body of the matrix is singular".into()))?;
        let b = Self::from_rational(&self.ctx, self.cols, self.rows, &body_inv, None)?;
        let step = b.mul(&soul)?.neg();
        let mut term = b.clone();
        let mut acc = b;
        for _ in 0..self.nilpotency_bound() {
            term = step.mul(&term)?;
            if term.is_zero() {
                acc.declared = declared;
                return Ok(acc);
            }
            acc = acc.add(&term)?;
        }
        Err(Error::Unsupported("inverse series did not terminate".into()))
    }

    /// `exp(X)` for nilpotent `X`; the series is summed until `X^k = 0`.
    pub fn exp_nilpotent(&self) -> Result<Self> {
        self.require_square("exp")?;
        let mut acc = Self::identity(&self.ctx, self.rows);
        let mut term = acc.clone();
        for k in 1..=self.nilpotency_bound() as i64 {
            term = term.mul(self)?.scale(&rat(1, k));
            if term.is_zero() {
                return Ok(acc);
            }
            acc = acc.add(&term)?;
        }
        Err(Error::Precondition("exp needs a nilpotent matrix".into()))
    }

    /// `log(X)` for unipotent `X = 1 + N`.
    pub fn log_unipotent(&self) -> Result<Self> {
        self.require_square("log")?;
        let n = self.sub(&Self::identity(&self.ctx, self.rows))?;
        let mut acc = Self::zero(&self.ctx, self.rows, self.cols);
        let mut power = Self::identity(&self.ctx, self.rows);
        for k in 1..=self.nilpotency_bound() as i64 {
            power = power.mul(&n)?;
            if power.is_zero() {
                acc.declared = Some(crate::scalars::Parity::Even);
                return Ok(acc);
            }
            let c = rat(if k % 2 == 1 { 1 } else { -1 }, k);
            acc = acc.add(&power.scale(&c))?;
        }
        Err(Error::Precondition("log needs X − 1 nilpotent".into()))
    }

    /// True when every entry's body vanishes.
    pub fn has_zero_body(&self) -> bool {
        self.body().iter().flatten().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::super::BlockSignature;
    use super::*;
    use crate::scalars::{Parity, SuperPolynomial, VariableContext};

    #[test]
    fn unipotent_inverse() {
        let ctx = VariableContext::grassmann(1);
        let s = BlockSignature::new(1, 1);
        let xi = SuperPolynomial::odd_var(&ctx, 0);
        let one = SuperPolynomial::one(&ctx);
        let zero = SuperPolynomial::zero(&ctx);
        let x = SuperMatrix::new(
            &ctx,
            s,
            s,
            vec![vec![one.clone(), xi.clone()], vec![zero.clone(), one.clone()]],
            Some(Parity::Even),
        )
        .unwrap();
        let expected =
            SuperMatrix::new(&ctx, s, s, vec![vec![one.clone(), -&xi], vec![zero, one]], Some(Parity::Even))
                .unwrap();
        assert_eq!(x.inverse().unwrap(), expected);
        assert_eq!(x.mul(&x.inverse().unwrap()).unwrap(), SuperMatrix::identity(&ctx, s));
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let ctx = VariableContext::grassmann(2);
        let s = BlockSignature::new(2, 1);
        let z = SuperMatrix::zero(&ctx, s, s);
        assert_eq!(z.exp_nilpotent().unwrap(), SuperMatrix::identity(&ctx, s));
    }

    #[test]
    fn singular_body_and_non_nilpotent_are_rejected() {
        let ctx = VariableContext::grassmann(0);
        let s = BlockSignature::new(1, 1);
        let z = SuperMatrix::zero(&ctx, s, s);
        assert!(matches!(z.inverse(), Err(Error::NotInvertible(_))));
        let id = SuperMatrix::identity(&ctx, s);
        assert!(id.exp_nilpotent().is_err());
        assert!(id.scale(&rat(2, 1)).log_unipotent().is_err());
    }
}
