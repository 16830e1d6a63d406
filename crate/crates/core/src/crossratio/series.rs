use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::scalars::{Rational, SuperPolynomial, VariableContext};

/// Power series in a formal even parameter `λ`, truncated after `λ^order`,
/// with even Grassmann coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSeries {
    coeffs: Vec<SuperPolynomial>,
}

impl LambdaSeries {
    pub fn zero(ctx: &VariableContext, order: usize) -> Self {
        Self { coeffs: vec![SuperPolynomial::zero(ctx); order + 1] }
    }

    pub fn constant(c: &SuperPolynomial, order: usize) -> Self {
        let mut s = Self::zero(c.context(), order);
        s.coeffs[0] = c.clone();
        s
    }

    /// `Σ_k c_k λ^k`, truncated or zero-padded to `order`.
    pub fn from_coeffs(ctx: &VariableContext, coeffs: Vec<SuperPolynomial>, order: usize) -> Self {
        let mut s = Self::zero(ctx, order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[SuperPolynomial] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<SuperPolynomial> {
        self.coeffs
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn try_inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0]
            .inverse()
            .map_err(|_| Error::NotInvertible("constant term of the λ-series is not a unit".into()))?;
        let ctx = c0.context().clone();
        let mut out = Self::zero(&ctx, self.order());
        out.coeffs[0] = c0.clone();
        for k in 1..=self.order() {
            let mut acc = SuperPolynomial::zero(&ctx);
            for j in 1..=k {
                acc = &acc + &(&self.coeffs[j] * &out.coeffs[k - j]);
            }
            out.coeffs[k] = -&(&c0 * &acc);
        }
        Ok(out)
    }
}

impl Ring for LambdaSeries {
    fn zero_like(&self) -> Self {
        Self::zero(self.coeffs[0].context(), self.order())
    }
    fn one_like(&self) -> Self {
        Self::constant(&SuperPolynomial::one(self.coeffs[0].context()), self.order())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SuperPolynomial::is_zero)
    }
    fn add(&self, other: &Self) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }
    fn sub(&self, other: &Self) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }
    fn mul(&self, other: &Self) -> Self {
        let r = self.order();
        let mut out = self.zero_like();
        for i in 0..=r {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=r - i {
                out.coeffs[i + j] = &out.coeffs[i + j] + &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.try_inverse().ok()
    }
}
