use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::dense;
use crate::scalars::{Rational, SuperPolynomial};
use crate::supermatrix::BlockSignature;

/// `ℚ^{m|n}` with an even nondegenerate form: symmetric on the even part,
/// skew on the odd part, so that `(x, y) = (y, x)` for even Λ-points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSpace {
    sig: BlockSignature,
    gram: Vec<Vec<Rational>>,
}

impl QuadraticSpace {
    pub fn new(sig: BlockSignature, gram: Vec<Vec<Rational>>) -> Result<Self> {
        let n = sig.dim();
        if gram.len() != n || gram.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("Gram matrix must be dim × dim".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let (pi, pj) = (sig.parity_of(i), sig.parity_of(j));
                let ok = if pi != pj {
                    gram[i][j].is_zero()
                } else if pi.is_odd() {
                    gram[i][j] == -gram[j][i].clone()
                } else {
                    gram[i][j] == gram[j][i]
                };
                if !ok {
                    return Err(Error::InvalidInput(format!(
                        "Gram entry ({i}, {j}) breaks even supersymmetry"
                    )));
                }
            }
        }
        if dense::rank(&gram, n) != n {
            return Err(Error::Degenerate("form is degenerate".into()));
        }
        Ok(Self { sig, gram })
    }

    /// Identity on the even part, `J = [[0, 1], [−1, 0]]` on the odd part.
    pub fn standard(m: usize, n: usize) -> Result<Self> {
        if n % 2 == 1 {
            return Err(Error::InvalidInput("odd part of a quadratic space must be even-dimensional".into()));
        }
        let sig = BlockSignature::new(m, n);
        let mut g = dense::zeros(m + n, m + n);
        for (i, row) in g.iter_mut().enumerate().take(m) {
            row[i] = Rational::from_integer(1.into());
        }
        for k in 0..n / 2 {
            g[m + k][m + n / 2 + k] = Rational::from_integer(1.into());
            g[m + n / 2 + k][m + k] = Rational::from_integer((-1).into());
        }
        Self::new(sig, g)
    }

    pub fn signature(&self) -> BlockSignature {
        self.sig
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn check_point(&self, x: &[SuperPolynomial]) -> Result<()> {
        if x.len() != self.sig.dim() {
            return Err(Error::Shape("point has the wrong number of coordinates".into()));
        }
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() && c.parity() != Some(self.sig.parity_of(i)) {
                return Err(Error::Inhomogeneous(format!("coordinate {i} has the wrong parity")));
            }
        }
        Ok(())
    }

    /// `(x, y) = Σ x_i G_ij y_j`.
    pub fn pair(&self, x: &[SuperPolynomial], y: &[SuperPolynomial]) -> Result<SuperPolynomial> {
        let ctx = x.first().or(y.first()).map(|p| p.context().clone());
        let Some(ctx) = ctx else {
            return Err(Error::Shape("empty points".into()));
        };
        let mut acc = SuperPolynomial::zero(&ctx);
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                if !self.gram[i][j].is_zero() {
                    acc = acc.checked_add(&xi.checked_mul(yj)?.scale(&self.gram[i][j]))?;
                }
            }
        }
        Ok(acc)
    }

    pub fn norm(&self, x: &[SuperPolynomial]) -> Result<SuperPolynomial> {
        self.pair(x, x)
    }
}

pub(crate) fn difference(x: &[SuperPolynomial], y: &[SuperPolynomial]) -> Result<Vec<SuperPolynomial>> {
    x.iter().zip(y).map(|(a, b)| a.checked_sub(b)).collect()
}

/// `(A−B, A−B)/(C−B, C−B) · (C−D, C−D)/(A−D, A−D)`.
pub fn cross_ratio_quadric(
    space: &QuadraticSpace,
    a: &[SuperPolynomial],
    b: &[SuperPolynomial],
    c: &[SuperPolynomial],
    d: &[SuperPolynomial],
) -> Result<SuperPolynomial> {
    for p in [a, b, c, d] {
        space.check_point(p)?;
    }
    let n = |x: &[SuperPolynomial], y: &[SuperPolynomial]| space.norm(&difference(x, y)?);
    let inv = |v: SuperPolynomial, what: &str| {
        v.inverse().map_err(|_| Error::Degenerate(format!("{what} is isotropic")))
    };
    let cb = inv(n(c, b)?, "C − B")?;
    let ad = inv(n(a, d)?, "A − D")?;
    n(a, b)?.checked_mul(&cb)?.checked_mul(&n(c, d)?)?.checked_mul(&ad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, VariableContext};

    fn pt(ctx: &VariableContext, v: &[i64]) -> Vec<SuperPolynomial> {
        v.iter().map(|&x| SuperPolynomial::constant(ctx, int(x))).collect()
    }

    #[test]
    fn examples() {
        let ctx = VariableContext::grassmann(0);
        let e2 = QuadraticSpace::standard(2, 0).unwrap();
        let r = cross_ratio_quadric(
            &e2,
            &pt(&ctx, &[0, 0]),
            &pt(&ctx, &[1, 0]),
            &pt(&ctx, &[1, 1]),
            &pt(&ctx, &[0, 1]),
        )
        .unwrap();
        assert!(r.is_one());
        let e1 = QuadraticSpace::standard(1, 0).unwrap();
        let r = cross_ratio_quadric(&e1, &pt(&ctx, &[0]), &pt(&ctx, &[1]), &pt(&ctx, &[2]), &pt(&ctx, &[3]))
            .unwrap();
        assert_eq!(r.body(), Rational::new(1.into(), 9.into()));
        assert!(QuadraticSpace::new(BlockSignature::new(0, 2), dense::identity(2)).is_err());
    }
}
