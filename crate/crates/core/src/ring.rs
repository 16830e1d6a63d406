//! Minimal commutative-ring interface used by the determinant routines.
//!
//! Determinants are only ever taken of matrices whose entries lie in a
//! commutative ring: the even part of a Grassmann algebra, or power series
//! in λ over it.

use crate::error::{Error, Result};
use crate::scalars::SuperPolynomial;

pub trait Ring: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Inverse when the element is a unit, `None` otherwise.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Ring for SuperPolynomial {
    fn zero_like(&self) -> Self {
        SuperPolynomial::zero(self.context())
    }
    fn one_like(&self) -> Self {
        SuperPolynomial::one(self.context())
    }
    fn is_zero(&self) -> bool {
        SuperPolynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

fn check_square<T>(m: &[Vec<T>]) -> Result<()> {
    if m.iter().any(|row| row.len() != m.len()) {
        return Err(Error::Shape("determinant of a non-square matrix".into()));
    }
    Ok(())
}

/// Cofactor expansion along the first row. Division free.
pub fn det_laplace<T: Ring>(m: &[Vec<T>], one: &T) -> Result<T> {
    check_square(m)?;
    Ok(laplace(m, one))
}

fn laplace<T: Ring>(m: &[Vec<T>], one: &T) -> T {
    match m.len() {
        0 => one.clone(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = one.zero_like();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<T>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect()
                    })
                    .collect();
                let term = m[0][j].mul(&laplace(&minor, one));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// Fraction-free (Bareiss) elimination choosing, in each column, the lowest
/// row whose entry is a unit. The exact division by the previous pivot is
/// multiplication by its inverse. Falls back to cofactor expansion when a
/// column has no unit pivot (the determinant is then not a unit anyway).
pub fn det_bareiss<T: Ring>(m: &[Vec<T>], one: &T) -> Result<T> {
    check_square(m)?;
    let n = m.len();
    if n == 0 {
        return Ok(one.clone());
    }
    let mut a = m.to_vec();
    let mut negative = false;
    let mut prev_inv = one.clone();
    for k in 0..n {
        let Some((p, pivot_inv)) = (k..n).find_map(|i| a[i][k].unit_inverse().map(|inv| (i, inv))) else {
            return Ok(laplace(m, one));
        };
        if p != k {
            a.swap(p, k);
            negative = !negative;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.mul(&prev_inv);
            }
            a[i][k] = one.zero_like();
        }
        prev_inv = pivot_inv;
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negative { d.neg() } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, VariableContext};

    #[test]
    fn bareiss_matches_laplace_with_nilpotents() {
        let ctx = VariableContext::grassmann(4);
        let c = |v| SuperPolynomial::constant(&ctx, int(v));
        let t = |i, j| &SuperPolynomial::odd_var(&ctx, i) * &SuperPolynomial::odd_var(&ctx, j);
        // First column has a nilpotent top entry, forcing a row swap.
        let m = vec![
            vec![t(0, 1), c(1), &c(2) + &t(2, 3)],
            vec![c(3), t(1, 2), c(1)],
            vec![&c(1) + &t(0, 3), c(5), c(-2)],
        ];
        let one = SuperPolynomial::one(&ctx);
        assert_eq!(det_bareiss(&m, &one).unwrap(), det_laplace(&m, &one).unwrap());
        // Singular body: falls back to cofactors.
        let s = vec![vec![t(0, 1), t(2, 3)], vec![t(0, 2), t(1, 3)]];
        assert_eq!(det_bareiss(&s, &one).unwrap(), det_laplace(&s, &one).unwrap());
    }
}
