//! The even Poisson bracket on a Grassmann algebra `Λ(θ₁…θ_m)`.
//!
//! With a symmetric nondegenerate pairing `P` on the generators,
//!
//! `{f, g} = (−1)^{p(f)+1} Σ_{ij} P_ij ∂_i f ∂_j g`
//!
//! for homogeneous `f`, so that `{θ_i, θ_j} = P_ij`. The Hamiltonian field
//! `H_f = (−1)^{p(f)+1} Σ_{ij} P_ij ∂_i f ∂_j` satisfies `H_f(g) = {f, g}`.

use num_traits::Zero;

use super::PolyVectorField;
use crate::error::{Error, Result};
use crate::linalg::dense;
use crate::scalars::{Parity, Rational, SuperPolynomial, Var, VariableContext};

#[derive(Debug, Clone)]
pub struct OddPoissonContext {
    ctx: VariableContext,
    pairing: Vec<Vec<Rational>>,
}

impl OddPoissonContext {
    /// Pairs `(θ₁, θ₂), (θ₃, θ₄), …` dually; for odd `m` the last generator
    /// pairs with itself.
    pub fn standard(m: usize) -> Result<Self> {
        let mut p = dense::zeros(m, m);
        for k in 0..m / 2 {
            p[2 * k][2 * k + 1] = Rational::from_integer(1.into());
            p[2 * k + 1][2 * k] = Rational::from_integer(1.into());
        }
        if m % 2 == 1 {
            p[m - 1][m - 1] = Rational::from_integer(1.into());
        }
        Self::new(&VariableContext::grassmann(m), p)
    }

    pub fn new(ctx: &VariableContext, pairing: Vec<Vec<Rational>>) -> Result<Self> {
        let m = ctx.odd_count();
        if ctx.even_count() != 0 {
            return Err(Error::Unsupported("Poisson bracket needs a purely odd context".into()));
        }
        if pairing.len() != m || pairing.iter().any(|r| r.len() != m) {
            return Err(Error::Shape("pairing must be m × m".into()));
        }
        if (0..m).any(|i| (0..m).any(|j| pairing[i][j] != pairing[j][i])) {
            return Err(Error::InvalidInput("pairing must be symmetric".into()));
        }
        if dense::rank(&pairing, m) != m {
            return Err(Error::Degenerate("pairing is degenerate".into()));
        }
        Ok(Self { ctx: ctx.clone(), pairing })
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn pairing(&self) -> &[Vec<Rational>] {
        &self.pairing
    }

    pub fn bracket(&self, f: &SuperPolynomial, g: &SuperPolynomial) -> Result<SuperPolynomial> {
        let h = self.hamiltonian_field(f)?;
        h.apply(g)
    }

    pub fn hamiltonian_field(&self, f: &SuperPolynomial) -> Result<PolyVectorField> {
        self.ctx.check_same(f.context())?;
        let m = self.ctx.odd_count();
        let mut comps = vec![SuperPolynomial::zero(&self.ctx); m];
        for p in [Parity::Even, Parity::Odd] {
            let fp = f.parity_part(p);
            if fp.is_zero() {
                continue;
            }
            let derivs: Vec<SuperPolynomial> = (0..m).map(|i| fp.partial(Var::Odd(i))).collect();
            for (j, comp) in comps.iter_mut().enumerate() {
                for (i, d) in derivs.iter().enumerate() {
                    let c = &self.pairing[i][j];
                    if c.is_zero() || d.is_zero() {
                        continue;
                    }
                    let c = if p.is_odd() { c.clone() } else { -c.clone() };
                    *comp = comp.checked_add(&d.scale(&c))?;
                }
            }
        }
        PolyVectorField::new(&self.ctx, comps)
    }
}
