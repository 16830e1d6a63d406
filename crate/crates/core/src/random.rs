//! Seeded samplers for randomized checks.
//!
//! Every sampler draws from a [`ChaCha8Rng`], so a `(seed, stream)` pair
//! reproduces the same values on every platform. Coefficients are small
//! integers, which keeps exact arithmetic cheap without losing generality
//! for identity checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::dense;
use crate::scalars::{int, Monomial, Parity, Rational, SuperPolynomial, VariableContext};
use crate::supermatrix::{BlockSignature, SuperMatrix};

pub const DEFAULT_SEED: u64 = 0x5_eed0_fa19_eb4a;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Independent sampler for sample number `stream` under `seed`.
    pub fn for_sample(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { rng }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn nonzero_int(&mut self, bound: i64) -> i64 {
        loop {
            let v = self.int_in(-bound, bound);
            if v != 0 {
                return v;
            }
        }
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// Small rational `a/b` with `|a| ≤ 3`, `1 ≤ b ≤ 3`.
    pub fn rational(&mut self) -> Rational {
        let num = self.int_in(-3, 3);
        let den = self.int_in(1, 3);
        Rational::new(num.into(), den.into())
    }

    /// Homogeneous element of the soul ideal: a few monomials in the odd
    /// generators only, with no constant term.
    pub fn soul(&mut self, ctx: &VariableContext, parity: Parity) -> SuperPolynomial {
        let n = ctx.odd_count();
        let mut terms = Vec::new();
        let count = self.int_in(0, 2);
        for _ in 0..count {
            let mut mask = 0u64;
            for i in 0..n {
                if self.coin(0.35) {
                    mask |= 1 << i;
                }
            }
            if mask == 0 || Parity::from_bit(mask.count_ones() % 2) != parity {
                continue;
            }
            let m = Monomial::new(vec![0; ctx.even_count()], mask);
            terms.push((m, int(self.nonzero_int(3))));
        }
        SuperPolynomial::from_terms(ctx, terms).unwrap_or_else(|_| SuperPolynomial::zero(ctx))
    }

    /// Homogeneous element; even elements get a random body.
    pub fn element(&mut self, ctx: &VariableContext, parity: Parity) -> SuperPolynomial {
        let s = self.soul(ctx, parity);
        match parity {
            Parity::Even => &s + &SuperPolynomial::constant(ctx, int(self.int_in(-3, 3))),
            Parity::Odd => s,
        }
    }

    pub fn matrix(&mut self, ctx: &VariableContext, sig: BlockSignature, parity: Parity) -> SuperMatrix {
        self.matrix_with(ctx, sig, parity, |s, ctx, p| s.element(ctx, p))
    }

    /// Homogeneous matrix with zero body.
    pub fn nilpotent_matrix(
        &mut self,
        ctx: &VariableContext,
        sig: BlockSignature,
        parity: Parity,
    ) -> SuperMatrix {
        self.matrix_with(ctx, sig, parity, |s, ctx, p| s.soul(ctx, p))
    }

    fn matrix_with(
        &mut self,
        ctx: &VariableContext,
        sig: BlockSignature,
        parity: Parity,
        mut f: impl FnMut(&mut Self, &VariableContext, Parity) -> SuperPolynomial,
    ) -> SuperMatrix {
        let entries = (0..sig.dim())
            .map(|i| {
                (0..sig.dim())
                    .map(|j| {
                        let p = parity + sig.parity_of(i) + sig.parity_of(j);
                        f(self, ctx, p)
                    })
                    .collect()
            })
            .collect();
        SuperMatrix::new(ctx, sig, sig, entries, Some(parity)).expect("sampled parities are consistent")
    }

    /// Invertible `n × n` integer matrix.
    pub fn invertible_rational(&mut self, n: usize) -> Vec<Vec<Rational>> {
        loop {
            let m: Vec<Vec<Rational>> =
                (0..n).map(|_| (0..n).map(|_| int(self.int_in(-3, 3))).collect()).collect();
            if dense::rank(&m, n) == n {
                return m;
            }
        }
    }

    /// Even matrix whose body has invertible diagonal blocks.
    pub fn invertible_even(&mut self, ctx: &VariableContext, sig: BlockSignature) -> SuperMatrix {
        let a0 = self.invertible_rational(sig.even);
        let d0 = self.invertible_rational(sig.odd);
        let mut x = self.nilpotent_matrix(ctx, sig, Parity::Even);
        for (block, off) in [(&a0, 0), (&d0, sig.even)] {
            for (i, row) in block.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    let e = x.entry(off + i, off + j) + &SuperPolynomial::constant(ctx, c.clone());
                    x.set_entry(off + i, off + j, e);
                }
            }
        }
        x
    }

    /// `q(n)` matrix from random blocks.
    pub fn queer(&mut self, ctx: &VariableContext, n: usize, parity: Parity, nilpotent: bool) -> SuperMatrix {
        let block = |s: &mut Self, p: Parity| -> Vec<Vec<SuperPolynomial>> {
            (0..n)
                .map(|_| (0..n).map(|_| if nilpotent { s.soul(ctx, p) } else { s.element(ctx, p) }).collect())
                .collect()
        };
        let a = block(self, parity);
        let b = block(self, parity.flip());
        SuperMatrix::queer(ctx, &a, &b, parity).expect("blocks are n×n")
    }

    /// Even `q(n)` matrix with invertible body.
    pub fn queer_invertible(&mut self, ctx: &VariableContext, n: usize) -> SuperMatrix {
        let a0 = self.invertible_rational(n);
        let mut a: Vec<Vec<SuperPolynomial>> =
            (0..n).map(|_| (0..n).map(|_| self.soul(ctx, Parity::Even)).collect()).collect();
        for i in 0..n {
            for j in 0..n {
                a[i][j] = &a[i][j] + &SuperPolynomial::constant(ctx, a0[i][j].clone());
            }
        }
        let b: Vec<Vec<SuperPolynomial>> =
            (0..n).map(|_| (0..n).map(|_| self.soul(ctx, Parity::Odd)).collect()).collect();
        SuperMatrix::queer(ctx, &a, &b, Parity::Even).expect("blocks are n×n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let ctx = VariableContext::grassmann(4);
        let sig = BlockSignature::new(2, 1);
        let a = Sampler::for_sample(7, 3).matrix(&ctx, sig, Parity::Odd);
        let b = Sampler::for_sample(7, 3).matrix(&ctx, sig, Parity::Odd);
        assert_eq!(a, b);
        let samples: Vec<_> =
            (0..8).map(|s| Sampler::for_sample(7, s).matrix(&ctx, sig, Parity::Even)).collect();
        assert!(samples.windows(2).any(|w| w[0] != w[1]));
    }

    #[test]
    fn invertible_samples_have_invertible_blocks() {
        let ctx = VariableContext::grassmann(3);
        let mut s = Sampler::new(1);
        for _ in 0..10 {
            let x = s.invertible_even(&ctx, BlockSignature::new(2, 2));
            assert!(x.inverse().is_ok());
            assert!(s.queer_invertible(&ctx, 2).queer_determinant().is_ok());
        }
    }
}
