//! Randomized exact invariance checks under Möbius generators.

use num_traits::Zero;
use serde::Serialize;

use super::quadric::difference;
use super::{
    cross_ratio_quadric, invariants_ber, invariants_det, invariants_qet, Moebius, PointQuadruple,
    QuadraticSpace, Variant,
};
use crate::error::{Error, Result};
use crate::linalg::dense;
use crate::random::Sampler;
use crate::scalars::{int, Parity, Rational, SuperPolynomial, VariableContext};
use crate::supermatrix::{BlockSignature, SuperMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MoebiusKind {
    Translation,
    Linear,
    Inversion,
}

impl MoebiusKind {
    pub const ALL: [MoebiusKind; 3] = [MoebiusKind::Translation, MoebiusKind::Linear, MoebiusKind::Inversion];
}

#[derive(Debug, Clone, Copy)]
pub struct HarnessConfig {
    pub samples: usize,
    pub seed: u64,
    pub odd_generators: usize,
    /// Series truncation; `None` picks `m + n` for Ber and `n` for qet.
    pub order: Option<usize>,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        Self { samples: 200, seed: crate::random::DEFAULT_SEED, odd_generators: 4, order: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessFailure {
    pub sample: usize,
    pub generator: MoebiusKind,
    pub coefficient: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub variant: Variant,
    pub signature: [usize; 2],
    pub samples: usize,
    /// Samples for which a non-degenerate quadruple was found.
    pub nondegenerate: usize,
    /// Successful comparisons per generator, in the order of
    /// [`MoebiusKind::ALL`].
    pub checked: [usize; 3],
    pub skipped: usize,
    pub failures: Vec<HarnessFailure>,
}

impl HarnessReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Degenerate draws are replaced by fresh ones at most this many times per
/// sample.
const MAX_REDRAWS: usize = 512;

fn skippable(e: &Error) -> bool {
    matches!(e, Error::Degenerate(_) | Error::NotInvertible(_))
}

fn collection(variant: Variant, q: &PointQuadruple, order: Option<usize>) -> Result<Vec<SuperPolynomial>> {
    let sig = q.signature();
    Ok(match variant {
        Variant::Det => invariants_det(q)?.coefficients,
        Variant::Ber => invariants_ber(q, order.unwrap_or(sig.dim()))?.coefficients,
        Variant::Qet => invariants_qet(q, order.unwrap_or(sig.even))?.coefficients,
        Variant::Quadric => return Err(Error::InvalidInput("use quadric_harness".into())),
    })
}

fn point(s: &mut Sampler, ctx: &VariableContext, sig: BlockSignature, variant: Variant) -> SuperMatrix {
    match variant {
        Variant::Qet => s.queer(ctx, sig.even, Parity::Even, false),
        _ => s.matrix(ctx, sig, Parity::Even),
    }
}

fn invertible(s: &mut Sampler, ctx: &VariableContext, sig: BlockSignature, variant: Variant) -> SuperMatrix {
    match variant {
        Variant::Qet => s.queer_invertible(ctx, sig.even),
        _ => s.invertible_even(ctx, sig),
    }
}

/// Draws random quadruples and checks that the selected collection is
/// unchanged by a random translation, a random block-linear map and the
/// inversion. Degenerate draws, including quadruples with a singular
/// point, are redrawn; moves that hit a singularity are skipped. Both are
/// counted in `skipped`.
pub fn invariance_harness(
    variant: Variant,
    sig: BlockSignature,
    config: &HarnessConfig,
) -> Result<HarnessReport> {
    if variant == Variant::Qet && sig.even != sig.odd {
        return Err(Error::SignatureMismatch("qet needs a (n|n) signature".into()));
    }
    let ctx = VariableContext::grassmann(config.odd_generators);
    let mut report = HarnessReport {
        variant,
        signature: [sig.even, sig.odd],
        samples: config.samples,
        nondegenerate: 0,
        checked: [0; 3],
        skipped: 0,
        failures: Vec::new(),
    };
    for sample in 0..config.samples {
        let mut s = Sampler::for_sample(config.seed, sample as u64);
        let mut drawn = None;
        for _ in 0..MAX_REDRAWS {
            let pts: Vec<SuperMatrix> = (0..4).map(|_| point(&mut s, &ctx, sig, variant)).collect();
            let q = PointQuadruple::new(pts[0].clone(), pts[1].clone(), pts[2].clone(), pts[3].clone())?;
            if pts.iter().any(|p| p.inverse().is_err()) {
                report.skipped += 1;
                continue;
            }
            match collection(variant, &q, config.order) {
                Ok(c) => {
                    drawn = Some((q, c));
                    break;
                }
                Err(e) if skippable(&e) => report.skipped += 1,
                Err(e) => return Err(e),
            }
        }
        let Some((q, base)) = drawn else { continue };
        report.nondegenerate += 1;
        let moves = [
            Moebius::translation(&point(&mut s, &ctx, sig, variant)),
            Moebius::linear(&invertible(&mut s, &ctx, sig, variant), &invertible(&mut s, &ctx, sig, variant)),
            Moebius::inversion(&ctx, sig),
        ];
        for (slot, (kind, g)) in MoebiusKind::ALL.iter().zip(&moves).enumerate() {
            let moved = match q.map(|z| g.apply(z)).and_then(|q2| collection(variant, &q2, config.order)) {
                Ok(c) => c,
                Err(e) if skippable(&e) => {
                    report.skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            match base.iter().zip(&moved).position(|(x, y)| x != y) {
                None if base.len() == moved.len() => report.checked[slot] += 1,
                idx => report.failures.push(HarnessFailure {
                    sample,
                    generator: *kind,
                    coefficient: idx.unwrap_or(base.len().min(moved.len())),
                }),
            }
        }
    }
    Ok(report)
}

/// Cayley transform `(1 − X)(1 + X)⁻¹` of a random rational element of
/// the orthosymplectic algebra of the form.
fn random_isometry(s: &mut Sampler, space: &QuadraticSpace) -> Option<Vec<Vec<Rational>>> {
    let sig = space.signature();
    let n = sig.dim();
    let g_inv = dense::inverse(space.gram())?;
    let mut k = dense::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            if sig.parity_of(i) != sig.parity_of(j) {
                continue;
            }
            let v = int(s.int_in(-2, 2));
            if sig.parity_of(i).is_odd() {
                k[i][j] = v.clone();
                k[j][i] = v;
            } else if i != j {
                k[i][j] = v.clone();
                k[j][i] = -v;
            }
        }
    }
    let x = dense::mul(&g_inv, &k);
    let id = dense::identity(n);
    let plus: Vec<Vec<Rational>> =
        id.iter().zip(&x).map(|(a, b)| a.iter().zip(b).map(|(u, v)| u + v).collect()).collect();
    let minus: Vec<Vec<Rational>> =
        id.iter().zip(&x).map(|(a, b)| a.iter().zip(b).map(|(u, v)| u - v).collect()).collect();
    Some(dense::mul(&minus, &dense::inverse(&plus)?))
}

fn random_point(s: &mut Sampler, ctx: &VariableContext, sig: BlockSignature) -> Vec<SuperPolynomial> {
    (0..sig.dim()).map(|i| s.element(ctx, sig.parity_of(i))).collect()
}

fn apply_rational(g: &[Vec<Rational>], x: &[SuperPolynomial]) -> Result<Vec<SuperPolynomial>> {
    g.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .try_fold(SuperPolynomial::zero(x[0].context()), |acc, (c, xi)| acc.checked_add(&xi.scale(c)))
        })
        .collect()
}

fn invert_point(space: &QuadraticSpace, x: &[SuperPolynomial]) -> Result<Vec<SuperPolynomial>> {
    let inv = space.norm(x)?.inverse().map_err(|_| Error::Degenerate("point is isotropic".into()))?;
    x.iter().map(|c| inv.checked_mul(c)).collect()
}

/// The quadric analogue of [`invariance_harness`]: generators are a random
/// rational isometry, a random translation and `x ↦ x / (x, x)`.
pub fn quadric_harness(space: &QuadraticSpace, config: &HarnessConfig) -> Result<HarnessReport> {
    let sig = space.signature();
    let ctx = VariableContext::grassmann(config.odd_generators);
    let mut report = HarnessReport {
        variant: Variant::Quadric,
        signature: [sig.even, sig.odd],
        samples: config.samples,
        nondegenerate: 0,
        checked: [0; 3],
        skipped: 0,
        failures: Vec::new(),
    };
    let crq = |p: &[Vec<SuperPolynomial>]| cross_ratio_quadric(space, &p[0], &p[1], &p[2], &p[3]);
    for sample in 0..config.samples {
        let mut s = Sampler::for_sample(config.seed, sample as u64);
        let mut drawn = None;
        for _ in 0..MAX_REDRAWS {
            let pts: Vec<Vec<SuperPolynomial>> = (0..4).map(|_| random_point(&mut s, &ctx, sig)).collect();
            let anisotropic = pts.iter().all(|p| space.norm(p).map(|v| !v.body().is_zero()).unwrap_or(false))
                && [(0, 1), (2, 1), (2, 3), (0, 3)].iter().all(|&(i, j)| {
                    difference(&pts[i], &pts[j])
                        .and_then(|d| space.norm(&d))
                        .map(|v| !v.body().is_zero())
                        .unwrap_or(false)
                });
            if anisotropic {
                drawn = Some(pts);
                break;
            }
            report.skipped += 1;
        }
        let Some(pts) = drawn else { continue };
        let base = crq(&pts)?;
        report.nondegenerate += 1;
        let shift = random_point(&mut s, &ctx, sig);
        let iso = (0..MAX_REDRAWS).find_map(|_| random_isometry(&mut s, space));
        for (slot, kind) in MoebiusKind::ALL.iter().enumerate() {
            let moved: Result<Vec<Vec<SuperPolynomial>>> = match kind {
                MoebiusKind::Translation => pts
                    .iter()
                    .map(|p| p.iter().zip(&shift).map(|(a, b)| a.checked_add(b)).collect())
                    .collect(),
                MoebiusKind::Linear => match &iso {
                    Some(g) => pts.iter().map(|p| apply_rational(g, p)).collect(),
                    None => Err(Error::NotInvertible("Cayley transform undefined".into())),
                },
                MoebiusKind::Inversion => pts.iter().map(|p| invert_point(space, p)).collect(),
            };
            let value = match moved.and_then(|m| crq(&m)) {
                Ok(v) => v,
                Err(e) if skippable(&e) => {
                    report.skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            if value == base {
                report.checked[slot] += 1;
            } else {
                report.failures.push(HarnessFailure { sample, generator: *kind, coefficient: 0 });
            }
        }
    }
    Ok(report)
}
