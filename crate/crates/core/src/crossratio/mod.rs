//! Cross ratios of four points and their invariant collections.
//!
//! For even square `A, B, C, D` the cross ratio is
//!
//! `X = (A − B)(C − B)⁻¹(C − D)(A − D)⁻¹`.
//!
//! Under `Z ↦ (aZ + b)(cZ + d)⁻¹` it changes by conjugation, so every
//! conjugation-invariant function of `X − λ·1` yields invariants of the
//! quadruple: `det`, `Ber` or `qet`, expanded in powers of `λ`.

mod harness;
mod quadric;
mod series;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{det_laplace, Ring};
use crate::scalars::{int, Parity, Rational, SuperPolynomial};
use crate::supermatrix::{BlockSignature, MatrixJson, SuperMatrix};

pub use harness::{
    invariance_harness, quadric_harness, HarnessConfig, HarnessFailure, HarnessReport, MoebiusKind,
};
pub use quadric::{cross_ratio_quadric, QuadraticSpace};
pub use series::LambdaSeries;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointQuadruple {
    pub a: SuperMatrix,
    pub b: SuperMatrix,
    pub c: SuperMatrix,
    pub d: SuperMatrix,
}

impl PointQuadruple {
    pub fn new(a: SuperMatrix, b: SuperMatrix, c: SuperMatrix, d: SuperMatrix) -> Result<Self> {
        let sig = a.rows();
        for m in [&a, &b, &c, &d] {
            if !m.is_square() || m.rows() != sig {
                return Err(Error::SignatureMismatch("points must share a square signature".into()));
            }
            a.context().check_same(m.context())?;
            if m.parity()? != Parity::Even {
                return Err(Error::Precondition("points must be even matrices".into()));
            }
        }
        Ok(Self { a, b, c, d })
    }

    /// Scalar quadruple on `(1|0)`.
    pub fn scalars(ctx: &crate::scalars::VariableContext, v: [Rational; 4]) -> Result<Self> {
        let sig = BlockSignature::new(1, 0);
        let [a, b, c, d] = v.map(|x| SuperMatrix::from_rational(ctx, sig, sig, &[vec![x]], None));
        Self::new(a?, b?, c?, d?)
    }

    pub fn signature(&self) -> BlockSignature {
        self.a.rows()
    }

    pub fn points(&self) -> [&SuperMatrix; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn map(&self, f: impl Fn(&SuperMatrix) -> Result<SuperMatrix>) -> Result<Self> {
        Self::new(f(&self.a)?, f(&self.b)?, f(&self.c)?, f(&self.d)?)
    }

    pub fn to_json(&self) -> QuadrupleJson {
        QuadrupleJson { points: self.points().map(|m| m.to_json()).to_vec() }
    }

    pub fn from_json(doc: &QuadrupleJson) -> Result<Self> {
        let [a, b, c, d]: [&MatrixJson; 4] = doc
            .points
            .iter()
            .collect::<Vec<_>>()
            .try_into()
            .map_err(|_| Error::InvalidInput("a quadruple needs exactly four points".into()))?;
        let a = SuperMatrix::from_json(a)?;
        let ctx = a.context().clone();
        Self::new(
            a,
            SuperMatrix::from_json_in(&ctx, b)?,
            SuperMatrix::from_json_in(&ctx, c)?,
            SuperMatrix::from_json_in(&ctx, d)?,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadrupleJson {
    pub points: Vec<MatrixJson>,
}

fn degenerate(what: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| match e {
        Error::NotInvertible(_) => Error::Degenerate(format!("{what} is not invertible")),
        other => other,
    }
}

pub fn cross_ratio(q: &PointQuadruple) -> Result<SuperMatrix> {
    let cb_inv = q.c.sub(&q.b)?.inverse().map_err(degenerate("C − B"))?;
    let ad_inv = q.a.sub(&q.d)?.inverse().map_err(degenerate("A − D"))?;
    q.a.sub(&q.b)?.mul(&cb_inv)?.mul(&q.c.sub(&q.d)?)?.mul(&ad_inv)?.with_parity(Parity::Even)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Det,
    Ber,
    Qet,
    Quadric,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "det" => Ok(Variant::Det),
            "ber" => Ok(Variant::Ber),
            "qet" => Ok(Variant::Qet),
            "quadric" => Ok(Variant::Quadric),
            _ => Err(Error::InvalidInput(format!("unknown variant {s:?}"))),
        }
    }
}

/// Coefficients of `λ⁰, λ¹, …` of an invariant function of `X − λ·1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantCollection {
    pub variant: Variant,
    pub order: usize,
    pub coefficients: Vec<SuperPolynomial>,
}

fn series_matrix(x: &[Vec<SuperPolynomial>], lambda_shift: bool, order: usize) -> Vec<Vec<LambdaSeries>> {
    x.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, e)| {
                    let mut s = LambdaSeries::constant(e, order);
                    if lambda_shift && i == j && order > 0 {
                        let minus_one = SuperPolynomial::constant(e.context(), int(-1));
                        s = s.add(&LambdaSeries::from_coeffs(
                            e.context(),
                            vec![SuperPolynomial::zero(e.context()), minus_one],
                            order,
                        ));
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// `det(X − λ·1)` for purely even signatures: all `m + 1` coefficients.
pub fn invariants_det(q: &PointQuadruple) -> Result<InvariantCollection> {
    let sig = q.signature();
    if sig.odd != 0 {
        return Err(Error::SignatureMismatch("det invariants need a purely even signature".into()));
    }
    let x = cross_ratio(q)?;
    let m = sig.even;
    let s = series_matrix(x.entries(), true, m);
    let one = LambdaSeries::constant(&SuperPolynomial::one(x.context()), m);
    let det = det_laplace(&s, &one)?;
    Ok(InvariantCollection { variant: Variant::Det, order: m, coefficients: det.into_coeffs() })
}

fn grid(x: &SuperMatrix, entries: Vec<Vec<SuperPolynomial>>, cols: usize) -> Result<SuperMatrix> {
    let sig_r = BlockSignature::new(entries.len(), 0);
    SuperMatrix::new(x.context(), sig_r, BlockSignature::new(cols, 0), entries, None)
}

/// `Ber(X − λ·1)` expanded about `λ = 0` through `λ^order`, using
/// `(D − λ)⁻¹ = Σ_k λ^k D^{−k−1}`.
pub fn invariants_ber(q: &PointQuadruple, order: usize) -> Result<InvariantCollection> {
    let x = cross_ratio(q)?;
    let ctx = x.context().clone();
    let (m, n) = (q.signature().even, q.signature().odd);
    let [a, b, c, d] = x.blocks();
    let one = LambdaSeries::constant(&SuperPolynomial::one(&ctx), order);
    let det_a_part = if m == 0 {
        one.clone()
    } else if n == 0 {
        det_laplace(&series_matrix(&a, true, order), &one)?
    } else {
        let d_inv = grid(&x, d.clone(), n)?
            .inverse()
            .map_err(|_| Error::NotInvertible("D block of the cross ratio has singular body".into()))?;
        let (b, c) = (grid(&x, b, n)?, grid(&x, c, m)?);
        let mut schur = series_matrix(&a, true, order);
        let mut power = d_inv.clone();
        for k in 0..=order {
            let term = b.mul(&power)?.mul(&c)?;
            for (i, row) in schur.iter_mut().enumerate() {
                for (j, e) in row.iter_mut().enumerate() {
                    let mut coeffs = vec![SuperPolynomial::zero(&ctx); k + 1];
                    coeffs[k] = term.entry(i, j).clone();
                    *e = e.sub(&LambdaSeries::from_coeffs(&ctx, coeffs, order));
                }
            }
            power = power.mul(&d_inv)?;
        }
        det_laplace(&schur, &one)?
    };
    let ber = if n == 0 {
        det_a_part
    } else {
        let det_d = det_laplace(&series_matrix(&d, true, order), &one)?;
        let inv = det_d
            .try_inverse()
            .map_err(|_| Error::NotInvertible("D block of the cross ratio has singular body".into()))?;
        det_a_part.mul(&inv)
    };
    Ok(InvariantCollection { variant: Variant::Ber, order, coefficients: ber.into_coeffs() })
}

/// `qet(X − λ·1) = qet X − Σ_{k≥1} λ^k qtr(X^{−k}) / k` for `X` of `q(n)`
/// shape, using additivity of `qet` and `log(1 − λY) = −Σ λ^k Y^k / k`.
pub fn invariants_qet(q: &PointQuadruple, order: usize) -> Result<InvariantCollection> {
    for p in q.points() {
        p.check_queer()?;
    }
    let x = cross_ratio(q)?;
    x.check_queer()?;
    let mut coefficients = vec![x.queer_determinant()?];
    let x_inv = x.inverse()?;
    let mut power = x_inv.clone();
    for k in 1..=order {
        coefficients.push(power.queer_trace()?.scale(&Rational::new((-1).into(), (k as i64).into())));
        power = power.mul(&x_inv)?;
    }
    Ok(InvariantCollection { variant: Variant::Qet, order, coefficients })
}

/// A fractional-linear map `Z ↦ (aZ + b)(cZ + d)⁻¹` with square blocks of
/// the point signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Moebius {
    pub a: SuperMatrix,
    pub b: SuperMatrix,
    pub c: SuperMatrix,
    pub d: SuperMatrix,
}

impl Moebius {
    pub fn translation(t: &SuperMatrix) -> Self {
        let (ctx, sig) = (t.context(), t.rows());
        let id = SuperMatrix::identity(ctx, sig);
        Self { a: id.clone(), b: t.clone(), c: SuperMatrix::zero(ctx, sig, sig), d: id }
    }

    pub fn linear(a: &SuperMatrix, d: &SuperMatrix) -> Self {
        let (ctx, sig) = (a.context(), a.rows());
        let zero = SuperMatrix::zero(ctx, sig, sig);
        Self { a: a.clone(), b: zero.clone(), c: zero, d: d.clone() }
    }

    pub fn inversion(ctx: &crate::scalars::VariableContext, sig: BlockSignature) -> Self {
        let id = SuperMatrix::identity(ctx, sig);
        let zero = SuperMatrix::zero(ctx, sig, sig);
        Self { a: zero.clone(), b: id.clone(), c: id, d: zero }
    }

    pub fn apply(&self, z: &SuperMatrix) -> Result<SuperMatrix> {
        let den = self.c.mul(z)?.add(&self.d)?.inverse().map_err(degenerate("cZ + d"))?;
        self.a.mul(z)?.add(&self.b)?.mul(&den)?.with_parity(Parity::Even)
    }
}

pub fn moebius_apply(g: &Moebius, z: &SuperMatrix) -> Result<SuperMatrix> {
    g.apply(z)
}
