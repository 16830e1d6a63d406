use std::time::Instant;

use superalg::crossratio::*;
use superalg::random::Sampler;
use superalg::scalars::{int, Parity, SuperPolynomial, VariableContext};
use superalg::supermatrix::{BlockSignature, SuperMatrix};

fn config(samples: usize) -> HarnessConfig {
    HarnessConfig { samples, ..HarnessConfig::default() }
}

#[test]
fn matrix_cross_ratio_invariance() {
    for (m, n) in [(1, 0), (2, 0), (1, 1), (2, 1)] {
        let sig = BlockSignature::new(m, n);
        let variants: &[Variant] = if n == 0 { &[Variant::Det, Variant::Ber] } else { &[Variant::Ber] };
        for &v in variants {
            let t = Instant::now();
            let r = invariance_harness(v, sig, &config(40)).unwrap();
            eprintln!("{v:?} ({m}|{n}): {r:?} in {:?}", t.elapsed());
            assert!(r.ok(), "{:?}", r.failures.first());
            assert!(r.checked.iter().all(|&c| c > 0));
        }
    }
}

#[test]
fn queer_invariance() {
    for n in [1, 2] {
        let r = invariance_harness(Variant::Qet, BlockSignature::new(n, n), &config(30)).unwrap();
        eprintln!("qet({n}): {r:?}");
        assert!(r.ok(), "{:?}", r.failures.first());
        assert!(r.checked.iter().all(|&c| c > 0));
    }
}

#[test]
fn quadric_invariance() {
    for (m, n) in [(1, 0), (2, 0), (1, 2), (2, 2)] {
        let space = QuadraticSpace::standard(m, n).unwrap();
        let r = quadric_harness(&space, &config(40)).unwrap();
        eprintln!("quadric ({m}|{n}): {r:?}");
        assert!(r.ok(), "{:?}", r.failures.first());
        assert!(r.checked.iter().all(|&c| c > 0));
    }
}

fn sample_quadruple(seed: u64, sig: BlockSignature, ctx: &VariableContext) -> PointQuadruple {
    let mut s = Sampler::new(seed);
    let p: Vec<SuperMatrix> = (0..4).map(|_| s.matrix(ctx, sig, Parity::Even)).collect();
    PointQuadruple::new(p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone()).unwrap()
}

#[test]
fn det_matches_trace_and_determinant() {
    let ctx = VariableContext::grassmann(3);
    let sig = BlockSignature::new(2, 0);
    let mut done = 0;
    for seed in 0..30 {
        let q = sample_quadruple(seed, sig, &ctx);
        let Ok(x) = cross_ratio(&q) else { continue };
        let inv = invariants_det(&q).unwrap();
        let e = |i, j| x.entry(i, j).clone();
        let det = &(&e(0, 0) * &e(1, 1)) - &(&e(0, 1) * &e(1, 0));
        let tr = &e(0, 0) + &e(1, 1);
        assert_eq!(inv.coefficients, vec![det, -&tr, SuperPolynomial::one(&ctx)]);
        let ber = invariants_ber(&q, 2).unwrap();
        assert_eq!(ber.coefficients, inv.coefficients);
        done += 1;
    }
    assert!(done > 10);
}

#[test]
fn ber_series_matches_closed_form_on_1_1() {
    let ctx = VariableContext::grassmann(4);
    let sig = BlockSignature::new(1, 1);
    let mut done = 0;
    for seed in 0..40 {
        let q = sample_quadruple(seed, sig, &ctx);
        let Ok(x) = cross_ratio(&q) else { continue };
        let Ok(inv) = invariants_ber(&q, 3) else { continue };
        let (a, b, c, d) = (x.entry(0, 0), x.entry(0, 1), x.entry(1, 0), x.entry(1, 1));
        let dinv = d.inverse().unwrap();
        let pow = |k: u32| dinv.pow(k).unwrap();
        let bc = b * c;
        for k in 0..=3u32 {
            // (a − λ)/(d − λ) − bc/(d − λ)²
            let mut expect = &(a * &pow(k + 1)) - &(&bc * &pow(k + 2)).scale(&int(k as i64 + 1));
            if k > 0 {
                expect = &expect - &pow(k);
            }
            assert_eq!(inv.coefficients[k as usize], expect, "seed {seed} order {k}");
        }
        done += 1;
    }
    assert!(done > 10);
}

#[test]
fn qet_series_matches_closed_form_on_q1() {
    let ctx = VariableContext::grassmann(4);
    let mut done = 0;
    for seed in 0..40 {
        let mut s = Sampler::new(seed);
        let p: Vec<SuperMatrix> = (0..4).map(|_| s.queer(&ctx, 1, Parity::Even, false)).collect();
        let q = PointQuadruple::new(p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone()).unwrap();
        let Ok(inv) = invariants_qet(&q, 3) else { continue };
        let x = cross_ratio(&q).unwrap();
        let (a, b) = (x.entry(0, 0), x.entry(0, 1));
        let ainv = a.inverse().unwrap();
        for k in 0..=3u32 {
            // qet(X − λ) = b / (a − λ)
            assert_eq!(inv.coefficients[k as usize], b * &ainv.pow(k + 1).unwrap(), "seed {seed} order {k}");
        }
        done += 1;
    }
    assert!(done > 10);
}

#[test]
fn trivial_cases() {
    let ctx = VariableContext::grassmann(2);
    let sig = BlockSignature::new(1, 1);
    let id = SuperMatrix::identity(&ctx, sig);
    let z = SuperMatrix::zero(&ctx, sig, sig);
    let three = id.scale(&int(3));
    let q = PointQuadruple::new(three.clone(), z.clone(), id.scale(&int(2)), z).unwrap();
    assert_eq!(cross_ratio(&q).unwrap(), id);
    let ber = invariants_ber(&q, 2).unwrap();
    assert!(ber.coefficients[0].is_one() && ber.coefficients[1].is_zero() && ber.coefficients[2].is_zero());
    let qq = |k: i64| {
        SuperMatrix::queer(
            &ctx,
            &[vec![SuperPolynomial::constant(&ctx, int(k))]],
            &[vec![SuperPolynomial::zero(&ctx)]],
            Parity::Even,
        )
        .unwrap()
    };
    let q = PointQuadruple::new(qq(3), qq(0), qq(2), qq(1)).unwrap();
    assert!(invariants_qet(&q, 2).unwrap().coefficients.iter().all(SuperPolynomial::is_zero));
}
