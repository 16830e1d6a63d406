//! Depth-one gradings of the matrix series. Expected dimensions are
//! computed here from the block descriptions of `g₀` and `g₋₁`.

use superalg::liealg::{split_orthogonal_form, GradingReport, LieSuperAlgebra, MatrixRealization, Series};
use superalg::linalg::dense;
use superalg::scalars::{int, rat, Rational};

type Mat = Vec<Vec<Rational>>;

fn diag(entries: &[Rational]) -> Mat {
    let mut m = dense::zeros(entries.len(), entries.len());
    for (i, c) in entries.iter().enumerate() {
        m[i][i] = c.clone();
    }
    m
}

fn grade(g: &LieSuperAlgebra, r: &MatrixRealization, h: &Mat) -> (LieSuperAlgebra, GradingReport) {
    let (gr, report) = match r.coordinates(h) {
        Some(coords) => g.grade_by_element(&coords).unwrap(),
        None => g.grade_by_derivation(&r.derivation_of(h).unwrap()).unwrap(),
    };
    assert!(gr.check_axioms().ok);
    (gr, report)
}

fn gl_dims(m: usize, n: usize) -> [usize; 2] {
    [m * m + n * n, 2 * m * n]
}

fn add(a: [usize; 2], b: [usize; 2]) -> [usize; 2] {
    [a[0] + b[0], a[1] + b[1]]
}

fn sub_even(a: [usize; 2], k: usize) -> [usize; 2] {
    [a[0] - k, a[1]]
}

fn gr_h(m: usize, n: usize, p: usize, q: usize) -> Mat {
    let e: Vec<Rational> =
        (0..m).map(|i| int((i < p) as i64)).chain((0..n).map(|i| int((i < q) as i64))).collect();
    diag(&e)
}

#[test]
fn gr_gl_and_sl() {
    for (m, n) in [(2, 1), (1, 2), (3, 1), (2, 2), (3, 0)] {
        for p in 0..=m {
            for q in 0..=n {
                if (p, q) == (0, 0) || (p, q) == (m, n) {
                    continue;
                }
                let s = Series::Gl(m, n);
                let (g, r) = (s.build().unwrap(), s.realization().unwrap());
                let (_, rep) = grade(&g, &r, &gr_h(m, n, p, q));
                let g0 = add(gl_dims(p, q), gl_dims(m - p, n - q));
                let g1 = [p * (m - p) + q * (n - q), p * (n - q) + q * (m - p)];
                assert_eq!(rep.dim(0), g0, "gl({m}|{n}) p={p} q={q}");
                assert_eq!(rep.dim(-1), g1);
                assert_eq!(rep.dim(1), g1);
                assert_eq!((rep.depth, rep.length), (1, 1));

                // sl: shift h by a multiple of the identity when m ≠ n;
                // for m = n and p ≠ q it acts as an outer derivation.
                let s = Series::Sl(m, n);
                let (g, r) = (s.build().unwrap(), s.realization().unwrap());
                let mut h = gr_h(m, n, p, q);
                if m != n {
                    let c = rat(p as i64 - q as i64, m as i64 - n as i64);
                    for (i, row) in h.iter_mut().enumerate() {
                        row[i] -= &c;
                    }
                }
                let (_, rep) = grade(&g, &r, &h);
                assert_eq!(rep.dim(0), sub_even(g0, 1), "sl({m}|{n}) p={p} q={q}");
                assert_eq!(rep.dim(-1), g1);
            }
        }
    }
}

#[test]
fn gr_psl() {
    for (m, p) in [(2, 1), (3, 1)] {
        let s = Series::Psl(m);
        let (g, r) = (s.build().unwrap(), s.realization().unwrap());
        let (_, rep) = grade(&g, &r, &gr_h(m, m, p, p));
        let g0 = sub_even(add(gl_dims(p, p), gl_dims(m - p, m - p)), 2);
        assert_eq!(rep.dim(0), g0);
        assert_eq!(rep.dim(-1), [2 * p * (m - p), 2 * p * (m - p)]);
    }
}

#[test]
fn q_osp() {
    for (m, n) in [(2, 1), (3, 1), (4, 1), (3, 0), (4, 0), (2, 2)] {
        let gram = split_orthogonal_form(m, 1).unwrap();
        let r = MatrixRealization::osp_with_form(m, n, &gram, false).unwrap();
        let g = r.lie_algebra("osp").unwrap();
        let mut e = vec![int(0); m + 2 * n];
        e[0] = int(1);
        e[1] = int(-1);
        let (_, rep) = grade(&g, &r, &diag(&e));
        let k = m - 2;
        let osp = [k * k.saturating_sub(1) / 2 + n * (2 * n + 1), 2 * n * k];
        assert_eq!(rep.dim(0), [osp[0] + 1, osp[1]], "osp({m}|{})", 2 * n);
        assert_eq!(rep.dim(-1), [k, 2 * n]);
        assert_eq!((rep.depth, rep.length), (1, 1));
    }
}

#[test]
fn olgr_osp() {
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 0), (3, 0), (0, 2)] {
        let mut gram = dense::zeros(2 * m, 2 * m);
        for i in 0..m {
            gram[i][i + m] = int(1);
            gram[i + m][i] = int(1);
        }
        let r = MatrixRealization::osp_with_form(2 * m, n, &gram, false).unwrap();
        let g = r.lie_algebra("osp").unwrap();
        let half = rat(1, 2);
        let e: Vec<Rational> = (0..2 * m)
            .map(|i| if i < m { half.clone() } else { -half.clone() })
            .chain((0..2 * n).map(|i| if i < n { half.clone() } else { -half.clone() }))
            .collect();
        let (_, rep) = grade(&g, &r, &diag(&e));
        assert_eq!(rep.dim(0), gl_dims(m, n), "osp({}|{})", 2 * m, 2 * n);
        let lambda2 = [m * m.saturating_sub(1) / 2 + n * (n + 1) / 2, m * n];
        assert_eq!(rep.dim(-1), lambda2);
        assert_eq!(rep.dim(1), lambda2);
    }
}

#[test]
fn qgr_sq_psq() {
    for (n, p) in [(2, 1), (3, 1), (3, 2)] {
        let mut e = vec![int(0); 2 * n];
        for i in 0..p {
            e[i] = int(1);
            e[n + i] = int(1);
        }
        let h = diag(&e);
        let g1 = [p * (n - p), p * (n - p)];
        // q(p) ⊕ q(n−p) has dims (p² + (n−p)² | p² + (n−p)²)
        let qq = p * p + (n - p) * (n - p);
        for (s, g0) in [(Series::Sq(n), [qq, qq - 1]), (Series::Psq(n), [qq - 1, qq - 1])] {
            let (g, r) = (s.build().unwrap(), s.realization().unwrap());
            let (_, rep) = grade(&g, &r, &h);
            assert_eq!(rep.dim(0), g0, "{s} p={p}");
            assert_eq!(rep.dim(-1), g1);
            assert_eq!(rep.dim(1), g1);
        }
    }
}

#[test]
fn peq() {
    for n in 2..=4 {
        let mut e = vec![int(0); 2 * n];
        e[0] = int(-1);
        e[n] = int(1);
        let h = diag(&e);
        for (s, trace_free) in [(Series::Pe(n), 0), (Series::Spe(n), 1)] {
            let (g, r) = (s.build().unwrap(), s.realization().unwrap());
            let (gr, rep) = grade(&g, &r, &h);
            // g₀ = cpe(n−1): pe(n−1) ⊕ ⟨h⟩ (trace-free for spe).
            let k = n - 1;
            assert_eq!(rep.dim(0), [k * k + 1 - trace_free, k * k], "{s}");
            assert_eq!(rep.dim(-1), [k, k]);
            assert_eq!((rep.depth, rep.length), (1, 2));
            assert_eq!(rep.dim(2), [0, 1]);
            assert_eq!(gr.degree_indices(-1).len(), 2 * k);
        }
    }
}

#[test]
fn pegr_both_modules() {
    for (n, p) in [(2usize, 1usize), (3, 1), (3, 2), (4, 2)] {
        let q = n - p;
        let s2 = [p * q, p * (p + 1) / 2 + q * q.saturating_sub(1) / 2];
        let l2 = [p * q, p * p.saturating_sub(1) / 2 + q * (q + 1) / 2];
        for sign in [1i64, -1] {
            let d: Vec<Rational> = (0..n).map(|i| rat(if i < p { sign } else { -sign }, 2)).collect();
            let e: Vec<Rational> = d.iter().cloned().chain(d.iter().map(|c| -c.clone())).collect();
            let h = diag(&e);
            let (g, r) = (Series::Pe(n).build().unwrap(), Series::Pe(n).realization().unwrap());
            let (_, rep) = grade(&g, &r, &h);
            assert_eq!(rep.dim(0), gl_dims(p, q), "pe({n}) p={p}");
            let m = rep.dim(-1);
            assert!(m == s2 || m == l2, "pe({n}) p={p}: {m:?}");
            let expected = if sign == 1 { s2 } else { l2 };
            assert_eq!(m, expected);
            let (g, r) = (Series::Spe(n).build().unwrap(), Series::Spe(n).realization().unwrap());
            let (_, rep) = grade(&g, &r, &h);
            assert_eq!(rep.dim(0), sub_even(gl_dims(p, q), 1));
            assert_eq!(rep.dim(-1), expected);
        }
    }
}
