//! Exact linear algebra over ℚ.
//!
//! [`Reducer`] maintains a reduced row-echelon basis of a growing subspace
//! of sparse vectors indexed by an arbitrary ordered key, and can express
//! members of the span in terms of the vectors that were accepted. It backs
//! span closures, structure-constant extraction and every rank computation
//! in the crate.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalars::Rational;

/// Sparse vector keyed by `K`; zero entries are never stored.
pub type SparseVec<K> = BTreeMap<K, Rational>;

pub fn sparse_add_scaled<K: Ord + Clone>(acc: &mut SparseVec<K>, v: &SparseVec<K>, c: &Rational) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        let entry = acc.entry(k.clone()).or_insert_with(Rational::zero);
        *entry += x * c;
        if entry.is_zero() {
            acc.remove(k);
        }
    }
}

#[derive(Debug, Clone)]
struct Row<K> {
    pivot: K,
    vector: SparseVec<K>,
    /// Combination of accepted input vectors equal to `vector`.
    combo: SparseVec<usize>,
}

/// Incremental reduced row-echelon form.
#[derive(Debug, Clone)]
pub struct Reducer<K> {
    rows: Vec<Row<K>>,
    accepted: usize,
}

impl<K: Ord + Clone> Default for Reducer<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> Reducer<K> {
    pub fn new() -> Self {
        Self { rows: Vec::new(), accepted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; returns the remainder and the
    /// combination of accepted vectors that was subtracted.
    fn reduce(&self, v: &SparseVec<K>) -> (SparseVec<K>, SparseVec<usize>) {
        let mut rest = v.clone();
        let mut used = SparseVec::new();
        for row in &self.rows {
            if let Some(c) = rest.get(&row.pivot).cloned() {
                sparse_add_scaled(&mut rest, &row.vector, &-&c);
                sparse_add_scaled(&mut used, &row.combo, &c);
            }
        }
        (rest, used)
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Adds `v` if it is independent of the current span. Returns the index
    /// it was accepted under.
    pub fn insert(&mut self, v: &SparseVec<K>) -> Option<usize> {
        let (rest, used) = self.reduce(v);
        let (pivot, lead) = match rest.iter().next() {
            None => return None,
            Some((k, c)) => (k.clone(), c.clone()),
        };
        let index = self.accepted;
        self.accepted += 1;
        let inv = lead.recip();
        let mut vector = SparseVec::new();
        sparse_add_scaled(&mut vector, &rest, &inv);
        // rest = v - Σ used_i b_i, so the new row is (e_index - used) / lead.
        let mut combo = SparseVec::new();
        combo.insert(index, Rational::one());
        sparse_add_scaled(&mut combo, &used, &-Rational::one());
        let combo = combo.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        let new_row = Row { pivot: pivot.clone(), vector, combo };
        for row in &mut self.rows {
            if let Some(c) = row.vector.get(&pivot).cloned() {
                sparse_add_scaled(&mut row.vector, &new_row.vector, &-&c);
                sparse_add_scaled(&mut row.combo, &new_row.combo, &-&c);
            }
        }
        let at = self.rows.partition_point(|r| r.pivot < pivot);
        self.rows.insert(at, new_row);
        Some(index)
    }

    /// Coefficients of `v` in terms of the accepted vectors (in acceptance
    /// order), or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &SparseVec<K>) -> Option<SparseVec<usize>> {
        let (rest, used) = self.reduce(v);
        rest.is_empty().then_some(used)
    }
}

/// Dense rational matrix helpers (row-major `Vec<Vec<Rational>>`).
pub mod dense {
    use super::*;

    pub fn zeros(rows: usize, cols: usize) -> Vec<Vec<Rational>> {
        vec![vec![Rational::zero(); cols]; rows]
    }

    pub fn identity(n: usize) -> Vec<Vec<Rational>> {
        let mut m = zeros(n, n);
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Rational::one();
        }
        m
    }

    /// Reduced row-echelon form in place; returns pivot columns.
    pub fn rref(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    let (src, dst) = if i < r {
                        let (a, b) = m.split_at_mut(r);
                        (&b[0], &mut a[i])
                    } else {
                        let (a, b) = m.split_at_mut(i);
                        (&a[r], &mut b[0])
                    };
                    for (d, s) in dst.iter_mut().zip(src.iter()) {
                        *d -= &f * s;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        pivots
    }

    pub fn rank(m: &[Vec<Rational>], cols: usize) -> usize {
        let mut m = m.to_vec();
        rref(&mut m, cols).len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column, in column order.
    pub fn nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
        let mut m = m.to_vec();
        let pivots = rref(&mut m, cols);
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); cols];
                v[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m[r][f].clone();
                }
                v
            })
            .collect()
    }

    pub fn mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        let cols = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|j| {
                        row.iter()
                            .zip(b)
                            .filter(|(x, _)| !x.is_zero())
                            .fold(Rational::zero(), |acc, (x, brow)| acc + x * &brow[j])
                    })
                    .collect()
            })
            .collect()
    }

    /// Inverse by Gauss–Jordan, `None` if singular.
    pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
        let n = m.len();
        let mut aug: Vec<Vec<Rational>> =
            m.iter().zip(identity(n)).map(|(row, id)| row.iter().cloned().chain(id).collect()).collect();
        let pivots = rref(&mut aug, n);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    /// Solves `M x = b`; `None` if inconsistent. Free variables are set to 0.
    pub fn solve(m: &[Vec<Rational>], b: &[Rational], cols: usize) -> Option<Vec<Rational>> {
        let mut aug: Vec<Vec<Rational>> = m
            .iter()
            .zip(b)
            .map(|(row, x)| row.iter().cloned().chain(std::iter::once(x.clone())).collect())
            .collect();
        let pivots = rref(&mut aug, cols + 1);
        if pivots.last() == Some(&cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[r][cols].clone();
        }
        Some(x)
    }
}
