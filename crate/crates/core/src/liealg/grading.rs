//! ℤ-gradings induced by `ad h` for an even element `h`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::LieSuperAlgebra;
use crate::error::{Error, Result};
use crate::linalg::dense;
use crate::scalars::{int, Rational};

/// Largest eigenvalue magnitude searched for.
const EIGEN_BOUND: i32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradingReport {
    pub depth: i32,
    pub length: i32,
    /// Degree ↦ `[even, odd]` dimension.
    pub dims: BTreeMap<i32, [usize; 2]>,
}

impl GradingReport {
    pub fn from_algebra(g: &LieSuperAlgebra) -> Option<Self> {
        let degrees = g.degrees()?;
        let mut dims = BTreeMap::new();
        for (d, p) in degrees.iter().zip(g.parities()) {
            let e: &mut [usize; 2] = dims.entry(*d).or_default();
            e[p.bit() as usize] += 1;
        }
        let depth = -degrees.iter().copied().min().unwrap_or(0).min(0);
        let length = degrees.iter().copied().max().unwrap_or(0).max(0);
        Some(Self { depth, length, dims })
    }

    pub fn dim(&self, degree: i32) -> [usize; 2] {
        self.dims.get(&degree).copied().unwrap_or_default()
    }
}

impl LieSuperAlgebra {
    /// Rebases onto the eigenvectors of `ad h` and records the eigenvalues
    /// as degrees. The new basis is sorted by degree, then parity; basis
    /// elements that are already eigenvectors keep their names.
    pub fn grade_by_element(&self, h: &[Rational]) -> Result<(LieSuperAlgebra, GradingReport)> {
        if h.iter().enumerate().any(|(i, c)| !c.is_zero() && self.parity(i).is_odd()) {
            return Err(Error::Precondition("grading element must be even".into()));
        }
        let ad = self.ad_matrix(h)?;
        self.grade_diagonalizable(&ad)
    }

    /// Like [`grade_by_element`](Self::grade_by_element) for an even
    /// derivation given as a matrix (`d[k][j]` = component `k` of `D e_j`),
    /// such as `ad h` for `h` outside the algebra. The derivation property
    /// is verified on all basis pairs.
    pub fn grade_by_derivation(&self, d: &[Vec<Rational>]) -> Result<(LieSuperAlgebra, GradingReport)> {
        let n = self.dim();
        if d.len() != n || d.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("derivation matrix must be dim × dim".into()));
        }
        let column = |j: usize| -> Vec<Rational> { d.iter().map(|r| r[j].clone()).collect() };
        let apply = |v: &[Rational]| -> Vec<Rational> {
            (0..n).map(|k| v.iter().zip(&d[k]).fold(Rational::zero(), |acc, (a, b)| acc + a * b)).collect()
        };
        for j in 0..n {
            if (0..n).any(|k| !d[k][j].is_zero() && self.parity(k) != self.parity(j)) {
                return Err(Error::Precondition("derivation must be even".into()));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let (ei, ej) = (self.basis_vector(i), self.basis_vector(j));
                let lhs = apply(&self.bracket(&ei, &ej)?);
                let a = self.bracket(&column(i), &ej)?;
                let b = self.bracket(&ei, &column(j))?;
                if lhs.iter().zip(a.iter().zip(&b)).any(|(l, (x, y))| *l != x + y) {
                    return Err(Error::Precondition(format!(
                        "not a derivation on ({}, {})",
                        self.names()[i],
                        self.names()[j]
                    )));
                }
            }
        }
        self.grade_diagonalizable(d)
    }

    fn grade_diagonalizable(&self, ad: &[Vec<Rational>]) -> Result<(LieSuperAlgebra, GradingReport)> {
        let n = self.dim();
        let mut found: Vec<(i32, u32, usize, Vec<Rational>)> = Vec::new();
        for lambda in -EIGEN_BOUND..=EIGEN_BOUND {
            let mut shifted = ad.to_vec();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] -= int(lambda.into());
            }
            for v in dense::nullspace(&shifted, n) {
                let lead = v.iter().position(|c| !c.is_zero()).unwrap_or(0);
                found.push((lambda, self.parity(lead).bit(), lead, v));
            }
        }
        if found.len() != n {
            return Err(Error::Unsupported(format!(
                "ad h is not diagonalizable with integer eigenvalues in ±{EIGEN_BOUND} \
                 ({} of {n} eigenvectors found)",
                found.len()
            )));
        }
        found.sort_by_key(|a| (a.0, a.1, a.2));
        let names = found
            .iter()
            .map(|(_, _, lead, v)| {
                let single = v.iter().filter(|c| !c.is_zero()).count() == 1 && v[*lead] == int(1);
                if single {
                    self.names()[*lead].clone()
                } else {
                    combination_name(self, v)
                }
            })
            .collect();
        let degrees = found.iter().map(|f| f.0).collect();
        let vectors: Vec<Vec<Rational>> = found.into_iter().map(|f| f.3).collect();
        let graded = self.rebase(&vectors, names, Some(degrees))?;
        let report = GradingReport::from_algebra(&graded).expect("degrees were set");
        Ok((graded, report))
    }

    /// Copy with the given degrees, verified against the brackets.
    pub fn with_degrees(&self, degrees: Vec<i32>) -> Result<LieSuperAlgebra> {
        if degrees.len() != self.dim() {
            return Err(Error::Shape("one degree per basis element required".into()));
        }
        for ((i, j), v) in self.brackets() {
            if let Some(&k) = v.keys().find(|&&k| degrees[k] != degrees[i] + degrees[j]) {
                return Err(Error::InvalidInput(format!(
                    "[{}, {}] has a component on {} of the wrong degree",
                    self.names()[i],
                    self.names()[j],
                    self.names()[k]
                )));
            }
        }
        let mut g = self.clone();
        g.degrees = Some(degrees);
        Ok(g)
    }

    /// Indices of basis elements of the given degree.
    pub fn degree_indices(&self, degree: i32) -> Vec<usize> {
        self.degrees().map(|d| (0..d.len()).filter(|&i| d[i] == degree).collect()).unwrap_or_default()
    }
}

fn combination_name(g: &LieSuperAlgebra, v: &[Rational]) -> String {
    let mut s = String::new();
    for (i, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let neg = *c < Rational::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if neg {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if abs != int(1) {
            s.push_str(&crate::scalars::format_rational(&abs));
            s.push('*');
        }
        let name = &g.names()[i];
        if name.contains(['+', '-']) {
            s.push('(');
            s.push_str(name);
            s.push(')');
        } else {
            s.push_str(name);
        }
    }
    s
}
