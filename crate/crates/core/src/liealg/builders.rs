//! Classical matrix series realized inside `gl(m|n)` by linear conditions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::LieSuperAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{dense, Reducer, SparseVec};
use crate::scalars::{format_rational, int, Parity, Rational};
use crate::supermatrix::BlockSignature;

type Mat = Vec<Vec<Rational>>;

/// The classical series with builders. `Osp(m, n)` is `osp(m|2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    Gl(usize, usize),
    Sl(usize, usize),
    Psl(usize),
    Q(usize),
    Sq(usize),
    Psq(usize),
    Pe(usize),
    Spe(usize),
    Osp(usize, usize),
}

const MAX_PARAM: usize = 4;

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Series::Gl(m, n) => write!(f, "gl({m}|{n})"),
            Series::Sl(m, n) => write!(f, "sl({m}|{n})"),
            Series::Psl(n) => write!(f, "psl({n}|{n})"),
            Series::Q(n) => write!(f, "q({n})"),
            Series::Sq(n) => write!(f, "sq({n})"),
            Series::Psq(n) => write!(f, "psq({n})"),
            Series::Pe(n) => write!(f, "pe({n})"),
            Series::Spe(n) => write!(f, "spe({n})"),
            Series::Osp(m, n) => write!(f, "osp({m}|{})", 2 * n),
        }
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse series {s:?}"));
        let s = s.trim();
        let open = s.find('(').ok_or_else(bad)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let nums: Vec<usize> =
            inner.split('|').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_>>()?;
        let series = match (&s[..open], nums.as_slice()) {
            ("gl", [m, n]) => Series::Gl(*m, *n),
            ("sl", [m, n]) => Series::Sl(*m, *n),
            ("gl", [n]) => Series::Gl(*n, 0),
            ("sl", [n]) => Series::Sl(*n, 0),
            ("psl", [m, n]) if m == n => Series::Psl(*m),
            ("q", [n]) => Series::Q(*n),
            ("sq", [n]) => Series::Sq(*n),
            ("psq", [n]) => Series::Psq(*n),
            ("pe", [n]) => Series::Pe(*n),
            ("spe", [n]) => Series::Spe(*n),
            ("osp", [m, n2]) if n2 % 2 == 0 => Series::Osp(*m, n2 / 2),
            _ => return Err(bad()),
        };
        Ok(series)
    }
}

impl Series {
    pub fn build(self) -> Result<LieSuperAlgebra> {
        self.realization()?.lie_algebra(self.to_string())
    }

    pub fn realization(self) -> Result<MatrixRealization> {
        let unsupported = || Error::Unsupported(format!("{self} is outside the supported range"));
        let check = |vals: &[usize], min: usize| {
            if vals.iter().any(|&v| v > MAX_PARAM) || vals.iter().sum::<usize>() < min {
                Err(unsupported())
            } else {
                Ok(())
            }
        };
        match self {
            Series::Gl(m, n) => {
                check(&[m, n], 1)?;
                MatrixRealization::from_conditions(BlockSignature::new(m, n), |_, _| vec![], false)
            }
            Series::Sl(m, n) => {
                check(&[m, n], 2)?;
                let sig = BlockSignature::new(m, n);
                MatrixRealization::from_conditions(sig, |x, _| vec![supertrace(sig, x)], false)
            }
            Series::Psl(n) => {
                check(&[n], 2)?;
                let sig = BlockSignature::new(n, n);
                MatrixRealization::from_conditions(sig, |x, _| vec![supertrace(sig, x), trace(x)], true)
            }
            Series::Q(n) | Series::Sq(n) | Series::Psq(n) => {
                check(&[n], 1)?;
                if matches!(self, Series::Psq(_)) && n < 2 {
                    return Err(unsupported());
                }
                let sig = BlockSignature::new(n, n);
                let pi = odd_involution(n);
                let sq = !matches!(self, Series::Q(_));
                let psq = matches!(self, Series::Psq(_));
                MatrixRealization::from_conditions(
                    sig,
                    move |x, p| {
                        let mut c = flatten(&supercommutator(x, p, &pi, Parity::Odd));
                        if sq {
                            c.push(queer_trace(n, x));
                        }
                        if psq {
                            c.push(trace(x));
                        }
                        c
                    },
                    psq,
                )
            }
            Series::Pe(n) | Series::Spe(n) => {
                check(&[n], 1)?;
                if matches!(self, Series::Spe(_)) && n < 2 {
                    return Err(unsupported());
                }
                let sig = BlockSignature::new(n, n);
                let j = symplectic(n);
                let spe = matches!(self, Series::Spe(_));
                MatrixRealization::from_conditions(
                    sig,
                    move |x, p| {
                        let mut c = flatten(&pe_condition(sig, x, p, &j, false));
                        if spe {
                            c.push(supertrace(sig, x));
                        }
                        c
                    },
                    false,
                )
            }
            Series::Osp(m, n) => {
                check(&[m, n], 1)?;
                MatrixRealization::osp_with_form(m, n, &dense::identity(m), false)
            }
        }
    }
}

/// Even Gram matrix of `m` coordinates whose first `2·pairs` coordinates
/// form hyperbolic pairs `(e_1, e_2), (e_3, e_4), …` and whose remaining
/// coordinates are orthonormal.
pub fn split_orthogonal_form(m: usize, pairs: usize) -> Result<Mat> {
    if 2 * pairs > m {
        return Err(Error::InvalidInput(format!("{pairs} hyperbolic pairs do not fit in dimension {m}")));
    }
    let mut g = dense::zeros(m, m);
    for k in 0..pairs {
        g[2 * k][2 * k + 1] = Rational::one();
        g[2 * k + 1][2 * k] = Rational::one();
    }
    for (i, row) in g.iter_mut().enumerate().skip(2 * pairs) {
        row[i] = Rational::one();
    }
    Ok(g)
}

/// A homogeneous basis of matrices spanning a subspace of `Mat(m|n)`,
/// possibly taken modulo the identity.
#[derive(Debug, Clone)]
pub struct MatrixRealization {
    sig: BlockSignature,
    matrices: Vec<Mat>,
    parities: Vec<Parity>,
    names: Vec<String>,
    modulo_identity: bool,
    reducer: Reducer<(usize, usize)>,
}

impl MatrixRealization {
    /// Solves `cond(X, π) = 0` on homogeneous matrices of each parity `π`.
    pub fn from_conditions(
        sig: BlockSignature,
        cond: impl Fn(&Mat, Parity) -> Vec<Rational>,
        modulo_identity: bool,
    ) -> Result<Self> {
        let n = sig.dim();
        let mut matrices = Vec::new();
        let mut parities = Vec::new();
        for p in [Parity::Even, Parity::Odd] {
            let slots: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| sig.parity_of(i) + sig.parity_of(j) == p)
                .collect();
            if slots.is_empty() {
                continue;
            }
            let images: Vec<Vec<Rational>> = slots
                .iter()
                .map(|&(i, j)| {
                    let mut e = dense::zeros(n, n);
                    e[i][j] = Rational::one();
                    cond(&e, p)
                })
                .collect();
            let rows = images.first().map_or(0, Vec::len);
            let system: Mat = (0..rows).map(|r| images.iter().map(|col| col[r].clone()).collect()).collect();
            let kernel =
                if rows == 0 { dense::identity(slots.len()) } else { dense::nullspace(&system, slots.len()) };
            for v in kernel {
                let mut x = dense::zeros(n, n);
                for (c, &(i, j)) in v.iter().zip(&slots) {
                    x[i][j] = c.clone();
                }
                matrices.push(x);
                parities.push(p);
            }
        }
        Self::from_matrices(sig, matrices, parities, modulo_identity)
    }

    pub fn from_matrices(
        sig: BlockSignature,
        matrices: Vec<Mat>,
        parities: Vec<Parity>,
        modulo_identity: bool,
    ) -> Result<Self> {
        let mut reducer = Reducer::new();
        let mut names = Vec::with_capacity(matrices.len());
        for (k, x) in matrices.iter().enumerate() {
            if reducer.insert(&sparse(x)).is_none() {
                return Err(Error::InvalidInput("realization matrices are dependent".into()));
            }
            let mut name = matrix_name(x).unwrap_or_else(|| format!("v{}", k + 1));
            if names.contains(&name) {
                name = format!("{name}#{}", k + 1);
            }
            names.push(name);
        }
        if modulo_identity && reducer.insert(&sparse(&dense::identity(sig.dim()))).is_none() {
            return Err(Error::InvalidInput("identity lies in the quotient basis".into()));
        }
        Ok(Self { sig, matrices, parities, names, modulo_identity, reducer })
    }

    /// `osp(m|2n)` preserving the even form `gram ⊕ J_{2n}`; with
    /// `jordan = true`, the Jordan subspace `X^{st} B = B X` instead.
    pub fn osp_with_form(m: usize, n: usize, gram: &[Vec<Rational>], jordan: bool) -> Result<Self> {
        if gram.len() != m || dense::rank(gram, m) != m {
            return Err(Error::InvalidInput("even Gram matrix must be m×m and nondegenerate".into()));
        }
        let sig = BlockSignature::new(m, 2 * n);
        let mut b = dense::zeros(m + 2 * n, m + 2 * n);
        for i in 0..m {
            for j in 0..m {
                b[i][j] = gram[i][j].clone();
            }
        }
        let j = symplectic(n);
        for i in 0..2 * n {
            for k in 0..2 * n {
                b[m + i][m + k] = j[i][k].clone();
            }
        }
        Self::from_conditions(
            sig,
            move |x, p| {
                let lhs = dense::mul(&supertranspose(sig, x, p), &b);
                let rhs = dense::mul(&b, x);
                let s = if jordan { -Rational::one() } else { Rational::one() };
                flatten(&combine(&lhs, &rhs, &s))
            },
            false,
        )
    }

    /// `Pe(n)` Jordan subspace `X^{st} J = (−1)^{p(X)} J X`.
    pub fn pe_jordan(n: usize) -> Result<Self> {
        let sig = BlockSignature::new(n, n);
        let j = symplectic(n);
        Self::from_conditions(sig, move |x, p| flatten(&pe_condition(sig, x, p, &j, true)), false)
    }

    /// The full `q(n)` space (supercommutant of the odd involution).
    pub fn queer(n: usize) -> Result<Self> {
        let sig = BlockSignature::new(n, n);
        let pi = odd_involution(n);
        Self::from_conditions(sig, move |x, p| flatten(&supercommutator(x, p, &pi, Parity::Odd)), false)
    }

    pub fn signature(&self) -> BlockSignature {
        self.sig
    }

    pub fn matrices(&self) -> &[Mat] {
        &self.matrices
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_quotient(&self) -> bool {
        self.modulo_identity
    }

    /// Coordinates of `x` in the basis (modulo the identity when the
    /// realization is a quotient), or `None` if `x` is outside the span.
    pub fn coordinates(&self, x: &[Vec<Rational>]) -> Option<Vec<Rational>> {
        let c = self.reducer.coordinates(&sparse(x))?;
        let mut out = vec![Rational::zero(); self.dim()];
        for (k, v) in c {
            if k < self.dim() {
                out[k] = v;
            }
        }
        Some(out)
    }

    pub fn matrix_of(&self, v: &[Rational]) -> Mat {
        let n = self.sig.dim();
        let mut out = dense::zeros(n, n);
        for (c, x) in v.iter().zip(&self.matrices) {
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    out[i][j] += c * &x[i][j];
                }
            }
        }
        out
    }

    /// Structure constants of an arbitrary bilinear operation on the basis,
    /// failing if some product leaves the span.
    pub fn table_of(
        &self,
        op: impl Fn(&Mat, Parity, &Mat, Parity) -> Mat,
    ) -> Result<BTreeMap<(usize, usize), SparseVec<usize>>> {
        let mut table = BTreeMap::new();
        for a in 0..self.dim() {
            for b in 0..self.dim() {
                let z = op(&self.matrices[a], self.parities[a], &self.matrices[b], self.parities[b]);
                let coords = self.coordinates(&z).ok_or_else(|| {
                    Error::Closure(format!(
                        "product of {} and {} leaves the subspace",
                        self.names[a], self.names[b]
                    ))
                })?;
                let sv: SparseVec<usize> =
                    coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                if !sv.is_empty() {
                    table.insert((a, b), sv);
                }
            }
        }
        Ok(table)
    }

    /// Matrix of `X ↦ [h, X]` in the basis for an even matrix `h` that
    /// normalizes the realized subspace.
    pub fn derivation_of(&self, h: &[Vec<Rational>]) -> Result<Mat> {
        let n = self.dim();
        let mut d = dense::zeros(n, n);
        for j in 0..n {
            let z = supercommutator(h, Parity::Even, &self.matrices[j], self.parities[j]);
            let c = self
                .coordinates(&z)
                .ok_or_else(|| Error::Closure(format!("[h, {}] leaves the subspace", self.names[j])))?;
            for (k, v) in c.into_iter().enumerate() {
                d[k][j] = v;
            }
        }
        Ok(d)
    }

    /// The Lie superalgebra under the supercommutator.
    pub fn lie_algebra(&self, name: impl Into<String>) -> Result<LieSuperAlgebra> {
        let table = self.table_of(|x, p, y, q| supercommutator(x, p, y, q))?;
        LieSuperAlgebra::new(name, self.names.clone(), self.parities.clone(), None, table)
    }
}

fn sparse(x: &[Vec<Rational>]) -> SparseVec<(usize, usize)> {
    let mut out = SparseVec::new();
    for (i, row) in x.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                out.insert((i, j), c.clone());
            }
        }
    }
    out
}

fn flatten(x: &[Vec<Rational>]) -> Vec<Rational> {
    x.iter().flatten().cloned().collect()
}

fn unit_name(i: usize, j: usize) -> String {
    if i < 9 && j < 9 {
        format!("E{}{}", i + 1, j + 1)
    } else {
        format!("E{},{}", i + 1, j + 1)
    }
}

fn matrix_name(x: &[Vec<Rational>]) -> Option<String> {
    let terms: Vec<_> = sparse(x).into_iter().collect();
    if terms.is_empty() || terms.len() > 4 {
        return None;
    }
    let mut s = String::new();
    for (k, ((i, j), c)) in terms.iter().enumerate() {
        let neg = *c < Rational::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if neg {
            s.push('-');
        } else if k > 0 {
            s.push('+');
        }
        if !abs.is_one() {
            s.push_str(&format_rational(&abs));
        }
        s.push_str(&unit_name(*i, *j));
    }
    Some(s)
}

pub(crate) fn supercommutator(x: &[Vec<Rational>], p: Parity, y: &[Vec<Rational>], q: Parity) -> Mat {
    let s = if p.koszul(q) { Rational::one() } else { -Rational::one() };
    combine(&dense::mul(x, y), &dense::mul(y, x), &s)
}

/// `a + s·b`.
pub(crate) fn combine(a: &[Vec<Rational>], b: &[Vec<Rational>], s: &Rational) -> Mat {
    a.iter().zip(b).map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + s * y).collect()).collect()
}

fn trace(x: &[Vec<Rational>]) -> Rational {
    (0..x.len()).fold(Rational::zero(), |acc, i| acc + &x[i][i])
}

fn supertrace(sig: BlockSignature, x: &[Vec<Rational>]) -> Rational {
    (0..sig.dim()).fold(Rational::zero(), |acc, i| {
        if sig.parity_of(i).is_odd() {
            acc - &x[i][i]
        } else {
            acc + &x[i][i]
        }
    })
}

fn queer_trace(n: usize, x: &[Vec<Rational>]) -> Rational {
    (0..n).fold(Rational::zero(), |acc, i| acc + &x[i][i + n])
}

pub(crate) fn supertranspose(sig: BlockSignature, x: &[Vec<Rational>], p: Parity) -> Mat {
    let n = sig.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (pi, pj) = (sig.parity_of(i), sig.parity_of(j));
                    if (pi + pj).is_odd() && (pi + p).is_odd() {
                        -x[j][i].clone()
                    } else {
                        x[j][i].clone()
                    }
                })
                .collect()
        })
        .collect()
}

/// `J = [[0, 1_n], [−1_n, 0]]`.
pub(crate) fn symplectic(n: usize) -> Mat {
    let mut j = dense::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[i][i + n] = int(1);
        j[i + n][i] = int(-1);
    }
    j
}

/// `Π = [[0, 1_n], [1_n, 0]]`.
fn odd_involution(n: usize) -> Mat {
    let mut pi = dense::zeros(2 * n, 2 * n);
    for i in 0..n {
        pi[i][i + n] = int(1);
        pi[i + n][i] = int(1);
    }
    pi
}

/// `X^{st} J − ε (−1)^{p(X)} J X` with `ε = +1` for the Jordan subspace and
/// `ε = −1` for the Lie superalgebra `pe(n)`.
fn pe_condition(
    sig: BlockSignature,
    x: &[Vec<Rational>],
    p: Parity,
    j: &[Vec<Rational>],
    jordan: bool,
) -> Mat {
    let lhs = dense::mul(&supertranspose(sig, x, p), j);
    let rhs = dense::mul(j, x);
    let sign = p.is_odd() == jordan;
    combine(&lhs, &rhs, &if sign { int(1) } else { int(-1) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sdim(s: &str) -> (usize, usize) {
        s.parse::<Series>().unwrap().build().unwrap().sdim()
    }

    #[test]
    fn dimensions() {
        assert_eq!(sdim("gl(1|1)"), (2, 2));
        assert_eq!(sdim("sl(2|1)"), (4, 4));
        assert_eq!(sdim("psl(2|2)"), (6, 8));
        assert_eq!(sdim("q(2)"), (4, 4));
        assert_eq!(sdim("sq(2)"), (4, 3));
        assert_eq!(sdim("psq(2)"), (3, 3));
        assert_eq!(sdim("pe(2)"), (4, 4));
        assert_eq!(sdim("spe(2)"), (3, 4));
        assert_eq!(sdim("osp(1|2)"), (3, 2));
        assert_eq!(sdim("osp(3|2)"), (6, 6));
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["gl(2|1)", "psl(2|2)", "osp(2|4)", "spe(3)"] {
            assert_eq!(s.parse::<Series>().unwrap().to_string(), s);
        }
        assert!("osp(1|3)".parse::<Series>().is_err());
        assert!(matches!(Series::Gl(5, 0).build(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn gl11_odd_bracket() {
        let g = Series::Gl(1, 1).build().unwrap();
        let (e12, e21) = (g.index_of("E12").unwrap(), g.index_of("E21").unwrap());
        let z = g.bracket(&g.basis_vector(e12), &g.basis_vector(e21)).unwrap();
        let (e11, e22) = (g.index_of("E11").unwrap(), g.index_of("E22").unwrap());
        assert_eq!(z[e11], int(1));
        assert_eq!(z[e22], int(1));
    }
}
