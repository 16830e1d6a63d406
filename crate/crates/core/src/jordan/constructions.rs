use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::JordanSuperAlgebra;
use crate::error::{Error, Result};
use crate::liealg::{LieSuperAlgebra, MatrixRealization};
use crate::linalg::{dense, SparseVec};
use crate::scalars::{int, rat, Parity, Rational, SuperPolynomial};
use crate::supermatrix::BlockSignature;
use crate::vectorfields::OddPoissonContext;

const MAX_MATRIX_PARAM: usize = 3;

/// `x ∘ y = [[p, x], y]` on `g₋₁` for a depth-one grading and even
/// `p ∈ g₁`.
pub fn jordan_from_graded(g: &LieSuperAlgebra, p: &[Rational]) -> Result<JordanSuperAlgebra> {
    let degrees =
        g.degrees().ok_or_else(|| Error::Precondition("the Lie superalgebra carries no grading".into()))?;
    if degrees.iter().any(|d| !(-1..=1).contains(d)) {
        return Err(Error::Precondition("grading is not of depth and length one".into()));
    }
    let parity = element_parity(g, p, 1)?;
    if parity == Parity::Odd {
        return Err(Error::Precondition("p must be even".into()));
    }
    double_bracket_algebra(g, p, &g.degree_indices(-1), Parity::Even, format!("J({})", g.name()))
}

/// Which identities the generalized product satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityFlags {
    pub supercommutative: bool,
    pub commutative: bool,
    pub associative: bool,
    pub jordan_identity: bool,
}

/// `x ∘ y = [[p, x], y]` on `g₋ = ⊕_{i<0} g_i` for homogeneous `p ∈ g₁`,
/// with a report of the identities that hold. Nothing is asserted.
pub fn jordan_generalized(
    g: &LieSuperAlgebra,
    p: &[Rational],
) -> Result<(JordanSuperAlgebra, IdentityFlags)> {
    let degrees =
        g.degrees().ok_or_else(|| Error::Precondition("the Lie superalgebra carries no grading".into()))?;
    let parity = element_parity(g, p, 1)?;
    let negative: Vec<usize> = (0..g.dim()).filter(|&i| degrees[i] < 0).collect();
    let j = double_bracket_algebra(g, p, &negative, parity, format!("J₋({})", g.name()))?;
    let flags = IdentityFlags {
        supercommutative: j.check_supercommutativity().ok,
        commutative: j.is_commutative(),
        associative: j.is_associative(),
        jordan_identity: j.check_jordan_identity()?.ok,
    };
    Ok((j, flags))
}

fn element_parity(g: &LieSuperAlgebra, p: &[Rational], degree: i32) -> Result<Parity> {
    if p.len() != g.dim() {
        return Err(Error::Shape("p has the wrong length".into()));
    }
    let degrees = g.degrees().unwrap_or(&[]);
    let mut parity = None;
    for (i, _) in p.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        if degrees.get(i) != Some(&degree) {
            return Err(Error::Precondition(format!(
                "p has a component on {} outside degree {degree}",
                g.names()[i]
            )));
        }
        match parity {
            None => parity = Some(g.parity(i)),
            Some(q) if q != g.parity(i) => return Err(Error::Inhomogeneous("p mixes parities".into())),
            _ => {}
        }
    }
    Ok(parity.unwrap_or(Parity::Even))
}

fn double_bracket_algebra(
    g: &LieSuperAlgebra,
    p: &[Rational],
    indices: &[usize],
    product_parity: Parity,
    name: String,
) -> Result<JordanSuperAlgebra> {
    let local: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(a, &i)| (i, a)).collect();
    let mut products = BTreeMap::new();
    for (a, &i) in indices.iter().enumerate() {
        let px = g.bracket(p, &g.basis_vector(i))?;
        for (b, &j) in indices.iter().enumerate() {
            let z = g.bracket(&px, &g.basis_vector(j))?;
            let mut v = SparseVec::new();
            for (k, c) in z.into_iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let kk = local.get(&k).ok_or_else(|| {
                    Error::Closure(format!("[[p, {}], {}] leaves the subspace", g.names()[i], g.names()[j]))
                })?;
                v.insert(*kk, c);
            }
            if !v.is_empty() {
                products.insert((a, b), v);
            }
        }
    }
    JordanSuperAlgebra::from_table(
        name,
        indices.iter().map(|&i| g.names()[i].clone()).collect(),
        indices.iter().map(|&i| g.parity(i)).collect(),
        product_parity,
        products,
        None,
    )
}

/// Matrix Jordan superalgebras with `X ∘ Y = XY + (−1)^{p(X)p(Y)} YX`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    /// `Mat(m|n)`.
    Mat(usize, usize),
    /// `Q(n)`, the supercommutant of the odd involution.
    Q(usize),
    /// `OSp(m|2n)`: `X^{st} B = B X`.
    OSp(usize, usize),
    /// `Pe(n)`: `X^{st} J = (−1)^{p(X)} J X`.
    Pe(usize),
}

impl std::fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            MatrixKind::Mat(m, n) => write!(f, "Mat({m}|{n})"),
            MatrixKind::Q(n) => write!(f, "Q({n})"),
            MatrixKind::OSp(m, n) => write!(f, "OSp({m}|{})", 2 * n),
            MatrixKind::Pe(n) => write!(f, "Pe({n})"),
        }
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse Jordan kind {s:?}"));
        let open = s.find('(').ok_or_else(bad)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let nums: Vec<usize> =
            inner.split('|').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
        Ok(match (&s[..open], nums.as_slice()) {
            ("Mat", [m, n]) => MatrixKind::Mat(*m, *n),
            ("Q", [n]) => MatrixKind::Q(*n),
            ("OSp", [m, n2]) if n2 % 2 == 0 => MatrixKind::OSp(*m, n2 / 2),
            ("Pe", [n]) => MatrixKind::Pe(*n),
            _ => return Err(bad()),
        })
    }
}

pub fn jordan_matrix(kind: MatrixKind) -> Result<JordanSuperAlgebra> {
    let too_big = |v: &[usize]| v.iter().any(|&x| x > MAX_MATRIX_PARAM) || v.iter().sum::<usize>() == 0;
    let realization = match kind {
        MatrixKind::Mat(m, n) if !too_big(&[m, n]) => {
            MatrixRealization::from_conditions(BlockSignature::new(m, n), |_, _| vec![], false)?
        }
        MatrixKind::Q(n) if !too_big(&[n]) => MatrixRealization::queer(n)?,
        MatrixKind::OSp(m, n) if !too_big(&[m, n]) => {
            MatrixRealization::osp_with_form(m, n, &dense::identity(m), true)?
        }
        MatrixKind::Pe(n) if !too_big(&[n]) => MatrixRealization::pe_jordan(n)?,
        _ => return Err(Error::Unsupported(format!("{kind} is outside the supported range"))),
    };
    let table = realization.table_of(|x, p, y, q| {
        let s = if p.koszul(q) { int(-1) } else { int(1) };
        dense::mul(x, y)
            .into_iter()
            .zip(dense::mul(y, x))
            .map(|(a, b)| a.into_iter().zip(b).map(|(u, v)| u + &s * v).collect())
            .collect()
    })?;
    let n = realization.signature().dim();
    let half_identity: Vec<Vec<Rational>> =
        dense::identity(n).into_iter().map(|r| r.into_iter().map(|c| c * rat(1, 2)).collect()).collect();
    let unit = realization.coordinates(&half_identity);
    JordanSuperAlgebra::from_table(
        kind.to_string(),
        realization.names().to_vec(),
        realization.parities().to_vec(),
        Parity::Even,
        table,
        unit,
    )
}

/// `x ∘ y = (e, x) y + (e, y) x − (x, y) e` on `ℚ^{m|2n}` with the form
/// `1_m ⊕ J_{2n}` and `e` the first even basis vector.
pub fn jordan_bilinear(m: usize, n: usize) -> Result<JordanSuperAlgebra> {
    if m == 0 {
        return Err(Error::InvalidInput("the (Q) construction needs an even vector e".into()));
    }
    let dim = m + 2 * n;
    let mut form = dense::zeros(dim, dim);
    for (i, row) in form.iter_mut().enumerate().take(m) {
        row[i] = int(1);
    }
    for i in 0..n {
        form[m + i][m + n + i] = int(1);
        form[m + n + i][m + i] = int(-1);
    }
    let mut names: Vec<String> =
        (0..m).map(|i| if i == 0 { "e".into() } else { format!("x{}", i + 1) }).collect();
    names.extend((0..n).map(|i| format!("ξ{}", i + 1)));
    names.extend((0..n).map(|i| format!("η{}", i + 1)));
    let parities = (0..dim).map(|i| if i < m { Parity::Even } else { Parity::Odd }).collect();
    let mut products = BTreeMap::new();
    for u in 0..dim {
        for v in 0..dim {
            let mut z = SparseVec::new();
            for (k, c) in [(v, form[0][u].clone()), (u, form[0][v].clone()), (0, -form[u][v].clone())] {
                crate::linalg::sparse_add_scaled(&mut z, &SparseVec::from([(k, int(1))]), &c);
            }
            if !z.is_empty() {
                products.insert((u, v), z);
            }
        }
    }
    let mut unit = vec![Rational::zero(); dim];
    unit[0] = int(1);
    JordanSuperAlgebra::from_table(
        format!("Q({m}|{})", 2 * n),
        names,
        parities,
        Parity::Even,
        products,
        Some(unit),
    )
}

/// `f ∘ g = (−1)^{p(f)+1} {f, g}` on `Π(Λ(θ₁…θ_m))`.
///
/// Basis elements are `Π(θ_S)` for subsets `S`, ordered by size and then
/// lexicographically, with parity `|S| + 1`. Since `{·,·}` is even, the
/// product is odd with respect to the shifted parity.
pub fn jordan_hamiltonian_odd(m: usize) -> Result<JordanSuperAlgebra> {
    if m < 2 {
        return Err(Error::InvalidInput("the (H,K) construction needs m ≥ 2".into()));
    }
    if m > 6 {
        return Err(Error::Unsupported(format!("m = {m} exceeds the supported bound 6")));
    }
    let pc = OddPoissonContext::standard(m)?;
    let ctx = pc.context().clone();
    let mut masks: Vec<u64> = (0..1u64 << m).collect();
    masks.sort_by_key(|&s| (s.count_ones(), s.reverse_bits()));
    let index: BTreeMap<u64, usize> = masks.iter().enumerate().map(|(a, &s)| (s, a)).collect();
    let polys: Vec<SuperPolynomial> = masks
        .iter()
        .map(|&s| {
            let idx: Vec<usize> = (0..m).filter(|i| s >> i & 1 == 1).collect();
            SuperPolynomial::monomial(&ctx, &[], &idx, int(1))
        })
        .collect::<Result<_>>()?;
    let names = polys.iter().map(|f| format!("Π({f})")).collect();
    let parities = masks.iter().map(|s| Parity::from_bit(s.count_ones() + 1)).collect();
    let mut products = BTreeMap::new();
    for (a, f) in polys.iter().enumerate() {
        let pf = f.parity().unwrap_or(Parity::Even);
        for (b, g) in polys.iter().enumerate() {
            let mut h = pc.bracket(f, g)?;
            if pf == Parity::Even {
                h = -h;
            }
            let v: SparseVec<usize> =
                h.terms().map(|(mono, c)| (index[&mono.odd_mask()], c.clone())).collect();
            if !v.is_empty() {
                products.insert((a, b), v);
            }
        }
    }
    JordanSuperAlgebra::from_table(format!("HK(0|{m})"), names, parities, Parity::Odd, products, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::Series;

    #[test]
    fn mat11_example() {
        let j = jordan_matrix(MatrixKind::Mat(1, 1)).unwrap();
        let (e12, e21) = (j.index_of("E12").unwrap(), j.index_of("E21").unwrap());
        let z = j.product(&j.basis_vector(e12), &j.basis_vector(e21)).unwrap();
        assert_eq!(z[j.index_of("E11").unwrap()], int(1));
        assert_eq!(z[j.index_of("E22").unwrap()], int(-1));
        assert_eq!(j.check_unit(), Some(true));
    }

    #[test]
    fn mat10_is_twice_multiplication() {
        let j = jordan_matrix(MatrixKind::Mat(1, 0)).unwrap();
        assert_eq!(j.product(&[int(1)], &[int(1)]).unwrap(), vec![int(2)]);
    }

    #[test]
    fn bilinear_examples() {
        let j = jordan_bilinear(2, 0).unwrap();
        let (e, x2) = (j.basis_vector(0), j.basis_vector(1));
        assert_eq!(j.product(&e, &e).unwrap(), e);
        assert_eq!(j.product(&e, &x2).unwrap(), x2);
        assert_eq!(j.product(&x2, &x2).unwrap(), vec![int(-1), int(0)]);
        assert!(jordan_bilinear(0, 1).is_err());
    }

    #[test]
    fn sl2_graded() {
        let g = Series::Sl(2, 0).build().unwrap();
        let r = Series::Sl(2, 0).realization().unwrap();
        let h = vec![vec![rat(1, 2), int(0)], vec![int(0), rat(-1, 2)]];
        let (gr, _) = g.grade_by_element(&r.coordinates(&h).unwrap()).unwrap();
        let e = gr.basis_vector(gr.index_of("E12").unwrap());
        let j = jordan_from_graded(&gr, &e).unwrap();
        assert_eq!(j.dim(), 1);
        // [[e, f], f] = [h, f] = −2f
        assert_eq!(j.product(&[int(1)], &[int(1)]).unwrap(), vec![int(-2)]);
        let zero = vec![int(0); gr.dim()];
        assert!(jordan_from_graded(&gr, &zero).unwrap().is_zero_product());
        let f = gr.basis_vector(gr.index_of("E21").unwrap());
        assert!(jordan_from_graded(&gr, &f).is_err());
    }

    #[test]
    fn hamiltonian_normalization() {
        let j = jordan_hamiltonian_odd(2).unwrap();
        assert_eq!(j.dim(), 4);
        let (t1, t2) = (j.index_of("Π(θ1)").unwrap(), j.index_of("Π(θ2)").unwrap());
        let one = j.index_of("Π(1)").unwrap();
        let z = j.product(&j.basis_vector(t1), &j.basis_vector(t2)).unwrap();
        assert_eq!(z[one], int(1));
        assert!(j.check_supercommutativity().ok);
        assert!(j.check_parity().ok);
    }
}
