use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{sign, Parity, Rational, VariableContext};
use crate::error::{Error, Result};

/// A variable of a [`VariableContext`], addressed by kind and index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Even(usize),
    Odd(usize),
}

impl Var {
    pub fn parity(self) -> Parity {
        match self {
            Var::Even(_) => Parity::Even,
            Var::Odd(_) => Parity::Odd,
        }
    }
}

/// A monomial `x^e θ_{i1} θ_{i2} ...` with `i1 < i2 < ...`: an exponent
/// vector for the even variables and a bitmask for the odd ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    odd: u64,
    even: Vec<u16>,
}

/// Sign of the reordering `θ_A θ_B -> θ_{A ∪ B}` (sorted): the parity of
/// the number of pairs `a ∈ A, b ∈ B` with `a > b`.
pub(crate) fn merge_sign(a: u64, b: u64) -> bool {
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        inversions += if j == 63 { 0 } else { (a >> (j + 1)).count_ones() };
    }
    inversions % 2 == 1
}

impl Monomial {
    pub fn new(even: Vec<u16>, odd: u64) -> Self {
        Self { odd, even }
    }

    pub fn constant(even_count: usize) -> Self {
        Self { odd: 0, even: vec![0; even_count] }
    }

    /// Builds a monomial from sorted-or-not odd indices; returns the sign of
    /// sorting them, or `None` when an index repeats (the product is zero).
    pub fn from_odd_indices(even: Vec<u16>, odd: &[usize]) -> Option<(Self, bool)> {
        let mut mask = 0u64;
        let mut negative = false;
        for &i in odd {
            let bit = 1u64 << i;
            if mask & bit != 0 {
                return None;
            }
            negative ^= merge_sign(mask, bit);
            mask |= bit;
        }
        Some((Self { odd: mask, even }, negative))
    }

    pub fn odd_mask(&self) -> u64 {
        self.odd
    }

    pub fn even_exponents(&self) -> &[u16] {
        &self.even
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..64).filter(|i| self.odd >> i & 1 == 1).collect()
    }

    pub fn is_constant(&self) -> bool {
        self.odd == 0 && self.even.iter().all(|&e| e == 0)
    }

    pub fn even_degree(&self) -> u32 {
        self.even.iter().map(|&e| e as u32).sum()
    }

    pub fn degree(&self) -> u32 {
        self.even_degree() + self.odd.count_ones()
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit(self.odd.count_ones())
    }

    /// Product with its Koszul sign, or `None` if an odd generator repeats.
    pub fn mul(&self, other: &Monomial) -> Option<(Monomial, bool)> {
        if self.odd & other.odd != 0 {
            return None;
        }
        let even = self.even.iter().zip(&other.even).map(|(a, b)| a + b).collect();
        Some((Monomial { odd: self.odd | other.odd, even }, merge_sign(self.odd, other.odd)))
    }
}

/// An element of the free supercommutative algebra over a
/// [`VariableContext`] with rational coefficients.
///
/// Terms are kept in a `BTreeMap`, so iteration order (and therefore every
/// printed or serialized form) is canonical. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperPolynomial {
    ctx: VariableContext,
    terms: BTreeMap<Monomial, Rational>,
}

impl SuperPolynomial {
    pub fn zero(ctx: &VariableContext) -> Self {
        Self { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &VariableContext) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &VariableContext, c: Rational) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(ctx.even_count()), c);
        }
        p
    }

    pub fn var(ctx: &VariableContext, v: Var) -> Self {
        match v {
            Var::Even(i) => Self::even_var(ctx, i),
            Var::Odd(i) => Self::odd_var(ctx, i),
        }
    }

    /// The odd generator `θ_{i+1}` (indices are zero-based).
    pub fn odd_var(ctx: &VariableContext, i: usize) -> Self {
        assert!(i < ctx.odd_count(), "odd variable {i} out of range");
        let mut p = Self::zero(ctx);
        p.terms.insert(Monomial::new(vec![0; ctx.even_count()], 1u64 << i), Rational::one());
        p
    }

    pub fn even_var(ctx: &VariableContext, i: usize) -> Self {
        assert!(i < ctx.even_count(), "even variable {i} out of range");
        let mut even = vec![0; ctx.even_count()];
        even[i] = 1;
        let mut p = Self::zero(ctx);
        p.terms.insert(Monomial::new(even, 0), Rational::one());
        p
    }

    /// `c · x^even · θ_{odd[0]} θ_{odd[1]} ...` in the given (not necessarily
    /// sorted) order of odd factors.
    pub fn monomial(ctx: &VariableContext, even: &[u16], odd: &[usize], c: Rational) -> Result<Self> {
        if even.len() != ctx.even_count() {
            return Err(Error::InvalidInput(format!(
                "exponent vector of length {} in context with {} even variables",
                even.len(),
                ctx.even_count()
            )));
        }
        if let Some(&i) = odd.iter().find(|&&i| i >= ctx.odd_count()) {
            return Err(Error::InvalidInput(format!(
                "odd index {i} out of range ({} odd variables)",
                ctx.odd_count()
            )));
        }
        match Monomial::from_odd_indices(even.to_vec(), odd) {
            None => Ok(Self::zero(ctx)),
            Some((m, negative)) => Self::from_terms(ctx, [(m, if negative { -c } else { c })]),
        }
    }

    /// Collects terms (summing repeats), validating each monomial.
    pub fn from_terms(
        ctx: &VariableContext,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            if m.even.len() != ctx.even_count() || (ctx.odd_count() < 64 && m.odd >> ctx.odd_count() != 0) {
                return Err(Error::InvalidInput(format!("monomial {m:?} does not fit {ctx:?}")));
            }
            p.check_degree(&m)?;
            p.accumulate(m, c);
        }
        Ok(p)
    }

    fn check_degree(&self, m: &Monomial) -> Result<()> {
        let degree = m.degree();
        if degree > self.ctx.degree_cap() {
            return Err(Error::DegreeCap { cap: self.ctx.degree_cap(), degree });
        }
        Ok(())
    }

    fn accumulate(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.body().is_one()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficient of the constant monomial.
    pub fn body(&self) -> Rational {
        self.coefficient(&Monomial::constant(self.ctx.even_count()))
    }

    /// Everything except the constant term.
    pub fn soul(&self) -> Self {
        let mut s = self.clone();
        s.terms.remove(&Monomial::constant(self.ctx.even_count()));
        s
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_constant)
    }

    /// True when some monomial carries an even variable.
    pub fn has_even_dependence(&self) -> bool {
        self.terms.keys().any(|m| m.even_degree() > 0)
    }

    /// True when every monomial contains an odd generator, which makes the
    /// element nilpotent.
    pub fn is_nilpotent(&self) -> bool {
        self.terms.keys().all(|m| m.odd != 0)
    }

    /// Highest total degree of a term (0 for the zero element).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// `Some(parity)` if homogeneous, `None` if mixed. Zero is even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        match it.next() {
            None => Some(Parity::Even),
            Some(p) => it.all(|q| q == p).then_some(p),
        }
    }

    /// The homogeneous component of the given parity.
    pub fn parity_part(&self, p: Parity) -> Self {
        Self {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.parity() == p)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Self { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), -c);
        }
        Ok(out)
    }

    /// Supercommutative product; errors on context mismatch or when a term
    /// exceeds the context's degree cap.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = Self::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, negative)) = ma.mul(mb) {
                    out.check_degree(&m)?;
                    let c = ca * cb;
                    out.accumulate(m, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..k {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    fn split_body(&self, what: &str) -> Result<(Rational, Self)> {
        let soul = self.soul();
        if !soul.is_nilpotent() {
            return Err(Error::Unsupported(format!(
                "{what} of an element with pure even-variable terms: {self}"
            )));
        }
        Ok((self.body(), soul))
    }

    /// Inverse via `b⁻¹ Σ_k (−s/b)^k` for `a = b + s` with nilpotent soul `s`.
    pub fn inverse(&self) -> Result<Self> {
        let (body, soul) = self.split_body("inverse")?;
        if body.is_zero() {
            return Err(Error::NotInvertible(format!("zero body: {self}")));
        }
        let binv = body.recip();
        let step = soul.scale(&-&binv);
        let mut term = Self::constant(&self.ctx, binv.clone());
        let mut acc = term.clone();
        loop {
            term = term.checked_mul(&step)?;
            if term.is_zero() {
                break;
            }
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }

    /// `exp(a)` for even nilpotent `a`; the series terminates.
    pub fn exp(&self) -> Result<Self> {
        if self.parity() != Some(Parity::Even) {
            return Err(Error::Precondition(format!("exp of non-even element {self}")));
        }
        if !self.is_nilpotent() {
            return Err(Error::Precondition(format!("exp needs a nilpotent argument (zero body): {self}")));
        }
        let mut acc = Self::one(&self.ctx);
        let mut term = acc.clone();
        let mut k = 1i64;
        loop {
            term = term.checked_mul(self)?.scale(&super::rat(1, k));
            if term.is_zero() {
                return Ok(acc);
            }
            acc = acc.checked_add(&term)?;
            k += 1;
        }
    }

    /// `log(a)` for even `a` with body exactly 1 and nilpotent soul.
    pub fn log(&self) -> Result<Self> {
        if self.parity() != Some(Parity::Even) {
            return Err(Error::Precondition(format!("log of non-even element {self}")));
        }
        let (body, n) = self.split_body("log")?;
        if !body.is_one() {
            return Err(Error::Precondition(format!("log needs body 1: {self}")));
        }
        let mut acc = Self::zero(&self.ctx);
        let mut power = Self::one(&self.ctx);
        let mut k = 1i64;
        loop {
            power = power.checked_mul(&n)?;
            if power.is_zero() {
                return Ok(acc);
            }
            let c = super::rat(if k % 2 == 1 { 1 } else { -1 }, k);
            acc = acc.checked_add(&power.scale(&c))?;
            k += 1;
        }
    }

    /// Left partial derivative. For an odd variable the generator is first
    /// moved to the far left, picking up the sign of the transpositions.
    pub fn partial(&self, v: Var) -> Self {
        let mut out = Self::zero(&self.ctx);
        match v {
            Var::Even(i) => {
                assert!(i < self.ctx.even_count(), "even variable {i} out of range");
                for (m, c) in &self.terms {
                    let e = m.even[i];
                    if e == 0 {
                        continue;
                    }
                    let mut even = m.even.clone();
                    even[i] -= 1;
                    out.accumulate(Monomial::new(even, m.odd), c * super::int(e as i64));
                }
            }
            Var::Odd(i) => {
                assert!(i < self.ctx.odd_count(), "odd variable {i} out of range");
                let bit = 1u64 << i;
                for (m, c) in &self.terms {
                    if m.odd & bit == 0 {
                        continue;
                    }
                    let before = (m.odd & (bit - 1)).count_ones();
                    let c = if before % 2 == 1 { -c } else { c.clone() };
                    out.accumulate(Monomial::new(m.even.clone(), m.odd & !bit), c);
                }
            }
        }
        out
    }

    /// Re-expresses the element in a larger context. `even_map[i]` and
    /// `odd_map[i]` give the target index of each variable; odd generators
    /// are re-sorted with the corresponding sign.
    pub fn embed(&self, target: &VariableContext, even_map: &[usize], odd_map: &[usize]) -> Result<Self> {
        if even_map.len() != self.ctx.even_count() || odd_map.len() != self.ctx.odd_count() {
            return Err(Error::InvalidInput("embedding map has wrong length".into()));
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut even = vec![0u16; target.even_count()];
            for (i, &e) in m.even.iter().enumerate() {
                even[even_map[i]] += e;
            }
            let odd: Vec<usize> = m.odd_indices().into_iter().map(|i| odd_map[i]).collect();
            match Monomial::from_odd_indices(even, &odd) {
                None => return Err(Error::InvalidInput("embedding map is not injective".into())),
                Some((mono, negative)) => {
                    out.check_degree(&mono)?;
                    out.accumulate(mono, c * sign(negative));
                }
            }
        }
        Ok(out)
    }

    /// Moves the element to a context with identical generators (e.g. a
    /// different degree cap).
    pub fn with_context(&self, ctx: &VariableContext) -> Result<Self> {
        if ctx.even_count() != self.ctx.even_count() || ctx.odd_count() != self.ctx.odd_count() {
            return Err(Error::ContextMismatch(format!("{:?} vs {ctx:?}", self.ctx)));
        }
        Self::from_terms(ctx, self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    fn fmt_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (i, &e) in m.even.iter().enumerate() {
            match e {
                0 => {}
                1 => s.push_str(&self.ctx.even_name(i)),
                _ => s.push_str(&format!("{}^{}", self.ctx.even_name(i), e)),
            }
        }
        for i in m.odd_indices() {
            s.push_str(&self.ctx.odd_name(i));
        }
        s
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = self.fmt_monomial(m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}·{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperPolynomial({self})")
    }
}

// Operator forms panic on context mismatch or degree-cap overflow; use the
// `checked_*` methods where inputs are untrusted.
impl Add for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn add(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.checked_add(rhs).expect("superpolynomial addition")
    }
}

impl Sub for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.checked_sub(rhs).expect("superpolynomial subtraction")
    }
}

impl Mul for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn mul(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.checked_mul(rhs).expect("superpolynomial product")
    }
}

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        SuperPolynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for SuperPolynomial {
    type Output = SuperPolynomial;
    fn add(self, rhs: SuperPolynomial) -> SuperPolynomial {
        &self + &rhs
    }
}

impl Sub for SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(self, rhs: SuperPolynomial) -> SuperPolynomial {
        &self - &rhs
    }
}

impl Mul for SuperPolynomial {
    type Output = SuperPolynomial;
    fn mul(self, rhs: SuperPolynomial) -> SuperPolynomial {
        &self * &rhs
    }
}

impl Neg for SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat};

    fn theta(ctx: &VariableContext, i: usize) -> SuperPolynomial {
        SuperPolynomial::odd_var(ctx, i)
    }

    #[test]
    fn odd_generators_anticommute() {
        let ctx = VariableContext::grassmann(3);
        let t1t2 = &theta(&ctx, 0) * &theta(&ctx, 1);
        let t2t1 = &theta(&ctx, 1) * &theta(&ctx, 0);
        assert_eq!(t2t1, -&t1t2);
        assert!((&theta(&ctx, 0) * &theta(&ctx, 0)).is_zero());
        assert_eq!(t1t2.to_string(), "θ1θ2");
    }

    #[test]
    fn nilpotent_square_vanishes() {
        let ctx = VariableContext::grassmann(2);
        let n = &theta(&ctx, 0) * &theta(&ctx, 1);
        let one = SuperPolynomial::one(&ctx);
        assert!((&(&one + &n) * &(&one - &n)).is_one());
    }

    #[test]
    fn even_variables_are_central() {
        let ctx = VariableContext::new(1, 1).unwrap();
        let x = SuperPolynomial::even_var(&ctx, 0);
        let t = theta(&ctx, 0);
        assert_eq!(&x * &t, &t * &x);
        assert_eq!((&x * &t).to_string(), "x1θ1");
    }

    #[test]
    fn parity_detection() {
        let ctx = VariableContext::grassmann(3);
        let t = |i| theta(&ctx, i);
        assert_eq!((&t(0) * &t(1)).parity(), Some(Parity::Even));
        let odd = &t(0) + &(&(&t(0) * &t(1)) * &t(2));
        assert_eq!(odd.parity(), Some(Parity::Odd));
        assert_eq!((&SuperPolynomial::one(&ctx) + &t(0)).parity(), None);
        assert_eq!(SuperPolynomial::zero(&ctx).parity(), Some(Parity::Even));
    }

    #[test]
    fn inverse_examples() {
        let ctx = VariableContext::grassmann(2);
        let one = SuperPolynomial::one(&ctx);
        let n = &theta(&ctx, 0) * &theta(&ctx, 1);
        assert_eq!((&one + &n).inverse().unwrap(), &one - &n);
        let two = SuperPolynomial::constant(&ctx, int(2));
        assert_eq!(two.inverse().unwrap(), SuperPolynomial::constant(&ctx, rat(1, 2)));
        assert!(matches!(theta(&ctx, 0).inverse(), Err(Error::NotInvertible(_))));
        let ctx = VariableContext::new(1, 0).unwrap();
        assert!(matches!(SuperPolynomial::even_var(&ctx, 0).inverse(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn exp_log_examples() {
        let ctx = VariableContext::grassmann(4);
        let t = |i| theta(&ctx, i);
        let one = SuperPolynomial::one(&ctx);
        let a = &t(0) * &t(1);
        let b = &t(2) * &t(3);
        assert_eq!(a.exp().unwrap(), &one + &a);
        assert_eq!((&one + &a).log().unwrap(), a);
        // Hand expansion: exp(a + b) = 1 + (a+b) + (a+b)^2/2 with (a+b)^2 = 2ab.
        let expected = &(&(&one + &a) + &b) + &(&a * &b);
        assert_eq!((&a + &b).exp().unwrap(), expected);
        assert!(one.exp().is_err());
        assert!(a.log().is_err());
        assert!(t(0).exp().is_err());
    }

    #[test]
    fn partial_derivative_examples() {
        let ctx = VariableContext::new(1, 2).unwrap();
        let t1t2 = &theta(&ctx, 0) * &theta(&ctx, 1);
        assert_eq!(t1t2.partial(Var::Odd(0)), theta(&ctx, 1));
        assert_eq!(t1t2.partial(Var::Odd(1)), -&theta(&ctx, 0));
        let x = SuperPolynomial::even_var(&ctx, 0);
        let x2t = &(&x * &x) * &theta(&ctx, 0);
        assert_eq!(x2t.partial(Var::Even(0)), (&x * &theta(&ctx, 0)).scale(&int(2)));
    }

    #[test]
    fn context_mismatch_and_degree_cap() {
        let a = VariableContext::grassmann(2);
        let b = VariableContext::grassmann(3);
        let err = SuperPolynomial::one(&a).checked_mul(&SuperPolynomial::one(&b));
        assert!(matches!(err, Err(Error::ContextMismatch(_))));
        let capped = VariableContext::new(1, 0).unwrap().with_degree_cap(2);
        let x = SuperPolynomial::even_var(&capped, 0);
        let x2 = &x * &x;
        assert!(matches!(x2.checked_mul(&x), Err(Error::DegreeCap { cap: 2, degree: 3 })));
    }

    #[test]
    fn embed_resorts_odd_generators() {
        let small = VariableContext::grassmann(2);
        let big = VariableContext::grassmann(3);
        let t1t2 = &theta(&small, 0) * &theta(&small, 1);
        // θ1 -> θ3, θ2 -> θ1: θ3θ1 = -θ1θ3.
        let e = t1t2.embed(&big, &[], &[2, 0]).unwrap();
        assert_eq!(e, -&(&theta(&big, 0) * &theta(&big, 2)));
    }
}
