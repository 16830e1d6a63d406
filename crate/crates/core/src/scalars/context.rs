use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Total-degree cap applied when no other value is configured.
pub const DEFAULT_DEGREE_CAP: u32 = 16;

/// Largest number of odd generators (one bit each in a `u64` mask).
pub const MAX_ODD: usize = 64;

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    even_count: usize,
    odd_count: usize,
    even_names: Option<Vec<String>>,
    odd_names: Option<Vec<String>>,
    degree_cap: u32,
}

/// The generators of a free supercommutative algebra: `even_count`
/// commuting variables and `odd_count` anticommuting ones.
///
/// Cheap to clone (reference counted). Two contexts are compatible when
/// their counts, names and degree caps agree.
#[derive(Clone, PartialEq, Eq)]
pub struct VariableContext(Arc<Inner>);

impl VariableContext {
    pub fn new(even_count: usize, odd_count: usize) -> Result<Self> {
        Self::build(even_count, odd_count, None, None, DEFAULT_DEGREE_CAP)
    }

    /// Purely odd context: the Grassmann algebra on `odd_count` generators.
    pub fn grassmann(odd_count: usize) -> Self {
        Self::new(0, odd_count).expect("odd count within limits")
    }

    pub fn build(
        even_count: usize,
        odd_count: usize,
        even_names: Option<Vec<String>>,
        odd_names: Option<Vec<String>>,
        degree_cap: u32,
    ) -> Result<Self> {
        if odd_count > MAX_ODD {
            return Err(Error::Unsupported(format!("{odd_count} odd generators (at most {MAX_ODD})")));
        }
        if even_names.as_ref().is_some_and(|n| n.len() != even_count)
            || odd_names.as_ref().is_some_and(|n| n.len() != odd_count)
        {
            return Err(Error::InvalidInput("variable name list length disagrees with count".into()));
        }
        Ok(Self(Arc::new(Inner { even_count, odd_count, even_names, odd_names, degree_cap })))
    }

    /// Same generators, different total-degree cap.
    pub fn with_degree_cap(&self, cap: u32) -> Self {
        Self(Arc::new(Inner {
            even_count: self.0.even_count,
            odd_count: self.0.odd_count,
            even_names: self.0.even_names.clone(),
            odd_names: self.0.odd_names.clone(),
            degree_cap: cap,
        }))
    }

    pub fn with_names(&self, even: Vec<String>, odd: Vec<String>) -> Result<Self> {
        Self::build(self.0.even_count, self.0.odd_count, Some(even), Some(odd), self.0.degree_cap)
    }

    pub fn even_count(&self) -> usize {
        self.0.even_count
    }

    pub fn odd_count(&self) -> usize {
        self.0.odd_count
    }

    pub fn degree_cap(&self) -> u32 {
        self.0.degree_cap
    }

    pub fn even_names(&self) -> Option<&[String]> {
        self.0.even_names.as_deref()
    }

    pub fn odd_names(&self) -> Option<&[String]> {
        self.0.odd_names.as_deref()
    }

    pub fn even_name(&self, i: usize) -> String {
        match &self.0.even_names {
            Some(n) => n[i].clone(),
            None => format!("x{}", i + 1),
        }
    }

    pub fn odd_name(&self, i: usize) -> String {
        match &self.0.odd_names {
            Some(n) => n[i].clone(),
            None => format!("θ{}", i + 1),
        }
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0 {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!("{self:?} vs {other:?}")))
        }
    }
}

impl fmt::Debug for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Context({}|{}, cap {})", self.0.even_count, self.0.odd_count, self.0.degree_cap)
    }
}
