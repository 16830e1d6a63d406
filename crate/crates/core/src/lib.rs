//! Exact super linear algebra.
//!
//! * [`scalars`]: rational Grassmann/super-polynomial arithmetic.
//! * [`supermatrix`]: supertrace, Berezinian, queer trace and determinant.
//! * [`liealg`]: Lie superalgebras from structure constants, classical
//!   builders and depth-one gradings.
//! * [`jordan`]: Jordan superalgebra constructions and the super Jordan
//!   identity checked on the Grassmann envelope.
//! * [`vectorfields`]: the TKK functor, Chevalley–Eilenberg homological
//!   fields, derived brackets, odd Poisson brackets and divergence.
//! * [`crossratio`]: matrix and quadric cross ratios with Möbius
//!   invariance harnesses.
//!
//! Everything is exact: coefficients are big rationals and there is no
//! floating point anywhere.

pub mod crossratio;
pub mod error;
pub mod jordan;
pub mod liealg;
pub mod linalg;
pub mod random;
pub mod ring;
pub mod scalars;
pub mod supermatrix;
pub mod vectorfields;

pub use error::{Error, Result};

/// The guide from `book/`, compiled here so that its examples run as
/// doctests.
pub mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    pub mod scalars {}
    #[doc = include_str!("../../../book/src/supermatrices.md")]
    pub mod supermatrices {}
    #[doc = include_str!("../../../book/src/lie.md")]
    pub mod lie {}
    #[doc = include_str!("../../../book/src/jordan.md")]
    pub mod jordan {}
    #[doc = include_str!("../../../book/src/vectorfields.md")]
    pub mod vectorfields {}
    #[doc = include_str!("../../../book/src/crossratio.md")]
    pub mod crossratio {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
