//! Polynomial vector fields on superspaces and the constructions built on
//! them.

mod ce;
mod closure;
mod field;
mod kan;
mod poisson;

pub use ce::{
    ce_coordinates, ce_field, ce_graded_algebra, check_invariant_form, derived_bracket, divergence,
    generating_function, is_homological, HomologicalReport, HomologicalWitness,
};
pub use closure::{close_fields, FieldAlgebra};
pub use field::{coordinate, coordinate_count, coordinate_index, FieldJson, PolyVectorField};
pub use kan::{
    jordan_coordinates, kan_build, kan_build_with, kan_roundtrip, roundtrip_of, Kan, KanConfig,
    RoundtripMismatch, RoundtripReport, DEFAULT_KAN_DEGREE_CAP, DEFAULT_KAN_MAX_DIM,
};
pub use poisson::OddPoissonContext;
