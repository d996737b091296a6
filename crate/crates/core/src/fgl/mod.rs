//! Formal group laws: the universal law, its derived series, the rational
//! logarithm and the orientation maps to Chow and K-theory.

mod bundle;
pub mod data;
mod images;
mod law;
mod log;

pub use bundle::{derive_bundle, inverse_series, specialize_bundle, SeriesBundle};
pub use images::{chow_generator_images, ktheory_generator_images, solve_generator_images};
pub use law::{
    additive_law, is_graded, multiplicative_law, universal_law, validate_law, Axiom, FormalGroupLaw, LawFailure,
    LawReport,
};
pub use log::{log_series, reconstruct_law, CoefficientMismatch, ReconstructionReport};

#[cfg(test)]
mod tests;
