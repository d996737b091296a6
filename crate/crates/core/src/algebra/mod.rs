//! Exact sparse polynomials over ℤ and ℚ in weighted generators.

mod coeff;
mod encode;
mod homomorphism;
mod monomial;
mod poly;
mod system;

pub use coeff::Coefficient;
pub use encode::parse_poly;
pub(crate) use encode::render_terms;
pub use homomorphism::{substitute, RingMap};
pub(crate) use monomial::write_monomial;
pub use monomial::Exponents;
pub use poly::{GradedPolynomial, RationalPolynomial};
pub(crate) use system::same_system;
pub use system::GeneratorSystem;

/// Integer polynomial in the Lazard generators.
pub type Poly = GradedPolynomial<num_bigint::BigInt>;
