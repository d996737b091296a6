//! Cobordism-valued ψ-class intersection numbers on the moduli spaces of
//! stable genus-zero marked curves, computed with exact arithmetic.
//!
//! The crate is layered bottom-up:
//!
//! * [`algebra`] – sparse polynomials in weighted generators (Lazard `u_i`, `β`).
//! * [`series`] – truncated multivariate power series over those polynomials.
//! * [`fgl`] – the universal formal group law and everything derived from it.
//! * [`moduli`] – the string-equation recursion and its closed-form checks.
//! * [`geom`] – projective-bundle pushforwards and explicit variety classes.
//! * [`basis`] – change of basis from `u`-monomials to projective spaces.
//! * [`verify`] – the self-check suite that ties the layers together.

pub mod algebra;
pub mod basis;
pub mod error;
pub mod fgl;
pub mod geom;
pub mod moduli;
pub mod reference;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
