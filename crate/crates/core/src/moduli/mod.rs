//! ψ-class intersections on `M̄0,n` via the cobordism string equation,
//! plus the Chow and twisted K-theory closed forms used to check it.

mod cache;
mod closed_form;
mod divisors;
mod engine;
mod key;
mod tables;

pub use cache::{cache_summary, load_cache, save_cache, LoadReport};
pub use closed_form::{chow_closed_form, generating_function, ktheory_twisted_closed_form, ktheory_twisted_recursion};
pub use divisors::{enumerate_divisors, standard_divisors, DivisorDatum};
pub use engine::{m0n_class, psi_intersection, shared_engine, IntersectionEngine, RecursionData};
pub use key::{parse_exponents, psi_label, IntersectionKey, Theory};
pub use tables::{build_tables, partitions, IntersectionTable};

#[cfg(test)]
mod tests;
