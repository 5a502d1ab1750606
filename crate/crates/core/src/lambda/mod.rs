//! λ-calculus terms as a nominal set at α-equivalence.
//!
//! Terms keep concrete binder names; α-equivalence, substitution and
//! recursion are all defined through the nominal operations, with
//! [`to_debruijn`] available as an independent check.

mod debruijn;
pub mod enumerate;
mod rec;
mod subst;
mod term;

pub use debruijn::{to_debruijn, DbTerm};
pub use rec::alpha_rec;
pub use subst::{beta_step, normalize, subst, Normalized};
pub use term::{alpha_eq, fv, term_act, Term};
