//! Nominal sets as executable data structures.
//!
//! Names ([`Name`]) are acted on by finite permutations ([`Perm`]); every
//! carrier implementing [`Nominal`] has such an action, an equivalence and a
//! finite support. On top of that the crate provides freshness as a decision
//! procedure, name abstraction with α-equivalence, finitely supported
//! functions with the freshness-theorem and FCB combinators, and a worked
//! λ-calculus on which all of it is exercised.

pub mod abstraction;
pub mod atoms;
pub mod freshness;
pub mod lambda;
pub mod laws;
pub mod nominal;
pub mod perm;
pub mod suppfn;
pub mod syntax;

pub use abstraction::{abs_act, abs_support, alpha_equiv_dec, alpha_universal_probe, Abstraction};
pub use atoms::{fresh_for, fresh_many, Name, NameSet};
pub use freshness::{fresh_dec, fresh_tuple, fresh_universal_probe, minimize_support, FreshFor, WitnessError};
pub use lambda::Term;
pub use laws::{check_laws, Bounds, Law, LawReport};
pub use nominal::{Either, Nominal};
pub use perm::{Perm, Swap};
pub use suppfn::{check_fcb, check_fresh_hyp, check_supp_spec, compose, fcb_lift, fn_act, fn_equiv_probe, fresh_f, SuppFn};
