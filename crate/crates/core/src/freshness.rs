//! Freshness as a decision procedure.
//!
//! `a # x` holds when some name `b` outside the support of `x` satisfies
//! `(a b) • x ≡ x`. Any such `b` gives the same verdict, so [`fresh_dec`]
//! tests a single canonical witness. The universal form is only available as
//! a finite probe, [`fresh_universal_probe`], for cross-checking.

use thiserror::Error;

use crate::atoms::{fresh_for, Name, NameSet};
use crate::nominal::Nominal;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("witness {witness:?} is in the support {support:?}")]
    InSupport { witness: Name, support: NameSet },
    #[error("witness {witness:?} is not fresh for component {component} of the tuple")]
    NotFresh { witness: Name, component: usize },
}

/// Decides `a # x`.
pub fn fresh_dec<X: Nominal>(a: Name, x: &X) -> bool {
    let support = x.support();
    let b = fresh_for(&support.with(a));
    x.swap(a, b).equiv(x)
}

/// Checks `(a b) • x ≡ x` for every `b` in `witnesses`.
pub fn fresh_universal_probe<X: Nominal>(
    a: Name,
    x: &X,
    witnesses: &NameSet,
) -> Result<bool, WitnessError> {
    let support = x.support();
    if let Some(witness) = witnesses.iter().find(|&b| support.contains(b)) {
        return Err(WitnessError::InSupport { witness, support });
    }
    Ok(witnesses.iter().all(|b| x.swap(a, b).equiv(x)))
}

/// Object-safe view of freshness, so that components of different types can
/// be checked together with [`fresh_tuple`].
pub trait FreshFor {
    fn is_fresh(&self, a: Name) -> bool;
}

impl<X: Nominal> FreshFor for X {
    fn is_fresh(&self, a: Name) -> bool {
        fresh_dec(a, self)
    }
}

/// `a # (x₁, …, xₙ)`, the conjunction of freshness for each component.
pub fn fresh_tuple(a: Name, components: &[&dyn FreshFor]) -> bool {
    components.iter().all(|x| x.is_fresh(a))
}

/// The names of `support(x)` that `x` actually depends on.
///
/// Always a subset of `support(x)`. When `x` has a least support in the
/// classical sense this returns it, but that is not something a constructive
/// procedure can certify in general.
pub fn minimize_support<X: Nominal>(x: &X) -> NameSet {
    x.support().iter().filter(|&a| !fresh_dec(a, x)).collect()
}
