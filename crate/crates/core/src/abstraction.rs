//! Name abstraction `[a]x`, compared up to α-equivalence.

use crate::atoms::{fresh_for, Name, NameSet};
use crate::freshness::{fresh_tuple, WitnessError};
use crate::nominal::Nominal;
use crate::perm::Perm;

/// `[name]term`. A plain record: the binding structure lives entirely in
/// its [`Nominal::equiv`], which is α-equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Abstraction<X> {
    pub name: Name,
    pub term: X,
}

impl<X> Abstraction<X> {
    pub fn new(name: Name, term: X) -> Abstraction<X> {
        Abstraction { name, term }
    }
}

/// Decides `[a]x ≈α [b]y` by renaming both bound names to one name `c` fresh
/// for `a`, `b`, `x` and `y`, then comparing `(a c) • x ≡ (b c) • y`.
pub fn alpha_equiv_dec<X: Nominal>(lhs: &Abstraction<X>, rhs: &Abstraction<X>) -> bool {
    let mut avoid = lhs.term.support();
    avoid.extend_from(&rhs.term.support());
    avoid.insert(lhs.name);
    avoid.insert(rhs.name);
    let c = fresh_for(&avoid);
    lhs.term.swap(c, lhs.name).equiv(&rhs.term.swap(c, rhs.name))
}

/// Conjunction of the α-comparison over each supplied witness. Every witness
/// must be fresh for both names and both bodies.
pub fn alpha_universal_probe<X: Nominal>(
    lhs: &Abstraction<X>,
    rhs: &Abstraction<X>,
    witnesses: &NameSet,
) -> Result<bool, WitnessError> {
    for c in witnesses {
        let parts: [&dyn crate::freshness::FreshFor; 4] =
            [&lhs.name, &rhs.name, &lhs.term, &rhs.term];
        if let Some(component) = parts.iter().position(|x| !fresh_tuple(c, &[*x])) {
            return Err(WitnessError::NotFresh { witness: c, component });
        }
    }
    Ok(witnesses
        .iter()
        .all(|c| lhs.term.swap(c, lhs.name).equiv(&rhs.term.swap(c, rhs.name))))
}

/// `p • [a]x = [p(a)](p • x)`
pub fn abs_act<X: Nominal>(p: &Perm, abs: &Abstraction<X>) -> Abstraction<X> {
    Abstraction {
        name: p.apply(abs.name),
        term: abs.term.act(p),
    }
}

/// `support(x) \ {a}`
pub fn abs_support<X: Nominal>(abs: &Abstraction<X>) -> NameSet {
    abs.term.support().without(abs.name)
}

impl<X: Nominal> Nominal for Abstraction<X> {
    fn act(&self, p: &Perm) -> Abstraction<X> {
        abs_act(p, self)
    }

    fn support(&self) -> NameSet {
        abs_support(self)
    }

    fn equiv(&self, other: &Abstraction<X>) -> bool {
        alpha_equiv_dec(self, other)
    }
}
