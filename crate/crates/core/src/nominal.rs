//! The nominal interface and its instances for common carriers.
//!
//! A carrier is nominal when it has a decidable equivalence, a permutation
//! action and a support function satisfying:
//!
//! * `gact_id`: `ε • x ≡ x`
//! * `gact_compat`: `p • (q • x) ≡ (q ++ p) • x`
//! * `gact_proper`: `p ≡ q` and `x ≡ y` imply `p • x ≡ q • y`
//! * `support_spec`: `a, b ∉ support(x)` implies `(a b) • x ≡ x`
//!
//! `support` returns *some* finite support, an upper bound on the least one.
//! See [`crate::freshness::minimize_support`] for the tightest set that can be
//! computed.
//!
//! # Adding a carrier
//!
//! 1. Write the permutation action.
//! 2. Write a support function.
//! 3. Pick the equivalence the carrier is compared by (for a quotient, the
//!    quotienting relation).
//! 4. Run [`crate::laws::check_laws`] with a generator for the carrier; it
//!    samples all four laws and reports counterexamples.
//!
//! `gact_proper` is only ever checked against [`Perm::equiv`]. An instance that
//! distinguishes extensionally equal permutations is outside the contract.

use crate::atoms::{Name, NameSet};
use crate::perm::Perm;

pub trait Nominal: Sized {
    fn act(&self, p: &Perm) -> Self;

    fn support(&self) -> NameSet;

    fn equiv(&self, other: &Self) -> bool;

    fn swap(&self, a: Name, b: Name) -> Self {
        self.act(&Perm::swap(a, b))
    }
}

impl Nominal for Name {
    fn act(&self, p: &Perm) -> Name {
        p.apply(*self)
    }

    fn support(&self) -> NameSet {
        NameSet::singleton(*self)
    }

    fn equiv(&self, other: &Name) -> bool {
        self == other
    }
}

macro_rules! trivial_nominal {
    ($($t:ty),*) => {$(
        impl Nominal for $t {
            fn act(&self, _: &Perm) -> $t {
                self.clone()
            }

            fn support(&self) -> NameSet {
                NameSet::new()
            }

            fn equiv(&self, other: &$t) -> bool {
                self == other
            }
        }
    )*};
}

trivial_nominal!((), bool, u8, u16, u32, u64, usize, i8, i16, i32, i64, isize, char, String);

impl Nominal for NameSet {
    fn act(&self, p: &Perm) -> NameSet {
        self.iter().map(|a| p.apply(a)).collect()
    }

    fn support(&self) -> NameSet {
        self.clone()
    }

    fn equiv(&self, other: &NameSet) -> bool {
        self == other
    }
}

impl Nominal for Perm {
    /// Conjugation: `p • q = p⁻¹ ++ q ++ p`, i.e. the function `p ∘ q ∘ p⁻¹`.
    fn act(&self, p: &Perm) -> Perm {
        p.inverse().compose(self).compose(p)
    }

    fn support(&self) -> NameSet {
        self.domain()
    }

    fn equiv(&self, other: &Perm) -> bool {
        Perm::equiv(self, other)
    }
}

impl<A: Nominal, B: Nominal> Nominal for (A, B) {
    fn act(&self, p: &Perm) -> (A, B) {
        (self.0.act(p), self.1.act(p))
    }

    fn support(&self) -> NameSet {
        self.0.support().union(&self.1.support())
    }

    fn equiv(&self, other: &(A, B)) -> bool {
        self.0.equiv(&other.0) && self.1.equiv(&other.1)
    }
}

impl<A: Nominal, B: Nominal, C: Nominal> Nominal for (A, B, C) {
    fn act(&self, p: &Perm) -> (A, B, C) {
        (self.0.act(p), self.1.act(p), self.2.act(p))
    }

    fn support(&self) -> NameSet {
        let mut s = self.0.support();
        s.extend_from(&self.1.support());
        s.extend_from(&self.2.support());
        s
    }

    fn equiv(&self, other: &(A, B, C)) -> bool {
        self.0.equiv(&other.0) && self.1.equiv(&other.1) && self.2.equiv(&other.2)
    }
}

/// Tagged union of two carriers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Either<L, R> {
    Left(L),
    Right(R),
}

impl<L: Nominal, R: Nominal> Nominal for Either<L, R> {
    fn act(&self, p: &Perm) -> Either<L, R> {
        match self {
            Either::Left(l) => Either::Left(l.act(p)),
            Either::Right(r) => Either::Right(r.act(p)),
        }
    }

    fn support(&self) -> NameSet {
        match self {
            Either::Left(l) => l.support(),
            Either::Right(r) => r.support(),
        }
    }

    fn equiv(&self, other: &Either<L, R>) -> bool {
        match (self, other) {
            (Either::Left(a), Either::Left(b)) => a.equiv(b),
            (Either::Right(a), Either::Right(b)) => a.equiv(b),
            _ => false,
        }
    }
}

impl<T: Nominal> Nominal for Option<T> {
    fn act(&self, p: &Perm) -> Option<T> {
        self.as_ref().map(|x| x.act(p))
    }

    fn support(&self) -> NameSet {
        self.as_ref().map(Nominal::support).unwrap_or_default()
    }

    fn equiv(&self, other: &Option<T>) -> bool {
        match (self, other) {
            (None, None) => true,
            (Some(a), Some(b)) => a.equiv(b),
            _ => false,
        }
    }
}

impl<T: Nominal> Nominal for Vec<T> {
    fn act(&self, p: &Perm) -> Vec<T> {
        self.iter().map(|x| x.act(p)).collect()
    }

    fn support(&self) -> NameSet {
        let mut s = NameSet::new();
        for x in self {
            s.extend_from(&x.support());
        }
        s
    }

    fn equiv(&self, other: &Vec<T>) -> bool {
        self.len() == other.len() && self.iter().zip(other).all(|(a, b)| a.equiv(b))
    }
}

impl<T: Nominal> Nominal for Box<T> {
    fn act(&self, p: &Perm) -> Box<T> {
        Box::new((**self).act(p))
    }

    fn support(&self) -> NameSet {
        (**self).support()
    }

    fn equiv(&self, other: &Box<T>) -> bool {
        (**self).equiv(other)
    }
}
