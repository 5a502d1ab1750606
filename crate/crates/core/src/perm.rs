//! Finite permutations of names, represented as words of transpositions.
//!
//! A [`Perm`] is a list of swaps applied left to right. Composition is
//! concatenation and inversion is reversal, so the representation is not
//! unique: `[(a a)]` and `[]` both denote the identity. Two permutations are
//! compared extensionally with [`Perm::equiv`].

use std::fmt;

use crate::atoms::{Name, NameSet};

/// The transposition exchanging two names.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Swap {
    pub first: Name,
    pub second: Name,
}

impl Swap {
    pub const fn new(first: Name, second: Name) -> Swap {
        Swap { first, second }
    }

    pub fn apply(self, c: Name) -> Name {
        if self.first == c {
            self.second
        } else if self.second == c {
            self.first
        } else {
            c
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Perm {
    swaps: Vec<Swap>,
}

impl Perm {
    /// The empty word.
    pub fn identity() -> Perm {
        Perm { swaps: Vec::new() }
    }

    /// The single transposition `(a b)`.
    pub fn swap(a: Name, b: Name) -> Perm {
        Perm {
            swaps: vec![Swap::new(a, b)],
        }
    }

    pub fn from_swaps(swaps: Vec<Swap>) -> Perm {
        Perm { swaps }
    }

    pub fn swaps(&self) -> &[Swap] {
        &self.swaps
    }

    pub fn is_empty(&self) -> bool {
        self.swaps.is_empty()
    }

    pub fn apply(&self, a: Name) -> Name {
        self.swaps.iter().fold(a, |x, s| s.apply(x))
    }

    /// `self ++ other`: the result first applies `self`, then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut swaps = Vec::with_capacity(self.swaps.len() + other.swaps.len());
        swaps.extend_from_slice(&self.swaps);
        swaps.extend_from_slice(&other.swaps);
        Perm { swaps }
    }

    pub fn inverse(&self) -> Perm {
        Perm {
            swaps: self.swaps.iter().rev().copied().collect(),
        }
    }

    /// Every name mentioned by some swap. Names outside this set are fixed.
    pub fn domain(&self) -> NameSet {
        self.swaps
            .iter()
            .flat_map(|s| [s.first, s.second])
            .collect()
    }

    /// Extensional equality. Both permutations fix every name outside the
    /// union of their domains, so it suffices to compare them there.
    pub fn equiv(&self, other: &Perm) -> bool {
        self.domain()
            .union(&other.domain())
            .iter()
            .all(|a| self.apply(a) == other.apply(a))
    }
}

impl From<Swap> for Perm {
    fn from(s: Swap) -> Perm {
        Perm { swaps: vec![s] }
    }
}

impl FromIterator<Swap> for Perm {
    fn from_iter<I: IntoIterator<Item = Swap>>(iter: I) -> Perm {
        Perm {
            swaps: iter.into_iter().collect(),
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.swaps.is_empty() {
            return f.write_str("ε");
        }
        for s in &self.swaps {
            write!(f, "({:?} {:?})", s.first, s.second)?;
        }
        Ok(())
    }
}
