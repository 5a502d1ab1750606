//! Atoms: opaque names and finite sets of them.

use std::collections::btree_set;
use std::collections::BTreeSet;
use std::fmt;
use std::iter::FromIterator;

/// An atom. Only identity and order are observable; the index is exposed so
/// that front ends can keep their own label tables.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Name(u32);

impl Name {
    pub const fn new(index: u32) -> Name {
        Name(index)
    }

    pub const fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0)
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0)
    }
}

/// A finite set of names, kept sorted.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NameSet(BTreeSet<Name>);

impl NameSet {
    pub fn new() -> NameSet {
        NameSet(BTreeSet::new())
    }

    pub fn singleton(a: Name) -> NameSet {
        let mut s = NameSet::new();
        s.insert(a);
        s
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: Name) -> bool {
        self.0.contains(&a)
    }

    /// Returns `true` if `a` was not already present.
    pub fn insert(&mut self, a: Name) -> bool {
        self.0.insert(a)
    }

    pub fn remove(&mut self, a: Name) -> bool {
        self.0.remove(&a)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Name> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn greatest(&self) -> Option<Name> {
        self.0.iter().next_back().copied()
    }

    pub fn union(&self, other: &NameSet) -> NameSet {
        NameSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &NameSet) -> NameSet {
        NameSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &NameSet) -> NameSet {
        NameSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &NameSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &NameSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// `self \ {a}`
    pub fn without(&self, a: Name) -> NameSet {
        let mut s = self.clone();
        s.remove(a);
        s
    }

    /// `self ∪ {a}`
    pub fn with(&self, a: Name) -> NameSet {
        let mut s = self.clone();
        s.insert(a);
        s
    }

    pub fn extend_from(&mut self, other: &NameSet) {
        self.0.extend(other.0.iter().copied());
    }
}

impl fmt::Debug for NameSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<Name> for NameSet {
    fn from_iter<I: IntoIterator<Item = Name>>(iter: I) -> NameSet {
        NameSet(iter.into_iter().collect())
    }
}

impl Extend<Name> for NameSet {
    fn extend<I: IntoIterator<Item = Name>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<const N: usize> From<[Name; N]> for NameSet {
    fn from(names: [Name; N]) -> NameSet {
        names.into_iter().collect()
    }
}

impl IntoIterator for NameSet {
    type Item = Name;
    type IntoIter = btree_set::IntoIter<Name>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a NameSet {
    type Item = Name;
    type IntoIter = std::iter::Copied<btree_set::Iter<'a, Name>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Chooses a name outside `avoid`: one past the largest index in the set, or
/// index 0 for the empty set.
pub fn fresh_for(avoid: &NameSet) -> Name {
    match avoid.greatest() {
        None => Name(0),
        Some(Name(i)) => Name(i.checked_add(1).expect("name supply exhausted")),
    }
}

/// `k` pairwise-distinct names, none of them in `avoid`.
pub fn fresh_many(avoid: &NameSet, k: usize) -> Vec<Name> {
    let mut avoid = avoid.clone();
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        let n = fresh_for(&avoid);
        avoid.insert(n);
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(i: u32) -> Name {
        Name::new(i)
    }

    #[test]
    fn fresh_for_empty_is_zero() {
        assert_eq!(fresh_for(&NameSet::new()), n(0));
    }

    #[test]
    fn fresh_for_is_max_plus_one() {
        assert_eq!(fresh_for(&NameSet::from([n(0), n(1), n(2)])), n(3));
        let s = NameSet::from([n(5)]);
        let f = fresh_for(&s);
        assert!(!s.contains(f));
        assert_eq!(f, n(6));
    }

    #[test]
    fn fresh_many_cases() {
        assert!(fresh_many(&NameSet::from([n(4)]), 0).is_empty());
        assert_eq!(fresh_many(&NameSet::new(), 2), vec![n(0), n(1)]);
        let got = fresh_many(&NameSet::from([n(0)]), 2);
        assert_eq!(got.len(), 2);
        assert_ne!(got[0], got[1]);
        assert!(got.iter().all(|&g| g != n(0)));
    }

    #[test]
    fn set_operations() {
        let a = NameSet::from([n(1), n(2), n(3)]);
        let b = NameSet::from([n(3), n(4)]);
        assert_eq!(a.union(&b), NameSet::from([n(1), n(2), n(3), n(4)]));
        assert_eq!(a.intersection(&b), NameSet::from([n(3)]));
        assert_eq!(a.difference(&b), NameSet::from([n(1), n(2)]));
        assert_eq!(a.greatest(), Some(n(3)));
        assert_eq!(NameSet::new().greatest(), None);
        assert_eq!(a.without(n(2)).with(n(7)), NameSet::from([n(1), n(3), n(7)]));
    }
}
