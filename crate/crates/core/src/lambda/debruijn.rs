//! Locally nameless images of λ-terms.
//!
//! Bound occurrences become indices counting the binders between the
//! occurrence and its own binder; free occurrences keep their name. Two terms
//! are α-equivalent exactly when their images are structurally equal, which
//! makes this an oracle independent of the nominal machinery.

use crate::atoms::Name;
use crate::lambda::Term;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DbTerm {
    Bound(usize),
    Free(Name),
    App(Box<DbTerm>, Box<DbTerm>),
    Lam(Box<DbTerm>),
}

pub fn to_debruijn(t: &Term) -> DbTerm {
    fn go(t: &Term, binders: &mut Vec<Name>) -> DbTerm {
        match t {
            Term::Var(a) => match binders.iter().rev().position(|b| b == a) {
                Some(i) => DbTerm::Bound(i),
                None => DbTerm::Free(*a),
            },
            Term::App(f, a) => DbTerm::App(Box::new(go(f, binders)), Box::new(go(a, binders))),
            Term::Lam(b, body) => {
                binders.push(*b);
                let body = go(body, binders);
                binders.pop();
                DbTerm::Lam(Box::new(body))
            }
        }
    }
    go(t, &mut Vec::new())
}

impl DbTerm {
    /// Every bound index points at an enclosing binder.
    pub fn is_well_formed(&self) -> bool {
        fn go(t: &DbTerm, depth: usize) -> bool {
            match t {
                DbTerm::Bound(i) => *i < depth,
                DbTerm::Free(_) => true,
                DbTerm::App(f, a) => go(f, depth) && go(a, depth),
                DbTerm::Lam(b) => go(b, depth + 1),
            }
        }
        go(self, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(i: u32) -> Name {
        Name::new(i)
    }

    #[test]
    fn conversions() {
        let (x, y) = (n(0), n(1));
        assert_eq!(
            to_debruijn(&Term::lam(x, Term::var(x))),
            DbTerm::Lam(Box::new(DbTerm::Bound(0)))
        );
        assert_eq!(
            to_debruijn(&Term::lam(x, Term::app(Term::var(x), Term::var(y)))),
            DbTerm::Lam(Box::new(DbTerm::App(
                Box::new(DbTerm::Bound(0)),
                Box::new(DbTerm::Free(y))
            )))
        );
        let k = to_debruijn(&Term::lam(x, Term::lam(y, Term::var(x))));
        assert_eq!(k, DbTerm::Lam(Box::new(DbTerm::Lam(Box::new(DbTerm::Bound(1))))));
        assert!(k.is_well_formed());
        assert!(!DbTerm::Lam(Box::new(DbTerm::Bound(1))).is_well_formed());
    }

    #[test]
    fn innermost_binder_wins() {
        let x = n(0);
        let t = Term::lam(x, Term::lam(x, Term::var(x)));
        assert_eq!(
            to_debruijn(&t),
            DbTerm::Lam(Box::new(DbTerm::Lam(Box::new(DbTerm::Bound(0)))))
        );
    }
}
