use std::fmt;

use crate::abstraction::{alpha_equiv_dec, Abstraction};
use crate::atoms::{Name, NameSet};
use crate::nominal::Nominal;
use crate::perm::Perm;

/// Untyped λ-terms with named binders.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Name),
    App(Box<Term>, Box<Term>),
    Lam(Name, Box<Term>),
}

impl Term {
    pub fn var(a: Name) -> Term {
        Term::Var(a)
    }

    pub fn app(f: Term, a: Term) -> Term {
        Term::App(Box::new(f), Box::new(a))
    }

    pub fn lam(a: Name, body: Term) -> Term {
        Term::Lam(a, Box::new(body))
    }

    /// Number of constructors.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(f, a) => 1 + f.size() + a.size(),
            Term::Lam(_, b) => 1 + b.size(),
        }
    }

    /// Every name occurring in the term, bound or free.
    pub fn names(&self) -> NameSet {
        let mut out = NameSet::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names(&self, out: &mut NameSet) {
        match self {
            Term::Var(a) => {
                out.insert(*a);
            }
            Term::App(f, a) => {
                f.collect_names(out);
                a.collect_names(out);
            }
            Term::Lam(b, body) => {
                out.insert(*b);
                body.collect_names(out);
            }
        }
    }

    /// Same tree once names are erased.
    pub fn same_shape(&self, other: &Term) -> bool {
        match (self, other) {
            (Term::Var(_), Term::Var(_)) => true,
            (Term::App(f1, a1), Term::App(f2, a2)) => f1.same_shape(f2) && a1.same_shape(a2),
            (Term::Lam(_, b1), Term::Lam(_, b2)) => b1.same_shape(b2),
            _ => false,
        }
    }
}

/// Applies `p` to every name occurrence, binders included.
pub fn term_act(p: &Perm, t: &Term) -> Term {
    if p.is_empty() {
        return t.clone();
    }
    match t {
        Term::Var(a) => Term::Var(p.apply(*a)),
        Term::App(f, a) => Term::app(term_act(p, f), term_act(p, a)),
        Term::Lam(b, body) => Term::lam(p.apply(*b), term_act(p, body)),
    }
}

pub fn fv(t: &Term) -> NameSet {
    let mut out = NameSet::new();
    let mut bound = Vec::new();
    collect_fv(t, &mut bound, &mut out);
    out
}

fn collect_fv(t: &Term, bound: &mut Vec<Name>, out: &mut NameSet) {
    match t {
        Term::Var(a) => {
            if !bound.contains(a) {
                out.insert(*a);
            }
        }
        Term::App(f, a) => {
            collect_fv(f, bound, out);
            collect_fv(a, bound, out);
        }
        Term::Lam(b, body) => {
            bound.push(*b);
            collect_fv(body, bound, out);
            bound.pop();
        }
    }
}

/// Decides α-equivalence. Variables and applications compare structurally;
/// two abstractions compare as name abstractions `[a]s ≈α [b]r` over terms.
pub fn alpha_eq(t: &Term, u: &Term) -> bool {
    // α-equivalent terms always share a shape; checking it first keeps the
    // common negative case cheap.
    t.same_shape(u) && alpha_eq_rec(t, u)
}

fn alpha_eq_rec(t: &Term, u: &Term) -> bool {
    match (t, u) {
        (Term::Var(a), Term::Var(b)) => a == b,
        (Term::App(f1, a1), Term::App(f2, a2)) => alpha_eq_rec(f1, f2) && alpha_eq_rec(a1, a2),
        (Term::Lam(a, s), Term::Lam(b, r)) => {
            let lhs = Abstraction::new(*a, Body::Borrowed(s));
            let rhs = Abstraction::new(*b, Body::Borrowed(r));
            alpha_equiv_dec(&lhs, &rhs)
        }
        _ => false,
    }
}

/// Borrowed view of a body used while comparing binders, so that the
/// abstraction does not have to own a copy of the subterm.
enum Body<'a> {
    Borrowed(&'a Term),
    Owned(Term),
}

impl Body<'_> {
    fn term(&self) -> &Term {
        match self {
            Body::Borrowed(t) => t,
            Body::Owned(t) => t,
        }
    }
}

impl Nominal for Body<'_> {
    fn act(&self, p: &Perm) -> Self {
        Body::Owned(term_act(p, self.term()))
    }

    fn support(&self) -> NameSet {
        fv(self.term())
    }

    fn equiv(&self, other: &Self) -> bool {
        alpha_eq_rec(self.term(), other.term())
    }
}

/// λ-terms at α-equivalence: the support of a term is its set of free
/// variables.
impl Nominal for Term {
    fn act(&self, p: &Perm) -> Term {
        term_act(p, self)
    }

    fn support(&self) -> NameSet {
        fv(self)
    }

    fn equiv(&self, other: &Term) -> bool {
        alpha_eq(self, other)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(a) => write!(f, "{:?}", a),
            Term::App(g, a) => {
                match **g {
                    Term::Lam(..) => write!(f, "({:?})", g)?,
                    _ => write!(f, "{:?}", g)?,
                }
                match **a {
                    Term::Var(_) => write!(f, " {:?}", a),
                    _ => write!(f, " ({:?})", a),
                }
            }
            Term::Lam(b, body) => write!(f, "λ{:?}. {:?}", b, body),
        }
    }
}
