use crate::atoms::fresh_for;
use crate::atoms::Name;
use crate::lambda::{fv, term_act, Term};
use crate::perm::Perm;

/// Capture-avoiding substitution `t[a := u]`.
///
/// Every binder is renamed to `fresh_for(fv(body) ∪ fv(u) ∪ {a, b})` on the
/// way down, whether or not a capture would occur, so results are
/// deterministic and never depend on the incoming binder names.
pub fn subst(t: &Term, a: Name, u: &Term) -> Term {
    let fv_u = fv(u);
    go(t, a, u, &fv_u)
}

fn go(t: &Term, a: Name, u: &Term, fv_u: &crate::atoms::NameSet) -> Term {
    match t {
        Term::Var(b) if *b == a => u.clone(),
        Term::Var(_) => t.clone(),
        Term::App(f, x) => Term::app(go(f, a, u, fv_u), go(x, a, u, fv_u)),
        Term::Lam(b, body) => {
            let mut avoid = fv(body).union(fv_u);
            avoid.insert(a);
            avoid.insert(*b);
            let c = fresh_for(&avoid);
            let renamed = term_act(&Perm::swap(*b, c), body);
            Term::lam(c, go(&renamed, a, u, fv_u))
        }
    }
}

/// Contracts the leftmost-outermost redex, if any.
pub fn beta_step(t: &Term) -> Option<Term> {
    match t {
        Term::Var(_) => None,
        Term::App(f, x) => {
            if let Term::Lam(a, body) = &**f {
                return Some(subst(body, *a, x));
            }
            if let Some(f2) = beta_step(f) {
                return Some(Term::App(Box::new(f2), x.clone()));
            }
            beta_step(x).map(|x2| Term::App(f.clone(), Box::new(x2)))
        }
        Term::Lam(a, body) => beta_step(body).map(|b| Term::lam(*a, b)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub term: Term,
    pub steps: usize,
    /// `false` when the fuel ran out before a normal form was reached.
    pub normal: bool,
}

/// Repeats [`beta_step`] at most `fuel` times.
pub fn normalize(t: &Term, fuel: usize) -> Normalized {
    let mut term = t.clone();
    let mut steps = 0;
    loop {
        let next = match beta_step(&term) {
            None => return Normalized { term, steps, normal: true },
            Some(_) if steps == fuel => return Normalized { term, steps, normal: false },
            Some(next) => next,
        };
        term = next;
        steps += 1;
    }
}
