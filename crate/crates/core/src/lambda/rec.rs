use crate::abstraction::Abstraction;
use crate::atoms::{fresh_for, Name, NameSet};
use crate::lambda::{fv, Term};
use crate::nominal::Nominal;
use crate::suppfn::{fcb_lift, SuppFn};

/// α-structural recursion over λ-terms.
///
/// Given one clause per constructor, returns the function `r` with
///
/// * `r(x) = var(x)`
/// * `r(s t) = app(r(s), r(t))`
/// * `r(λa.s) = lam↑([c] r((a c) • s))` where `lam↑` is `lam` lifted to
///   abstractions by [`fcb_lift`] and `c` is fresh for the clauses and for
///   `λa.s`.
///
/// `lam` must satisfy the freshness condition for binders
/// ([`crate::suppfn::check_fcb`]) and all three clauses must respect their
/// declared supports ([`crate::suppfn::check_supp_spec`]). Under those
/// conditions `r` sends α-equivalent terms to equivalent results. The
/// combinator itself is total.
pub fn alpha_rec<Y>(
    var: SuppFn<Name, Y>,
    app: SuppFn<(Y, Y), Y>,
    lam: SuppFn<(Name, Y), Y>,
) -> SuppFn<Term, Y>
where
    Y: Nominal + Clone + Send + Sync + 'static,
{
    let mut supp = var.supp().union(app.supp());
    supp.extend_from(lam.supp());
    let clauses = Clauses {
        var,
        app,
        lifted: fcb_lift(&lam),
        supp: supp.clone(),
    };
    SuppFn::new(supp, move |t: &Term| clauses.run(t))
}

struct Clauses<Y> {
    var: SuppFn<Name, Y>,
    app: SuppFn<(Y, Y), Y>,
    lifted: SuppFn<Abstraction<Y>, Y>,
    supp: NameSet,
}

impl<Y: Nominal + Clone + Send + Sync + 'static> Clauses<Y> {
    fn run(&self, t: &Term) -> Y {
        match t {
            Term::Var(a) => self.var.apply(a),
            Term::App(f, x) => self.app.apply(&(self.run(f), self.run(x))),
            Term::Lam(a, body) => {
                let mut avoid = fv(body).union(&self.supp);
                avoid.insert(*a);
                let c = fresh_for(&avoid);
                let body = self.run(&body.swap(*a, c));
                self.lifted.apply(&Abstraction::new(c, body))
            }
        }
    }
}
