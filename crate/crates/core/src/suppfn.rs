//! Finitely supported functions, the Freshness Theorem combinator and the
//! freshness condition for binders (FCB).
//!
//! A [`SuppFn`] bundles a function with a declared support. Two obligations
//! come with it and are the caller's responsibility:
//!
//! * the function respects equivalence: `x ≡ x'` implies `f(x) ≡ f(x')`;
//! * for `a, b` outside the declared support, `(a b) • f((a b) • x) ≡ f(x)`.
//!
//! Neither can be decided at runtime. [`check_supp_spec`] samples the second,
//! [`check_fresh_hyp`] and [`check_fcb`] sample the side conditions of
//! [`fresh_f`] and [`fcb_lift`].

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::abstraction::Abstraction;
use crate::atoms::{fresh_for, Name, NameSet};
use crate::freshness::fresh_dec;
use crate::laws::{names_outside, Bounds};
use crate::nominal::Nominal;
use crate::perm::Perm;

pub struct SuppFn<X, Y> {
    carrier: Arc<dyn Fn(&X) -> Y + Send + Sync>,
    supp: NameSet,
}

impl<X, Y> Clone for SuppFn<X, Y> {
    fn clone(&self) -> Self {
        SuppFn {
            carrier: Arc::clone(&self.carrier),
            supp: self.supp.clone(),
        }
    }
}

impl<X, Y> fmt::Debug for SuppFn<X, Y> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SuppFn").field("supp", &self.supp).finish_non_exhaustive()
    }
}

impl<X: 'static, Y: 'static> SuppFn<X, Y> {
    pub fn new<F>(supp: NameSet, f: F) -> SuppFn<X, Y>
    where
        F: Fn(&X) -> Y + Send + Sync + 'static,
    {
        SuppFn {
            carrier: Arc::new(f),
            supp,
        }
    }

    pub fn apply(&self, x: &X) -> Y {
        (self.carrier)(x)
    }

    pub fn supp(&self) -> &NameSet {
        &self.supp
    }

    /// `x ↦ g(f(x))`, supported by the union of both supports.
    pub fn then<Z: 'static>(&self, g: &SuppFn<Y, Z>) -> SuppFn<X, Z> {
        compose(self, g)
    }
}

impl<X: Clone + 'static> SuppFn<X, X> {
    pub fn identity() -> SuppFn<X, X> {
        SuppFn::new(NameSet::new(), X::clone)
    }
}

impl<X: 'static, Y: Nominal + Clone + Send + Sync + 'static> SuppFn<X, Y> {
    /// The function returning `value` everywhere, supported by the support of
    /// `value`.
    pub fn constant(value: Y) -> SuppFn<X, Y> {
        SuppFn::new(value.support(), move |_| value.clone())
    }
}

/// `G ∘ F`. The support is the union of the two supports, which may be larger
/// than the least support of the composite.
pub fn compose<X: 'static, Y: 'static, Z: 'static>(f: &SuppFn<X, Y>, g: &SuppFn<Y, Z>) -> SuppFn<X, Z> {
    let (f1, g1) = (Arc::clone(&f.carrier), Arc::clone(&g.carrier));
    SuppFn {
        carrier: Arc::new(move |x| g1(&f1(x))),
        supp: f.supp.union(&g.supp),
    }
}

/// Conjugation: `(p • F)(x) = p • F(p⁻¹ • x)`, supported by `p(supp F)`.
pub fn fn_act<X, Y>(p: &Perm, f: &SuppFn<X, Y>) -> SuppFn<X, Y>
where
    X: Nominal + 'static,
    Y: Nominal + 'static,
{
    let inverse = p.inverse();
    let forward = p.clone();
    let inner = Arc::clone(&f.carrier);
    SuppFn {
        carrier: Arc::new(move |x: &X| inner(&x.act(&inverse)).act(&forward)),
        supp: f.supp.act(p),
    }
}

/// Pointwise agreement on `probe`. Extensional equality of functions is not
/// decidable; this is the strongest check available.
pub fn fn_equiv_probe<X: 'static, Y: Nominal + 'static>(f: &SuppFn<X, Y>, g: &SuppFn<X, Y>, probe: &[X]) -> bool {
    probe.iter().all(|x| f.apply(x).equiv(&g.apply(x)))
}

/// `h(a)` for `a` fresh for the support of `h`.
///
/// When some `a # h` also satisfies `a # h(a)`, every fresh name gives an
/// equivalent result, so the choice of name does not matter. Without that
/// hypothesis the result depends on the chosen name; use [`check_fresh_hyp`]
/// to sample it.
pub fn fresh_f<X: 'static>(h: &SuppFn<Name, X>) -> X {
    h.apply(&fresh_for(&h.supp))
}

/// Tests `a # h(a)` for the name `a` that [`fresh_f`] would choose.
/// `a # h` holds by construction of `a`.
pub fn check_fresh_hyp<X: Nominal + 'static>(h: &SuppFn<Name, X>) -> bool {
    let a = fresh_for(&h.supp);
    fresh_dec(a, &h.apply(&a))
}

/// Lifts `f : (A × X) → Y` to abstractions.
///
/// The lifted function maps `[a]x` to `f(c, (a c) • x)` for `c` fresh for
/// `a`, `x` and `f`. Under the freshness condition for binders (some
/// `a # f` with `a # f(a, x)` for all `x`) this is well defined on
/// α-equivalence classes and agrees with `f(a, x)` whenever `a # f`.
pub fn fcb_lift<X, Y>(f: &SuppFn<(Name, X), Y>) -> SuppFn<Abstraction<X>, Y>
where
    X: Nominal + Clone + Send + Sync + 'static,
    Y: 'static,
{
    let f = f.clone();
    let supp = f.supp.clone();
    SuppFn::new(supp, move |abs: &Abstraction<X>| {
        let mut hs = abs.term.support().with(abs.name);
        hs.extend_from(&f.supp);
        let (name, term, g) = (abs.name, abs.term.clone(), f.clone());
        let h = SuppFn::new(hs, move |&c: &Name| g.apply(&(c, term.swap(name, c))));
        fresh_f(&h)
    })
}

/// Samples the freshness condition for binders: for `a = fresh_for(supp f)`,
/// checks `a # f(a, x)` for `trials` values `x` from `gen`.
pub fn check_fcb<X, Y, G, R>(f: &SuppFn<(Name, X), Y>, mut gen: G, rng: &mut R, trials: usize) -> bool
where
    X: 'static,
    Y: Nominal + 'static,
    G: FnMut(&mut R) -> X,
    R: Rng,
{
    let a = fresh_for(&f.supp);
    (0..trials).all(|_| {
        let x = gen(rng);
        fresh_dec(a, &f.apply(&(a, x)))
    })
}

#[derive(Clone, Debug)]
pub struct SuppSpecReport {
    pub trials: usize,
    pub failures: usize,
    pub counterexample: Option<String>,
}

impl SuppSpecReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Samples `(a b) • F((a b) • x) ≡ F(x)` for `a, b` outside the declared
/// support of `F`.
pub fn check_supp_spec<X, Y, G, R>(
    f: &SuppFn<X, Y>,
    mut gen: G,
    rng: &mut R,
    trials: usize,
    bounds: Bounds,
) -> SuppSpecReport
where
    X: Nominal + fmt::Debug + 'static,
    Y: Nominal + fmt::Debug + 'static,
    G: FnMut(&mut R) -> X,
    R: Rng,
{
    let mut report = SuppSpecReport {
        trials,
        failures: 0,
        counterexample: None,
    };
    for _ in 0..trials {
        let x = gen(rng);
        let (a, b) = names_outside(rng, &f.supp, bounds.name_pool);
        let lhs = f.apply(&x.swap(a, b)).swap(a, b);
        let rhs = f.apply(&x);
        if !lhs.equiv(&rhs) {
            report.failures += 1;
            if report.counterexample.is_none() {
                report.counterexample = Some(format!(
                    "a = {:?}, b = {:?}, x = {:?}: (a b)•F((a b)•x) = {:?}, F(x) = {:?}",
                    a, b, x, lhs, rhs
                ));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::random_name;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn n(i: u32) -> Name {
        Name::new(i)
    }

    #[test]
    fn apply_and_compose() {
        let id = SuppFn::<Name, Name>::identity();
        assert_eq!(id.apply(&n(3)), n(3));
        let k: SuppFn<Name, Name> = SuppFn::constant(n(1));
        assert_eq!(k.supp(), &NameSet::from([n(1)]));
        assert_eq!(k.apply(&n(7)), n(1));
        let pair = SuppFn::new(NameSet::from([n(2)]), |a: &Name| (*a, n(2)));
        let c = compose(&k, &pair);
        assert_eq!(c.apply(&n(0)), (n(1), n(2)));
        assert_eq!(c.supp(), &NameSet::from([n(1), n(2)]));
        let probe: Vec<Name> = (0..5).map(n).collect();
        assert!(fn_equiv_probe(&compose(&id, &k), &k, &probe));
    }

    #[test]
    fn conjugation() {
        let id = SuppFn::<Name, Name>::identity();
        let probe: Vec<Name> = (0..6).map(n).collect();
        assert!(fn_equiv_probe(&fn_act(&Perm::identity(), &id), &id, &probe));
        assert!(fn_equiv_probe(&fn_act(&Perm::swap(n(0), n(3)), &id), &id, &probe));
        let k: SuppFn<Name, Name> = SuppFn::constant(n(0));
        let moved = fn_act(&Perm::swap(n(0), n(1)), &k);
        assert_eq!(moved.supp(), &NameSet::from([n(1)]));
        assert!(fn_equiv_probe(&moved, &SuppFn::constant(n(1)), &probe));
        assert!(!fn_equiv_probe(&id, &k, &probe));
        assert!(fn_equiv_probe(&id, &k, &[]));
    }

    #[test]
    fn freshness_hypothesis() {
        let binder = SuppFn::new(NameSet::new(), |&a: &Name| Abstraction::new(a, a));
        assert!(check_fresh_hyp(&binder));
        assert!(fresh_f(&binder).equiv(&Abstraction::new(n(9), n(9))));
        let id = SuppFn::<Name, Name>::identity();
        assert!(!check_fresh_hyp(&id));
        let k: SuppFn<Name, bool> = SuppFn::constant(true);
        assert!(check_fresh_hyp(&k));
        assert!(fresh_f(&k));
    }

    #[test]
    fn supp_spec_sampling() {
        let mut rng = StdRng::seed_from_u64(7);
        let b = Bounds::default();
        let id = SuppFn::<Name, Name>::identity();
        assert!(check_supp_spec(&id, |r| random_name(r, 6), &mut rng, 300, b).passed());

        let hidden = SuppFn::new(NameSet::new(), |_: &Name| n(0));
        let report = check_supp_spec(&hidden, |r| random_name(r, 6), &mut rng, 300, b);
        assert!(!report.passed());
        assert!(report.counterexample.is_some());

        let declared: SuppFn<Name, Name> = SuppFn::constant(n(0));
        assert!(check_supp_spec(&declared, |r| random_name(r, 6), &mut rng, 300, b).passed());
    }

    #[test]
    fn fcb_on_names() {
        let mut rng = StdRng::seed_from_u64(8);
        // f(a, x) = [a](a, x) never depends on a.
        let f = SuppFn::new(NameSet::new(), |(a, x): &(Name, Name)| Abstraction::new(*a, (*a, *x)));
        assert!(check_fcb(&f, |r| random_name(r, 6), &mut rng, 100));
        let lifted = fcb_lift(&f);
        assert_eq!(lifted.supp(), f.supp());
        let arg = Abstraction::new(n(0), n(2));
        assert!(lifted.apply(&arg).equiv(&f.apply(&(n(0), n(2)))));

        let proj = SuppFn::new(NameSet::new(), |(a, _): &(Name, Name)| *a);
        assert!(!check_fcb(&proj, |r| random_name(r, 6), &mut rng, 10));

        let k: SuppFn<(Name, Name), bool> = SuppFn::constant(false);
        assert!(check_fcb(&k, |r| random_name(r, 6), &mut rng, 10));
        assert!(!fcb_lift(&k).apply(&arg));
    }
}
