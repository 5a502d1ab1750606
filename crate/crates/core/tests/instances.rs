use rand::rngs::StdRng;
use rand::SeedableRng;

use nominal::lambda::enumerate::random_term;
use nominal::lambda::{alpha_eq, fv, term_act, Term};
use nominal::laws::{check_laws, check_support_equivariance, random_name, Bounds, Law};
use nominal::{check_supp_spec, compose, fn_act, fn_equiv_probe, Name, NameSet, Nominal, Perm, SuppFn};

fn n(i: u32) -> Name {
    Name::new(i)
}

fn pool(k: u32) -> Vec<Name> {
    (0..k).map(Name::new).collect()
}

fn gen_term(r: &mut StdRng) -> Term {
    random_term(r, 9, &pool(6), &pool(6))
}

/// Terms compared syntactically, so bound names count as support.
#[derive(Clone, Debug, PartialEq)]
struct Syntactic(Term);

impl Nominal for Syntactic {
    fn act(&self, p: &Perm) -> Syntactic {
        Syntactic(term_act(p, &self.0))
    }

    fn support(&self) -> NameSet {
        self.0.names()
    }

    fn equiv(&self, other: &Syntactic) -> bool {
        self.0 == other.0
    }
}

#[test]
fn syntactic_instance_is_lawful_with_larger_support() {
    let mut rng = StdRng::seed_from_u64(1);
    let report = check_laws(|r| Syntactic(gen_term(r)), &mut rng, 1000, Bounds::default());
    assert!(report.all_passed(), "{}", report);

    let t = Term::lam(n(0), Term::app(Term::var(n(0)), Term::var(n(1))));
    assert_eq!(Syntactic(t.clone()).support(), NameSet::from([n(0), n(1)]));
    assert_eq!(t.support(), NameSet::from([n(1)]));
}

#[test]
fn support_equivariance_for_shipped_carriers() {
    let mut rng = StdRng::seed_from_u64(2);
    check_support_equivariance(gen_term, &mut rng, 1000, Bounds::default()).unwrap();
    check_support_equivariance(|r| Syntactic(gen_term(r)), &mut rng, 1000, Bounds::default()).unwrap();
    check_support_equivariance(|r| (random_name(r, 6), gen_term(r)), &mut rng, 1000, Bounds::default())
        .unwrap();
}

/// Compares up to α but declares no support at all.
#[derive(Clone, Debug)]
struct Overclaimed(Term);

impl Nominal for Overclaimed {
    fn act(&self, p: &Perm) -> Overclaimed {
        Overclaimed(term_act(p, &self.0))
    }

    fn support(&self) -> NameSet {
        NameSet::new()
    }

    fn equiv(&self, other: &Overclaimed) -> bool {
        alpha_eq(&self.0, &other.0)
    }
}

#[test]
fn understated_support_is_caught() {
    let mut rng = StdRng::seed_from_u64(3);
    let report = check_laws(|r| Overclaimed(gen_term(r)), &mut rng, 500, Bounds::default());
    assert!(!report.outcome(Law::SupportSpec).passed());
    assert!(report.outcome(Law::GactCompat).passed());
}

#[test]
fn supp_spec_for_composites() {
    let y = n(1);
    let fvs = SuppFn::new(NameSet::new(), |t: &Term| fv(t));
    let remove_y = SuppFn::new(NameSet::from([y]), move |s: &NameSet| s.without(y));
    let both = compose(&fvs, &remove_y);
    assert_eq!(both.supp(), &NameSet::from([y]));

    let mut rng = StdRng::seed_from_u64(4);
    let report = check_supp_spec(&both, gen_term, &mut rng, 1000, Bounds::default());
    assert!(report.passed(), "{:?}", report.counterexample);

    // declaring an empty support for a function that mentions y is wrong
    let lying = SuppFn::new(NameSet::new(), move |t: &Term| Term::app(t.clone(), Term::var(y)));
    let report = check_supp_spec(&lying, gen_term, &mut rng, 1000, Bounds::default());
    assert!(!report.passed());
}

#[test]
fn conjugation_moves_support() {
    let y = n(1);
    let f = SuppFn::new(NameSet::from([y]), move |t: &Term| Term::app(t.clone(), Term::var(y)));
    let p = Perm::swap(n(1), n(4));
    let g = fn_act(&p, &f);
    assert_eq!(g.supp(), &NameSet::from([n(4)]));
    assert!(alpha_eq(&g.apply(&Term::var(n(0))), &Term::app(Term::var(n(0)), Term::var(n(4)))));

    let mut rng = StdRng::seed_from_u64(5);
    let probe: Vec<Term> = (0..200).map(|_| gen_term(&mut rng)).collect();
    // ε•f ≡ f and (p + q)•f ≡ q•(p•f), pointwise on the probe
    assert!(fn_equiv_probe(&fn_act(&Perm::identity(), &f), &f, &probe));
    let q = Perm::swap(n(4), n(2));
    assert!(fn_equiv_probe(&fn_act(&p.compose(&q), &f), &fn_act(&q, &fn_act(&p, &f)), &probe));
    assert!(!fn_equiv_probe(&g, &f, &probe));
    // swapping two names outside the support leaves f unchanged
    assert!(fn_equiv_probe(&fn_act(&Perm::swap(n(7), n(8)), &f), &f, &probe));
}
