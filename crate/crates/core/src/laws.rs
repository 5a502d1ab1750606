//! Randomized checking of the nominal laws.
//!
//! These samplers stand in for the proofs a user would otherwise owe when
//! adding a [`Nominal`] carrier. A pass means no counterexample was found in
//! the sampled cases, nothing more.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::atoms::{fresh_many, Name, NameSet};
use crate::nominal::Nominal;
use crate::perm::{Perm, Swap};

/// Bounds for the names and permutations drawn by the samplers.
#[derive(Copy, Clone, Debug)]
pub struct Bounds {
    /// Names are drawn from indices `0..name_pool`.
    pub name_pool: u32,
    pub max_swaps: usize,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds {
            name_pool: 6,
            max_swaps: 5,
        }
    }
}

pub fn random_name<R: Rng + ?Sized>(rng: &mut R, pool: u32) -> Name {
    Name::new(rng.gen_range(0..pool))
}

pub fn random_perm<R: Rng + ?Sized>(rng: &mut R, bounds: Bounds) -> Perm {
    let len = rng.gen_range(0..=bounds.max_swaps);
    (0..len)
        .map(|_| {
            Swap::new(
                random_name(rng, bounds.name_pool),
                random_name(rng, bounds.name_pool),
            )
        })
        .collect()
}

/// A different word for the same permutation: swaps are flipped, and an
/// identity swap or a cancelling pair may be spliced in.
pub fn respell<R: Rng + ?Sized>(rng: &mut R, p: &Perm, bounds: Bounds) -> Perm {
    let mut swaps: Vec<Swap> = p
        .swaps()
        .iter()
        .map(|s| {
            if rng.gen_bool(0.5) {
                Swap::new(s.second, s.first)
            } else {
                *s
            }
        })
        .collect();
    let at = rng.gen_range(0..=swaps.len());
    let a = random_name(rng, bounds.name_pool);
    match rng.gen_range(0..3) {
        0 => swaps.insert(at, Swap::new(a, a)),
        1 => {
            let b = random_name(rng, bounds.name_pool);
            swaps.insert(at, Swap::new(a, b));
            swaps.insert(at, Swap::new(b, a));
        }
        _ => {}
    }
    Perm::from_swaps(swaps)
}

/// Two names outside `avoid`, drawn from the pool where possible and padded
/// with fresh names otherwise. They may coincide.
pub fn names_outside<R: Rng + ?Sized>(rng: &mut R, avoid: &NameSet, pool: u32) -> (Name, Name) {
    let mut candidates: Vec<Name> = (0..pool)
        .map(Name::new)
        .filter(|&a| !avoid.contains(a))
        .collect();
    candidates.extend(fresh_many(avoid, 2));
    let a = *candidates.choose(rng).unwrap();
    let b = *candidates.choose(rng).unwrap();
    (a, b)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    /// `≡` is reflexive and symmetric on the sampled pairs.
    Setoid,
    GactId,
    GactCompat,
    GactProper,
    SupportSpec,
}

impl Law {
    pub const ALL: [Law; 5] = [
        Law::Setoid,
        Law::GactId,
        Law::GactCompat,
        Law::GactProper,
        Law::SupportSpec,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Setoid => "setoid",
            Law::GactId => "gact_id",
            Law::GactCompat => "gact_compat",
            Law::GactProper => "gact_proper",
            Law::SupportSpec => "support_spec",
        }
    }
}

#[derive(Clone, Debug)]
pub struct LawOutcome {
    pub law: Law,
    pub trials: usize,
    pub failures: usize,
    /// Debug rendering of the first failing case.
    pub counterexample: Option<String>,
}

impl LawOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug)]
pub struct LawReport {
    pub outcomes: Vec<LawOutcome>,
}

impl LawReport {
    fn new() -> LawReport {
        LawReport {
            outcomes: Law::ALL
                .iter()
                .map(|&law| LawOutcome {
                    law,
                    trials: 0,
                    failures: 0,
                    counterexample: None,
                })
                .collect(),
        }
    }

    fn record(&mut self, law: Law, ok: bool, witness: impl FnOnce() -> String) {
        let o = self.outcomes.iter_mut().find(|o| o.law == law).unwrap();
        o.trials += 1;
        if !ok {
            o.failures += 1;
            if o.counterexample.is_none() {
                o.counterexample = Some(witness());
            }
        }
    }

    pub fn outcome(&self, law: Law) -> &LawOutcome {
        self.outcomes.iter().find(|o| o.law == law).unwrap()
    }

    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(LawOutcome::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &LawOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            write!(f, "{:<13} {}/{}", o.law.name(), o.trials - o.failures, o.trials)?;
            if let Some(c) = &o.counterexample {
                write!(f, "  counterexample: {}", c)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Samples every nominal law `trials` times with values from `gen`.
///
/// For `gact_proper`, the second value is obtained by swapping two names
/// outside the support of the first; the implication is only tested when the
/// two are in fact equivalent, which is itself what `support_spec` checks.
pub fn check_laws<X, G, R>(mut gen: G, rng: &mut R, trials: usize, bounds: Bounds) -> LawReport
where
    X: Nominal + fmt::Debug,
    G: FnMut(&mut R) -> X,
    R: Rng,
{
    let mut report = LawReport::new();
    for _ in 0..trials {
        let x = gen(rng);
        let p = random_perm(rng, bounds);
        let q = random_perm(rng, bounds);

        let support = x.support();
        let (a, b) = names_outside(rng, &support, bounds.name_pool);
        let swapped = x.swap(a, b);
        report.record(Law::SupportSpec, swapped.equiv(&x), || {
            format!("x = {:?}, a = {:?}, b = {:?}, (a b)•x = {:?}", x, a, b, swapped)
        });

        let y = if rng.gen_bool(0.5) { swapped } else { gen(rng) };
        let xy = x.equiv(&y);
        let ok = x.equiv(&x) && xy == y.equiv(&x);
        report.record(Law::Setoid, ok, || format!("x = {:?}, y = {:?}", x, y));

        let id = x.act(&Perm::identity());
        report.record(Law::GactId, id.equiv(&x), || {
            format!("x = {:?}, ε•x = {:?}", x, id)
        });

        let lhs = x.act(&q).act(&p);
        let rhs = x.act(&q.compose(&p));
        report.record(Law::GactCompat, lhs.equiv(&rhs), || {
            format!("x = {:?}, p = {:?}, q = {:?}, p•(q•x) = {:?}, (q+p)•x = {:?}", x, p, q, lhs, rhs)
        });

        let p2 = respell(rng, &p, bounds);
        let ok = !(xy && p.equiv(&p2)) || x.act(&p).equiv(&y.act(&p2));
        report.record(Law::GactProper, ok, || {
            format!("x = {:?}, y = {:?}, p = {:?}, p' = {:?}", x, y, p, p2)
        });
    }
    report
}

/// Checks `support(p • x) = p(support(x))`, which holds for every carrier
/// shipped with this crate. Returns the first counterexample found.
pub fn check_support_equivariance<X, G, R>(
    mut gen: G,
    rng: &mut R,
    trials: usize,
    bounds: Bounds,
) -> Result<(), String>
where
    X: Nominal + fmt::Debug,
    G: FnMut(&mut R) -> X,
    R: Rng,
{
    for _ in 0..trials {
        let x = gen(rng);
        let p = random_perm(rng, bounds);
        let lhs = x.act(&p).support();
        let rhs = x.support().act(&p);
        if lhs != rhs {
            return Err(format!("x = {:?}, p = {:?}: {:?} vs {:?}", x, p, lhs, rhs));
        }
    }
    Ok(())
}
