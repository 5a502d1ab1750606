//! Exhaustive and random generation of λ-terms for testing.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::atoms::{fresh_for, Name, NameSet};
use crate::lambda::Term;
use crate::nominal::Nominal;

/// Every term with exactly `size` constructors whose variables are drawn from
/// `vars` and binders from `binders`.
pub fn terms_of_size(size: usize, vars: &[Name], binders: &[Name]) -> Vec<Term> {
    let mut table: Vec<Vec<Term>> = vec![Vec::new()];
    for s in 1..=size {
        let mut level = Vec::new();
        if s == 1 {
            level.extend(vars.iter().map(|&a| Term::var(a)));
        } else {
            for body in &table[s - 1] {
                for &b in binders {
                    level.push(Term::lam(b, body.clone()));
                }
            }
            for left in 1..s - 1 {
                let right = s - 1 - left;
                for f in &table[left] {
                    for a in &table[right] {
                        level.push(Term::app(f.clone(), a.clone()));
                    }
                }
            }
        }
        table.push(level);
    }
    table.swap_remove(size)
}

/// Every term with between 1 and `max_size` constructors, smallest first.
pub fn terms_up_to(max_size: usize, vars: &[Name], binders: &[Name]) -> Vec<Term> {
    (1..=max_size)
        .flat_map(|s| terms_of_size(s, vars, binders))
        .collect()
}

/// A random term with at most `max_size` constructors.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, max_size: usize, vars: &[Name], binders: &[Name]) -> Term {
    let size = rng.gen_range(1..=max_size.max(1));
    sized(rng, size, vars, binders)
}

fn sized<R: Rng + ?Sized>(rng: &mut R, size: usize, vars: &[Name], binders: &[Name]) -> Term {
    match size {
        0 | 1 => Term::var(*vars.choose(rng).unwrap()),
        2 => Term::lam(*binders.choose(rng).unwrap(), sized(rng, 1, vars, binders)),
        _ => {
            if rng.gen_bool(0.4) {
                Term::lam(*binders.choose(rng).unwrap(), sized(rng, size - 1, vars, binders))
            } else {
                let left = rng.gen_range(1..size - 1);
                Term::app(
                    sized(rng, left, vars, binders),
                    sized(rng, size - 1 - left, vars, binders),
                )
            }
        }
    }
}

/// An α-variant of `t`: each binder is renamed, with probability one half, to
/// a name drawn from `pool` or to a brand new name, whenever that renaming
/// does not capture.
pub fn alpha_variant<R: Rng + ?Sized>(rng: &mut R, t: &Term, pool: &[Name]) -> Term {
    match t {
        Term::Var(_) => t.clone(),
        Term::App(f, a) => Term::app(alpha_variant(rng, f, pool), alpha_variant(rng, a, pool)),
        Term::Lam(b, body) => {
            let body = alpha_variant(rng, body, pool);
            if rng.gen_bool(0.5) {
                return Term::lam(*b, body);
            }
            let avoid: NameSet = body.names().with(*b);
            let candidates: Vec<Name> = pool.iter().copied().filter(|c| !avoid.contains(*c)).collect();
            let c = candidates
                .choose(rng)
                .copied()
                .unwrap_or_else(|| fresh_for(&avoid.union(&pool.iter().copied().collect())));
            Term::lam(c, body.swap(*b, c))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::alpha_eq;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn names(k: u32) -> Vec<Name> {
        (0..k).map(Name::new).collect()
    }

    #[test]
    fn counts() {
        // T(1) = v, T(n) = b·T(n-1) + Σ T(i)·T(n-1-i)
        let xs = names(3);
        let counts: Vec<usize> = (1..=5).map(|s| terms_of_size(s, &xs, &xs).len()).collect();
        assert_eq!(counts, vec![3, 9, 36, 162, 783]);
        assert!(terms_of_size(4, &xs, &xs).iter().all(|t| t.size() == 4));
    }

    #[test]
    fn random_terms_respect_bound() {
        let mut rng = StdRng::seed_from_u64(11);
        let xs = names(3);
        for _ in 0..200 {
            assert!(random_term(&mut rng, 9, &xs, &xs).size() <= 9);
        }
    }

    #[test]
    fn variants_are_alpha_equal() {
        let mut rng = StdRng::seed_from_u64(12);
        let xs = names(3);
        for t in terms_up_to(4, &xs, &xs) {
            let u = alpha_variant(&mut rng, &t, &names(5));
            assert!(alpha_eq(&t, &u), "{:?} vs {:?}", t, u);
        }
    }
}
