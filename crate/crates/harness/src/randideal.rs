//! Reproducible random monomial ideals for oracle cross-checks.
//!
//! The regularity pipeline has two independent routes (upper-Koszul homology
//! and polarization + Stanley-Reisner homology); random ideals drawn here
//! feed the equivalence checks. Ideals are generated from an explicit RNG so
//! a seed pins the whole sample.

use cwreg_core::ideal::{Monomial, MonomialIdeal};
use rand::Rng;

/// A random nonzero monomial ideal with at most `max_vars` variables, at
/// most `max_gens` candidate generators (fewer after minimalization), and
/// exponents at most `max_exp`. Every generator is a non-unit monomial, so
/// the result is a proper nonzero ideal.
pub fn random_ideal(
    rng: &mut impl Rng,
    max_vars: usize,
    max_gens: usize,
    max_exp: u32,
) -> MonomialIdeal {
    assert!(max_vars >= 1 && max_gens >= 1 && max_exp >= 1);
    let n = rng.random_range(1..=max_vars);
    let num_gens = rng.random_range(1..=max_gens);
    let mut gens = Vec::with_capacity(num_gens);
    for _ in 0..num_gens {
        let mut exps: Vec<u32> = (0..n).map(|_| rng.random_range(0..=max_exp)).collect();
        if exps.iter().all(|&e| e == 0) {
            // Re-roll a single coordinate so the generator is not the unit.
            let i = rng.random_range(0..n);
            exps[i] = rng.random_range(1..=max_exp);
        }
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::new(n, gens)
}
