//! Seeded fixtures shared by the criterion benches.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use workbench_core::classical::LinearSystem;
use workbench_core::{CayleyTable, ComplexApprox, Rational};

pub const SEED: u64 = 0xbe7c_4a11;

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

/// `Z_n` under addition with its labels shuffled.
pub fn scrambled_cyclic(n: usize, rng: &mut impl Rng) -> CayleyTable {
    let mut pi: Vec<usize> = (0..n).collect();
    pi.shuffle(rng);
    let mut inv = vec![0; n];
    for (i, &p) in pi.iter().enumerate() {
        inv[p] = i;
    }
    let names = (0..n).map(|k| format!("g{k}")).collect();
    CayleyTable::from_fn(names, |x, y| pi[(inv[x] + inv[y]) % n]).unwrap()
}

/// Monic quartics whose roots are known, with components in [-10, 10].
pub fn quartics(count: usize, rng: &mut impl Rng) -> Vec<[ComplexApprox; 5]> {
    (0..count)
        .map(|_| {
            let roots: Vec<ComplexApprox> = (0..4)
                .map(|_| ComplexApprox::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)))
                .collect();
            let mut c = [ComplexApprox::ZERO; 5];
            c[0] = ComplexApprox::ONE;
            for (k, &r) in roots.iter().enumerate() {
                for j in (1..=k + 1).rev() {
                    c[j] = c[j] - r * c[j - 1];
                }
            }
            c
        })
        .collect()
}

/// A dense n-by-n system with small integer entries.
pub fn dense_system(n: usize, rng: &mut impl Rng) -> LinearSystem {
    let a = (0..n)
        .map(|_| (0..n).map(|_| Rational::from(rng.gen_range(-9i64..=9))).collect())
        .collect();
    let b = (0..n).map(|_| Rational::from(rng.gen_range(-9i64..=9))).collect();
    LinearSystem::new(a, b).unwrap()
}
