use itertools::Itertools;
use proptest::prelude::*;

use workbench_core::finite::magma::{
    are_isomorphic, classify_magma, find_neutral, inverses_of, is_isomorphism, subgroups, Group,
};
use workbench_core::finite::ring::{residue_ring, ring_classify};
use workbench_core::perm::{symmetric_group_table, triangle_group};
use workbench_core::CayleyTable;

fn names(n: usize) -> Vec<String> {
    (0..n).map(|k| format!("x{k}")).collect()
}

fn table(n: usize, cells: &[usize]) -> CayleyTable {
    CayleyTable::from_fn(names(n), |i, j| cells[i * n + j]).unwrap()
}

fn magma() -> impl Strategy<Value = CayleyTable> {
    (1usize..=4).prop_flat_map(|n| proptest::collection::vec(0..n, n * n).prop_map(move |c| table(n, &c)))
}

fn relabel(t: &CayleyTable, pi: &[usize]) -> CayleyTable {
    let n = t.len();
    let mut inv = vec![0; n];
    for (i, &p) in pi.iter().enumerate() {
        inv[p] = i;
    }
    CayleyTable::from_fn(names(n), |x, y| pi[t.op(inv[x], inv[y])]).unwrap()
}

fn naive_isomorphic(a: &CayleyTable, b: &CayleyTable) -> bool {
    a.len() == b.len()
        && (0..a.len())
            .permutations(a.len())
            .any(|f| is_isomorphism(a, b, &f))
}

fn flags(t: &CayleyTable) -> [bool; 5] {
    let r = classify_magma(t);
    [r.is_groupoid, r.is_semigroup, r.is_monoid, r.is_group, r.is_abelian]
}

proptest! {
    #[test]
    fn at_most_one_neutral(t in magma()) {
        let n = t.len();
        let two_sided = (0..n)
            .filter(|&e| (0..n).all(|x| t.op(e, x) == x && t.op(x, e) == x))
            .count();
        prop_assert!(two_sided <= 1);
        prop_assert_eq!(find_neutral(&t).neutral.is_some(), two_sided == 1);
    }

    #[test]
    fn monoid_inverses_are_unique(t in magma()) {
        let r = classify_magma(&t);
        if r.is_monoid {
            let e = r.neutral.unwrap();
            for a in 0..t.len() {
                prop_assert!(inverses_of(&t, e, a).len() <= 1);
            }
        }
    }

    #[test]
    fn isomorphism_transfers_flags(t in magma(), seed in any::<u64>()) {
        let n = t.len();
        let mut pi: Vec<usize> = (0..n).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            pi.swap(i, (s >> 33) as usize % (i + 1));
        }
        let u = relabel(&t, &pi);
        let f = are_isomorphic(&t, &u);
        prop_assert!(f.is_some());
        prop_assert!(is_isomorphism(&t, &u, f.as_ref().unwrap()));
        prop_assert_eq!(flags(&t), flags(&u));
    }

    #[test]
    fn isomorphism_search_matches_brute_force(a in magma(), b in magma()) {
        prop_assert_eq!(are_isomorphic(&a, &b).is_some(), naive_isomorphic(&a, &b));
    }
}

#[test]
fn isomorphism_search_on_five_element_tables() {
    let z5 = CayleyTable::from_fn(names(5), |i, j| (i + j) % 5).unwrap();
    let shifted = CayleyTable::from_fn(names(5), |i, j| (i + j + 1) % 5).unwrap();
    let left_zero = CayleyTable::from_fn(names(5), |i, _| i).unwrap();
    let right_zero = CayleyTable::from_fn(names(5), |_, j| j).unwrap();
    let max = CayleyTable::from_fn(names(5), |i, j| i.max(j)).unwrap();
    let min = CayleyTable::from_fn(names(5), |i, j| i.min(j)).unwrap();
    let all = [&z5, &shifted, &left_zero, &right_zero, &max, &min];
    for a in all {
        for b in all {
            assert_eq!(are_isomorphic(a, b).is_some(), naive_isomorphic(a, b));
        }
    }
}

#[test]
fn group_inverse_reverses_products() {
    for t in [symmetric_group_table(3).unwrap(), symmetric_group_table(4).unwrap(), triangle_group().table] {
        let g = Group::new(&t).unwrap();
        for a in 0..t.len() {
            for b in 0..t.len() {
                assert_eq!(g.inverse(g.op(a, b)), g.op(g.inverse(b), g.inverse(a)));
            }
        }
    }
}

#[test]
fn s3_has_six_subgroups() {
    let t = symmetric_group_table(3).unwrap();
    let subs = subgroups(&t, 12).unwrap();
    let sizes: Vec<usize> = subs.iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![1, 2, 2, 2, 3, 6]);
}

/// Every multiplication table over the additive group of `Z_m`.
fn all_products(m: usize) -> impl Iterator<Item = CayleyTable> {
    let cells = m * m;
    (0..m.pow(cells as u32)).map(move |mut code| {
        let mut c = vec![0; cells];
        for v in c.iter_mut() {
            *v = code % m;
            code /= m;
        }
        CayleyTable::from_fn((0..m).map(|k| k.to_string()).collect(), |i, j| c[i * m + j]).unwrap()
    })
}

#[test]
fn ring_theorems_over_all_small_multiplications() {
    let mut rings = 0;
    for m in [2u64, 3] {
        let (add, _) = residue_ring(m).unwrap();
        let n = add.len();
        for mul in all_products(n) {
            let r = ring_classify(&add, &mul).unwrap();
            if !r.distributive {
                continue;
            }
            rings += 1;
            let zero = r.zero.unwrap();
            // x·0 = 0·x = 0
            for x in 0..n {
                assert_eq!(mul.op(x, zero), zero);
                assert_eq!(mul.op(zero, x), zero);
            }
            // a zero divisor is never a unit
            for (x, y) in &r.zero_divisors {
                assert!(!r.units.contains(x) && !r.units.contains(y));
            }
            // no zero divisors: nonzero factors cancel
            if r.zero_divisors.is_empty() {
                for c in (0..n).filter(|&c| c != zero) {
                    for x in 0..n {
                        for y in 0..n {
                            if mul.op(c, x) == mul.op(c, y) {
                                assert_eq!(x, y);
                            }
                        }
                    }
                }
            }
        }
    }
    // distributive multiplications over Z2 and Z3 are the scalings x·y = kxy
    assert_eq!(rings, 2 + 3);
}

#[test]
fn residue_ring_is_field_exactly_for_primes() {
    for m in 2u64..=12 {
        let (add, mul) = residue_ring(m).unwrap();
        let r = ring_classify(&add, &mul).unwrap();
        let prime = (2..m).all(|d| m % d != 0);
        assert_eq!(r.is_field, prime, "Z_{m}");
        assert_eq!(r.is_integral, prime, "Z_{m}");
        assert_eq!(r.zero_divisors.is_empty(), prime, "Z_{m}");
        assert_eq!(r.characteristic, Some(m as usize));
    }
}
