//! Finite rings given by an addition table and a multiplication table.

use itertools::Itertools;

use crate::error::{AlgebraError, Result};
use crate::finite::magma::{check_associative, check_commutative, classify_magma, find_neutral};
use crate::finite::table::CayleyTable;

/// Bound on the ring size accepted by [`find_total_order`].
pub const ORDER_SEARCH_BOUND: usize = 6;

/// Ring axioms and derived properties of an (add, mul) table pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingReport {
    /// `(M, +)` is an abelian group.
    pub additive_abelian_group: bool,
    /// The additive neutral element.
    pub zero: Option<usize>,
    pub distributive: bool,
    /// First `(x, y, z)` violating `x(y+z) = xy+xz` or `(y+z)x = yx+zx`.
    pub distributive_witness: Option<(usize, usize, usize)>,
    /// Additive abelian group plus both distributive laws.
    pub is_ring: bool,
    pub associative_mul: bool,
    pub commutative_mul: bool,
    pub unity: Option<usize>,
    /// Pairs of nonzero `(x, y)` with `xy = 0`, lexicographic.
    pub zero_divisors: Vec<(usize, usize)>,
    /// Elements with a two-sided multiplicative inverse.
    pub units: Vec<usize>,
    pub is_trivial: bool,
    pub is_integral: bool,
    pub is_skew_field: bool,
    pub is_field: bool,
    pub characteristic: Option<usize>,
}

fn same_elements(add: &CayleyTable, mul: &CayleyTable) -> Result<()> {
    if add.elements() != mul.elements() {
        return Err(AlgebraError::ElementMismatch);
    }
    Ok(())
}

/// First triple breaking either distributive law.
pub fn check_distributive(add: &CayleyTable, mul: &CayleyTable) -> Option<(usize, usize, usize)> {
    let n = add.len();
    (0..n)
        .cartesian_product(0..n)
        .cartesian_product(0..n)
        .map(|((x, y), z)| (x, y, z))
        .find(|&(x, y, z)| {
            let s = add.op(y, z);
            mul.op(x, s) != add.op(mul.op(x, y), mul.op(x, z))
                || mul.op(s, x) != add.op(mul.op(y, x), mul.op(z, x))
        })
}

pub fn ring_classify(add: &CayleyTable, mul: &CayleyTable) -> Result<RingReport> {
    same_elements(add, mul)?;
    let n = add.len();
    let additive = classify_magma(add);
    let zero = additive.neutral;
    let distributive_witness = check_distributive(add, mul);
    let distributive = distributive_witness.is_none();
    let is_ring = additive.is_abelian && distributive;
    let associative_mul = check_associative(mul).is_none();
    let commutative_mul = check_commutative(mul).is_none();
    let unity = find_neutral(mul).neutral;

    let zero_divisors: Vec<(usize, usize)> = match zero {
        Some(z) => (0..n)
            .cartesian_product(0..n)
            .filter(|&(x, y)| x != z && y != z && mul.op(x, y) == z)
            .collect(),
        None => Vec::new(),
    };
    let units: Vec<usize> = match unity {
        Some(u) => (0..n)
            .filter(|&x| (0..n).any(|y| mul.op(x, y) == u && mul.op(y, x) == u))
            .collect(),
        None => Vec::new(),
    };
    let is_trivial = n == 1;
    let nonzero_all_units = match zero {
        Some(z) => (0..n).filter(|&x| x != z).all(|x| units.contains(&x)),
        None => false,
    };
    let has_nontrivial_unity = unity.is_some() && unity != zero;
    let is_integral = is_ring
        && associative_mul
        && commutative_mul
        && has_nontrivial_unity
        && zero_divisors.is_empty();
    let is_skew_field = is_ring && associative_mul && has_nontrivial_unity && nonzero_all_units;
    let is_field = is_skew_field && commutative_mul;
    let characteristic = match unity {
        Some(u) if additive.is_group => characteristic(add, u).ok(),
        _ => None,
    };
    Ok(RingReport {
        additive_abelian_group: additive.is_abelian,
        zero,
        distributive,
        distributive_witness,
        is_ring,
        associative_mul,
        commutative_mul,
        unity,
        zero_divisors,
        units,
        is_trivial,
        is_integral,
        is_skew_field,
        is_field,
        characteristic,
    })
}

/// The least `p >= 1` such that `unity + ... + unity` (`p` terms) is zero.
///
/// A finite additive group always reaches zero, so the characteristic-0 case
/// of infinite fields cannot occur here.
pub fn characteristic(add: &CayleyTable, unity: usize) -> Result<usize> {
    let zero = find_neutral(add)
        .neutral
        .ok_or_else(|| AlgebraError::Structure("addition has no zero element".into()))?;
    let mut sum = unity;
    for p in 1..=add.len() {
        if sum == zero {
            return Ok(p);
        }
        sum = add.op(sum, unity);
    }
    Err(AlgebraError::Structure(
        "repeated sums of the unity never reach zero; addition is not a group".into(),
    ))
}

/// `Z_m`: elements `"0".."m-1"` with addition and multiplication mod `m`.
pub fn residue_ring(m: u64) -> Result<(CayleyTable, CayleyTable)> {
    if m < 2 {
        return Err(AlgebraError::Modulus(m));
    }
    let size = usize::try_from(m).map_err(|_| AlgebraError::Modulus(m))?;
    let names: Vec<String> = (0..size).map(|k| k.to_string()).collect();
    let add = CayleyTable::from_fn(names.clone(), |i, j| (i + j) % size)?;
    let mul = CayleyTable::from_fn(names, |i, j| (i * j) % size)?;
    Ok((add, mul))
}

/// True when `chain` (smallest first) satisfies `x <= y => x + z <= y + z` and
/// `0 <= x, 0 <= y => 0 <= xy`. Reflexivity, transitivity, antisymmetry and
/// totality hold for any chain.
pub fn is_compatible_order(add: &CayleyTable, mul: &CayleyTable, zero: usize, chain: &[usize]) -> bool {
    let n = add.len();
    let mut rank = vec![0; n];
    for (r, &x) in chain.iter().enumerate() {
        rank[x] = r;
    }
    let le = |x: usize, y: usize| rank[x] <= rank[y];
    let translation = (0..n).all(|x| {
        (0..n).all(|y| !le(x, y) || (0..n).all(|z| le(add.op(x, z), add.op(y, z))))
    });
    let positivity = (0..n).all(|x| {
        (0..n).all(|y| !(le(zero, x) && le(zero, y)) || le(zero, mul.op(x, y)))
    });
    translation && positivity
}

/// Brute-force search over all `n!` chains for a total order compatible with
/// both operations. Returns the first one found, smallest element first.
pub fn find_total_order(add: &CayleyTable, mul: &CayleyTable) -> Result<Option<Vec<usize>>> {
    same_elements(add, mul)?;
    let n = add.len();
    if n > ORDER_SEARCH_BOUND {
        return Err(AlgebraError::TooLarge {
            what: "ring",
            size: n,
            bound: ORDER_SEARCH_BOUND,
        });
    }
    let zero = find_neutral(add)
        .neutral
        .ok_or_else(|| AlgebraError::Structure("addition has no zero element".into()))?;
    Ok((0..n)
        .permutations(n)
        .find(|chain| is_compatible_order(add, mul, zero, chain)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(r: &CayleyTable, name: &str) -> usize {
        r.index_of(name).unwrap()
    }

    #[test]
    fn residue_entries() {
        let (add, mul) = residue_ring(7).unwrap();
        assert_eq!(add.op_named("3", "6").unwrap(), "2");
        assert_eq!(mul.op_named("2", "4").unwrap(), "1");
        assert_eq!(add.op_named("1", "3").unwrap(), "4");
        assert_eq!(add.op_named("3", "4").unwrap(), "0");
        assert_eq!(mul.op_named("2", "3").unwrap(), "6");
        let (add2, _) = residue_ring(2).unwrap();
        assert_eq!(add2.op_named("1", "1").unwrap(), "0");
        let (_, mul6) = residue_ring(6).unwrap();
        assert_eq!(mul6.op_named("2", "3").unwrap(), "0");
        assert_eq!(residue_ring(1), Err(AlgebraError::Modulus(1)));
    }

    #[test]
    fn z7_is_a_field() {
        let (add, mul) = residue_ring(7).unwrap();
        let r = ring_classify(&add, &mul).unwrap();
        assert!(r.is_ring && r.is_field && r.is_integral);
        assert_eq!(r.characteristic, Some(7));
        assert!(r.zero_divisors.is_empty());
    }

    #[test]
    fn z6_has_zero_divisors() {
        let (add, mul) = residue_ring(6).unwrap();
        let r = ring_classify(&add, &mul).unwrap();
        assert!(r.is_ring && !r.is_field && !r.is_integral);
        assert!(r.zero_divisors.contains(&(idx(&add, "2"), idx(&add, "3"))));
        assert_eq!(r.characteristic, Some(6));
        // no zero divisor is a unit
        for (x, y) in &r.zero_divisors {
            assert!(!r.units.contains(x) && !r.units.contains(y));
        }
    }

    #[test]
    fn characteristics() {
        for (m, p) in [(2, 2), (4, 4), (7, 7)] {
            let (add, _) = residue_ring(m).unwrap();
            assert_eq!(characteristic(&add, 1).unwrap(), p);
        }
    }

    #[test]
    fn trivial_ring_is_not_a_field() {
        let add = CayleyTable::from_fn(vec!["0".into()], |_, _| 0).unwrap();
        let r = ring_classify(&add, &add).unwrap();
        assert!(r.is_ring && r.is_trivial && !r.is_field && !r.is_integral);
        assert_eq!(r.unity, Some(0));
        assert_eq!(r.characteristic, Some(1));
        assert_eq!(find_total_order(&add, &add).unwrap(), Some(vec![0]));
    }

    #[test]
    fn small_fields_cannot_be_ordered() {
        for m in [2, 3, 5] {
            let (add, mul) = residue_ring(m).unwrap();
            assert_eq!(find_total_order(&add, &mul).unwrap(), None, "Z_{m}");
        }
        let (add, mul) = residue_ring(7).unwrap();
        assert!(matches!(find_total_order(&add, &mul), Err(AlgebraError::TooLarge { .. })));
    }

    #[test]
    fn brute_force_z3_chains() {
        // independent check: enumerate the 6 chains by hand-written list
        let (add, mul) = residue_ring(3).unwrap();
        let chains = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for c in chains {
            assert!(!is_compatible_order(&add, &mul, 0, &c));
        }
    }

    #[test]
    fn non_distributive_pair() {
        // addition of Z_2 with multiplication x*y = 1 breaks x*0 = 0
        let (add, _) = residue_ring(2).unwrap();
        let mul = CayleyTable::from_fn(add.elements().to_vec(), |_, _| 1).unwrap();
        let r = ring_classify(&add, &mul).unwrap();
        assert!(!r.distributive && !r.is_ring);
        assert_eq!(r.distributive_witness, Some((0, 0, 0)));
    }

    #[test]
    fn mismatched_elements() {
        let (add, _) = residue_ring(2).unwrap();
        let (_, mul3) = residue_ring(3).unwrap();
        assert_eq!(ring_classify(&add, &mul3), Err(AlgebraError::ElementMismatch));
    }
}
