//! Groupoid-through-group analysis of a single Cayley table.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{AlgebraError, Result};
use crate::finite::table::CayleyTable;

/// Default bound on the order of groups passed to [`subgroups`].
pub const SUBGROUP_BOUND: usize = 12;

/// Two-sided and one-sided neutral elements of a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeutralScan {
    /// The two-sided neutral; there is never more than one.
    pub neutral: Option<usize>,
    /// Elements with `x * e = x` for all `x` that are not two-sided.
    pub right_only: Vec<usize>,
    /// Elements with `e * x = x` for all `x` that are not two-sided.
    pub left_only: Vec<usize>,
}

/// Which of the group axioms a table satisfies, with first-failure witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub is_groupoid: bool,
    pub is_semigroup: bool,
    pub is_monoid: bool,
    pub is_group: bool,
    /// A commutative group.
    pub is_abelian: bool,
    pub is_commutative: bool,
    pub neutral: Option<usize>,
    /// Present iff `!is_semigroup`.
    pub non_associative_witness: Option<(usize, usize, usize)>,
    /// Present iff `!is_commutative`.
    pub non_commutative_witness: Option<(usize, usize)>,
    /// Elements without a two-sided inverse; every element when there is no
    /// neutral element.
    pub non_invertible: Vec<usize>,
}

fn is_right_neutral(t: &CayleyTable, e: usize) -> bool {
    (0..t.len()).all(|x| t.op(x, e) == x)
}

fn is_left_neutral(t: &CayleyTable, e: usize) -> bool {
    (0..t.len()).all(|x| t.op(e, x) == x)
}

pub fn find_neutral(t: &CayleyTable) -> NeutralScan {
    let mut scan = NeutralScan {
        neutral: None,
        right_only: Vec::new(),
        left_only: Vec::new(),
    };
    for e in 0..t.len() {
        match (is_left_neutral(t, e), is_right_neutral(t, e)) {
            (true, true) => {
                // a second two-sided neutral f would give e = e * f = f
                debug_assert!(scan.neutral.is_none());
                scan.neutral = Some(e);
            }
            (false, true) => scan.right_only.push(e),
            (true, false) => scan.left_only.push(e),
            (false, false) => {}
        }
    }
    scan
}

/// The lexicographically first `(x, y, z)` with `x * (y * z) != (x * y) * z`.
pub fn check_associative(t: &CayleyTable) -> Option<(usize, usize, usize)> {
    let n = t.len();
    for x in 0..n {
        for y in 0..n {
            let xy = t.op(x, y);
            for z in 0..n {
                if t.op(x, t.op(y, z)) != t.op(xy, z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// The lexicographically first `(x, y)` with `x * y != y * x`.
pub fn check_commutative(t: &CayleyTable) -> Option<(usize, usize)> {
    let n = t.len();
    (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| t.op(x, y) != t.op(y, x))
}

/// All two-sided inverses of `a` with respect to the neutral `e`.
pub fn inverses_of(t: &CayleyTable, e: usize, a: usize) -> Vec<usize> {
    (0..t.len())
        .filter(|&b| t.op(a, b) == e && t.op(b, a) == e)
        .collect()
}

pub fn classify_magma(t: &CayleyTable) -> StructureReport {
    let neutral = find_neutral(t).neutral;
    let non_associative_witness = check_associative(t);
    let non_commutative_witness = check_commutative(t);
    let non_invertible: Vec<usize> = match neutral {
        Some(e) => (0..t.len())
            .filter(|&a| inverses_of(t, e, a).is_empty())
            .collect(),
        None => (0..t.len()).collect(),
    };
    let is_semigroup = non_associative_witness.is_none();
    let is_monoid = is_semigroup && neutral.is_some();
    let is_group = is_monoid && non_invertible.is_empty();
    let is_commutative = non_commutative_witness.is_none();
    StructureReport {
        is_groupoid: true,
        is_semigroup,
        is_monoid,
        is_group,
        is_abelian: is_group && is_commutative,
        is_commutative,
        neutral,
        non_associative_witness,
        non_commutative_witness,
        non_invertible,
    }
}

/// A verified group: the table plus its neutral element and inverse map.
#[derive(Debug, Clone)]
pub struct Group<'a> {
    table: &'a CayleyTable,
    neutral: usize,
    inverse: Vec<usize>,
}

impl<'a> Group<'a> {
    pub fn new(table: &'a CayleyTable) -> Result<Self> {
        let report = classify_magma(table);
        if !report.is_group {
            return Err(AlgebraError::NotAGroup);
        }
        let neutral = report.neutral.expect("groups have a neutral element");
        let inverse = (0..table.len())
            .map(|a| inverses_of(table, neutral, a)[0])
            .collect();
        Ok(Self {
            table,
            neutral,
            inverse,
        })
    }

    pub fn table(&self) -> &CayleyTable {
        self.table
    }

    pub fn neutral(&self) -> usize {
        self.neutral
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table.op(a, b)
    }

    /// Smallest `k >= 1` with `a^k = e`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.neutral {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// The subgroup generated by `seed`: closure under the composition, which
    /// in a finite group also contains all inverses.
    pub fn closure(&self, seed: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([self.neutral]);
        let mut queue: VecDeque<usize> = VecDeque::new();
        for s in seed {
            if set.insert(s) {
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            let members: Vec<usize> = set.iter().copied().collect();
            for y in members {
                for z in [self.op(x, y), self.op(y, x)] {
                    if set.insert(z) {
                        queue.push_back(z);
                    }
                }
            }
        }
        set
    }
}

/// The unique solutions of `a * x = b` and `y * a = b` in a group:
/// `x = a⁻¹ * b`, `y = b * a⁻¹`.
pub fn solve_in_group(t: &CayleyTable, a: usize, b: usize) -> Result<(usize, usize)> {
    let g = Group::new(t)?;
    let inv = g.inverse(a);
    Ok((g.op(inv, b), g.op(b, inv)))
}

/// Every subgroup, as sorted index sets ordered by size then lexicographically.
///
/// Grows closures outward from the trivial subgroup: each new subgroup is the
/// closure of a known one plus one outside element, which reaches every
/// subgroup along some chain.
pub fn subgroups(t: &CayleyTable, max_n: usize) -> Result<Vec<Vec<usize>>> {
    if t.len() > max_n {
        return Err(AlgebraError::TooLarge {
            what: "group",
            size: t.len(),
            bound: max_n,
        });
    }
    let g = Group::new(t)?;
    let trivial = g.closure([]);
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::from([trivial]);
    while let Some(h) = queue.pop_front() {
        let key: Vec<usize> = h.iter().copied().collect();
        if !found.insert(key) {
            continue;
        }
        for x in 0..t.len() {
            if !h.contains(&x) {
                let bigger = g.closure(h.iter().copied().chain([x]));
                let key: Vec<usize> = bigger.iter().copied().collect();
                if !found.contains(&key) {
                    queue.push_back(bigger);
                }
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// True when `subset` is nonempty and closed under the composition and inverses.
pub fn is_subgroup(t: &CayleyTable, subset: &[usize]) -> Result<bool> {
    let g = Group::new(t)?;
    if subset.is_empty() {
        return Ok(false);
    }
    let set: BTreeSet<usize> = subset.iter().copied().collect();
    Ok(set
        .iter()
        .all(|&x| set.contains(&g.inverse(x)) && set.iter().all(|&y| set.contains(&g.op(x, y)))))
}

/// An isomorphism-invariant fingerprint of one element of a magma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Signature {
    neutral: bool,
    idempotent: bool,
    /// Right powers x, x*x, (x*x)*x, ... : steps before the sequence cycles,
    /// and the cycle length. In a group the cycle length is the element order.
    power_tail: usize,
    power_period: usize,
    occurrences: usize,
    fixes_left: usize,
}

fn signatures(t: &CayleyTable) -> Vec<Signature> {
    let n = t.len();
    let neutral = find_neutral(t).neutral;
    let mut occurrences = vec![0; n];
    for i in 0..n {
        for &k in t.row(i) {
            occurrences[k] += 1;
        }
    }
    (0..n)
        .map(|x| {
            let mut seen = vec![usize::MAX; n];
            let mut p = x;
            let mut step = 0;
            while seen[p] == usize::MAX {
                seen[p] = step;
                p = t.op(p, x);
                step += 1;
            }
            Signature {
                neutral: neutral == Some(x),
                idempotent: t.op(x, x) == x,
                power_tail: seen[p],
                power_period: step - seen[p],
                occurrences: occurrences[x],
                fixes_left: (0..n).filter(|&y| t.op(x, y) == y).count(),
            }
        })
        .collect()
}

struct IsoSearch<'a> {
    a: &'a CayleyTable,
    b: &'a CayleyTable,
    sig_a: Vec<Signature>,
    sig_b: Vec<Signature>,
    forward: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    /// Assigns `x -> y` and propagates forced images `f(x*y) = f(x)*f(y)`.
    /// Returns the assignments made, or `None` (after undoing them) on conflict.
    fn assign(&mut self, x: usize, y: usize) -> Option<Vec<usize>> {
        let mut made = Vec::new();
        let mut pending = VecDeque::from([(x, y)]);
        while let Some((u, v)) = pending.pop_front() {
            match self.forward[u] {
                Some(w) if w == v => continue,
                Some(_) => return self.undo(made),
                None => {}
            }
            if self.used[v] || self.sig_a[u] != self.sig_b[v] {
                return self.undo(made);
            }
            self.forward[u] = Some(v);
            self.used[v] = true;
            made.push(u);
            for p in 0..self.a.len() {
                if let Some(fp) = self.forward[p] {
                    pending.push_back((self.a.op(u, p), self.b.op(v, fp)));
                    pending.push_back((self.a.op(p, u), self.b.op(fp, v)));
                }
            }
        }
        Some(made)
    }

    fn undo(&mut self, made: Vec<usize>) -> Option<Vec<usize>> {
        for u in made {
            let v = self.forward[u].take().unwrap();
            self.used[v] = false;
        }
        None
    }

    fn search(&mut self) -> bool {
        let Some(x) = (0..self.a.len()).find(|&k| self.forward[k].is_none()) else {
            return true;
        };
        for y in 0..self.b.len() {
            if self.used[y] || self.sig_a[x] != self.sig_b[y] {
                continue;
            }
            if let Some(made) = self.assign(x, y) {
                if self.search() {
                    return true;
                }
                self.undo(made);
            }
        }
        false
    }
}

/// Finds a bijection `f` (as `f[i]` = image index) with `f(x*y) = f(x)*f(y)`.
///
/// Backtracking over candidate images that share an invariant fingerprint
/// (neutrality, idempotence, power-cycle shape, occurrence counts), with
/// forced images propagated from the homomorphism condition.
pub fn are_isomorphic(a: &CayleyTable, b: &CayleyTable) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let (mut sa, mut sb) = (sig_a.clone(), sig_b.clone());
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let n = a.len();
    let mut search = IsoSearch {
        a,
        b,
        sig_a,
        sig_b,
        forward: vec![None; n],
        used: vec![false; n],
    };
    if search.search() {
        let f: Vec<usize> = search.forward.into_iter().map(Option::unwrap).collect();
        debug_assert!(is_isomorphism(a, b, &f));
        Some(f)
    } else {
        None
    }
}

/// Checks that `f` is a bijection preserving the composition.
pub fn is_isomorphism(a: &CayleyTable, b: &CayleyTable, f: &[usize]) -> bool {
    let n = a.len();
    if b.len() != n || f.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &y in f {
        if y >= n || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    (0..n).all(|x| (0..n).all(|y| f[a.op(x, y)] == b.op(f[x], f[y])))
}
