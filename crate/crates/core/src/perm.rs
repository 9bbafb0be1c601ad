//! Permutations of `{1..n}`, composed left to right: `(a·b)(i) = b(a(i))`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{AlgebraError, Result};
use crate::finite::table::CayleyTable;

/// Largest degree for which [`symmetric_group_table`] builds the full table.
pub const SYMMETRIC_BOUND: usize = 5;

/// A bijection of `{1..n}`; `image[i]` is the image of `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

fn check_bijection(image: &[usize]) -> Result<()> {
    let n = image.len();
    let mut seen = vec![false; n];
    for &y in image {
        if y == 0 || y > n || seen[y - 1] {
            return Err(AlgebraError::InvalidPermutation(format!(
                "{image:?} is not a rearrangement of 1..={n}"
            )));
        }
        seen[y - 1] = true;
    }
    Ok(())
}

impl Permutation {
    /// From the bottom row of the two-row form, with top row `1 2 .. n`.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        check_bijection(&image)?;
        Ok(Self { image })
    }

    /// Sends `top[k]` to `bottom[k]`; the column order does not matter.
    pub fn from_rows(top: &[usize], bottom: &[usize]) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(AlgebraError::InvalidPermutation(format!(
                "rows have lengths {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        check_bijection(top)?;
        check_bijection(bottom)?;
        let mut image = vec![0; top.len()];
        for (&t, &b) in top.iter().zip(bottom) {
            image[t - 1] = b;
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            image: (1..=n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// `α(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.degree() {
            return Err(AlgebraError::PointOutOfRange {
                point: i,
                n: self.degree(),
            });
        }
        Ok(self.image[i - 1])
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &y)| y == i + 1)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(AlgebraError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            image: self.image.iter().map(|&y| other.image[y - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.degree()];
        for (i, &y) in self.image.iter().enumerate() {
            image[y - 1] = i + 1;
        }
        Permutation { image }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = (1..=self.degree()).join(" ");
        write!(f, "({top} / {})", self.image.iter().join(" "))
    }
}

impl FromStr for Permutation {
    type Err = AlgebraError;

    /// Two-row form `(1 2 3 / 2 1 3)`; columns may come in any order.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || AlgebraError::Parse(format!("expected `(top / bottom)`, got `{s}`"));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (top, bottom) = inner.split_once('/').ok_or_else(bad)?;
        let row = |r: &str| {
            r.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()
        };
        Permutation::from_rows(&row(top)?, &row(bottom)?)
    }
}

/// All `n!` permutations, ordered lexicographically by their image lists.
pub fn symmetric_group_elements(n: usize) -> Vec<Permutation> {
    (1..=n)
        .permutations(n)
        .map(|image| Permutation { image })
        .collect()
}

/// Names `e, α1, α2, ...` in element order.
pub fn alpha_names(count: usize) -> Vec<String> {
    (0..count)
        .map(|k| if k == 0 { "e".to_string() } else { format!("α{k}") })
        .collect()
}

/// Cayley table of `S_n` for `1 <= n <= 5`, elements in lexicographic image
/// order named `e, α1, ...`. For `n = 3` this is the classical six-element
/// table with `α1 = (1 3 2)`, `α3 = (2 3 1)` as bottom rows.
pub fn symmetric_group_table(n: usize) -> Result<CayleyTable> {
    if n == 0 || n > SYMMETRIC_BOUND {
        return Err(AlgebraError::TooLarge {
            what: "symmetric group degree",
            size: n,
            bound: SYMMETRIC_BOUND,
        });
    }
    let elems = symmetric_group_elements(n);
    let index = |p: &Permutation| elems.iter().position(|q| q == p).expect("closed");
    CayleyTable::from_fn(alpha_names(elems.len()), |i, j| {
        index(&elems[i].compose(&elems[j]).expect("same degree"))
    })
}

/// Permutations of degree `n` fixing every listed point, in lexicographic
/// order.
pub fn stabilizer(n: usize, fixed: &[usize]) -> Result<Vec<Permutation>> {
    if let Some(&point) = fixed.iter().find(|&&p| p == 0 || p > n) {
        return Err(AlgebraError::PointOutOfRange { point, n });
    }
    Ok(symmetric_group_elements(n)
        .into_iter()
        .filter(|p| fixed.iter().all(|&j| p.image[j - 1] == j))
        .collect())
}

/// The six motions of an equilateral triangle and a map onto `S_3`.
#[derive(Debug, Clone)]
pub struct TriangleGroup {
    /// Rows and columns `β0..β5`; `op(r, c)` is the entry in row `r`, column `c`.
    pub table: CayleyTable,
    /// `iso_to_s3[i] = k` sends `α_i` of [`symmetric_group_table`]`(3)` to `β_k`.
    pub iso_to_s3: [usize; 6],
}

const TRIANGLE_ROWS: [[usize; 6]; 6] = [
    [0, 1, 2, 3, 4, 5],
    [1, 0, 5, 4, 3, 2],
    [2, 4, 0, 5, 1, 3],
    [3, 5, 4, 0, 2, 1],
    [4, 2, 3, 1, 5, 0],
    [5, 3, 1, 2, 0, 4],
];

pub fn triangle_group() -> TriangleGroup {
    let names = (0..6).map(|k| format!("β{k}")).collect();
    let rows = TRIANGLE_ROWS.iter().map(|r| r.to_vec()).collect();
    TriangleGroup {
        table: CayleyTable::new(names, rows).expect("static table is well formed"),
        iso_to_s3: [0, 1, 3, 4, 5, 2],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::magma::{classify_magma, is_isomorphism};
    use proptest::prelude::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn two_row_columns_commute() {
        let a = Permutation::from_rows(&[1, 2, 3], &[2, 1, 3]).unwrap();
        assert_eq!(a.apply(1).unwrap(), 2);
        let cols = [(1, 2), (2, 1), (3, 3)];
        for order in (0..3).permutations(3) {
            let top: Vec<_> = order.iter().map(|&k| cols[k].0).collect();
            let bottom: Vec<_> = order.iter().map(|&k| cols[k].1).collect();
            assert_eq!(Permutation::from_rows(&top, &bottom).unwrap(), a);
        }
        assert!(Permutation::from_rows(&[1, 2], &[1, 1]).is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let alpha = p(&[1, 3, 2]);
        let beta = p(&[2, 1, 3]);
        assert_eq!(alpha.compose(&beta).unwrap(), p(&[2, 3, 1]));
        assert_eq!(beta.compose(&alpha).unwrap(), p(&[3, 1, 2]));
        assert_eq!(Permutation::identity(3).compose(&alpha).unwrap(), alpha);
        assert_eq!(
            alpha.compose(&Permutation::identity(4)),
            Err(AlgebraError::DegreeMismatch(3, 4))
        );
    }

    #[test]
    fn inverses() {
        assert_eq!(p(&[2, 1, 3]).inverse(), p(&[2, 1, 3]));
        assert_eq!(p(&[2, 3, 1]).inverse(), p(&[3, 1, 2]));
        assert!(Permutation::identity(3).inverse().is_identity());
    }

    #[test]
    fn text_form() {
        let a = p(&[2, 1, 3]);
        assert_eq!(a.to_string(), "(1 2 3 / 2 1 3)");
        assert_eq!("(2 1 3 / 1 2 3)".parse::<Permutation>().unwrap(), a);
        assert!("(1 2 / 2)".parse::<Permutation>().is_err());
        assert!("1 2 / 2 1".parse::<Permutation>().is_err());
    }

    #[test]
    fn s3_table_cells() {
        // hand-composed grid, rows x columns over e, α1..α5
        let expected = [
            [0, 1, 2, 3, 4, 5],
            [1, 0, 3, 2, 5, 4],
            [2, 4, 0, 5, 1, 3],
            [3, 5, 1, 4, 0, 2],
            [4, 2, 5, 0, 3, 1],
            [5, 3, 4, 1, 2, 0],
        ];
        let t = symmetric_group_table(3).unwrap();
        assert_eq!(t.elements(), alpha_names(6).as_slice());
        for (i, row) in expected.iter().enumerate() {
            assert_eq!(t.row(i), row);
        }
    }

    #[test]
    fn small_symmetric_groups() {
        for n in 1..=4 {
            let r = classify_magma(&symmetric_group_table(n).unwrap());
            assert!(r.is_group);
            assert_eq!(r.is_abelian, n <= 2, "S_{n}");
        }
        assert_eq!(symmetric_group_table(1).unwrap().len(), 1);
        assert!(symmetric_group_table(6).is_err());
        assert!(symmetric_group_table(0).is_err());
    }

    #[test]
    fn stabilizers() {
        assert_eq!(stabilizer(3, &[1]).unwrap(), vec![p(&[1, 2, 3]), p(&[1, 3, 2])]);
        assert_eq!(stabilizer(4, &[]).unwrap().len(), 24);
        assert_eq!(stabilizer(3, &[1, 2, 3]).unwrap(), vec![Permutation::identity(3)]);
        let s = stabilizer(4, &[1]).unwrap();
        assert_eq!(s.len(), 6);
        for a in &s {
            assert!(s.contains(&a.inverse()));
            for b in &s {
                assert!(s.contains(&a.compose(b).unwrap()));
            }
        }
        assert!(matches!(stabilizer(3, &[4]), Err(AlgebraError::PointOutOfRange { point: 4, n: 3 })));
    }

    #[test]
    fn triangle_matches_s3() {
        let tri = triangle_group();
        let s3 = symmetric_group_table(3).unwrap();
        assert!(is_isomorphism(&s3, &tri.table, &tri.iso_to_s3));
        assert_eq!(tri.table.op_named("β4", "β4").unwrap(), "β5");
        assert!(classify_magma(&tri.table).is_group);
    }

    fn perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|image| Permutation { image })
    }

    proptest! {
        #[test]
        fn reverse_order_inverse(a in perm(5), b in perm(5), c in perm(5)) {
            let abc = a.compose(&b).unwrap().compose(&c).unwrap();
            let rev = c.inverse().compose(&b.inverse()).unwrap().compose(&a.inverse()).unwrap();
            prop_assert_eq!(abc.inverse(), rev);
            prop_assert!(check_bijection(abc.images()).is_ok());
            prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
            prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
        }
    }
}
