//! Historical recipes over exact rationals: false position, the Babylonian
//! sum/difference/product problems, and elimination on a table of
//! coefficients.

use std::fmt;

use crate::complex::ComplexApprox;
use crate::error::{AlgebraError, Result};
use crate::rational::{is_square_rational, Rational};

/// Worked steps of false position for `x + coeff·x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FalsePosition {
    /// Denominator of `coeff`, so that `trial · (1 + coeff)` is an integer.
    pub trial: Rational,
    /// `trial · (1 + coeff)`.
    pub trial_value: Rational,
    /// `b / trial_value`.
    pub ratio: Rational,
    /// `trial · ratio`, the solution.
    pub answer: Rational,
}

pub fn false_position(coeff: &Rational, b: &Rational) -> Result<FalsePosition> {
    let factor = Rational::one() + coeff;
    if factor.is_zero() {
        return Err(AlgebraError::DegenerateFalsePosition);
    }
    let trial = Rational::from(coeff.denom().clone());
    let trial_value = &trial * &factor;
    let ratio = b.checked_div(&trial_value)?;
    let answer = &trial * &ratio;
    Ok(FalsePosition {
        trial,
        trial_value,
        ratio,
        answer,
    })
}

/// A pair `(x, y)` from a Babylonian recipe. `exact` carries the rational
/// values when the radicand is the square of a rational.
#[derive(Debug, Clone, PartialEq)]
pub struct BabylonianPair {
    pub x: ComplexApprox,
    pub y: ComplexApprox,
    pub radicand: Rational,
    pub exact: Option<(Rational, Rational)>,
}

impl BabylonianPair {
    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }
}

/// Builds `x = sx·√rad + hx`, `y = sy·√rad + hy` with `hx, hy` rational.
fn recipe(radicand: Rational, x: (i64, &Rational), y: (i64, &Rational)) -> BabylonianPair {
    let root = ComplexApprox::real(radicand.to_f64()).sqrt();
    let approx = |(sign, h): (i64, &Rational)| root * sign as f64 + ComplexApprox::real(h.to_f64());
    let exact = is_square_rational(&radicand).map(|s| {
        let build = |(sign, h): (i64, &Rational)| &(&s * &Rational::from(sign)) + h;
        (build(x), build(y))
    });
    BabylonianPair {
        x: approx(x),
        y: approx(y),
        radicand,
        exact,
    }
}

fn half(a: &Rational) -> Rational {
    a * &Rational::new(1, 2).expect("nonzero denominator")
}

/// `x + y = a`, `xy = b`: `x, y = a/2 ± √((a/2)² - b)`.
pub fn babylonian_sum_product(a: &Rational, b: &Rational) -> BabylonianPair {
    let h = half(a);
    recipe(&h * &h - b, (1, &h), (-1, &h))
}

/// `x - y = a`, `xy = b`: `x = √((a/2)² + b) + a/2`, `y = √((a/2)² + b) - a/2`.
pub fn babylonian_diff_product(a: &Rational, b: &Rational) -> BabylonianPair {
    let h = half(a);
    recipe(&h * &h + b, (1, &h), (1, &-&h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquaresSign {
    /// `x + y = a`, `x² + y² = b`.
    Plus,
    /// `x - y = a`, `x² + y² = b`.
    Minus,
}

/// Both variants use the radicand `b/2 - (a/2)²`; a negative radicand gives
/// complex values instead of an error.
pub fn babylonian_sum_of_squares(sign: SquaresSign, a: &Rational, b: &Rational) -> BabylonianPair {
    let h = half(a);
    let radicand = half(b) - &h * &h;
    match sign {
        SquaresSign::Plus => recipe(radicand, (1, &h), (-1, &h)),
        SquaresSign::Minus => recipe(radicand, (1, &h), (1, &-&h)),
    }
}

/// Rows `a[i] · x = b[i]` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub a: Vec<Vec<Rational>>,
    pub b: Vec<Rational>,
}

impl LinearSystem {
    pub fn new(a: Vec<Vec<Rational>>, b: Vec<Rational>) -> Result<Self> {
        if a.is_empty() {
            return Err(AlgebraError::EmptySystem);
        }
        if a.len() != b.len() {
            return Err(AlgebraError::Structure(format!(
                "{} coefficient rows but {} constants",
                a.len(),
                b.len()
            )));
        }
        let expected = a[0].len();
        if expected == 0 {
            return Err(AlgebraError::EmptySystem);
        }
        if let Some((row, r)) = a.iter().enumerate().find(|(_, r)| r.len() != expected) {
            return Err(AlgebraError::RaggedSystem {
                row: row + 1,
                got: r.len(),
                expected,
            });
        }
        Ok(Self { a, b })
    }

    pub fn from_ints(rows: &[(&[i64], i64)]) -> Result<Self> {
        let a = rows
            .iter()
            .map(|(r, _)| r.iter().map(|&v| Rational::from(v)).collect())
            .collect();
        let b = rows.iter().map(|&(_, c)| Rational::from(c)).collect();
        Self::new(a, b)
    }

    pub fn unknowns(&self) -> usize {
        self.a[0].len()
    }

    /// One equation per line, `1 2 2 | 9`; blank lines and `#` comments are
    /// skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |why: String| AlgebraError::Parse(format!("line {}: {why}", no + 1));
            let (lhs, rhs) = line
                .split_once('|')
                .ok_or_else(|| bad("missing `|` before the constant".into()))?;
            let rat = |t: &str| t.parse::<Rational>().map_err(|_| bad(format!("bad rational `{t}`")));
            a.push(lhs.split_whitespace().map(rat).collect::<Result<Vec<_>>>()?);
            b.push(rat(rhs.trim())?);
        }
        Self::new(a, b)
    }

    /// `true` when `x` satisfies every equation exactly.
    pub fn is_solution(&self, x: &[Rational]) -> bool {
        x.len() == self.unknowns()
            && self.a.iter().zip(&self.b).all(|(row, rhs)| {
                let lhs = row
                    .iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (c, v)| acc + c * v);
                &lhs == rhs
            })
    }

    /// The system laid out by columns, one column per unknown and a final
    /// column of constants, the way counting-board tables were written.
    pub fn columns(&self) -> String {
        let cols: Vec<Vec<String>> = (0..self.unknowns())
            .map(|j| self.a.iter().map(|r| r[j].to_string()).collect())
            .chain(std::iter::once(self.b.iter().map(|c| c.to_string()).collect()))
            .collect();
        let width = cols
            .iter()
            .flatten()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for col in cols.iter().rev() {
            let line: Vec<String> = col.iter().rev().map(|s| format!("{s:>width$}")).collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (row, c) in self.a.iter().zip(&self.b) {
            let lhs: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{} | {c}", lhs.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EliminationKind {
    Unique,
    Inconsistent,
    Underdetermined,
}

impl fmt::Display for EliminationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Unique => "unique",
            Self::Inconsistent => "inconsistent",
            Self::Underdetermined => "underdetermined",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationResult {
    pub kind: EliminationKind,
    /// Present only for [`EliminationKind::Unique`].
    pub solution: Option<Vec<Rational>>,
    /// Rank of the coefficient matrix.
    pub rank: usize,
    /// Reduced augmented rows after elimination.
    pub reduced: Vec<Vec<Rational>>,
}

/// Gauss-Jordan elimination using only row interchange, scaling a row by a
/// nonzero rational, and adding a multiple of one row to another. The pivot
/// is the first nonzero entry found scanning down each column.
pub fn eliminate(sys: &LinearSystem) -> EliminationResult {
    let n = sys.unknowns();
    let mut rows: Vec<Vec<Rational>> = sys
        .a
        .iter()
        .zip(&sys.b)
        .map(|(r, c)| r.iter().cloned().chain(std::iter::once(c.clone())).collect())
        .collect();
    let m = rows.len();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..m).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip().expect("pivot is nonzero");
        for v in rows[rank].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v = &*v - &(&factor * p);
            }
        }
        rank += 1;
    }
    let inconsistent = rows[rank..].iter().any(|r| !r[n].is_zero());
    let (kind, solution) = if inconsistent {
        (EliminationKind::Inconsistent, None)
    } else if rank < n {
        (EliminationKind::Underdetermined, None)
    } else {
        // rank = n: rows 0..n are the identity with the solution on the right
        let x = rows[..n].iter().map(|r| r[n].clone()).collect();
        (EliminationKind::Unique, Some(x))
    };
    EliminationResult {
        kind,
        solution,
        rank,
        reduced: rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn papyrus_walkthrough() {
        let fp = false_position(&q(1, 4), &q(15, 1)).unwrap();
        assert_eq!(fp.trial, q(4, 1));
        assert_eq!(fp.trial_value, q(5, 1));
        assert_eq!(fp.ratio, q(3, 1));
        assert_eq!(fp.answer, q(12, 1));
        assert_eq!(false_position(&q(0, 1), &q(7, 1)).unwrap().answer, q(7, 1));
        assert_eq!(false_position(&q(1, 2), &q(9, 1)).unwrap().answer, q(6, 1));
        assert_eq!(false_position(&q(-1, 1), &q(9, 1)), Err(AlgebraError::DegenerateFalsePosition));
    }

    #[test]
    fn sum_product() {
        let p = babylonian_sum_product(&q(5, 1), &q(6, 1));
        assert_eq!(p.exact, Some((q(3, 1), q(2, 1))));
        let p = babylonian_sum_product(&q(2, 1), &q(1, 1));
        assert_eq!(p.exact, Some((q(1, 1), q(1, 1))));
        let p = babylonian_sum_product(&q(0, 1), &q(1, 1));
        assert!(!p.is_exact());
        assert_eq!((p.x, p.y), (ComplexApprox::I, -ComplexApprox::I));
    }

    #[test]
    fn diff_product() {
        let p = babylonian_diff_product(&q(1, 1), &q(6, 1));
        assert_eq!(p.exact, Some((q(3, 1), q(2, 1))));
        let p = babylonian_diff_product(&q(0, 1), &q(4, 1));
        assert_eq!(p.exact, Some((q(2, 1), q(2, 1))));
        let p = babylonian_diff_product(&q(3, 1), &q(0, 1));
        assert_eq!(p.exact, Some((q(3, 1), q(0, 1))));
    }

    #[test]
    fn sums_of_squares() {
        let p = babylonian_sum_of_squares(SquaresSign::Plus, &q(7, 1), &q(25, 1));
        assert_eq!(p.exact, Some((q(4, 1), q(3, 1))));
        let p = babylonian_sum_of_squares(SquaresSign::Minus, &q(1, 1), &q(25, 1));
        assert_eq!(p.exact, Some((q(4, 1), q(3, 1))));
        let p = babylonian_sum_of_squares(SquaresSign::Plus, &q(2, 1), &q(2, 1));
        assert_eq!(p.exact, Some((q(1, 1), q(1, 1))));
        // radicand 1/2 - 1 < 0: complex, not an error
        let p = babylonian_sum_of_squares(SquaresSign::Plus, &q(2, 1), &q(1, 1));
        assert!(p.x.im != 0.0);
    }

    fn ex4() -> LinearSystem {
        LinearSystem::from_ints(&[(&[1, 2, 2], 9), (&[2, 5, 1], 17), (&[2, 7, 2], 22)]).unwrap()
    }

    #[test]
    fn elimination_outcomes() {
        let r = eliminate(&ex4());
        assert_eq!(r.kind, EliminationKind::Unique);
        assert_eq!(r.solution, Some(vec![q(3, 1), q(2, 1), q(1, 1)]));
        assert!(ex4().is_solution(&[q(3, 1), q(2, 1), q(1, 1)]));

        let s = LinearSystem::from_ints(&[(&[1, 2, 1], 4), (&[2, 1, 2], 5), (&[3, 3, 3], 8)]).unwrap();
        assert_eq!(eliminate(&s).kind, EliminationKind::Inconsistent);

        let s = LinearSystem::from_ints(&[(&[1, 1, 1], 3), (&[1, 2, 1], 4), (&[2, 1, 2], 5)]).unwrap();
        let r = eliminate(&s);
        assert_eq!(r.kind, EliminationKind::Underdetermined);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn parse_and_render() {
        let s = LinearSystem::parse("# exercise\n1 2 2 | 9\n2 5 1 | 17\n2 7 2 | 22\n").unwrap();
        assert_eq!(s, ex4());
        assert_eq!(LinearSystem::parse(&s.to_string()).unwrap(), s);
        assert_eq!(LinearSystem::parse(""), Err(AlgebraError::EmptySystem));
        assert!(matches!(
            LinearSystem::parse("1 2 | 3\n1 | 2"),
            Err(AlgebraError::RaggedSystem { row: 2, got: 1, expected: 2 })
        ));
        assert!(LinearSystem::parse("1 2 3").is_err());
        assert_eq!(
            ex4().columns(),
            "22 17  9\n 2  1  2\n 7  5  2\n 2  2  1\n"
        );
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-9i64..10, 1i64..5).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn recovers_planted_solution(
            a in proptest::collection::vec(proptest::collection::vec(small(), 3), 3),
            x in proptest::collection::vec(small(), 3),
        ) {
            let b: Vec<Rational> = a
                .iter()
                .map(|r| r.iter().zip(&x).fold(Rational::zero(), |acc, (c, v)| acc + c * v))
                .collect();
            let sys = LinearSystem::new(a, b).unwrap();
            let r = eliminate(&sys);
            prop_assert_ne!(r.kind, EliminationKind::Inconsistent);
            if r.kind == EliminationKind::Unique {
                prop_assert_eq!(r.solution.as_deref(), Some(x.as_slice()));
            } else {
                prop_assert!(r.rank < 3);
            }
        }

        #[test]
        fn recipes_satisfy_their_systems(a in small(), b in small()) {
            let tol = |v: f64| 1e-9 * (1.0 + v.abs());
            let (af, bf) = (a.to_f64(), b.to_f64());
            let p = babylonian_sum_product(&a, &b);
            prop_assert!(((p.x + p.y).re - af).abs() <= tol(af));
            prop_assert!(((p.x * p.y) - ComplexApprox::real(bf)).abs() <= tol(bf));
            if let Some((x, y)) = &p.exact {
                prop_assert_eq!(x + y, a.clone());
                prop_assert_eq!(x * y, b.clone());
            }
            let p = babylonian_diff_product(&a, &b);
            prop_assert!(((p.x - p.y).re - af).abs() <= tol(af));
            prop_assert!(((p.x * p.y) - ComplexApprox::real(bf)).abs() <= tol(bf));
            if let Some((x, y)) = &p.exact {
                prop_assert_eq!(x - y, a.clone());
                prop_assert_eq!(x * y, b.clone());
            }
            for sign in [SquaresSign::Plus, SquaresSign::Minus] {
                let p = babylonian_sum_of_squares(sign, &a, &b);
                let lin = match sign { SquaresSign::Plus => p.x + p.y, SquaresSign::Minus => p.x - p.y };
                prop_assert!((lin - ComplexApprox::real(af)).abs() <= tol(af));
                let sq = p.x * p.x + p.y * p.y;
                prop_assert!((sq - ComplexApprox::real(bf)).abs() <= tol(bf));
                if let Some((x, y)) = &p.exact {
                    prop_assert_eq!(x * x + y * y, b.clone());
                }
            }
        }
    }
}
