//! The field `Q(√d)` as pairs of rationals `(x, y)` meaning `x + y√d`.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::rational::{is_square_rational, Rational};

/// `Q(√d)` for a rational `d` that is not the square of a rational.
///
/// Negative `d` is allowed; `d = -1` gives the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtensionField {
    d: Rational,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QuadExtElem {
    pub x: Rational,
    pub y: Rational,
}

impl QuadExtElem {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(x.into(), y.into())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl ExtensionField {
    pub fn new(d: Rational) -> Result<Self> {
        if is_square_rational(&d).is_some() {
            return Err(AlgebraError::SquareParameter(d.to_string()));
        }
        Ok(Self { d })
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn zero(&self) -> QuadExtElem {
        QuadExtElem::default()
    }

    pub fn one(&self) -> QuadExtElem {
        QuadExtElem::new(Rational::one(), Rational::zero())
    }

    /// `√d` itself, the pair `(0, 1)`.
    pub fn root(&self) -> QuadExtElem {
        QuadExtElem::new(Rational::zero(), Rational::one())
    }

    pub fn add(&self, a: &QuadExtElem, b: &QuadExtElem) -> QuadExtElem {
        QuadExtElem::new(&a.x + &b.x, &a.y + &b.y)
    }

    pub fn sub(&self, a: &QuadExtElem, b: &QuadExtElem) -> QuadExtElem {
        QuadExtElem::new(&a.x - &b.x, &a.y - &b.y)
    }

    pub fn neg(&self, a: &QuadExtElem) -> QuadExtElem {
        QuadExtElem::new(-&a.x, -&a.y)
    }

    /// `(x1 x2 + d y1 y2, x1 y2 + y1 x2)`.
    pub fn mul(&self, a: &QuadExtElem, b: &QuadExtElem) -> QuadExtElem {
        QuadExtElem::new(
            &a.x * &b.x + &self.d * &(&a.y * &b.y),
            &a.x * &b.y + &a.y * &b.x,
        )
    }

    /// `(x / (x² - d y²), -y / (x² - d y²))`. The denominator vanishes only
    /// at zero because `d` is not a square.
    pub fn inverse(&self, a: &QuadExtElem) -> Result<QuadExtElem> {
        if a.is_zero() {
            return Err(AlgebraError::ZeroInverse);
        }
        let den = self.norm(a);
        Ok(QuadExtElem::new(a.x.checked_div(&den)?, (-&a.y).checked_div(&den)?))
    }

    /// `x² - d y²`, the product of an element with its conjugate.
    pub fn norm(&self, a: &QuadExtElem) -> Rational {
        &a.x * &a.x - &self.d * &(&a.y * &a.y)
    }

    pub fn conjugate(&self, a: &QuadExtElem) -> QuadExtElem {
        QuadExtElem::new(a.x.clone(), -&a.y)
    }

    /// The two solutions of `ξ² = d`: `(0, 1)` and `(0, -1)`.
    ///
    /// From `(x, y)² = (x² + d y², 2xy) = (d, 0)`: `x = 0` forces `y² = 1`,
    /// while `y = 0` would make `d = x²` a square.
    pub fn solve_sqrt(&self) -> (QuadExtElem, QuadExtElem) {
        (self.root(), self.neg(&self.root()))
    }

    pub fn display<'a>(&'a self, a: &'a QuadExtElem) -> impl fmt::Display + 'a {
        DisplayElem { field: self, elem: a }
    }

    /// Accepts `x,y` or `x + y*sqrt(d)` (any `d` in the text must match).
    pub fn parse(&self, s: &str) -> Result<QuadExtElem> {
        let s = s.trim();
        let bad = |why: &str| AlgebraError::Parse(format!("`{s}`: {why}"));
        let rat = |t: &str| t.trim().parse::<Rational>().map_err(|_| bad("bad rational"));
        if let Some((x, y)) = s.split_once(',') {
            return Ok(QuadExtElem::new(rat(x)?, rat(y)?));
        }
        let Some(pos) = s.find("*sqrt(") else {
            return Ok(QuadExtElem::new(rat(s)?, Rational::zero()));
        };
        let inside = s[pos + 6..].strip_suffix(')').ok_or_else(|| bad("unclosed sqrt("))?;
        if rat(inside)? != self.d {
            return Err(bad("radicand differs from the field's d"));
        }
        let head = s[..pos].trim_end();
        // the binary sign is the last `+`/`-` with a digit somewhere before it
        let split = head
            .char_indices()
            .rev()
            .find(|&(i, c)| (c == '+' || c == '-') && head[..i].chars().any(|ch| ch.is_ascii_digit()));
        match split {
            Some((i, c)) => {
                let y = rat(&head[i + 1..])?;
                let y = if c == '-' { -y } else { y };
                Ok(QuadExtElem::new(rat(&head[..i])?, y))
            }
            None => Ok(QuadExtElem::new(Rational::zero(), rat(head)?)),
        }
    }
}

struct DisplayElem<'a> {
    field: &'a ExtensionField,
    elem: &'a QuadExtElem,
}

impl fmt::Display for DisplayElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let QuadExtElem { x, y } = self.elem;
        let d = &self.field.d;
        if y.is_negative() {
            write!(f, "{x} - {}*sqrt({d})", -y)
        } else {
            write!(f, "{x} + {y}*sqrt({d})")
        }
    }
}
