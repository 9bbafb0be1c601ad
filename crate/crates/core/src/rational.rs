//! Arbitrary-precision rationals kept in lowest terms.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};

/// A reduced fraction `num/den` with `den > 0` and `gcd(|num|, den) = 1`.
///
/// Zero is always stored as `0/1`, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

/// The four field operations, for callers that pick the operation at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Rational {
    /// Builds the canonical form of `num/den`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    // den must be nonzero
    fn reduce(num: BigInt, den: BigInt) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn abs(&self) -> Self {
        Self {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    /// `(x/y)^-1 = y/x`.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroInverse);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    /// Division through the reciprocal: `a / b = a * b^-1`.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self * &rhs.recip()?)
    }

    /// Applies one of the four operations; only division can fail.
    pub fn apply(op: ArithOp, a: &Self, b: &Self) -> Result<Self> {
        Ok(match op {
            ArithOp::Add => a + b,
            ArithOp::Sub => a - b,
            ArithOp::Mul => a * b,
            ArithOp::Div => a.checked_div(b)?,
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self {
            num: num_traits::pow(self.num.clone(), exp as usize),
            den: num_traits::pow(self.den.clone(), exp as usize),
        }
    }

    /// The nonnegative rational square root, when one exists.
    ///
    /// A reduced fraction is a rational square exactly when its numerator and
    /// denominator are both perfect integer squares.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let rn = self.num.sqrt();
        let rd = self.den.sqrt();
        if &rn * &rn == self.num && &rd * &rd == self.den {
            Some(Self { num: rn, den: rd })
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        if let (Some(n), Some(d)) = (self.num.to_f64(), self.den.to_f64()) {
            if n.is_finite() && d.is_finite() {
                return n / d;
            }
        }
        // Both parts overflow f64: shift them down to the top 64 bits first.
        let shift = self.num.bits().max(self.den.bits()).saturating_sub(64);
        let n = (&self.num >> shift).to_f64().unwrap_or(0.0);
        let d = (&self.den >> shift).to_f64().unwrap_or(0.0);
        if d == 0.0 {
            if self.num.sign() == Sign::Minus {
                f64::MIN
            } else {
                f64::MAX
            }
        } else {
            n / d
        }
    }
}

/// Returns the nonnegative square root of `q` if `q` is the square of a rational.
pub fn is_square_rational(q: &Rational) -> Option<Rational> {
    q.sqrt_exact()
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive, so cross-multiplication keeps the order
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// x/y + z/t = (xt + yz)/(yt)
impl Add<&Rational> for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        if self.den == rhs.den {
            return Rational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        Rational::reduce(
            &self.num * &rhs.den + &self.den * &rhs.num,
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&Rational> for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        if self.den == rhs.den {
            return Rational::reduce(&self.num - &rhs.num, self.den.clone());
        }
        Rational::reduce(
            &self.num * &rhs.den - &self.den * &rhs.num,
            &self.den * &rhs.den,
        )
    }
}

// x/y * z/t = xz/(yt)
impl Mul<&Rational> for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                (&self).$m(rhs)
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = AlgebraError;

    /// Accepts `n`, `n/d` and plain decimals such as `-1.25`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || AlgebraError::Parse(format!("invalid rational `{s}`"));
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            return Rational::new(n, d);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int.starts_with('-');
            let int_digits = int.trim_start_matches(['-', '+']);
            let whole: BigInt = if int_digits.is_empty() {
                BigInt::zero()
            } else {
                int_digits.parse().map_err(|_| bad())?
            };
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            let frac: BigInt = frac.parse().map_err(|_| bad())?;
            let mut num = whole * &scale + frac;
            if negative {
                num = -num;
            }
            return Rational::new(num, scale);
        }
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Rational::from_integer(n))
    }
}
