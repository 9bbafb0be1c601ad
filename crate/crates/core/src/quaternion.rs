//! Quaternions `a + bi + cj + dk` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{AlgebraError, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Quaternion {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Quaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn scalar(a: Rational) -> Self {
        Self::new(a, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    /// `a² + b² + c² + d²`.
    pub fn norm(&self) -> Rational {
        &(&(&self.a * &self.a) + &(&self.b * &self.b))
            + &(&(&self.c * &self.c) + &(&self.d * &self.d))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.a * k, &self.b * k, &self.c * k, &self.d * k)
    }

    /// `q⁻¹ = conj(q) / norm(q)`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroInverse);
        }
        Ok(self.conj().scale(&self.norm().recip()?))
    }
}

impl Mul<&Quaternion> for &Quaternion {
    type Output = Quaternion;

    /// Distributive expansion over `i² = j² = k² = -1`, `ij = k`, `jk = i`,
    /// `ki = j`, `ji = -k`, `kj = -i`, `ik = -j`.
    fn mul(self, q: &Quaternion) -> Quaternion {
        let p = self;
        let a = &(&p.a * &q.a) - &(&(&p.b * &q.b) + &(&(&p.c * &q.c) + &(&p.d * &q.d)));
        let b = &(&(&p.a * &q.b) + &(&p.b * &q.a)) + &(&(&p.c * &q.d) - &(&p.d * &q.c));
        let c = &(&(&p.a * &q.c) + &(&p.c * &q.a)) + &(&(&p.d * &q.b) - &(&p.b * &q.d));
        let d = &(&(&p.a * &q.d) + &(&p.d * &q.a)) + &(&(&p.b * &q.c) - &(&p.c * &q.b));
        Quaternion::new(a, b, c, d)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        &self * &q
    }
}

impl Add<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn add(self, q: &Quaternion) -> Quaternion {
        Quaternion::new(&self.a + &q.a, &self.b + &q.b, &self.c + &q.c, &self.d + &q.d)
    }
}

impl Sub<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn sub(self, q: &Quaternion) -> Quaternion {
        Quaternion::new(&self.a - &q.a, &self.b - &q.b, &self.c - &q.c, &self.d - &q.d)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (coef, unit) in [(&self.a, ""), (&self.b, "i"), (&self.c, "j"), (&self.d, "k")] {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.is_negative();
            let mag = coef.abs();
            match (wrote, neg) {
                (false, true) => write!(f, "-")?,
                (true, true) => write!(f, " - ")?,
                (true, false) => write!(f, " + ")?,
                (false, false) => {}
            }
            if unit.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{unit}")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
