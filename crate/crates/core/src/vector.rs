//! Rational 3-vectors under addition and the cross product, a Lie ring.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Vec3Q {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Vec3Q {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Self { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Self::new(x.into(), y.into(), z.into())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn cross(&self, v: &Vec3Q) -> Vec3Q {
        Vec3Q::new(
            &(&self.y * &v.z) - &(&self.z * &v.y),
            &(&self.z * &v.x) - &(&self.x * &v.z),
            &(&self.x * &v.y) - &(&self.y * &v.x),
        )
    }
}

/// `u × v`.
pub fn cross(u: &Vec3Q, v: &Vec3Q) -> Vec3Q {
    u.cross(v)
}

impl Add<&Vec3Q> for &Vec3Q {
    type Output = Vec3Q;
    fn add(self, v: &Vec3Q) -> Vec3Q {
        Vec3Q::new(&self.x + &v.x, &self.y + &v.y, &self.z + &v.z)
    }
}

impl Sub<&Vec3Q> for &Vec3Q {
    type Output = Vec3Q;
    fn sub(self, v: &Vec3Q) -> Vec3Q {
        Vec3Q::new(&self.x - &v.x, &self.y - &v.y, &self.z - &v.z)
    }
}

impl Neg for &Vec3Q {
    type Output = Vec3Q;
    fn neg(self) -> Vec3Q {
        Vec3Q::new(-&self.x, -&self.y, -&self.z)
    }
}

impl fmt::Display for Vec3Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}
