//! Double-precision complex numbers with polar form and the full n-th root set.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::AlgebraError;

/// Digits after the decimal point in the text form.
pub const PRINT_DECIMALS: usize = 12;

/// A complex number `re + i·im`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexApprox {
    pub re: f64,
    pub im: f64,
}

impl ComplexApprox {
    pub const ZERO: Self = Self { re: 0.0, im: 0.0 };
    pub const ONE: Self = Self { re: 1.0, im: 0.0 };
    pub const I: Self = Self { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub const fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    /// `r·(cos θ + i sin θ)`.
    pub fn from_polar(r: f64, theta: f64) -> Self {
        Self::new(r * theta.cos(), r * theta.sin())
    }

    /// `cos θ + i sin θ`.
    pub fn cis(theta: f64) -> Self {
        Self::from_polar(1.0, theta)
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    /// Principal argument in `(-π, π]`; `arg(0) = 0`.
    pub fn arg(self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        // atan2 returns -π for (-x, -0.0); fold it onto the closed end
        let a = self.im.atan2(self.re);
        if a == -PI {
            PI
        } else {
            a
        }
    }

    /// `(|z|, arg z)`.
    pub fn polar(self) -> (f64, f64) {
        (self.abs(), self.arg())
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn is_zero(self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(self.re * k, self.im * k)
    }

    pub fn recip(self) -> Self {
        Self::ONE / self
    }

    /// Integer power by repeated squaring.
    pub fn powi(self, n: u32) -> Self {
        let mut acc = Self::ONE;
        let mut base = self;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// All `n` solutions of `w^n = self`, ordered by `k = 0..n`:
    /// `|c|^(1/n) · cis((arg c + 2πk) / n)`.
    ///
    /// For `c = 0` this is `n` zeros.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn nth_roots(self, n: u32) -> Vec<Self> {
        assert!(n >= 1, "root degree must be positive");
        if self.is_zero() {
            return vec![Self::ZERO; n as usize];
        }
        let (modulus, arg) = self.polar();
        let r = modulus.powf(1.0 / n as f64);
        (0..n)
            .map(|k| Self::from_polar(r, (arg + 2.0 * PI * k as f64) / n as f64))
            .collect()
    }

    /// The `k = 0` member of [`nth_roots`](Self::nth_roots).
    pub fn principal_root(self, n: u32) -> Self {
        assert!(n >= 1, "root degree must be positive");
        if self.is_zero() {
            return Self::ZERO;
        }
        let (modulus, arg) = self.polar();
        Self::from_polar(modulus.powf(1.0 / n as f64), arg / n as f64)
    }

    /// Principal square root, i.e. `principal_root(2)` computed without trig.
    pub fn sqrt(self) -> Self {
        if self.is_zero() {
            return Self::ZERO;
        }
        let m = self.abs();
        let re = ((m + self.re) / 2.0).sqrt();
        let im = ((m - self.re) / 2.0).sqrt();
        // arg/2 lies in (-π/2, π/2], so re >= 0 and im takes the sign of self.im
        if self.im < 0.0 {
            Self::new(re, -im)
        } else {
            Self::new(re, im)
        }
    }

    /// Deterministic total order used to sort root lists: by `re`, then `im`.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.re
            .total_cmp(&other.re)
            .then(self.im.total_cmp(&other.im))
    }
}

impl From<f64> for ComplexApprox {
    fn from(re: f64) -> Self {
        Self::real(re)
    }
}

impl Add for ComplexApprox {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ComplexApprox {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ComplexApprox {
    type Output = Self;
    // (x1, y1)(x2, y2) = (x1x2 - y1y2, x1y2 + y1x2)
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Div for ComplexApprox {
    type Output = Self;
    // Smith's algorithm, avoids overflow in |rhs|^2
    fn div(self, rhs: Self) -> Self {
        if rhs.re.abs() >= rhs.im.abs() {
            let r = rhs.im / rhs.re;
            let d = rhs.re + rhs.im * r;
            Self::new((self.re + self.im * r) / d, (self.im - self.re * r) / d)
        } else {
            let r = rhs.re / rhs.im;
            let d = rhs.re * r + rhs.im;
            Self::new((self.re * r + self.im) / d, (self.im * r - self.re) / d)
        }
    }
}

impl Neg for ComplexApprox {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Mul<f64> for ComplexApprox {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        self.scale(k)
    }
}

impl Div<f64> for ComplexApprox {
    type Output = Self;
    fn div(self, k: f64) -> Self {
        Self::new(self.re / k, self.im / k)
    }
}

/// Formats a real with [`PRINT_DECIMALS`] digits after the point, trailing
/// zeros trimmed and `-0` folded to `0`.
pub fn format_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let mut s = format!("{:.*}", PRINT_DECIMALS, x);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

impl fmt::Display for ComplexApprox {
    /// `a+bi` / `a-bi`; a zero imaginary part prints as a bare real, a zero
    /// real part as a bare imaginary.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = format_real(self.re);
        let im = format_real(self.im);
        match (re.as_str(), im.as_str()) {
            (_, "0") => write!(f, "{re}"),
            ("0", _) => write!(f, "{im}i"),
            _ if im.starts_with('-') => write!(f, "{re}{im}i"),
            _ => write!(f, "{re}+{im}i"),
        }
    }
}

impl FromStr for ComplexApprox {
    type Err = AlgebraError;

    /// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`; exponents such as
    /// `1e-3+2.5E2i` are allowed.
    fn from_str(s: &str) -> Result<Self, AlgebraError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || AlgebraError::Parse(format!("invalid complex number `{s}`"));
        if t.is_empty() {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix('i') else {
            return match t.parse::<f64>() {
                Ok(x) if x.is_finite() => Ok(Self::real(x)),
                _ => Err(bad()),
            };
        };
        // split at the last sign that is neither leading nor part of an exponent
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im = match im_part {
            "" | "+" => 1.0,
            "-" => -1.0,
            x => x.parse::<f64>().map_err(|_| bad())?,
        };
        let re = if re_part.is_empty() {
            0.0
        } else {
            re_part.parse::<f64>().map_err(|_| bad())?
        };
        let z = Self::new(re, im);
        if z.is_finite() {
            Ok(z)
        } else {
            Err(bad())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: ComplexApprox, b: ComplexApprox, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn polar_examples() {
        let (m, a) = ComplexApprox::new(0.0, 1.0).polar();
        assert!((m - 1.0).abs() < 1e-15 && (a - PI / 2.0).abs() < 1e-15);
        assert_eq!(ComplexApprox::new(-1.0, 0.0).polar(), (1.0, PI));
        assert_eq!(ComplexApprox::new(-1.0, -0.0).arg(), PI);
        let (m, a) = ComplexApprox::new(3.0, 4.0).polar();
        assert_eq!(m * m, 25.0);
        assert_eq!(a, 4f64.atan2(3.0));
        assert_eq!(ComplexApprox::ZERO.polar(), (0.0, 0.0));
    }

    #[test]
    fn cube_roots_of_eight() {
        let roots = ComplexApprox::real(8.0).nth_roots(3);
        assert_eq!(roots.len(), 3);
        assert!(close(roots[0], ComplexApprox::real(2.0), 1e-15));
        for (k, r) in roots.iter().enumerate() {
            let expected = ComplexApprox::from_polar(2.0, 2.0 * PI * k as f64 / 3.0);
            assert!(close(*r, expected, 1e-14));
            assert!(close(r.powi(3), ComplexApprox::real(8.0), 1e-9 * 9.0));
        }
    }

    #[test]
    fn small_root_cases() {
        assert_eq!(ComplexApprox::ONE.nth_roots(1), vec![ComplexApprox::ONE]);
        let roots = ComplexApprox::I.nth_roots(2);
        assert!(close(roots[0], ComplexApprox::cis(PI / 4.0), 1e-15));
        assert!(close(roots[1], ComplexApprox::cis(5.0 * PI / 4.0), 1e-15));
        for r in roots {
            assert!(close(r * r, ComplexApprox::I, 1e-15));
        }
        assert_eq!(ComplexApprox::ZERO.nth_roots(4), vec![ComplexApprox::ZERO; 4]);
    }

    #[test]
    fn sqrt_matches_principal_root() {
        for z in [
            ComplexApprox::new(-1.0, 0.0),
            ComplexApprox::new(-4.0, -0.0),
            ComplexApprox::new(3.0, -4.0),
            ComplexApprox::new(-3.0, 4.0),
            ComplexApprox::new(0.0, -2.0),
        ] {
            assert!(close(z.sqrt(), z.principal_root(2), 1e-14), "{z}");
        }
        assert_eq!(ComplexApprox::new(-1.0, 0.0).sqrt(), ComplexApprox::I);
    }

    #[test]
    fn text_form() {
        assert_eq!(
            ComplexApprox::new(5.0, 15f64.sqrt()).to_string(),
            "5+3.872983346207i"
        );
        assert_eq!(ComplexApprox::new(5.0, -15f64.sqrt()).to_string(), "5-3.872983346207i");
        assert_eq!(ComplexApprox::new(-0.0, 1e-15).to_string(), "0");
        assert_eq!(ComplexApprox::new(0.0, -1.0).to_string(), "-1i");
        assert_eq!(ComplexApprox::new(2.5, 0.0).to_string(), "2.5");
        assert_eq!(format_real(-1e-14), "0");
    }

    #[test]
    fn parse_forms() {
        let p = |s: &str| s.parse::<ComplexApprox>().unwrap();
        assert_eq!(p("3"), ComplexApprox::real(3.0));
        assert_eq!(p("-10"), ComplexApprox::real(-10.0));
        assert_eq!(p("i"), ComplexApprox::I);
        assert_eq!(p("-i"), -ComplexApprox::I);
        assert_eq!(p("2i"), ComplexApprox::new(0.0, 2.0));
        assert_eq!(p("1+2i"), ComplexApprox::new(1.0, 2.0));
        assert_eq!(p("1-i"), ComplexApprox::new(1.0, -1.0));
        assert_eq!(p("-1.5e-3+2E2i"), ComplexApprox::new(-1.5e-3, 200.0));
        assert_eq!(p("1e-2i"), ComplexApprox::new(0.0, 0.01));
        assert!("x".parse::<ComplexApprox>().is_err());
        assert!("1+2j".parse::<ComplexApprox>().is_err());
        assert!("nan".parse::<ComplexApprox>().is_err());
    }

    fn cplx() -> impl Strategy<Value = ComplexApprox> {
        (-10.0f64..10.0, -10.0f64..10.0).prop_map(|(a, b)| ComplexApprox::new(a, b))
    }

    proptest! {
        #[test]
        fn roots_reproduce_c(c in cplx(), n in 1u32..9) {
            let roots = c.nth_roots(n);
            prop_assert_eq!(roots.len(), n as usize);
            for r in &roots {
                prop_assert!((r.powi(n) - c).abs() <= 1e-9 * (1.0 + c.abs()));
            }
            if !c.is_zero() {
                for i in 0..roots.len() {
                    for j in i + 1..roots.len() {
                        prop_assert!((roots[i] - roots[j]).abs() > 1e-12);
                    }
                }
            }
        }

        #[test]
        fn de_moivre(z in cplx(), n in 1u32..9) {
            let mut direct = ComplexApprox::ONE;
            for _ in 0..n {
                direct = direct * z;
            }
            let (m, a) = z.polar();
            let polar = ComplexApprox::from_polar(m.powi(n as i32), n as f64 * a);
            prop_assert!((direct - polar).abs() <= 1e-9 * (1.0 + m.powi(n as i32)));
        }

        #[test]
        fn arg_range(z in cplx()) {
            let a = z.arg();
            prop_assert!(a > -PI && a <= PI);
        }

        #[test]
        fn display_parse_roundtrip(z in cplx()) {
            let back: ComplexApprox = z.to_string().parse().unwrap();
            prop_assert!((back - z).abs() <= 1e-11);
        }
    }
}
