//! Closed-form roots of polynomial equations of degree 1 to 4, binomial
//! equations, root verification, and a bisection fallback for real roots.

use crate::complex::ComplexApprox as C;
use crate::error::{AlgebraError, Result};

/// Relative tolerance of the perfect-square test `β² = 4αγ`.
pub const PERFECT_SQUARE_TOL: f64 = 1e-9;
/// Below `BIQUADRATIC_TOL · scale`, the quartic's linear term counts as zero.
pub const BIQUADRATIC_TOL: f64 = 1e-12;
/// Relative tolerance for comparing symmetric functions with coefficients.
pub const VIETE_TOL: f64 = 1e-7;

/// A polynomial with complex coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<C>,
}

impl Poly {
    /// Trailing zero coefficients are dropped; the zero polynomial keeps a
    /// single zero coefficient.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(C::ZERO);
        }
        Self { coeffs }
    }

    /// From coefficients written highest degree first.
    pub fn from_highest(coeffs: &[C]) -> Self {
        Self::new(coeffs.iter().rev().copied().collect())
    }

    pub fn from_real_highest(coeffs: &[f64]) -> Self {
        Self::from_highest(&coeffs.iter().map(|&x| C::real(x)).collect::<Vec<_>>())
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[C]) -> Self {
        let mut coeffs = vec![C::ONE];
        for &r in roots {
            let mut next = vec![C::ZERO; coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] = next[k + 1] + c;
                next[k] = next[k] - c * r;
            }
            coeffs = next;
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> C {
        self.coeffs[self.degree()]
    }

    pub fn eval(&self, z: C) -> C {
        self.coeffs.iter().rev().fold(C::ZERO, |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.im == 0.0)
    }

    /// Largest coefficient modulus.
    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }

    /// Quotient and remainder of division by `z - r`.
    pub fn deflate(&self, r: C) -> (Poly, C) {
        let mut quotient = vec![C::ZERO; self.degree()];
        let mut carry = C::ZERO;
        for k in (0..self.coeffs.len()).rev() {
            carry = carry * r + self.coeffs[k];
            if k > 0 {
                quotient[k - 1] = carry;
            }
        }
        (Poly::new(quotient), carry)
    }
}

/// Sorts by real part, then imaginary part. Real parts closer than `1e-9`
/// relative count as equal so conjugate pairs list the negative imaginary
/// part first regardless of rounding noise.
pub fn sort_roots(roots: &mut [C]) {
    roots.sort_by(|a, b| {
        let scale = 1.0 + a.re.abs().max(b.re.abs());
        if (a.re - b.re).abs() <= 1e-9 * scale {
            a.im.total_cmp(&b.im)
        } else {
            a.lex_cmp(b)
        }
    });
}

/// A few guarded Newton steps on `p`; a step is kept only if it shrinks the
/// residual.
fn polish(p: &Poly, z: C) -> C {
    let dp = p.derivative();
    let mut z = z;
    let mut res = p.eval(z).abs();
    for _ in 0..4 {
        let d = dp.eval(z);
        if res == 0.0 || d.is_zero() {
            break;
        }
        let next = z - p.eval(z) / d;
        let next_res = p.eval(next).abs();
        if next_res.is_nan() || next_res >= res {
            break;
        }
        z = next;
        res = next_res;
    }
    z
}

fn polished(p: &Poly, roots: impl IntoIterator<Item = C>) -> Vec<C> {
    let mut out: Vec<C> = roots.into_iter().map(|z| polish(p, z)).collect();
    sort_roots(&mut out);
    out
}

/// The root of `αz + β = 0`.
pub fn solve_linear(alpha: C, beta: C) -> Result<C> {
    if alpha.is_zero() {
        return Err(AlgebraError::NotLinear);
    }
    Ok(-beta / alpha)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticRoots {
    /// Sorted; equal when `perfect_square` is set.
    pub roots: [C; 2],
    pub perfect_square: bool,
}

/// Roots of `αz² + βz + γ = 0` as `-p/2 ± √(p²/4 - q)` with `p = β/α`,
/// `q = γ/α` and the principal square root.
pub fn solve_quadratic(alpha: C, beta: C, gamma: C) -> Result<QuadraticRoots> {
    if alpha.is_zero() {
        return Err(AlgebraError::NotQuadratic);
    }
    let disc = beta * beta - alpha * gamma * 4.0;
    let scale = (beta * beta).abs().max((alpha * gamma * 4.0).abs());
    if disc.abs() <= PERFECT_SQUARE_TOL * scale {
        let r = -beta / (alpha * 2.0);
        return Ok(QuadraticRoots {
            roots: [r, r],
            perfect_square: true,
        });
    }
    let p = beta / alpha;
    let q = gamma / alpha;
    let half = -p / 2.0;
    let s = (p * p / 4.0 - q).sqrt();
    // the sum with the larger modulus avoids cancellation; Viète gives the other
    let (plus, minus) = (half + s, half - s);
    let big = if plus.abs() >= minus.abs() { plus } else { minus };
    let small = if big.is_zero() { C::ZERO } else { q / big };
    let mut roots = [big, small];
    sort_roots(&mut roots);
    Ok(QuadraticRoots {
        roots,
        perfect_square: false,
    })
}

/// `z³ + pz + q = 0`, reached from the original unknown `x` by
/// `z = x + shift`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedCubic {
    pub p: C,
    pub q: C,
    /// `β / 3α`.
    pub shift: C,
}

pub fn depress_cubic(alpha: C, beta: C, gamma: C, delta: C) -> Result<DepressedCubic> {
    if alpha.is_zero() {
        return Err(AlgebraError::ZeroLeading(3));
    }
    let (b, c, d) = (beta / alpha, gamma / alpha, delta / alpha);
    Ok(DepressedCubic {
        p: c - b * b / 3.0,
        q: b * b * b * (2.0 / 27.0) - b * c / 3.0 + d,
        shift: b / 3.0,
    })
}

/// Cardano's construction: the roots and the `(u, v)` summand pairs behind
/// them, with `u v = -p/3` for each pair.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicSolution {
    pub depressed: DepressedCubic,
    /// `pairs[k]` gives the depressed root `u + v`.
    pub pairs: [(C, C); 3],
    /// Roots of the original equation, polished and sorted.
    pub roots: Vec<C>,
}

/// Unit cube roots `1, ω, ω²`.
fn omegas() -> [C; 3] {
    let h = 3f64.sqrt() / 2.0;
    [C::ONE, C::new(-0.5, h), C::new(-0.5, -h)]
}

pub fn cardano(alpha: C, beta: C, gamma: C, delta: C) -> Result<CubicSolution> {
    let dc = depress_cubic(alpha, beta, gamma, delta)?;
    let DepressedCubic { p, q, .. } = dc;
    // u³ and v³ solve w² + qw - p³/27 = 0
    let s = (q * q / 4.0 + p * p * p / 27.0).sqrt();
    let (w1, w2) = (-q / 2.0 + s, -q / 2.0 - s);
    let u_cubed = if w1.abs() >= w2.abs() { w1 } else { w2 };
    let pairs = if u_cubed.is_zero() {
        // both cubes vanish: p = q = 0 and zero is a triple root
        [(C::ZERO, C::ZERO); 3]
    } else {
        let u0 = u_cubed.principal_root(3);
        omegas().map(|w| {
            let u = u0 * w;
            (u, -p / (u * 3.0))
        })
    };
    let poly = Poly::from_highest(&[alpha, beta, gamma, delta]);
    let roots = polished(&poly, pairs.iter().map(|&(u, v)| u + v - dc.shift));
    Ok(CubicSolution {
        depressed: dc,
        pairs,
        roots,
    })
}

/// The three roots (with multiplicity) of `αz³ + βz² + γz + δ = 0`.
pub fn solve_cubic(alpha: C, beta: C, gamma: C, delta: C) -> Result<Vec<C>> {
    Ok(cardano(alpha, beta, gamma, delta)?.roots)
}

/// Intermediate quantities of Ferrari's method for `z⁴ + pz² + qz + r = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticWork {
    pub p: C,
    pub q: C,
    pub r: C,
    /// `β / 4α`; the original unknown is `z - shift`.
    pub shift: C,
    /// Root of `8w³ + 8pw² + (2p² - 8r)w - q² = 0`; zero on the biquadratic path.
    pub w0: C,
    /// `√(2 w0)`.
    pub zeta: C,
    /// `-q / 2ζ`.
    pub eta: C,
    pub biquadratic: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuarticSolution {
    pub work: QuarticWork,
    pub roots: Vec<C>,
}

pub fn ferrari(alpha: C, beta: C, gamma: C, delta: C, epsilon: C) -> Result<QuarticSolution> {
    if alpha.is_zero() {
        return Err(AlgebraError::ZeroLeading(4));
    }
    let (b, c, d, e) = (beta / alpha, gamma / alpha, delta / alpha, epsilon / alpha);
    let b2 = b * b;
    let p = c - b2 * (3.0 / 8.0);
    let q = b2 * b / 8.0 - b * c / 2.0 + d;
    let r = b2 * b2 * (-3.0 / 256.0) + b2 * c / 16.0 - b * d / 4.0 + e;
    let shift = b / 4.0;
    let scale = 1f64.max(p.abs()).max(r.abs());
    let mut work = QuarticWork {
        p,
        q,
        r,
        shift,
        w0: C::ZERO,
        zeta: C::ZERO,
        eta: C::ZERO,
        biquadratic: q.abs() <= BIQUADRATIC_TOL * scale,
    };
    let depressed_roots: Vec<C> = if work.biquadratic {
        let ys = solve_quadratic(C::ONE, p, r)?.roots;
        ys.iter().flat_map(|&y| [y.sqrt(), -y.sqrt()]).collect()
    } else {
        let resolvent = solve_cubic(
            C::real(8.0),
            p * 8.0,
            p * p * 2.0 - r * 8.0,
            -(q * q),
        )?;
        let w0 = resolvent
            .into_iter()
            .max_by(|x, y| x.abs().total_cmp(&y.abs()))
            .expect("three resolvent roots");
        let zeta = (w0 * 2.0).sqrt();
        let eta = -q / (zeta * 2.0);
        work.w0 = w0;
        work.zeta = zeta;
        work.eta = eta;
        let half = p / 2.0 + w0;
        let first = solve_quadratic(C::ONE, -zeta, half - eta)?.roots;
        let second = solve_quadratic(C::ONE, zeta, half + eta)?.roots;
        first.into_iter().chain(second).collect()
    };
    let poly = Poly::from_highest(&[alpha, beta, gamma, delta, epsilon]);
    let roots = polished(&poly, depressed_roots.into_iter().map(|z| z - shift));
    Ok(QuarticSolution { work, roots })
}

/// The four roots (with multiplicity) of `αz⁴ + βz³ + γz² + δz + ε = 0`.
pub fn solve_quartic(alpha: C, beta: C, gamma: C, delta: C, epsilon: C) -> Result<Vec<C>> {
    Ok(ferrari(alpha, beta, gamma, delta, epsilon)?.roots)
}

/// Roots of a polynomial of degree 1 to 4.
pub fn solve_poly(poly: &Poly) -> Result<Vec<C>> {
    let c = |k: usize| poly.coeffs()[k];
    match poly.degree() {
        1 => Ok(vec![solve_linear(c(1), c(0))?]),
        2 => Ok(solve_quadratic(c(2), c(1), c(0))?.roots.to_vec()),
        3 => solve_cubic(c(3), c(2), c(1), c(0)),
        4 => solve_quartic(c(4), c(3), c(2), c(1), c(0)),
        0 => Err(AlgebraError::NotLinear),
        n => Err(AlgebraError::TooLarge {
            what: "degree",
            size: n,
            bound: 4,
        }),
    }
}

/// All `n` solutions of `z^n = c`, sorted.
pub fn solve_binomial(c: C, n: u32) -> Vec<C> {
    let mut roots = c.nth_roots(n);
    sort_roots(&mut roots);
    roots
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootCheck {
    /// `max |poly(r)|` over the candidate roots.
    pub max_residual: f64,
    /// `∏(z - r)` reproduces the monic coefficients within [`VIETE_TOL`].
    pub viete_ok: bool,
}

pub fn verify_roots(poly: &Poly, roots: &[C]) -> Result<RootCheck> {
    if roots.len() != poly.degree() {
        return Err(AlgebraError::RootCount {
            expected: poly.degree(),
            got: roots.len(),
        });
    }
    let max_residual = roots
        .iter()
        .map(|&r| poly.eval(r).abs())
        .fold(0.0, f64::max);
    let lead = poly.leading();
    let expanded = Poly::from_roots(roots);
    let viete_ok = poly
        .coeffs()
        .iter()
        .zip(expanded.coeffs())
        .all(|(&c, &e)| {
            let target = c / lead;
            (target - e).abs() <= VIETE_TOL * target.abs().max(1.0)
        });
    Ok(RootCheck {
        max_residual,
        viete_ok,
    })
}

/// A real root in `[lo, hi]` by bisection, to about `1e-12` relative width.
pub fn bisect_real_root(poly: &Poly, lo: f64, hi: f64) -> Result<f64> {
    if !poly.is_real() {
        return Err(AlgebraError::ComplexCoefficients);
    }
    let f = |x: f64| poly.eval(C::real(x)).re;
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let (mut fa, fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(AlgebraError::NoSignChange { lo, hi });
    }
    for _ in 0..200 {
        let mid = a + (b - a) / 2.0;
        if b - a <= 1e-12 * mid.abs().max(1.0) {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok(a + (b - a) / 2.0)
}

/// Pairs each expected root with a distinct found root and returns the
/// largest distance, or infinity when the counts differ.
pub fn multiset_distance(found: &[C], expected: &[C]) -> f64 {
    if found.len() != expected.len() {
        return f64::INFINITY;
    }
    // exhaustive over assignments; degree is at most 4
    fn best(found: &[C], expected: &[C], used: &mut Vec<bool>, k: usize) -> f64 {
        if k == expected.len() {
            return 0.0;
        }
        let mut out = f64::INFINITY;
        for j in 0..found.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            let d = (found[j] - expected[k]).abs();
            if d < out {
                out = out.min(d.max(best(found, expected, used, k + 1)));
            }
            used[j] = false;
        }
        out
    }
    best(found, expected, &mut vec![false; found.len()], 0)
}
