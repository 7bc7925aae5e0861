//! Special functions for the hydrogenic eigensolutions: associated Legendre
//! functions with Condon-Shortley phase, generalized Laguerre polynomials,
//! factorial helpers, normalization constants, and the quantum number triple.
//!
//! The public real-argument evaluators validate their domains and reject
//! out-of-range orders or arguments. Each also has an unvalidated
//! complex-argument twin (`*_c`) sharing the same recurrence, used when
//! coordinates are continued off the real slice during holomorphy checks.
//! Negative azimuthal index is handled by the reflection
//! P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::coords::PhysicalParams;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecFunError {
    #[error("invalid quantum numbers (n, l, k) = ({n}, {l}, {k}): {reason}")]
    InvalidQuantumNumbers { n: u32, l: u32, k: i32, reason: &'static str },
    #[error("argument out of domain: {what} = {value}")]
    DomainError { what: &'static str, value: f64 },
}

/// Hydrogenic quantum number triple (n, l, k): n >= 1, 0 <= l < n, |k| <= l.
/// k is the azimuthal index (eigenvalue of the axial angular momentum over
/// hbar) and may be negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuantumNumbers {
    pub n: u32,
    pub l: u32,
    pub k: i32,
}

impl QuantumNumbers {
    pub fn new(n: u32, l: u32, k: i32) -> Result<Self, SpecFunError> {
        if n == 0 {
            return Err(SpecFunError::InvalidQuantumNumbers { n, l, k, reason: "n must be >= 1" });
        }
        if l >= n {
            return Err(SpecFunError::InvalidQuantumNumbers { n, l, k, reason: "l must satisfy l < n" });
        }
        if k.unsigned_abs() > l {
            return Err(SpecFunError::InvalidQuantumNumbers { n, l, k, reason: "|k| must satisfy |k| <= l" });
        }
        Ok(QuantumNumbers { n, l, k })
    }

    /// Every valid (n, l, k) with n <= n_max, ordered by (n, l, k).
    pub fn states_through(n_max: u32) -> Vec<QuantumNumbers> {
        let mut out = Vec::new();
        for n in 1..=n_max {
            for l in 0..n {
                for k in -(l as i32)..=(l as i32) {
                    out.push(QuantumNumbers { n, l, k });
                }
            }
        }
        out
    }
}

impl std::fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.l, self.k)
    }
}

const FACT_TABLE_LEN: usize = 171;

fn factorial_table() -> &'static [f64; FACT_TABLE_LEN] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<[f64; FACT_TABLE_LEN]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [1.0f64; FACT_TABLE_LEN];
        for i in 1..FACT_TABLE_LEN {
            t[i] = t[i - 1] * i as f64;
        }
        t
    })
}

/// n! as f64; exact for n <= 22, finite through n = 170.
pub fn factorial(n: u32) -> f64 {
    let n = n as usize;
    assert!(n < FACT_TABLE_LEN, "factorial({n}) overflows f64; use ln_factorial");
    factorial_table()[n]
}

/// ln(n!), valid for all n.
pub fn ln_factorial(n: u32) -> f64 {
    if (n as usize) < FACT_TABLE_LEN {
        return factorial(n).ln();
    }
    let mut acc = factorial(170).ln();
    for k in 171..=n {
        acc += (k as f64).ln();
    }
    acc
}

/// (2m - 1)!! with the empty product (m = 0) equal to 1.
fn odd_double_factorial(m: u32) -> f64 {
    (1..=m).map(|j| (2 * j - 1) as f64).product()
}

/// Associated Legendre P_l^k at complex argument, Condon-Shortley phase,
/// principal branch of (1 - z^2)^{1/2}. Returns 0 when |k| > l. Unvalidated;
/// the continuation off the real interval is what the holomorphy checks
/// difference through.
pub fn assoc_legendre_c(l: u32, k: i32, z: Complex64) -> Complex64 {
    let m = k.unsigned_abs();
    if m > l {
        return Complex64::new(0.0, 0.0);
    }
    let scale = if k < 0 {
        // reflection to nonnegative order
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        sign * factorial(l - m) / factorial(l + m)
    } else {
        1.0
    };

    let one = Complex64::new(1.0, 0.0);
    // P_m^m = (-1)^m (2m-1)!! (1 - z^2)^{m/2}
    let cs = if m % 2 == 0 { 1.0 } else { -1.0 };
    let mut p_mm = one * cs * odd_double_factorial(m);
    if m > 0 {
        p_mm *= ((one - z * z).sqrt()).powi(m as i32);
    }
    if l == m {
        return scale * p_mm;
    }
    // P_{m+1}^m = z (2m + 1) P_m^m
    let mut p_prev = p_mm;
    let mut p_curr = z * (2 * m + 1) as f64 * p_mm;
    for ll in (m + 2)..=l {
        let llf = ll as f64;
        let mf = m as f64;
        let next = (z * (2.0 * llf - 1.0) * p_curr - (llf + mf - 1.0) * p_prev) / (llf - mf);
        p_prev = p_curr;
        p_curr = next;
    }
    scale * p_curr
}

pub(crate) fn legendre_raw(l: u32, k: i32, x: f64) -> f64 {
    assoc_legendre_c(l, k, Complex64::new(x, 0.0)).re
}

/// Associated Legendre P_l^k at real x in [-1, 1]. Rejects |k| > l and
/// arguments outside the interval.
pub fn assoc_legendre(l: u32, k: i32, x: f64) -> Result<f64, SpecFunError> {
    if k.unsigned_abs() > l {
        return Err(SpecFunError::InvalidQuantumNumbers {
            n: l + 1,
            l,
            k,
            reason: "|k| must satisfy |k| <= l",
        });
    }
    if !x.is_finite() || x.abs() > 1.0 {
        return Err(SpecFunError::DomainError { what: "legendre argument", value: x });
    }
    Ok(legendre_raw(l, k, x))
}

/// dP_l^k/dx from (1 - x^2) P' = (l + k) P_{l-1}^k - l x P_l^k.
/// Rejects the endpoints, where the quotient form is indeterminate.
pub fn assoc_legendre_deriv(l: u32, k: i32, x: f64) -> Result<f64, SpecFunError> {
    let denom = 1.0 - x * x;
    if denom.abs() < 1e-12 {
        return Err(SpecFunError::DomainError { what: "legendre derivative at |x| = 1", value: x });
    }
    let p = assoc_legendre(l, k, x)?;
    let p_lower = if l == 0 { 0.0 } else { legendre_raw(l - 1, k, x) };
    Ok(((l as f64 + k as f64) * p_lower - l as f64 * x * p) / denom)
}

/// Generalized Laguerre L_m^a at complex argument via the three-term
/// recurrence (m+1) L_{m+1} = (2m + a + 1 - z) L_m - (m + a) L_{m-1}.
/// Unvalidated; `a` may be any real.
pub fn gen_laguerre_c(m: u32, a: f64, z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if m == 0 {
        return one;
    }
    let mut prev = one;
    let mut curr = one * (1.0 + a) - z;
    for j in 1..m {
        let jf = j as f64;
        let next =
            ((Complex64::new(2.0 * jf + a + 1.0, 0.0) - z) * curr - (jf + a) * prev) / (jf + 1.0);
        prev = curr;
        curr = next;
    }
    curr
}

pub(crate) fn laguerre_raw(m: u32, a: f64, x: f64) -> f64 {
    gen_laguerre_c(m, a, Complex64::new(x, 0.0)).re
}

/// Generalized Laguerre L_m^a at real x >= 0, integer order and parameter,
/// normalized so that L_m^a(0) = C(m + a, m).
pub fn gen_laguerre(m: u32, a: u32, x: f64) -> Result<f64, SpecFunError> {
    if !x.is_finite() || x < 0.0 {
        return Err(SpecFunError::DomainError { what: "laguerre argument", value: x });
    }
    Ok(laguerre_raw(m, a as f64, x))
}

/// dL_m^a/dx = -L_{m-1}^{a+1} (zero for m = 0).
pub fn gen_laguerre_deriv(m: u32, a: u32, x: f64) -> Result<f64, SpecFunError> {
    if !x.is_finite() || x < 0.0 {
        return Err(SpecFunError::DomainError { what: "laguerre argument", value: x });
    }
    Ok(laguerre_deriv_raw(m, a as f64, x))
}

/// d^2 L_m^a/dx^2 = L_{m-2}^{a+2} (zero for m < 2).
pub fn gen_laguerre_deriv2(m: u32, a: u32, x: f64) -> Result<f64, SpecFunError> {
    if !x.is_finite() || x < 0.0 {
        return Err(SpecFunError::DomainError { what: "laguerre argument", value: x });
    }
    Ok(laguerre_deriv2_raw(m, a as f64, x))
}

pub(crate) fn laguerre_deriv_raw(m: u32, a: f64, x: f64) -> f64 {
    if m == 0 {
        0.0
    } else {
        -laguerre_raw(m - 1, a + 1.0, x)
    }
}

pub(crate) fn laguerre_deriv2_raw(m: u32, a: f64, x: f64) -> f64 {
    if m < 2 {
        0.0
    } else {
        laguerre_raw(m - 2, a + 2.0, x)
    }
}

/// Hydrogenic radial normalization in atomic units:
/// sqrt((2/(n a0))^3 (n-l-1)! / (2n (n+l)!)), making the radial factor
/// square-normalized against r^2 dr.
pub fn norm_const(qn: &QuantumNumbers, p: &PhysicalParams) -> f64 {
    let nf = qn.n as f64;
    let a0 = p.bohr_radius();
    ((2.0 / (nf * a0)).powi(3) * factorial(qn.n - qn.l - 1)
        / (2.0 * nf * factorial(qn.n + qn.l)))
    .sqrt()
}

/// Angular normalization sqrt((2l+1)/(4 pi) * (l-k)!/(l+k)!) for signed k.
pub fn angular_norm(l: u32, k: i32) -> f64 {
    let lk_minus = (l as i64 - k as i64) as u32;
    let lk_plus = (l as i64 + k as i64) as u32;
    ((2 * l + 1) as f64 / (4.0 * std::f64::consts::PI) * factorial(lk_minus)
        / factorial(lk_plus))
    .sqrt()
}

/// Surface spherical harmonic Y_l^k(theta, phi) with e^{+ik phi} convention.
pub fn sph_harm(l: u32, k: i32, theta: f64, phi: f64) -> Result<Complex64, SpecFunError> {
    let p = assoc_legendre(l, k, theta.cos())?;
    Ok(angular_norm(l, k) * p * Complex64::from_polar(1.0, k as f64 * phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), 1.0);
        assert_eq!(factorial(1), 1.0);
        assert_eq!(factorial(5), 120.0);
        assert_eq!(factorial(12), 479_001_600.0);
        assert!(factorial(170).is_finite());
    }

    #[test]
    fn ln_factorial_continues_table() {
        assert_relative_eq!(ln_factorial(170), factorial(170).ln(), max_relative = 1e-15);
        // ln(171!) = ln(170!) + ln 171
        assert_relative_eq!(
            ln_factorial(171),
            factorial(170).ln() + 171f64.ln(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn quantum_number_validation() {
        assert!(QuantumNumbers::new(1, 0, 0).is_ok());
        assert!(QuantumNumbers::new(3, 2, -2).is_ok());
        assert!(QuantumNumbers::new(0, 0, 0).is_err());
        assert!(QuantumNumbers::new(2, 2, 0).is_err());
        assert!(QuantumNumbers::new(2, 1, 2).is_err());
        assert!(QuantumNumbers::new(2, 1, -2).is_err());
    }

    #[test]
    fn states_through_counts_n_squared_per_shell() {
        // shell n contributes n^2 states
        let states = QuantumNumbers::states_through(4);
        assert_eq!(states.len(), 1 + 4 + 9 + 16);
        assert!(states.contains(&QuantumNumbers { n: 4, l: 3, k: -3 }));
    }

    #[test]
    fn legendre_low_orders() {
        assert_eq!(assoc_legendre(0, 0, 0.3).unwrap(), 1.0);
        assert_relative_eq!(assoc_legendre(1, 0, 0.5).unwrap(), 0.5, max_relative = 1e-15);
        // P_1^1 = -sqrt(1 - x^2)
        assert_relative_eq!(
            assoc_legendre(1, 1, 0.3).unwrap(),
            -(1.0f64 - 0.09).sqrt(),
            max_relative = 1e-14
        );
        // P_2^1 = -3 x sqrt(1 - x^2)
        assert_relative_eq!(
            assoc_legendre(2, 1, 0.3).unwrap(),
            -3.0 * 0.3 * (1.0f64 - 0.09).sqrt(),
            max_relative = 1e-14
        );
        // P_3^2 = 15 x (1 - x^2)
        assert_relative_eq!(
            assoc_legendre(3, 2, -0.3).unwrap(),
            15.0 * -0.3 * 0.91,
            max_relative = 1e-13
        );
        // P_2^2 = 3 (1 - x^2)
        assert_relative_eq!(assoc_legendre(2, 2, 0.6).unwrap(), 3.0 * 0.64, max_relative = 1e-14);
        // P_4^0 = (35 x^4 - 30 x^2 + 3)/8
        let x = -0.7f64;
        assert_relative_eq!(
            assoc_legendre(4, 0, x).unwrap(),
            (35.0 * x.powi(4) - 30.0 * x * x + 3.0) / 8.0,
            max_relative = 1e-13
        );
        // P_3^1 = -(3/2)(5x^2 - 1) sqrt(1 - x^2)
        let x = 0.4f64;
        assert_relative_eq!(
            assoc_legendre(3, 1, x).unwrap(),
            -1.5 * (5.0 * x * x - 1.0) * (1.0 - x * x).sqrt(),
            max_relative = 1e-13
        );
    }

    #[test]
    fn legendre_negative_order_reflection() {
        // P_2^{-1} = -(1!/3!) P_2^1
        let x = 0.5;
        assert_relative_eq!(
            assoc_legendre(2, -1, x).unwrap(),
            -assoc_legendre(2, 1, x).unwrap() / 6.0,
            max_relative = 1e-14
        );
        // P_3^{-3} = -(0!/6!) P_3^3
        assert_relative_eq!(
            assoc_legendre(3, -3, 0.2).unwrap(),
            -assoc_legendre(3, 3, 0.2).unwrap() / 720.0,
            max_relative = 1e-13
        );
    }

    #[test]
    fn legendre_domain_rejections() {
        assert!(assoc_legendre(2, 3, 0.4).is_err());
        assert!(assoc_legendre(2, -3, 0.4).is_err());
        assert!(assoc_legendre(2, 1, 1.5).is_err());
        assert!(assoc_legendre(2, 1, f64::NAN).is_err());
        // the unvalidated complex evaluator treats |k| > l as the zero function
        assert_eq!(assoc_legendre_c(2, 3, Complex64::new(0.4, 0.0)), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn legendre_satisfies_its_differential_equation() {
        // d/dx[(1-x^2) P'] + [l(l+1) - k^2/(1-x^2)] P = 0, with both
        // derivative factors from the analytic recurrence relations.
        for &(l, k) in &[(2u32, 1i32), (3, 2), (4, 3), (4, 0), (3, -2), (4, -4)] {
            for i in 0..50 {
                let x = -0.95 + 1.9 * (i as f64 + 0.5) / 50.0;
                let p = assoc_legendre(l, k, x).unwrap();
                let dp = assoc_legendre_deriv(l, k, x).unwrap();
                // P_{l-1}^k vanishes identically when |k| > l-1 (its (l+k)
                // coefficient is zero there as well)
                let dp_lower = if l == 0 || k.unsigned_abs() > l - 1 {
                    0.0
                } else {
                    assoc_legendre_deriv(l - 1, k, x).unwrap()
                };
                let lf = l as f64;
                let kf = k as f64;
                // g = (1-x^2) P', g' = (l+k) P'_{l-1} - l P - l x P'
                let gp = (lf + kf) * dp_lower - lf * p - lf * x * dp;
                let res = gp + (lf * (lf + 1.0) - kf * kf / (1.0 - x * x)) * p;
                assert!(res.abs() < 1e-8, "(l,k,x)=({l},{k},{x}): residual {res}");
            }
        }
    }

    #[test]
    fn legendre_complex_matches_real_on_axis() {
        for &(l, k) in &[(3u32, 1i32), (4, -2), (2, 2)] {
            for &x in &[-0.6, 0.0, 0.3, 0.9] {
                let zc = assoc_legendre_c(l, k, Complex64::new(x, 0.0));
                assert_relative_eq!(zc.re, assoc_legendre(l, k, x).unwrap(), max_relative = 1e-14);
                assert!(zc.im.abs() < 1e-14);
            }
        }
    }

    #[test]
    fn laguerre_reference_values() {
        // L_2^3(1) = (1 - 10 + 20)/2 = 11/2
        assert_relative_eq!(gen_laguerre(2, 3, 1.0).unwrap(), 5.5, max_relative = 1e-15);
        // L_3^2(2) = -4/3
        assert_relative_eq!(gen_laguerre(3, 2, 2.0).unwrap(), -4.0 / 3.0, max_relative = 1e-14);
        // L_1^1(2) = 2 - 2 = 0
        assert_eq!(gen_laguerre(1, 1, 2.0).unwrap(), 0.0);
        assert_eq!(gen_laguerre(0, 7, 3.3).unwrap(), 1.0);
    }

    #[test]
    fn laguerre_explicit_quadratic() {
        // L_2^a(x) = x^2/2 - (a+2) x + (a+1)(a+2)/2
        for &a in &[0u32, 1, 3] {
            for &x in &[0.0, 0.5, 2.0, 7.5] {
                let af = a as f64;
                let want = x * x / 2.0 - (af + 2.0) * x + (af + 1.0) * (af + 2.0) / 2.0;
                assert_relative_eq!(gen_laguerre(2, a, x).unwrap(), want, max_relative = 1e-13);
            }
        }
    }

    #[test]
    fn laguerre_value_at_zero_is_binomial() {
        // L_m^a(0) = C(m + a, m)
        for &(m, a) in &[(3u32, 2u32), (5, 1), (4, 4)] {
            let want = factorial(m + a) / (factorial(m) * factorial(a));
            assert_relative_eq!(gen_laguerre(m, a, 0.0).unwrap(), want, max_relative = 1e-13);
        }
    }

    #[test]
    fn laguerre_satisfies_its_differential_equation() {
        // x y'' + (a + 1 - x) y' + m y = 0 with analytic derivatives
        for &(m, a) in &[(1u32, 1u32), (2, 3), (3, 2), (5, 1), (4, 0)] {
            for i in 0..50 {
                let x = 0.1 + 12.0 * (i as f64 + 0.5) / 50.0;
                let y = gen_laguerre(m, a, x).unwrap();
                let dy = gen_laguerre_deriv(m, a, x).unwrap();
                let ddy = gen_laguerre_deriv2(m, a, x).unwrap();
                let res = x * ddy + (a as f64 + 1.0 - x) * dy + m as f64 * y;
                assert!(res.abs() < 1e-8, "(m,a,x)=({m},{a},{x}): residual {res}");
            }
        }
    }

    #[test]
    fn laguerre_domain_rejections() {
        assert!(gen_laguerre(2, 1, -0.5).is_err());
        assert!(gen_laguerre(2, 1, f64::INFINITY).is_err());
    }

    #[test]
    fn laguerre_complex_matches_real_on_axis() {
        let z = gen_laguerre_c(4, 3.0, Complex64::new(2.2, 0.0));
        assert_relative_eq!(z.re, gen_laguerre(4, 3, 2.2).unwrap(), max_relative = 1e-14);
        assert!(z.im.abs() < 1e-14);
    }

    #[test]
    fn normalization_constants() {
        let p = PhysicalParams::bound(-0.5).unwrap();
        // n=1, l=0: sqrt(8 / 2) = 2 in Bohr units
        let qn = QuantumNumbers::new(1, 0, 0).unwrap();
        assert_relative_eq!(norm_const(&qn, &p), 2.0, max_relative = 1e-15);
        // n=2, l=1: sqrt(1 * 0!/(4 * 3!)) = 1/(2 sqrt 6)
        let qn = QuantumNumbers::new(2, 1, 0).unwrap();
        assert_relative_eq!(
            norm_const(&qn, &p),
            1.0 / (2.0 * 6.0f64.sqrt()),
            max_relative = 1e-14
        );
        // angular_norm(0, 0) = 1/sqrt(4 pi)
        assert_relative_eq!(
            angular_norm(0, 0),
            1.0 / (4.0 * std::f64::consts::PI).sqrt(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn spherical_harmonic_reference_values() {
        let pi = std::f64::consts::PI;
        let y00 = sph_harm(0, 0, 1.0, 2.0).unwrap();
        assert_relative_eq!(y00.re, 0.5 / pi.sqrt(), max_relative = 1e-14);
        assert_eq!(y00.im, 0.0);
        // Y_1^1(pi/2, 0) = -sqrt(3/(8 pi))
        let y11 = sph_harm(1, 1, pi / 2.0, 0.0).unwrap();
        assert_relative_eq!(y11.re, -(3.0 / (8.0 * pi)).sqrt(), max_relative = 1e-12);
        // Y_1^{-1}(pi/2, 0) = +sqrt(3/(8 pi))
        let y1m1 = sph_harm(1, -1, pi / 2.0, 0.0).unwrap();
        assert_relative_eq!(y1m1.re, (3.0 / (8.0 * pi)).sqrt(), max_relative = 1e-12);
        // e^{+ik phi} convention: at phi = pi/2 the l=k=1 harmonic picks up
        // the factor i, rotating its value onto the negative imaginary axis
        let y = sph_harm(1, 1, pi / 2.0, pi / 2.0).unwrap();
        assert!(y.re.abs() < 1e-12);
        assert_relative_eq!(y.im, -(3.0 / (8.0 * pi)).sqrt(), max_relative = 1e-12);
    }
}
