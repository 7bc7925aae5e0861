//! Central finite-difference stencils on complex-valued functions of one real
//! variable, plus Wirtinger derivatives along one complex slot.
//!
//! Step-size policy lives with the callers; helpers here only apply stencils.
//! All stencils are symmetric, so odd-derivative ones are exact on even
//! polynomials and vice versa; accuracy orders are standard for the widths
//! used (5-point: 4th order; 7-point: 6th order for p = 1, 2 and 4th order
//! for p = 3, 4).

use num_complex::Complex64;

/// Scaled step: `base * max(1, |coord|)`.
pub(crate) fn step(coord: f64, base: f64) -> f64 {
    base * coord.abs().max(1.0)
}

/// First derivative, 3-point: (f(x+h) - f(x-h)) / 2h.
pub(crate) fn d1_3<F: Fn(f64) -> Complex64>(f: F, x: f64, h: f64) -> Complex64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// First derivative, 5-point 4th order.
pub(crate) fn d1_5<F: Fn(f64) -> Complex64>(f: F, x: f64, h: f64) -> Complex64 {
    (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
}

/// First derivative, 7-point 6th order.
pub(crate) fn d1_7<F: Fn(f64) -> Complex64>(f: F, x: f64, h: f64) -> Complex64 {
    (-f(x - 3.0 * h) + 9.0 * f(x - 2.0 * h) - 45.0 * f(x - h) + 45.0 * f(x + h)
        - 9.0 * f(x + 2.0 * h)
        + f(x + 3.0 * h))
        / (60.0 * h)
}

/// Second derivative, 5-point 4th order.
pub(crate) fn d2_5<F: Fn(f64) -> Complex64>(f: F, x: f64, h: f64) -> Complex64 {
    (-f(x - 2.0 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2.0 * h))
        / (12.0 * h * h)
}

/// Second derivative, 7-point 6th order.
pub(crate) fn d2_7<F: Fn(f64) -> Complex64>(f: F, x: f64, h: f64) -> Complex64 {
    (2.0 * f(x - 3.0 * h) - 27.0 * f(x - 2.0 * h) + 270.0 * f(x - h) - 490.0 * f(x)
        + 270.0 * f(x + h)
        - 27.0 * f(x + 2.0 * h)
        + 2.0 * f(x + 3.0 * h))
        / (180.0 * h * h)
}

/// Third derivative, 7-point 4th order.
pub(crate) fn d3_7<F: Fn(f64) -> Complex64>(f: F, x: f64, h: f64) -> Complex64 {
    (f(x - 3.0 * h) - 8.0 * f(x - 2.0 * h) + 13.0 * f(x - h) - 13.0 * f(x + h)
        + 8.0 * f(x + 2.0 * h)
        - f(x + 3.0 * h))
        / (8.0 * h * h * h)
}

/// Fourth derivative, 7-point 4th order.
pub(crate) fn d4_7<F: Fn(f64) -> Complex64>(f: F, x: f64, h: f64) -> Complex64 {
    (-f(x - 3.0 * h) + 12.0 * f(x - 2.0 * h) - 39.0 * f(x - h) + 56.0 * f(x)
        - 39.0 * f(x + h)
        + 12.0 * f(x + 2.0 * h)
        - f(x + 3.0 * h))
        / (6.0 * h * h * h * h)
}

/// Derivative of order `p` (1..=4) with the stencil widths used by the
/// constrained-derivative machinery: 5-point for p = 1, 2; 7-point for 3, 4.
pub(crate) fn central<F: Fn(f64) -> Complex64>(p: u32, f: F, x: f64, h: f64) -> Complex64 {
    match p {
        1 => d1_5(f, x, h),
        2 => d2_5(f, x, h),
        3 => d3_7(f, x, h),
        4 => d4_7(f, x, h),
        _ => panic!("derivative order {p} out of supported range 1..=4"),
    }
}

fn along_re<F: Fn(Complex64) -> Complex64>(f: &F, z: Complex64) -> impl Fn(f64) -> Complex64 + '_ {
    move |x| f(Complex64::new(x, z.im))
}

fn along_im<F: Fn(Complex64) -> Complex64>(f: &F, z: Complex64) -> impl Fn(f64) -> Complex64 + '_ {
    move |y| f(Complex64::new(z.re, y))
}

/// Wirtinger derivative d/dz = (d/dx - i d/dy) / 2 of `f` at `z`.
#[cfg(test)]
pub(crate) fn wirtinger_d<F: Fn(Complex64) -> Complex64>(f: F, z: Complex64, h: f64) -> Complex64 {
    let dx = d1_3(along_re(&f, z), z.re, h);
    let dy = d1_3(along_im(&f, z), z.im, h);
    0.5 * (dx - Complex64::i() * dy)
}

/// Conjugate Wirtinger derivative d/d(conj z) = (d/dx + i d/dy) / 2.
pub(crate) fn wirtinger_dbar<F: Fn(Complex64) -> Complex64>(
    f: F,
    z: Complex64,
    h: f64,
) -> Complex64 {
    let dx = d1_3(along_re(&f, z), z.re, h);
    let dy = d1_3(along_im(&f, z), z.im, h);
    0.5 * (dx + Complex64::i() * dy)
}

/// Two-dimensional Laplacian (d^2/dx^2 + d^2/dy^2) of `f` over one complex
/// slot; vanishes where f is holomorphic in that slot.
pub(crate) fn slot_laplacian<F: Fn(Complex64) -> Complex64>(
    f: F,
    z: Complex64,
    h: f64,
) -> Complex64 {
    let dxx = d2_5(along_re(&f, z), z.re, h);
    let dyy = d2_5(along_im(&f, z), z.im, h);
    dxx + dyy
}
