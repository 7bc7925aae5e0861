//! The hydrogen atom on the complex coordinate planes: energy spectrum,
//! eigensolutions Psi_nlk, angular-momentum operators, and residuals for the
//! governing wave equation and its separated one-dimensional factors.
//!
//! Everything internal is in atomic units (hbar = m_e = e = 4 pi eps0 = 1,
//! lengths in Bohr radii, energies in Hartree). The eigensolution of quantum
//! numbers (n, l, k) reads
//!
//! ```text
//!   Psi_nlk = N_nl rho^l L_{n-l-1}^{2l+1}(rho) A_lk P_l^k(z_theta) z_phi^k
//!             * exp(-i E_n tau / hbar),      rho = 2 z_r / (n a0)
//! ```
//!
//! with N_nl, A_lk the radial and angular normalization constants. The whole
//! radial decay e^{-r/(n a0)} lives inside the tau phase factor: on images of
//! real points Im tau = -hbar r/(alpha E) and exp(-i E tau/hbar) =
//! exp(-i E t/hbar) e^{-r/(n a0)}, so the visible radial profile at fixed tau
//! is a pure polynomial.
//!
//! The squared angular momentum acts on functions of (z_theta, z_phi) as
//!
//! ```text
//!   L^2 f = -hbar^2 / (1 - z_theta^2) {[(1 - z_theta^2) d/dz_theta]^2
//!                                      - (z_phi d/dz_phi)^2} f
//! ```
//!
//! The relative sign between the polar and azimuthal terms is fixed by
//! requiring the l(l+1) hbar^2 eigenvalue on P_l^k(z_theta) z_phi^k for
//! k != 0; with the opposite sign the operator misses by
//! 2 hbar^2 k^2/(1 - z_theta^2), which the eigenvalue checks would catch.
//! L_3 = hbar z_phi d/dz_phi is realized by differencing along the unit
//! circle that z_phi lives on.

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::calculus::ComplexField;
use crate::coords::{self, ComplexEvent, ComplexSpherical, CoordsError, PhysicalParams};
#[cfg(test)]
use crate::coords::RealEvent;
use crate::numdiff;
use crate::report::{Residual, ResidualReport};
use crate::specfun::{self, QuantumNumbers, SpecFunError};
use crate::units;

/// Pole guard for the angular operators: points with 1 - z_theta^2 below
/// this are rejected rather than differenced through the coordinate
/// singularity.
pub const EPS_POLE: f64 = 1e-6;

/// Base step for the 7-point operator stencils (theta, phi, z_r moves).
const OPERATOR_STEP: f64 = 1e-2;

const NAN_C: Complex64 = Complex64::new(f64::NAN, f64::NAN);

#[derive(Debug, Error)]
pub enum HydrogenError {
    #[error(transparent)]
    Quantum(#[from] SpecFunError),
    #[error(transparent)]
    Coords(#[from] CoordsError),
    #[error("azimuthal index k = {k} needs z_phi, which is undefined on the x3 axis")]
    OnAxisWithK { k: i32 },
    #[error("z_theta = {z_theta} within {eps} of the poles; angular differencing rejected")]
    PolarPole { z_theta: f64, eps: f64 },
    #[error("z_theta = {0} is not real in [-1, 1]; this realization differences along the physical slice")]
    NonRealPolar(Complex64),
    #[error("z_r = {z_r} too close to the origin for the radial stencil")]
    NearOrigin { z_r: f64 },
    #[error("wavefunction magnitude {magnitude:.3e} too small for a relative residual")]
    VanishingAmplitude { magnitude: f64 },
    #[error("non-finite value while evaluating {0}")]
    NonFinite(&'static str),
}

/// A bound-state energy: the principal quantum number and E_n in Hartree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyLevel {
    pub n: u32,
    pub e_hartree: f64,
}

impl EnergyLevel {
    pub fn e_ev(&self) -> f64 {
        self.e_hartree * units::HARTREE_EV
    }
}

/// E_n = -m e^4 / (2 hbar^2 n^2) = -1/(2 n^2) Hartree.
pub fn energy(n: u32, p: &PhysicalParams) -> Result<EnergyLevel, HydrogenError> {
    if n == 0 {
        return Err(SpecFunError::InvalidQuantumNumbers {
            n,
            l: 0,
            k: 0,
            reason: "n must be >= 1",
        }
        .into());
    }
    let nf = n as f64;
    let e = -p.m_e() * p.coulomb() * p.coulomb() / (2.0 * p.hbar() * p.hbar() * nf * nf);
    Ok(EnergyLevel { n, e_hartree: e })
}

/// The length scale alpha(E) = sqrt(-hbar^2 / (2 m E)) of the transform;
/// for E = E_n this is n Bohr radii. Rejects E >= 0.
pub fn alpha_of(e_hartree: f64, p: &PhysicalParams) -> Result<f64, HydrogenError> {
    if !e_hartree.is_finite() || e_hartree >= 0.0 {
        return Err(CoordsError::NonBoundEnergy(e_hartree).into());
    }
    Ok((-p.hbar() * p.hbar() / (2.0 * p.m_e() * e_hartree)).sqrt())
}

/// The first `n_max` levels.
pub fn spectrum(n_max: u32, p: &PhysicalParams) -> Result<Vec<EnergyLevel>, HydrogenError> {
    (1..=n_max).map(|n| energy(n, p)).collect()
}

/// A hydrogenic eigensolution Psi_nlk, carrying its own transform
/// parameters so the tau phase and the equation coefficients agree.
#[derive(Debug, Clone)]
pub struct Eigensolution {
    qn: QuantumNumbers,
    level: EnergyLevel,
    alpha: f64,
    params: PhysicalParams,
}

impl Eigensolution {
    /// The eigensolution at its own level energy E_n.
    pub fn new(qn: QuantumNumbers) -> Self {
        let params = PhysicalParams::for_level(qn.n).expect("validated n >= 1");
        Eigensolution {
            qn,
            level: EnergyLevel { n: qn.n, e_hartree: params.energy() },
            alpha: params.alpha(),
            params,
        }
    }

    /// The same functional form evaluated with a detuned energy: both the
    /// phase factor and the transform parameters follow `e_hartree`, while
    /// the polynomial profile keeps its (n, l, k) shape. Residual checks use
    /// this to confirm the wave equation singles out the true E_n.
    pub fn with_energy(qn: QuantumNumbers, e_hartree: f64) -> Result<Self, HydrogenError> {
        let params = PhysicalParams::bound(e_hartree)?;
        Ok(Eigensolution {
            qn,
            level: EnergyLevel { n: qn.n, e_hartree },
            alpha: params.alpha(),
            params,
        })
    }

    pub fn qn(&self) -> QuantumNumbers {
        self.qn
    }

    pub fn level(&self) -> EnergyLevel {
        self.level
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn params(&self) -> &PhysicalParams {
        &self.params
    }

    /// Psi at complex spherical coordinates and a tau of the caller's
    /// choosing. On images of real points, tau = t - i hbar r/(alpha E)
    /// reproduces the textbook bound state; other tau values analytically
    /// continue the same expression.
    pub fn psi_complex(
        &self,
        cs: &ComplexSpherical,
        tau: Complex64,
    ) -> Result<Complex64, HydrogenError> {
        let QuantumNumbers { n, l, k } = self.qn;
        let rho = 2.0 * cs.z_r / (n as f64 * self.params.bohr_radius());
        let radial = specfun::norm_const(&self.qn, &self.params)
            * rho.powi(l as i32)
            * specfun::laguerre_raw(n - l - 1, (2 * l + 1) as f64, rho);
        let polar = specfun::assoc_legendre_c(l, k, cs.z_theta);
        let azimuth = if k == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            match cs.z_phi {
                Some(zp) => zp.powi(k),
                None => return Err(HydrogenError::OnAxisWithK { k }),
            }
        };
        let phase = (-Complex64::i() * self.level.e_hartree * tau / self.params.hbar()).exp();
        let value = specfun::angular_norm(l, k) * radial * polar * azimuth * phase;
        if !value.is_finite() {
            return Err(HydrogenError::NonFinite("psi_complex"));
        }
        Ok(value)
    }

    /// Psi directly from the four complex coordinates, treating each as an
    /// independent slot. The spherical ingredients are continued
    /// holomorphically: z_r = (z3^2 - 2i z1 z2)^{1/2}, |z1| = (-i z1 z2)^{1/2}
    /// (principal branches), and the Legendre and Laguerre factors accept the
    /// resulting complex arguments. On images of real points this agrees with
    /// `psi_complex`; off the image it is the evaluation that the holomorphy
    /// checks difference slot by slot.
    pub fn psi_complex_cartesian(&self, cev: &ComplexEvent) -> Result<Complex64, HydrogenError> {
        let QuantumNumbers { n, l, k } = self.qn;
        let z_r2 = cev.z3 * cev.z3 - 2.0 * Complex64::i() * cev.z1 * cev.z2;
        let z_r = z_r2.sqrt();
        if z_r.norm() < 1e-12 {
            return Err(CoordsError::Origin.into());
        }
        let z_theta = cev.z3 / z_r;
        let rho = 2.0 * z_r / (n as f64 * self.params.bohr_radius());
        let radial = specfun::norm_const(&self.qn, &self.params)
            * rho.powu(l)
            * specfun::gen_laguerre_c(n - l - 1, (2 * l + 1) as f64, rho);
        let polar = specfun::assoc_legendre_c(l, k, z_theta);
        let azimuth = if k == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            let z1_mag = (-Complex64::i() * cev.z1 * cev.z2).sqrt();
            if z1_mag.norm() < 1e-12 || cev.z1.norm() < 1e-12 {
                return Err(HydrogenError::OnAxisWithK { k });
            }
            (cev.z1 / z1_mag).powi(k)
        };
        let phase = (-Complex64::i() * self.level.e_hartree * cev.tau / self.params.hbar()).exp();
        let value = specfun::angular_norm(l, k) * radial * polar * azimuth * phase;
        if !value.is_finite() {
            return Err(HydrogenError::NonFinite("psi_complex_cartesian"));
        }
        Ok(value)
    }

    /// Package the eigensolution as a field for the differential calculus:
    /// the complex evaluator is the slot-independent continuation, the real
    /// evaluator routes through the coordinate transform.
    pub fn as_field(&self) -> ComplexField {
        let name = format!("psi_{}_{}_{}", self.qn.n, self.qn.l, self.qn.k);
        let by_slots = self.clone();
        let by_transform = self.clone();
        ComplexField::from_complex(name, move |cev| {
            by_slots.psi_complex_cartesian(cev).unwrap_or(NAN_C)
        })
        .with_real(move |ev, p| {
            coords::to_complex(ev, p)
                .map_err(HydrogenError::from)
                .and_then(|cev| {
                    let cs = coords::to_complex_spherical(&cev)?;
                    by_transform.psi_complex(&cs, cev.tau)
                })
                .unwrap_or(NAN_C)
        })
    }
}

/// The textbook bound state in real spherical coordinates:
/// R_nl(r) Y_l^k(theta, phi) exp(-i E_n t/hbar) with the e^{+ik phi}
/// azimuthal convention. Reference implementation for equivalence checks.
pub fn psi_real_textbook(
    qn: &QuantumNumbers,
    r: f64,
    theta: f64,
    phi: f64,
    t: f64,
    p: &PhysicalParams,
) -> Result<Complex64, HydrogenError> {
    if !(r.is_finite() && theta.is_finite() && phi.is_finite() && t.is_finite()) || r < 0.0 {
        return Err(HydrogenError::NonFinite("psi_real_textbook arguments"));
    }
    let QuantumNumbers { n, l, k } = *qn;
    let na = n as f64 * p.bohr_radius();
    let rho = 2.0 * r / na;
    let radial = specfun::norm_const(qn, p)
        * (-r / na).exp()
        * rho.powi(l as i32)
        * specfun::laguerre_raw(n - l - 1, (2 * l + 1) as f64, rho);
    let angular = specfun::sph_harm(l, k, theta, phi)?;
    let e_n = energy(n, p)?.e_hartree;
    Ok(radial * angular * (-Complex64::i() * e_n * t / p.hbar()).exp())
}

fn physical_polar(cs: &ComplexSpherical) -> Result<f64, HydrogenError> {
    if cs.z_theta.im.abs() > 1e-9 || cs.z_theta.re.abs() > 1.0 + 1e-9 {
        return Err(HydrogenError::NonRealPolar(cs.z_theta));
    }
    Ok(cs.z_theta.re.clamp(-1.0, 1.0))
}

fn pole_guard(x: f64) -> Result<(), HydrogenError> {
    if 1.0 - x * x < EPS_POLE {
        return Err(HydrogenError::PolarPole { z_theta: x, eps: EPS_POLE });
    }
    Ok(())
}

/// Apply the squared angular momentum to a function of the spherical
/// coordinates at a physical point (z_theta real, away from the poles).
///
/// Realized by parametrizing z_theta = cos theta and differencing the
/// equivalent form -hbar^2 [f_theta_theta + cot(theta) f_theta
/// + f_phi_phi / sin^2 theta] with 7-point stencils. Atomic units: hbar = 1.
pub fn l2_apply<F>(f: F, cs: &ComplexSpherical) -> Result<Complex64, HydrogenError>
where
    F: Fn(&ComplexSpherical) -> Complex64,
{
    let x = physical_polar(cs)?;
    pole_guard(x)?;
    let theta0 = x.acos();
    let sin0 = theta0.sin();
    let h = OPERATOR_STEP;

    // Polar sweep at fixed z_phi. cos is even, so stencil legs crossing
    // theta = 0 or pi sample the same smooth function.
    let g = |th: f64| {
        f(&ComplexSpherical { z_r: cs.z_r, z_theta: Complex64::new(th.cos(), 0.0), z_phi: cs.z_phi })
    };
    let g1 = numdiff::d1_7(g, theta0, h);
    let g2 = numdiff::d2_7(g, theta0, h);

    let fpp = match cs.z_phi {
        // no azimuth on the axis slice; pole_guard keeps us off it anyway,
        // but a caller may pass an axis-free function with z_phi = None
        None => Complex64::new(0.0, 0.0),
        Some(zp) => {
            let phi0 = zp.im.atan2(zp.re);
            let gphi = |ph: f64| {
                f(&ComplexSpherical {
                    z_r: cs.z_r,
                    z_theta: cs.z_theta,
                    z_phi: Some(Complex64::from_polar(1.0, ph)),
                })
            };
            numdiff::d2_7(gphi, phi0, h)
        }
    };

    let value = -(g2 + (x / sin0) * g1 + fpp / (sin0 * sin0));
    if !value.is_finite() {
        return Err(HydrogenError::NonFinite("l2_apply"));
    }
    Ok(value)
}

/// Apply L_3 = hbar z_phi d/dz_phi to a function of the spherical
/// coordinates, differencing along the unit circle the azimuth lives on:
/// L_3 = -i hbar d/dphi. Rejects on-axis points. Atomic units: hbar = 1.
pub fn l3_apply<F>(f: F, cs: &ComplexSpherical) -> Result<Complex64, HydrogenError>
where
    F: Fn(&ComplexSpherical) -> Complex64,
{
    let zp = cs.z_phi().map_err(HydrogenError::from)?;
    let phi0 = zp.im.atan2(zp.re);
    let gphi = |ph: f64| {
        f(&ComplexSpherical {
            z_r: cs.z_r,
            z_theta: cs.z_theta,
            z_phi: Some(Complex64::from_polar(1.0, ph)),
        })
    };
    let d1 = numdiff::d1_7(gphi, phi0, OPERATOR_STEP);
    let value = -Complex64::i() * d1;
    if !value.is_finite() {
        return Err(HydrogenError::NonFinite("l3_apply"));
    }
    Ok(value)
}

/// The left side of the bound-state wave equation at a transformed event,
/// assembled in spherical form with tau held fixed:
///
/// ```text
///   -(hbar^2/2m)[psi_rr + (2/z_r) psi_r - L^2 psi/(hbar^2 z_r^2)]
///   + (hbar/(m alpha)) psi_r - (1/z_r)(e^2/(4 pi eps0) - hbar^2/(m alpha)) psi
/// ```
///
/// Radial derivatives move z_r only; at fixed tau the radial profile is a
/// polynomial of degree n - 1, which the 7-point stencils differentiate to
/// near machine accuracy.
pub fn schrodinger_lhs(
    sol: &Eigensolution,
    cev: &ComplexEvent,
    p: &PhysicalParams,
) -> Result<Complex64, HydrogenError> {
    let cs = coords::to_complex_spherical(cev)?;
    physical_polar(&cs)?;
    let tau = cev.tau;
    let z_r = cs.z_r;
    let hr = numdiff::step(z_r, OPERATOR_STEP);
    if z_r <= 3.5 * hr {
        return Err(HydrogenError::NearOrigin { z_r });
    }

    let radial = |u: f64| {
        let moved = ComplexSpherical { z_r: u, z_theta: cs.z_theta, z_phi: cs.z_phi };
        sol.psi_complex(&moved, tau).unwrap_or(NAN_C)
    };
    let d1 = numdiff::d1_7(radial, z_r, hr);
    let d2 = numdiff::d2_7(radial, z_r, hr);
    let l2psi = l2_apply(|c| sol.psi_complex(c, tau).unwrap_or(NAN_C), &cs)?;
    let psi0 = sol.psi_complex(&cs, tau)?;

    let hbar = p.hbar();
    let m = p.m_e();
    let kinetic = hbar * hbar / (2.0 * m);
    let lhs = -kinetic * (d2 + 2.0 / z_r * d1) + kinetic * l2psi / (hbar * hbar * z_r * z_r)
        + hbar / (m * sol.alpha) * d1
        - (p.coulomb() - hbar * hbar / (m * sol.alpha)) / z_r * psi0;
    if !lhs.is_finite() {
        return Err(HydrogenError::NonFinite("schrodinger_lhs"));
    }
    Ok(lhs)
}

/// Residual of the wave equation at a transformed event, relative to the
/// local scale |psi| * hbar^2/(2 m a0^2). Points where |psi| vanishes have
/// no meaningful relative residual and are rejected.
pub fn schrodinger_residual(
    sol: &Eigensolution,
    cev: &ComplexEvent,
    p: &PhysicalParams,
) -> Result<f64, HydrogenError> {
    let cs = coords::to_complex_spherical(cev)?;
    let psi0 = sol.psi_complex(&cs, cev.tau)?;
    let scale = 0.5 * p.hbar() * p.hbar() / (p.m_e() * p.bohr_radius() * p.bohr_radius());
    if psi0.norm() < 1e-300 {
        return Err(HydrogenError::VanishingAmplitude { magnitude: psi0.norm() });
    }
    let lhs = schrodinger_lhs(sol, cev, p)?;
    Ok(lhs.norm() / (scale * psi0.norm()))
}

/// Residuals of the three separated one-dimensional equations for the
/// factors of Psi_nlk, evaluated at a sample point.
///
/// * `azimuthal`: (z_phi d/dz_phi)^2 Phi - k^2 Phi on Phi = z_phi^k,
///   differenced along the unit circle.
/// * `polar`: the Legendre form d/dx[(1-x^2) dTheta/dx]
///   + [l(l+1) - k^2/(1-x^2)] Theta on Theta = P_l^k at x = z_theta, with
///   analytic recurrence derivatives.
/// * `radial`: xi R'' + (2 - xi) R' - (1 - lambda + l(l+1)/xi) R on the
///   assembled profile R = xi^l L_{n-l-1}^{2l+1}(xi), xi = 2 z_r/(n a0),
///   lambda = n. This is the reading the assembled profile satisfies.
///
/// Two informational entries document the alternate reading of the radial
/// first-order coefficient: `radial_alt_coeff` applies (2l+2 - xi) to the
/// assembled profile (nonzero unless l = 0), and `radial_alt_laguerre`
/// applies it to the bare Laguerre factor, whose equation it is.
pub fn separated_residuals(
    sol: &Eigensolution,
    cs: &ComplexSpherical,
) -> Result<ResidualReport, HydrogenError> {
    let QuantumNumbers { n, l, k } = sol.qn;
    let m = n - l - 1;
    let a = (2 * l + 1) as f64;
    let lf = l as f64;
    let kf = k as f64;
    let lambda = n as f64;
    let mut entries = Vec::new();

    // azimuthal factor
    match cs.z_phi {
        Some(zp) => {
            let phi0 = zp.im.atan2(zp.re);
            let g = |ph: f64| Complex64::from_polar(1.0, kf * ph);
            let second = -numdiff::d2_7(g, phi0, OPERATOR_STEP);
            let res = (second - kf * kf * g(phi0)).norm();
            entries.push(
                Residual::checked("azimuthal", res, 1e-7)
                    .with_note(format!("Phi = z_phi^k, k^2 = {}", k * k)),
            );
        }
        None => {
            if k == 0 {
                entries.push(
                    Residual::checked("azimuthal", 0.0, 1e-7)
                        .with_note("Phi = 1 on the axis slice"),
                );
            } else {
                entries.push(Residual::skipped(
                    "azimuthal",
                    1e-7,
                    "z_phi undefined on the x3 axis with k != 0",
                ));
            }
        }
    }

    // polar factor
    let x = physical_polar(cs)?;
    pole_guard(x)?;
    {
        let p_val = specfun::legendre_raw(l, k, x);
        let dp = specfun::assoc_legendre_deriv(l, k, x)?;
        // P_{l-1}^k vanishes identically when |k| > l-1, where its (l+k)
        // coefficient is zero too
        let dp_lower = if l == 0 || k.unsigned_abs() > l - 1 {
            0.0
        } else {
            specfun::assoc_legendre_deriv(l - 1, k, x)?
        };
        // d/dx[(1- x^2) P'] = (l + k) P'_{l-1} - l P - l x P'
        let gp = (lf + kf) * dp_lower - lf * p_val - lf * x * dp;
        let res = (gp + (lf * (lf + 1.0) - kf * kf / (1.0 - x * x)) * p_val).abs();
        entries.push(Residual::checked("polar", res, 1e-6).with_note(format!(
            "Theta = P_{}^{}, L^2 = l(l+1) hbar^2 = {} hbar^2, k^2 = {}",
            l,
            k,
            l * (l + 1),
            k * k
        )));
    }

    // radial factor
    let xi = 2.0 * cs.z_r / (lambda * sol.params.bohr_radius());
    if xi <= 0.0 {
        return Err(HydrogenError::NearOrigin { z_r: cs.z_r });
    }
    {
        let lg = specfun::laguerre_raw(m, a, xi);
        let dlg = specfun::laguerre_deriv_raw(m, a, xi);
        let ddlg = specfun::laguerre_deriv2_raw(m, a, xi);
        let xil = xi.powi(l as i32);
        let r_val = xil * lg;
        let dr = if l == 0 { 0.0 } else { lf * xi.powi(l as i32 - 1) * lg } + xil * dlg;
        let ddr = if l >= 2 { lf * (lf - 1.0) * xi.powi(l as i32 - 2) * lg } else { 0.0 }
            + if l == 0 { 0.0 } else { 2.0 * lf * xi.powi(l as i32 - 1) * dlg }
            + xil * ddlg;
        let centrifugal = 1.0 - lambda + lf * (lf + 1.0) / xi;
        let res_a = (xi * ddr + (2.0 - xi) * dr - centrifugal * r_val).abs();
        let res_b = (xi * ddr + (2.0 * lf + 2.0 - xi) * dr - centrifugal * r_val).abs();
        let res_lag = (xi * ddlg + (2.0 * lf + 2.0 - xi) * dlg + m as f64 * lg).abs();
        entries.push(Residual::checked("radial", res_a, 1e-6).with_note(format!(
            "first-order coefficient (2 - xi) on R = xi^l L_{{{m}}}^{{{}}}(xi); lambda = n = {n}",
            2 * l + 1
        )));
        entries.push(Residual::informational(
            "radial_alt_coeff",
            res_b,
            "coefficient (2l+2 - xi) on the assembled profile; vanishes only for l = 0",
        ));
        entries.push(Residual::informational(
            "radial_alt_laguerre",
            res_lag,
            "coefficient (2l+2 - xi) on the bare Laguerre factor, the equation that factor satisfies",
        ));
    }

    Ok(ResidualReport::new(entries))
}

/// Real-space probability density |Psi|^2 via the textbook form.
pub fn density_real(
    qn: &QuantumNumbers,
    r: f64,
    theta: f64,
    phi: f64,
    p: &PhysicalParams,
) -> Result<f64, HydrogenError> {
    let psi = psi_real_textbook(qn, r, theta, phi, 0.0, p)?;
    Ok(psi.norm_sqr())
}

#[cfg(test)]
pub(crate) fn event_from_spherical(
    r: f64,
    theta: f64,
    phi: f64,
    t: f64,
) -> RealEvent {
    let (st, ct) = (theta.sin(), theta.cos());
    RealEvent::new(r * st * phi.cos(), r * st * phi.sin(), r * ct, t)
}
