//! Event types and the isometric map between real (x1, x2, x3, t) coordinates
//! and the three-complex-plane representation (z1, z2, z3, tau).
//!
//! Forward map, for a bound state with energy E < 0 and length scale
//! alpha = sqrt(-hbar^2 / (2 m E)):
//!
//! ```text
//! z1  = (x1 + i x2) / sqrt(2)
//! z2  = (x2 + i x1) / sqrt(2)
//! z3  = x3
//! tau = t - i hbar r / (alpha E),   r = |x|
//! ```
//!
//! Since E < 0 the imaginary part of tau is s = -hbar r / (alpha E) >= 0, and
//! exp(-i E tau / hbar) = exp(-i E t / hbar) exp(-r / alpha): the bound-state
//! radial decay rides inside tau. The image of real space is the locked slice
//! z2 = i conj(z1), Im z3 = 0, Im tau = s(r); the inverse map is only defined
//! there and validates those locks.

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::report::{Residual, ResidualReport};
use crate::units::UnitSystem;

pub(crate) const SQRT2: f64 = std::f64::consts::SQRT_2;
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Absolute slack, per unit of coordinate scale, allowed when checking that a
/// complex event sits on the image of real space.
pub const IMAGE_LOCK_TOL: f64 = 1e-9;
/// Below this |z1| the plane-correlation ratio z1 / conj(z2) is not formed.
pub const PLANE_RATIO_FLOOR: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoordsError {
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),
    #[error("bound state requires E < 0, got E = {0}")]
    NonBoundEnergy(f64),
    #[error("complex event off the real-image slice: {invariant} violated by {magnitude:.3e} (tolerance {tolerance:.3e})")]
    OffImage {
        invariant: &'static str,
        magnitude: f64,
        tolerance: f64,
    },
    #[error("spherical coordinates undefined at the origin (z_r = 0)")]
    Origin,
    #[error("on-axis point (x1 = x2 = 0): azimuthal coordinate z_phi undefined")]
    OnAxis,
    #[error("z_theta = {0} lies outside [-1, 1] beyond tolerance")]
    PolarRange(f64),
    #[error("|z_phi| = {0} is not 1 within tolerance")]
    AzimuthNotUnit(f64),
}

/// A point of real space-time. Plain data; operations validate finiteness.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RealEvent {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub t: f64,
}

impl RealEvent {
    pub fn new(x1: f64, x2: f64, x3: f64, t: f64) -> Self {
        RealEvent { x1, x2, x3, t }
    }

    /// Spatial radius |x|.
    pub fn r(&self) -> f64 {
        (self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite() && self.t.is_finite()
    }

    pub(crate) fn with_coord(&self, axis: usize, value: f64) -> RealEvent {
        let mut ev = *self;
        match axis {
            0 => ev.x1 = value,
            1 => ev.x2 = value,
            2 => ev.x3 = value,
            _ => ev.t = value,
        }
        ev
    }

    pub(crate) fn coord(&self, axis: usize) -> f64 {
        match axis {
            0 => self.x1,
            1 => self.x2,
            2 => self.x3,
            _ => self.t,
        }
    }
}

/// Image of an event in the three-plane representation.
///
/// On images of real events: z2 = i conj(z1), Im z3 = 0, and
/// Im tau = -hbar r / (alpha E) >= 0 for bound states (E < 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexEvent {
    pub z1: Complex64,
    pub z2: Complex64,
    pub z3: Complex64,
    pub tau: Complex64,
}

impl ComplexEvent {
    /// Imaginary part of tau; equals -hbar r / (alpha E) on the image slice.
    pub fn s(&self) -> f64 {
        self.tau.im
    }

    /// Radius recovered from the quadratic form z1* z1 + z2* z2 + z3* z3.
    pub fn r(&self) -> f64 {
        let q = self.z1.norm_sqr() + self.z2.norm_sqr() + self.z3.norm_sqr();
        q.max(0.0).sqrt()
    }
}

/// Bound-state parameters fixing the transform. Internally always atomic
/// units (hbar = m_e = e = 4 pi eps0 = 1); the unit tag records how the CLI
/// boundary should print and parse values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    energy: f64,
    alpha: f64,
    units: UnitSystem,
}

impl PhysicalParams {
    /// Parameters for a bound state of energy `e_hartree` < 0.
    pub fn bound(e_hartree: f64) -> Result<Self, CoordsError> {
        if !e_hartree.is_finite() {
            return Err(CoordsError::NonFinite("energy"));
        }
        if e_hartree >= 0.0 {
            return Err(CoordsError::NonBoundEnergy(e_hartree));
        }
        let hbar = 1.0f64;
        let m_e = 1.0f64;
        let alpha = (-hbar * hbar / (2.0 * m_e * e_hartree)).sqrt();
        Ok(PhysicalParams {
            energy: e_hartree,
            alpha,
            units: UnitSystem::Atomic,
        })
    }

    /// Parameters of hydrogen level n: E_n = -1/(2 n^2) Ha, alpha_n = n a0.
    pub fn for_level(n: u32) -> Result<Self, CoordsError> {
        if n == 0 {
            return Err(CoordsError::NonFinite("principal quantum number 0"));
        }
        let nn = n as f64;
        Self::bound(-1.0 / (2.0 * nn * nn))
    }

    pub fn with_units(mut self, units: UnitSystem) -> Self {
        self.units = units;
        self
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// Length scale alpha = sqrt(-hbar^2 / (2 m E)), in Bohr radii.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn units(&self) -> UnitSystem {
        self.units
    }

    pub fn hbar(&self) -> f64 {
        1.0
    }

    pub fn m_e(&self) -> f64 {
        1.0
    }

    /// Coulomb coupling e^2 / (4 pi eps0); unity in atomic units.
    pub fn coulomb(&self) -> f64 {
        1.0
    }

    pub fn bohr_radius(&self) -> f64 {
        1.0
    }

    /// hbar / (alpha E): the factor scaling the time term of every plane
    /// derivative operator.
    pub(crate) fn time_coupling(&self) -> f64 {
        self.hbar() / (self.alpha * self.energy)
    }
}

/// Forward transform of a real event.
pub fn to_complex(ev: &RealEvent, p: &PhysicalParams) -> Result<ComplexEvent, CoordsError> {
    if !ev.is_finite() {
        return Err(CoordsError::NonFinite("real event"));
    }
    let r = ev.r();
    let z1 = Complex64::new(ev.x1, ev.x2) / SQRT2;
    let z2 = Complex64::new(ev.x2, ev.x1) / SQRT2;
    let z3 = Complex64::new(ev.x3, 0.0);
    let tau = Complex64::new(ev.t, -p.time_coupling() * r);
    Ok(ComplexEvent { z1, z2, z3, tau })
}

/// Inverse transform. Defined only on the image slice; each lock is checked
/// to `IMAGE_LOCK_TOL` per unit of scale and violations are rejected with the
/// name of the broken invariant.
pub fn to_real(cev: &ComplexEvent, p: &PhysicalParams) -> Result<RealEvent, CoordsError> {
    let all_finite = [cev.z1, cev.z2, cev.z3, cev.tau]
        .iter()
        .all(|z| z.re.is_finite() && z.im.is_finite());
    if !all_finite {
        return Err(CoordsError::NonFinite("complex event"));
    }

    let scale = 1.0 + cev.z1.norm() + cev.z2.norm() + cev.z3.norm();
    let lock = (cev.z2 - I * cev.z1.conj()).norm();
    if lock > IMAGE_LOCK_TOL * scale {
        return Err(CoordsError::OffImage {
            invariant: "z2 = i conj(z1)",
            magnitude: lock,
            tolerance: IMAGE_LOCK_TOL * scale,
        });
    }
    if cev.z3.im.abs() > IMAGE_LOCK_TOL * (1.0 + cev.z3.norm()) {
        return Err(CoordsError::OffImage {
            invariant: "Im z3 = 0",
            magnitude: cev.z3.im.abs(),
            tolerance: IMAGE_LOCK_TOL * (1.0 + cev.z3.norm()),
        });
    }

    let x1 = ((cev.z1 - I * cev.z2) / SQRT2).re;
    let x2 = ((cev.z2 - I * cev.z1) / SQRT2).re;
    let x3 = cev.z3.re;
    let r = cev.r();

    // t = tau + i hbar r / (alpha E); a consistent tau makes this real.
    let t_c = cev.tau + I * p.time_coupling() * r;
    let t_tol = IMAGE_LOCK_TOL * (1.0 + cev.tau.norm() + r);
    if t_c.im.abs() > t_tol {
        return Err(CoordsError::OffImage {
            invariant: "Im tau = -hbar r / (alpha E)",
            magnitude: t_c.im.abs(),
            tolerance: t_tol,
        });
    }

    Ok(RealEvent::new(x1, x2, x3, t_c.re))
}

/// Residuals of the three algebraic identities of the map at one event:
///
/// - `isometry`: |z1|^2 + |z2|^2 + |z3|^2 - |x|^2
/// - `plane_correlation`: z1 / conj(z2) - i  and  z2 / conj(z1) - i
///   (skipped within `PLANE_RATIO_FLOOR` of the axis where the ratios are 0/0)
/// - `plane_product`: -2i z1 z2 - (x1^2 + x2^2)
pub fn identity_residuals(ev: &RealEvent, p: &PhysicalParams) -> Result<ResidualReport, CoordsError> {
    let cev = to_complex(ev, p)?;
    let rho2 = ev.x1 * ev.x1 + ev.x2 * ev.x2;
    let r2 = rho2 + ev.x3 * ev.x3;

    let quad = cev.z1.norm_sqr() + cev.z2.norm_sqr() + cev.z3.norm_sqr();
    let isometry = Residual::checked("isometry", (quad - r2).abs(), 1e-12 * (1.0 + r2));

    let correlation = if cev.z1.norm() <= PLANE_RATIO_FLOOR || cev.z2.norm() <= PLANE_RATIO_FLOOR {
        Residual::skipped(
            "plane_correlation",
            1e-13,
            "ratio undefined on the x1 = x2 = 0 axis",
        )
    } else {
        let a = (cev.z1 / cev.z2.conj() - I).norm();
        let b = (cev.z2 / cev.z1.conj() - I).norm();
        Residual::checked("plane_correlation", a.max(b), 1e-13)
    };

    let prod = (-2.0 * I * cev.z1 * cev.z2 - Complex64::new(rho2, 0.0)).norm();
    let product = Residual::checked("plane_product", prod, 1e-12 * (1.0 + rho2));

    Ok(ResidualReport::new(vec![isometry, correlation, product]))
}

/// Complex spherical coordinates (z_r, z_theta, z_phi).
///
/// On images of real points these reduce to (r, cos theta, e^{i phi}). The
/// azimuthal coordinate is undefined on the x3 axis; such points carry
/// `z_phi = None` so that k = 0 evaluation paths still work there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexSpherical {
    pub z_r: f64,
    pub z_theta: Complex64,
    pub z_phi: Option<Complex64>,
}

impl ComplexSpherical {
    pub fn new(z_r: f64, z_theta: Complex64, z_phi: Option<Complex64>) -> Result<Self, CoordsError> {
        if !(z_r.is_finite() && z_theta.is_finite()) {
            return Err(CoordsError::NonFinite("spherical coordinates"));
        }
        if z_r < 0.0 {
            return Err(CoordsError::NonFinite("negative z_r"));
        }
        if let Some(zp) = z_phi {
            if (zp.norm() - 1.0).abs() > 1e-9 {
                return Err(CoordsError::AzimuthNotUnit(zp.norm()));
            }
        }
        Ok(ComplexSpherical { z_r, z_theta, z_phi })
    }

    /// Assemble from physical (r, theta, phi); theta in [0, pi].
    pub fn from_angles(r: f64, theta: f64, phi: f64) -> Result<Self, CoordsError> {
        if !(r.is_finite() && theta.is_finite() && phi.is_finite()) {
            return Err(CoordsError::NonFinite("angles"));
        }
        if r < 0.0 {
            return Err(CoordsError::NonFinite("negative radius"));
        }
        let on_axis = theta.sin().abs() < 1e-12;
        Self::new(
            r,
            Complex64::new(theta.cos(), 0.0),
            if on_axis {
                None
            } else {
                Some(Complex64::from_polar(1.0, phi))
            },
        )
    }

    pub fn z_phi(&self) -> Result<Complex64, CoordsError> {
        self.z_phi.ok_or(CoordsError::OnAxis)
    }
}

/// Spherical coordinates of a complex event: z_r = |z|, z_theta = z3 / z_r,
/// z_phi = z1 / |z1|. Errors at the origin where z_theta is undefined; on the
/// x3 axis the azimuth comes back as `None`.
pub fn to_complex_spherical(cev: &ComplexEvent) -> Result<ComplexSpherical, CoordsError> {
    let z_r = cev.r();
    if z_r <= 0.0 {
        return Err(CoordsError::Origin);
    }
    let z_theta = cev.z3 / z_r;
    let z1n = cev.z1.norm();
    let z_phi = if z1n <= PLANE_RATIO_FLOOR * (1.0 + z_r) {
        None
    } else {
        Some(cev.z1 / z1n)
    };
    ComplexSpherical::new(z_r, z_theta, z_phi)
}

/// Recover physical (r, theta, phi) from complex spherical coordinates.
///
/// Requires z_theta real in [-1, 1] and |z_phi| = 1 within tolerance;
/// phi = -i ln z_phi on the principal branch, i.e. atan2 in (-pi, pi].
/// On-axis points (no z_phi) get phi = 0 by convention.
pub fn complex_to_real_spherical(cs: &ComplexSpherical) -> Result<(f64, f64, f64), CoordsError> {
    if cs.z_theta.im.abs() > 1e-9 {
        return Err(CoordsError::PolarRange(cs.z_theta.im));
    }
    let ct = cs.z_theta.re;
    if ct.abs() > 1.0 + 1e-9 {
        return Err(CoordsError::PolarRange(ct));
    }
    let theta = ct.clamp(-1.0, 1.0).acos();
    let phi = match cs.z_phi {
        None => 0.0,
        Some(zp) => {
            if (zp.norm() - 1.0).abs() > 1e-9 {
                return Err(CoordsError::AzimuthNotUnit(zp.norm()));
            }
            zp.im.atan2(zp.re)
        }
    };
    Ok((cs.z_r, theta, phi))
}
