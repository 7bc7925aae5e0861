//! Isometric decomposition of real (x1, x2, x3, t) space into three complex
//! planes, the differential calculus that comes with it, and the hydrogen bound
//! states expressed in those coordinates.
//!
//! The transform sends a real event to (z1, z2, z3, tau) where
//!
//! ```text
//! z1 = (x1 + i x2)/sqrt(2)      z2 = (x2 + i x1)/sqrt(2)
//! z3 = x3                       tau = t - i hbar |x| / (alpha E)
//! ```
//!
//! with alpha = sqrt(-hbar^2 / (2 m E)) the bound-state length scale of an
//! energy E < 0. The map preserves the quadratic form (|z1|^2 + |z2|^2 + z3^2
//! = |x|^2), locks the two spatial planes together (z1 = i conj(z2)), and
//! absorbs the radial decay of a bound state into the imaginary part of tau,
//! so that exp(-i E tau / hbar) = exp(-i E t / hbar) exp(-|x|/alpha).
//!
//! Everything here is organized around checking that structure numerically:
//!
//! - [`coords`]: event types, the forward/inverse transform, complex spherical
//!   coordinates, and the algebraic identities of the map.
//! - [`calculus`]: derivative operators for each plane realized as finite
//!   differences in real coordinates, constrained real-coordinate derivatives,
//!   and Cauchy-Riemann / holomorphy checks.
//! - [`specfun`]: associated Legendre and generalized Laguerre evaluation by
//!   three-term recurrence, quantum-number bookkeeping, normalization
//!   constants.
//! - [`hydrogen`]: the energy spectrum, the bound-state eigenfunctions in
//!   complex spherical coordinates, angular-momentum operators applied by
//!   finite differences, and the residual of the complex-coordinate
//!   Schroedinger equation.
//! - [`verify`]: quadrature-based norm and orthogonality checks, textbook
//!   equivalence sweeps, and the report types the CLI streams as JSON.
//! - [`cli`]: the `cplanes` command line (`transform`, `spectrum`,
//!   `wavefunction`, `check`).
//!
//! Runnable walkthroughs live in `examples/`; each one exercises a single
//! capability end to end:
//!
//! ```text
//! cargo run -p cplanes --example transform_roundtrip
//! cargo run -p cplanes --example spectrum
//! cargo run -p cplanes --example wavefunction_grid
//! cargo run -p cplanes --example holomorphy_check
//! cargo run -p cplanes --example operator_eigenvalues
//! cargo run -p cplanes --example separated_equations
//! cargo run -p cplanes --example constrained_derivatives
//! cargo run -p cplanes --example verification_suite
//! ```
//!
//! Conventions, fixed throughout: atomic units internally (hbar = m_e = e =
//! 4 pi eps0 = 1), Condon-Shortley phase on the associated Legendre functions,
//! azimuthal factor z_phi^k = exp(+i k phi), angular-momentum eigenvalue
//! l(l+1) hbar^2, and radial argument 2 z_r / (n a0) in the eigenfunctions.

pub mod calculus;
pub mod cli;
pub mod coords;
pub mod hydrogen;
mod numdiff;
pub mod report;
pub mod specfun;
pub mod units;
pub mod verify;

pub use calculus::{ComplexField, ConjugateForm, DerivativeSpec, HolomorphyReport, Plane};
pub use coords::{ComplexEvent, ComplexSpherical, PhysicalParams, RealEvent};
pub use hydrogen::{Eigensolution, EnergyLevel};
pub use report::{CheckStatus, Residual, ResidualReport};
pub use specfun::QuantumNumbers;
pub use verify::{QuadratureSpec, VerificationReport, Verdict};
