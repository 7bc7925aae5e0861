//! Independent oracles and global checks: quadrature-based normalization and
//! orthogonality, real-vs-complex equivalence sweeps, coordinate identity
//! sweeps, operator eigenvalue checks, wave-equation residual sweeps, and
//! the tau-factorization audit. Every check produces a machine-readable
//! [`VerificationReport`] and is deterministic given its inputs and seed.
//!
//! The quadrature rules are built here from scratch (Newton iteration on the
//! orthogonal-polynomial recurrences) so that the integrals adjudicating the
//! wavefunctions do not share code with the functions under test beyond the
//! special-function evaluators themselves.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::calculus::{self, ComplexField, ConjugateForm, Plane};
use crate::coords::{self, PhysicalParams, RealEvent};
use crate::hydrogen::{self, Eigensolution};
use crate::specfun::{self, QuantumNumbers};

/// Node counts for the product quadrature: Gauss-Laguerre in the radial
/// direction (the e^{-cr} factor absorbed into the weight), Gauss-Legendre
/// in cos theta, uniform trapezoid in phi (spectrally exact for the
/// trigonometric azimuthal factors).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadratureSpec {
    pub radial_nodes: usize,
    pub costheta_nodes: usize,
    pub phi_nodes: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { radial_nodes: 64, costheta_nodes: 32, phi_nodes: 64 }
    }
}

impl QuadratureSpec {
    /// Total grid size of the underlying product rule.
    pub fn grid_points(&self) -> usize {
        self.radial_nodes * self.costheta_nodes * self.phi_nodes
    }

    /// Whether the rule integrates the overlap of the two states exactly:
    /// Gauss rules of N nodes are exact through polynomial degree 2N - 1,
    /// and the M-point trapezoid resolves azimuthal frequencies below M.
    pub fn adequate_for(&self, a: &QuantumNumbers, b: &QuantumNumbers) -> bool {
        let radial_degree = (a.n + b.n) as usize;
        let polar_degree = (a.l + b.l) as usize;
        let phi_freq = (a.k - b.k).unsigned_abs() as usize;
        2 * self.radial_nodes - 1 >= radial_degree
            && 2 * self.costheta_nodes - 1 >= polar_degree
            && self.phi_nodes > phi_freq
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// One check's outcome. Serializes to the documented JSON schema
/// { check, params, n_samples, max_residual, mean_residual, tolerance,
/// verdict, seed }; free-form parameters (including any warnings and the
/// oracle used) live inside `params`.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: serde_json::Value,
    pub n_samples: usize,
    pub max_residual: f64,
    pub mean_residual: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
    pub seed: Option<u64>,
}

impl VerificationReport {
    pub fn from_residuals(
        check: impl Into<String>,
        params: serde_json::Value,
        residuals: &[f64],
        tolerance: f64,
        seed: Option<u64>,
    ) -> Self {
        let finite = residuals.iter().all(|r| r.is_finite());
        let max_residual = if residuals.is_empty() || !finite {
            f64::NAN
        } else {
            residuals.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
        };
        let mean_residual = if residuals.is_empty() || !finite {
            f64::NAN
        } else {
            residuals.iter().sum::<f64>() / residuals.len() as f64
        };
        let verdict = if max_residual < tolerance { Verdict::Pass } else { Verdict::Fail };
        VerificationReport {
            check: check.into(),
            params,
            n_samples: residuals.len(),
            max_residual,
            mean_residual,
            tolerance,
            verdict,
            seed,
        }
    }

    pub fn pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

// ---------------------------------------------------------------------------
// Quadrature rules

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// by Newton iteration on P_n from the cos-spaced initial guesses.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_pn(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = x;
        weights[i] = w;
        nodes[n - 1 - i] = -x;
        weights[n - 1 - i] = w;
    }
    // ascending order; the symmetric fill above produces descending halves
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| nodes[a].partial_cmp(&nodes[b]).unwrap());
    let nodes_sorted: Vec<f64> = idx.iter().map(|&j| nodes[j]).collect();
    let weights_sorted: Vec<f64> = idx.iter().map(|&j| weights[j]).collect();
    (nodes_sorted, weights_sorted)
}

fn legendre_pn(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Nodes and weights of the n-point Gauss-Laguerre rule for the weight
/// e^{-x} on [0, inf): Sum w_i f(x_i) ~ Int e^{-x} f(x) dx, exact for
/// polynomials of degree <= 2n - 1.
pub fn gauss_laguerre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    let mut z = 0.0;
    for i in 0..n {
        if i == 0 {
            z = 3.0 / (1.0 + 2.4 * nf);
        } else if i == 1 {
            z += 15.0 / (1.0 + 2.5 * nf);
        } else {
            let ai = (i - 1) as f64;
            z += (1.0 + 2.55 * ai) / (1.9 * ai) * (z - nodes[i - 2]);
        }
        for _ in 0..100 {
            let (p, d) = laguerre_ln(n, z);
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-14 * z.max(1.0) {
                break;
            }
        }
        nodes[i] = z;
        // w_i = x_i / ((n+1) L_{n+1}(x_i))^2
        let lnp1 = specfun::laguerre_raw(n as u32 + 1, 0.0, z);
        weights[i] = z / ((nf + 1.0) * lnp1).powi(2);
    }
    (nodes, weights)
}

fn laguerre_ln(n: usize, x: f64) -> (f64, f64) {
    let p = specfun::laguerre_raw(n as u32, 0.0, x);
    let pm1 = specfun::laguerre_raw(n as u32 - 1, 0.0, x);
    // L_n' = n (L_n - L_{n-1}) / x
    let d = n as f64 * (p - pm1) / x;
    (p, d)
}

// ---------------------------------------------------------------------------
// Sampling

/// Radial/angular sampling band. The default band covers near-nucleus and
/// tail regimes with a thin axis exclusion; the differencing bands back away
/// from the axis and the origin so stencil legs stay well-conditioned.
#[derive(Debug, Clone, Copy)]
pub struct SampleBand {
    pub r_min: f64,
    pub r_max: f64,
    pub sin_floor: f64,
}

/// General-purpose band: r log-uniform in [0.05, 20] a0, |sin theta| > 1e-3.
pub const DEFAULT_BAND: SampleBand = SampleBand { r_min: 0.05, r_max: 20.0, sin_floor: 1e-3 };
/// Band for wave-equation residual sweeps.
pub const RESIDUAL_BAND: SampleBand = SampleBand { r_min: 0.2, r_max: 10.0, sin_floor: 0.05 };
/// Band for slot-differencing holomorphy sweeps; keeps |z1| away from the
/// azimuthal branch point so the Wirtinger stencils stay in budget.
pub const HOLOMORPHY_BAND: SampleBand = SampleBand { r_min: 0.3, r_max: 8.0, sin_floor: 0.1 };

/// Draw an event in the band: r log-uniform, direction uniform on the sphere
/// minus the axis caps, t uniform in [-5, 5].
pub fn sample_event(rng: &mut ChaCha8Rng, band: &SampleBand) -> RealEvent {
    let r = (rng.gen_range(band.r_min.ln()..band.r_max.ln())).exp();
    let cos_cap = (1.0 - band.sin_floor * band.sin_floor).sqrt();
    let ct = loop {
        let c: f64 = rng.gen_range(-1.0..1.0);
        if c.abs() <= cos_cap {
            break c;
        }
    };
    let st = (1.0 - ct * ct).sqrt();
    let phi = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    let t = rng.gen_range(-5.0..5.0);
    RealEvent::new(r * st * phi.cos(), r * st * phi.sin(), r * ct, t)
}

fn max_of(vals: &[f64]) -> f64 {
    vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
}

// ---------------------------------------------------------------------------
// Quadrature-based checks

fn radial_profile_poly(qn: &QuantumNumbers, p: &PhysicalParams, r: f64) -> f64 {
    let rho = 2.0 * r / (qn.n as f64 * p.bohr_radius());
    specfun::norm_const(qn, p)
        * rho.powi(qn.l as i32)
        * specfun::laguerre_raw(qn.n - qn.l - 1, (2 * qn.l + 1) as f64, rho)
}

/// <Psi_a | Psi_b> by factorized product quadrature. The integrand separates
/// exactly into radial x polar x azimuthal factors, so the triple product
/// rule collapses to three one-dimensional sums; the e^{-cr} radial decay is
/// absorbed into the Gauss-Laguerre weight with c = 1/n_a + 1/n_b.
pub fn overlap(
    a: &QuantumNumbers,
    b: &QuantumNumbers,
    spec: &QuadratureSpec,
    p: &PhysicalParams,
) -> Complex64 {
    let c = 1.0 / (a.n as f64) + 1.0 / (b.n as f64);
    let (rx, rw) = gauss_laguerre(spec.radial_nodes);
    let mut radial = 0.0;
    for (x, w) in rx.iter().zip(&rw) {
        let r = x / c;
        radial += w * radial_profile_poly(a, p, r) * radial_profile_poly(b, p, r) * r * r;
    }
    radial /= c;

    let (cx, cw) = gauss_legendre(spec.costheta_nodes);
    let mut polar = 0.0;
    for (x, w) in cx.iter().zip(&cw) {
        polar += w * specfun::legendre_raw(a.l, a.k, *x) * specfun::legendre_raw(b.l, b.k, *x);
    }
    polar *= specfun::angular_norm(a.l, a.k) * specfun::angular_norm(b.l, b.k);

    let m = spec.phi_nodes;
    let dk = (b.k - a.k) as f64;
    let mut azimuth = Complex64::new(0.0, 0.0);
    for j in 0..m {
        let phi = 2.0 * std::f64::consts::PI * j as f64 / m as f64;
        azimuth += Complex64::from_polar(1.0, dk * phi);
    }
    azimuth *= 2.0 * std::f64::consts::PI / m as f64;

    radial * polar * azimuth
}

fn quadrature_params(
    spec: &QuadratureSpec,
    a: &QuantumNumbers,
    b: &QuantumNumbers,
) -> serde_json::Value {
    let mut params = json!({
        "quadrature": spec,
        "oracle": "textbook radial/angular factors under product quadrature",
    });
    if !spec.adequate_for(a, b) {
        params["warning"] =
            json!("node counts below polynomial exactness for these states");
    }
    params
}

/// Int |Psi_nlk|^2 dV = 1 check.
pub fn norm_check(qn: &QuantumNumbers, spec: &QuadratureSpec) -> VerificationReport {
    norm_check_scaled(qn, spec, 1.0)
}

/// Same integral with the wavefunction scaled, so tests can watch a
/// deliberately unnormalized state fail (scale 2 -> norm 4).
pub fn norm_check_scaled(
    qn: &QuantumNumbers,
    spec: &QuadratureSpec,
    scale: f64,
) -> VerificationReport {
    let p = PhysicalParams::for_level(qn.n).expect("valid n");
    let value = overlap(qn, qn, spec, &p) * scale * scale;
    let residual = (value - Complex64::new(1.0, 0.0)).norm();
    let mut params = quadrature_params(spec, qn, qn);
    params["qn"] = json!([qn.n, qn.l, qn.k]);
    params["norm"] = json!(value.re);
    if scale != 1.0 {
        params["scale"] = json!(scale);
    }
    let mut rep = VerificationReport::from_residuals(
        format!("norm_{}_{}_{}", qn.n, qn.l, qn.k),
        params,
        &[residual],
        1e-8,
        None,
    );
    rep.n_samples = spec.grid_points();
    rep
}

/// |<Psi_a | Psi_b>| = delta_ab check.
pub fn orthogonality_check(
    a: &QuantumNumbers,
    b: &QuantumNumbers,
    spec: &QuadratureSpec,
) -> VerificationReport {
    let p = PhysicalParams::for_level(a.n).expect("valid n");
    let value = overlap(a, b, spec, &p);
    let target = if a == b { 1.0 } else { 0.0 };
    let residual = (value - Complex64::new(target, 0.0)).norm();
    let mut params = quadrature_params(spec, a, b);
    params["qn_a"] = json!([a.n, a.l, a.k]);
    params["qn_b"] = json!([b.n, b.l, b.k]);
    params["overlap"] = json!([value.re, value.im]);
    let mut rep = VerificationReport::from_residuals(
        format!(
            "orthogonality_{}_{}_{}_vs_{}_{}_{}",
            a.n, a.l, a.k, b.n, b.l, b.k
        ),
        params,
        &[residual],
        1e-8,
        None,
    );
    rep.n_samples = spec.grid_points();
    rep
}

// ---------------------------------------------------------------------------
// Coordinate identity sweeps

/// Transform identity sweep: squared-length preservation, the plane
/// correlation z1/z2* = i, and the plane product -2i z1 z2 = x1^2 + x2^2,
/// as relative residuals over random events with n cycling through 1..=5.
pub fn identity_sweep(count: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut residuals = Vec::with_capacity(count);
    for i in 0..count {
        let n = (i % 5 + 1) as u32;
        let p = PhysicalParams::for_level(n).expect("valid n");
        let ev = sample_event(&mut rng, &DEFAULT_BAND);
        let cev = coords::to_complex(&ev, &p).expect("finite event");
        let len2 = ev.x1 * ev.x1 + ev.x2 * ev.x2 + ev.x3 * ev.x3;
        let zlen2 = cev.z1.norm_sqr() + cev.z2.norm_sqr() + cev.z3.norm_sqr();
        let iso = (zlen2 - len2).abs() / len2;
        let planar = ev.x1 * ev.x1 + ev.x2 * ev.x2;
        let corr = (cev.z1 / cev.z2.conj() - Complex64::i()).norm();
        let prod = ((-2.0 * Complex64::i() * cev.z1 * cev.z2).re - planar).abs() / planar;
        residuals.push(iso.max(corr).max(prod));
    }
    VerificationReport::from_residuals(
        "transform_identities",
        json!({
            "band": "default",
            "entries": ["isometry", "plane_correlation", "plane_product"],
            "oracle": "real quadratic forms computed directly",
        }),
        &residuals,
        1e-12,
        Some(seed),
    )
}

/// Round-trip sweep: to_complex then to_real reproduces each component to
/// 1e-12 relative.
pub fn round_trip_sweep(count: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut residuals = Vec::with_capacity(count);
    for i in 0..count {
        let n = (i % 5 + 1) as u32;
        let p = PhysicalParams::for_level(n).expect("valid n");
        let ev = sample_event(&mut rng, &DEFAULT_BAND);
        let cev = coords::to_complex(&ev, &p).expect("finite event");
        let back = coords::to_real(&cev, &p).expect("on-image event");
        let res = [
            (back.x1 - ev.x1).abs() / ev.x1.abs().max(1.0),
            (back.x2 - ev.x2).abs() / ev.x2.abs().max(1.0),
            (back.x3 - ev.x3).abs() / ev.x3.abs().max(1.0),
            (back.t - ev.t).abs() / ev.t.abs().max(1.0),
        ];
        residuals.push(max_of(&res));
    }
    VerificationReport::from_residuals(
        "transform_round_trip",
        json!({"band": "default", "normalization": "componentwise, relative to max(1, |x|)"}),
        &residuals,
        1e-12,
        Some(seed),
    )
}

/// Kronecker/independence sweep for the complex-coordinate derivative
/// operators: d z_i / d z_j = delta_ij (tau included), and the conjugate
/// derivatives of the plane coordinates vanish.
pub fn kronecker_sweep(count: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let planes = [Plane::Z1, Plane::Z2, Plane::Z3, Plane::Tau];
    let mut residuals = Vec::with_capacity(count);
    for i in 0..count {
        let n = (i % 3 + 1) as u32;
        let p = PhysicalParams::for_level(n).expect("valid n");
        let ev = sample_event(&mut rng, &RESIDUAL_BAND);
        let mut worst = 0.0f64;
        for op in planes {
            for coord in planes {
                let field = ComplexField::coordinate(coord);
                let d = calculus::d_z(&field, &ev, &p, op).expect("regular point");
                let expect = if op == coord {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                worst = worst.max((d - expect).norm());
            }
        }
        for form in [ConjugateForm::StarOfDerivative, ConjugateForm::DerivativeByConjugate] {
            let z1 = ComplexField::coordinate(Plane::Z1);
            let d = calculus::conjugate_derivative(&z1, &ev, &p, form).expect("regular point");
            worst = worst.max(d.norm());
        }
        // slot Wirtinger conjugate derivatives of the plane coordinates
        for plane in [Plane::Z1, Plane::Z2] {
            let field = ComplexField::coordinate(plane);
            let rep = calculus::cr_residuals(&field, &ev, &p).expect("regular point");
            let name = match plane {
                Plane::Z1 => "cr_z1",
                _ => "cr_z2",
            };
            worst = worst.max(rep.get(name).expect("entry present").magnitude);
        }
        residuals.push(worst);
    }
    VerificationReport::from_residuals(
        "operator_kronecker",
        json!({
            "band": "residual",
            "checks": "16 plane/coordinate pairs, conjugate z1 derivative both forms, slot conjugate residuals",
        }),
        &residuals,
        5e-8,
        Some(seed),
    )
}

/// Constrained-Laplacian sweep: for random polynomials in z1 the equal-step
/// second constrained derivatives (2,0) and (0,2) cancel exactly.
pub fn laplace_sweep(count: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = PhysicalParams::for_level(1).expect("valid n");
    let mut residuals = Vec::with_capacity(count);
    for i in 0..count {
        let degree = 1 + (i % 5);
        let coeffs: Vec<Complex64> = (0..=degree)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let field = ComplexField::z1_polynomial(format!("poly_deg{degree}"), coeffs);
        let ev = sample_event(&mut rng, &SampleBand { r_min: 0.5, r_max: 3.0, sin_floor: 0.1 });
        let cev = coords::to_complex(&ev, &p).expect("finite event");
        let res = calculus::laplace_residual(&field, &cev, &p, Plane::Z1).expect("low order");
        residuals.push(res);
    }
    VerificationReport::from_residuals(
        "constrained_laplacian",
        json!({
            "fields": "random z1 polynomials, degree 1..=5",
            "statement": "d^2/dx1^2 + d^2/dx2^2 vanishes on single-plane holomorphic fields",
        }),
        &residuals,
        1e-6,
        Some(seed),
    )
}

// ---------------------------------------------------------------------------
// Operator eigenvalue checks

/// L^2 eigenvalue check over every (l, k) with l <= l_max: the numerically
/// applied operator on P_l^k(z_theta) z_phi^k reproduces l(l+1) hbar^2.
/// The residual is |lambda_measured - l(l+1)| at sample points where the
/// pattern has healthy magnitude; params record the distance to the
/// rejected alternative eigenvalue l(l-1).
pub fn l2_eigenvalue_check(l_max: u32, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut residuals = Vec::new();
    let mut min_alt_distance = f64::INFINITY;
    for l in 0..=l_max {
        for k in -(l as i32)..=(l as i32) {
            // coarse scan for the pattern's typical scale, for the
            // small-|f| rejection below
            let mut scale = 0.0f64;
            for i in 0..50 {
                let x = -0.9 + 1.8 * i as f64 / 49.0;
                scale = scale.max(specfun::legendre_raw(l, k, x).abs());
            }
            let f = move |c: &coords::ComplexSpherical| {
                let az = match c.z_phi {
                    Some(zp) => zp.powi(k),
                    None => Complex64::new(1.0, 0.0),
                };
                specfun::assoc_legendre_c(l, k, c.z_theta) * az
            };
            for _ in 0..3 {
                let (x, phi) = loop {
                    let x: f64 = rng.gen_range(-0.85..0.85);
                    if specfun::legendre_raw(l, k, x).abs() >= 0.05 * scale.max(1e-30) {
                        break (x, rng.gen_range(-3.0..3.0));
                    }
                };
                let cs = coords::ComplexSpherical::from_angles(1.0, x.acos(), phi)
                    .expect("interior angles");
                let val = hydrogen::l2_apply(f, &cs).expect("interior point");
                let lambda = val / f(&cs);
                let target = (l * (l + 1)) as f64;
                let alt = if l > 0 { (l * (l - 1)) as f64 } else { 0.0 };
                residuals.push((lambda - target).norm());
                if l > 0 {
                    min_alt_distance = min_alt_distance.min((lambda - alt).norm());
                }
            }
        }
    }
    VerificationReport::from_residuals(
        "l2_eigenvalues",
        json!({
            "l_max": l_max,
            "eigenvalue": "l(l+1) hbar^2",
            "rejected_alternative": "l(l-1) hbar^2",
            "min_distance_to_alternative": min_alt_distance,
        }),
        &residuals,
        1e-6,
        Some(seed),
    )
}

/// L_3 eigenvalue check: z_phi^k is an eigenfunction with eigenvalue
/// k hbar for |k| <= k_max.
pub fn l3_eigenvalue_check(k_max: u32, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut residuals = Vec::new();
    for k in -(k_max as i32)..=(k_max as i32) {
        for _ in 0..3 {
            let theta = rng.gen_range(0.4..2.7);
            let phi = rng.gen_range(-3.0..3.0);
            let cs = coords::ComplexSpherical::from_angles(1.0, theta, phi).expect("off axis");
            let f = move |c: &coords::ComplexSpherical| c.z_phi.expect("off axis").powi(k);
            let val = hydrogen::l3_apply(f, &cs).expect("off axis");
            let lambda = val / f(&cs);
            residuals.push((lambda - Complex64::new(k as f64, 0.0)).norm());
        }
    }
    VerificationReport::from_residuals(
        "l3_eigenvalues",
        json!({"k_max": k_max, "eigenvalue": "k hbar"}),
        &residuals,
        1e-7,
        Some(seed),
    )
}

// ---------------------------------------------------------------------------
// Eigensolution checks

/// Holomorphy sweep for one eigensolution: max slot Cauchy-Riemann residual
/// over random off-axis events.
pub fn holomorphy_sweep(qn: &QuantumNumbers, count: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sol = Eigensolution::new(*qn);
    let field = sol.as_field();
    let p = *sol.params();
    let mut residuals = Vec::with_capacity(count);
    for _ in 0..count {
        let ev = sample_event(&mut rng, &HOLOMORPHY_BAND);
        let rep = calculus::cr_residuals(&field, &ev, &p).expect("off-axis event");
        residuals.push(rep.max_magnitude());
    }
    VerificationReport::from_residuals(
        format!("holomorphy_psi_{}_{}_{}", qn.n, qn.l, qn.k),
        json!({
            "qn": [qn.n, qn.l, qn.k],
            "band": "holomorphy",
            "entries": ["cr_tau", "cr_z1", "cr_z2"],
        }),
        &residuals,
        1e-6,
        Some(seed),
    )
}

/// Detector calibration: the conjugate coordinate conj(z1) must show the
/// analytic conjugate-derivative magnitude sqrt(2), confirming the
/// holomorphy detector is live at the same stencil scale.
pub fn holomorphy_detector_check(count: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = PhysicalParams::for_level(2).expect("valid n");
    let field = ComplexField::from_complex("conj_z1", |cev: &coords::ComplexEvent| cev.z1.conj());
    let mut residuals = Vec::with_capacity(count);
    for _ in 0..count {
        let ev = sample_event(&mut rng, &HOLOMORPHY_BAND);
        let rep = calculus::cr_residuals(&field, &ev, &p).expect("off-axis event");
        let cr = rep.get("cr_z1").expect("entry present").magnitude;
        residuals.push((cr - std::f64::consts::SQRT_2).abs());
    }
    VerificationReport::from_residuals(
        "holomorphy_detector_conj_z1",
        json!({"expected_cr_z1": "sqrt(2)", "field": "conj(z1)"}),
        &residuals,
        1e-3,
        Some(seed),
    )
}

/// Wave-equation residual sweep for one eigensolution. Points where |psi|
/// falls below 1e-12 of the sweep's largest magnitude are excluded (no
/// meaningful relative residual near nodal surfaces) and redrawn.
pub fn schrodinger_sweep(qn: &QuantumNumbers, count: usize, seed: u64) -> VerificationReport {
    let sol = Eigensolution::new(*qn);
    let residuals = schrodinger_residuals_of(&sol, count, seed);
    VerificationReport::from_residuals(
        format!("schrodinger_psi_{}_{}_{}", qn.n, qn.l, qn.k),
        json!({
            "qn": [qn.n, qn.l, qn.k],
            "band": "residual",
            "normalization": "relative to |psi| * hbar^2/(2 m a0^2)",
        }),
        &residuals,
        1e-5,
        Some(seed),
    )
}

fn schrodinger_residuals_of(sol: &Eigensolution, count: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = *sol.params();
    // first pass: find the scale of |psi| over candidate points
    let candidates: Vec<(coords::ComplexEvent, f64)> = (0..count * 3)
        .map(|_| {
            let ev = sample_event(&mut rng, &RESIDUAL_BAND);
            let cev = coords::to_complex(&ev, &p).expect("finite event");
            let cs = coords::to_complex_spherical(&cev).expect("off origin");
            let mag = sol.psi_complex(&cs, cev.tau).map(|v| v.norm()).unwrap_or(0.0);
            (cev, mag)
        })
        .collect();
    let max_mag = candidates.iter().map(|(_, m)| *m).fold(0.0f64, f64::max);
    candidates
        .into_iter()
        .filter(|(_, m)| *m > 1e-12 * max_mag)
        .take(count)
        .map(|(cev, _)| hydrogen::schrodinger_residual(sol, &cev, &p).expect("regular point"))
        .collect()
}

/// Energy sensitivity: detuning the energy by 10% must inflate the
/// wave-equation residual by at least 10^3. The reported residual is the
/// ratio max_eigen / max_detuned, passing while it stays below 1e-3.
pub fn schrodinger_sensitivity(qn: &QuantumNumbers, count: usize, seed: u64) -> VerificationReport {
    let sol = Eigensolution::new(*qn);
    let base = schrodinger_residuals_of(&sol, count, seed);
    let detuned_sol = Eigensolution::with_energy(*qn, 1.1 * sol.level().e_hartree)
        .expect("still bound");
    let detuned = schrodinger_residuals_of(&detuned_sol, count, seed);
    let ratio = max_of(&base) / max_of(&detuned);
    VerificationReport::from_residuals(
        format!("schrodinger_sensitivity_{}_{}_{}", qn.n, qn.l, qn.k),
        json!({
            "qn": [qn.n, qn.l, qn.k],
            "max_residual_eigen": max_of(&base),
            "max_residual_detuned": max_of(&detuned),
            "detuning": "E -> 1.1 E_n",
        }),
        &[ratio],
        1e-3,
        Some(seed),
    )
}

/// Separated one-dimensional equation residuals for one eigensolution over
/// sample points; the gating entries feed the residual statistics, and the
/// alternate-reading magnitudes are surfaced in params.
pub fn separated_check(qn: &QuantumNumbers, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sol = Eigensolution::new(*qn);
    let mut residuals = Vec::new();
    let mut alt_max = 0.0f64;
    let mut alt_laguerre_max = 0.0f64;
    for _ in 0..10 {
        let ev = sample_event(&mut rng, &RESIDUAL_BAND);
        let p = sol.params();
        let cev = coords::to_complex(&ev, p).expect("finite event");
        let cs = coords::to_complex_spherical(&cev).expect("off origin");
        let rep = hydrogen::separated_residuals(&sol, &cs).expect("interior point");
        for r in &rep.residuals {
            if r.informational {
                match r.name.as_str() {
                    "radial_alt_coeff" => alt_max = alt_max.max(r.magnitude),
                    "radial_alt_laguerre" => alt_laguerre_max = alt_laguerre_max.max(r.magnitude),
                    _ => {}
                }
            } else if r.magnitude.is_finite() {
                residuals.push(r.magnitude);
            }
        }
    }
    VerificationReport::from_residuals(
        format!("separated_equations_{}_{}_{}", qn.n, qn.l, qn.k),
        json!({
            "qn": [qn.n, qn.l, qn.k],
            "satisfied_radial_reading": "first-order coefficient (2 - xi) on the assembled profile",
            "alt_reading_max_residual": alt_max,
            "alt_reading_on_laguerre_factor_max_residual": alt_laguerre_max,
        }),
        &residuals,
        1e-6,
        Some(seed),
    )
}

/// Equivalence sweep: the complex-coordinate form against the textbook form
/// at random off-axis events, normalized by the sample's largest |psi|.
pub fn equivalence_sweep(qn: &QuantumNumbers, count: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sol = Eigensolution::new(*qn);
    let p = *sol.params();
    let mut diffs = Vec::with_capacity(count);
    let mut max_psi = 0.0f64;
    for _ in 0..count {
        let ev = sample_event(&mut rng, &DEFAULT_BAND);
        let cev = coords::to_complex(&ev, &p).expect("finite event");
        let cs = coords::to_complex_spherical(&cev).expect("off origin");
        let via_complex = sol.psi_complex(&cs, cev.tau).expect("off axis");
        let r = ev.r();
        let theta = (ev.x3 / r).clamp(-1.0, 1.0).acos();
        let phi = ev.x2.atan2(ev.x1);
        let textbook =
            hydrogen::psi_real_textbook(qn, r, theta, phi, ev.t, &p).expect("valid point");
        diffs.push((via_complex - textbook).norm());
        max_psi = max_psi.max(textbook.norm());
    }
    let residuals: Vec<f64> = diffs.iter().map(|d| d / max_psi).collect();
    VerificationReport::from_residuals(
        format!("equivalence_psi_{}_{}_{}", qn.n, qn.l, qn.k),
        json!({
            "qn": [qn.n, qn.l, qn.k],
            "normalization": "relative to max |psi| over the sample",
            "max_abs_psi": max_psi,
        }),
        &residuals,
        1e-9,
        Some(seed),
    )
}

/// Tau-factorization audit: exp(-i E_n tau / hbar) =
/// exp(-i E_n t / hbar) e^{-r/alpha_n} over random (r, t), to 1e-12
/// relative. The check has no free sampling choices beyond (n, count), so
/// the seed is fixed.
pub fn tau_factorization_audit(n: u32, count: usize) -> VerificationReport {
    let seed = 0x7A0F_AC70u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = PhysicalParams::for_level(n).expect("valid n");
    let e = p.energy();
    let alpha = p.alpha();
    let mut residuals = Vec::with_capacity(count);
    for _ in 0..count {
        let r = rng.gen_range(DEFAULT_BAND.r_min.ln()..DEFAULT_BAND.r_max.ln()).exp();
        let t = rng.gen_range(-10.0..10.0);
        let tau = Complex64::new(t, -p.hbar() * r / (alpha * e));
        let lhs = (-Complex64::i() * e * tau / p.hbar()).exp();
        let rhs = (-Complex64::i() * e * t / p.hbar()).exp() * (-r / alpha).exp();
        residuals.push((lhs - rhs).norm() / rhs.norm());
    }
    VerificationReport::from_residuals(
        format!("tau_factorization_n{n}"),
        json!({
            "n": n,
            "statement": "exp(-i E tau / hbar) = exp(-i E t / hbar) * exp(-r / alpha_n)",
        }),
        &residuals,
        1e-12,
        Some(seed),
    )
}

// ---------------------------------------------------------------------------
// Suites

/// Coordinate identity suite: transform identities and the round trip.
pub fn run_identities(seed: u64) -> Vec<VerificationReport> {
    vec![identity_sweep(10_000, seed), round_trip_sweep(10_000, seed)]
}

/// Holomorphy suite: slot Cauchy-Riemann residuals of the named
/// eigensolutions plus the conjugate-field detector calibration.
pub fn run_holomorphy(seed: u64) -> Vec<VerificationReport> {
    let states = [(1, 0, 0), (2, 1, 1), (3, 2, 1)];
    let mut out: Vec<VerificationReport> = states
        .iter()
        .map(|&(n, l, k)| {
            let qn = QuantumNumbers::new(n, l, k).expect("valid state");
            holomorphy_sweep(&qn, 100, seed)
        })
        .collect();
    out.push(holomorphy_detector_check(25, seed));
    out
}

/// Operator suite: Kronecker/independence, the constrained Laplacian, and
/// the angular-momentum eigenvalues.
pub fn run_operators(seed: u64) -> Vec<VerificationReport> {
    vec![
        kronecker_sweep(100, seed),
        laplace_sweep(20, seed),
        l2_eigenvalue_check(4, seed),
        l3_eigenvalue_check(4, seed),
    ]
}

/// Eigensolution suite: spectrum scaling, wave-equation residuals and
/// sensitivity, separated equations, norms and orthogonality through n = 3,
/// textbook equivalence through n = 4, and the tau-factorization audit.
pub fn run_eigen(seed: u64) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    out.push(spectrum_check());

    for qn in QuantumNumbers::states_through(3) {
        out.push(schrodinger_sweep(&qn, 100, seed));
    }
    for &(n, l, k) in &[(1u32, 0u32, 0i32), (2, 1, 1), (3, 2, -2)] {
        let qn = QuantumNumbers::new(n, l, k).expect("valid state");
        out.push(schrodinger_sensitivity(&qn, 40, seed));
    }
    for &(n, l, k) in &[(2u32, 0u32, 0i32), (2, 1, 1), (3, 2, 1), (3, 1, -1)] {
        let qn = QuantumNumbers::new(n, l, k).expect("valid state");
        out.push(separated_check(&qn, seed));
    }

    let spec = QuadratureSpec::default();
    let states3 = QuantumNumbers::states_through(3);
    for qn in &states3 {
        out.push(norm_check(qn, &spec));
    }
    for (i, a) in states3.iter().enumerate() {
        for b in states3.iter().skip(i + 1) {
            out.push(orthogonality_check(a, b, &spec));
        }
    }
    for qn in QuantumNumbers::states_through(4) {
        out.push(equivalence_sweep(&qn, 1_000, seed));
    }
    for n in 1..=4 {
        out.push(tau_factorization_audit(n, 10_000));
    }
    out
}

/// Bound-state spectrum check: E_1 = -1/2 Hartree and exact 1/n^2 scaling.
pub fn spectrum_check() -> VerificationReport {
    let p = PhysicalParams::for_level(1).expect("valid n");
    let mut residuals = Vec::new();
    let e1 = hydrogen::energy(1, &p).expect("n >= 1");
    residuals.push((e1.e_hartree + 0.5).abs());
    for n in 1..=10u32 {
        let en = hydrogen::energy(n, &p).expect("n >= 1");
        residuals.push((en.e_hartree * (n as f64).powi(2) - e1.e_hartree).abs());
    }
    VerificationReport::from_residuals(
        "spectrum_rydberg_scaling",
        json!({
            "e1_hartree": e1.e_hartree,
            "e1_ev": e1.e_ev(),
            "statement": "E_n n^2 = E_1 for n <= 10",
        }),
        &residuals,
        1e-15,
        None,
    )
}

/// Everything, in a fixed deterministic order.
pub fn run_all(seed: u64) -> Vec<VerificationReport> {
    let mut out = run_identities(seed);
    out.extend(run_holomorphy(seed));
    out.extend(run_operators(seed));
    out.extend(run_eigen(seed));
    out
}
