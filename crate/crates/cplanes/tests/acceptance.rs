//! Acceptance gate: one test per release criterion, each printing a single
//! verdict line. Run with `cargo test --test acceptance -- --nocapture` to
//! see every line; any failure carries its detail in the panic message.

use std::time::{Duration, Instant};

use cplanes::specfun::QuantumNumbers;
use cplanes::verify::{self, QuadratureSpec, VerificationReport};

const SEED: u64 = 0xACCE_0001;

fn verdict(criterion: u32, name: &str, pass: bool, detail: &str) {
    let word = if pass { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE C{criterion} {name}: {word} ({detail})");
    assert!(pass, "C{criterion} {name}: {detail}");
}

fn within(elapsed: Duration, budget_s: f64) -> bool {
    elapsed.as_secs_f64() < budget_s
}

fn report_line(rep: &VerificationReport) -> String {
    format!(
        "{}: max {:.3e} vs tol {:.1e}",
        rep.check, rep.max_residual, rep.tolerance
    )
}

#[test]
fn c1_transform_identities() {
    let t0 = Instant::now();
    let rep = verify::identity_sweep(10_000, SEED);
    let elapsed = t0.elapsed();
    verdict(
        1,
        "transform identities",
        rep.pass() && rep.tolerance == 1e-12 && rep.n_samples == 10_000 && within(elapsed, 1.0),
        &format!("{}, {} samples, {:?}", report_line(&rep), rep.n_samples, elapsed),
    );
}

#[test]
fn c2_round_trip() {
    let t0 = Instant::now();
    let rep = verify::round_trip_sweep(10_000, SEED);
    let elapsed = t0.elapsed();
    verdict(
        2,
        "transform round trip",
        rep.pass() && rep.tolerance == 1e-12 && rep.n_samples == 10_000 && within(elapsed, 1.0),
        &format!("{}, {} samples, {:?}", report_line(&rep), rep.n_samples, elapsed),
    );
}

#[test]
fn c3_derivative_kronecker_property() {
    let t0 = Instant::now();
    let rep = verify::kronecker_sweep(100, SEED);
    let elapsed = t0.elapsed();
    verdict(
        3,
        "plane derivative independence",
        rep.pass() && rep.tolerance == 5e-8 && within(elapsed, 5.0),
        &format!("{}, {:?}", report_line(&rep), elapsed),
    );
}

#[test]
fn c4_eigensolution_holomorphy() {
    let t0 = Instant::now();
    let states = [(1, 0, 0), (2, 1, 1), (3, 2, 1)];
    let mut pass = true;
    let mut detail = String::new();
    for (n, l, k) in states {
        let qn = QuantumNumbers::new(n, l, k).expect("valid state");
        let rep = verify::holomorphy_sweep(&qn, 100, SEED);
        pass &= rep.pass() && rep.tolerance == 1e-6 && rep.n_samples == 100;
        detail.push_str(&format!("{}; ", report_line(&rep)));
    }
    let elapsed = t0.elapsed();
    pass &= within(elapsed, 10.0);
    detail.push_str(&format!("{elapsed:?}"));
    verdict(4, "eigensolution holomorphy", pass, &detail);
}

#[test]
fn c5_laplace_property() {
    let t0 = Instant::now();
    let rep = verify::laplace_sweep(20, SEED);
    let elapsed = t0.elapsed();
    verdict(
        5,
        "constrained Laplace property",
        rep.pass() && rep.tolerance == 1e-6 && within(elapsed, 2.0),
        &format!("{}, {} polynomials, {:?}", report_line(&rep), rep.n_samples, elapsed),
    );
}

#[test]
fn c6_angular_operator_eigenvalues() {
    let t0 = Instant::now();
    let l2 = verify::l2_eigenvalue_check(4, SEED);
    let l3 = verify::l3_eigenvalue_check(4, SEED);
    let elapsed = t0.elapsed();
    let min_alt = l2.params["min_distance_to_alternative"]
        .as_f64()
        .expect("recorded distance");
    // the rejected alternative eigenvalue l(l-1) sits at distance 2l >= 2
    let pass = l2.pass()
        && l2.tolerance == 1e-6
        && l3.pass()
        && l3.tolerance == 1e-7
        && min_alt > 1.0
        && within(elapsed, 5.0);
    verdict(
        6,
        "angular momentum eigenvalues",
        pass,
        &format!(
            "{}; {}; distance to l(l-1): {min_alt:.3}; {elapsed:?}",
            report_line(&l2),
            report_line(&l3)
        ),
    );
}

#[test]
fn c7_energy_spectrum() {
    let t0 = Instant::now();
    let rep = verify::spectrum_check();
    let p = cplanes::PhysicalParams::for_level(1).expect("ground state");
    let e1 = cplanes::hydrogen::energy(1, &p).expect("ground state");
    let mut pass = rep.pass();
    pass &= e1.e_hartree == -0.5;
    pass &= (e1.e_ev() - (-13.6057)).abs() < 0.001;
    for n in 1..=10 {
        let en = cplanes::hydrogen::energy(n, &p).expect("bound level");
        let scaling = e1.e_hartree / (n * n) as f64;
        pass &= ((en.e_hartree - scaling) / scaling).abs() < 1e-15;
    }
    let elapsed = t0.elapsed();
    pass &= within(elapsed, 1.0);
    verdict(
        7,
        "energy spectrum",
        pass,
        &format!(
            "E1 = {} Ha = {:.4} eV, E_n = E1/n^2 through n = 10, {}, {elapsed:?}",
            e1.e_hartree,
            e1.e_ev(),
            report_line(&rep)
        ),
    );
}

#[test]
fn c8_wave_equation_residuals() {
    let t0 = Instant::now();
    let mut pass = true;
    let mut worst = f64::NEG_INFINITY;
    let mut worst_state = String::new();
    let mut min_inflation = f64::INFINITY;
    for qn in QuantumNumbers::states_through(3) {
        let rep = verify::schrodinger_sweep(&qn, 100, SEED);
        pass &= rep.pass() && rep.tolerance == 1e-5 && rep.n_samples == 100;
        if rep.max_residual > worst {
            worst = rep.max_residual;
            worst_state = rep.check.clone();
        }
        let sens = verify::schrodinger_sensitivity(&qn, 30, SEED);
        pass &= sens.pass();
        let inflation = 1.0 / sens.max_residual;
        min_inflation = min_inflation.min(inflation);
    }
    let elapsed = t0.elapsed();
    pass &= min_inflation >= 1e3;
    pass &= within(elapsed, 30.0);
    verdict(
        8,
        "wave equation residuals",
        pass,
        &format!(
            "all (n,l,k) n <= 3: worst {worst:.3e} ({worst_state}) vs tol 1e-5; \
             10% detuning inflates >= {min_inflation:.1e}x; {elapsed:?}"
        ),
    );
}

#[test]
fn c9_separated_equations() {
    let t0 = Instant::now();
    let mut pass = true;
    let mut detail = String::new();
    for qn in QuantumNumbers::states_through(3) {
        let rep = verify::separated_check(&qn, SEED);
        pass &= rep.pass() && rep.tolerance == 1e-6;
        // both radial readings must be on record: the satisfied coefficient
        // and the alternate's residual on profile and bare Laguerre factor
        pass &= rep.params["satisfied_radial_reading"].is_string();
        pass &= rep.params["alt_reading_max_residual"].is_number();
        pass &= rep.params["alt_reading_on_laguerre_factor_max_residual"].is_number();
        if qn.l > 0 {
            // for l > 0 the alternate coefficient misses the assembled profile
            pass &= rep.params["alt_reading_max_residual"].as_f64().unwrap() > 1e-3;
        }
        if rep.max_residual > 1e-7 {
            detail.push_str(&format!("{}; ", report_line(&rep)));
        }
    }
    let elapsed = t0.elapsed();
    pass &= within(elapsed, 5.0);
    detail.push_str(&format!(
        "satisfied reading: (2 - xi) on assembled profile; {elapsed:?}"
    ));
    verdict(9, "separated equations", pass, &detail);
}

#[test]
fn c10_textbook_equivalence() {
    let t0 = Instant::now();
    let mut pass = true;
    let mut worst = f64::NEG_INFINITY;
    for qn in QuantumNumbers::states_through(4) {
        let rep = verify::equivalence_sweep(&qn, 1000, SEED);
        pass &= rep.pass() && rep.tolerance == 1e-9 && rep.n_samples == 1000;
        worst = worst.max(rep.max_residual);
    }
    let elapsed = t0.elapsed();
    pass &= within(elapsed, 20.0);
    verdict(
        10,
        "textbook equivalence",
        pass,
        &format!(
            "30 states (n <= 4) x 1000 points: worst relative delta {worst:.3e} vs 1e-9; {elapsed:?}"
        ),
    );
}

#[test]
fn c11_normalization_and_orthogonality() {
    let t0 = Instant::now();
    let spec = QuadratureSpec::default();
    let states = QuantumNumbers::states_through(3);
    let mut pass = true;
    let mut worst_norm = f64::NEG_INFINITY;
    let mut worst_overlap = f64::NEG_INFINITY;
    for qn in &states {
        let rep = verify::norm_check(qn, &spec);
        pass &= rep.pass() && rep.tolerance == 1e-8;
        worst_norm = worst_norm.max(rep.max_residual);
    }
    let mut pairs = 0usize;
    for (i, a) in states.iter().enumerate() {
        for b in states.iter().skip(i + 1) {
            let rep = verify::orthogonality_check(a, b, &spec);
            pass &= rep.pass() && rep.tolerance == 1e-8;
            worst_overlap = worst_overlap.max(rep.max_residual);
            pairs += 1;
        }
    }
    let elapsed = t0.elapsed();
    pass &= pairs == states.len() * (states.len() - 1) / 2;
    pass &= within(elapsed, 20.0);
    verdict(
        11,
        "normalization and orthogonality",
        pass,
        &format!(
            "{} norms worst {worst_norm:.3e}, {pairs} pairs worst {worst_overlap:.3e}, \
             tol 1e-8; {elapsed:?}",
            states.len()
        ),
    );
}

#[test]
fn c12_tau_factorization() {
    let t0 = Instant::now();
    let mut pass = true;
    let mut worst = f64::NEG_INFINITY;
    for n in 1..=4 {
        let rep = verify::tau_factorization_audit(n, 10_000);
        pass &= rep.pass() && rep.tolerance == 1e-12 && rep.n_samples == 10_000;
        worst = worst.max(rep.max_residual);
    }
    let elapsed = t0.elapsed();
    pass &= within(elapsed, 1.0);
    verdict(
        12,
        "tau factorization",
        pass,
        &format!("n = 1..4, 10^4 samples each, worst {worst:.3e} vs 1e-12; {elapsed:?}"),
    );
}
