//! Evaluate one eigensolution on a radial ray, next to the textbook form it
//! must reproduce on real points.

use cplanes::coords::ComplexSpherical;
use cplanes::hydrogen::{self, Eigensolution};
use cplanes::specfun::QuantumNumbers;
use num_complex::Complex64;

fn main() {
    let qn = QuantumNumbers::new(2, 1, 1).expect("valid state");
    let sol = Eigensolution::new(qn);
    let p = *sol.params();
    let (theta, phi, t) = (1.1, 0.7, 0.0);

    println!("Psi_{} along theta = {theta}, phi = {phi}, t = {t}\n", qn);
    println!(
        "{:>6}  {:>24}  {:>12}  {:>10}",
        "r", "Psi (complex form)", "|Psi|^2", "|delta|"
    );
    let mut worst = 0.0f64;
    for i in 1..=10 {
        let r = 0.8 * i as f64;
        let cs = ComplexSpherical::from_angles(r, theta, phi).expect("off axis");
        // on the image of a real point, Im tau = -hbar r / (alpha E) = 2 n r
        let tau = Complex64::new(t, -p.hbar() * r / (p.alpha() * p.energy()));
        let psi = sol.psi_complex(&cs, tau).expect("off axis");
        let textbook = hydrogen::psi_real_textbook(&qn, r, theta, phi, t, &p).expect("real point");
        let delta = (psi - textbook).norm();
        worst = worst.max(delta);
        println!(
            "{:>6.2}  {:>11.6} {:+.6}i  {:>12.3e}  {:>10.2e}",
            r,
            psi.re,
            psi.im,
            psi.norm_sqr(),
            delta
        );
    }
    println!("\nworst |complex - textbook| on the ray: {worst:.3e}");
}
