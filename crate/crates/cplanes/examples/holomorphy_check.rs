//! Cauchy-Riemann residuals of an eigensolution, slot by slot, and the
//! conjugate field that the same detector must flag.

use cplanes::calculus::{self, ComplexField};
use cplanes::coords::RealEvent;
use cplanes::hydrogen::Eigensolution;
use cplanes::specfun::QuantumNumbers;

fn main() {
    let sol = Eigensolution::new(QuantumNumbers::new(3, 2, 1).expect("valid state"));
    let field = sol.as_field();
    let p = *sol.params();

    println!("slot Cauchy-Riemann residuals of Psi_3_2_1 (tolerance 1e-6):\n");
    let points = [
        RealEvent::new(1.0, 0.6, -0.8, 0.2),
        RealEvent::new(-1.8, 1.1, 0.5, -0.7),
        RealEvent::new(0.7, -1.9, 1.4, 1.0),
    ];
    for ev in &points {
        let rep = calculus::cr_residuals(&field, ev, &p).expect("off-axis event");
        print!("at ({:>5.2}, {:>5.2}, {:>5.2}):", ev.x1, ev.x2, ev.x3);
        for r in &rep.residuals {
            print!("  {} = {:.2e}", r.name, r.magnitude);
        }
        println!();
    }

    // the same residuals see conj(z1): an anti-holomorphic dependence shows
    // the analytic magnitude sqrt(2) in the z1 slot
    let conj_field = ComplexField::from_complex("conj_z1", |cev| cev.z1.conj());
    let ev = RealEvent::new(1.2, 0.9, 0.4, 0.0);
    let rep = calculus::cr_residuals(&conj_field, &ev, &p).expect("off-axis event");
    println!("\ndetector calibration on conj(z1) (expect cr_z1 near sqrt(2) = 1.4142):");
    for r in &rep.residuals {
        println!("  {} = {:.6}", r.name, r.magnitude);
    }
}
