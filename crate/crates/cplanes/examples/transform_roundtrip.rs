//! Forward transform of a real event, the identities it preserves, and the
//! inverse transform back.

use cplanes::coords::{self, PhysicalParams, RealEvent};

fn main() {
    let p = PhysicalParams::for_level(2).expect("n = 2 is a bound level");
    let ev = RealEvent::new(1.3, -0.4, 0.9, 2.0);
    println!("event: x = ({}, {}, {}), t = {}", ev.x1, ev.x2, ev.x3, ev.t);
    println!("scale: E = {} Ha, alpha = {} a0\n", p.energy(), p.alpha());

    let cev = coords::to_complex(&ev, &p).expect("finite event");
    println!("z1  = {}", cev.z1);
    println!("z2  = {}", cev.z2);
    println!("z3  = {}", cev.z3);
    println!("tau = {}  (s = Im tau = {})\n", cev.tau, cev.s());

    // |z1|^2 + |z2|^2 + z3^2 = |x|^2, z1 = i conj(z2), -2i z1 z2 = x1^2 + x2^2
    let report = coords::identity_residuals(&ev, &p).expect("finite event");
    for r in &report.residuals {
        println!("identity {:<18} residual {:.3e}", r.name, r.magnitude);
    }

    let back = coords::to_real(&cev, &p).expect("image point");
    println!(
        "\nround trip: x = ({}, {}, {}), t = {}",
        back.x1, back.x2, back.x3, back.t
    );
    let err = (back.x1 - ev.x1)
        .abs()
        .max((back.x2 - ev.x2).abs())
        .max((back.x3 - ev.x3).abs())
        .max((back.t - ev.t).abs());
    println!("max componentwise error {err:.3e}");
}
