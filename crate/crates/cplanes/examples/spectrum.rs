//! The bound-state energy ladder and its length scales.

use cplanes::coords::PhysicalParams;
use cplanes::hydrogen;

fn main() {
    let p = PhysicalParams::for_level(1).expect("ground state");
    let levels = hydrogen::spectrum(8, &p).expect("bound levels");

    println!("{:>3}  {:>14}  {:>14}  {:>10}", "n", "E [Ha]", "E [eV]", "alpha [a0]");
    for level in &levels {
        let alpha = hydrogen::alpha_of(level.e_hartree, &p).expect("bound energy");
        println!(
            "{:>3}  {:>14.10}  {:>14.8}  {:>10.4}",
            level.n,
            level.e_hartree,
            level.e_ev(),
            alpha
        );
    }

    // E_n = E_1 / n^2: alpha grows linearly with n, E shrinks quadratically
    let e1 = levels[0].e_hartree;
    let worst = levels
        .iter()
        .map(|l| ((l.e_hartree - e1 / (l.n * l.n) as f64) / l.e_hartree).abs())
        .fold(0.0f64, f64::max);
    println!("\nworst relative deviation from E_1/n^2: {worst:.3e}");
}
