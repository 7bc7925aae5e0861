//! Angular-momentum operators applied by finite differences: L^2 returns
//! l(l+1) hbar^2 on the spherical patterns (and visibly not l(l-1)), and
//! L_3 returns k hbar on z_phi^k.

use cplanes::coords::ComplexSpherical;
use cplanes::hydrogen;
use cplanes::specfun;
use num_complex::Complex64;

fn main() {
    let cs = ComplexSpherical::from_angles(1.0, 1.05, 0.6).expect("off axis");

    println!("{:>3} {:>3}  {:>12}  {:>8}  {:>8}  {:>12}", "l", "k", "L^2 f / f", "l(l+1)", "l(l-1)", "residual");
    for (l, k) in [(1u32, 0i32), (2, 1), (3, -2), (4, 3)] {
        let f = move |c: &ComplexSpherical| {
            let az = c.z_phi.map_or(Complex64::new(1.0, 0.0), |zp| zp.powi(k));
            specfun::assoc_legendre_c(l, k, c.z_theta) * az
        };
        let lambda = hydrogen::l2_apply(f, &cs).expect("interior point") / f(&cs);
        let target = (l * (l + 1)) as f64;
        let alt = (l * (l - 1)) as f64;
        println!(
            "{l:>3} {k:>3}  {:>12.8}  {target:>8}  {alt:>8}  {:>12.3e}",
            lambda.re,
            (lambda - target).norm()
        );
    }

    println!("\n{:>3}  {:>12}  {:>12}", "k", "L_3 f / f", "residual");
    for k in [-3i32, -1, 0, 2, 4] {
        let f = move |c: &ComplexSpherical| c.z_phi.expect("off axis").powi(k);
        let lambda = hydrogen::l3_apply(f, &cs).expect("off axis") / f(&cs);
        println!("{k:>3}  {:>12.8}  {:>12.3e}", lambda.re, (lambda - k as f64).norm());
    }
}
