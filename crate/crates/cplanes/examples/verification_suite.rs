//! Run every verification check and print one line per report, the same
//! adjudication the `cplanes check all` subcommand streams as JSON.

use cplanes::verify;

fn main() {
    let seed = std::env::var("CPLANES_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(2024);
    println!("seed {seed}\n");

    let reports = verify::run_all(seed);
    let mut failed = 0;
    for rep in &reports {
        let verdict = if rep.pass() { "pass" } else { "FAIL" };
        println!(
            "{verdict}  {:<34} max {:>10.3e}  tol {:>8.1e}  ({} samples)",
            rep.check, rep.max_residual, rep.tolerance, rep.n_samples
        );
        if !rep.pass() {
            failed += 1;
        }
    }
    println!("\n{} checks, {failed} failed", reports.len());
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
