//! Command-line front end: coordinate transforms, the bound-state spectrum,
//! wavefunction grid export, and the verification suites.
//!
//! All commands accept `--units {au, si}` (atomic units default); SI values
//! convert at this boundary only. Exit codes: 0 success or all checks pass,
//! 1 domain or check failure, 2 usage error. `check` reads its default seed
//! from the `CPLANES_SEED` environment variable.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::coords::{self, PhysicalParams, RealEvent};
use crate::hydrogen::{self, Eigensolution};
use crate::specfun::QuantumNumbers;
use crate::units::{self, UnitSystem};
use crate::verify;

/// Seed used when neither --seed nor CPLANES_SEED is given.
pub const DEFAULT_SEED: u64 = 1_618_033;

const VERSION: &str = env!("CARGO_PKG_VERSION");
const CONVENTION: &str = "CondonShortley,expPlusIkPhi";

#[derive(Parser, Debug)]
#[command(
    name = "cplanes",
    version,
    about = "Isometric complex-plane coordinates and the hydrogen bound states"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Map a real event (x1, x2, x3, t) into the three complex planes
    Transform(TransformArgs),
    /// Print the bound-state energy table
    Spectrum(SpectrumArgs),
    /// Evaluate an eigensolution on a grid and write CSV or JSON
    Wavefunction(WavefunctionArgs),
    /// Run verification suites, streaming one JSON report per line
    Check(CheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum UnitsArg {
    Au,
    Si,
}

impl UnitsArg {
    fn system(self) -> UnitSystem {
        match self {
            UnitsArg::Au => UnitSystem::Atomic,
            UnitsArg::Si => UnitSystem::Si,
        }
    }
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("scale").required(true).args(["n", "energy"])))]
struct TransformArgs {
    /// The three spatial coordinates x1 x2 x3
    #[arg(long, num_args = 3, required = true, allow_negative_numbers = true)]
    x: Vec<f64>,
    /// Time coordinate
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    t: f64,
    /// Principal quantum number; fixes E = E_n
    #[arg(long)]
    n: Option<u32>,
    /// Bound-state energy (Hartree in au, Joules in si); must be negative
    #[arg(long = "E", allow_negative_numbers = true)]
    energy: Option<f64>,
    #[arg(long, value_enum, default_value_t = UnitsArg::Au)]
    units: UnitsArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Pretty,
    Csv,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    /// Highest principal quantum number to tabulate
    #[arg(long = "n-max")]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = TableFormat::Pretty)]
    format: TableFormat,
    #[arg(long, value_enum, default_value_t = UnitsArg::Au)]
    units: UnitsArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GridCoordsArg {
    Spherical,
    Cartesian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct WavefunctionArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    l: u32,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    k: i32,
    #[arg(long, value_enum, default_value_t = GridCoordsArg::Spherical)]
    coords: GridCoordsArg,
    /// Radial axis: "start:stop:count" or a single held value
    #[arg(long, default_value = "0:5:6", allow_hyphen_values = true)]
    r: String,
    /// Polar angle axis (radians)
    #[arg(long, default_value = "1.5707963267948966", allow_hyphen_values = true)]
    theta: String,
    /// Azimuthal angle axis (radians)
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    phi: String,
    /// Cartesian axes for --coords cartesian
    #[arg(long, default_value = "0:5:6", allow_hyphen_values = true)]
    x1: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    x2: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    x3: String,
    /// Time value for the whole grid
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    t: f64,
    /// Output file; stdout when omitted
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also evaluate the textbook form and append the max |delta| summary
    #[arg(long)]
    compare: bool,
    #[arg(long, value_enum, default_value_t = FileFormat::Csv)]
    format: FileFormat,
    #[arg(long, value_enum, default_value_t = UnitsArg::Au)]
    units: UnitsArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Identities,
    Holomorphy,
    Operators,
    Eigen,
    All,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Which suite to run
    #[arg(value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// RNG seed for the randomized sweeps
    #[arg(long, env = "CPLANES_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = UnitsArg::Au)]
    units: UnitsArg,
}

// ---------------------------------------------------------------------------
// Grid specification

/// One axis of a grid: a held value (count = 1) or an inclusive linear range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl AxisSpec {
    /// Parse "start:stop:count" or a bare held value.
    pub fn parse(text: &str) -> Result<AxisSpec, String> {
        let parts: Vec<&str> = text.split(':').collect();
        let spec = match parts.as_slice() {
            [v] => {
                let v: f64 = v.trim().parse().map_err(|_| format!("bad axis value '{text}'"))?;
                AxisSpec { start: v, stop: v, count: 1 }
            }
            [a, b, c] => {
                let start: f64 =
                    a.trim().parse().map_err(|_| format!("bad axis start in '{text}'"))?;
                let stop: f64 =
                    b.trim().parse().map_err(|_| format!("bad axis stop in '{text}'"))?;
                let count: usize =
                    c.trim().parse().map_err(|_| format!("bad axis count in '{text}'"))?;
                AxisSpec { start, stop, count }
            }
            _ => return Err(format!("axis spec '{text}' is not 'start:stop:count' or a value")),
        };
        if !(spec.start.is_finite() && spec.stop.is_finite()) {
            return Err(format!("axis range in '{text}' must be finite"));
        }
        if spec.count == 0 {
            return Err(format!("axis '{text}' produces a zero-point grid"));
        }
        if spec.start != spec.stop && spec.count < 2 {
            return Err(format!("swept axis '{text}' needs at least 2 points"));
        }
        Ok(spec)
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count).map(|i| self.start + step * i as f64).collect()
    }
}

/// A full evaluation grid: three axes in either spherical (r, theta, phi)
/// or cartesian (x1, x2, x3) coordinates, plus a common time value.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub spherical: bool,
    pub axes: [AxisSpec; 3],
    pub t: f64,
}

impl GridSpec {
    pub fn total_points(&self) -> usize {
        self.axes.iter().map(|a| a.count).product()
    }
}

// ---------------------------------------------------------------------------
// Entry point

/// Parse `args` (including the program name) and run; command output goes to
/// `out`, diagnostics to stderr. Returns the process exit code.
pub fn run_from<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // help/version surface through clap as "errors" with exit code 0
            let code = if err.use_stderr() { 2 } else { 0 };
            if err.use_stderr() {
                eprintln!("{err}");
            } else {
                let _ = write!(out, "{err}");
            }
            return code;
        }
    };
    let result = match cli.cmd {
        Command::Transform(args) => cmd_transform(&args, out),
        Command::Spectrum(args) => cmd_spectrum(&args, out),
        Command::Wavefunction(args) => cmd_wavefunction(&args, out),
        Command::Check(args) => cmd_check(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            1
        }
    }
}

fn fmt_complex(c: Complex64) -> String {
    if c.im >= 0.0 || c.im.is_nan() {
        format!("{}+{}i", c.re, c.im)
    } else {
        format!("{}-{}i", c.re, -c.im)
    }
}

fn params_from(n: Option<u32>, energy: Option<f64>, sys: UnitSystem) -> Result<PhysicalParams, String> {
    let p = match (n, energy) {
        (Some(n), None) => PhysicalParams::for_level(n),
        (None, Some(e)) => PhysicalParams::bound(sys.energy_in(e)),
        _ => unreachable!("clap group enforces exactly one"),
    };
    p.map(|p| p.with_units(sys)).map_err(|e| e.to_string())
}

fn cmd_transform(args: &TransformArgs, out: &mut impl Write) -> Result<i32, String> {
    let sys = args.units.system();
    let p = params_from(args.n, args.energy, sys)?;
    let ev = RealEvent::new(
        sys.length_in(args.x[0]),
        sys.length_in(args.x[1]),
        sys.length_in(args.x[2]),
        sys.time_in(args.t),
    );
    let cev = coords::to_complex(&ev, &p).map_err(|e| e.to_string())?;
    let report = coords::identity_residuals(&ev, &p).map_err(|e| e.to_string())?;

    let scale = |c: Complex64| Complex64::new(sys.length_out(c.re), sys.length_out(c.im));
    let tau = Complex64::new(sys.time_out(cev.tau.re), sys.time_out(cev.tau.im));
    writeln!(out, "z1 = {}", fmt_complex(scale(cev.z1))).map_err(|e| e.to_string())?;
    writeln!(out, "z2 = {}", fmt_complex(scale(cev.z2))).map_err(|e| e.to_string())?;
    writeln!(out, "z3 = {}", fmt_complex(scale(cev.z3))).map_err(|e| e.to_string())?;
    writeln!(out, "tau = {}", fmt_complex(tau)).map_err(|e| e.to_string())?;
    writeln!(out, "units = {}", sys.label()).map_err(|e| e.to_string())?;
    for res in &report.residuals {
        let status = match res.status {
            crate::report::CheckStatus::Pass => "pass",
            crate::report::CheckStatus::Fail => "fail",
            crate::report::CheckStatus::Skipped => "skipped",
        };
        if res.magnitude.is_nan() {
            writeln!(out, "residual {} = n/a ({status})", res.name).map_err(|e| e.to_string())?;
        } else {
            writeln!(out, "residual {} = {:e} ({status})", res.name, res.magnitude)
                .map_err(|e| e.to_string())?;
        }
    }
    Ok(0)
}

fn cmd_spectrum(args: &SpectrumArgs, out: &mut impl Write) -> Result<i32, String> {
    if args.n_max < 1 {
        return Err("--n-max must be at least 1".into());
    }
    let sys = args.units.system();
    let p = PhysicalParams::for_level(1).expect("level 1 exists").with_units(sys);
    let levels = hydrogen::spectrum(args.n_max, &p).map_err(|e| e.to_string())?;
    let (e_label, a_label) = match sys {
        UnitSystem::Atomic => ("E [Ha]", "alpha [a0]"),
        UnitSystem::Si => ("E [J]", "alpha [m]"),
    };
    match args.format {
        TableFormat::Pretty => {
            writeln!(out, "{:>4}  {:>22}  {:>16}  {:>22}", "n", e_label, "E [eV]", a_label)
                .map_err(|e| e.to_string())?;
            for level in &levels {
                let alpha = hydrogen::alpha_of(level.e_hartree, &p).map_err(|e| e.to_string())?;
                writeln!(
                    out,
                    "{:>4}  {:>22.15e}  {:>16.10}  {:>22.15e}",
                    level.n,
                    sys.energy_out(level.e_hartree),
                    level.e_ev(),
                    sys.length_out(alpha),
                )
                .map_err(|e| e.to_string())?;
            }
        }
        TableFormat::Csv => {
            writeln!(out, "# cplanes v{VERSION} units={} convention={CONVENTION}", sys.label())
                .map_err(|e| e.to_string())?;
            writeln!(out, "n,e_energy,e_ev,alpha").map_err(|e| e.to_string())?;
            for level in &levels {
                let alpha = hydrogen::alpha_of(level.e_hartree, &p).map_err(|e| e.to_string())?;
                writeln!(
                    out,
                    "{},{},{},{}",
                    level.n,
                    sys.energy_out(level.e_hartree),
                    level.e_ev(),
                    sys.length_out(alpha),
                )
                .map_err(|e| e.to_string())?;
            }
        }
    }
    Ok(0)
}

struct GridRow {
    coords: [f64; 3],
    on_axis: bool,
    psi: Option<Complex64>,
    textbook: Option<Complex64>,
}

fn evaluate_grid(
    sol: &Eigensolution,
    grid: &GridSpec,
    sys: UnitSystem,
    compare: bool,
) -> Result<Vec<GridRow>, String> {
    let p = sol.params();
    let t_au = sys.time_in(grid.t);
    let mut rows = Vec::with_capacity(grid.total_points());
    let psi_out_scale = match sys {
        UnitSystem::Atomic => 1.0,
        UnitSystem::Si => 1.0 / units::BOHR_M.powf(1.5),
    };
    for a in grid.axes[0].values() {
        for b in grid.axes[1].values() {
            for c in grid.axes[2].values() {
                let (cs, tau, spherical_pt) = if grid.spherical {
                    let r = sys.length_in(a);
                    if r < 0.0 {
                        return Err(format!("negative radius {a} in grid"));
                    }
                    let cs = coords::ComplexSpherical::from_angles(r, b, c)
                        .map_err(|e| e.to_string())?;
                    let tau = Complex64::new(t_au, -p.time_coupling() * r);
                    (cs, tau, (r, b, c))
                } else {
                    let ev = RealEvent::new(
                        sys.length_in(a),
                        sys.length_in(b),
                        sys.length_in(c),
                        t_au,
                    );
                    let r = ev.r();
                    let theta = if r == 0.0 { 0.0 } else { (ev.x3 / r).clamp(-1.0, 1.0).acos() };
                    let phi = ev.x2.atan2(ev.x1);
                    let cs = coords::ComplexSpherical::from_angles(r, theta, phi)
                        .map_err(|e| e.to_string())?;
                    let tau = Complex64::new(t_au, -p.time_coupling() * r);
                    (cs, tau, (r, theta, phi))
                };
                let psi = match sol.psi_complex(&cs, tau) {
                    Ok(v) => Some(v * psi_out_scale),
                    Err(hydrogen::HydrogenError::OnAxisWithK { .. }) => None,
                    Err(e) => return Err(e.to_string()),
                };
                let textbook = if compare && psi.is_some() {
                    let (r, theta, phi) = spherical_pt;
                    Some(
                        hydrogen::psi_real_textbook(&sol.qn(), r, theta, phi, t_au, p)
                            .map_err(|e| e.to_string())?
                            * psi_out_scale,
                    )
                } else {
                    None
                };
                rows.push(GridRow { coords: [a, b, c], on_axis: psi.is_none(), psi, textbook });
            }
        }
    }
    Ok(rows)
}

fn cmd_wavefunction(args: &WavefunctionArgs, out: &mut impl Write) -> Result<i32, String> {
    let qn = QuantumNumbers::new(args.n, args.l, args.k).map_err(|e| e.to_string())?;
    let sys = args.units.system();
    let spherical = args.coords == GridCoordsArg::Spherical;
    let axis_texts: [&String; 3] = if spherical {
        [&args.r, &args.theta, &args.phi]
    } else {
        [&args.x1, &args.x2, &args.x3]
    };
    let axes = [
        AxisSpec::parse(axis_texts[0])?,
        AxisSpec::parse(axis_texts[1])?,
        AxisSpec::parse(axis_texts[2])?,
    ];
    let grid = GridSpec { spherical, axes, t: args.t };
    if grid.total_points() == 0 {
        return Err("grid has no points".into());
    }
    let sol = Eigensolution::new(qn);
    let rows = evaluate_grid(&sol, &grid, sys, args.compare)?;

    let mut text = String::new();
    match args.format {
        FileFormat::Csv => render_csv(&qn, &grid, sys, args.compare, &rows, &mut text),
        FileFormat::Json => render_json(&qn, &grid, sys, args.compare, &rows, &mut text),
    }

    match &args.output {
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string())?,
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?,
    }
    Ok(0)
}

fn max_abs_delta(rows: &[GridRow]) -> f64 {
    rows.iter()
        .filter_map(|row| match (row.psi, row.textbook) {
            (Some(a), Some(b)) => Some((a - b).norm()),
            _ => None,
        })
        .fold(0.0, f64::max)
}

fn render_csv(
    qn: &QuantumNumbers,
    grid: &GridSpec,
    sys: UnitSystem,
    compare: bool,
    rows: &[GridRow],
    text: &mut String,
) {
    use std::fmt::Write as _;
    let _ = writeln!(
        text,
        "# cplanes v{VERSION} qn={},{},{} units={} convention={CONVENTION}",
        qn.n,
        qn.l,
        qn.k,
        sys.label()
    );
    let names = if grid.spherical { ["r", "theta", "phi"] } else { ["x1", "x2", "x3"] };
    let mut header = format!("{},{},{},t,re_psi,im_psi,abs2_psi,on_axis", names[0], names[1], names[2]);
    if compare {
        header.push_str(",re_psi_textbook,im_psi_textbook");
    }
    let _ = writeln!(text, "{header}");
    for row in rows {
        let _ = write!(text, "{},{},{},{}", row.coords[0], row.coords[1], row.coords[2], grid.t);
        match row.psi {
            Some(v) => {
                let _ = write!(text, ",{},{},{},0", v.re, v.im, v.norm_sqr());
            }
            None => {
                let _ = write!(text, ",,,,1");
            }
        }
        if compare {
            match row.textbook {
                Some(v) => {
                    let _ = write!(text, ",{},{}", v.re, v.im);
                }
                None => {
                    let _ = write!(text, ",,");
                }
            }
        }
        text.push('\n');
    }
    if compare {
        let _ = writeln!(text, "# max_abs_delta={:e}", max_abs_delta(rows));
    }
}

fn render_json(
    qn: &QuantumNumbers,
    grid: &GridSpec,
    sys: UnitSystem,
    compare: bool,
    rows: &[GridRow],
    text: &mut String,
) {
    let names = if grid.spherical { ["r", "theta", "phi"] } else { ["x1", "x2", "x3"] };
    let rows_json: Vec<serde_json::Value> = rows
        .iter()
        .map(|row| {
            let mut obj = serde_json::json!({
                names[0]: row.coords[0],
                names[1]: row.coords[1],
                names[2]: row.coords[2],
                "t": grid.t,
                "on_axis": row.on_axis,
                "re_psi": row.psi.map(|v| v.re),
                "im_psi": row.psi.map(|v| v.im),
                "abs2_psi": row.psi.map(|v| v.norm_sqr()),
            });
            if compare {
                obj["re_psi_textbook"] = serde_json::json!(row.textbook.map(|v| v.re));
                obj["im_psi_textbook"] = serde_json::json!(row.textbook.map(|v| v.im));
            }
            obj
        })
        .collect();
    let mut doc = serde_json::json!({
        "tool": format!("cplanes v{VERSION}"),
        "qn": [qn.n, qn.l, qn.k],
        "units": sys.label(),
        "convention": CONVENTION,
        "rows": rows_json,
    });
    if compare {
        doc["max_abs_delta"] = serde_json::json!(max_abs_delta(rows));
    }
    text.push_str(&serde_json::to_string_pretty(&doc).expect("serializable"));
    text.push('\n');
}

fn cmd_check(args: &CheckArgs, out: &mut impl Write) -> Result<i32, String> {
    let reports = match args.suite {
        Suite::Identities => verify::run_identities(args.seed),
        Suite::Holomorphy => verify::run_holomorphy(args.seed),
        Suite::Operators => verify::run_operators(args.seed),
        Suite::Eigen => verify::run_eigen(args.seed),
        Suite::All => verify::run_all(args.seed),
    };
    let mut failed = 0usize;
    for report in &reports {
        let line = serde_json::to_string(report).map_err(|e| e.to_string())?;
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
        if !report.pass() {
            failed += 1;
        }
    }
    eprintln!(
        "{} checks, {} failed (suite {:?}, seed {})",
        reports.len(),
        failed,
        args.suite,
        args.seed
    );
    Ok(if failed == 0 { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run_from(args.iter().copied(), &mut buf);
        (code, String::from_utf8(buf).expect("utf8 output"))
    }

    #[test]
    fn transform_unit_x1() {
        let (code, text) = run(&["cplanes", "transform", "--x", "1", "0", "0", "--t", "0", "--n", "1"]);
        assert_eq!(code, 0, "{text}");
        assert!(text.contains("z1 = 0.7071067811865475+0i"), "{text}");
        assert!(text.contains("tau = 0+2i"), "{text}");
        assert!(text.contains("residual isometry"), "{text}");
    }

    #[test]
    fn transform_pure_time() {
        let (code, text) = run(&["cplanes", "transform", "--x", "0", "0", "0", "--t", "1", "--n", "1"]);
        assert_eq!(code, 0);
        assert!(text.contains("tau = 1+0i"), "{text}");
    }

    #[test]
    fn transform_rejects_unbound_energy() {
        let (code, _) = run(&["cplanes", "transform", "--x", "1", "0", "0", "--E", "0.5"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn transform_requires_a_scale() {
        let (code, _) = run(&["cplanes", "transform", "--x", "1", "0", "0"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn spectrum_reference_rows() {
        let (code, text) = run(&["cplanes", "spectrum", "--n-max", "3", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(text.starts_with("# cplanes v"), "{text}");
        assert!(text.contains("convention=CondonShortley,expPlusIkPhi"));
        assert!(text.contains("1,-0.5,-13.605693122994,1"), "{text}");
        assert!(text.contains("2,-0.125,"), "{text}");
        let (code, text) = run(&["cplanes", "spectrum", "--n-max", "1"]);
        assert_eq!(code, 0);
        assert_eq!(text.lines().count(), 2, "{text}");
    }

    #[test]
    fn spectrum_rejects_zero() {
        let (code, _) = run(&["cplanes", "spectrum", "--n-max", "0"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn wavefunction_ground_state_slice() {
        let (code, text) = run(&[
            "cplanes",
            "wavefunction",
            "--n",
            "1",
            "--l",
            "0",
            "--r",
            "0:5:6",
            "--theta",
            "1.5707963267948966",
            "--phi",
            "0",
            "--compare",
        ]);
        assert_eq!(code, 0, "{text}");
        assert!(text.contains("qn=1,0,0"));
        let lines: Vec<&str> = text.lines().collect();
        // header comment + column row + 6 data rows + compare summary
        assert_eq!(lines.len(), 9, "{text}");
        // |psi|^2 at r = 0 is 1/pi; at r = 1 it is e^{-2}/pi
        let first: Vec<&str> = lines[2].split(',').collect();
        let abs2: f64 = first[6].parse().unwrap();
        assert!((abs2 - 1.0 / std::f64::consts::PI).abs() < 1e-12, "{abs2}");
        let second: Vec<&str> = lines[3].split(',').collect();
        let abs2: f64 = second[6].parse().unwrap();
        assert!((abs2 - (-2.0f64).exp() / std::f64::consts::PI).abs() < 1e-12, "{abs2}");
        let summary = lines[8];
        assert!(summary.starts_with("# max_abs_delta="), "{summary}");
        let delta: f64 = summary.trim_start_matches("# max_abs_delta=").parse().unwrap();
        assert!(delta < 1e-9, "{delta}");
    }

    #[test]
    fn wavefunction_flags_axis_points() {
        let (code, text) = run(&[
            "cplanes",
            "wavefunction",
            "--n",
            "2",
            "--l",
            "1",
            "--k",
            "1",
            "--r",
            "1:3:3",
            "--theta",
            "0",
            "--phi",
            "0",
        ]);
        assert_eq!(code, 0, "{text}");
        for line in text.lines().skip(2) {
            assert!(line.ends_with(",,,,1"), "axis rows must be flagged: {line}");
        }
    }

    #[test]
    fn wavefunction_rejects_empty_grid() {
        let (code, _) = run(&[
            "cplanes",
            "wavefunction",
            "--n",
            "1",
            "--l",
            "0",
            "--r",
            "0:5:0",
        ]);
        assert_eq!(code, 1);
    }

    #[test]
    fn wavefunction_json_format() {
        let (code, text) = run(&[
            "cplanes",
            "wavefunction",
            "--n",
            "1",
            "--l",
            "0",
            "--r",
            "1",
            "--theta",
            "1",
            "--phi",
            "1",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0);
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["qn"], serde_json::json!([1, 0, 0]));
        assert_eq!(doc["rows"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn check_identities_suite_passes_and_reproduces() {
        let (code, text) = run(&["cplanes", "check", "identities", "--seed", "7"]);
        assert_eq!(code, 0, "{text}");
        assert_eq!(text.lines().count(), 2);
        for line in text.lines() {
            let doc: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(doc["verdict"], "pass", "{line}");
            assert_eq!(doc["seed"], 7);
        }
        let (_, again) = run(&["cplanes", "check", "identities", "--seed", "7"]);
        assert_eq!(text, again, "same seed must give byte-identical output");
        let (_, other) = run(&["cplanes", "check", "identities", "--seed", "8"]);
        assert_ne!(text, other);
    }

    #[test]
    fn check_rejects_unknown_suite() {
        let (code, _) = run(&["cplanes", "check", "everything"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn axis_spec_parsing() {
        assert_eq!(
            AxisSpec::parse("0:5:6").unwrap(),
            AxisSpec { start: 0.0, stop: 5.0, count: 6 }
        );
        assert_eq!(AxisSpec::parse("2.5").unwrap(), AxisSpec { start: 2.5, stop: 2.5, count: 1 });
        assert!(AxisSpec::parse("0:5:1").is_err());
        assert!(AxisSpec::parse("0:5:0").is_err());
        assert!(AxisSpec::parse("a:b:c").is_err());
        assert!(AxisSpec::parse("1:inf:4").is_err());
    }

    #[test]
    fn si_units_convert_at_the_boundary() {
        // 1 Bohr radius given in meters comes back as the same transform
        let (code, text) = run(&[
            "cplanes",
            "transform",
            "--x",
            "5.29177210903e-11",
            "0",
            "0",
            "--t",
            "0",
            "--n",
            "1",
            "--units",
            "si",
        ]);
        assert_eq!(code, 0);
        // z1 printed back in meters: (1 a0)/sqrt(2) = 3.742e-11 m
        assert!(text.contains("z1 = 0.000000000037"), "{text}");
    }
}
