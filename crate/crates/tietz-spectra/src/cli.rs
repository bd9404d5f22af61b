//! Batch command-line front end.
//!
//! Six subcommands cover the workflow: `classify` (which regime a parameter
//! set falls in), `levels` (bound-state energies), `potential` (sampled
//! curve data), `wavefunction` (sampled normalized chi), `verify` (analytic
//! solver against the Numerov oracle) and `molecules` (the builtin table
//! plus user records).
//!
//! Output is CSV (header row, `.` decimal mark) or JSON (one object with
//! `params`, `regime` and `results`); every float is printed at 12
//! significant digits and both formats carry identical numeric values.
//! Exit codes are a stable contract: 0 success, 1 verification failure,
//! 2 usage or parameter error, 3 numerical warning state (possible missed
//! roots, oracle non-convergence, coarse-grid warning).

use crate::model::{regime_for, PotentialParams, Regime};
use crate::moldb::{builtin_molecules, load_molecules, MoleculeRecord};
use crate::oracle::{numerov_levels, richardson_check, CentrifugalMode, NumerovConfig};
use crate::spectra::{
    case1_levels, morse_levels, transcendental_case2_levels, transcendental_case3_levels,
    BoundLevel, RootScanConfig,
};
use crate::wavefn::Wavefunction;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL_WARNING: i32 = 3;

/// Environment variable naming a default molecule records file.
pub const DATA_ENV_VAR: &str = "TIETZ_SPECTRA_DATA";

#[derive(Parser)]
#[command(
    name = "tietz-spectra",
    version,
    about = "Bound states of diatomic molecules in the Tietz-Wei potential"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report the regime (Case1/Case2/Case3/Morse) for the given parameters
    Classify {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Bound-state energies for the active regime
    Levels {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Orbital quantum number (Case1 only; other regimes force l = 0)
        #[arg(long)]
        l: Option<usize>,
        /// Restrict output to a single radial quantum number
        #[arg(long = "n-r")]
        n_r: Option<usize>,
        /// Energy-grid points for the transcendental root scan
        #[arg(long = "scan-points")]
        scan_points: Option<usize>,
        /// Bisection tolerance override for the root scan
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Sample the potential curve V(r)
    Potential {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// First sample radius (default: just above the domain start)
        #[arg(long = "r-start")]
        r_start: Option<f64>,
        /// Last sample radius (default: r_e + 10/b_h)
        #[arg(long = "r-stop")]
        r_stop: Option<f64>,
        /// Number of samples
        #[arg(long, default_value_t = 400)]
        grid: usize,
    },
    /// Sample a normalized bound-state wave function
    Wavefunction {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Radial quantum number
        #[arg(long = "n-r", default_value_t = 0)]
        n_r: usize,
        /// Orbital quantum number (Case1 only)
        #[arg(long, default_value_t = 0)]
        l: usize,
        /// Number of samples
        #[arg(long, default_value_t = 1001)]
        grid: usize,
        #[arg(long = "scan-points")]
        scan_points: Option<usize>,
    },
    /// Run the analytic solver and the Numerov oracle side by side
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Orbital quantum number (Case1 only)
        #[arg(long)]
        l: Option<usize>,
        /// Centrifugal treatment for the oracle at l > 0
        #[arg(long, value_enum, default_value_t = CentrifugalArg::Approximated)]
        centrifugal: CentrifugalArg,
        /// Numerov grid points
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long = "scan-points")]
        scan_points: Option<usize>,
        /// Pass/fail tolerance on relative deviations
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Print the builtin molecule table plus any loaded records
    Molecules {
        /// Additional molecule records file
        #[arg(long)]
        file: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Clone)]
struct ParamArgs {
    /// Unit system: natural (hbar = 1) or molecular (eV, Angstrom, amu)
    #[arg(long, value_enum, default_value_t = UnitMode::Natural)]
    units: UnitMode,
    /// Well depth D (eV in molecular units)
    #[arg(long = "D")]
    depth: Option<f64>,
    /// Reduced mass (amu in molecular units; natural default 0.5 so that
    /// hbar^2/2mu = 1)
    #[arg(long)]
    mu: Option<f64>,
    /// Range parameter b_h (1/Angstrom in molecular units)
    #[arg(long = "b-h")]
    b_h: Option<f64>,
    /// Equilibrium bond length r_e
    #[arg(long = "r-e")]
    r_e: Option<f64>,
    /// Deformation parameter, |c_h| < 1
    #[arg(long = "c-h", allow_negative_numbers = true)]
    c_h: Option<f64>,
    /// Take b_h and r_e (and D, mu if recorded) from a named molecule
    #[arg(long)]
    molecule: Option<String>,
    /// Additional molecule records file
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum UnitMode {
    Natural,
    Molecular,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CentrifugalArg {
    Exact,
    Approximated,
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(CliError { message, code }) => {
            eprintln!("error: {message}");
            code
        }
    }
}

struct CliError {
    message: String,
    code: i32,
}

impl CliError {
    fn usage<S: Into<String>>(message: S) -> Self {
        CliError {
            message: message.into(),
            code: EXIT_USAGE,
        }
    }

    fn numerical<S: Into<String>>(message: S) -> Self {
        CliError {
            message: message.into(),
            code: EXIT_NUMERICAL_WARNING,
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Classify { params, output } => cmd_classify(&params, &output),
        Command::Levels {
            params,
            output,
            l,
            n_r,
            scan_points,
            tol,
        } => cmd_levels(&params, &output, l, n_r, scan_points, tol),
        Command::Potential {
            params,
            output,
            r_start,
            r_stop,
            grid,
        } => cmd_potential(&params, &output, r_start, r_stop, grid),
        Command::Wavefunction {
            params,
            output,
            n_r,
            l,
            grid,
            scan_points,
        } => cmd_wavefunction(&params, &output, n_r, l, grid, scan_points),
        Command::Verify {
            params,
            output,
            l,
            centrifugal,
            grid,
            scan_points,
            tol,
        } => cmd_verify(&params, &output, l, centrifugal, grid, scan_points, tol),
        Command::Molecules { file, output } => cmd_molecules(file.as_deref(), &output),
    }
}

// ---------------------------------------------------------------------------
// Parameter resolution

struct Resolved {
    b_h: f64,
    r_e: f64,
    c_h: f64,
    depth: Option<f64>,
    mu: Option<f64>,
    units: UnitMode,
}

fn molecule_records(extra_file: Option<&std::path::Path>) -> Result<Vec<MoleculeRecord>, CliError> {
    let mut records = builtin_molecules();
    if let Ok(path) = std::env::var(DATA_ENV_VAR) {
        if !path.is_empty() {
            let loaded = load_molecules(&path)
                .map_err(|e| CliError::usage(format!("{DATA_ENV_VAR} ({path}): {e}")))?;
            records.extend(loaded);
        }
    }
    if let Some(path) = extra_file {
        let loaded = load_molecules(path)
            .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
        records.extend(loaded);
    }
    Ok(records)
}

fn find_molecule(records: &[MoleculeRecord], name: &str) -> Result<MoleculeRecord, CliError> {
    let lowered = name.to_lowercase();
    if let Some(exact) = records.iter().find(|r| r.name.to_lowercase() == lowered) {
        return Ok(exact.clone());
    }
    let matches: Vec<&MoleculeRecord> = records
        .iter()
        .filter(|r| r.name.to_lowercase().starts_with(&lowered))
        .collect();
    match matches.len() {
        0 => Err(CliError::usage(format!("no molecule named '{name}'"))),
        1 => Ok(matches[0].clone()),
        _ => Err(CliError::usage(format!(
            "molecule '{name}' is ambiguous: {}",
            matches
                .iter()
                .map(|r| r.name.as_str())
                .collect::<Vec<_>>()
                .join(", ")
        ))),
    }
}

fn resolve(args: &ParamArgs) -> Result<Resolved, CliError> {
    let record = match &args.molecule {
        Some(name) => Some(find_molecule(
            &molecule_records(args.file.as_deref())?,
            name,
        )?),
        None => None,
    };
    let b_h = args
        .b_h
        .or(record.as_ref().map(|r| r.b_h))
        .ok_or_else(|| CliError::usage("--b-h is required (or use --molecule)"))?;
    let r_e = args
        .r_e
        .or(record.as_ref().map(|r| r.r_e))
        .ok_or_else(|| CliError::usage("--r-e is required (or use --molecule)"))?;
    let c_h = args
        .c_h
        .or(record.as_ref().and_then(|r| r.c_h))
        .ok_or_else(|| CliError::usage("--c-h is required"))?;
    crate::model::validate_geometry(b_h, r_e, c_h).map_err(|e| CliError::usage(e.to_string()))?;
    Ok(Resolved {
        b_h,
        r_e,
        c_h,
        depth: args.depth.or(record.as_ref().and_then(|r| r.well_depth)),
        mu: args.mu.or(record.as_ref().and_then(|r| r.mu)),
        units: args.units,
    })
}

impl Resolved {
    fn params(&self) -> Result<PotentialParams, CliError> {
        let depth = self
            .depth
            .ok_or_else(|| CliError::usage("--D (well depth) is required for this command"))?;
        match self.units {
            UnitMode::Natural => PotentialParams::natural(
                depth,
                self.r_e,
                self.b_h,
                self.c_h,
                self.mu.unwrap_or(0.5),
            ),
            UnitMode::Molecular => {
                let mu = self
                    .mu
                    .ok_or_else(|| CliError::usage("--mu (amu) is required in molecular units"))?;
                PotentialParams::molecular(depth, self.r_e, self.b_h, self.c_h, mu)
            }
        }
        .map_err(|e| CliError::usage(e.to_string()))
    }

    fn params_json(&self) -> Value {
        let mut map = serde_json::Map::new();
        map.insert(
            "units".into(),
            Value::String(
                match self.units {
                    UnitMode::Natural => "natural",
                    UnitMode::Molecular => "molecular",
                }
                .into(),
            ),
        );
        map.insert("b_h".into(), num12(self.b_h));
        map.insert("r_e".into(), num12(self.r_e));
        map.insert("c_h".into(), num12(self.c_h));
        map.insert("D".into(), self.depth.map_or(Value::Null, num12));
        map.insert("mu".into(), self.mu.map_or(Value::Null, num12));
        Value::Object(map)
    }
}

// ---------------------------------------------------------------------------
// Report emission

#[derive(Clone)]
enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Empty,
}

struct Report {
    params: Value,
    regime: Option<String>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

/// All floating output at 12 significant digits.
fn fmt12(x: f64) -> String {
    format!("{x:.11e}")
}

/// The same rounding applied to JSON numbers, so CSV and JSON emissions of
/// one run carry identical values.
fn num12(x: f64) -> Value {
    let rounded: f64 = fmt12(x).parse().unwrap_or(x);
    serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

fn csv_escape(text: &str) -> String {
    if text.contains(',') || text.contains('"') || text.contains('\n') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn emit(report: &Report, output: &OutputArgs) -> Result<(), CliError> {
    let mut body = String::new();
    match output.format {
        OutputFormat::Csv => {
            body.push_str(&report.columns.join(","));
            body.push('\n');
            for row in &report.rows {
                let line: Vec<String> = row
                    .iter()
                    .map(|cell| match cell {
                        Cell::Num(x) => fmt12(*x),
                        Cell::Int(i) => i.to_string(),
                        Cell::Text(t) => csv_escape(t),
                        Cell::Empty => String::new(),
                    })
                    .collect();
                body.push_str(&line.join(","));
                body.push('\n');
            }
        }
        OutputFormat::Json => {
            let results: Vec<Value> = report
                .rows
                .iter()
                .map(|row| {
                    let mut obj = serde_json::Map::new();
                    for (name, cell) in report.columns.iter().zip(row) {
                        let value = match cell {
                            Cell::Num(x) => num12(*x),
                            Cell::Int(i) => Value::Number((*i).into()),
                            Cell::Text(t) => Value::String(t.clone()),
                            Cell::Empty => Value::Null,
                        };
                        obj.insert((*name).into(), value);
                    }
                    Value::Object(obj)
                })
                .collect();
            let doc = json!({
                "params": report.params,
                "regime": report.regime.as_deref().map_or(Value::Null, |r| Value::String(r.into())),
                "results": results,
            });
            body = serde_json::to_string_pretty(&doc).expect("json serialization");
            body.push('\n');
        }
    }
    match &output.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .map_err(|e| CliError::usage(format!("cannot write to stdout: {e}")))
        }
    }
}

fn level_row(level: &BoundLevel) -> Vec<Cell> {
    vec![
        Cell::Int(level.n_r as i64),
        Cell::Int(level.l as i64),
        Cell::Num(level.energy),
        Cell::Text(level.method.to_string()),
        Cell::Num(level.residual),
    ]
}

// ---------------------------------------------------------------------------
// Commands

fn cmd_classify(args: &ParamArgs, output: &OutputArgs) -> Result<i32, CliError> {
    let resolved = resolve(args)?;
    let regime = regime_for(resolved.b_h, resolved.r_e, resolved.c_h);
    let threshold = (-resolved.b_h * resolved.r_e).exp();
    let (r0, offset) = match regime {
        Regime::Case1 { r0 } => (Cell::Num(r0), Cell::Empty),
        Regime::Case2 { xi0 } => (Cell::Empty, Cell::Num(xi0)),
        Regime::Case3 { x0 } => (Cell::Empty, Cell::Num(x0)),
        Regime::Morse => (Cell::Empty, Cell::Empty),
    };
    let report = Report {
        params: resolved.params_json(),
        regime: Some(regime.label().into()),
        columns: vec![
            "regime",
            "description",
            "c_h",
            "c_h_min",
            "r0",
            "boundary_offset",
        ],
        rows: vec![vec![
            Cell::Text(regime.label().into()),
            Cell::Text(regime.description().into()),
            Cell::Num(resolved.c_h),
            Cell::Num(threshold),
            r0,
            offset,
        ]],
    };
    emit(&report, output)?;
    Ok(EXIT_OK)
}

fn scan_config(p: &PotentialParams, scan_points: Option<usize>, tol: Option<f64>) -> RootScanConfig {
    let mut cfg = RootScanConfig::for_params(p);
    if let Some(n) = scan_points {
        cfg.grid_points = n;
    }
    if let Some(t) = tol {
        cfg.bisect_rel_tol = t;
    }
    cfg
}

fn regime_levels(
    p: &PotentialParams,
    l_arg: Option<usize>,
    scan_points: Option<usize>,
    tol: Option<f64>,
) -> Result<(Vec<BoundLevel>, usize, bool), CliError> {
    let regime = crate::model::classify_regime(p);
    let mut warned = false;
    let l = match regime {
        Regime::Case1 { .. } => l_arg.unwrap_or(0),
        _ => {
            if l_arg.unwrap_or(0) > 0 {
                eprintln!(
                    "notice: {} treats s waves only; forcing l = 0",
                    regime.label()
                );
            }
            0
        }
    };
    let levels = match regime {
        Regime::Case1 { .. } => {
            let approx = crate::model::fit_centrifugal_approx(p)
                .map_err(|e| CliError::usage(e.to_string()))?;
            case1_levels(p, l, &approx).map_err(|e| CliError::usage(e.to_string()))?
        }
        Regime::Case2 { .. } => {
            let outcome = transcendental_case2_levels(p, &scan_config(p, scan_points, tol))
                .map_err(|e| CliError::usage(e.to_string()))?;
            for w in &outcome.warnings {
                eprintln!("warning: {}", w.message);
                warned = true;
            }
            outcome.levels
        }
        Regime::Case3 { .. } => {
            let outcome = transcendental_case3_levels(p, &scan_config(p, scan_points, tol))
                .map_err(|e| CliError::usage(e.to_string()))?;
            for w in &outcome.warnings {
                eprintln!("warning: {}", w.message);
                warned = true;
            }
            outcome.levels
        }
        Regime::Morse => morse_levels(p).map_err(|e| CliError::usage(e.to_string()))?,
    };
    Ok((levels, l, warned))
}

fn cmd_levels(
    args: &ParamArgs,
    output: &OutputArgs,
    l: Option<usize>,
    n_r: Option<usize>,
    scan_points: Option<usize>,
    tol: Option<f64>,
) -> Result<i32, CliError> {
    let resolved = resolve(args)?;
    let p = resolved.params()?;
    let regime = crate::model::classify_regime(&p);
    let (levels, _, warned) = regime_levels(&p, l, scan_points, tol)?;
    let selected: Vec<&BoundLevel> = match n_r {
        Some(n) => {
            if n >= levels.len() {
                return Err(CliError::usage(format!(
                    "n_r = {n} exceeds the bound-state count (n_r,max = {})",
                    levels.len().saturating_sub(1)
                )));
            }
            levels.iter().filter(|lv| lv.n_r == n).collect()
        }
        None => levels.iter().collect(),
    };
    let report = Report {
        params: resolved.params_json(),
        regime: Some(regime.label().into()),
        columns: vec!["n_r", "l", "energy", "method", "residual"],
        rows: selected.iter().map(|lv| level_row(lv)).collect(),
    };
    emit(&report, output)?;
    Ok(if warned {
        EXIT_NUMERICAL_WARNING
    } else {
        EXIT_OK
    })
}

fn cmd_potential(
    args: &ParamArgs,
    output: &OutputArgs,
    r_start: Option<f64>,
    r_stop: Option<f64>,
    grid: usize,
) -> Result<i32, CliError> {
    let resolved = resolve(args)?;
    let p = resolved.params()?;
    let regime = crate::model::classify_regime(&p);
    let start_floor = regime.domain_start();
    let r_start = r_start.unwrap_or(start_floor + 1e-3 / p.b_h);
    let r_stop = r_stop.unwrap_or(p.r_e + 10.0 / p.b_h);
    if !(r_start < r_stop) {
        return Err(CliError::usage("r-start must be below r-stop"));
    }
    if grid < 2 {
        return Err(CliError::usage("grid must have at least 2 samples"));
    }
    if let Regime::Case1 { r0 } = regime {
        if r_start <= r0 {
            return Err(CliError::usage(format!(
                "Case1 potential is singular at r0 = {}; r-start must lie above it",
                fmt12(r0)
            )));
        }
    }
    if r_start <= 0.0 {
        return Err(CliError::usage("r-start must be positive"));
    }
    let mut rows = Vec::with_capacity(grid);
    for i in 0..grid {
        let r = r_start + (r_stop - r_start) * i as f64 / (grid - 1) as f64;
        let v = crate::model::potential_eval(&p, r).map_err(|e| CliError::usage(e.to_string()))?;
        rows.push(vec![Cell::Num(r), Cell::Num(v)]);
    }
    let report = Report {
        params: resolved.params_json(),
        regime: Some(regime.label().into()),
        columns: vec!["r", "V"],
        rows,
    };
    emit(&report, output)?;
    Ok(EXIT_OK)
}

fn build_wavefunction(
    p: &PotentialParams,
    n_r: usize,
    l: usize,
    scan_points: Option<usize>,
) -> Result<Wavefunction, CliError> {
    let regime = crate::model::classify_regime(p);
    match regime {
        Regime::Case1 { .. } => {
            let approx = crate::model::fit_centrifugal_approx(p)
                .map_err(|e| CliError::usage(e.to_string()))?;
            Wavefunction::case1(p, l, n_r, &approx).map_err(|e| CliError::usage(e.to_string()))
        }
        Regime::Case2 { .. } | Regime::Case3 { .. } => {
            if l > 0 {
                eprintln!(
                    "notice: {} treats s waves only; forcing l = 0",
                    regime.label()
                );
            }
            let scan = scan_config(p, scan_points, None);
            let levels = match regime {
                Regime::Case2 { .. } => transcendental_case2_levels(p, &scan),
                _ => transcendental_case3_levels(p, &scan),
            }
            .map_err(|e| CliError::usage(e.to_string()))?
            .levels;
            if n_r >= levels.len() {
                return Err(CliError::usage(format!(
                    "n_r = {n_r} exceeds the bound-state count (n_r,max = {})",
                    levels.len().saturating_sub(1)
                )));
            }
            match regime {
                Regime::Case2 { .. } => Wavefunction::case2(p, &levels[n_r]),
                _ => Wavefunction::case3(p, &levels[n_r]),
            }
            .map_err(|e| CliError::usage(e.to_string()))
        }
        Regime::Morse => {
            if l > 0 {
                eprintln!("notice: Morse treats s waves only; forcing l = 0");
            }
            Wavefunction::morse(p, n_r).map_err(|e| CliError::usage(e.to_string()))
        }
    }
}

fn cmd_wavefunction(
    args: &ParamArgs,
    output: &OutputArgs,
    n_r: usize,
    l: usize,
    grid: usize,
    scan_points: Option<usize>,
) -> Result<i32, CliError> {
    let resolved = resolve(args)?;
    let p = resolved.params()?;
    let regime = crate::model::classify_regime(&p);
    if grid < 2 {
        return Err(CliError::usage("grid must have at least 2 samples"));
    }
    let wf = build_wavefunction(&p, n_r, l, scan_points)?;
    let start = wf.domain_start();
    let span = (p.r_e - start).abs().max(1.0 / p.b_h);
    let r_first = start + 1e-10 * span;
    let r_last = wf.radius_where_below(1e-9);
    let mut rows = Vec::with_capacity(grid);
    for i in 0..grid {
        let r = r_first + (r_last - r_first) * i as f64 / (grid - 1) as f64;
        let chi = wf.eval(r).map_err(|e| CliError::usage(e.to_string()))?;
        rows.push(vec![Cell::Num(r), Cell::Num(chi)]);
    }
    let report = Report {
        params: resolved.params_json(),
        regime: Some(regime.label().into()),
        columns: vec!["r", "chi"],
        rows,
    };
    emit(&report, output)?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    args: &ParamArgs,
    output: &OutputArgs,
    l: Option<usize>,
    centrifugal: CentrifugalArg,
    grid: Option<usize>,
    scan_points: Option<usize>,
    tol: Option<f64>,
) -> Result<i32, CliError> {
    let resolved = resolve(args)?;
    let p = resolved.params()?;
    let regime = crate::model::classify_regime(&p);
    let (analytic, l, _) = regime_levels(&p, l, scan_points, None)?;
    let informational =
        matches!(regime, Regime::Case1 { .. }) && l > 0 && centrifugal == CentrifugalArg::Exact;
    let tolerance = tol.unwrap_or(match regime {
        Regime::Case2 { .. } | Regime::Case3 { .. } => 1e-5,
        _ => 1e-6,
    });

    let mut cfg = NumerovConfig::for_params(&p);
    if let Some(n) = grid {
        cfg.n_points = n;
    }
    cfg.centrifugal_mode = if l == 0 {
        CentrifugalMode::None
    } else {
        match centrifugal {
            CentrifugalArg::Exact => CentrifugalMode::Exact,
            CentrifugalArg::Approximated => CentrifugalMode::Approximated,
        }
    };

    let oracle = numerov_levels(&p, l, &cfg, analytic.len().max(1) + 1)
        .map_err(|e| CliError::numerical(e.to_string()))?;
    let richardson =
        richardson_check(&p, l, &cfg).map_err(|e| CliError::numerical(e.to_string()))?;
    // The oracle is only trustworthy when halving its step barely moves the
    // levels; a shift within an order of magnitude of the comparison
    // tolerance voids the comparison.
    let coarse = richardson.max_shift_rel > 0.1 * tolerance;

    let mut rows = Vec::new();
    let mut failed = analytic.len() != oracle.len() && !informational;
    if analytic.len() != oracle.len() {
        eprintln!(
            "warning: level counts differ (analytic {}, oracle {})",
            analytic.len(),
            oracle.len()
        );
    }
    for (a, o) in analytic.iter().zip(oracle.iter()) {
        let dev = ((a.energy - o.energy) / o.energy).abs();
        let status = if informational {
            "info"
        } else if dev <= tolerance {
            "pass"
        } else {
            failed = true;
            "fail"
        };
        rows.push(vec![
            Cell::Int(a.n_r as i64),
            Cell::Int(a.l as i64),
            Cell::Num(a.energy),
            Cell::Num(o.energy),
            Cell::Num(dev),
            Cell::Text(status.into()),
        ]);
    }
    let report = Report {
        params: resolved.params_json(),
        regime: Some(regime.label().into()),
        columns: vec!["n_r", "l", "e_analytic", "e_oracle", "rel_dev", "status"],
        rows,
    };
    emit(&report, output)?;
    if coarse {
        eprintln!(
            "warning: Numerov grid too coarse (halving the step shifts levels by {:.3e}); \
             rerun with a larger --grid",
            richardson.max_shift_rel
        );
        return Ok(EXIT_NUMERICAL_WARNING);
    }
    Ok(if failed { EXIT_VERIFY_FAIL } else { EXIT_OK })
}

fn cmd_molecules(file: Option<&std::path::Path>, output: &OutputArgs) -> Result<i32, CliError> {
    let records = molecule_records(file)?;
    let rows = records
        .iter()
        .map(|r| {
            vec![
                Cell::Text(r.name.clone()),
                Cell::Num(r.b_h),
                Cell::Num(r.r_e),
                Cell::Num(r.c_h_min()),
                r.well_depth.map_or(Cell::Empty, Cell::Num),
                r.mu.map_or(Cell::Empty, Cell::Num),
            ]
        })
        .collect();
    let report = Report {
        params: Value::Object(serde_json::Map::new()),
        regime: None,
        columns: vec!["name", "b_h", "r_e", "c_h_min", "D", "mu"],
        rows,
    };
    emit(&report, output)?;
    Ok(EXIT_OK)
}
