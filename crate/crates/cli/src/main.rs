//! `rydberg`: entropies of hydrogenic Rydberg states from the command line.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod table;
mod values;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rydberg_core::asymptotics::{asymptotic_norm, classify_regime, p_airy_bessel, RegimeClass};
use rydberg_core::entropy::{entropy_report, Backend, EntropyConfig, EntropyReport};
use rydberg_core::exec::{self, Strategy};
use rydberg_core::figures::{self, Axis, Series};
use rydberg_core::hydrogenic::QuantumState;
use rydberg_core::norms::{hydrogenic_norm_ln, DEFAULT_TOL};
use thiserror::Error;

use table::{Cell, Format, Table};
use values::parse_values;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    NotConverged(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

impl From<rydberg_core::Error> for CliError {
    fn from(e: rydberg_core::Error) -> Self {
        match e {
            rydberg_core::Error::NotConverged { .. } => CliError::NotConverged(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::NotConverged(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "rydberg", version, about = "Rényi, Shannon and Tsallis entropies of D-dimensional hydrogenic states")]
struct Cli {
    /// Relative quadrature tolerance.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Output format (eval defaults to json, the other commands to csv).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; 1 runs sequentially.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Entropies of one state at one order p.
    Eval(EvalArgs),
    /// Exact norm against its large-n leading term along n.
    Compare(CompareArgs),
    /// Entropies along one axis, or a figure preset.
    Sweep(SweepArgs),
    /// Regime of (D, p) on a grid, with the boundary points.
    Regimes(RegimeArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Exact,
    Asymptotic,
    Both,
}

impl BackendArg {
    fn backends(self) -> Vec<Backend> {
        match self {
            BackendArg::Exact => vec![Backend::Exact],
            BackendArg::Asymptotic => vec![Backend::Asymptotic],
            BackendArg::Both => vec![Backend::Exact, Backend::Asymptotic],
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SingleBackend {
    Exact,
    Asymptotic,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long = "D")]
    dim: f64,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    l: u32,
    /// μ₂ … μ_{D−1} (the last one is m); zeros when omitted.
    #[arg(long, num_args = 1.., allow_negative_numbers = true)]
    mu: Option<Vec<i64>>,
    #[arg(long = "Z", default_value_t = 1.0)]
    z: f64,
    #[arg(long)]
    p: f64,
    #[arg(long, value_enum, default_value = "exact")]
    backend: SingleBackend,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long = "D")]
    dim: f64,
    #[arg(long, default_value_t = 0)]
    l: u32,
    #[arg(long = "Z", default_value_t = 1.0)]
    z: f64,
    #[arg(long)]
    p: f64,
    /// n values: "start:stop:step" or a comma list.
    #[arg(long, default_value = "50:200:50")]
    n: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AxisArg {
    N,
    P,
    #[value(name = "Z")]
    Z,
    #[value(name = "D")]
    D,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum, conflicts_with = "axis")]
    preset: Option<Preset>,
    #[arg(long, value_enum, required_unless_present = "preset")]
    axis: Option<AxisArg>,
    /// Axis values: "start:stop:step" or a comma list; overrides a preset's.
    #[arg(long)]
    values: Option<String>,
    #[arg(long = "D", default_value_t = 3.0)]
    dim: f64,
    #[arg(long, default_value_t = 100)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    l: u32,
    #[arg(long = "Z", default_value_t = 1.0)]
    z: f64,
    #[arg(long, default_value_t = 2.0)]
    p: f64,
    /// Defaults to the preset's backend, else exact.
    #[arg(long, value_enum)]
    backend: Option<BackendArg>,
}

#[derive(Args)]
struct RegimeArgs {
    #[arg(long = "D", default_value = "2:12:1")]
    dim: String,
    #[arg(long, default_value = "0.25:10:0.25")]
    p: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    if !(cli.tol > 0.0 && cli.tol < 1.0) {
        return Err(CliError::Invalid(format!("--tol must lie in (0, 1), got {}", cli.tol)));
    }
    let strategy = configure_threads(cli.threads)?;
    let cfg = EntropyConfig { tol: cli.tol, strategy };
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match &cli.command {
        Command::Eval(a) => {
            let report = eval(a, &cfg)?;
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => {
                    serde_json::to_writer_pretty(&mut sink, &report_json(&report))
                        .map_err(|e| CliError::Io(e.into()))?;
                    writeln!(sink)?;
                }
                Format::Csv => {
                    let mut t = Table::new(REPORT_COLUMNS.to_vec());
                    t.push(report_row("point", "", None, &report, report.method.label()));
                    t.write(Format::Csv, &mut sink)?;
                }
            }
        }
        Command::Compare(a) => compare(a, &cfg)?.write(cli.format.unwrap_or(Format::Csv), &mut sink)?,
        Command::Sweep(a) => sweep(a, &cfg)?.write(cli.format.unwrap_or(Format::Csv), &mut sink)?,
        Command::Regimes(a) => regimes(a)?.write(cli.format.unwrap_or(Format::Csv), &mut sink)?,
    }
    sink.flush()?;
    Ok(())
}

fn configure_threads(threads: Option<usize>) -> CliResult<Strategy> {
    match threads {
        None => Ok(Strategy::default()),
        Some(0) => Err(CliError::Invalid("--threads must be at least 1".into())),
        Some(1) => Ok(Strategy::Sequential),
        #[cfg(feature = "parallel")]
        Some(n) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| CliError::Invalid(format!("thread pool: {e}")))?;
            Ok(Strategy::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(Strategy::Sequential),
    }
}

fn state_from(dim: f64, n: u32, l: u32, z: f64, mu: Option<Vec<i64>>) -> CliResult<QuantumState> {
    let d = QuantumState::dimension_from_real(dim)?;
    let mu = mu.unwrap_or_else(|| vec![0; d as usize - 2]);
    Ok(QuantumState::new(d, z, n, l, mu)?)
}

fn eval(a: &EvalArgs, cfg: &EntropyConfig) -> CliResult<EntropyReport> {
    let state = state_from(a.dim, a.n, a.l, a.z, a.mu.clone())?;
    let backend = match a.backend {
        SingleBackend::Exact => Backend::Exact,
        SingleBackend::Asymptotic => Backend::Asymptotic,
    };
    Ok(entropy_report(&state, a.p, backend, cfg)?)
}

fn report_json(r: &EntropyReport) -> serde_json::Value {
    let mut v = serde_json::to_value(r).expect("report serializes");
    let label = r.regime.map(|c| c.kind.label());
    v["regime_label"] = serde_json::Value::from(label);
    v
}

const REPORT_COLUMNS: [&str; 17] = [
    "series",
    "axis",
    "value",
    "D",
    "n",
    "l",
    "Z",
    "p",
    "backend",
    "method",
    "regime",
    "R_p",
    "W_p",
    "T_p",
    "S",
    "error_estimate",
    "offset_unknown",
];

fn report_row(series: &str, axis: &str, value: Option<f64>, r: &EntropyReport, method: &str) -> Vec<Cell> {
    vec![
        series.into(),
        axis.into(),
        Cell::opt(value),
        Cell::Int(r.state.dim as i64),
        Cell::Int(r.state.n as i64),
        Cell::Int(r.state.l as i64),
        Cell::Num(r.state.z),
        Cell::Num(r.p),
        r.method.label().into(),
        method.into(),
        r.regime.map_or(Cell::Empty, |c| c.kind.label().into()),
        Cell::Num(r.r_p),
        Cell::Num(r.w_p),
        Cell::Num(r.t_p),
        Cell::opt(r.s),
        Cell::opt(r.error_estimate),
        Cell::Bool(r.offset_unknown),
    ]
}

fn compare(a: &CompareArgs, cfg: &EntropyConfig) -> CliResult<Table> {
    let ns = parse_values(&a.n).map_err(CliError::Invalid)?;
    let states: Vec<QuantumState> = ns
        .iter()
        .map(|&n| {
            if n.fract() != 0.0 || n < 1.0 {
                return Err(CliError::Invalid(format!("n must be a positive integer, got {n}")));
            }
            state_from(a.dim, n as u32, a.l, a.z, None)
        })
        .collect::<CliResult<_>>()?;
    let rows = exec::map(cfg.strategy, &states, |st| -> CliResult<Vec<Cell>> {
        let exact = hydrogenic_norm_ln(st, a.p, cfg.tol, Strategy::Sequential)?.check()?;
        let asym = asymptotic_norm(st, a.p)?;
        Ok(vec![
            Cell::Int(st.n as i64),
            Cell::Num(exact.value()),
            Cell::Num(asym.value()),
            // equals N·π²·n_r^{−e}/ln(·) in the log regimes
            Cell::Num((exact.ln_value - asym.ln_value).exp()),
            asym.regime().kind.label().into(),
        ])
    });
    let mut t = Table::new(vec!["n", "N_exact", "N_asymptotic_leading", "ratio", "regime"]);
    for r in rows {
        t.push(r?);
    }
    Ok(t)
}

fn sweep(a: &SweepArgs, cfg: &EntropyConfig) -> CliResult<Table> {
    let mut series: Vec<Series> = match a.preset {
        Some(p) => {
            let name = match p {
                Preset::Fig1 => "fig1",
                Preset::Fig2 => "fig2",
                Preset::Fig3 => "fig3",
                Preset::Fig4 => "fig4",
            };
            figures::preset(name).expect("known preset")
        }
        None => {
            let axis = match a.axis.expect("clap enforces axis or preset") {
                AxisArg::N => Axis::N,
                AxisArg::P => Axis::P,
                AxisArg::Z => Axis::Z,
                AxisArg::D => Axis::D,
            };
            let dim = QuantumState::dimension_from_real(a.dim)?;
            vec![Series {
                name: "custom".into(),
                axis,
                dim,
                n: a.n,
                l: a.l,
                z: a.z,
                p: a.p,
                values: Vec::new(),
                backend: Backend::Exact,
            }]
        }
    };
    if let Some(v) = &a.values {
        let vals = parse_values(v).map_err(CliError::Invalid)?;
        for s in &mut series {
            s.values = vals.clone();
        }
    } else if a.preset.is_none() {
        return Err(CliError::Invalid("--values is required with --axis".into()));
    }
    let mut t = Table::new(REPORT_COLUMNS.to_vec());
    for s in &series {
        let backends = a.backend.map_or_else(|| vec![s.backend], BackendArg::backends);
        let reports: Vec<Vec<EntropyReport>> =
            backends.iter().map(|&b| s.evaluate(b, cfg)).collect::<Result<_, _>>()?;
        for (i, &v) in s.values.iter().enumerate() {
            for (b, rs) in backends.iter().zip(&reports) {
                let method = if s.axis == Axis::Z {
                    format!("{}+z-translation", b.label())
                } else {
                    b.label().to_string()
                };
                t.push(report_row(&s.name, s.axis.label(), Some(v), &rs[i], &method));
            }
        }
    }
    Ok(t)
}

fn regime_row(kind: &str, c: &RegimeClass) -> Vec<Cell> {
    let case = serde_json::to_value(c.case).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
    vec![
        kind.into(),
        Cell::Num(c.dim),
        Cell::Num(c.p),
        c.kind.label().into(),
        Cell::Text(case),
        Cell::Num(c.beta),
        Cell::Num(c.n_exponent()),
        Cell::Bool(c.kind.has_log()),
        Cell::Bool(c.mixed),
    ]
}

/// Regime boundaries in p at dimension D.
fn boundaries(dim: f64) -> Vec<f64> {
    const EPS: f64 = 1e-12;
    if (dim - 2.0).abs() <= EPS {
        vec![2.0, 5.0]
    } else if (dim - 3.0).abs() <= EPS {
        vec![2.0]
    } else if dim < 3.0 {
        vec![2.0, p_airy_bessel(dim)]
    } else {
        vec![(dim - 1.0) / (dim - 2.0), 2.0 * dim / (2.0 * dim - 3.0)]
    }
}

fn regimes(a: &RegimeArgs) -> CliResult<Table> {
    let ds = parse_values(&a.dim).map_err(CliError::Invalid)?;
    let ps = parse_values(&a.p).map_err(CliError::Invalid)?;
    let mut t = Table::new(vec!["row", "D", "p", "regime", "case", "beta", "n_exponent", "log_factor", "mixed"]);
    for &d in &ds {
        for &p in &ps {
            t.push(regime_row("grid", &classify_regime(d, p)?));
        }
        for p in boundaries(d) {
            t.push(regime_row("boundary", &classify_regime(d, p)?));
        }
    }
    Ok(t)
}
