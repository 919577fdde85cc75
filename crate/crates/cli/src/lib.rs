//! Command-line driver for the esrhd benchmark suite.
//!
//! Subcommands: `run` (one simulation with snapshots and an entropy trace),
//! `converge` (resolution sweep against an exact solution), `reference`
//! (fine-mesh first-order solution sampled on a coarse grid) and `list`.

pub mod config;
pub mod output;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use esrhd::bench::{build, convergence_study, reference_solution, AnyProblem};
use esrhd::{Dimension, Problem, ProblemSpec, SchemeConfig, Simulation, TimeControls};

pub use config::{parse_config, RunArgs, RunConfig};
use output::{SnapshotRows, write_file};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("numerical failure: {0}")]
    Numerical(esrhd::Error),
    #[error("io error on {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Numerical(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

impl From<esrhd::Error> for CliError {
    fn from(e: esrhd::Error) -> Self {
        match e {
            esrhd::Error::InvalidConfig(msg) => CliError::Usage(msg),
            other => CliError::Numerical(other),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "esrhd", version, about = "Entropy stable schemes for relativistic hydrodynamics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one simulation, writing snapshots, the entropy trace and a manifest.
    Run(RunArgs),
    /// Resolution sweep against the exact solution (acc1d, acc2d).
    Converge(RunArgs),
    /// First-order fine-mesh solution sampled at the cell centres of --n cells.
    Reference(RunArgs),
    /// Print the problem catalogue.
    List,
}

/// Parses `argv` and executes the command, returning the process exit code.
pub fn main_with_args<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("esrhd: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::List => {
            print!("{}", list_text());
            Ok(())
        }
        Command::Run(args) => run(&parse_config(args)?),
        Command::Converge(args) => converge(&parse_config(args)?),
        Command::Reference(args) => reference(&parse_config(args)?),
    }
}

pub fn list_text() -> String {
    let mut s = String::new();
    for p in Problem::ALL {
        let (gamma, t_end, n) = match build::<f64>(p, &Default::default()) {
            AnyProblem::One(q) => (q.gamma, q.t_end, format!("{}", q.default_n.0)),
            AnyProblem::Two(q) => (q.gamma, q.t_end, format!("{}x{}", q.default_n.0, q.default_n.1)),
        };
        s.push_str(&format!(
            "{:<6} {}D  gamma={:<8.6} t_end={:<6} n={:<8} {}\n",
            p.name(),
            p.dim(),
            gamma,
            t_end,
            n,
            p.description()
        ));
    }
    s
}

fn scheme(cfg: &RunConfig, gamma: f64) -> Result<SchemeConfig<f64>, CliError> {
    Ok(SchemeConfig::new(cfg.flux, cfg.dissipation, esrhd::EosParams::new(gamma)?))
}

fn controls(cfg: &RunConfig, default_t_end: f64) -> TimeControls<f64> {
    TimeControls::new(cfg.t_end.unwrap_or(default_t_end)).with_cfl(cfg.cfl).with_accuracy_mode(cfg.accuracy_mode)
}

fn create_out_dir(dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))
}

/// Config echo followed by run facts, in config-file syntax.
struct Manifest(String);

impl Manifest {
    fn new(command: &str, cfg: &RunConfig, gamma: f64) -> Self {
        let mut s = format!("command = {command}\nversion = {}\n", env!("CARGO_PKG_VERSION"));
        s.push_str(&cfg.to_config_text());
        s.push_str(&format!("gamma = {gamma:?}\n"));
        Manifest(s)
    }

    fn set(&mut self, key: &str, value: impl std::fmt::Display) {
        self.0.push_str(&format!("{key} = {value}\n"));
    }

    fn write(self, dir: &Path) -> Result<(), CliError> {
        write_file(&dir.join("manifest.txt"), &self.0)
    }
}

pub fn run(cfg: &RunConfig) -> Result<(), CliError> {
    match build::<f64>(cfg.problem, &cfg.params) {
        AnyProblem::One(p) => run_dim(cfg, &p, |_, _, _| Ok(())),
        AnyProblem::Two(p) => run_dim(cfg, &p, |field, dir, k| {
            write_file(&dir.join(format!("schlieren_{k:04}.csv")), &output::schlieren_text(field)?)
        }),
    }
}

fn run_dim<D: SnapshotRows>(
    cfg: &RunConfig,
    problem: &ProblemSpec<f64, D>,
    extra: impl Fn(&esrhd::Field<f64, D>, &Path, usize) -> Result<(), CliError>,
) -> Result<(), CliError> {
    let start = Instant::now();
    let scheme = scheme(cfg, problem.gamma)?;
    let controls = controls(cfg, problem.t_end);
    let grid = problem.grid(cfg.nx, cfg.ny)?;
    let mut sim = Simulation::new(problem, grid, scheme, controls)?;
    create_out_dir(&cfg.out)?;

    let mut index = String::from("index,t,file\n");
    let mut snap = |sim: &Simulation<f64, D>, k: usize| -> Result<(), CliError> {
        let name = format!("snapshot_{k:04}.csv");
        output::emit_snapshot(&sim.field, &scheme.eos, &cfg.out.join(&name))?;
        extra(&sim.field, &cfg.out, k)?;
        index.push_str(&format!("{k},{:.16e},{name}\n", sim.t));
        Ok(())
    };

    snap(&sim, 0)?;
    let mut k = 0;
    let result = loop {
        if sim.is_finished() {
            break Ok(());
        }
        k += 1;
        let target = match cfg.snap_dt {
            Some(dt) => (k as f64 * dt).min(controls.t_end),
            None => controls.t_end,
        };
        if let Err(e) = sim.advance_to(target) {
            break Err(e);
        }
        snap(&sim, k)?;
    };

    write_file(&cfg.out.join("snapshots.csv"), &index)?;
    write_file(&cfg.out.join("entropy.csv"), &output::entropy_trace_text(&sim.trace.samples))?;
    let mut manifest = Manifest::new("run", cfg, problem.gamma);
    manifest.set("steps", sim.steps);
    manifest.set("t_final", format!("{:?}", sim.t));
    manifest.set("wall_time_s", format!("{:.3}", start.elapsed().as_secs_f64()));
    manifest.write(&cfg.out)?;
    result.map_err(CliError::from)
}

pub fn converge(cfg: &RunConfig) -> Result<(), CliError> {
    let start = Instant::now();
    let (rows, gamma) = match build::<f64>(cfg.problem, &cfg.params) {
        AnyProblem::One(p) => (converge_dim(cfg, &p)?, p.gamma),
        AnyProblem::Two(p) => (converge_dim(cfg, &p)?, p.gamma),
    };
    create_out_dir(&cfg.out)?;
    write_file(&cfg.out.join("convergence.csv"), &output::convergence_text(&rows))?;
    let mut manifest = Manifest::new("converge", cfg, gamma);
    manifest.set("monotone_error", output::errors_monotone(&rows));
    manifest.set("wall_time_s", format!("{:.3}", start.elapsed().as_secs_f64()));
    manifest.write(&cfg.out)
}

fn converge_dim<D: Dimension>(
    cfg: &RunConfig,
    problem: &ProblemSpec<f64, D>,
) -> Result<Vec<esrhd::ConvergenceRow<f64>>, CliError> {
    if problem.exact.is_none() {
        return Err(CliError::Usage(format!("problem {} has no exact solution to converge against", problem.name)));
    }
    let scheme = scheme(cfg, problem.gamma)?;
    Ok(convergence_study(problem, &cfg.resolutions, &scheme, &controls(cfg, problem.t_end))?)
}

pub fn reference(cfg: &RunConfig) -> Result<(), CliError> {
    let start = Instant::now();
    let AnyProblem::One(problem) = build::<f64>(cfg.problem, &cfg.params) else {
        return Err(CliError::Usage(format!("reference solutions are one-dimensional; {} is 2D", cfg.problem)));
    };
    let fine_n = cfg.fine_n.unwrap_or(20 * cfg.nx);
    let ctl = controls(cfg, problem.t_end);
    let prims = reference_solution(&problem, fine_n, cfg.nx, &ctl)?;
    let eos = problem.eos()?;
    let grid = problem.grid(cfg.nx, 1)?;
    let field = esrhd::Field::from_prim_fn(grid, &eos, |x, _| {
        let i = ((x - grid.x0) / grid.dx).floor().clamp(0.0, (cfg.nx - 1) as f64) as usize;
        prims[i]
    })?;
    create_out_dir(&cfg.out)?;
    output::emit_snapshot(&field, &eos, &cfg.out.join("reference.csv"))?;
    let mut manifest = Manifest::new("reference", cfg, problem.gamma);
    manifest.set("t_final", format!("{:?}", ctl.t_end));
    manifest.set("wall_time_s", format!("{:.3}", start.elapsed().as_secs_f64()));
    manifest.write(&cfg.out)
}
