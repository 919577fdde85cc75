//! Run configuration: `key = value` files overlaid by command-line flags.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::Args;
use esrhd::{DissipationKind, FluxMode, Problem, ProblemParams};

use crate::CliError;

/// Flags shared by every subcommand that runs a simulation. All of them are
/// optional so that a config file can supply the value instead.
#[derive(Args, Clone, Debug, Default, PartialEq)]
pub struct RunArgs {
    /// Catalogue name, see `esrhd list`.
    #[arg(long)]
    pub problem: Option<String>,
    /// Cells along x (1D: total cells).
    #[arg(long)]
    pub n: Option<usize>,
    /// Cells along y; defaults to the catalogue aspect ratio.
    #[arg(long)]
    pub ny: Option<usize>,
    /// ec | es | llf
    #[arg(long)]
    pub flux: Option<String>,
    /// roe | lf
    #[arg(long)]
    pub diss: Option<String>,
    #[arg(long)]
    pub cfl: Option<f64>,
    /// Overrides the catalogue output time.
    #[arg(long = "t-end")]
    pub t_end: Option<f64>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Snapshot interval in simulation time; only the final state when absent.
    #[arg(long = "snap-dt")]
    pub snap_dt: Option<f64>,
    /// Caps the time step at cfl * h^(5/3).
    #[arg(long = "accuracy-dt")]
    pub accuracy_dt: bool,
    /// Fine resolution of the `reference` subcommand.
    #[arg(long = "fine-n")]
    pub fine_n: Option<usize>,
    /// Resolutions of the `converge` subcommand, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub ns: Option<Vec<usize>>,
    /// Bubble density of the shock-bubble problem.
    #[arg(long = "bubble-rho")]
    pub bubble_rho: Option<f64>,
    /// `key = value` file; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Keys accepted in a config file. Manifest-only keys are listed separately
/// so that a manifest can be fed back as a config.
const CONFIG_KEYS: &[&str] =
    &["problem", "n", "ny", "flux", "diss", "cfl", "t_end", "out", "snap_dt", "accuracy_dt", "fine_n", "ns", "bubble_rho"];
const MANIFEST_KEYS: &[&str] = &["command", "version", "gamma", "steps", "t_final", "wall_time_s", "monotone_error"];

/// Fully resolved configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub problem: Problem,
    pub nx: usize,
    pub ny: usize,
    pub flux: FluxMode,
    pub dissipation: DissipationKind,
    pub cfl: f64,
    pub t_end: Option<f64>,
    pub out: PathBuf,
    pub snap_dt: Option<f64>,
    pub accuracy_mode: bool,
    pub fine_n: Option<usize>,
    pub resolutions: Vec<usize>,
    pub params: ProblemParams<f64>,
}

pub const DEFAULT_CFL: f64 = 0.4;
const MIN_CELLS: usize = 2 * esrhd::scheme::GHOST;

pub fn parse_flux(s: &str) -> Result<FluxMode, CliError> {
    match s.to_ascii_lowercase().as_str() {
        "ec" => Ok(FluxMode::Ec),
        "es" => Ok(FluxMode::Es),
        "llf" | "llf1" => Ok(FluxMode::Llf1),
        other => Err(CliError::Usage(format!("unknown flux '{other}', expected ec, es or llf"))),
    }
}

pub fn parse_dissipation(s: &str) -> Result<DissipationKind, CliError> {
    match s.to_ascii_lowercase().as_str() {
        "roe" => Ok(DissipationKind::Roe),
        "lf" => Ok(DissipationKind::LaxFriedrichs),
        other => Err(CliError::Usage(format!("unknown dissipation '{other}', expected roe or lf"))),
    }
}

pub fn dissipation_name(d: DissipationKind) -> &'static str {
    match d {
        DissipationKind::Roe => "roe",
        DissipationKind::LaxFriedrichs => "lf",
    }
}

/// Parses `key = value` lines. Blank lines and `#` comments are skipped;
/// keys may use `-` or `_`.
pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key = value, got '{line}'", lineno + 1)))?;
        let key = k.trim().replace('-', "_");
        if MANIFEST_KEYS.contains(&key.as_str()) {
            continue;
        }
        if !CONFIG_KEYS.contains(&key.as_str()) {
            return Err(CliError::Usage(format!("config line {}: unknown key '{}'", lineno + 1, k.trim())));
        }
        map.insert(key, v.trim().to_string());
    }
    Ok(map)
}

fn load_file(path: &Path) -> Result<RunArgs, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let map = parse_config_text(&text)?;
    let num = |key: &str| -> Result<Option<f64>, CliError> {
        map.get(key)
            .map(|v| v.parse::<f64>().map_err(|_| CliError::Usage(format!("config key {key}: '{v}' is not a number"))))
            .transpose()
    };
    let int = |key: &str| -> Result<Option<usize>, CliError> {
        map.get(key)
            .map(|v| v.parse::<usize>().map_err(|_| CliError::Usage(format!("config key {key}: '{v}' is not a count"))))
            .transpose()
    };
    let accuracy_dt = match map.get("accuracy_dt").map(String::as_str) {
        None | Some("false") => false,
        Some("true") => true,
        Some(v) => return Err(CliError::Usage(format!("config key accuracy_dt: '{v}' is not true/false"))),
    };
    let ns = map
        .get("ns")
        .map(|v| {
            v.split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("config key ns: bad entry '{s}'"))))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    Ok(RunArgs {
        problem: map.get("problem").cloned(),
        n: int("n")?,
        ny: int("ny")?,
        flux: map.get("flux").cloned(),
        diss: map.get("diss").cloned(),
        cfl: num("cfl")?,
        t_end: num("t_end")?,
        out: map.get("out").map(PathBuf::from),
        snap_dt: num("snap_dt")?,
        accuracy_dt,
        fine_n: int("fine_n")?,
        ns,
        bubble_rho: num("bubble_rho")?,
        config: None,
    })
}

impl RunArgs {
    /// Values present in `self` win over those in `base`.
    fn overlay(self, base: RunArgs) -> RunArgs {
        RunArgs {
            problem: self.problem.or(base.problem),
            n: self.n.or(base.n),
            ny: self.ny.or(base.ny),
            flux: self.flux.or(base.flux),
            diss: self.diss.or(base.diss),
            cfl: self.cfl.or(base.cfl),
            t_end: self.t_end.or(base.t_end),
            out: self.out.or(base.out),
            snap_dt: self.snap_dt.or(base.snap_dt),
            accuracy_dt: self.accuracy_dt || base.accuracy_dt,
            fine_n: self.fine_n.or(base.fine_n),
            ns: self.ns.or(base.ns),
            bubble_rho: self.bubble_rho.or(base.bubble_rho),
            config: None,
        }
    }
}

/// Resolves flags and the optional config file into a validated
/// [`RunConfig`], filling documented defaults.
pub fn parse_config(args: RunArgs) -> Result<RunConfig, CliError> {
    let merged = match &args.config {
        Some(path) => {
            let file = load_file(path)?;
            args.overlay(file)
        }
        None => args,
    };

    let name = merged.problem.ok_or_else(|| CliError::Usage("missing --problem".into()))?;
    let problem =
        Problem::from_name(&name).ok_or_else(|| CliError::Usage(format!("unknown problem '{name}', see `esrhd list`")))?;
    let mut params = ProblemParams::default();
    if let Some(rho) = merged.bubble_rho {
        if !(rho > 0.0 && rho.is_finite()) {
            return Err(CliError::Usage(format!("bubble_rho must be positive, got {rho}")));
        }
        params.bubble_rho = rho;
    }
    let (def_nx, def_ny) = match esrhd::bench::build::<f64>(problem, &params) {
        esrhd::AnyProblem::One(p) => p.default_n,
        esrhd::AnyProblem::Two(p) => p.default_n,
    };
    let nx = merged.n.unwrap_or(def_nx);
    let ny = if problem.dim() == 1 {
        1
    } else {
        merged.ny.unwrap_or_else(|| ((nx * def_ny) as f64 / def_nx as f64).round() as usize)
    };
    check_cells("n", nx)?;
    if problem.dim() == 2 {
        check_cells("ny", ny)?;
    }

    let flux = merged.flux.as_deref().map(parse_flux).transpose()?.unwrap_or(FluxMode::Es);
    let dissipation = merged.diss.as_deref().map(parse_dissipation).transpose()?.unwrap_or_default();
    let cfl = merged.cfl.unwrap_or(DEFAULT_CFL);
    if !(cfl > 0.0 && cfl <= 1.0) {
        return Err(CliError::Usage(format!("cfl must lie in (0, 1], got {cfl}")));
    }
    if let Some(t) = merged.t_end {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(CliError::Usage(format!("t_end must be finite and >= 0, got {t}")));
        }
    }
    if let Some(dt) = merged.snap_dt {
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(CliError::Usage(format!("snap_dt must be positive, got {dt}")));
        }
    }
    if let Some(f) = merged.fine_n {
        check_cells("fine_n", f)?;
    }
    let resolutions = merged.ns.unwrap_or_else(|| default_resolutions(problem));
    for &n in &resolutions {
        check_cells("ns", n)?;
    }

    Ok(RunConfig {
        problem,
        nx,
        ny,
        flux,
        dissipation,
        cfl,
        t_end: merged.t_end,
        out: merged.out.unwrap_or_else(|| PathBuf::from("out")),
        snap_dt: merged.snap_dt,
        accuracy_mode: merged.accuracy_dt,
        fine_n: merged.fine_n,
        resolutions,
        params,
    })
}

fn check_cells(name: &str, n: usize) -> Result<(), CliError> {
    if n < MIN_CELLS {
        return Err(CliError::Usage(format!("{name}={n} is below the minimum of {MIN_CELLS} cells")));
    }
    Ok(())
}

fn default_resolutions(problem: Problem) -> Vec<usize> {
    match problem {
        Problem::Acc2d => vec![20, 40, 80],
        _ => vec![20, 40, 80, 160, 320],
    }
}

impl RunConfig {
    /// The configuration as config-file lines; feeding them back through
    /// `--config` reproduces this value.
    pub fn to_config_text(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: String| {
            s.push_str(k);
            s.push_str(" = ");
            s.push_str(&v);
            s.push('\n');
        };
        line("problem", self.problem.name().to_string());
        line("n", self.nx.to_string());
        if self.problem.dim() == 2 {
            line("ny", self.ny.to_string());
        }
        line("flux", self.flux.name().to_string());
        line("diss", dissipation_name(self.dissipation).to_string());
        line("cfl", format!("{:?}", self.cfl));
        if let Some(t) = self.t_end {
            line("t_end", format!("{t:?}"));
        }
        line("out", self.out.display().to_string());
        if let Some(dt) = self.snap_dt {
            line("snap_dt", format!("{dt:?}"));
        }
        line("accuracy_dt", self.accuracy_mode.to_string());
        if let Some(f) = self.fine_n {
            line("fine_n", f.to_string());
        }
        line("ns", self.resolutions.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
        line("bubble_rho", format!("{:?}", self.params.bubble_rho));
        s
    }
}
