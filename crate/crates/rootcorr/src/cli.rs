//! Command-line surface: evaluate `ρ_k` on grids or explicit points,
//! compute `P(all zeros real)`, run the cross-verification suites and the
//! empirical intensity profile, and export CSV or JSON.
//!
//! Configuration is a TOML file plus flag overrides; `--dump-config` echoes
//! the effective configuration, which re-parses to an identical run. Output
//! is deterministic for a fixed configuration, byte for byte, independent of
//! the worker count.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Parser;
use serde::{Deserialize, Serialize};

use crate::correlation::{
    closed_form, prob_all_real, rho, rho_k_montecarlo, rho_k_quadrature, CorrelationQuery, Method,
    MonteCarloSpec,
};
use crate::error::{Error, Result};
use crate::models::CoefficientModel;
use crate::oracle::{empirical_intensity, BoxFamily};
use crate::poly::PointConfig;
use crate::quad::QuadratureSpec;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID_CONFIG: u8 = 1;
pub const EXIT_UNCONVERGED: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "rootcorr", about = "Correlation functions of real zeros of random polynomials")]
pub struct Cli {
    /// TOML configuration file; flags override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// rho | prob-all-real | verify | intensity-profile
    #[arg(long)]
    pub task: Option<String>,
    /// Polynomial degree n.
    #[arg(long)]
    pub degree: Option<usize>,
    /// gaussian | gaussian:<scale> | uniform | exponential
    #[arg(long)]
    pub model: Option<String>,
    /// Comma-separated evaluation points (one k-point configuration).
    #[arg(long, allow_hyphen_values = true)]
    pub points: Option<String>,
    /// Grid lo:hi:step of single-point evaluations (or intensity bins).
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    /// theorem2 | theorem1 | closed-form | auto
    #[arg(long)]
    pub method: Option<String>,
    /// Monte Carlo sample count.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Relative tolerance for quadrature.
    #[arg(long)]
    pub rel_tol: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// csv | json
    #[arg(long)]
    pub format: Option<String>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print the effective configuration as TOML and exit.
    #[arg(long)]
    pub dump_config: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    Rho,
    ProbAllReal,
    Verify,
    IntensityProfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl GridSpec {
    pub fn values(&self) -> Vec<f64> {
        let mut v = Vec::new();
        let mut i = 0u64;
        loop {
            let x = self.lo + i as f64 * self.step;
            if x > self.hi + 1e-12 * self.step.abs() {
                break;
            }
            v.push(x);
            i += 1;
        }
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SpecSection {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_evals: usize,
    pub samples: usize,
    pub batch: usize,
    pub seed: u64,
}

impl Default for SpecSection {
    fn default() -> Self {
        Self {
            rel_tol: 1e-7,
            abs_tol: 1e-12,
            max_evals: 2_000_000,
            samples: 1_000_000,
            batch: 65_536,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct OutputSection {
    pub format: OutputFormat,
    pub path: Option<PathBuf>,
}

impl Default for OutputSection {
    fn default() -> Self {
        Self { format: OutputFormat::Csv, path: None }
    }
}

/// The full, override-resolved description of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub task: Task,
    pub degree: usize,
    pub model: String,
    #[serde(default = "default_method")]
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    #[serde(default)]
    pub spec: SpecSection,
    #[serde(default)]
    pub output: OutputSection,
}

fn default_method() -> Method {
    Method::Auto
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        let mut cfg: RunConfig = match &cli.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::InvalidConfig(format!("cannot read {path:?}: {e}")))?;
                toml::from_str(&text).map_err(|e| Error::InvalidConfig(e.to_string()))?
            }
            None => RunConfig {
                task: Task::Rho,
                degree: 1,
                model: "gaussian".into(),
                method: Method::Auto,
                points: None,
                grid: None,
                suite: None,
                spec: SpecSection::default(),
                output: OutputSection::default(),
            },
        };
        if let Some(t) = &cli.task {
            cfg.task = match t.as_str() {
                "rho" => Task::Rho,
                "prob-all-real" => Task::ProbAllReal,
                "verify" => Task::Verify,
                "intensity-profile" => Task::IntensityProfile,
                other => return Err(Error::InvalidConfig(format!("unknown task {other:?}"))),
            };
        }
        if let Some(d) = cli.degree {
            cfg.degree = d;
        }
        if let Some(m) = &cli.model {
            cfg.model = m.clone();
        }
        if let Some(m) = &cli.method {
            cfg.method = match m.as_str() {
                "theorem2" => Method::Theorem2,
                "theorem1" => Method::Theorem1,
                "closed-form" => Method::ClosedForm,
                "auto" => Method::Auto,
                other => return Err(Error::InvalidConfig(format!("unknown method {other:?}"))),
            };
        }
        if let Some(p) = &cli.points {
            let pts: std::result::Result<Vec<f64>, _> =
                p.split(',').map(|s| s.trim().parse::<f64>()).collect();
            cfg.points =
                Some(pts.map_err(|e| Error::InvalidConfig(format!("bad --points: {e}")))?);
            cfg.grid = None;
        }
        if let Some(g) = &cli.grid {
            let parts: Vec<&str> = g.split(':').collect();
            if parts.len() != 3 {
                return Err(Error::InvalidConfig("grid must be lo:hi:step".into()));
            }
            let nums: std::result::Result<Vec<f64>, _> =
                parts.iter().map(|s| s.parse::<f64>()).collect();
            let nums = nums.map_err(|e| Error::InvalidConfig(format!("bad --grid: {e}")))?;
            if nums[2] <= 0.0 || nums[1] < nums[0] {
                return Err(Error::InvalidConfig("grid needs lo <= hi and step > 0".into()));
            }
            cfg.grid = Some(GridSpec { lo: nums[0], hi: nums[1], step: nums[2] });
            cfg.points = None;
        }
        if let Some(s) = cli.samples {
            cfg.spec.samples = s;
        }
        if let Some(r) = cli.rel_tol {
            cfg.spec.rel_tol = r;
        }
        if let Some(s) = cli.seed {
            cfg.spec.seed = s;
        }
        if let Some(f) = &cli.format {
            cfg.output.format = match f.as_str() {
                "csv" => OutputFormat::Csv,
                "json" => OutputFormat::Json,
                other => return Err(Error::InvalidConfig(format!("unknown format {other:?}"))),
            };
        }
        if let Some(o) = &cli.out {
            cfg.output.path = Some(o.clone());
        }
        Ok(cfg)
    }

    pub fn build_model(&self) -> Result<CoefficientModel> {
        let s = self.model.as_str();
        if s == "gaussian" {
            return CoefficientModel::gaussian(self.degree, 1.0);
        }
        if let Some(rest) = s.strip_prefix("gaussian:") {
            let scale: f64 = rest
                .parse()
                .map_err(|e| Error::InvalidConfig(format!("bad gaussian scale: {e}")))?;
            return CoefficientModel::gaussian(self.degree, scale);
        }
        match s {
            "uniform" => CoefficientModel::uniform(self.degree),
            "exponential" => CoefficientModel::exponential(self.degree),
            other => Err(Error::InvalidConfig(format!("unknown model {other:?}"))),
        }
    }

    fn quad_spec(&self) -> QuadratureSpec {
        QuadratureSpec::default()
            .with_rel_tol(self.spec.rel_tol)
            .with_max_evals(self.spec.max_evals)
            .with_seed(self.spec.seed)
    }

    fn mc_spec(&self) -> MonteCarloSpec {
        MonteCarloSpec { samples: self.spec.samples, seed: self.spec.seed, batch: self.spec.batch }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }
}

/// 17 significant digits, enough to round-trip an f64 exactly.
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

struct RhoRow {
    x: Vec<f64>,
    value: f64,
    error: f64,
    method: &'static str,
    evals: usize,
    converged: bool,
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Theorem2 => "theorem2",
        Method::Theorem1 => "theorem1",
        Method::ClosedForm => "closed-form",
        Method::Auto => "auto",
    }
}

/// Executes the run; returns `(exit_code, report_text)`. The report is also
/// written to the configured output path when one is set.
pub fn run(cfg: &RunConfig) -> Result<(u8, String)> {
    let (exit, text) = match cfg.task {
        Task::Rho => run_rho(cfg)?,
        Task::ProbAllReal => run_prob_all_real(cfg)?,
        Task::IntensityProfile => run_intensity(cfg)?,
        Task::Verify => run_verify(cfg)?,
    };
    if let Some(path) = &cfg.output.path {
        std::fs::write(path, &text)
            .map_err(|e| Error::InvalidConfig(format!("cannot write {path:?}: {e}")))?;
    }
    Ok((exit, text))
}

fn query_points(cfg: &RunConfig) -> Result<Vec<Vec<f64>>> {
    if let Some(pts) = &cfg.points {
        let x = PointConfig::new(pts.clone())?; // validates distinctness
        if x.k() > cfg.degree {
            return Err(Error::InvalidConfig(format!(
                "k = {} exceeds degree n = {}",
                x.k(),
                cfg.degree
            )));
        }
        return Ok(vec![pts.clone()]);
    }
    let grid = cfg
        .grid
        .ok_or_else(|| Error::InvalidConfig("rho task needs points or grid".into()))?;
    Ok(grid.values().into_iter().map(|x| vec![x]).collect())
}

fn evaluate_rho(cfg: &RunConfig, pts: &[f64]) -> Result<RhoRow> {
    let model = cfg.build_model()?;
    let x = PointConfig::new(pts.to_vec())?;
    let mut query = CorrelationQuery::new(model, x)?.with_method(cfg.method);
    query.quad = cfg.quad_spec();
    query.mc = cfg.mc_spec();
    let est = rho(&query)?;
    Ok(RhoRow {
        x: pts.to_vec(),
        value: est.value,
        error: est.error,
        method: method_name(cfg.method),
        evals: est.evals,
        converged: est.converged,
    })
}

fn run_rho(cfg: &RunConfig) -> Result<(u8, String)> {
    use rayon::prelude::*;
    let configs = query_points(cfg)?;
    // Grid points evaluate in parallel; collect keeps rows in grid order.
    let rows: Result<Vec<RhoRow>> =
        configs.par_iter().map(|pts| evaluate_rho(cfg, pts)).collect();
    let rows = rows?;
    let k = rows.first().map_or(1, |r| r.x.len());
    let exit = if rows.iter().all(|r| r.converged) { EXIT_OK } else { EXIT_UNCONVERGED };

    let text = match cfg.output.format {
        OutputFormat::Csv => {
            let mut out = String::new();
            let header: Vec<String> = (1..=k).map(|i| format!("x_{i}")).collect();
            writeln!(out, "{},rho,error,method,evals,converged", header.join(",")).unwrap();
            for r in &rows {
                let xs: Vec<String> = r.x.iter().map(|&v| fmt17(v)).collect();
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    xs.join(","),
                    fmt17(r.value),
                    fmt17(r.error),
                    r.method,
                    r.evals,
                    r.converged
                )
                .unwrap();
            }
            out
        }
        OutputFormat::Json => {
            let json_rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "x": r.x,
                        "rho": r.value,
                        "error": r.error,
                        "method": r.method,
                        "evals": r.evals,
                        "converged": r.converged,
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "metadata": metadata(cfg),
                "rows": json_rows,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
    };
    Ok((exit, text))
}

fn run_prob_all_real(cfg: &RunConfig) -> Result<(u8, String)> {
    let model = cfg.build_model()?;
    let quad = cfg.quad_spec();
    let est = prob_all_real(&model, &quad, &quad);
    let exit = if est.converged { EXIT_OK } else { EXIT_UNCONVERGED };
    let text = match cfg.output.format {
        OutputFormat::Csv => format!(
            "p_all_real,error,evals,converged\n{},{},{},{}\n",
            fmt17(est.value),
            fmt17(est.error),
            est.evals,
            est.converged
        ),
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "metadata": metadata(cfg),
                "p_all_real": est.value,
                "error": est.error,
                "evals": est.evals,
                "converged": est.converged,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
    };
    Ok((exit, text))
}

fn run_intensity(cfg: &RunConfig) -> Result<(u8, String)> {
    let model = cfg.build_model()?;
    let grid = cfg
        .grid
        .ok_or_else(|| Error::InvalidConfig("intensity-profile needs a grid".into()))?;
    let edges = grid.values();
    if edges.len() < 2 {
        return Err(Error::InvalidConfig("grid produces no bins".into()));
    }
    let bins = BoxFamily::new(edges.windows(2).map(|w| (w[0], w[1])).collect())?;
    let prof = empirical_intensity(&model, &bins, &cfg.mc_spec());
    let text = match cfg.output.format {
        OutputFormat::Csv => {
            let mut out = String::from("bin_lo,bin_hi,mean_count,error,samples,discard_rate\n");
            for ((lo, hi), e) in bins.boxes().iter().zip(&prof.estimates) {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    fmt17(*lo),
                    fmt17(*hi),
                    fmt17(e.value),
                    fmt17(e.error),
                    e.evals,
                    fmt17(prof.discard_rate)
                )
                .unwrap();
            }
            out
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = bins
                .boxes()
                .iter()
                .zip(&prof.estimates)
                .map(|((lo, hi), e)| {
                    serde_json::json!({
                        "bin": [lo, hi],
                        "mean_count": e.value,
                        "error": e.error,
                        "samples": e.evals,
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "metadata": metadata(cfg),
                "discard_rate": prof.discard_rate,
                "rows": rows,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
    };
    Ok((EXIT_OK, text))
}

/// Cross-verification suites. `closed-forms` checks the diagonal closed
/// forms against quadrature; `cross-method` checks Monte Carlo against
/// quadrature off the diagonal.
fn run_verify(cfg: &RunConfig) -> Result<(u8, String)> {
    let suite = cfg.suite.as_deref().unwrap_or("closed-forms");
    let mut out = String::new();
    let mut all_pass = true;
    match suite {
        "closed-forms" => {
            for model_name in ["gaussian", "uniform", "exponential"] {
                for n in 1..=3usize {
                    let sub = RunConfig {
                        degree: n,
                        model: model_name.into(),
                        ..cfg.clone()
                    };
                    let model = sub.build_model()?;
                    let tol: f64 = if model_name == "uniform" { 1e-4 } else { 1e-6 };
                    let mut worst = 0.0f64;
                    for trial in 0..5u64 {
                        let x = random_admissible_points(n, model_name, cfg.spec.seed + trial);
                        let x = PointConfig::new(x)?;
                        let exact = closed_form(&model, &x).expect("built-in family");
                        let spec = cfg.quad_spec().with_rel_tol((tol * 1e-2).max(1e-10));
                        let est = rho_k_quadrature(&model, &x, &spec);
                        if exact > 0.0 {
                            worst = worst.max((est.value - exact).abs() / exact);
                        }
                    }
                    let pass = worst <= tol;
                    all_pass &= pass;
                    writeln!(
                        out,
                        "{} closed-form model={model_name} n={n} max_rel={worst:.3e} tol={tol:.0e}",
                        if pass { "PASS" } else { "FAIL" }
                    )
                    .unwrap();
                }
            }
        }
        "cross-method" => {
            for model_name in ["gaussian", "uniform", "exponential"] {
                for (n, k) in [(2usize, 1usize), (3, 2)] {
                    let sub = RunConfig { degree: n, model: model_name.into(), ..cfg.clone() };
                    let model = sub.build_model()?;
                    let x = PointConfig::new(random_admissible_points_k(
                        n,
                        k,
                        model_name,
                        cfg.spec.seed,
                    ))?;
                    let quad = rho_k_quadrature(&model, &x, &cfg.quad_spec());
                    let mc = rho_k_montecarlo(&model, &x, &sub.mc_spec())?;
                    let diff = (quad.value - mc.estimate.value).abs();
                    let budget = 3.0 * (quad.error + mc.estimate.error);
                    let pass = diff <= budget;
                    all_pass &= pass;
                    writeln!(
                        out,
                        "{} cross-method model={model_name} n={n} k={k} diff={diff:.3e} budget={budget:.3e}",
                        if pass { "PASS" } else { "FAIL" }
                    )
                    .unwrap();
                }
            }
        }
        other => return Err(Error::InvalidConfig(format!("unknown suite {other:?}"))),
    }
    Ok((if all_pass { EXIT_OK } else { EXIT_UNCONVERGED }, out))
}

fn random_admissible_points(n: usize, model: &str, seed: u64) -> Vec<f64> {
    random_admissible_points_k(n, n, model, seed)
}

/// Well-separated points in the model's natural range: negative for the
/// exponential family, `[-2, 2]` otherwise.
fn random_admissible_points_k(_n: usize, k: usize, model: &str, seed: u64) -> Vec<f64> {
    use rand::Rng;
    let mut rng = crate::rng::stream_rng(seed, 0xC0FFEE);
    loop {
        let pts: Vec<f64> = (0..k)
            .map(|_| {
                if model == "exponential" {
                    -rng.random_range(0.05..2.0)
                } else {
                    rng.random_range(-2.0..2.0)
                }
            })
            .collect();
        let mut ok = true;
        for i in 0..k {
            for j in i + 1..k {
                ok &= (pts[i] - pts[j]).abs() >= 0.1;
            }
        }
        if ok {
            return pts;
        }
    }
}

fn metadata(cfg: &RunConfig) -> serde_json::Value {
    serde_json::json!({
        "model": cfg.model,
        "degree": cfg.degree,
        "method": method_name(cfg.method),
        "spec": {
            "rel_tol": cfg.spec.rel_tol,
            "abs_tol": cfg.spec.abs_tol,
            "max_evals": cfg.spec.max_evals,
            "samples": cfg.spec.samples,
            "batch": cfg.spec.batch,
        },
        "seed": cfg.spec.seed,
        "version": env!("CARGO_PKG_VERSION"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_config() -> RunConfig {
        RunConfig {
            task: Task::Rho,
            degree: 1,
            model: "gaussian".into(),
            method: Method::Auto,
            points: None,
            grid: Some(GridSpec { lo: -1.0, hi: 1.0, step: 0.5 }),
            suite: None,
            spec: SpecSection::default(),
            output: OutputSection::default(),
        }
    }

    #[test]
    fn config_round_trip() {
        let cfg = base_config();
        let text = cfg.to_toml();
        let back: RunConfig = toml::from_str(&text).unwrap();
        assert_eq!(cfg, back);
    }

    #[test]
    fn grid_values_inclusive() {
        let g = GridSpec { lo: -2.0, hi: 2.0, step: 0.5 };
        let v = g.values();
        assert_eq!(v.len(), 9);
        assert_eq!(v[0], -2.0);
        assert_eq!(*v.last().unwrap(), 2.0);
    }

    #[test]
    fn rho_grid_csv_has_cauchy_at_zero() {
        let cfg = base_config();
        let (exit, text) = run(&cfg).unwrap();
        assert_eq!(exit, EXIT_OK);
        let row = text.lines().find(|l| l.starts_with("0.0000000000000000e0,")).unwrap();
        let rho: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
        assert!((rho - 1.0 / std::f64::consts::PI).abs() < 1e-6);
    }

    #[test]
    fn determinism_byte_identical() {
        let mut cfg = base_config();
        cfg.degree = 3;
        cfg.method = Method::Theorem1;
        cfg.spec.samples = 20_000;
        let (_, a) = run(&cfg).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let (_, b) = pool.install(|| run(&cfg).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn prob_all_real_linear_uniform() {
        let mut cfg = base_config();
        cfg.task = Task::ProbAllReal;
        cfg.model = "uniform".into();
        let (exit, text) = run(&cfg).unwrap();
        assert_eq!(exit, EXIT_OK);
        assert!(text.lines().nth(1).unwrap().starts_with("1.0000000000000000e0,"));
    }

    #[test]
    fn invalid_model_is_config_error() {
        let mut cfg = base_config();
        cfg.model = "cauchy".into();
        assert!(matches!(run(&cfg), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn k_larger_than_degree_rejected() {
        let mut cfg = base_config();
        cfg.points = Some(vec![0.1, 0.9]);
        cfg.grid = None;
        assert!(run(&cfg).is_err());
    }

    #[test]
    fn coincident_points_rejected() {
        let mut cfg = base_config();
        cfg.degree = 3;
        cfg.points = Some(vec![0.5, 0.5]);
        cfg.grid = None;
        assert!(run(&cfg).is_err());
    }

    #[test]
    fn json_output_carries_metadata() {
        let mut cfg = base_config();
        cfg.output.format = OutputFormat::Json;
        let (_, text) = run(&cfg).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["metadata"]["degree"], 1);
        assert!(doc["rows"].as_array().unwrap().len() == 5);
    }
}
