//! Run configuration, target resolution and the three commands behind the
//! `lieinv` binary.

pub mod tablefile;

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use lieinv_core::catalog::Family;
use lieinv_core::corrections::{Corrections, DEFAULT_OVERLAY};
use lieinv_core::report::{SuiteReport, VerificationReport};
use lieinv_core::suites::{oracle_comparisons, run_suite, Suite, SuiteOptions, Target};
use lieinv_core::{AlgebraError, Field, Level};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::tablefile::TableFile;

/// Failures that stop a run before any claim is judged.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Io(PathBuf, std::io::Error),
    Algebra(AlgebraError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(s) => f.write_str(s),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Algebra(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraSelector {
    Catalog { family: Family, level: Level },
    File(PathBuf),
}

impl AlgebraSelector {
    /// `g2-borel`, `g2-nil`, `f4-borel`, `f4-nil`, `cn-borel`, `cn-nil`,
    /// or a path to a table file.
    pub fn parse(s: &str) -> AlgebraSelector {
        let cat = |family, level| AlgebraSelector::Catalog { family, level };
        match s {
            "g2-borel" => cat(Family::G2, Level::Borel),
            "g2-nil" => cat(Family::G2, Level::Nilradical),
            "f4-borel" => cat(Family::F4, Level::Borel),
            "f4-nil" => cat(Family::F4, Level::Nilradical),
            "cn-borel" => cat(Family::Cn, Level::Borel),
            "cn-nil" => cat(Family::Cn, Level::Nilradical),
            path => AlgebraSelector::File(PathBuf::from(path)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub algebra: String,
    pub n: Option<usize>,
    pub characteristic: u32,
    /// `None` runs every suite that applies to the target.
    pub suites: Option<Vec<Suite>>,
    pub max_degree: Option<u32>,
    pub oracle_cap: usize,
    pub corrections: Option<PathBuf>,
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            algebra: "g2-borel".to_string(),
            n: None,
            characteristic: 0,
            suites: None,
            max_degree: None,
            oracle_cap: SuiteOptions::default().oracle_cap,
            corrections: None,
            jobs: 1,
        }
    }
}

pub fn parse_suites(s: &str) -> Result<Vec<Suite>, CliError> {
    let mut out = Vec::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let suite = Suite::parse(part).map_err(|_| CliError::Config(format!("unknown suite `{}`", part.trim())))?;
        if !out.contains(&suite) {
            out.push(suite);
        }
    }
    if out.is_empty() {
        return Err(CliError::Config("empty suite list".to_string()));
    }
    Ok(out)
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// The overlay and the hash of its text.
pub fn load_overlay(path: Option<&Path>) -> Result<(Corrections, String), CliError> {
    let text = match path {
        Some(p) => read(p)?,
        None => DEFAULT_OVERLAY.to_string(),
    };
    Ok((Corrections::parse(&text)?, sha256_hex(text.as_bytes())))
}

pub fn resolve_target(cfg: &RunConfig, overlay: &Corrections) -> Result<Target, CliError> {
    if cfg.oracle_cap == 0 || cfg.max_degree == Some(0) || cfg.jobs == 0 {
        return Err(CliError::Config("caps and --jobs must be positive".to_string()));
    }
    if cfg.characteristic == 2 {
        return Err(CliError::Config(format!("p=2 excluded for {}", cfg.algebra)));
    }
    let field = Field::from_characteristic(cfg.characteristic)?;
    match AlgebraSelector::parse(&cfg.algebra) {
        AlgebraSelector::Catalog { family, level } => {
            let n = match (family, cfg.n) {
                (Family::Cn, Some(n)) if n >= 1 => n,
                (Family::Cn, _) => return Err(CliError::Config("cn algebras need --n >= 1".to_string())),
                (_, Some(_)) => return Err(CliError::Config("--n applies only to cn algebras".to_string())),
                (_, None) => 0,
            };
            Ok(Target::catalog(family, n, level, field, overlay)?)
        }
        AlgebraSelector::File(path) => {
            let text = read(&path)?;
            let file: TableFile = serde_json::from_str(&text)
                .map_err(|e| CliError::Config(format!("{}: malformed table: {e}", path.display())))?;
            let table = file.to_table()?;
            if let Field::Prime(p) = field {
                table.check_prime(p)?;
            }
            Ok(Target::custom(table.over(field)?, file.family)?)
        }
    }
}

fn config_echo(cfg: &RunConfig, suites: &[Suite]) -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    m.insert("algebra".to_string(), cfg.algebra.clone());
    if let Some(n) = cfg.n {
        m.insert("n".to_string(), n.to_string());
    }
    m.insert("char".to_string(), cfg.characteristic.to_string());
    m.insert("suites".to_string(), suites.iter().map(|s| s.name()).collect::<Vec<_>>().join(","));
    if let Some(d) = cfg.max_degree {
        m.insert("max-degree".to_string(), d.to_string());
    }
    m.insert("oracle-cap".to_string(), cfg.oracle_cap.to_string());
    m
}

/// Runs the selected suites, in parallel up to `jobs`, and merges the
/// results in suite order.
pub fn cmd_verify(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let (overlay, sha) = load_overlay(cfg.corrections.as_deref())?;
    let target = resolve_target(cfg, &overlay)?;
    let suites = match &cfg.suites {
        Some(s) => {
            if let Some(bad) = s.iter().find(|s| !target.supports(**s)) {
                return Err(CliError::Config(format!(
                    "suite {} does not apply to {} over {}",
                    bad.name(),
                    target.table.name(),
                    target.field()
                )));
            }
            s.clone()
        }
        None => target.applicable_suites(),
    };
    let opts = SuiteOptions { max_degree: cfg.max_degree, oracle_cap: cfg.oracle_cap, ..SuiteOptions::default() };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::Config(format!("thread pool: {e}")))?;
    let reports: Vec<SuiteReport> =
        pool.install(|| suites.par_iter().map(|s| run_suite(&target, *s, &overlay, &opts)).collect::<Result<_, _>>())?;
    Ok(VerificationReport::new(config_echo(cfg, &suites), sha, target.applied.clone(), reports))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantLine {
    pub name: String,
    pub degree: u32,
    pub poly: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleLine {
    pub degree: u32,
    pub dimension: usize,
    pub generated: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantsOutput {
    pub algebra: String,
    pub field: String,
    pub invariants: Vec<InvariantLine>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub oracle: Vec<OracleLine>,
}

impl InvariantsOutput {
    /// Every oracle degree matches the generated span.
    pub fn consistent(&self) -> bool {
        self.oracle.iter().all(|o| o.witness.is_none() && o.dimension == o.generated)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} over {}\n", self.algebra, self.field);
        for c in &self.invariants {
            out.push_str(&format!("{} = {}    (degree {})\n", c.name, c.poly, c.degree));
        }
        for o in &self.oracle {
            out.push_str(&format!("degree {}: dimension {} (generated {})", o.degree, o.dimension, o.generated));
            if let Some(w) = &o.witness {
                out.push_str(&format!(", witness {w}"));
            }
            out.push('\n');
        }
        out
    }
}

/// The invariant family of the target and, with `oracle`, the brute-force
/// dimensions per degree.
pub fn cmd_invariants(cfg: &RunConfig, oracle: bool) -> Result<InvariantsOutput, CliError> {
    let (overlay, _) = load_overlay(cfg.corrections.as_deref())?;
    let target = resolve_target(cfg, &overlay)?;
    let fam = target
        .invariants
        .as_ref()
        .ok_or_else(|| CliError::Config(format!("{} has no invariant family", target.table.name())))?;
    let reg = target.table.registry();
    let invariants = fam
        .cs()
        .into_iter()
        .map(|(name, c)| InvariantLine {
            name: name.to_string(),
            degree: c.degree().unwrap_or(0),
            poly: c.to_text(reg),
        })
        .collect();
    let oracle = if oracle {
        oracle_comparisons(&target.table, fam, cfg.max_degree, cfg.oracle_cap)?
            .into_iter()
            .map(|c| OracleLine {
                degree: c.degree,
                dimension: c.oracle_dim,
                generated: c.generated_dim,
                witness: c.witness.map(|w| w.to_text(reg)),
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(InvariantsOutput {
        algebra: target.table.name().to_string(),
        field: target.field().to_string(),
        invariants,
        oracle,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

pub fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Markdown => report.to_markdown(),
    }
}

/// Reads a json report written by `verify`.
pub fn read_report(path: &Path) -> Result<VerificationReport, CliError> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: malformed report: {e}", path.display())))
}

/// The built-in table at the configured level, as a table file.
pub fn cmd_export_table(cfg: &RunConfig) -> Result<TableFile, CliError> {
    let (overlay, _) = load_overlay(cfg.corrections.as_deref())?;
    let cfg = RunConfig { characteristic: 0, ..cfg.clone() };
    if matches!(AlgebraSelector::parse(&cfg.algebra), AlgebraSelector::File(_)) {
        return Err(CliError::Config("export-table needs a built-in algebra".to_string()));
    }
    let target = resolve_target(&cfg, &overlay)?;
    Ok(TableFile::from_table(&target.table, target.family))
}
