use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, ValueEnum};
use snt_core::extremal::Side;
use snt_core::{load_zero_table, QuadratureConfig, ZeroTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        <Format as ValueEnum>::from_str(s, true).map_err(|e| anyhow!(e))
    }
}

/// Flags shared by every subcommand. Unset flags fall back to the config
/// file, then to defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Output format
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Zero table, one ordinate per line
    #[arg(long, global = true)]
    pub zeros: Option<PathBuf>,
    /// Absolute quadrature tolerance
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Flat key=value file
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true)]
    pub m: Option<usize>,
    #[arg(long, global = true)]
    pub delta: Option<f64>,
    #[arg(long, global = true)]
    pub side: Option<Side>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub t: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub x: Option<f64>,
    /// a:b:step, both ends included
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub grid: Option<String>,
    #[arg(long, global = true)]
    pub suite: Option<String>,
    #[arg(long = "n-max", global = true)]
    pub n_max: Option<usize>,
}

const KEYS: [&str; 13] = ["format", "zeros", "tol", "n", "m", "delta", "side", "t", "x", "grid", "suite", "n_max", "n-max"];

pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| anyhow!("config line {}: expected key=value", i + 1))?;
        let k = k.trim().replace('-', "_");
        if !KEYS.contains(&k.as_str()) {
            bail!("config line {}: unknown key {k:?}", i + 1);
        }
        out.insert(k, v.trim().to_string());
    }
    Ok(out)
}

fn pick<T: std::str::FromStr>(flag: Option<T>, file: &BTreeMap<String, String>, key: &str) -> Result<Option<T>>
where
    T::Err: std::fmt::Display,
{
    if flag.is_some() {
        return Ok(flag);
    }
    match file.get(key) {
        Some(v) => v.parse().map(Some).map_err(|e| anyhow!("config key {key}: {e}")),
        None => Ok(None),
    }
}

/// Where the zero table came from.
#[derive(Debug, Clone)]
pub enum ZeroSource {
    Bundled,
    File(PathBuf),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub format: Format,
    pub zeros: ZeroSource,
    pub quadrature: QuadratureConfig,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub delta: Option<f64>,
    pub side: Option<Side>,
    pub t: Option<f64>,
    pub x: Option<f64>,
    pub grid: Option<Grid>,
    pub suite: Option<String>,
    pub n_max: Option<usize>,
}

impl RunConfig {
    /// Flags, then the config file, then SNT_ZEROS, then built-in defaults.
    pub fn resolve(flags: &Flags, env_zeros: Option<String>) -> Result<Self> {
        let file = match &flags.config {
            Some(p) => {
                let text = std::fs::read_to_string(p).with_context(|| format!("reading config {}", p.display()))?;
                parse_config_text(&text)?
            }
            None => BTreeMap::new(),
        };
        let zeros_path: Option<PathBuf> = pick(flags.zeros.clone(), &file, "zeros")?;
        let zeros = match zeros_path.or(env_zeros.filter(|s| !s.is_empty()).map(PathBuf::from)) {
            Some(p) => ZeroSource::File(p),
            None => ZeroSource::Bundled,
        };
        let quadrature = match pick(flags.tol, &file, "tol")? {
            Some(tol) if tol > 0.0 && tol.is_finite() => QuadratureConfig::with_tol(tol),
            Some(tol) => bail!("tolerance must be positive, got {tol}"),
            None => QuadratureConfig::default(),
        };
        let grid: Option<String> = pick(flags.grid.clone(), &file, "grid")?;
        Ok(Self {
            format: pick(flags.format, &file, "format")?.unwrap_or(Format::Text),
            zeros,
            quadrature,
            n: pick(flags.n, &file, "n")?,
            m: pick(flags.m, &file, "m")?,
            delta: pick(flags.delta, &file, "delta")?,
            side: pick(flags.side, &file, "side")?,
            t: pick(flags.t, &file, "t")?,
            x: pick(flags.x, &file, "x")?,
            grid: grid.map(|g| g.parse()).transpose()?,
            suite: pick(flags.suite.clone(), &file, "suite")?,
            n_max: pick(flags.n_max, &file, "n_max")?,
        })
    }

    /// The zero table, or None when the configured file does not exist.
    pub fn zero_table(&self) -> Result<Option<ZeroTable>> {
        match &self.zeros {
            ZeroSource::Bundled => Ok(Some(ZeroTable::bundled())),
            ZeroSource::File(p) if !Path::new(p).exists() => Ok(None),
            ZeroSource::File(p) => Ok(Some(load_zero_table(p)?)),
        }
    }

    pub fn require_zero_table(&self) -> Result<ZeroTable> {
        self.zero_table()?.ok_or_else(|| match &self.zeros {
            ZeroSource::File(p) => anyhow!("zero table {} not found", p.display()),
            ZeroSource::Bundled => anyhow!("bundled zero table unavailable"),
        })
    }

    /// Points from --grid, else the single value `single`.
    pub fn points(&self, single: Option<f64>, name: &str) -> Result<Vec<f64>> {
        match (&self.grid, single) {
            (Some(g), _) => Ok(g.points()),
            (None, Some(v)) => Ok(vec![v]),
            (None, None) => bail!("--{name} or --grid is required"),
        }
    }

    pub fn need<T: Copy>(&self, v: Option<T>, name: &str) -> Result<T> {
        v.ok_or_else(|| anyhow!("--{name} is required"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl std::str::FromStr for Grid {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            bail!("grid must look like a:b:step, got {s:?}");
        }
        let v: Vec<f64> = parts
            .iter()
            .map(|p| p.trim().parse::<f64>().map_err(|e| anyhow!("grid {s:?}: {e}")))
            .collect::<Result<_>>()?;
        let g = Grid { start: v[0], end: v[1], step: v[2] };
        if !(g.step > 0.0 && g.end >= g.start && v.iter().all(|x| x.is_finite())) {
            bail!("grid {s:?} needs start ≤ end and a positive step");
        }
        if (g.end - g.start) / g.step > 1e6 {
            bail!("grid {s:?} has more than 10^6 points");
        }
        Ok(g)
    }
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        let count = ((self.end - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..count).map(|i| self.start + i as f64 * self.step).collect()
    }
}
