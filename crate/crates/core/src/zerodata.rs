//! Tables of ordinates γ of nontrivial zeta zeros.

use std::f64::consts::PI;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// γ_1, the lowest ordinate.
pub const FIRST_ORDINATE: f64 = 14.134_725_141_734_693;

const FIRST_ORDINATE_TOL: f64 = 1e-4;

const BUNDLED: &str = include_str!("../data/zeros_10k.txt");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    max_height: f64,
    source: String,
}

impl ZeroTable {
    /// Parses one ordinate per line; blank lines and lines starting with '#'
    /// are ignored.
    pub fn parse(text: &str, source: impl Into<String>) -> Result<Self> {
        let mut ordinates: Vec<f64> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let gamma: f64 = line.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("not a decimal ordinate: {line:?}"),
            })?;
            if !gamma.is_finite() || gamma <= 0.0 {
                return Err(Error::Parse { line: line_no, message: format!("ordinate must be positive and finite, got {gamma}") });
            }
            if let Some(&prev) = ordinates.last() {
                if gamma <= prev {
                    return Err(Error::NonMonotone { line: line_no });
                }
            }
            ordinates.push(gamma);
        }
        let first = *ordinates.first().ok_or(Error::EmptyTable)?;
        if (first - FIRST_ORDINATE).abs() > FIRST_ORDINATE_TOL {
            return Err(Error::Parse {
                line: 1,
                message: format!("first ordinate {first} is not the lowest zero {FIRST_ORDINATE}"),
            });
        }
        let max_height = *ordinates.last().unwrap();
        Ok(Self { ordinates, max_height, source: source.into() })
    }

    /// The first 10⁴ ordinates shipped with the crate.
    pub fn bundled() -> Self {
        Self::parse(BUNDLED, "bundled: zeros_10k.txt").expect("bundled zero table is valid")
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn max_height(&self) -> f64 {
        self.max_height
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// Distance from t to the nearest tabulated ordinate.
    pub fn distance_to_nearest(&self, t: f64) -> f64 {
        let i = self.ordinates.partition_point(|&g| g < t);
        let mut d = f64::INFINITY;
        if i < self.ordinates.len() {
            d = d.min((self.ordinates[i] - t).abs());
        }
        if i > 0 {
            d = d.min((t - self.ordinates[i - 1]).abs());
        }
        d
    }
}

pub fn load_zero_table(path: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    ZeroTable::parse(&text, path.display().to_string())
}

/// A decay envelope |k(x)| ≤ coefficient / |x|^exponent valid for |x| ≥ 2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelEnvelope {
    pub coefficient: f64,
    pub exponent: f64,
}

impl KernelEnvelope {
    /// Leading term of the series at infinity bounds the alternating tail:
    /// 1/((2m+1)(2m+3) x²) for n = 2m+1 and 2/((2m+1)(2m+3) |x|³) for n = 2m.
    pub fn for_kernel(order: crate::specialfn::MomentOrder) -> Self {
        let m = order.m() as f64;
        let base = 1.0 / ((2.0 * m + 1.0) * (2.0 * m + 3.0));
        if order.is_odd() {
            Self { coefficient: base, exponent: 2.0 }
        } else {
            Self { coefficient: 2.0 * base, exponent: 3.0 }
        }
    }
}

/// Zeros selected for Σ_γ k(t − γ) over all γ of both signs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroWindow {
    pub t: f64,
    pub window: f64,
    /// γ > 0 with |t − γ| ≤ window.
    pub direct: Vec<f64>,
    /// γ > 0 with t + γ ≤ window, i.e. the conjugate ordinates −γ in range.
    pub mirrored: Vec<f64>,
    /// Bound on Σ |k| over every excluded ordinate, both signs.
    pub tail_bound: f64,
}

const DENSITY_SAFETY: f64 = 2.0;

/// Bound on Σ_{excluded γ} c/|t − γ|^p.
///
/// Zero density is taken as log(γ/2π)/2π with a safety factor 2. Three
/// families are excluded (above the window, below it, and the conjugates);
/// each is dominated by ∫_W^∞ c x^{−p} ρ(t + x) dx with
/// log(t + x) ≤ log(t + W) + log(x/W), which integrates to
/// W^{1−p} (L/(p−1) + 1/(p−1)²) with L = log((t + W)/2π).
pub fn tail_mass_bound(t: f64, window: f64, envelope: KernelEnvelope) -> f64 {
    let p = envelope.exponent;
    let l = ((t.abs() + window) / (2.0 * PI)).ln().max(1.0);
    let integral = window.powf(1.0 - p) * (l / (p - 1.0) + 1.0 / ((p - 1.0) * (p - 1.0)));
    3.0 * DENSITY_SAFETY * envelope.coefficient * integral / (2.0 * PI)
}

/// Ordinates within `window` of t together with a bound for the rest.
pub fn zeros_near(table: &ZeroTable, t: f64, window: f64, envelope: KernelEnvelope) -> Result<ZeroWindow> {
    if t >= table.max_height {
        return Err(Error::Coverage { needed: t, available: table.max_height });
    }
    if !(window > 0.0) {
        return Err(Error::InvalidArgument(format!("window must be positive, got {window}")));
    }
    if t + window > table.max_height {
        return Err(Error::Coverage { needed: t + window, available: table.max_height });
    }
    let g = &table.ordinates;
    let lo = g.partition_point(|&x| x < t - window);
    let hi = g.partition_point(|&x| x <= t + window);
    let direct = g[lo..hi].to_vec();
    let mirror_hi = g.partition_point(|&x| x <= window - t);
    let mirrored = g[..mirror_hi].to_vec();
    Ok(ZeroWindow {
        t,
        window,
        direct,
        mirrored,
        tail_bound: tail_mass_bound(t, window.max(2.0), envelope),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_table() {
        let t = ZeroTable::parse("14.134725141734\n", "inline").unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.max_height(), 14.134725141734);
    }

    #[test]
    fn decreasing_entries_are_rejected() {
        let r = ZeroTable::parse("14.134725141734\n25.0\n21.0\n", "inline");
        assert_eq!(r, Err(Error::NonMonotone { line: 3 }));
    }

    #[test]
    fn malformed_line_reports_its_number() {
        let r = ZeroTable::parse("# header\n14.134725141734\nabc\n", "inline");
        assert!(matches!(r, Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn empty_file() {
        assert_eq!(ZeroTable::parse("# nothing\n\n", "inline"), Err(Error::EmptyTable));
    }

    #[test]
    fn bundled_table_shape() {
        let t = ZeroTable::bundled();
        assert_eq!(t.len(), 10_000);
        assert!((t.ordinates()[0] - FIRST_ORDINATE).abs() < 1e-9);
        assert!((t.max_height() - 9877.782654005).abs() < 1e-6);
    }

    #[test]
    fn coverage_is_enforced() {
        let t = ZeroTable::bundled();
        let env = KernelEnvelope { coefficient: 1.0, exponent: 2.0 };
        assert!(matches!(zeros_near(&t, 20_000.0, 10.0, env), Err(Error::Coverage { .. })));
    }
}
