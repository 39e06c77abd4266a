//! S_n(t) from the integral of (σ − ½)^n ζ'/ζ(σ + it) and from sums of the
//! kernels f_n over zero ordinates.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::{envelope_bounds, theorem1_constants};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_breaks, QuadratureConfig};
use crate::specialfn::{eval_f, MomentOrder};
use crate::sum::{Neumaier, NeumaierComplex};
use crate::zerodata::{zeros_near, KernelEnvelope, ZeroTable};
use crate::zetakernel::{log_deriv_zeta, von_mangoldt, zeta_and_derivative, VonMangoldtTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Integral,
    ZeroSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentValue {
    pub n: usize,
    pub t: f64,
    pub value: f64,
    pub method: Method,
    pub error_budget: f64,
}

/// Beyond this abscissa the Dirichlet series of ζ'/ζ is integrated termwise.
pub const SIGMA_SPLIT: f64 = 4.0;

/// Prime powers k ≤ PRIME_POWER_LIMIT enter the Dirichlet tail.
pub const PRIME_POWER_LIMIT: usize = 100_000;

/// |ζ/ζ'|(½ + it) below this is treated as t sitting on an ordinate.
pub const ORDINATE_EXCLUSION: f64 = 1e-6;

fn prime_table() -> &'static VonMangoldtTable {
    static TABLE: OnceLock<VonMangoldtTable> = OnceLock::new();
    TABLE.get_or_init(|| von_mangoldt(PRIME_POWER_LIMIT))
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// Σ_j n!/(n−j)! c^{n−j}/L^{j+1} = ∫_0^∞ (u + c)^n e^{−Lu} du.
fn moment_poly(n: usize, c: f64, l: f64) -> f64 {
    let mut acc = Neumaier::new();
    let mut falling = 1.0;
    for j in 0..=n {
        acc.add(falling * c.powi((n - j) as i32) / l.powi(j as i32 + 1));
        falling *= (n - j) as f64;
    }
    acc.value()
}

/// ∫_{σ0}^∞ (σ−½)^n ζ'/ζ(σ+it) dσ = −Σ Λ(k) k^{−it} k^{−σ0} Σ_j ..., with a
/// bound for prime powers above the table limit.
fn dirichlet_tail(n: usize, t: f64, sigma0: f64) -> (Complex64, f64) {
    let vmt = prime_table();
    let c = sigma0 - 0.5;
    let mut acc = NeumaierComplex::new();
    for (k, lam) in vmt.prime_powers() {
        let l = (k as f64).ln();
        let w = lam * (-sigma0 * l).exp() * moment_poly(n, c, l);
        let (s, co) = (t * l).sin_cos();
        acc.add(Complex64::new(-w * co, w * s));
    }
    // Σ_{k>K} Λ(k) k^{−σ0} P(log k) ≤ 2 ∫_K^∞ x^{−σ0} P(log x) dx, P decreasing.
    let big_k = vmt.limit() as f64;
    let lk = big_k.ln();
    let bound = 2.0 * big_k.powf(1.0 - sigma0) / (sigma0 - 1.0) * moment_poly(n, c, lk) * lk;
    (acc.value(), bound)
}

/// ∫_{½}^{σ1} (σ−½)^n / (σ − 1 + it) dσ in closed form, t > 0.
fn pole_part(n: usize, t: f64, sigma1: f64) -> Complex64 {
    let c = Complex64::new(0.5, -t);
    let wa = Complex64::new(-0.5, t);
    let wb = Complex64::new(sigma1 - 1.0, t);
    let mut acc = c.powu(n as u32) * (wb.ln() - wa.ln());
    let mut binom = 1.0;
    for j in 1..=n {
        binom *= (n - j + 1) as f64 / j as f64;
        acc += c.powu((n - j) as u32) * binom * (wb.powu(j as u32) - wa.powu(j as u32)) / j as f64;
    }
    acc
}

/// S_n(t) = −(1/π) Im{ iⁿ/n! ∫_{½}^∞ (σ−½)ⁿ ζ'/ζ(σ+it) dσ }.
///
/// The pole −1/(s−1) is removed from the integrand and integrated exactly;
/// the remainder is integrated adaptively on [½, 4] and termwise beyond.
pub fn s_n_integral(n: usize, t: f64, q: &QuadratureConfig) -> Result<MomentValue> {
    if !(t > 0.0) {
        return Err(Error::InvalidArgument(format!("t must be positive, got {t}")));
    }
    if n <= 1 {
        let s = Complex64::new(0.5, t);
        let (z, dz) = zeta_and_derivative(s, 1e-14)?;
        let distance = z.norm() / dz.norm();
        if distance < ORDINATE_EXCLUSION {
            return Err(Error::NearOrdinate { t, distance });
        }
    }
    let mut first_err = None;
    let mut part = |im: bool| {
        let f = |sigma: f64| {
            let s = Complex64::new(sigma, t);
            match log_deriv_zeta(s, 1e-15) {
                Ok(v) => {
                    let regular = v + 1.0 / (s - 1.0);
                    let w = (sigma - 0.5).powi(n as i32);
                    w * if im { regular.im } else { regular.re }
                }
                Err(e) => {
                    first_err.get_or_insert(e);
                    f64::NAN
                }
            }
        };
        integrate_breaks(f, &[0.5, 1.0, 1.5, 2.5, SIGMA_SPLIT], q)
    };
    let re = part(false);
    let im = part(true);
    if let Some(e) = first_err {
        return Err(e);
    }
    let (re, im) = (re?, im?);
    let (tail, tail_bound) = dirichlet_tail(n, t, SIGMA_SPLIT);
    let integral = Complex64::new(re.value, im.value) - pole_part(n, t, SIGMA_SPLIT) + tail;
    let picked = match n % 4 {
        0 => integral.im,
        1 => integral.re,
        2 => -integral.im,
        _ => -integral.re,
    };
    let scale = 1.0 / (PI * factorial(n));
    Ok(MomentValue {
        n,
        t,
        value: -scale * picked,
        method: Method::Integral,
        error_budget: scale * (re.error + im.error + tail_bound),
    })
}

/// Half-width of the default zero window: everything the table covers.
pub fn full_window(table: &ZeroTable, t: f64) -> f64 {
    let max = table.max_height();
    let mut w = max - t;
    while w > 0.0 && t + w > max {
        w = f64::from_bits(w.to_bits() - 1);
    }
    w
}

/// The main term of the representation by zero sums; the O(1) is not
/// included.
///
/// n = 2m: (−1)^m/(π(2m)!) Σ_γ f_{2m}(t−γ).
/// n = 2m+1: (−1)^m log t/(2π(2m+2)!) − (−1)^m/(π(2m)!) Σ_γ f_{2m+1}(t−γ).
/// The sums run over ordinates of both signs.
pub fn s_n_zero_sum(n: usize, t: f64, table: &ZeroTable, window: f64) -> Result<MomentValue> {
    if n == 0 {
        return Err(Error::InvalidArgument("the zero-sum form needs n ≥ 1".into()));
    }
    if !(t >= 2.0) {
        return Err(Error::InvalidArgument(format!("the zero-sum form needs t ≥ 2, got {t}")));
    }
    let order = MomentOrder::new(n);
    let m = order.m();
    let env = KernelEnvelope::for_kernel(order);
    let zw = zeros_near(table, t, window, env)?;
    let mut acc = Neumaier::new();
    for g in &zw.direct {
        acc.add(eval_f(order, t - g));
    }
    for g in &zw.mirrored {
        acc.add(eval_f(order, t + g));
    }
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let pre = sign / (PI * factorial(2 * m));
    let value = if order.is_odd() {
        sign * t.ln() / (2.0 * PI * factorial(2 * m + 2)) - pre * acc.value()
    } else {
        pre * acc.value()
    };
    Ok(MomentValue { n, t, value, method: Method::ZeroSum, error_budget: pre.abs() * zw.tail_bound })
}

/// |(S_n(t+h) − S_n(t−h))/(2h) − S_{n−1}(t)| with every value from the
/// integral form.
pub fn derivative_chain_check(n: usize, t: f64, h: f64, q: &QuadratureConfig) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("derivative chain needs n ≥ 2, got {n}")));
    }
    if !(h > 0.0 && h < t) {
        return Err(Error::InvalidArgument(format!("step h must lie in (0, t), got {h}")));
    }
    let up = s_n_integral(n, t + h, q)?.value;
    let down = s_n_integral(n, t - h, q)?.value;
    let lower = s_n_integral(n - 1, t, q)?.value;
    Ok(((up - down) / (2.0 * h) - lower).abs())
}

/// Slack in the o(1) of the envelope used for the calibrated column.
pub const CALIBRATED_SLACK: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeRow {
    pub t: f64,
    pub s_n: f64,
    pub lower: f64,
    pub upper: f64,
    /// S_n over the envelope on its side, slack 0.
    pub ratio: f64,
    /// The same with [`CALIBRATED_SLACK`].
    pub ratio_calibrated: f64,
}

fn side_ratio(s: f64, lower: f64, upper: f64) -> f64 {
    if s >= 0.0 {
        s / upper
    } else {
        s / lower
    }
}

/// S_n from the zero sum against the envelopes ∓C_n^∓ ℓ_{n+1}(t).
pub fn envelope_report(n: usize, t_grid: &[f64], table: &ZeroTable) -> Result<Vec<EnvelopeRow>> {
    theorem1_constants(n)?;
    t_grid
        .iter()
        .map(|&t| {
            let s = s_n_zero_sum(n, t, table, full_window(table, t))?.value;
            let (lower, upper) = envelope_bounds(n, t, 0.0)?;
            let (cl, cu) = envelope_bounds(n, t, CALIBRATED_SLACK)?;
            Ok(EnvelopeRow {
                t,
                s_n: s,
                lower,
                upper,
                ratio: side_ratio(s, lower, upper),
                ratio_calibrated: side_ratio(s, cl, cu),
            })
        })
        .collect()
}
