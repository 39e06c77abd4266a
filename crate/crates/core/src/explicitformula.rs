//! Both sides of the Guinand–Weil explicit formula for h(z) = g(t − z),
//! g one of the extremal functions, and the asymptotics of its
//! archimedean term.
//!
//! Σ_γ g(t−γ) = 2 Re g(t + i/2) − (log π/2π) ĝ(0)
//!     + (1/2π) ∫ g(t−x) Re ψ(1/4 + ix/2) dx
//!     − (1/π) Σ_k Λ(k)/√k ĝ(log k/2π) cos(t log k).

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{node_breakpoints, Approximant, ApproximantSpec, Side};
use crate::quadrature::{GaussLegendre, QuadratureConfig};
use crate::sum::Neumaier;
use crate::zerodata::{tail_mass_bound, zeros_near, KernelEnvelope, ZeroTable};
use crate::zetakernel::{digamma_re_quarter, zeta_real, VonMangoldtTable};

/// Half-width of the archimedean quadrature around x = t.
pub const ARCHIMEDEAN_HALF_WIDTH: f64 = 1e3;

/// Zero-side tail bound above which the window grows to the whole table.
pub const ZERO_TAIL_TARGET: f64 = 0.01;

/// Audits whose total budget exceeds this are refused.
pub const BUDGET_LIMIT: f64 = 1.0;

/// |boundary| ≤ BOUNDARY_CONSTANT · Δ² e^{πΔ}/(1 + Δt), measured over
/// m ≤ 2, Δ ≤ 4, t ≥ 0 with a factor 2 margin.
pub const BOUNDARY_CONSTANT: f64 = 0.25;

/// |prime term| ≤ PRIME_CONSTANT · e^{πΔ}, measured the same way.
pub const PRIME_CONSTANT: f64 = 0.25;

/// Upper bound for [`archimedean_asymptotic_check`] at t ≥ 100, m ≤ 2,
/// Δ ≤ 2; the largest measured value is 0.04 (m = 0, t = 100).
pub const ASYMPTOTIC_DEFECT_BOUND: f64 = 0.1;

/// Error bounds feeding the ledger budget.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct BudgetBreakdown {
    pub zero_tail: f64,
    pub boundary: f64,
    pub log_pi: f64,
    pub archimedean_quadrature: f64,
    pub archimedean_tail: f64,
    pub prime: f64,
}

impl BudgetBreakdown {
    pub fn total(&self) -> f64 {
        self.zero_tail + self.boundary + self.log_pi + self.archimedean_quadrature + self.archimedean_tail + self.prime
    }

    /// Name of the largest contribution.
    pub fn dominant(&self) -> &'static str {
        let items = [
            ("zero_side", self.zero_tail),
            ("boundary", self.boundary),
            ("log_pi", self.log_pi),
            ("archimedean_quadrature", self.archimedean_quadrature),
            ("archimedean_tail", self.archimedean_tail),
            ("prime", self.prime),
        ];
        items.iter().fold(items[0], |a, &b| if b.1 > a.1 { b } else { a }).0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExplicitFormulaLedger {
    pub m: usize,
    pub delta: f64,
    pub side: Side,
    pub t: f64,
    pub zero_side: f64,
    /// h(1/2i) + h(−1/2i) = 2 Re g(t + i/2).
    pub boundary_term: f64,
    pub log_pi_term: f64,
    pub archimedean_term: f64,
    pub prime_term: f64,
    pub budget: f64,
    pub breakdown: BudgetBreakdown,
    pub zero_window: f64,
    pub zeros_used: usize,
    pub prime_powers_used: usize,
}

impl ExplicitFormulaLedger {
    pub fn right_side(&self) -> f64 {
        self.boundary_term - self.log_pi_term + self.archimedean_term - self.prime_term
    }

    pub fn defect(&self) -> f64 {
        self.zero_side - self.right_side()
    }

    pub fn balanced(&self) -> bool {
        self.defect().abs() <= self.budget
    }
}

/// Default zero window max(200, 50/Δ).
pub fn default_zero_window(delta: f64) -> f64 {
    (50.0 / delta).max(200.0)
}

struct Term {
    value: f64,
    error: f64,
}

fn zero_side(g: &Approximant, t: f64, table: &ZeroTable, scale: f64) -> Result<(Term, f64, usize)> {
    let env = KernelEnvelope { coefficient: g.decay_constant(), exponent: 2.0 };
    let mut window = default_zero_window(g.spec().delta);
    if t + window > table.max_height() {
        return Err(Error::Coverage { needed: t + window, available: table.max_height() });
    }
    let full = table.max_height() - t;
    if tail_mass_bound(t, window, env) > ZERO_TAIL_TARGET && full > window {
        window = full;
    }
    let zw = zeros_near(table, t, window, env)?;
    let mut acc = Neumaier::new();
    for &gamma in &zw.direct {
        acc.add(scale * g.value(t - gamma));
    }
    for &gamma in &zw.mirrored {
        acc.add(scale * g.value(t + gamma));
    }
    // g.value carries the unchecked series; its certified tail is base_tail_bound per point
    let count = zw.direct.len() + zw.mirrored.len();
    let error = scale.abs() * (zw.tail_bound + count as f64 * g.base_tail_bound());
    Ok((Term { value: acc.value(), error }, window, count))
}

fn boundary(g: &Approximant, t: f64, scale: f64) -> Result<Term> {
    let e = g.eval(Complex64::new(t, 0.5))?;
    Ok(Term { value: scale * 2.0 * e.value.re, error: scale.abs() * 2.0 * e.certified_tail })
}

fn log_pi(g: &Approximant, scale: f64) -> Term {
    let ft = g.fourier_analytic(0.0);
    let c = PI.ln() / (2.0 * PI);
    Term { value: scale * c * ft.value, error: scale.abs() * c * ft.error_budget }
}

/// (1/2π) ∫_{|u| ≤ L} g(u) Re ψ(1/4 + i(t−u)/2) du by Gauss–Legendre between
/// interpolation nodes, with 16- against 10-point error estimate, and the
/// tail bound (K/π)(5.3 + log(1 + t + L))/L.
///
/// The tail uses |Re ψ(1/4 + iv)| ≤ 4.3 + log(1 + |v|).
fn archimedean(g: &Approximant, t: f64, q: &QuadratureConfig, scale: f64) -> (Term, f64) {
    let l = ARCHIMEDEAN_HALF_WIDTH;
    let order = q.gauss_order.max(8);
    let hi_rule = GaussLegendre::new(order);
    let lo_rule = GaussLegendre::new(order * 2 / 3);
    let pts = node_breakpoints(g.spec(), -l, l);
    let mut hi = Neumaier::new();
    let mut lo = Neumaier::new();
    let f = |u: f64| g.value(u) * digamma_re_quarter(t - u);
    for w in pts.windows(2) {
        hi.add(hi_rule.integrate(f, w[0], w[1]));
        lo.add(lo_rule.integrate(f, w[0], w[1]));
    }
    let c = scale / (2.0 * PI);
    let quad = c.abs() * (hi.value() - lo.value()).abs() + 4.0 * f64::EPSILON * c.abs() * pts.len() as f64;
    let tail = scale.abs() * g.decay_constant() / PI * (5.3 + (1.0 + t.abs() + l).ln()) / l;
    (Term { value: c * hi.value(), error: quad }, tail)
}

fn prime(g: &Approximant, t: f64, vmt: &VonMangoldtTable, scale: f64) -> Result<(Term, usize)> {
    let delta = g.spec().delta;
    let length = (2.0 * PI * delta).exp().floor();
    if length > vmt.limit() as f64 {
        return Err(Error::InvalidArgument(format!(
            "prime term needs Λ(k) for k ≤ {length}, table stops at {}",
            vmt.limit()
        )));
    }
    let length = length as usize;
    let mut acc = Neumaier::new();
    let mut err = 0.0;
    let mut used = 0;
    for (k, lam) in vmt.prime_powers().take_while(|&(k, _)| k <= length) {
        let lk = (k as f64).ln();
        let ft = g.fourier_analytic(lk / (2.0 * PI));
        let w = lam / (k as f64).sqrt();
        acc.add(w * ft.value * (t * lk).cos());
        err += w * ft.error_budget;
        used += 1;
    }
    let c = scale / PI;
    Ok((Term { value: c * acc.value(), error: c.abs() * err }, used))
}

/// Evaluates every term of the explicit formula for h(z) = g(t − z).
pub fn gw_audit(
    spec: &ApproximantSpec,
    t: f64,
    table: &ZeroTable,
    vmt: &VonMangoldtTable,
    q: &QuadratureConfig,
) -> Result<ExplicitFormulaLedger> {
    gw_audit_scaled(spec, t, table, vmt, q, 1.0)
}

/// [`gw_audit`] for the test function scale·g.
pub fn gw_audit_scaled(
    spec: &ApproximantSpec,
    t: f64,
    table: &ZeroTable,
    vmt: &VonMangoldtTable,
    q: &QuadratureConfig,
    scale: f64,
) -> Result<ExplicitFormulaLedger> {
    if !t.is_finite() {
        return Err(Error::InvalidArgument(format!("t must be finite, got {t}")));
    }
    if !(scale.is_finite() && scale != 0.0) {
        return Err(Error::InvalidArgument(format!("scale must be finite and nonzero, got {scale}")));
    }
    let g = Approximant::new(*spec)?;
    let (zeros, window, zeros_used) = zero_side(&g, t, table, scale)?;
    let bd = boundary(&g, t, scale)?;
    let lp = log_pi(&g, scale);
    let (arch, arch_tail) = archimedean(&g, t, q, scale);
    let (pr, prime_powers_used) = prime(&g, t, vmt, scale)?;
    let breakdown = BudgetBreakdown {
        zero_tail: zeros.error,
        boundary: bd.error,
        log_pi: lp.error,
        archimedean_quadrature: arch.error,
        archimedean_tail: arch_tail,
        prime: pr.error,
    };
    let budget = breakdown.total();
    if !budget.is_finite() || budget > BUDGET_LIMIT * scale.abs() {
        return Err(Error::Budget { term: breakdown.dominant(), budget, limit: BUDGET_LIMIT * scale.abs() });
    }
    Ok(ExplicitFormulaLedger {
        m: spec.m,
        delta: spec.delta,
        side: spec.side,
        t,
        zero_side: zeros.value,
        boundary_term: bd.value,
        log_pi_term: lp.value,
        archimedean_term: arch.value,
        prime_term: pr.value,
        budget,
        breakdown,
        zero_window: window,
        zeros_used,
        prime_powers_used,
    })
}

/// The archimedean term alone, with its quadrature and tail bounds added.
pub fn archimedean_term(spec: &ApproximantSpec, t: f64, q: &QuadratureConfig) -> Result<(f64, f64)> {
    let g = Approximant::new(*spec)?;
    let (a, tail) = archimedean(&g, t, q, 1.0);
    Ok((a.value, a.error + tail))
}

/// 2 Re g(t + i/2) with its certified tail.
pub fn boundary_term(spec: &ApproximantSpec, t: f64) -> Result<(f64, f64)> {
    let b = boundary(&Approximant::new(*spec)?, t, 1.0)?;
    Ok((b.value, b.error))
}

/// (1/π) Σ_{k ≤ e^{2πΔ}} Λ(k)/√k ĝ(log k/2π) cos(t log k) with its bound.
pub fn prime_term(spec: &ApproximantSpec, t: f64, vmt: &VonMangoldtTable) -> Result<(f64, f64)> {
    let (p, _) = prime(&Approximant::new(*spec)?, t, vmt, 1.0)?;
    Ok((p.value, p.error))
}

/// Coefficient of log t in the correction: +(2m)! ζ(2m+2)/(2πΔ)^{2m+2} for
/// the majorant, −(2m)! (1 − 2^{−2m−1}) ζ(2m+2)/(2πΔ)^{2m+2} for the minorant.
pub fn archimedean_correction(spec: &ApproximantSpec) -> Result<f64> {
    let m = spec.m;
    let fact: f64 = (1..=2 * m).map(|i| i as f64).product();
    let z = zeta_real((2 * m + 2) as f64)?;
    let base = fact * z / (2.0 * PI * spec.delta).powi(2 * m as i32 + 2);
    Ok(match spec.side {
        Side::Majorant => base,
        Side::Minorant => -(1.0 - 2f64.powi(-(2 * m as i32) - 1)) * base,
    })
}

/// |A(t) − (log t/(2(2m+1)(2m+2)) + c log t)| / log t, A the archimedean term
/// and c from [`archimedean_correction`].
pub fn archimedean_asymptotic_check(spec: &ApproximantSpec, t: f64, q: &QuadratureConfig) -> Result<f64> {
    if !(t >= 10.0) {
        return Err(Error::InvalidArgument(format!("the asymptotic check needs t ≥ 10, got {t}")));
    }
    let (a, _) = archimedean_term(spec, t, q)?;
    let m = spec.m as f64;
    let lt = t.ln();
    let main = lt / (2.0 * (2.0 * m + 1.0) * (2.0 * m + 2.0));
    let predicted = main + archimedean_correction(spec)? * lt;
    Ok((a - predicted).abs() / lt)
}
