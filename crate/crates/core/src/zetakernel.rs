//! Riemann zeta, its logarithmic derivative, digamma and the von Mangoldt
//! function, in double precision.
//!
//! ζ and ζ' use Euler–Maclaurin summation with N = max(10, ⌈|t|⌉) leading
//! terms and Bernoulli corrections through B_20. N is doubled until the
//! remainder bound meets the requested tolerance.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sum::{Neumaier, NeumaierComplex};

/// Largest |t| accepted by the Euler–Maclaurin evaluator.
pub const MAX_HEIGHT: f64 = 1e4;

/// |ζ| below this is treated as a zero.
pub const ZERO_PROXIMITY: f64 = 1e-8;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

// B_{2k}, k = 1..=11.
const BERNOULLI_EVEN: [f64; 11] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
];

const EM_TERMS: usize = 10;

/// B_{2k} / (2k)!.
pub fn bernoulli_over_factorial(k: usize) -> f64 {
    let mut f = 1.0;
    for i in 1..=(2 * k) {
        f *= i as f64;
    }
    BERNOULLI_EVEN[k - 1] / f
}

fn em_coefficients() -> &'static [f64; 11] {
    static C: OnceLock<[f64; 11]> = OnceLock::new();
    C.get_or_init(|| {
        let mut c = [0.0; 11];
        for (k, slot) in c.iter_mut().enumerate() {
            *slot = bernoulli_over_factorial(k + 1);
        }
        c
    })
}

/// A point s = σ + it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexPoint {
    pub sigma: f64,
    pub t: f64,
}

impl ComplexPoint {
    pub fn new(sigma: f64, t: f64) -> Self {
        Self { sigma, t }
    }
}

impl From<ComplexPoint> for Complex64 {
    fn from(p: ComplexPoint) -> Self {
        Complex64::new(p.sigma, p.t)
    }
}

impl From<Complex64> for ComplexPoint {
    fn from(z: Complex64) -> Self {
        Self { sigma: z.re, t: z.im }
    }
}

impl From<f64> for ComplexPoint {
    fn from(x: f64) -> Self {
        Self { sigma: x, t: 0.0 }
    }
}

struct EmResult {
    zeta: Complex64,
    dzeta: Complex64,
    bound: f64,
    dbound: f64,
}

/// n^{-s} for integer n ≥ 1.
#[inline]
fn pow_neg(n: f64, s: Complex64) -> Complex64 {
    let ln = n.ln();
    let mag = (-s.re * ln).exp();
    let (sn, cs) = (s.im * ln).sin_cos();
    Complex64::new(mag * cs, -mag * sn)
}

fn euler_maclaurin(s: Complex64, n: usize, skip_first: bool) -> EmResult {
    let mut z = NeumaierComplex::new();
    let mut dz = NeumaierComplex::new();
    let start = if skip_first { 2 } else { 1 };
    for k in start..n {
        let kf = k as f64;
        let p = pow_neg(kf, s);
        z.add(p);
        dz.add(-p * kf.ln());
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    let n_s = pow_neg(nf, s);
    let sm1 = s - 1.0;
    let head = n_s * nf / sm1;
    z.add(head);
    z.add(n_s * 0.5);
    dz.add(-head * ln_n - head / sm1);
    dz.add(-n_s * 0.5 * ln_n);

    let c = em_coefficients();
    // P_k(s) = s(s+1)...(s+2k-2) and its derivative.
    let mut p = s;
    let mut dp = Complex64::new(1.0, 0.0);
    let mut npow = n_s / nf;
    let inv_n2 = 1.0 / (nf * nf);
    let mut bound = 0.0;
    let mut dbound = 0.0;
    for k in 1..=EM_TERMS + 1 {
        let term = p * npow * c[k - 1];
        let dterm = (dp - p * ln_n) * npow * c[k - 1];
        if k <= EM_TERMS {
            z.add(term);
            dz.add(dterm);
        } else {
            let shape = (s + (2 * k - 1) as f64).norm() / (s.re + (2 * k - 1) as f64);
            bound = term.norm() * shape;
            dbound = dterm.norm() * shape;
        }
        let a = s + (2 * k - 1) as f64;
        let b = s + (2 * k) as f64;
        let ab = a * b;
        dp = dp * ab + p * (a + b);
        p *= ab;
        npow *= inv_n2;
    }
    EmResult { zeta: z.value(), dzeta: dz.value(), bound, dbound }
}

fn check_domain(s: Complex64) -> Result<()> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::InvalidArgument("non-finite argument".into()));
    }
    if s.im.abs() > MAX_HEIGHT {
        return Err(Error::HeightOutOfRange { t: s.im, max: MAX_HEIGHT });
    }
    if s.re < -1.0 {
        return Err(Error::InvalidArgument(format!("Re s = {} is below the supported half-plane Re s ≥ -1", s.re)));
    }
    if (s - 1.0).norm() < 1e-15 {
        return Err(Error::Pole);
    }
    Ok(())
}

fn evaluate(s: Complex64, tol: f64, skip_first: bool) -> Result<EmResult> {
    check_domain(s)?;
    let mut n = 10usize.max(s.im.abs().ceil() as usize);
    loop {
        let r = euler_maclaurin(s, n, skip_first);
        if (r.bound <= tol && r.dbound <= tol.max(1e-300)) || n >= 1 << 20 {
            return Ok(r);
        }
        n *= 2;
    }
}

/// ζ(s) with Euler–Maclaurin remainder at most `tol` (absolute).
pub fn zeta(s: Complex64, tol: f64) -> Result<Complex64> {
    Ok(evaluate(s, tol, false)?.zeta)
}

/// (ζ(s), ζ'(s)).
pub fn zeta_and_derivative(s: Complex64, tol: f64) -> Result<(Complex64, Complex64)> {
    let r = evaluate(s, tol, false)?;
    Ok((r.zeta, r.dzeta))
}

/// ζ(s) for real s ≠ 1, s ≥ −1.
pub fn zeta_real(s: f64) -> Result<f64> {
    Ok(zeta(Complex64::new(s, 0.0), 1e-17)?.re)
}

/// Dirichlet eta function (1 − 2^{1−s}) ζ(s) for real s > 1.
pub fn eta_real(s: f64) -> Result<f64> {
    Ok((1.0 - (1.0 - s).exp2()) * zeta_real(s)?)
}

const DIRICHLET_MAX_TERMS: usize = 4096;

fn small_von_mangoldt() -> &'static VonMangoldtTable {
    static T: OnceLock<VonMangoldtTable> = OnceLock::new();
    T.get_or_init(|| von_mangoldt(DIRICHLET_MAX_TERMS))
}

/// Σ_{k>K} log k · k^{-σ} ≤ K^{1−σ} (log K/(σ−1) + 1/(σ−1)²).
fn dirichlet_tail_bound(k: f64, sigma: f64) -> f64 {
    let e = sigma - 1.0;
    k.powf(-e) * (k.ln() / e + 1.0 / (e * e))
}

/// ζ'/ζ(s).
///
/// When σ > 1 and the Dirichlet series −Σ Λ(k) k^{-s} reaches `tol` within
/// 4096 terms it is used directly; otherwise ζ' and ζ come from one
/// Euler–Maclaurin pass.
pub fn log_deriv_zeta(s: Complex64, tol: f64) -> Result<Complex64> {
    check_domain(s)?;
    if s.re > 1.0 && dirichlet_tail_bound(DIRICHLET_MAX_TERMS as f64, s.re) <= tol {
        let table = small_von_mangoldt();
        let mut acc = NeumaierComplex::new();
        for k in 2..=DIRICHLET_MAX_TERMS {
            let lam = table.get(k);
            if lam > 0.0 {
                acc.add(-pow_neg(k as f64, s) * lam);
                if dirichlet_tail_bound(k as f64, s.re) <= 0.5 * tol {
                    break;
                }
            }
        }
        return Ok(acc.value());
    }
    let r = evaluate(s, 0.1 * tol.min(1e-12), false)?;
    let modulus = r.zeta.norm();
    if modulus < ZERO_PROXIMITY {
        return Err(Error::NearZero { modulus });
    }
    Ok(r.dzeta / r.zeta)
}

/// log|ζ(s)|; −∞ exactly at a zero.
pub fn log_abs_zeta(s: Complex64, tol: f64) -> Result<f64> {
    if s.re >= 2.0 {
        let eps = evaluate(s, tol, true)?.zeta;
        return Ok(0.5 * (2.0 * eps.re + eps.norm_sqr()).ln_1p());
    }
    Ok(evaluate(s, tol, false)?.zeta.norm().ln())
}

/// Complex digamma by upward recurrence into |z| ≥ 10 and the Stirling series.
pub fn digamma(z: Complex64) -> Complex64 {
    let mut z = z;
    let mut shift = NeumaierComplex::new();
    while z.norm() < 10.0 || z.re < 0.5 {
        shift.add(-1.0 / z);
        z += 1.0;
    }
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    // Σ B_{2k} / (2k z^{2k}), k = 1..7.
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv2;
    for k in 1..=7 {
        series += p * (BERNOULLI_EVEN[k - 1] / (2 * k) as f64);
        p *= inv2;
    }
    z.ln() - inv * 0.5 - series + shift.value()
}

/// Re ψ(1/4 + iu/2).
pub fn digamma_re_quarter(u: f64) -> f64 {
    digamma(Complex64::new(0.25, 0.5 * u)).re
}

pub fn euler_gamma() -> f64 {
    EULER_GAMMA
}

/// scale^q · ζ(q, a) for real q > 1, a > 0.
///
/// The scale keeps very small values (large q, large a) representable.
pub fn hurwitz_zeta_scaled(q: f64, a: f64, scale: f64) -> f64 {
    assert!(q > 1.0 && a > 0.0, "hurwitz zeta needs q > 1, a > 0");
    let n = (q.max(10.0).ceil() as usize).max(10);
    let mut acc = Neumaier::new();
    for i in 0..n {
        acc.add((scale / (a + i as f64)).powf(q));
    }
    let b = a + n as f64;
    let base = (scale / b).powf(q);
    acc.add(base * b / (q - 1.0));
    acc.add(0.5 * base);
    let c = em_coefficients();
    let mut p = q;
    let mut pw = base / b;
    let inv_b2 = 1.0 / (b * b);
    for k in 1..=EM_TERMS {
        let term = c[k - 1] * p * pw;
        acc.add(term);
        p *= (q + (2 * k - 1) as f64) * (q + (2 * k) as f64);
        pw *= inv_b2;
    }
    acc.value()
}

/// ζ(q, a).
pub fn hurwitz_zeta(q: f64, a: f64) -> f64 {
    hurwitz_zeta_scaled(q, a, 1.0)
}

/// Λ(k) for 1 ≤ k ≤ limit, built by a smallest-prime-factor sieve.
#[derive(Debug, Clone)]
pub struct VonMangoldtTable {
    limit: usize,
    values: Vec<f64>,
}

impl VonMangoldtTable {
    pub fn limit(&self) -> usize {
        self.limit
    }

    /// Λ(k); zero for k outside [1, limit].
    pub fn get(&self, k: usize) -> f64 {
        self.values.get(k).copied().unwrap_or(0.0)
    }

    pub fn prime_powers(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.values.iter().enumerate().filter(|(_, v)| **v > 0.0).map(|(k, v)| (k, *v))
    }

    /// ψ(x) = Σ_{k ≤ x} Λ(k).
    pub fn chebyshev_psi(&self, x: usize) -> f64 {
        crate::sum::sum(self.values[..=x.min(self.limit)].iter().copied())
    }
}

pub fn von_mangoldt(limit: usize) -> VonMangoldtTable {
    let limit = limit.max(2);
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            let mut j = i;
            while j <= limit {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    let mut values = vec![0.0; limit + 1];
    for k in 2..=limit {
        let p = spf[k] as usize;
        let mut r = k;
        while r % p == 0 {
            r /= p;
        }
        if r == 1 {
            values[k] = (p as f64).ln();
        }
    }
    VonMangoldtTable { limit, values }
}

/// ζ(2k) = (−1)^{k+1} B_{2k} (2π)^{2k} / (2 (2k)!).
pub fn zeta_even_closed_form(k: usize) -> f64 {
    let s = if k % 2 == 1 { 1.0 } else { -1.0 };
    s * bernoulli_over_factorial(k) * (2.0 * PI).powi(2 * k as i32) / 2.0
}
