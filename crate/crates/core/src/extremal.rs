//! Extremal majorant and minorant of exponential type 2πΔ for f_{2m+1}.
//!
//! With F_Δ(x) = f_{2m+1}(x/Δ), the functions
//!
//!   G(z) = Σ_ν sinc²(z − ν) [F_Δ(ν) + (z − ν) F'_Δ(ν)]
//!
//! over ν ∈ ℤ (majorant, no derivative term at ν = 0) or ν ∈ ℤ + ½ (minorant)
//! are scaled to g(z) = G(Δz).
//!
//! Nodes with |ν| ≤ K are summed explicitly. Beyond K, F_Δ and F'_Δ are
//! replaced by their convergent expansions F_Δ(ν) = Σ_k A_k ν^{−2k}, whose
//! node sums reduce to Hurwitz zeta values: a Taylor series in z for |z| < K/2
//! and a partial-fraction form otherwise. Truncating the expansion after J
//! terms leaves an alternating remainder, which gives the certified tail
//!
//!   cosh²(π Im z) · 2|A_{J+1}| (h(2J+2) + 2(J+1) h(2J+3)),
//!
//! h(q) = Σ_{ν > K} ν^{−q}.

use std::f64::consts::PI;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{integrate, integrate_breaks, GaussLegendre, QuadratureConfig};
use crate::specialfn::{eval_f, f_prime_odd, integral_f_odd, odd_tail_coefficient, tail_integral_f_odd, MomentOrder};
use crate::sum::Neumaier;
use crate::zetakernel::{eta_real, hurwitz_zeta_scaled, zeta_real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Majorant,
    Minorant,
}

impl Side {
    /// +1 for the majorant, −1 for the minorant.
    pub fn sign(self) -> f64 {
        match self {
            Side::Majorant => 1.0,
            Side::Minorant => -1.0,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Majorant => "majorant",
            Side::Minorant => "minorant",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "majorant" | "plus" | "+" => Ok(Side::Majorant),
            "minorant" | "minus" | "-" => Ok(Side::Minorant),
            other => Err(Error::InvalidArgument(format!("unknown side {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApproximantSpec {
    pub m: usize,
    pub delta: f64,
    pub side: Side,
    /// Nodes with |ν| ≤ truncation_radius are summed explicitly.
    pub truncation_radius: usize,
    pub abs_tol: f64,
}

impl ApproximantSpec {
    pub fn new(m: usize, delta: f64, side: Side) -> Result<Self> {
        let spec = Self {
            m,
            delta,
            side,
            truncation_radius: Self::default_radius(delta),
            abs_tol: 1e-12,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn default_radius(delta: f64) -> usize {
        ((4.0 * delta).ceil() as usize).max(8)
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.delta >= 1.0 && self.delta.is_finite()) {
            return Err(Error::InvalidArgument(format!("delta must be a finite real ≥ 1, got {}", self.delta)));
        }
        if (self.truncation_radius as f64) < 4.0 * self.delta {
            return Err(Error::InvalidArgument(format!(
                "truncation radius {} must be at least 4Δ = {}",
                self.truncation_radius,
                4.0 * self.delta
            )));
        }
        if !(self.abs_tol > 0.0) {
            return Err(Error::InvalidArgument("abs_tol must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApproximantEval<T> {
    pub value: T,
    pub certified_tail: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct L1Distance {
    pub closed_form: f64,
    pub series_form: f64,
    pub quadrature_form: f64,
}

impl L1Distance {
    pub fn max_relative_spread(&self) -> f64 {
        let v = [self.closed_form, self.series_form, self.quadrature_form];
        let lo = v.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        (hi - lo) / lo.abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourierValue {
    pub value: f64,
    pub error_budget: f64,
}

/// Real or complex arguments for the interpolation series.
pub trait Scalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Add<f64, Output = Self>
    + Sub<f64, Output = Self>
    + Mul<f64, Output = Self>
    + Div<f64, Output = Self>
{
    fn real(x: f64) -> Self;
    fn sin(self) -> Self;
    fn re(self) -> f64;
    fn im(self) -> f64;
    fn modulus(self) -> f64;
}

impl Scalar for f64 {
    #[inline]
    fn real(x: f64) -> Self {
        x
    }
    #[inline]
    fn sin(self) -> Self {
        f64::sin(self)
    }
    #[inline]
    fn re(self) -> f64 {
        self
    }
    #[inline]
    fn im(self) -> f64 {
        0.0
    }
    #[inline]
    fn modulus(self) -> f64 {
        self.abs()
    }
}

impl Scalar for Complex64 {
    #[inline]
    fn real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    #[inline]
    fn sin(self) -> Self {
        Complex64::sin(self)
    }
    #[inline]
    fn re(self) -> f64 {
        self.re
    }
    #[inline]
    fn im(self) -> f64 {
        self.im
    }
    #[inline]
    fn modulus(self) -> f64 {
        self.norm()
    }
}

#[derive(Debug, Clone, Copy)]
struct Node {
    nu: f64,
    f: f64,
    fp: f64,
}

const MAX_TERMS: usize = 60;
const TAYLOR_TERMS: usize = 64;
const FT_TAIL_TERMS: usize = 4;

/// A constructed g^±_{2m+1,Δ}, reusable across evaluations.
#[derive(Debug)]
pub struct Approximant {
    spec: ApproximantSpec,
    order: MomentOrder,
    half: bool,
    radius: f64,
    nodes: Vec<Node>,
    terms: usize,
    /// Ã_k = A_k K^{−2k}, k = 1..=terms.
    a_scaled: Vec<f64>,
    /// Taylor coefficients of the tail in powers of z/K (even powers).
    taylor: Vec<f64>,
    /// Partial-fraction coefficients in powers of (K/z)².
    partial: Vec<f64>,
    base_bound: f64,
    decay: OnceLock<f64>,
}

impl Approximant {
    pub fn new(spec: ApproximantSpec) -> Result<Self> {
        spec.validate()?;
        let order = MomentOrder::odd(spec.m);
        let delta = spec.delta;
        let half = spec.side == Side::Minorant;
        let k_int = spec.truncation_radius;
        let radius = k_int as f64;

        let mut nodes = Vec::with_capacity(2 * k_int + 1);
        if half {
            for j in (1..=k_int).rev() {
                nodes.push(-(j as f64) + 0.5);
            }
            for j in 1..=k_int {
                nodes.push(j as f64 - 0.5);
            }
        } else {
            for j in -(k_int as i64)..=(k_int as i64) {
                nodes.push(j as f64);
            }
        }
        let nodes: Vec<Node> = nodes
            .into_iter()
            .map(|nu| Node {
                nu,
                f: eval_f(order, nu / delta),
                fp: if nu == 0.0 { 0.0 } else { f_prime_odd(spec.m, nu / delta) / delta },
            })
            .collect();

        // First tail node and scaled Hurwitz sums h̃(q) = K^q Σ_{ν>K} ν^{−q}.
        let first = if half { radius + 0.5 } else { radius + 1.0 };
        let qmax = 2 * MAX_TERMS + TAYLOR_TERMS + 4;
        let mut h = vec![0.0; qmax + 1];
        for (q, slot) in h.iter_mut().enumerate().skip(2) {
            *slot = hurwitz_zeta_scaled(q as f64, first, radius);
        }

        let ratio2 = (delta / radius).powi(2);
        let mut a_all = vec![0.0; MAX_TERMS + 2];
        for (k, slot) in a_all.iter_mut().enumerate().skip(1) {
            *slot = odd_tail_coefficient(spec.m, k) * ratio2.powi(k as i32);
        }
        let bound_for = |j: usize| {
            2.0 * a_all[j + 1].abs() * (h[2 * j + 2] + 2.0 * (j + 1) as f64 * h[2 * j + 3] / radius)
        };
        let target = 1e-3 * spec.abs_tol.min(1e-15);
        let mut terms = 2;
        while terms < MAX_TERMS && bound_for(terms) > target {
            terms += 1;
        }
        let base_bound = bound_for(terms);
        let a_scaled = a_all[1..=terms].to_vec();

        let inv_k2 = 1.0 / (radius * radius);
        let taylor: Vec<f64> = (0..TAYLOR_TERMS)
            .step_by(2)
            .map(|i| {
                let mut acc = Neumaier::new();
                for (idx, a) in a_scaled.iter().enumerate() {
                    let k = idx + 1;
                    acc.add(a * 2.0 * (2 * k + 1 + i) as f64 * h[2 * k + 2 + i]);
                }
                acc.value() * inv_k2
            })
            .collect();
        let partial: Vec<f64> = (1..=terms)
            .map(|p| {
                let mut acc = Neumaier::new();
                for l in 1..=(terms + 1 - p) {
                    let k = p + l - 1;
                    acc.add(a_scaled[k - 1] * 2.0 * (2 * l - 1) as f64 * h[2 * l]);
                }
                acc.value() * inv_k2
            })
            .collect();

        Ok(Self {
            spec,
            order,
            half,
            radius,
            nodes,
            terms,
            a_scaled,
            taylor,
            partial,
            base_bound,
            decay: OnceLock::new(),
        })
    }

    pub fn spec(&self) -> &ApproximantSpec {
        &self.spec
    }

    /// Number of expansion terms used for the node tail.
    pub fn expansion_terms(&self) -> usize {
        self.terms
    }

    /// Certified tail at Im z = 0, in the G variable.
    pub fn base_tail_bound(&self) -> f64 {
        self.base_bound
    }

    /// F_Δ(x).
    pub fn big_f(&self, x: f64) -> f64 {
        eval_f(self.order, x / self.spec.delta)
    }

    /// F'_Δ(x) = f'_{2m+1}(x/Δ)/Δ.
    pub fn big_f_prime(&self, x: f64) -> f64 {
        f_prime_odd(self.spec.m, x / self.spec.delta) / self.spec.delta
    }

    fn series<T: Scalar>(&self, z: T) -> T {
        let x = z.re();
        let nu0 = if self.half { (x - 0.5).round() + 0.5 } else { x.round() };
        let d0 = z - nu0;
        let sd = (d0 * PI).sin();
        let s2 = sd * sd / (PI * PI);

        let mut explicit = T::real(0.0);
        let mut sk = T::real(0.0);
        for node in &self.nodes {
            let w = z - node.nu;
            let sinc2 = if node.nu == nu0 {
                let u = d0 * PI;
                let s = if u.modulus() < 1e-4 { T::real(1.0) - u * u / 6.0 } else { sd / u };
                s * s
            } else {
                s2 / (w * w)
            };
            explicit = explicit + sinc2 * (w * node.fp + node.f);
            sk = sk + sinc2;
        }

        let k = self.radius;
        let tail = if z.modulus() < 0.5 * k {
            let r = z / k;
            let r2 = r * r;
            let mut acc = T::real(0.0);
            let mut p = T::real(1.0);
            for c in &self.taylor {
                acc = acc + p * *c;
                p = p * r2;
            }
            s2 * acc
        } else {
            let v = T::real(k) / z;
            let v2 = v * v;
            let mut pf = T::real(0.0);
            let mut pa = T::real(0.0);
            let mut p = v2;
            for (c, a) in self.partial.iter().zip(&self.a_scaled) {
                pf = pf + p * *c;
                pa = pa + p * *a;
                p = p * v2;
            }
            (T::real(1.0) - sk) * pa - s2 * pf
        };
        explicit + tail
    }

    fn certified(&self, im: f64) -> f64 {
        let c = (PI * im).cosh();
        c * c * self.base_bound
    }

    /// G^±_Δ(z).
    pub fn eval_big_g<T: Scalar>(&self, z: T) -> Result<ApproximantEval<T>> {
        let certified_tail = self.certified(z.im());
        if certified_tail > self.spec.abs_tol {
            return Err(Error::TailBudget { bound: certified_tail, tol: self.spec.abs_tol });
        }
        Ok(ApproximantEval { value: self.series(z), certified_tail })
    }

    /// g^±_Δ(z) = G^±_Δ(Δz).
    pub fn eval<T: Scalar>(&self, z: T) -> Result<ApproximantEval<T>> {
        self.eval_big_g(z * self.spec.delta)
    }

    /// g on the real line, without the tolerance check.
    #[inline]
    pub fn value(&self, x: f64) -> f64 {
        self.series(x * self.spec.delta)
    }

    /// f_{2m+1}(x).
    pub fn target(&self, x: f64) -> f64 {
        eval_f(self.order, x)
    }

    /// Empirical K with |g(x)| ≤ K/(1 + x²) on the real line.
    ///
    /// Scans [0, 200] at spacing 1/(16Δ) and takes the larger of the scan
    /// and the limit x² f(x) → 1/((2m+1)(2m+3)), with a 5% margin.
    pub fn decay_constant(&self) -> f64 {
        *self.decay.get_or_init(|| {
            let step = 1.0 / (16.0 * self.spec.delta);
            let n = (200.0 / step) as usize;
            let mut k: f64 = 0.0;
            for i in 0..=n {
                let x = i as f64 * step;
                k = k.max(self.value(x).abs() * (1.0 + x * x));
            }
            let m = self.spec.m as f64;
            let limit = 1.0 / ((2.0 * m + 1.0) * (2.0 * m + 3.0));
            1.05 * k.max(limit)
        })
    }

    /// ĝ(ξ) from the interpolation series term by term.
    ///
    /// Ĝ(η) = (1 − |η|) Σ_ν F(ν) cos 2πνη − (sgn η / 2π) Σ_ν F'(ν) sin 2πνη
    /// for |η| ≤ 1, zero otherwise; ĝ(ξ) = Ĝ(ξ/Δ)/Δ. Node sums beyond N use
    /// four expansion terms and the Bernoulli-polynomial forms of the
    /// lattice sums. Returns the value and a bound for the neglected terms.
    pub fn fourier_analytic(&self, xi: f64) -> FourierValue {
        let delta = self.spec.delta;
        let eta = xi / delta;
        if eta.abs() >= 1.0 {
            return FourierValue { value: 0.0, error_budget: 0.0 };
        }
        let n_explicit = (25.0 * delta).max(200.0).ceil() as usize;
        let m = self.spec.m;
        let order = self.order;
        let mut cos_sum = Neumaier::new();
        let mut sin_sum = Neumaier::new();
        let mut partial_cos = [Neumaier::new(); FT_TAIL_TERMS + 1];
        let mut partial_sin = [Neumaier::new(); FT_TAIL_TERMS + 1];
        if !self.half {
            cos_sum.add(0.5 * eval_f(order, 0.0));
        }
        for j in 1..=n_explicit {
            let nu = if self.half { j as f64 - 0.5 } else { j as f64 };
            let (s, c) = (2.0 * PI * nu * eta).sin_cos();
            cos_sum.add(eval_f(order, nu / delta) * c);
            sin_sum.add(f_prime_odd(m, nu / delta) / delta * s);
            let inv = 1.0 / nu;
            let inv2 = inv * inv;
            let mut p = inv2;
            for k in 1..=FT_TAIL_TERMS {
                partial_cos[k].add(p * c);
                partial_sin[k].add(p * inv * s);
                p *= inv2;
            }
        }
        let mut tail_cos = Neumaier::new();
        let mut tail_sin = Neumaier::new();
        let mut rounding = 0.0;
        for k in 1..=FT_TAIL_TERMS {
            let a = odd_tail_coefficient(m, k) * delta.powi(2 * k as i32);
            let (full_c, full_s) = if self.half {
                (half_lattice_cos(2 * k, eta), half_lattice_sin(2 * k + 1, eta))
            } else {
                (clausen_cos(2 * k, eta), clausen_sin(2 * k + 1, eta))
            };
            tail_cos.add(a * (full_c - partial_cos[k].value()));
            tail_sin.add(-2.0 * k as f64 * a * (full_s - partial_sin[k].value()));
            // full − partial cancels to the size of the tail
            rounding += a.abs() * (full_c.abs() + partial_cos[k].value().abs())
                + 2.0 * k as f64 * a.abs() * (full_s.abs() + partial_sin[k].value().abs()) / (2.0 * PI);
        }
        rounding *= 8.0 * f64::EPSILON;
        let sum_f = 2.0 * (cos_sum.value() + tail_cos.value());
        let sum_fp = 2.0 * (sin_sum.value() + tail_sin.value());
        let big = (1.0 - eta.abs()) * sum_f - eta.signum() / (2.0 * PI) * sum_fp;

        let kk = FT_TAIL_TERMS + 1;
        let a_next = (odd_tail_coefficient(m, kk) * delta.powi(2 * kk as i32)).abs();
        let nf = n_explicit as f64;
        let q = (2 * kk) as f64;
        let lattice = |q: f64| nf.powf(1.0 - q) / (q - 1.0) + nf.powf(-q);
        let rem = 2.0 * a_next * (lattice(q) + 2.0 * kk as f64 * lattice(q + 1.0) / (2.0 * PI));
        FourierValue { value: big / delta, error_budget: (rem + 2.0 * rounding) / delta }
    }

    /// ĝ(ξ) = 2 ∫_0^X g(x) cos(2πxξ) dx by composite Gauss–Legendre.
    ///
    /// Panels have length at most min(1/(4|ξ|+1), 1/(2Δ)). The tail beyond
    /// X = q.truncation_height is charged K(π/2 − arctan X) on each side;
    /// at ξ = 0 the tail of f is added exactly instead and the remaining
    /// |g − f| tail is estimated from its x^{−2} decay with a factor 2.
    pub fn fourier_numeric(&self, xi: f64, q: &QuadratureConfig) -> Result<FourierValue> {
        let big_x = q.truncation_height;
        if !(big_x > 2.0) {
            return Err(Error::InvalidArgument("truncation height must exceed 2".into()));
        }
        let delta = self.spec.delta;
        let h_max = (1.0 / (4.0 * xi.abs() + 1.0)).min(1.0 / (2.0 * delta));
        let panels = (big_x / h_max).ceil() as usize;
        let h = big_x / panels as f64;
        let hi_rule = GaussLegendre::new(q.gauss_order.max(8));
        let lo_rule = GaussLegendre::new((q.gauss_order.max(8) * 2) / 3);
        let w = 2.0 * PI * xi;
        let mut hi_acc = Neumaier::new();
        let mut lo_acc = Neumaier::new();
        for i in 0..panels {
            let a = i as f64 * h;
            let b = a + h;
            hi_acc.add(hi_rule.integrate(|x| self.value(x) * (w * x).cos(), a, b));
            lo_acc.add(lo_rule.integrate(|x| self.value(x) * (w * x).cos(), a, b));
        }
        let quad_err = 2.0 * (hi_acc.value() - lo_acc.value()).abs();
        let mut value = 2.0 * hi_acc.value();
        let tail = if xi == 0.0 {
            value += 2.0 * tail_integral_f_odd(self.spec.m, big_x);
            let probe = (0..16)
                .map(|i| {
                    let x = big_x - i as f64 * h;
                    (self.value(x) - self.target(x)).abs()
                })
                .fold(0.0, f64::max);
            2.0 * 2.0 * probe * big_x
        } else {
            2.0 * self.decay_constant() * (PI / 2.0 - big_x.atan())
        };
        let budget = quad_err + tail;
        if !budget.is_finite() || budget > 1.0 {
            return Err(Error::QuadratureNonConvergence { achieved: budget, requested: 1.0 });
        }
        Ok(FourierValue { value, error_budget: budget })
    }

    /// (1/Δ) ∫_0^1 u^{2m} log((1 ± e^{−2πΔu})/(1 ± e^{−2πΔ})) du with the
    /// sign convention of the side, evaluated by adaptive quadrature.
    pub fn l1_closed_form(&self, q: &QuadratureConfig) -> Result<f64> {
        let delta = self.spec.delta;
        let m = self.spec.m as i32;
        let a = 2.0 * PI * delta;
        let tight = QuadratureConfig { abs_tol: 1e-17, rel_tol: q.rel_tol.min(1e-13), ..*q };
        let est = match self.spec.side {
            Side::Minorant => {
                let denom = (-a).exp().ln_1p();
                integrate(|u: f64| u.powi(2 * m) * ((-a * u).exp().ln_1p() - denom), 0.0, 1.0, &tight)?
            }
            Side::Majorant => {
                let denom = (-(-a).exp_m1()).ln();
                integrate(|u: f64| -u.powi(2 * m) * ((-(-a * u).exp_m1()).ln() - denom), 0.0, 1.0, &tight)?
            }
        };
        Ok(est.value / delta)
    }

    /// The same distance through ∫_0^∞ u^{2m} log(1 ∓ e^{−au}) du =
    /// (2m)!/a^{2m+1} · (η or −ζ)(2m+2), minus the [1, ∞) piece and the
    /// constant correction.
    pub fn l1_series_form(&self) -> Result<f64> {
        let delta = self.spec.delta;
        let m = self.spec.m;
        let a = 2.0 * PI * delta;
        let p = (2 * m + 2) as f64;
        let fact: f64 = (1..=2 * m).map(|i| i as f64).product();
        let head = fact / a.powi(2 * m as i32 + 1);
        // ∫_1^∞ u^{2m} e^{−bu} du = e^{−b} Σ_i (2m)!/(2m−i)! / b^{i+1}
        let upper_gamma = |b: f64| {
            let mut acc = Neumaier::new();
            let mut falling = 1.0;
            for i in 0..=2 * m {
                acc.add(falling / b.powi(i as i32 + 1));
                falling *= (2 * m - i) as f64;
            }
            (-b).exp() * acc.value()
        };
        let mut tail = Neumaier::new();
        let sign = match self.spec.side {
            Side::Minorant => -1.0,
            Side::Majorant => 1.0,
        };
        // log(1 ± y) = −Σ_j (∓y)^j / j
        for j in 1..200 {
            let jf = j as f64;
            let coeff = match self.spec.side {
                Side::Minorant => {
                    if j % 2 == 1 {
                        1.0 / jf
                    } else {
                        -1.0 / jf
                    }
                }
                Side::Majorant => -1.0 / jf,
            };
            let term = coeff * upper_gamma(a * jf);
            tail.add(term);
            if term.abs() < 1e-18 * tail.value().abs() {
                break;
            }
        }
        let constant = match self.spec.side {
            Side::Minorant => (-a).exp().ln_1p(),
            Side::Majorant => (-(-a).exp_m1()).ln(),
        } / (2 * m + 1) as f64;
        let inner = match self.spec.side {
            Side::Minorant => eta_real(p)? * head,
            Side::Majorant => -zeta_real(p)? * head,
        };
        Ok(-sign * (inner - tail.value() - constant) / delta)
    }

    /// ∫ |f − g| over the line by Gauss–Legendre on the cells between
    /// interpolation nodes, out to 4000 cells, plus a power-law tail whose
    /// exponent is fitted from cell averages near u/2 and near the end.
    pub fn l1_quadrature_form(&self, q: &QuadratureConfig) -> Result<(f64, f64)> {
        let rule = GaussLegendre::new(q.gauss_order.max(20));
        let cells = 4000usize;
        let window = 200usize;
        let offset = if self.half { 0.5 } else { 0.0 };
        let mut edges = vec![0.0];
        for j in 0..=cells {
            let e = j as f64 + offset;
            if e > 0.0 {
                edges.push(e);
            }
        }
        let f = |u: f64| (self.series(u) - self.big_f(u)).abs();
        let values: Vec<f64> = edges.windows(2).map(|w| rule.integrate(f, w[0], w[1])).collect();
        let mut acc = Neumaier::new();
        values.iter().for_each(|v| acc.add(*v));
        let n = values.len();
        let mid = n / 2;
        let mean = |r: std::ops::Range<usize>| values[r.clone()].iter().sum::<f64>() / r.len() as f64;
        let m_mid = mean(mid - window..mid);
        let m_end = mean(n - window..n);
        let u_mid = 0.5 * (edges[mid - window] + edges[mid]);
        let u_end = 0.5 * (edges[n - window] + edges[n]);
        let p = (m_mid / m_end).ln() / (u_end / u_mid).ln();
        if !(p > 1.5) {
            return Err(Error::QuadratureNonConvergence { achieved: p, requested: 1.5 });
        }
        let edge = edges[n];
        let tail = edge * m_end * (edge / u_end).powf(-p) / (p - 1.0);
        let delta = self.spec.delta;
        Ok((2.0 * (acc.value() + tail) / delta, 2.0 * tail / delta))
    }

    pub fn l1_distance(&self, q: &QuadratureConfig) -> Result<L1Distance> {
        Ok(L1Distance {
            closed_form: self.l1_closed_form(q)?,
            series_form: self.l1_series_form()?,
            quadrature_form: self.l1_quadrature_form(q)?.0,
        })
    }

    /// ∫ g = ∫ f ± L1 distance.
    pub fn integral(&self) -> Result<f64> {
        Ok(integral_f_odd(self.spec.m) + self.spec.side.sign() * self.l1_series_form()?)
    }
}

/// Σ_{n≥1} cos(2πnx)/n^{2k} = (−1)^{k+1} (2π)^{2k} B_{2k}({x}) / (2 (2k)!).
pub fn clausen_cos(q: usize, x: f64) -> f64 {
    assert!(q % 2 == 0 && q >= 2);
    let k = q / 2;
    let y = x.abs().fract();
    let s = if k % 2 == 1 { 1.0 } else { -1.0 };
    s * (2.0 * PI).powi(q as i32) * bernoulli_poly(q, y) / (2.0 * factorial(q))
}

/// Σ_{n≥1} sin(2πnx)/n^{2k+1} = (−1)^{k+1} (2π)^{2k+1} B_{2k+1}({x}) / (2 (2k+1)!).
pub fn clausen_sin(q: usize, x: f64) -> f64 {
    assert!(q % 2 == 1 && q >= 3);
    let k = (q - 1) / 2;
    let y = x.abs().fract();
    let s = if k % 2 == 1 { 1.0 } else { -1.0 };
    x.signum() * s * (2.0 * PI).powi(q as i32) * bernoulli_poly(q, y) / (2.0 * factorial(q))
}

/// Σ_{ν ∈ ℕ − ½} cos(2πνx)/ν^q.
fn half_lattice_cos(q: usize, x: f64) -> f64 {
    2f64.powi(q as i32) * (clausen_cos(q, 0.5 * x) - 2f64.powi(-(q as i32)) * clausen_cos(q, x))
}

/// Σ_{ν ∈ ℕ − ½} sin(2πνx)/ν^q.
fn half_lattice_sin(q: usize, x: f64) -> f64 {
    2f64.powi(q as i32) * (clausen_sin(q, 0.5 * x) - 2f64.powi(-(q as i32)) * clausen_sin(q, x))
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

fn binomial(n: usize, k: usize) -> f64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Bernoulli polynomial B_n(x), n ≤ 11.
pub fn bernoulli_poly(n: usize, x: f64) -> f64 {
    const B: [f64; 12] = [
        1.0,
        -0.5,
        1.0 / 6.0,
        0.0,
        -1.0 / 30.0,
        0.0,
        1.0 / 42.0,
        0.0,
        -1.0 / 30.0,
        0.0,
        5.0 / 66.0,
        0.0,
    ];
    assert!(n < B.len());
    let mut acc = Neumaier::new();
    for (j, b) in B.iter().enumerate().take(n + 1) {
        if *b != 0.0 {
            acc.add(binomial(n, j) * b * x.powi((n - j) as i32));
        }
    }
    acc.value()
}

/// F_Δ(x) = f_{2m+1}(x/Δ).
pub fn big_f(m: usize, delta: f64, x: f64) -> f64 {
    eval_f(MomentOrder::odd(m), x / delta)
}

/// G^±_Δ(z) for a one-off evaluation.
#[allow(non_snake_case)]
pub fn eval_G(spec: &ApproximantSpec, z: Complex64) -> Result<ApproximantEval<Complex64>> {
    Approximant::new(*spec)?.eval_big_g(z)
}

/// g^±_Δ(z) for a one-off evaluation.
pub fn eval_g(spec: &ApproximantSpec, z: Complex64) -> Result<ApproximantEval<Complex64>> {
    Approximant::new(*spec)?.eval(z)
}

pub fn l1_distance(spec: &ApproximantSpec) -> Result<L1Distance> {
    Approximant::new(*spec)?.l1_distance(&QuadratureConfig::default())
}

/// Numeric Fourier transform with its error budget.
pub fn fourier_transform(spec: &ApproximantSpec, xi: f64, q: &QuadratureConfig) -> Result<FourierValue> {
    Approximant::new(*spec)?.fourier_numeric(xi, q)
}

/// Breakpoints for integrating g: the origin and the interpolation nodes.
pub fn node_breakpoints(spec: &ApproximantSpec, lo: f64, hi: f64) -> Vec<f64> {
    let offset = if spec.side == Side::Minorant { 0.5 } else { 0.0 };
    let d = spec.delta;
    let mut pts = vec![lo];
    let start = ((lo * d - offset).ceil()) as i64;
    let end = ((hi * d - offset).floor()) as i64;
    for j in start..=end {
        let x = (j as f64 + offset) / d;
        if x > lo && x < hi {
            pts.push(x);
        }
    }
    pts.push(hi);
    pts
}

/// ∫_a^b g(x) w(x) dx adaptively between nodes.
pub fn integrate_weighted<W: Fn(f64) -> f64>(
    approx: &Approximant,
    weight: W,
    a: f64,
    b: f64,
    q: &QuadratureConfig,
) -> Result<crate::quadrature::Estimate> {
    let pts = node_breakpoints(approx.spec(), a, b);
    integrate_breaks(|x| approx.value(x) * weight(x), &pts, q)
}
