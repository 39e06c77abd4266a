//! Moment kernels f_n, their derivatives and integrals.
//!
//! Closed forms are used for |x| ≤ [`SWITCH_POINT`] and the power series in
//! 1/x beyond it. Both f_{2m+1} (even) and f_{2m} (odd) are evaluated at |x|
//! and the symmetry is applied afterwards, so symmetry holds exactly.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{integrate_breaks, Estimate, QuadratureConfig};
use crate::sum::Neumaier;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

/// The moment index n together with m = ⌊n/2⌋ and its parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MomentOrder {
    n: usize,
    m: usize,
    parity: Parity,
}

impl MomentOrder {
    pub fn new(n: usize) -> Self {
        let parity = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
        Self { n, m: n / 2, parity }
    }

    /// n = 2m + 1.
    pub fn odd(m: usize) -> Self {
        Self::new(2 * m + 1)
    }

    /// n = 2m.
    pub fn even(m: usize) -> Self {
        Self::new(2 * m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    ClosedForm,
    TailSeries,
    OriginLimit,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelValue {
    pub x: f64,
    pub value: f64,
    pub regime: Regime,
}

pub const SWITCH_POINT: f64 = 2.0;

const SERIES_REL_TOL: f64 = 1e-17;
const SERIES_MAX_TERMS: usize = 200;

pub fn kernel(order: MomentOrder, x: f64) -> KernelValue {
    let ax = x.abs();
    let (mag, regime) = if order.n == 0 && x == 0.0 {
        (0.0, Regime::OriginLimit)
    } else if ax > SWITCH_POINT {
        (tail_series(order, ax), Regime::TailSeries)
    } else {
        (closed_form(order, ax), Regime::ClosedForm)
    };
    let value = match order.parity {
        Parity::Odd => mag,
        Parity::Even if x < 0.0 => -mag,
        Parity::Even => mag,
    };
    KernelValue { x, value, regime }
}

/// f_n(x).
pub fn eval_f(order: MomentOrder, x: f64) -> f64 {
    kernel(order, x).value
}

/// The arctan–polynomial closed form, for any real x (n = 0 excluded at x = 0).
pub fn closed_form(order: MomentOrder, x: f64) -> f64 {
    let m = order.m;
    let at = (1.0 / x).atan();
    let mut acc = Neumaier::new();
    match order.parity {
        Parity::Odd => {
            let sign = if m % 2 == 0 { -1.0 } else { 1.0 };
            acc.add(sign * x.powi(2 * m as i32 + 1) * at);
            for k in 0..=m {
                let s = if (m - k) % 2 == 0 { 1.0 } else { -1.0 };
                acc.add(s * x.powi((2 * m - 2 * k) as i32) / (2 * k + 1) as f64);
            }
            acc.value() / (2 * m + 1) as f64
        }
        Parity::Even => {
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            acc.add(sign * x.powi(2 * m as i32) * at);
            for k in 0..m {
                let s = if (m - k + 1) % 2 == 0 { 1.0 } else { -1.0 };
                acc.add(s * x.powi((2 * m - 2 * k - 1) as i32) / (2 * k + 1) as f64);
            }
            acc.add(-x / ((2 * m + 1) as f64 * (1.0 + x * x)));
            acc.value()
        }
    }
}

/// Power series in 1/x, valid for |x| > 1.
///
/// Odd n: (1/(2m+1)) Σ_{k≥1} (−1)^{k−1} / ((2k+2m+1) x^{2k}).
/// Even n: Σ_{i≥1} (−1)^i x^{−2i−1} [1/(2i+2m+1) − 1/(2m+1)], obtained by
/// expanding arctan(1/x) and x/(1+x²) in powers of 1/x.
pub fn tail_series(order: MomentOrder, x: f64) -> f64 {
    let m = order.m as f64;
    let inv2 = 1.0 / (x * x);
    let mut acc = Neumaier::new();
    match order.parity {
        Parity::Odd => {
            let mut p = inv2;
            for k in 1..=SERIES_MAX_TERMS {
                let kf = k as f64;
                let s = if k % 2 == 1 { 1.0 } else { -1.0 };
                let term = s * p / (2.0 * kf + 2.0 * m + 1.0);
                acc.add(term);
                if term.abs() < SERIES_REL_TOL * acc.value().abs() {
                    break;
                }
                p *= inv2;
            }
            acc.value() / (2.0 * m + 1.0)
        }
        Parity::Even => {
            let mut p = inv2 / x;
            let c0 = 1.0 / (2.0 * m + 1.0);
            for i in 1..=SERIES_MAX_TERMS {
                let fi = i as f64;
                let s = if i % 2 == 0 { 1.0 } else { -1.0 };
                let term = s * p * (1.0 / (2.0 * fi + 2.0 * m + 1.0) - c0);
                acc.add(term);
                if term.abs() < SERIES_REL_TOL * acc.value().abs() {
                    break;
                }
                p *= inv2;
            }
            acc.value()
        }
    }
}

/// f'_{2m+1}(x). Even n is rejected.
///
/// At x = 0 the symmetric derivative 0 is returned; for m = 0 the kernel has
/// a corner there.
pub fn eval_f_prime(order: MomentOrder, x: f64) -> Result<f64> {
    if !order.is_odd() {
        return Err(Error::InvalidArgument(format!(
            "derivative is provided for odd orders only, got n = {}",
            order.n
        )));
    }
    Ok(f_prime_odd(order.m, x))
}

pub(crate) fn f_prime_odd(m: usize, x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let ax = x.abs();
    let mag = if ax > SWITCH_POINT {
        f_prime_tail_series(m, ax)
    } else {
        f_prime_closed_form(m, ax)
    };
    if x < 0.0 {
        -mag
    } else {
        mag
    }
}

pub fn f_prime_closed_form(m: usize, x: f64) -> f64 {
    let at = (1.0 / x).atan();
    let sign = if m % 2 == 0 { -1.0 } else { 1.0 };
    let n = (2 * m + 1) as f64;
    let mut acc = Neumaier::new();
    acc.add(sign * n * x.powi(2 * m as i32) * at);
    acc.add(-sign * x.powi(2 * m as i32 + 1) / (1.0 + x * x));
    for k in 0..m {
        let s = if (m - k) % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(s * (2 * m - 2 * k) as f64 / (2 * k + 1) as f64 * x.powi((2 * m - 2 * k - 1) as i32));
    }
    acc.value() / n
}

/// (1/(2m+1)) Σ_{k≥1} (−1)^k 2k / ((2k+2m+1) x^{2k+1}), for |x| > 1.
pub fn f_prime_tail_series(m: usize, x: f64) -> f64 {
    let mf = m as f64;
    let inv2 = 1.0 / (x * x);
    let mut p = inv2 / x;
    let mut acc = Neumaier::new();
    for k in 1..=SERIES_MAX_TERMS {
        let kf = k as f64;
        let s = if k % 2 == 0 { 1.0 } else { -1.0 };
        let term = s * 2.0 * kf * p / (2.0 * kf + 2.0 * mf + 1.0);
        acc.add(term);
        if term.abs() < SERIES_REL_TOL * acc.value().abs() {
            break;
        }
        p *= inv2;
    }
    acc.value() / (2.0 * mf + 1.0)
}

/// Coefficient a_k of x^{−2k} in the expansion of f_{2m+1} at infinity.
pub fn odd_tail_coefficient(m: usize, k: usize) -> f64 {
    let s = if k % 2 == 1 { 1.0 } else { -1.0 };
    s / ((2 * m + 1) as f64 * (2 * k + 2 * m + 1) as f64)
}

/// ∫_{−∞}^{∞} f_{2m+1} = π/((2m+1)(2m+2)).
pub fn integral_f_odd(m: usize) -> f64 {
    PI / ((2 * m + 1) as f64 * (2 * m + 2) as f64)
}

/// ∫_X^∞ f_{2m+1}(x) dx for X > 1, from the series at infinity.
pub fn tail_integral_f_odd(m: usize, big_x: f64) -> f64 {
    let inv2 = 1.0 / (big_x * big_x);
    let mut p = 1.0 / big_x;
    let mut acc = Neumaier::new();
    for k in 1..=SERIES_MAX_TERMS {
        let term = odd_tail_coefficient(m, k) * p / (2 * k - 1) as f64;
        acc.add(term);
        if term.abs() < SERIES_REL_TOL * acc.value().abs() {
            break;
        }
        p *= inv2;
    }
    acc.value()
}

/// f_{2m+1}(x) = ½ ∫_0^1 σ^{2m} log((1+x²)/(σ²+x²)) dσ by adaptive quadrature.
pub fn eval_f_integralform(m: usize, x: f64, q: &QuadratureConfig) -> Result<Estimate> {
    let x2 = x * x;
    let integrand = |s: f64| {
        let s2 = s * s;
        let w = if m == 0 { 1.0 } else { s.powi(2 * m as i32) };
        0.5 * w * ((1.0 - s2) / (s2 + x2)).ln_1p()
    };
    let ax = x.abs();
    let mut points = vec![0.0];
    if ax > 0.0 && ax < 1.0 {
        points.push(ax);
    }
    points.push(1.0);
    integrate_breaks(integrand, &points, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_values() {
        assert_eq!(eval_f(MomentOrder::new(1), 0.0), 1.0);
        assert_eq!(eval_f(MomentOrder::new(2), 0.0), 0.0);
        assert_eq!(kernel(MomentOrder::new(0), 0.0).regime, Regime::OriginLimit);
        for m in 0..6 {
            let v = eval_f(MomentOrder::odd(m), 0.0);
            let expect = 1.0 / ((2 * m + 1) as f64).powi(2);
            assert!((v - expect).abs() < 1e-16);
        }
    }

    #[test]
    fn regime_is_reported() {
        assert_eq!(kernel(MomentOrder::new(3), 1.0).regime, Regime::ClosedForm);
        assert_eq!(kernel(MomentOrder::new(3), -2.5).regime, Regime::TailSeries);
    }

    #[test]
    fn f0_matches_definition() {
        let x: f64 = 0.3;
        let direct = (1.0 / x).atan() - x / (1.0 + x * x);
        assert!((eval_f(MomentOrder::new(0), x) - direct).abs() < 1e-15);
        assert!((eval_f(MomentOrder::new(0), -x) + direct).abs() < 1e-15);
    }

    #[test]
    fn derivative_rejects_even_order() {
        assert!(eval_f_prime(MomentOrder::new(2), 1.0).is_err());
        assert_eq!(eval_f_prime(MomentOrder::new(1), 0.0).unwrap(), 0.0);
    }

    #[test]
    fn tail_integral_matches_quadrature() {
        let q = QuadratureConfig::default();
        for m in 0..3 {
            let order = MomentOrder::odd(m);
            let big_x = 3.0;
            let num = crate::quadrature::integrate_to_infinity(|x| eval_f(order, x), big_x, &q).unwrap();
            assert!((num.value - tail_integral_f_odd(m, big_x)).abs() < 1e-12);
        }
    }
}
