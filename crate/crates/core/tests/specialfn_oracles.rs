#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

use snt_core::specialfn::*;
use snt_core::QuadratureConfig;

// mpmath, 30 digits
const F2_AT_1: f64 = 0.0479351699358850237;
const F1_PRIME_AT_1: f64 = -0.285398163397448310;

#[test]
fn kernel_examples() {
    assert_eq!(eval_f(MomentOrder::new(1), 0.0), 1.0);
    assert_eq!(eval_f(MomentOrder::new(2), 0.0), 0.0);
    assert_eq!(eval_f(MomentOrder::new(0), 0.0), 0.0);
    assert_eq!(kernel(MomentOrder::new(0), 0.0).regime, Regime::OriginLimit);
    assert!((eval_f(MomentOrder::new(2), 1.0) - F2_AT_1).abs() < 1e-15);
    for m in 0..4 {
        let expect = 1.0 / ((2 * m + 1) as f64).powi(2);
        assert!((eval_f(MomentOrder::odd(m), 0.0) - expect).abs() < 1e-15);
    }
}

#[test]
fn regimes_agree_at_the_switch_point() {
    for n in 0..8 {
        let order = MomentOrder::new(n);
        for i in 0..=20 {
            let x = 1.5 + 0.05 * i as f64;
            let a = closed_form(order, x);
            let b = tail_series(order, x);
            assert!((a - b).abs() <= 1e-11, "n = {n}, x = {x}: {a} vs {b}");
        }
    }
    let o = MomentOrder::new(3);
    assert!((closed_form(o, 2.0) - tail_series(o, 2.0)).abs() <= 1e-12);
}

#[test]
fn derivative_examples() {
    let o1 = MomentOrder::new(1);
    assert_eq!(eval_f_prime(o1, 0.0).unwrap(), 0.0);
    assert!((eval_f_prime(o1, 1.0).unwrap() - F1_PRIME_AT_1).abs() < 1e-15);
    let o3 = MomentOrder::new(3);
    let h = 1e-4;
    let fd = (eval_f(o3, 10.0 + h) - eval_f(o3, 10.0 - h)) / (2.0 * h);
    assert!((eval_f_prime(o3, 10.0).unwrap() - fd).abs() < 1e-8);
    assert!(eval_f_prime(MomentOrder::new(2), 1.0).is_err());
}

#[test]
fn integral_examples() {
    assert_eq!(integral_f_odd(0), PI / 2.0);
    assert_eq!(integral_f_odd(1), PI / 12.0);
    assert_eq!(integral_f_odd(2), PI / 30.0);
}

#[test]
fn integral_form_examples() {
    let q = QuadratureConfig::default();
    let v = eval_f_integralform(0, 0.0, &q).unwrap();
    assert!((v.value - 1.0).abs() <= v.error.max(1e-10));
    let v = eval_f_integralform(1, 3.0, &q).unwrap();
    assert!((v.value - eval_f(MomentOrder::new(3), 3.0)).abs() < 1e-10);
    let v = eval_f_integralform(0, 1e4, &q).unwrap();
    assert!(v.value.abs() < 1e-7);
}

#[test]
fn decay_rates() {
    for m in 0..3 {
        let odd = MomentOrder::odd(m);
        let even = MomentOrder::even(m);
        let c_odd = 1.0 / ((2 * m + 1) * (2 * m + 3)) as f64;
        for k in 0..=50 {
            let x = 10f64 * 10f64.powf(k as f64 / 10.0);
            assert!(x * x * eval_f(odd, x).abs() <= c_odd * 1.0001);
            assert!(x.powi(3) * eval_f(even, x).abs() <= 2.0 * c_odd * 1.0001);
        }
    }
}
