#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

use num_complex::Complex64;
use snt_core::zerodata::ZeroTable;
use snt_core::zetakernel::*;

// mpmath, 30 digits
const LOG_DERIV_AT_2: f64 = -0.569960993094532806;
const LOG_ABS_AT_075_100: f64 = 0.695010632596788160;
const LOG_DERIV_AT_075_100: (f64, f64) = (-0.987125047383728793, -0.0706372270674115596);

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn zeta_at_even_integers() {
    assert!((zeta(c(2.0, 0.0), 1e-15).unwrap().re - PI * PI / 6.0).abs() < 1e-12);
    assert!((zeta(c(4.0, 0.0), 1e-15).unwrap().re - PI.powi(4) / 90.0).abs() < 1e-12);
    for k in 1..=4 {
        let v = zeta_real(2.0 * k as f64).unwrap();
        assert!((v - zeta_even_closed_form(k)).abs() < 1e-12, "k = {k}");
    }
}

#[test]
fn zeta_vanishes_at_first_bundled_ordinate() {
    let g1 = ZeroTable::bundled().ordinates()[0];
    assert!(zeta(c(0.5, g1), 1e-14).unwrap().norm() < 1e-6);
}

#[test]
fn log_derivative_examples() {
    let v = log_deriv_zeta(c(2.0, 0.0), 1e-14).unwrap();
    assert!((v.re - LOG_DERIV_AT_2).abs() < 1e-12 && v.im == 0.0);
    let h = 1e-4;
    let lz = |s: f64| zeta_real(s).unwrap().ln();
    let fd = (lz(3.0 + h) - lz(3.0 - h)) / (2.0 * h);
    assert!((log_deriv_zeta(c(3.0, 0.0), 1e-14).unwrap().re - fd).abs() < 1e-8);
    let far = log_deriv_zeta(c(40.0, 0.0), 1e-20).unwrap().re;
    assert!((far / (-(2f64.ln()) * 2f64.powi(-40)) - 1.0).abs() < 1e-5);
    let v = log_deriv_zeta(c(0.75, 100.0), 1e-14).unwrap();
    assert!((v.re - LOG_DERIV_AT_075_100.0).abs() < 1e-9 && (v.im - LOG_DERIV_AT_075_100.1).abs() < 1e-9);
}

#[test]
fn log_abs_examples() {
    assert!((log_abs_zeta(c(2.0, 0.0), 1e-15).unwrap() - (PI * PI / 6.0).ln()).abs() < 1e-14);
    assert!((log_abs_zeta(c(0.75, 100.0), 1e-14).unwrap() - LOG_ABS_AT_075_100).abs() < 1e-8);
    let v = log_abs_zeta(c(30.0, 0.0), 1e-20).unwrap();
    assert!((v / 2f64.powi(-30) - 1.0).abs() < 1e-4);
}

#[test]
fn digamma_examples() {
    let g = euler_gamma();
    assert!((digamma(c(1.0, 0.0)).re + g).abs() < 1e-14);
    assert!((digamma(c(0.5, 0.0)).re + g + 2.0 * 2f64.ln()).abs() < 1e-14);
    assert!((digamma_re_quarter(1e3) - 500f64.ln()).abs() < 1e-3);
}

#[test]
fn von_mangoldt_examples() {
    let t = von_mangoldt(1_000_000);
    assert_eq!(t.get(8), 2f64.ln());
    assert_eq!(t.get(12), 0.0);
    assert_eq!(t.get(97), 97f64.ln());
    let psi = t.chebyshev_psi(1_000_000);
    assert!((psi / 1e6 - 1.0).abs() < 0.05);
    let s: f64 = t.prime_powers().map(|(k, l)| l / (k as f64).sqrt()).sum();
    let r = s / (2.0 * 1e3);
    assert!(r > 1.0 / 1.2 && r < 1.2, "{r}");
}
