use num_complex::Complex64;
use snt_core::extremal::{big_f, eval_G, eval_g, fourier_transform, Approximant, ApproximantSpec, Side};
use snt_core::specialfn::{eval_f, integral_f_odd, MomentOrder};
use snt_core::QuadratureConfig;

// ∫|f − g| from mpmath at 30 digits: (m, Δ, minorant, majorant).
const L1_ORACLE: [(usize, f64, f64, f64); 9] = [
    (0, 1.0, 0.128736918571484, 0.259632847608493),
    (0, 2.0, 0.0327230410499334, 0.0654479645185043),
    (0, 4.0, 0.00818123086556206, 0.0163624617342855),
    (1, 1.0, 0.00660720206925147, 0.00769654520565848),
    (1, 2.0, 0.000476494646586371, 0.000544671568203507),
    (1, 4.0, 2.98274030644414e-5, 3.40884608085682e-5),
    (2, 1.0, 0.00143236634755544, 0.00150919480078649),
    (2, 2.0, 3.71967830473591e-5, 3.84142266155237e-5),
    (2, 4.0, 5.89699204867457e-7, 6.08721784082309e-7),
];

fn approx(m: usize, delta: f64, side: Side) -> Approximant {
    Approximant::new(ApproximantSpec::new(m, delta, side).unwrap()).unwrap()
}

#[test]
fn big_f_examples() {
    assert_eq!(big_f(0, 1.0, 0.0), 1.0);
    assert_eq!(big_f(1, 2.0, 2.0), eval_f(MomentOrder::new(3), 1.0));
    assert!((big_f(0, 4.0, 8.0) - 0.0727047819983878).abs() < 1e-14);
}

#[test]
fn interpolation_at_nodes() {
    let plus = ApproximantSpec::new(0, 1.0, Side::Majorant).unwrap();
    let v = eval_G(&plus, Complex64::new(5.0, 0.0)).unwrap();
    assert!((v.value.re - big_f(0, 1.0, 5.0)).abs() < 1e-10);
    let minus = ApproximantSpec::new(0, 1.0, Side::Minorant).unwrap();
    let v = eval_G(&minus, Complex64::new(2.5, 0.0)).unwrap();
    assert!((v.value.re - big_f(0, 1.0, 2.5)).abs() < 1e-10);
    assert!(v.certified_tail <= minus.abs_tol);
}

#[test]
fn node_exactness_up_to_twenty() {
    for (m, d) in [(0, 1.0), (1, 2.0), (2, 4.0)] {
        let p = approx(m, d, Side::Majorant);
        let n = approx(m, d, Side::Minorant);
        for j in -20..=20 {
            let x = j as f64;
            assert!((p.eval_big_g(x).unwrap().value - p.big_f(x)).abs() <= 1e-10);
            let y = x + 0.5;
            assert!((n.eval_big_g(y).unwrap().value - n.big_f(y)).abs() <= 1e-10);
        }
    }
}

#[test]
fn majorant_derivative_matches_at_nonzero_integers() {
    for (m, d) in [(0, 1.0), (1, 2.0), (2, 1.0)] {
        let p = approx(m, d, Side::Majorant);
        let h = 1e-5;
        for j in (-12..=12).filter(|&j| j != 0) {
            let x = j as f64;
            let fd = (p.eval_big_g(x + h).unwrap().value - p.eval_big_g(x - h).unwrap().value) / (2.0 * h);
            assert!((fd - p.big_f_prime(x)).abs() <= 1e-6, "m={m} Δ={d} x={x}");
        }
    }
}

#[test]
fn sandwich_examples() {
    let lo = ApproximantSpec::new(0, 2.0, Side::Minorant).unwrap();
    let hi = ApproximantSpec::new(0, 2.0, Side::Majorant).unwrap();
    assert!(eval_g(&lo, Complex64::new(0.0, 0.0)).unwrap().value.re <= 1.0);
    assert!(eval_g(&hi, Complex64::new(0.0, 0.0)).unwrap().value.re >= 1.0);
    let s = ApproximantSpec::new(1, 1.0, Side::Majorant).unwrap();
    assert!(eval_G(&s, Complex64::new(0.37, 0.0)).unwrap().value.re >= big_f(1, 1.0, 0.37));
}

#[test]
fn sandwich_on_dense_grid() {
    for m in 0..=2 {
        for d in [1.0, 2.0, 4.0] {
            let p = approx(m, d, Side::Majorant);
            let n = approx(m, d, Side::Minorant);
            let order = MomentOrder::odd(m);
            for i in 0..10_000 {
                let x = -50.0 + 100.0 * (i as f64 + 0.5) / 10_000.0;
                let f = eval_f(order, x);
                let gp = p.eval(x).unwrap();
                let gn = n.eval(x).unwrap();
                assert!(gn.value - gn.certified_tail <= f + 1e-15, "minorant m={m} Δ={d} x={x}");
                assert!(f <= gp.value + gp.certified_tail + 1e-15, "majorant m={m} Δ={d} x={x}");
            }
        }
    }
}

#[test]
fn quadratic_decay_constant() {
    for side in [Side::Majorant, Side::Minorant] {
        let g = approx(0, 1.0, side);
        let k = g.decay_constant();
        assert!(k <= 10.0);
        let v = g.eval(100.0).unwrap().value;
        assert!(v.abs() <= k / (1.0 + 1e4));
        for m in 0..=2 {
            for d in [1.0, 2.0] {
                let g = approx(m, d, side);
                let k = g.decay_constant();
                for i in 0..=20_000 {
                    let x = i as f64 * 0.5;
                    assert!(g.value(x).abs() * (1.0 + x * x) <= k, "{side} m={m} Δ={d} x={x}");
                }
            }
        }
    }
}

#[test]
fn exponential_type_along_imaginary_axis() {
    for side in [Side::Majorant, Side::Minorant] {
        for (m, d) in [(0, 1.0), (1, 2.0)] {
            let spec = ApproximantSpec::new(m, d, side).unwrap().with_abs_tol(1e200);
            let g = Approximant::new(spec).unwrap();
            let mut prev = f64::INFINITY;
            for y in [5.0, 10.0, 20.0] {
                let e = g.eval(Complex64::new(0.0, y)).unwrap();
                assert!(e.certified_tail < 1e-9 * e.value.norm(), "{side} m={m} Δ={d} y={y}: {e:?}");
                let rate = e.value.norm().ln() / (2.0 * std::f64::consts::PI * y);
                assert!(rate <= d, "{side} y={y} rate={rate}");
                assert!((d - rate) < prev);
                prev = d - rate;
            }
        }
    }
}

#[test]
fn l1_distance_three_routes_match_oracle() {
    let q = QuadratureConfig::default();
    for (m, d, minus, plus) in L1_ORACLE {
        for (side, expect) in [(Side::Minorant, minus), (Side::Majorant, plus)] {
            let l1 = approx(m, d, side).l1_distance(&q).unwrap();
            for (name, v) in [("closed", l1.closed_form), ("series", l1.series_form), ("quadrature", l1.quadrature_form)] {
                assert!(v >= 0.0);
                assert!(((v - expect) / expect).abs() < 1e-6, "{side} m={m} Δ={d} {name}: {v} vs {expect}");
            }
            assert!(((l1.closed_form - expect) / expect).abs() < 1e-10);
            assert!(((l1.series_form - expect) / expect).abs() < 1e-10);
            assert!(l1.max_relative_spread() <= 1e-6);
        }
    }
}

#[test]
fn l1_large_delta_limit() {
    let g = approx(0, 64.0, Side::Minorant);
    let v = g.l1_series_form().unwrap();
    assert!(((v - 3.19579330809509e-5) / 3.19579330809509e-5).abs() < 1e-10);
    let limit = std::f64::consts::PI / (24.0 * 64.0 * 64.0);
    assert!(((v - limit) / limit).abs() < 0.01);
}

#[test]
fn fourier_transform_at_zero_is_the_integral() {
    let q = QuadratureConfig::default();
    for (m, d, minus, plus) in L1_ORACLE.iter().copied().filter(|r| r.1 <= 2.0) {
        for (side, l1) in [(Side::Minorant, minus), (Side::Majorant, plus)] {
            let spec = ApproximantSpec::new(m, d, side).unwrap();
            let expect = integral_f_odd(m) + side.sign() * l1;
            let ft = fourier_transform(&spec, 0.0, &q).unwrap();
            assert!((ft.value - expect).abs() <= ft.error_budget + 1e-5 * expect, "{side} m={m} Δ={d}");
            let an = Approximant::new(spec).unwrap().fourier_analytic(0.0);
            assert!((an.value - expect).abs() <= an.error_budget + 1e-15, "{side} m={m} Δ={d}: {}", an.value - expect);
        }
    }
}

#[test]
fn fourier_transform_support_and_evenness() {
    let q = QuadratureConfig::default();
    let spec = ApproximantSpec::new(1, 1.0, Side::Majorant).unwrap();
    let g = Approximant::new(spec).unwrap();
    let out = g.fourier_numeric(2.0, &q).unwrap();
    assert!(out.value.abs() <= out.error_budget + 1e-3);
    let a = g.fourier_numeric(0.3, &q).unwrap();
    let b = g.fourier_numeric(-0.3, &q).unwrap();
    assert_eq!(a.value, b.value);
    let an = g.fourier_analytic(0.3);
    assert!((an.value - a.value).abs() <= a.error_budget + an.error_budget, "{} vs {}", an.value, a.value);
}

#[test]
fn analytic_and_numeric_transforms_agree() {
    let q = QuadratureConfig::default();
    for side in [Side::Majorant, Side::Minorant] {
        for (m, d) in [(0, 1.0), (1, 2.0)] {
            let g = approx(m, d, side);
            for xi in [0.1, 0.45, 0.9 * d, 1.3 * d] {
                let a = g.fourier_analytic(xi);
                let n = g.fourier_numeric(xi, &q).unwrap();
                assert!((a.value - n.value).abs() <= a.error_budget + n.error_budget, "{side} m={m} Δ={d} ξ={xi}");
            }
        }
    }
}
