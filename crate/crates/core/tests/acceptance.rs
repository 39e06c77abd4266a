//! Acceptance criteria. Each prints one PASS/FAIL line; the test fails if
//! any criterion does.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use snt_core::argmoments::{derivative_chain_check, full_window, s_n_integral, s_n_zero_sum};
use snt_core::constants::*;
use snt_core::explicitformula::gw_audit;
use snt_core::extremal::{Approximant, ApproximantSpec, Side};
use snt_core::specialfn::integral_f_odd;
use snt_core::zerodata::ZeroTable;
use snt_core::zetakernel::{von_mangoldt, zeta};
use snt_core::QuadratureConfig;

type Outcome = Result<(bool, String), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn approx(m: usize, d: f64, side: Side) -> Result<Approximant, String> {
    ApproximantSpec::new(m, d, side).and_then(Approximant::new).map_err(|e| e.to_string())
}

fn within(elapsed: Duration, limit: Duration) -> (bool, String) {
    (elapsed < limit, format!("{:.2} s of {} s", elapsed.as_secs_f64(), limit.as_secs()))
}

fn table1_reproduction() -> Outcome {
    let start = Instant::now();
    let rows = table1().map_err(|e| e.to_string())?;
    let (fast, time) = within(start.elapsed(), Duration::from_secs(1));
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.mismatches().is_empty())
        .map(|r| format!("n={}: {}", r.n, r.mismatches().join(",")))
        .collect();
    Ok((rows.len() == 9 && bad.is_empty() && fast, format!("{} rows, mismatches [{}], {time}", rows.len(), bad.join("; "))))
}

fn constant_identities() -> Outcome {
    let e = |x: snt_core::Error| x.to_string();
    let q = QuadratureConfig::default();
    let c0 = theorem1_constants(0).map_err(e)?;
    let c1 = theorem1_constants(1).map_err(e)?;
    let c0_ok = (c0.c_minus - 0.25).abs() <= 1e-15 && (c0.c_plus - 0.25).abs() <= 1e-15;
    let c1_ok = (c1.c_minus - PI / 24.0).abs() <= 1e-15 && (c1.c_plus - PI / 48.0).abs() <= 1e-15;
    let mut worst: f64 = 0.0;
    for n in (2..=20).step_by(2) {
        let c = theorem1_constants(n).map_err(e)?.c_plus;
        let closed = even_closed_form(n).map_err(e)?;
        worst = worst.max(((c - closed) / closed).abs());
    }
    let d2 = delta_constant(2, &q).map_err(e)?;
    let d4 = delta_constant(4, &q).map_err(e)?;
    let d1 = (delta_constant(1, &q).map_err(e)? - delta_nested(1, &q).map_err(e)?).abs();
    let ok = c0_ok && c1_ok && worst <= 1e-14 && d2 == 0.125 && d4 == -1.0 / 384.0 && d1 <= 1e-6;
    Ok((ok, format!("C0 {c0_ok}, C1 {c1_ok}, even identity max rel {worst:.2e}, δ2 {d2}, δ4 {d4:e}, δ1 routes {d1:.2e}")))
}

fn sandwich() -> Outcome {
    let start = Instant::now();
    let mut violations = 0;
    let mut worst_slack = f64::INFINITY;
    for m in 0..=2 {
        for d in [1.0, 2.0, 4.0] {
            let p = approx(m, d, Side::Majorant)?;
            let n = approx(m, d, Side::Minorant)?;
            for i in 0..10_000 {
                let x = -50.0 + 100.0 * (i as f64 + 0.5) / 10_000.0;
                let f = p.target(x);
                let hi = p.eval(x).map_err(|e| e.to_string())?;
                let lo = n.eval(x).map_err(|e| e.to_string())?;
                let up = hi.value + hi.certified_tail + 1e-9 - f;
                let down = f - (lo.value - lo.certified_tail - 1e-9);
                worst_slack = worst_slack.min(up).min(down);
                violations += usize::from(up < 0.0) + usize::from(down < 0.0);
            }
        }
    }
    let (fast, time) = within(start.elapsed(), Duration::from_secs(30));
    Ok((violations == 0 && fast, format!("{violations} violations in 180000 comparisons, min slack {worst_slack:.2e}, {time}")))
}

fn node_exactness() -> Outcome {
    let mut worst: f64 = 0.0;
    for m in 0..=2 {
        for d in [1.0, 2.0, 4.0] {
            let p = approx(m, d, Side::Majorant)?;
            let n = approx(m, d, Side::Minorant)?;
            for k in -20..=20 {
                let x = k as f64;
                let gp = p.eval_big_g(x).map_err(|e| e.to_string())?.value;
                let gn = n.eval_big_g(x - 0.5).map_err(|e| e.to_string())?.value;
                worst = worst.max((gp - p.big_f(x)).abs()).max((gn - n.big_f(x - 0.5)).abs());
            }
        }
    }
    Ok((worst <= 1e-10, format!("max |G − F| at nodes {worst:.2e}")))
}

fn l1_agreement() -> Outcome {
    let q = QuadratureConfig::default();
    let mut worst: f64 = 0.0;
    for m in 0..=2 {
        for d in [1.0, 2.0] {
            for side in [Side::Majorant, Side::Minorant] {
                let l1 = approx(m, d, side)?.l1_distance(&q).map_err(|e| e.to_string())?;
                worst = worst.max(l1.max_relative_spread());
            }
        }
    }
    let d = 64.0;
    let large = approx(0, d, Side::Minorant)?.l1_series_form().map_err(|e| e.to_string())?;
    let limit = PI / (24.0 * d * d);
    let rel = ((large - limit) / limit).abs();
    Ok((worst <= 1e-6 && rel <= 0.01, format!("max three-way spread {worst:.2e}; Δ=64 vs π/(24Δ²) rel {rel:.2e}")))
}

fn fourier_support() -> Outcome {
    let q = QuadratureConfig::default();
    let mut ok = true;
    let mut worst_out: f64 = 0.0;
    let mut worst_zero: f64 = 0.0;
    for m in 0..=1 {
        for d in [1.0, 2.0] {
            for side in [Side::Majorant, Side::Minorant] {
                let g = approx(m, d, side)?;
                for xi in [1.1 * d, 1.5 * d, 2.0 * d] {
                    let v = g.fourier_numeric(xi, &q).map_err(|e| e.to_string())?;
                    ok &= v.value.abs() <= v.error_budget + 1e-3;
                    worst_out = worst_out.max(v.value.abs());
                }
                let l1 = g.l1_series_form().map_err(|e| e.to_string())?;
                let expect = integral_f_odd(m) + side.sign() * l1;
                let at0 = g.fourier_numeric(0.0, &q).map_err(|e| e.to_string())?.value;
                let rel = ((at0 - expect) / expect).abs();
                ok &= rel <= 1e-5;
                worst_zero = worst_zero.max(rel);
            }
        }
    }
    Ok((ok, format!("max |ĝ| beyond Δ {worst_out:.2e}; ĝ(0) max rel {worst_zero:.2e}")))
}

fn zeta_kernel(table: &ZeroTable) -> Outcome {
    let z = |s: Complex64| zeta(s, 1e-15).map_err(|e| e.to_string());
    let e2 = (z(Complex64::new(2.0, 0.0))?.re - PI * PI / 6.0).abs();
    let e4 = (z(Complex64::new(4.0, 0.0))?.re - PI.powi(4) / 90.0).abs();
    let g1 = table.ordinates()[0];
    let at_zero = z(Complex64::new(0.5, g1))?.norm();
    Ok((e2 <= 1e-12 && e4 <= 1e-12 && at_zero < 1e-6, format!("ζ(2) err {e2:.2e}, ζ(4) err {e4:.2e}, |ζ(½+iγ₁)| {at_zero:.2e}")))
}

fn cross_method(table: &ZeroTable) -> Outcome {
    let q = QuadratureConfig::default();
    let e = |x: snt_core::Error| x.to_string();
    let mut maxima = Vec::new();
    for n in 1..=3 {
        let mut worst: f64 = 0.0;
        for i in 0..50 {
            let t = 50.0 + 450.0 * i as f64 / 49.0;
            let a = s_n_integral(n, t, &q).map_err(e)?.value;
            let b = s_n_zero_sum(n, t, table, full_window(table, t)).map_err(e)?.value;
            worst = worst.max((a - b).abs());
        }
        maxima.push(worst);
    }
    let t0 = 1e-3;
    let l2 = (s_n_integral(2, t0, &q).map_err(e)?.value - delta_constant(2, &q).map_err(e)?).abs();
    let l4 = (s_n_integral(4, t0, &q).map_err(e)?.value - delta_constant(4, &q).map_err(e)?).abs();
    let ok = maxima.iter().all(|&w| w <= 2.0) && l2 <= 1e-2 && l4 <= 1e-2;
    Ok((
        ok,
        format!(
            "max |integral − zero sum| n=1..3: {:.3}, {:.3}, {:.3}; |S_n({t0}) − δ_n| n=2: {l2:.2e}, n=4: {l4:.2e}",
            maxima[0], maxima[1], maxima[2]
        ),
    ))
}

fn derivative_chain() -> Outcome {
    let q = QuadratureConfig { abs_tol: 1e-14, rel_tol: 1e-13, ..QuadratureConfig::default() };
    let mut factors = Vec::new();
    for (n, t) in [(2, 50.0), (3, 100.0)] {
        let a = derivative_chain_check(n, t, 0.1, &q).map_err(|e| e.to_string())?;
        let b = derivative_chain_check(n, t, 0.05, &q).map_err(|e| e.to_string())?;
        factors.push(a / b);
    }
    Ok((factors.iter().all(|&f| f >= 3.5), format!("defect shrink factors n=2: {:.3}, n=3: {:.3}", factors[0], factors[1])))
}

fn gw_balance(table: &ZeroTable) -> Outcome {
    let start = Instant::now();
    let q = QuadratureConfig::default();
    let vmt = von_mangoldt((4.0 * PI).exp() as usize + 1);
    let mut ok = true;
    let mut worst_budget: f64 = 0.0;
    let mut worst_ratio: f64 = 0.0;
    for side in [Side::Majorant, Side::Minorant] {
        for m in 0..=1 {
            for d in [1.0, 2.0] {
                for t in [100.0, 500.0] {
                    let spec = ApproximantSpec::new(m, d, side).map_err(|e| e.to_string())?;
                    let l = gw_audit(&spec, t, table, &vmt, &q).map_err(|e| e.to_string())?;
                    ok &= l.balanced() && l.budget <= 0.05;
                    worst_budget = worst_budget.max(l.budget);
                    worst_ratio = worst_ratio.max(l.defect().abs() / l.budget);
                }
            }
        }
    }
    let (fast, time) = within(start.elapsed(), Duration::from_secs(120));
    Ok((ok && fast, format!("16 ledgers, max |defect|/budget {worst_ratio:.3}, max budget {worst_budget:.2e}, {time}")))
}

fn even_optimizer() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in (2..=10).step_by(2) {
        let below = theorem1_constants(n - 1).map_err(|e| e.to_string())?;
        let above = theorem1_constants(n + 1).map_err(|e| e.to_string())?;
        let o = even_case_optimize(&below, &above).map_err(|e| e.to_string())?;
        worst = worst.max((o.numeric_x - o.x_star).abs()).max((o.numeric_value - o.c_even).abs());
        let closed = even_closed_form(n).map_err(|e| e.to_string())?;
        worst = worst.max((o.c_even - closed).abs());
    }
    Ok((worst <= 1e-10, format!("max deviation {worst:.2e}")))
}

#[test]
fn acceptance() {
    let table = ZeroTable::bundled();
    let criteria: Vec<Criterion> = vec![
        ("table 1 reproduction", Box::new(table1_reproduction)),
        ("constant identities", Box::new(constant_identities)),
        ("sandwich property", Box::new(sandwich)),
        ("node exactness", Box::new(node_exactness)),
        ("L1 three-way agreement", Box::new(l1_agreement)),
        ("Fourier support", Box::new(fourier_support)),
        ("zeta kernel", Box::new(|| zeta_kernel(&table))),
        ("S_n cross-method", Box::new(|| cross_method(&table))),
        ("derivative chain", Box::new(derivative_chain)),
        ("explicit formula ledger", Box::new(|| gw_balance(&table))),
        ("even-case optimizer", Box::new(even_optimizer)),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (pass, detail) = match run() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        println!("criterion {:>2} {name}: {} ({detail})", i + 1, if pass { "PASS" } else { "FAIL" });
        if !pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
