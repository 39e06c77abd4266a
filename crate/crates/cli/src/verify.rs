use std::f64::consts::PI;

use anyhow::{bail, Result};
use num_complex::Complex64;
use snt_core::argmoments::{derivative_chain_check, full_window, s_n_integral, s_n_zero_sum};
use snt_core::constants::{
    delta_constant, delta_nested, even_case_optimize, even_closed_form, table1, theorem1_constants, EVEN_IDENTITY_TOL,
    OPTIMIZER_TOL,
};
use snt_core::explicitformula::gw_audit;
use snt_core::extremal::{Approximant, ApproximantSpec, Side};
use snt_core::specialfn::integral_f_odd;
use snt_core::zetakernel::{von_mangoldt, zeta};
use snt_core::{QuadratureConfig, ZeroTable};

use crate::output::Table;

pub const SUITES: [&str; 6] = ["constants", "extremal", "zeta", "argmoments", "cross-method", "gw"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

struct Report {
    table: Table,
    failed: bool,
}

impl Report {
    fn record(&mut self, suite: &str, check: &str, outcome: Result<(bool, String)>) {
        let (status, detail) = match outcome {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        self.failed |= status == Status::Fail;
        self.push(suite, check, status, detail);
    }

    fn push(&mut self, suite: &str, check: &str, status: Status, detail: String) {
        self.table.push(vec![suite.into(), check.into(), status.label().into(), detail.into()]);
    }
}

fn approx(m: usize, d: f64, side: Side) -> Result<Approximant> {
    Ok(Approximant::new(ApproximantSpec::new(m, d, side)?)?)
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

fn constants_suite(r: &mut Report, q: &QuadratureConfig) {
    let s = "constants";
    r.record(s, "table1", (|| {
        let bad: Vec<String> = table1()?
            .iter()
            .filter(|row| !row.mismatches().is_empty())
            .map(|row| format!("n={} {}", row.n, row.mismatches().join(" ")))
            .collect();
        Ok((bad.is_empty(), if bad.is_empty() { "9 rows match".into() } else { bad.join("; ") }))
    })());
    r.record(s, "even identity n=2..20", (|| {
        let worst = max_of(
            (2..=20)
                .step_by(2)
                .map(|n| {
                    let c = theorem1_constants(n)?.c_plus;
                    let closed = even_closed_form(n)?;
                    Ok(((c - closed) / closed).abs())
                })
                .collect::<Result<Vec<f64>>>()?,
        );
        Ok((worst <= EVEN_IDENTITY_TOL, format!("max rel {worst:.3e}")))
    })());
    r.record(s, "delta_2 and delta_4", (|| {
        let d2 = delta_constant(2, q)?;
        let d4 = delta_constant(4, q)?;
        Ok((d2 == 0.125 && d4 == -1.0 / 384.0, format!("{d2:.9e} {d4:.9e}")))
    })());
    r.record(s, "delta_1 nested", (|| {
        let diff = (delta_constant(1, q)? - delta_nested(1, q)?).abs();
        Ok((diff <= 1e-6, format!("difference {diff:.3e}")))
    })());
    r.record(s, "even-case optimizer", (|| {
        let mut worst: f64 = 0.0;
        for n in (2..=10).step_by(2) {
            let o = even_case_optimize(&theorem1_constants(n - 1)?, &theorem1_constants(n + 1)?)?;
            worst = worst.max((o.numeric_x - o.x_star).abs()).max((o.numeric_value - o.c_even).abs());
        }
        Ok((worst <= OPTIMIZER_TOL, format!("max difference {worst:.3e}")))
    })());
}

fn extremal_suite(r: &mut Report, q: &QuadratureConfig) {
    let s = "extremal";
    r.record(s, "sandwich", (|| {
        let mut violations = 0usize;
        for m in 0..=2 {
            for d in [1.0, 2.0, 4.0] {
                let p = approx(m, d, Side::Majorant)?;
                let n = approx(m, d, Side::Minorant)?;
                for i in 0..10_000 {
                    let x = -50.0 + 100.0 * (i as f64 + 0.5) / 10_000.0;
                    let f = p.target(x);
                    let hi = p.eval(x)?;
                    let lo = n.eval(x)?;
                    if f > hi.value + hi.certified_tail + 1e-9 || lo.value - lo.certified_tail > f + 1e-9 {
                        violations += 1;
                    }
                }
            }
        }
        Ok((violations == 0, format!("{violations} violations in 90000 points")))
    })());
    r.record(s, "node exactness", (|| {
        let mut worst: f64 = 0.0;
        for (m, d) in [(0, 1.0), (1, 2.0), (2, 4.0)] {
            let p = approx(m, d, Side::Majorant)?;
            let n = approx(m, d, Side::Minorant)?;
            for k in -20..=20 {
                let x = k as f64;
                worst = worst.max((p.eval_big_g(x)?.value - p.big_f(x)).abs());
                worst = worst.max((n.eval_big_g(x - 0.5)?.value - n.big_f(x - 0.5)).abs());
            }
        }
        Ok((worst <= 1e-10, format!("max deviation {worst:.3e}")))
    })());
    r.record(s, "L1 three-way", (|| {
        let mut worst: f64 = 0.0;
        for m in 0..=2 {
            for d in [1.0, 2.0] {
                for side in [Side::Majorant, Side::Minorant] {
                    worst = worst.max(approx(m, d, side)?.l1_distance(q)?.max_relative_spread());
                }
            }
        }
        Ok((worst <= 1e-6, format!("max relative spread {worst:.3e}")))
    })());
    r.record(s, "Fourier support", (|| {
        let mut ok = true;
        let mut worst: f64 = 0.0;
        for side in [Side::Majorant, Side::Minorant] {
            let g = approx(0, 1.0, side)?;
            for xi in [1.1, 1.5, 2.0] {
                let v = g.fourier_numeric(xi, q)?;
                ok &= v.value.abs() <= v.error_budget + 1e-3;
                worst = worst.max(v.value.abs());
            }
            let l1 = g.l1_series_form()?;
            let at0 = g.fourier_analytic(0.0).value;
            let expect = integral_f_odd(0) + side.sign() * l1;
            ok &= ((at0 - expect) / expect).abs() <= 1e-5;
        }
        Ok((ok, format!("max |ĝ| outside support {worst:.3e}")))
    })());
}

fn zeta_suite(r: &mut Report, zeros: Option<&ZeroTable>) {
    let s = "zeta";
    r.record(s, "zeta(2) and zeta(4)", (|| {
        let z2 = zeta(Complex64::new(2.0, 0.0), 1e-15)?.re;
        let z4 = zeta(Complex64::new(4.0, 0.0), 1e-15)?.re;
        let e = (z2 - PI * PI / 6.0).abs().max((z4 - PI.powi(4) / 90.0).abs());
        Ok((e <= 1e-12, format!("max error {e:.3e}")))
    })());
    match zeros {
        Some(z) => r.record(s, "first ordinate", (|| {
            let v = zeta(Complex64::new(0.5, z.ordinates()[0]), 1e-14)?.norm();
            Ok((v < 1e-6, format!("|zeta| = {v:.3e}")))
        })()),
        None => r.push(s, "first ordinate", Status::Skip, "zero table not found".into()),
    }
}

fn argmoments_suite(r: &mut Report, q: &QuadratureConfig) {
    let s = "argmoments";
    r.record(s, "small-t limits", (|| {
        let e2 = (s_n_integral(2, 0.01, q)?.value - delta_constant(2, q)?).abs();
        let e4 = (s_n_integral(4, 1e-4, q)?.value - delta_constant(4, q)?).abs();
        Ok((e2 <= 1e-2 && e4 <= 1e-2, format!("n=2: {e2:.3e}, n=4: {e4:.3e}")))
    })());
    r.record(s, "derivative chain", (|| {
        let tight = QuadratureConfig { abs_tol: 1e-14, rel_tol: 1e-13, ..*q };
        let mut worst = f64::INFINITY;
        for (n, t) in [(2, 50.0), (3, 100.0)] {
            let a = derivative_chain_check(n, t, 0.1, &tight)?;
            let b = derivative_chain_check(n, t, 0.05, &tight)?;
            worst = worst.min(a / b);
        }
        Ok((worst >= 3.5, format!("min shrink factor {worst:.3}")))
    })());
}

fn cross_method_suite(r: &mut Report, q: &QuadratureConfig, zeros: Option<&ZeroTable>) {
    let s = "cross-method";
    let Some(z) = zeros else {
        r.push(s, "n=1,2,3 on [50, 500]", Status::Skip, "zero table not found".into());
        return;
    };
    for n in 1..=3 {
        r.record(s, &format!("n={n} on [50, 500]"), (|| {
            let mut worst: f64 = 0.0;
            for i in 0..50 {
                let t = 50.0 + 450.0 * i as f64 / 49.0;
                let a = s_n_integral(n, t, q)?.value;
                let b = s_n_zero_sum(n, t, z, full_window(z, t))?.value;
                worst = worst.max((a - b).abs());
            }
            Ok((worst <= 2.0, format!("max difference {worst:.3e}")))
        })());
    }
}

fn gw_suite(r: &mut Report, q: &QuadratureConfig, zeros: Option<&ZeroTable>) {
    let s = "gw";
    let Some(z) = zeros else {
        r.push(s, "ledger balance", Status::Skip, "zero table not found".into());
        return;
    };
    r.record(s, "ledger balance", (|| {
        let vmt = von_mangoldt((4.0 * PI).exp() as usize + 1);
        let mut worst_budget: f64 = 0.0;
        let mut ok = true;
        for m in 0..=1 {
            for d in [1.0, 2.0] {
                for t in [100.0, 500.0] {
                    let l = gw_audit(&ApproximantSpec::new(m, d, Side::Minorant)?, t, z, &vmt, q)?;
                    ok &= l.balanced() && l.budget <= 0.05;
                    worst_budget = worst_budget.max(l.budget);
                }
            }
        }
        Ok((ok, format!("max budget {worst_budget:.3e}")))
    })());
}

/// Runs the selected suites. Returns the report and whether nothing failed.
pub fn run(suite: Option<&str>, q: &QuadratureConfig, zeros: Option<&ZeroTable>) -> Result<(Table, bool)> {
    if let Some(name) = suite {
        if !SUITES.contains(&name) {
            bail!("unknown suite {name:?}; expected one of {}", SUITES.join(", "));
        }
    }
    let mut r = Report { table: Table::new(&["suite", "check", "status", "detail"]), failed: false };
    let wanted = |name: &str| suite.map_or(true, |s| s == name);
    if wanted("constants") {
        constants_suite(&mut r, q);
    }
    if wanted("extremal") {
        extremal_suite(&mut r, q);
    }
    if wanted("zeta") {
        zeta_suite(&mut r, zeros);
    }
    if wanted("argmoments") {
        argmoments_suite(&mut r, q);
    }
    if wanted("cross-method") {
        cross_method_suite(&mut r, q, zeros);
    }
    if wanted("gw") {
        gw_suite(&mut r, q, zeros);
    }
    Ok((r.table, !r.failed))
}
