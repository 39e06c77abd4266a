use std::f64::consts::PI;

use anyhow::{bail, Result};
use snt_core::argmoments::{full_window, s_n_integral, s_n_zero_sum};
use snt_core::constants::{delta_constant, envelope_bounds, table1_rows, theorem1_constants, wakasa_constant};
use snt_core::explicitformula::gw_audit;
use snt_core::extremal::{Approximant, ApproximantSpec, Side};
use snt_core::zetakernel::von_mangoldt;

use crate::config::RunConfig;
use crate::output::{Cell, Table};

/// A table and whether every check it carries passed.
pub struct Outcome {
    pub table: Table,
    pub passed: bool,
}

pub fn table1(cfg: &RunConfig) -> Result<Outcome> {
    let n_max = cfg.n_max.unwrap_or(10);
    if n_max < 2 {
        bail!("--n-max must be at least 2");
    }
    let mut table = Table::new(&["n", "c_minus", "c_plus", "w", "ratio", "extrapolated", "status"]);
    let mut passed = true;
    for row in table1_rows(n_max)? {
        let bad = row.mismatches();
        let status = if row.extrapolated {
            "unchecked".to_string()
        } else if bad.is_empty() {
            "match".to_string()
        } else {
            passed = false;
            format!("mismatch: {}", bad.join(" "))
        };
        table.push(vec![
            row.n.into(),
            row.c_minus.into(),
            row.c_plus.into(),
            row.w.into(),
            row.ratio.into(),
            row.extrapolated.into(),
            status.into(),
        ]);
    }
    Ok(Outcome { table, passed })
}

pub fn constants(cfg: &RunConfig) -> Result<Table> {
    let ns: Vec<usize> = match cfg.n {
        Some(n) => vec![n],
        None => (0..=cfg.n_max.unwrap_or(10)).collect(),
    };
    let mut table = Table::new(&["n", "c_minus", "c_plus", "w", "delta_n"]);
    for n in ns {
        let c = theorem1_constants(n)?;
        let w = if n >= 2 { Some(wakasa_constant(n)?) } else { None };
        let delta = if n >= 1 { Some(delta_constant(n, &cfg.quadrature)?) } else { None };
        table.push(vec![n.into(), c.c_minus.into(), c.c_plus.into(), w.into(), delta.into()]);
    }
    Ok(table)
}

pub fn snt(cfg: &RunConfig) -> Result<Table> {
    let n = cfg.need(cfg.n, "n")?;
    let points = cfg.points(cfg.t, "t")?;
    let zeros = if n >= 1 && points.iter().any(|&t| t >= 2.0) { Some(cfg.require_zero_table()?) } else { None };
    let mut table = Table::new(&["t", "s_integral", "integral_budget", "s_zero_sum", "lower", "upper", "ratio"]);
    for t in points {
        let integral = s_n_integral(n, t, &cfg.quadrature)?;
        let zero_sum = match &zeros {
            Some(z) if t >= 2.0 => Some(s_n_zero_sum(n, t, z, full_window(z, t))?.value),
            _ => None,
        };
        let env = if t > std::f64::consts::E.exp() { Some(envelope_bounds(n, t, 0.0)?) } else { None };
        let ratio = env.map(|(lo, hi)| if integral.value >= 0.0 { integral.value / hi } else { integral.value / lo });
        table.push(vec![
            t.into(),
            integral.value.into(),
            integral.error_budget.into(),
            zero_sum.into(),
            env.map(|e| e.0).into(),
            env.map(|e| e.1).into(),
            ratio.into(),
        ]);
    }
    Ok(table)
}

fn spec(cfg: &RunConfig) -> Result<ApproximantSpec> {
    let m = cfg.need(cfg.m, "m")?;
    let delta = cfg.need(cfg.delta, "delta")?;
    Ok(ApproximantSpec::new(m, delta, cfg.side.unwrap_or(Side::Majorant))?)
}

pub fn extremal_eval(cfg: &RunConfig) -> Result<Table> {
    let g = Approximant::new(spec(cfg)?)?;
    let mut table = Table::new(&["x", "g", "f", "certified_tail", "g_minus_f"]);
    for x in cfg.points(cfg.x.or(cfg.t), "x")? {
        let e = g.eval(x)?;
        let f = g.target(x);
        table.push(vec![x.into(), e.value.into(), f.into(), e.certified_tail.into(), (e.value - f).into()]);
    }
    Ok(table)
}

pub fn gw(cfg: &RunConfig) -> Result<Outcome> {
    let s = spec(cfg)?;
    let zeros = cfg.require_zero_table()?;
    let vmt = von_mangoldt((2.0 * PI * s.delta).exp().floor() as usize + 1);
    let mut table = Table::new(&[
        "t",
        "zero_side",
        "boundary_term",
        "log_pi_term",
        "archimedean_term",
        "prime_term",
        "defect",
        "budget",
        "balanced",
        "dominant",
    ]);
    let mut passed = true;
    for t in cfg.points(cfg.t, "t")? {
        let l = gw_audit(&s, t, &zeros, &vmt, &cfg.quadrature)?;
        passed &= l.balanced();
        table.push(vec![
            t.into(),
            l.zero_side.into(),
            l.boundary_term.into(),
            l.log_pi_term.into(),
            l.archimedean_term.into(),
            l.prime_term.into(),
            l.defect().into(),
            l.budget.into(),
            l.balanced().into(),
            Cell::from(l.breakdown.dominant()),
        ]);
    }
    Ok(Outcome { table, passed })
}
