//! Property suite run by `validate` on a configured charge.

use serde::Serialize;

use crate::charges::TruncationMode;
use crate::entropy::{
    boundary_decomposition, cross_term, energy_integral, entropy_closed_form, entropy_momentum, mass_slope,
    wedge_monotonicity_scan,
};
use crate::error::Result;
use crate::modular::{modular_operator, random_standard_subspace, random_vector_in, vector_entropy_with};

use super::config::Scenario;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub status: Status,
    pub residual: Option<f64>,
    pub threshold: Option<f64>,
    pub detail: String,
}

impl PropertyResult {
    fn check(name: &'static str, residual: f64, threshold: f64, detail: impl Into<String>) -> Self {
        let status = if residual <= threshold { Status::Pass } else { Status::Fail };
        Self { name, status, residual: Some(residual), threshold: Some(threshold), detail: detail.into() }
    }

    fn skipped(name: &'static str, why: &str) -> Self {
        Self { name, status: Status::Skipped, residual: None, threshold: None, detail: why.into() }
    }
}

fn rel(diff: f64, scale: f64) -> f64 {
    if diff == 0.0 {
        0.0
    } else {
        diff.abs() / scale.abs().max(f64::MIN_POSITIVE)
    }
}

const MODULAR_SAMPLES: u64 = 10;

pub fn run_suite(s: &Scenario, seed: u64) -> Result<Vec<PropertyResult>> {
    let c = &s.charge;
    let m = s.config.mass;
    let h = c.field_part();
    let k = c.momentum_part();
    let base = entropy_closed_form(c, m, 0.0)?;
    let s0 = base.total;
    let mut out = Vec::new();
    let mut totals = vec![s0];

    let lambda = 2.5;
    let scaled = entropy_closed_form(&c.scaled(lambda), m, 0.0)?.total;
    out.push(PropertyResult::check(
        "quadratic_scaling",
        rel(scaled - lambda * lambda * s0, lambda * lambda * s0),
        1e-12,
        format!("S({lambda}·charge) vs {lambda}²·S(charge)"),
    ));

    let sh = entropy_closed_form(&h, m, 0.0)?.total;
    let sk = entropy_closed_form(&k, m, 0.0)?.total;
    out.push(PropertyResult::check("additivity", rel(s0 - sh - sk, s0), 1e-10, "S vs S(h) + S(k)"));

    let violations = base.invariant_violations(1e-8);
    out.push(PropertyResult::check(
        "report_invariants",
        violations.iter().map(|(_, r)| r.abs()).fold(0.0, f64::max),
        0.0,
        violations.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", "),
    ));

    if k.is_zero() {
        out.push(PropertyResult::skipped("boundary_identity", "no momentum charge"));
    } else {
        let (bulk, edge) = boundary_decomposition(&k, m)?;
        let gradient_form = entropy_closed_form(&k, m, 0.0)?.momentum_total.unwrap_or(0.0);
        out.push(PropertyResult::check(
            "boundary_identity",
            rel(gradient_form - bulk - 0.5 * edge, gradient_form),
            1e-8,
            "π∫x₁(|∇k|²+m²k²) vs π∫x₁k(Δ+m²)k + ½π∫_{x₁=0}k²",
        ));
    }

    let mut offsets: Vec<f64> = s.config.offsets.iter().copied().filter(|a| *a >= 0.0).collect();
    offsets.sort_by(f64::total_cmp);
    offsets.dedup();
    if offsets.len() < 2 {
        offsets = vec![0.0, 0.5, 1.0, 2.0];
    }
    let scan = wedge_monotonicity_scan(c, m, &offsets)?;
    totals.extend(scan.iter().map(|(_, t)| *t));
    let rise = scan.windows(2).map(|w| w[1].1 - w[0].1).fold(0.0, f64::max);
    out.push(PropertyResult::check("wedge_monotonicity", rise, 1e-10 * s0.max(1.0), "largest increase along offsets"));

    let last = *offsets.last().expect("non-empty offsets");
    if c.natural_mode(last) == TruncationMode::Full {
        let rate = energy_integral(c, m)?;
        let r = scan.iter().map(|&(a, t)| rel(t - (s0 - a * rate), t)).fold(0.0, f64::max);
        out.push(PropertyResult::check("shift_identity", r, 1e-6, "S(a) vs S(0) − a·π∫(h²+m²k²+|∇k|²)"));
    } else {
        out.push(PropertyResult::skipped("shift_identity", "charge reaches the most shifted wedge edge"));
    }

    if k.is_zero() {
        out.push(PropertyResult::skipped("mass_monotonicity", "no momentum charge"));
    } else {
        let m2 = [m * m, m * m + 0.25, m * m + 1.0];
        let vals = m2.iter().map(|x| entropy_closed_form(c, x.sqrt(), 0.0).map(|r| r.total)).collect::<Result<Vec<_>>>()?;
        totals.extend(&vals);
        let slope = mass_slope(c, 0.0);
        let r1 = rel((vals[1] - vals[0]) / 0.25 - slope, slope);
        let r2 = rel((vals[2] - vals[1]) / 0.75 - slope, slope);
        let increasing = vals[0] < vals[1] && vals[1] < vals[2];
        let r = if increasing { r1.max(r2) } else { f64::INFINITY };
        out.push(PropertyResult::check("mass_monotonicity", r, 1e-8, "finite-difference slope in m² vs π∫x₁k²"));
    }

    match s.grid {
        None => {
            out.push(PropertyResult::skipped("route_equivalence", "no momentum grid"));
            out.push(PropertyResult::skipped("cross_term", "no momentum grid"));
            out.push(PropertyResult::skipped("refinement", "no momentum grid"));
        }
        Some(grid) => {
            let mom = entropy_momentum(c, &grid, 0.0)?;
            totals.push(mom.total);
            let diff = (mom.total - s0).abs();
            let mut eq = PropertyResult::check(
                "route_equivalence",
                rel(diff, s0),
                s.config.tolerance,
                format!("closed form {s0:.10}, momentum {:.10} ± {:.3e}", mom.total, mom.error_estimate),
            );
            if diff > mom.error_estimate {
                eq.status = Status::Fail;
                eq.detail.push_str(", outside the error estimate");
            }
            out.push(eq);

            if h.is_zero() || k.is_zero() {
                out.push(PropertyResult::skipped("cross_term", "charge has only one part"));
            } else {
                let x = cross_term(c, &grid)?;
                out.push(PropertyResult::check("cross_term", rel(x, s0), 1e-3, "|cross| / S"));
            }

            let mut ladder = s.ladder()?;
            ladder.sort_by(|a, b| a.0.total_cmp(&b.0));
            if ladder.len() < 2 || c.is_zero() {
                out.push(PropertyResult::skipped("refinement", "needs a zero-free charge and two ladder rungs"));
            } else {
                let estimates =
                    ladder.iter().map(|(_, g)| entropy_momentum(c, g, 0.0).map(|r| r.error_estimate)).collect::<Result<Vec<_>>>()?;
                let rise = estimates.windows(2).map(|w| rel((w[1] - w[0]).max(0.0), w[0])).fold(0.0, f64::max);
                out.push(PropertyResult::check(
                    "refinement",
                    rise,
                    0.0,
                    format!(
                        "error estimates along the ladder: {}",
                        estimates.iter().map(|e| format!("{e:.3e}")).collect::<Vec<_>>().join(", ")
                    ),
                ));
            }
        }
    }

    let floor = totals.iter().copied().fold(f64::INFINITY, f64::min);
    let strict = c.is_zero() || s0 > 0.0;
    out.push(PropertyResult::check(
        "positivity",
        if strict { (-floor).max(0.0) } else { f64::INFINITY },
        1e-10,
        "smallest entropy computed",
    ));

    let mut worst = 0.0f64;
    let mut smallest = f64::INFINITY;
    for i in 0..MODULAR_SAMPLES {
        let n = 1 + (i as usize % 4);
        let sub = random_standard_subspace(n, seed.wrapping_add(i))?;
        let data = modular_operator(&sub)?;
        worst = worst.max(data.residuals(sub.space()).max());
        // in ℂ¹ every standard subspace has Δ = 1 and zero entropy
        if n >= 2 {
            let v = random_vector_in(&sub, seed.wrapping_add(1000 + i));
            smallest = smallest.min(vector_entropy_with(&sub, &data, &v)?);
        }
    }
    out.push(PropertyResult::check("modular_relations", worst, 1e-8, format!("{MODULAR_SAMPLES} random subspaces, seed {seed}")));
    out.push(PropertyResult::check(
        "modular_positivity",
        if smallest > 0.0 { 0.0 } else { f64::INFINITY },
        0.0,
        format!("smallest vector entropy {smallest:.6e} (n >= 2)"),
    ));
    Ok(out)
}
