//! The verification engine behind `cfrac verify`.

use cfrac::cf::{eval_with_options, EvalOptions, Termination};
use cfrac::families::{CatalogEntry, FamilySpec, Target, VerifyKind, VerifySchedule};
use cfrac::oracle::highprec::HighPrecision;
use cfrac::oracle::{target_value, OracleError};
use cfrac::rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub name: String,
    pub family: String,
    pub status: Status,
    pub depth: u64,
    pub tol: String,
    /// Achieved |cf - target| for value checks.
    pub error: Option<String>,
    pub bracketing: Option<bool>,
    pub detail: String,
    /// True when this entry's expected outcome is divergence.
    #[serde(skip)]
    pub divergent_kind: bool,
}

pub struct Overrides {
    pub depth: Option<u64>,
    pub tol: Option<BigRational>,
    pub precision: Option<u32>,
}

/// Decimal digits of a tolerance `n/d` (roughly `-log10`).
fn tol_digits(tol: &BigRational) -> u32 {
    let num_len = tol.numer().to_string().trim_start_matches('-').len() as i64;
    let den_len = tol.denom().to_string().len() as i64;
    (den_len - num_len).max(0) as u32
}

fn precision_for(tol: &BigRational, over: &Overrides) -> u32 {
    over.precision
        .unwrap_or_else(|| (tol_digits(tol) + 12).clamp(20, 60))
}

pub fn verify_entry(entry: &CatalogEntry, over: &Overrides) -> Outcome {
    let schedule = VerifySchedule {
        depth: over.depth.unwrap_or(entry.verify.depth),
        tol: over.tol.clone().unwrap_or_else(|| entry.verify.tol.clone()),
        kind: entry.verify.kind,
    };
    let cf = entry.cf();
    run_check(
        entry.name.to_string(),
        entry.family.family.to_string(),
        &cf,
        &entry.target,
        &schedule,
        over,
    )
}

/// Verification of an ad-hoc family instance against its own target.
pub fn verify_spec(spec: &FamilySpec, over: &Overrides) -> Outcome {
    let kind = match spec.target {
        Target::Divergent => VerifyKind::Divergence,
        _ => VerifyKind::Value,
    };
    let schedule = VerifySchedule {
        depth: over.depth.unwrap_or(match kind {
            VerifyKind::Divergence => 256,
            _ => 200,
        }),
        tol: over.tol.clone().unwrap_or_else(|| {
            BigRational::new(1.into(), num_bigint::BigInt::from(10u64).pow(8))
        }),
        kind,
    };
    let name = format!("{}({})", spec.family, spec.params_text());
    run_check(
        name,
        spec.family.to_string(),
        &spec.cf(),
        &spec.target,
        &schedule,
        over,
    )
}

fn run_check(
    name: String,
    family: String,
    cf: &cfrac::GeneralizedCf,
    target: &Target,
    schedule: &VerifySchedule,
    over: &Overrides,
) -> Outcome {
    let precision = precision_for(&schedule.tol, over);
    let opts = EvalOptions {
        tol: BigRational::zero(),
        max_depth: schedule.depth,
        precision,
        ..EvalOptions::default()
    };
    let tol_text = HighPrecision::from_rational(&schedule.tol, precision + 10).to_scientific(3);
    let base = Outcome {
        name,
        family,
        status: Status::Fail,
        depth: schedule.depth,
        tol: tol_text,
        error: None,
        bracketing: None,
        detail: String::new(),
        divergent_kind: schedule.kind == VerifyKind::Divergence,
    };

    match schedule.kind {
        VerifyKind::Divergence => {
            let report = eval_with_options(cf, &opts);
            let pass = report.termination == Termination::DivergenceDetected;
            Outcome {
                status: if pass { Status::Pass } else { Status::Fail },
                detail: if pass {
                    format!(
                        "divergence detected at level {} (expected)",
                        report.depth_reached
                    )
                } else {
                    format!(
                        "expected divergence within {} levels, got {}",
                        schedule.depth, report.termination
                    )
                },
                ..base
            }
        }
        VerifyKind::Traversal => {
            let report = eval_with_options(cf, &opts);
            let undefined = report
                .convergents
                .iter()
                .filter(|c| c.q.is_zero())
                .count();
            let pass = undefined > 0
                && matches!(
                    report.termination,
                    Termination::MaxDepth | Termination::ToleranceMet
                );
            Outcome {
                status: if pass { Status::Pass } else { Status::Fail },
                detail: format!(
                    "traversed {undefined} undefined level(s) to depth {} ({}); formal identity only, convergents drift",
                    report.depth_reached, report.termination
                ),
                ..base
            }
        }
        VerifyKind::Value => {
            let target_hp = match target_value(target, precision) {
                Ok(v) => v,
                Err(OracleError::NonRealTarget) => {
                    return Outcome {
                        status: Status::Skip,
                        detail: "target is non-real; verification skipped".to_string(),
                        ..base
                    };
                }
                Err(e) => {
                    return Outcome {
                        status: Status::Fail,
                        detail: format!("target evaluation failed: {e}"),
                        ..base
                    };
                }
            };
            let report = eval_with_options(cf, &opts);
            let Some(value) = report.final_exact() else {
                return Outcome {
                    status: Status::Fail,
                    detail: "no defined convergent reached".to_string(),
                    ..base
                };
            };
            let value_hp = HighPrecision::from_rational(value, precision + 10);
            let diff = value_hp.sub(&target_hp).abs();
            let tol_hp = HighPrecision::from_rational(&schedule.tol, precision + 10);
            let pass = diff.compare(&tol_hp) == std::cmp::Ordering::Less;
            Outcome {
                status: if pass { Status::Pass } else { Status::Fail },
                error: Some(diff.to_scientific(4)),
                bracketing: Some(report.bracketing),
                detail: format!(
                    "depth {} ({})",
                    report.depth_reached, report.termination
                ),
                ..base
            }
        }
    }
}

pub fn print_outcome(o: &Outcome) {
    let status = match o.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skip => "SKIP",
    };
    let mut line = format!("{status:<5} {:<32} {:<8} depth={}", o.name, o.family, o.depth);
    if let Some(err) = &o.error {
        line.push_str(&format!(" err={err} tol={}", o.tol));
    }
    if let Some(b) = o.bracketing {
        line.push_str(&format!(" bracketing={b}"));
    }
    if !o.detail.is_empty() {
        line.push_str(&format!("  [{}]", o.detail));
    }
    println!("{line}");
}
