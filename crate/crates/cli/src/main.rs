//! `cfrac`: build, evaluate, verify and transform the continued
//! fractions of the catalog.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 divergence.

mod directives;
mod output;
mod schemefile;
mod verifyrun;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use cfrac::cf::{convergents, eval_to_tolerance, Termination};
use cfrac::families::{
    self, catalog, catalog_entry, FamilyId, FamilySpec, Target, TransformStep,
};
use cfrac::oracle::highprec::{HighPrecision, Rounding};
use cfrac::oracle::{bottom_up_truncation, target_value, OracleError};
use cfrac::rational::{parse_decimal, parse_ratio, BigRational};
use cfrac::transforms;
use cfrac::GeneralizedCf;

use directives::Mobius;
use output::{build_records, print_records, Format, RecordOptions};
use verifyrun::{Outcome, Overrides, Status};

const EXIT_OK: i32 = 0;
const EXIT_VERIFY_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_DIVERGENCE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "cfrac",
    version,
    about = "Generalized continued fractions from three-term recurrences: exact convergents, transforms and verified identities"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List catalog entries (name, family, parameters, target kind).
    List {
        /// Restrict to one family (e.g. III, family_IV, i_simple).
        #[arg(long)]
        family: Option<String>,
        /// Machine-readable output.
        #[arg(long)]
        json: bool,
    },
    /// Print the convergent table of a catalog entry or scheme file.
    Eval {
        /// Catalog entry name (see `cfrac list`).
        name: Option<String>,
        /// JSON scheme file with affine rows f, g, h.
        #[arg(long)]
        scheme: Option<PathBuf>,
        /// Highest level to print (default 30), or the depth cap when
        /// --tol is given.
        #[arg(long)]
        depth: Option<u64>,
        /// Stop once two consecutive differences fall below this.
        #[arg(long)]
        tol: Option<String>,
        /// Significant digits for rendered values (default
        /// $CF_PRECISION or 50).
        #[arg(long)]
        precision: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Truncate values to four decimals instead of rounding
        /// (comma decimal mark in table output).
        #[arg(long)]
        euler_style: bool,
    },
    /// Check catalog entries against their oracle targets.
    Verify {
        /// Catalog name, family id, or `all`.
        selector: String,
        /// Ad-hoc family parameters, e.g. `--params a=1/2,l=1/2,d=1`
        /// (greek names also accepted).
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        depth: Option<u64>,
        #[arg(long)]
        tol: Option<String>,
        #[arg(long)]
        precision: Option<u32>,
        /// Write a JSON report here as well.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Apply transform directives and show the fraction before/after.
    Transform {
        /// Catalog entry name.
        name: Option<String>,
        #[arg(long)]
        scheme: Option<PathBuf>,
        /// Directives, in order: scale:k->EXPR, adjoin:B0,A1, drop,
        /// altsign, cleardenom.
        #[arg(long = "op")]
        ops: Vec<String>,
        /// Levels to print and check.
        #[arg(long, default_value_t = 8)]
        depth: u64,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::List { family, json } => cmd_list(family.as_deref(), json),
        Cmd::Eval {
            name,
            scheme,
            depth,
            tol,
            precision,
            format,
            euler_style,
        } => cmd_eval(
            name.as_deref(),
            scheme.as_deref(),
            depth,
            tol.as_deref(),
            precision,
            format,
            euler_style,
        ),
        Cmd::Verify {
            selector,
            params,
            depth,
            tol,
            precision,
            report,
        } => cmd_verify(
            &selector,
            params.as_deref(),
            depth,
            tol.as_deref(),
            precision,
            report.as_deref(),
        ),
        Cmd::Transform {
            name,
            scheme,
            ops,
            depth,
        } => cmd_transform(name.as_deref(), scheme.as_deref(), &ops, depth),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn default_precision(cli_precision: Option<u32>) -> u32 {
    cli_precision.unwrap_or_else(|| {
        std::env::var("CF_PRECISION")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(50)
    })
}

fn cmd_list(family: Option<&str>, json: bool) -> Result<i32, String> {
    let filter = match family {
        None => None,
        Some(f) => Some(FamilyId::parse(f).ok_or_else(|| format!("unknown family `{f}`"))?),
    };
    let entries: Vec<_> = catalog()
        .iter()
        .filter(|e| filter.is_none_or(|id| e.family.family == id))
        .collect();
    if json {
        let items: Vec<serde_json::Value> = entries
            .iter()
            .map(|e| {
                let params: serde_json::Map<String, serde_json::Value> = e
                    .family
                    .params()
                    .iter()
                    .map(|(k, v)| {
                        (
                            k.to_string(),
                            serde_json::Value::String(
                                cfrac::rational::display_ratio(v),
                            ),
                        )
                    })
                    .collect();
                serde_json::json!({
                    "name": e.name,
                    "family": e.family.family.to_string(),
                    "params": params,
                    "target": e.target.kind(),
                    "note": e.note,
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&items).unwrap());
    } else {
        let name_w = entries.iter().map(|e| e.name.len()).max().unwrap_or(4);
        let param_w = entries
            .iter()
            .map(|e| e.family.params_text().len())
            .max()
            .unwrap_or(6);
        for e in &entries {
            println!(
                "{:<name_w$}  {:<8} {:<param_w$}  {}",
                e.name,
                e.family.family.to_string(),
                e.family.params_text(),
                e.target.kind(),
            );
        }
    }
    Ok(EXIT_OK)
}

fn resolve_cf(
    name: Option<&str>,
    scheme: Option<&std::path::Path>,
) -> Result<(GeneralizedCf, Option<Target>, String), String> {
    match (name, scheme) {
        (Some(_), Some(_)) => Err("give either a catalog name or --scheme, not both".into()),
        (Some(n), None) => {
            let entry =
                catalog_entry(n).ok_or_else(|| format!("unknown catalog entry `{n}`"))?;
            Ok((entry.cf(), Some(entry.target.clone()), n.to_string()))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let scheme = schemefile::parse_scheme(&text)?;
            let cf = cfrac::recurrence::cf_from_recurrence(&scheme)
                .map_err(|e| e.to_string())?;
            Ok((cf, None, path.display().to_string()))
        }
        (None, None) => Err("give a catalog name or --scheme FILE".into()),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_eval(
    name: Option<&str>,
    scheme: Option<&std::path::Path>,
    depth: Option<u64>,
    tol: Option<&str>,
    precision: Option<u32>,
    format: Format,
    euler_style: bool,
) -> Result<i32, String> {
    let (cf, target, _label) = resolve_cf(name, scheme)?;
    let precision = default_precision(precision);
    let tol = tol
        .map(|t| parse_decimal(t).map_err(|e| e.to_string()))
        .transpose()?;

    let mut divergence_seen = false;
    let convs;
    let mut summary: Vec<String> = Vec::new();
    match tol {
        Some(t) => {
            let report = eval_to_tolerance(&cf, &t, depth.unwrap_or(4096), precision);
            divergence_seen = report.termination == Termination::DivergenceDetected;
            summary.push(format!(
                "termination: {} at level {}, est_error {}, bracketing {}",
                report.termination,
                report.depth_reached,
                HighPrecision::from_rational(&report.est_error, precision + 10)
                    .to_scientific(4),
                report.bracketing
            ));
            convs = report.convergents;
        }
        None => {
            convs = convergents(&cf, depth.unwrap_or(30));
        }
    }

    let records = build_records(
        &convs,
        &RecordOptions {
            precision,
            euler_style,
            comma_mark: format == Format::Table,
        },
    );
    print_records(&records, format);

    match target {
        Some(Target::Divergent) => {
            summary.push("target: divergent (no finite value at this parameter point)".into());
            divergence_seen = true;
        }
        Some(t) => match target_value(&t, precision) {
            Ok(tv) => {
                let last = convs.iter().rev().find_map(|c| c.value());
                let diff = last.map(|v| {
                    HighPrecision::from_rational(v, precision + 10)
                        .sub(&tv)
                        .abs()
                        .to_scientific(4)
                });
                summary.push(format!(
                    "target ({}) {} = {}",
                    t.kind(),
                    t,
                    tv.to_decimal(precision as usize, Rounding::Nearest)
                ));
                if let Some(d) = diff {
                    summary.push(format!("|cf - target| = {d}"));
                }
            }
            Err(OracleError::NonRealTarget) => {
                summary.push("target is non-real; no comparison".into());
            }
            Err(e) => return Err(e.to_string()),
        },
        None => {}
    }
    for line in summary {
        println!("{line}");
    }
    Ok(if divergence_seen {
        EXIT_DIVERGENCE
    } else {
        EXIT_OK
    })
}

/// Accepts greek or latin parameter names.
fn normalize_param_key(key: &str) -> &'static str {
    match key.trim() {
        "α" | "alpha" => "α",
        "β" | "beta" => "β",
        "γ" | "gamma" => "γ",
        "δ" | "delta" => "δ",
        "ε" | "eps" | "epsilon" => "ε",
        "θ" | "theta" => "θ",
        "λ" | "lambda" => "λ",
        "a" => "a",
        "b" => "b",
        "c" => "c",
        "m" => "m",
        "n" => "n",
        _ => "",
    }
}

fn parse_params(text: &str) -> Result<Vec<(&'static str, BigRational)>, String> {
    text.split(',')
        .map(|pair| {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| format!("parameter `{pair}` is not key=value"))?;
            let key = normalize_param_key(k);
            if key.is_empty() {
                return Err(format!("unknown parameter name `{k}`"));
            }
            let value = parse_ratio(v).map_err(|e| e.to_string())?;
            Ok((key, value))
        })
        .collect()
}

fn build_family(id: FamilyId, params: &[(&'static str, BigRational)]) -> Result<FamilySpec, String> {
    let get = |key: &str| -> Result<BigRational, String> {
        params
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| v.clone())
            .ok_or_else(|| format!("family {id} needs parameter {key}"))
    };
    let spec = match id {
        FamilyId::I => families::family_i(get("α")?, get("β")?, get("γ")?),
        FamilyId::ISimple => families::family_i_simple(get("β")?, get("ε")?),
        FamilyId::II => families::family_ii(get("α")?, get("β")?),
        FamilyId::IIMn => families::family_ii_mn(get("m")?, get("n")?),
        FamilyId::III | FamilyId::IIILog => {
            if let (Ok(m), Ok(n)) = (get("m"), get("n")) {
                families::family_iii_mn(m, n)
            } else {
                families::family_iii(get("α")?, get("β")?)
            }
        }
        FamilyId::IV => families::family_iv(get("α")?),
        FamilyId::V => families::family_v(
            get("a")?,
            get("b")?,
            get("c")?,
            get("θ")?,
            get("λ")?,
            get("α")?,
        ),
        FamilyId::VI => families::family_vi(
            get("a")?,
            get("b")?,
            get("θ")?,
            get("λ")?,
            get("α")?,
        ),
        FamilyId::VII => families::family_vii(get("α")?, get("λ")?, get("δ")?),
    };
    spec.map_err(|e| e.to_string())
}

fn cmd_verify(
    selector: &str,
    params: Option<&str>,
    depth: Option<u64>,
    tol: Option<&str>,
    precision: Option<u32>,
    report_path: Option<&std::path::Path>,
) -> Result<i32, String> {
    let over = Overrides {
        depth,
        tol: tol
            .map(|t| parse_decimal(t).map_err(|e| e.to_string()))
            .transpose()?,
        precision,
    };

    let outcomes: Vec<Outcome> = if let Some(param_text) = params {
        let id = FamilyId::parse(selector)
            .ok_or_else(|| format!("--params needs a family selector, got `{selector}`"))?;
        let spec = build_family(id, &parse_params(param_text)?)?;
        vec![verifyrun::verify_spec(&spec, &over)]
    } else if selector == "all" {
        catalog()
            .iter()
            .map(|e| verifyrun::verify_entry(e, &over))
            .collect()
    } else if let Some(id) = FamilyId::parse(selector) {
        let entries: Vec<_> = catalog()
            .iter()
            .filter(|e| e.family.family == id)
            .collect();
        if entries.is_empty() {
            return Err(format!("no catalog entries for family {id}"));
        }
        entries
            .iter()
            .map(|e| verifyrun::verify_entry(e, &over))
            .collect()
    } else if let Some(entry) = catalog_entry(selector) {
        vec![verifyrun::verify_entry(entry, &over)]
    } else {
        return Err(format!(
            "unknown selector `{selector}` (catalog name, family id, or `all`)"
        ));
    };

    for o in &outcomes {
        verifyrun::print_outcome(o);
    }
    let passed = outcomes.iter().filter(|o| o.status == Status::Pass).count();
    let failed = outcomes.iter().filter(|o| o.status == Status::Fail).count();
    let skipped = outcomes.iter().filter(|o| o.status == Status::Skip).count();
    println!(
        "{} checked: {passed} passed, {failed} failed, {skipped} skipped",
        outcomes.len()
    );

    if let Some(path) = report_path {
        let json = serde_json::to_string_pretty(&outcomes).unwrap();
        std::fs::write(path, json).map_err(|e| format!("cannot write report: {e}"))?;
    }

    if failed > 0 {
        Ok(EXIT_VERIFY_FAIL)
    } else if !outcomes.is_empty() && outcomes.iter().all(|o| o.divergent_kind) {
        // a purely divergent selection reports through the divergence code
        Ok(EXIT_DIVERGENCE)
    } else {
        Ok(EXIT_OK)
    }
}

fn print_elements(label: &str, cf: &GeneralizedCf, depth: u64) {
    use cfrac::rational::display_ratio;
    println!("{label}: {}", cf.render(depth.min(6)));
    println!("  b0 = {}", display_ratio(cf.b0()));
    for k in 1..=depth {
        match cf.element(k) {
            None => {
                println!("  (ends at level {})", k - 1);
                break;
            }
            Some(e) => println!(
                "  k={k}: a = {}, b = {}",
                display_ratio(&e.a),
                display_ratio(&e.b)
            ),
        }
    }
}

fn cmd_transform(
    name: Option<&str>,
    scheme: Option<&std::path::Path>,
    ops: &[String],
    depth: u64,
) -> Result<i32, String> {
    let (input, _, _) = resolve_cf(name, scheme)?;
    let steps: Vec<TransformStep> = ops
        .iter()
        .map(|s| directives::parse_directive(s))
        .collect::<Result<_, _>>()?;

    // apply step by step, tracking the value relation
    let mut cur = input.clone();
    let mut mobius = Mobius::identity();
    let mut shift = 0i64;
    for step in &steps {
        match step {
            TransformStep::AdjoinHead { b0, a1 } => {
                cur = transforms::adjoin_head(&cur, b0.clone(), a1.clone())
                    .map_err(|e| e.to_string())?;
                mobius = mobius.then(&Mobius::adjoin(b0, a1));
                shift += 1;
            }
            TransformStep::DropHead => {
                let (b0, a1, tail) = transforms::drop_head(&cur).map_err(|e| e.to_string())?;
                mobius = mobius.then(&Mobius::drop(&b0, &a1));
                cur = tail;
                shift -= 1;
            }
            TransformStep::Scale(spec) => {
                cur = transforms::equivalence_scale(
                    &cur,
                    spec.to_scales().map_err(|e| e.to_string())?,
                );
            }
            TransformStep::AlternateSigns => {
                cur = transforms::alternate_signs(&cur);
            }
            TransformStep::ClearDenominators => {
                cur = transforms::clear_denominators(&cur, depth.max(8));
            }
        }
    }

    print_elements("input", &input, depth);
    print_elements("output", &cur, depth);

    // value check: fold both at matching truncations and compare through
    // the tracked Moebius relation
    let depth_in = depth.max(4);
    let depth_out = (depth_in as i64 + shift).max(0) as u64;
    let check = match (
        bottom_up_truncation(&input, depth_in),
        bottom_up_truncation(&cur, depth_out),
    ) {
        (Some(vin), Some(vout)) => match mobius.apply(&vin) {
            Some(expect) if expect == vout => {
                format!("value invariance at depth {depth_in}: exact ({})", mobius.describe())
            }
            Some(_) => {
                println!("value invariance: MISMATCH");
                return Ok(EXIT_VERIFY_FAIL);
            }
            None => "value relation undefined at this truncation".to_string(),
        },
        _ => "value check skipped (undefined truncation)".to_string(),
    };
    println!("{check}");
    Ok(EXIT_OK)
}
