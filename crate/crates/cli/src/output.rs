//! Table/CSV/JSON rendering of convergent runs.

use cfrac::oracle::highprec::{HighPrecision, Rounding};
use cfrac::rational::BigRational;
use cfrac::Convergent;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub level: u64,
    pub p: String,
    pub q: String,
    pub value: String,
    pub abs_diff: String,
}

/// Clears a convergent to a coprime integer pair with a nonnegative
/// second component.
pub fn cleared_pair(p: &BigRational, q: &BigRational) -> (BigInt, BigInt) {
    let l = p.denom().lcm(q.denom());
    let mut pi = p.numer() * (&l / p.denom());
    let mut qi = q.numer() * (&l / q.denom());
    let g = pi.abs().gcd(&qi.abs());
    if g > BigInt::from(1) {
        pi /= &g;
        qi /= &g;
    }
    if qi.is_negative() || (qi.is_zero() && pi.is_negative()) {
        pi = -pi;
        qi = -qi;
    }
    (pi, qi)
}

pub struct RecordOptions {
    pub precision: u32,
    pub euler_style: bool,
    /// Table output uses the comma decimal mark under euler style;
    /// machine formats keep the dot.
    pub comma_mark: bool,
}

pub fn build_records(convs: &[Convergent], opts: &RecordOptions) -> Vec<OutputRecord> {
    let scale = opts.precision + 10;
    let mut prev_value: Option<BigRational> = None;
    convs
        .iter()
        .map(|c| {
            let (p, q) = cleared_pair(&c.p, &c.q);
            let (value, abs_diff) = match c.value() {
                None => ("undef".to_string(), String::new()),
                Some(v) => {
                    let hp = HighPrecision::from_rational(v, scale);
                    let rendered = if opts.euler_style {
                        let s = hp.to_fixed_places(4, Rounding::Truncate);
                        if opts.comma_mark {
                            s.replace('.', ",")
                        } else {
                            s
                        }
                    } else {
                        hp.to_decimal(opts.precision as usize, Rounding::Nearest)
                    };
                    let diff = match &prev_value {
                        None => String::new(),
                        Some(pv) => {
                            let d = HighPrecision::from_rational(&(v - pv).abs(), scale);
                            d.to_scientific(4)
                        }
                    };
                    prev_value = Some(v.clone());
                    (rendered, diff)
                }
            };
            OutputRecord {
                level: c.level,
                p: p.to_string(),
                q: q.to_string(),
                value,
                abs_diff,
            }
        })
        .collect()
}

pub fn print_records(records: &[OutputRecord], format: Format) {
    match format {
        Format::Csv => {
            println!("level,p,q,value,abs_diff");
            for r in records {
                println!("{},{},{},{},{}", r.level, r.p, r.q, r.value, r.abs_diff);
            }
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(records).unwrap());
        }
        Format::Table => {
            let headers = ["level", "p", "q", "value", "abs_diff"];
            let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
            let rows: Vec<[String; 5]> = records
                .iter()
                .map(|r| {
                    [
                        r.level.to_string(),
                        r.p.clone(),
                        r.q.clone(),
                        r.value.clone(),
                        r.abs_diff.clone(),
                    ]
                })
                .collect();
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row.iter()) {
                    *w = (*w).max(cell.len());
                }
            }
            let line = |cells: [&str; 5]| {
                let mut out = String::new();
                for (i, (cell, w)) in cells.iter().zip(widths.iter()).enumerate() {
                    if i > 0 {
                        out.push_str("  ");
                    }
                    out.push_str(&format!("{cell:>w$}", w = w));
                }
                out
            };
            println!("{}", line(headers.map(|h| h)));
            for row in &rows {
                println!(
                    "{}",
                    line([&row[0], &row[1], &row[2], &row[3], &row[4]])
                );
            }
        }
    }
}
