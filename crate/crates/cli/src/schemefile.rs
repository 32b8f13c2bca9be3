//! JSON scheme files: affine coefficient templates `p + q*k` for the
//! rows `(f, g, h)` of a three-term recurrence.
//!
//! ```json
//! {
//!   "f": { "p": "0", "q": "1" },
//!   "g": { "p": "1", "q": "1" },
//!   "h": { "p": "2", "q": "1" },
//!   "seed_note": "A = x, B = x^2/2"
//! }
//! ```
//!
//! Rational strings are `"num/den"` or `"int"`.

use cfrac::rational::parse_ratio;
use cfrac::recurrence::{AffineCoeff, RecurrenceScheme};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
pub struct AffineTemplate {
    pub p: String,
    pub q: String,
}

#[derive(Debug, Deserialize)]
pub struct SchemeFile {
    pub f: AffineTemplate,
    pub g: AffineTemplate,
    pub h: AffineTemplate,
    #[serde(default)]
    pub seed_note: Option<String>,
}

fn coeff(t: &AffineTemplate, row: &str) -> Result<AffineCoeff, String> {
    let p = parse_ratio(&t.p).map_err(|e| format!("row {row}, field p: {e}"))?;
    let q = parse_ratio(&t.q).map_err(|e| format!("row {row}, field q: {e}"))?;
    Ok(AffineCoeff::new(p, q))
}

pub fn parse_scheme(text: &str) -> Result<RecurrenceScheme, String> {
    let file: SchemeFile =
        serde_json::from_str(text).map_err(|e| format!("malformed scheme file: {e}"))?;
    Ok(RecurrenceScheme::affine(
        coeff(&file.f, "f")?,
        coeff(&file.g, "g")?,
        coeff(&file.h, "h")?,
        file.seed_note.unwrap_or_else(|| "scheme file".to_string()),
    ))
}
