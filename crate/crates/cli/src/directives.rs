//! Transform directives: `scale:k->EXPR`, `adjoin:B0,A1`, `drop`,
//! `altsign`, `cleardenom`.
//!
//! `EXPR` is a constant rational (`1/2`) or a ratio of affine forms in
//! `k` with integer coefficients (`1/(k+1)`, `(2k+1)/(3k)`, `2*k`).

use cfrac::families::{ScaleSpec, TransformStep};
use cfrac::rational::{int, parse_ratio, BigRational};
use num_traits::Zero;

pub fn parse_directive(s: &str) -> Result<TransformStep, String> {
    let s = s.trim();
    if s == "drop" {
        return Ok(TransformStep::DropHead);
    }
    if s == "altsign" {
        return Ok(TransformStep::AlternateSigns);
    }
    if s == "cleardenom" {
        return Ok(TransformStep::ClearDenominators);
    }
    if let Some(rest) = s.strip_prefix("adjoin:") {
        let (b0, a1) = rest
            .split_once(',')
            .ok_or_else(|| format!("adjoin needs `b0,a1`: `{s}`"))?;
        let b0 = parse_ratio(b0).map_err(|e| e.to_string())?;
        let a1 = parse_ratio(a1).map_err(|e| e.to_string())?;
        if a1.is_zero() {
            return Err("adjoined partial numerator must be nonzero".to_string());
        }
        return Ok(TransformStep::AdjoinHead { b0, a1 });
    }
    if let Some(rest) = s.strip_prefix("scale:") {
        let expr = rest
            .strip_prefix("k->")
            .ok_or_else(|| format!("scale needs `k->expr`: `{s}`"))?;
        return Ok(TransformStep::Scale(parse_scale_expr(expr)?));
    }
    Err(format!(
        "unknown directive `{s}` (expected scale:k->expr, adjoin:b0,a1, drop, altsign, cleardenom)"
    ))
}

pub fn parse_scale_expr(expr: &str) -> Result<ScaleSpec, String> {
    let expr = expr.trim();
    // a plain rational is a constant scale
    if let Ok(c) = parse_ratio(expr) {
        if c.is_zero() {
            return Err("scale factor must be nonzero".to_string());
        }
        return Ok(ScaleSpec::constant(c));
    }
    // otherwise: affine / affine, split at the top-level slash
    let bytes = expr.as_bytes();
    let mut depth = 0i32;
    let mut split = None;
    for (i, b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'/' if depth == 0 => {
                split = Some(i);
                break;
            }
            _ => {}
        }
    }
    let (num, den) = match split {
        Some(i) => (&expr[..i], &expr[i + 1..]),
        None => (expr, "1"),
    };
    Ok(ScaleSpec {
        num: parse_affine(num)?,
        den: parse_affine(den)?,
    })
}

/// Parses `p + q*k` forms: `3`, `k`, `2k`, `2*k`, `k+1`, `3-2k`.
fn parse_affine(s: &str) -> Result<(BigRational, BigRational), String> {
    let mut s = s.trim();
    while s.starts_with('(') && s.ends_with(')') && balanced_inside(s) {
        s = s[1..s.len() - 1].trim();
    }
    if s.is_empty() {
        return Err("empty affine expression".to_string());
    }
    let mut p = int(0);
    let mut q = int(0);
    // split into signed terms
    let mut terms: Vec<(i64, String)> = Vec::new();
    let mut sign = 1i64;
    let mut cur = String::new();
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '+' | '-' if i > 0 && !cur.is_empty() => {
                terms.push((sign, cur.trim().to_string()));
                sign = if ch == '-' { -1 } else { 1 };
                cur = String::new();
            }
            '-' if cur.is_empty() => sign = -sign,
            '+' if cur.is_empty() => {}
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() {
        terms.push((sign, cur.trim().to_string()));
    }
    for (sign, term) in terms {
        let signr = int(sign);
        if term == "k" {
            q += signr;
        } else if let Some(coeff) = term.strip_suffix("*k").or_else(|| term.strip_suffix('k')) {
            let c: BigRational = coeff
                .trim()
                .parse::<i64>()
                .map(int)
                .map_err(|_| format!("bad coefficient `{coeff}` in `{s}`"))?;
            q += signr * c;
        } else {
            let c: BigRational = term
                .parse::<i64>()
                .map(int)
                .map_err(|_| format!("bad term `{term}` in `{s}`"))?;
            p += signr * c;
        }
    }
    Ok((p, q))
}

fn balanced_inside(s: &str) -> bool {
    let inner = &s[1..s.len() - 1];
    let mut depth = 0i32;
    for b in inner.bytes() {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

/// Moebius map `v -> (a v + b)/(c v + d)` tracking how adjoin/drop steps
/// move the fraction's value; scaling steps leave it untouched.
#[derive(Debug, Clone)]
pub struct Mobius {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl Mobius {
    pub fn identity() -> Self {
        Self {
            a: int(1),
            b: int(0),
            c: int(0),
            d: int(1),
        }
    }

    /// Applies `m` after `self`.
    pub fn then(&self, m: &Mobius) -> Self {
        Self {
            a: &m.a * &self.a + &m.b * &self.c,
            b: &m.a * &self.b + &m.b * &self.d,
            c: &m.c * &self.a + &m.d * &self.c,
            d: &m.c * &self.b + &m.d * &self.d,
        }
    }

    pub fn adjoin(b0: &BigRational, a1: &BigRational) -> Self {
        // v -> b0 + a1/v
        Self {
            a: b0.clone(),
            b: a1.clone(),
            c: int(1),
            d: int(0),
        }
    }

    pub fn drop(b0: &BigRational, a1: &BigRational) -> Self {
        // inverse of adjoin: v -> a1/(v - b0)
        Self {
            a: int(0),
            b: a1.clone(),
            c: int(1),
            d: -b0.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d && !self.a.is_zero()
    }

    pub fn apply(&self, v: &BigRational) -> Option<BigRational> {
        let den = &self.c * v + &self.d;
        if den.is_zero() {
            return None;
        }
        Some((&self.a * v + &self.b) / den)
    }

    pub fn describe(&self) -> String {
        if self.is_identity() {
            "v' = v".to_string()
        } else {
            use cfrac::rational::display_ratio as dr;
            format!(
                "v' = ({}*v + {})/({}*v + {})",
                dr(&self.a),
                dr(&self.b),
                dr(&self.c),
                dr(&self.d)
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cfrac::rational::rat;

    #[test]
    fn parses_directives() {
        assert_eq!(parse_directive("drop").unwrap(), TransformStep::DropHead);
        assert_eq!(
            parse_directive("altsign").unwrap(),
            TransformStep::AlternateSigns
        );
        assert_eq!(
            parse_directive("cleardenom").unwrap(),
            TransformStep::ClearDenominators
        );
        assert_eq!(
            parse_directive("adjoin:1/2,-3").unwrap(),
            TransformStep::AdjoinHead {
                b0: rat(1, 2),
                a1: int(-3)
            }
        );
        assert!(parse_directive("adjoin:1,0").is_err());
        assert!(parse_directive("bogus").is_err());
    }

    #[test]
    fn parses_scale_expressions() {
        let spec = parse_scale_expr("1/(k+1)").unwrap();
        assert_eq!(spec.num, (int(1), int(0)));
        assert_eq!(spec.den, (int(1), int(1)));

        let spec = parse_scale_expr("1/2").unwrap();
        assert_eq!(spec.num, (rat(1, 2), int(0)));

        let spec = parse_scale_expr("(2k+1)/(3-k)").unwrap();
        assert_eq!(spec.num, (int(1), int(2)));
        assert_eq!(spec.den, (int(3), int(-1)));

        let spec = parse_scale_expr("2*k").unwrap();
        assert_eq!(spec.num, (int(0), int(2)));
        assert_eq!(spec.den, (int(1), int(0)));

        let spec = parse_scale_expr("-k").unwrap();
        assert_eq!(spec.num, (int(0), int(-1)));

        assert!(parse_scale_expr("0").is_err());
        assert!(parse_scale_expr("q+1").is_err());
    }

    #[test]
    fn mobius_composition() {
        let m = Mobius::identity()
            .then(&Mobius::adjoin(&int(2), &int(1)))
            .then(&Mobius::drop(&int(2), &int(1)));
        assert!(m.is_identity());
        let v = rat(7, 3);
        assert_eq!(m.apply(&v).unwrap(), v);
    }
}
