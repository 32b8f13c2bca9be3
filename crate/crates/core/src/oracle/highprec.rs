//! Fixed-point arbitrary-precision decimal arithmetic.
//!
//! [`HighPrecision`] stores `mantissa * 10^-scale` with a `BigInt`
//! mantissa. All operations round to nearest (ties away from zero) at the
//! value's scale, so every quantity carries an absolute error of at most
//! half an ulp per operation. The elementary functions are computed by
//! argument reduction plus truncated series:
//!
//! * `exp`: halve the argument `k` times until `|r| <= 1/16`, sum the
//!   Taylor series, square `k` times.
//! * `ln`: normalize to `[1, 10)` by decimal shift, take square roots
//!   until the argument is within `1/32` of 1, then the `atanh` series
//!   `ln y = 2(z + z^3/3 + ...)` with `z = (y-1)/(y+1)`.
//! * `atan`: halve via `x <- x / (1 + sqrt(1 + x^2))` until `|x| <= 1/32`,
//!   then the alternating odd series.
//! * `pi`: Machin's formula `16 atan(1/5) - 4 atan(1/239)` summed directly
//!   from exact rational terms, independent of any continued fraction.
//!
//! Callers pick the scale; a scale of `precision + 10` guard digits is
//! enough for targets, while the quadrature module uses larger scales to
//! keep endpoint-singular integrands representable.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighPrecision {
    mantissa: BigInt,
    scale: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HighPrecError {
    #[error("square root of a negative value")]
    NegativeSqrt,
    #[error("logarithm of a non-positive value")]
    NonPositiveLog,
    #[error("division by zero")]
    DivisionByZero,
    #[error("power of a non-positive base with non-integer exponent")]
    NonPositivePower,
}

/// Rounding used when rendering decimal strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Nearest,
    Truncate,
}

fn ten_pow_cache() -> &'static Mutex<HashMap<u32, BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn ten_pow(scale: u32) -> BigInt {
    let mut cache = ten_pow_cache().lock().unwrap();
    cache
        .entry(scale)
        .or_insert_with(|| BigInt::from(10u32).pow(scale))
        .clone()
}

/// `round(n / d)` for `d > 0`, ties away from zero.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let mag = (n.magnitude() * 2u32 + d.magnitude()) / (d.magnitude() * 2u32);
    let mag = BigInt::from(mag);
    if n.is_negative() {
        -mag
    } else {
        mag
    }
}

impl HighPrecision {
    pub fn zero(scale: u32) -> Self {
        Self {
            mantissa: BigInt::zero(),
            scale,
        }
    }

    pub fn one(scale: u32) -> Self {
        Self {
            mantissa: ten_pow(scale),
            scale,
        }
    }

    pub fn from_int(n: i64, scale: u32) -> Self {
        Self {
            mantissa: BigInt::from(n) * ten_pow(scale),
            scale,
        }
    }

    pub fn from_rational(r: &BigRational, scale: u32) -> Self {
        Self {
            mantissa: round_div(&(r.numer() * ten_pow(scale)), r.denom()),
            scale,
        }
    }

    /// `n / d` rounded to the scale without reducing the fraction first;
    /// `d` may carry either sign but not zero.
    pub fn from_ratio_parts(n: &BigInt, d: &BigInt, scale: u32) -> Self {
        debug_assert!(!d.is_zero());
        let mantissa = if d.is_negative() {
            round_div(&(-n * ten_pow(scale)), &-d.clone())
        } else {
            round_div(&(n * ten_pow(scale)), d)
        };
        Self { mantissa, scale }
    }

    /// Parses a plain decimal literal at the given scale.
    pub fn parse(s: &str, scale: u32) -> Result<Self, crate::rational::ParseRationalError> {
        Ok(Self::from_rational(&crate::rational::parse_decimal(s)?, scale))
    }

    /// The exact rational this fixed-point value denotes.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), ten_pow(self.scale))
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    fn check_scale(&self, other: &Self) {
        debug_assert_eq!(
            self.scale, other.scale,
            "mixed fixed-point scales: {} vs {}",
            self.scale, other.scale
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_scale(other);
        Self {
            mantissa: &self.mantissa + &other.mantissa,
            scale: self.scale,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_scale(other);
        Self {
            mantissa: &self.mantissa - &other.mantissa,
            scale: self.scale,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            mantissa: -&self.mantissa,
            scale: self.scale,
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            mantissa: self.mantissa.abs(),
            scale: self.scale,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_scale(other);
        Self {
            mantissa: round_div(&(&self.mantissa * &other.mantissa), &ten_pow(self.scale)),
            scale: self.scale,
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self, HighPrecError> {
        self.check_scale(other);
        if other.mantissa.is_zero() {
            return Err(HighPrecError::DivisionByZero);
        }
        let scaled = &self.mantissa * ten_pow(self.scale);
        let mag = round_div(&scaled.abs(), &other.mantissa.abs());
        let neg = self.mantissa.is_negative() != other.mantissa.is_negative();
        Ok(Self {
            mantissa: if neg { -mag } else { mag },
            scale: self.scale,
        })
    }

    /// Exact multiplication by a rational, rounded once.
    pub fn mul_rational(&self, r: &BigRational) -> Self {
        Self {
            mantissa: round_div(&(&self.mantissa * r.numer()), r.denom()),
            scale: self.scale,
        }
    }

    pub fn compare(&self, other: &Self) -> Ordering {
        self.check_scale(other);
        self.mantissa.cmp(&other.mantissa)
    }

    pub fn rescale(&self, new_scale: u32) -> Self {
        if new_scale >= self.scale {
            Self {
                mantissa: &self.mantissa * ten_pow(new_scale - self.scale),
                scale: new_scale,
            }
        } else {
            Self {
                mantissa: round_div(&self.mantissa, &ten_pow(self.scale - new_scale)),
                scale: new_scale,
            }
        }
    }

    /// Distance to another value in units of the last place.
    pub fn ulps_from(&self, other: &Self) -> BigInt {
        self.check_scale(other);
        (&self.mantissa - &other.mantissa).abs()
    }

    pub fn sqrt(&self) -> Result<Self, HighPrecError> {
        if self.mantissa.is_negative() {
            return Err(HighPrecError::NegativeSqrt);
        }
        let v = &self.mantissa * ten_pow(self.scale);
        let root = v.sqrt();
        // round to nearest: sqrt() floors
        let up = &root + 1u32;
        let mantissa = if &up * &up - &v <= &v - &root * &root {
            up
        } else {
            root
        };
        Ok(Self {
            mantissa,
            scale: self.scale,
        })
    }

    /// Guard digits carried inside the elementary functions so the
    /// result is accurate to about an ulp at the caller's scale.
    const FN_GUARD: u32 = 8;

    pub fn exp(&self) -> Self {
        let scale = self.scale;
        self.rescale(scale + Self::FN_GUARD)
            .exp_raw()
            .rescale(scale)
    }

    fn exp_raw(&self) -> Self {
        let scale = self.scale;
        if self.mantissa.is_zero() {
            return Self::one(scale);
        }
        // halve until |r| <= 1/16
        let mut k = 0u32;
        let sixteen_m = self.mantissa.abs() * 16u32;
        let mut bound = ten_pow(scale);
        while sixteen_m > bound {
            bound <<= 1;
            k += 1;
        }
        let r = Self {
            mantissa: round_div(&self.mantissa, &(BigInt::one() << k)),
            scale,
        };
        // Taylor sum of e^r
        let ten_s = ten_pow(scale);
        let mut term = ten_s.clone(); // 1.0
        let mut sum = term.clone();
        let mut i = BigInt::one();
        while !term.is_zero() {
            term = round_div(&(&term * &r.mantissa), &(&ten_s * &i));
            sum += &term;
            i += 1;
        }
        let mut result = Self {
            mantissa: sum,
            scale,
        };
        for _ in 0..k {
            result = result.mul(&result);
        }
        result
    }

    pub fn ln(&self) -> Result<Self, HighPrecError> {
        let scale = self.scale;
        Ok(self
            .rescale(scale + Self::FN_GUARD)
            .ln_raw()?
            .rescale(scale))
    }

    fn ln_raw(&self) -> Result<Self, HighPrecError> {
        if !self.mantissa.is_positive() {
            return Err(HighPrecError::NonPositiveLog);
        }
        let scale = self.scale;
        // decimal normalization: self = y * 10^t with y in [1, 10)
        let digits = self.mantissa.to_string().len() as i64;
        let t = digits - 1 - scale as i64;
        let y = if t >= 0 {
            Self {
                mantissa: round_div(&self.mantissa, &ten_pow(t as u32)),
                scale,
            }
        } else {
            Self {
                mantissa: &self.mantissa * ten_pow((-t) as u32),
                scale,
            }
        };
        let ln_y = ln_core(&y)?;
        if t == 0 {
            return Ok(ln_y);
        }
        let ln10 = ln_ten(scale);
        let shift = Self {
            mantissa: ln10.mantissa * BigInt::from(t),
            scale,
        };
        Ok(ln_y.add(&shift))
    }

    pub fn atan(&self) -> Self {
        let scale = self.scale;
        self.rescale(scale + Self::FN_GUARD)
            .atan_raw()
            .rescale(scale)
    }

    fn atan_raw(&self) -> Self {
        let scale = self.scale;
        if self.mantissa.is_zero() {
            return Self::zero(scale);
        }
        let one = Self::one(scale);
        let x_abs = self.abs();
        let result_abs = if x_abs.compare(&one) == Ordering::Greater {
            // atan(x) = pi/2 - atan(1/x) for x > 0
            let half_pi = Self {
                mantissa: round_div(&pi(scale).mantissa, &BigInt::from(2)),
                scale,
            };
            half_pi.sub(&atan_reduced(&one.div(&x_abs).expect("nonzero")))
        } else {
            atan_reduced(&x_abs)
        };
        if self.is_negative() {
            result_abs.neg()
        } else {
            result_abs
        }
    }

    /// `self^r` for rational `r`. Non-integer exponents require a positive
    /// base; integer exponents allow any nonzero base.
    pub fn pow_rational(&self, r: &BigRational) -> Result<Self, HighPrecError> {
        let scale = self.scale;
        if r.is_zero() {
            return Ok(Self::one(scale));
        }
        if r.is_integer() {
            if let Some(e) = r.to_integer().to_i64() {
                if e.unsigned_abs() <= 256 {
                    if self.is_zero() {
                        return if e > 0 {
                            Ok(Self::zero(scale))
                        } else {
                            Err(HighPrecError::DivisionByZero)
                        };
                    }
                    let mut acc = Self::one(scale);
                    for _ in 0..e.unsigned_abs() {
                        acc = acc.mul(self);
                    }
                    return if e < 0 {
                        Self::one(scale).div(&acc)
                    } else {
                        Ok(acc)
                    };
                }
            }
        }
        if !self.is_positive() {
            return Err(HighPrecError::NonPositivePower);
        }
        if *r == BigRational::new(BigInt::one(), BigInt::from(2)) {
            return self.sqrt();
        }
        Ok(self.ln()?.mul_rational(r).exp())
    }

    /// Plain decimal rendering with `sig` significant digits.
    pub fn to_decimal(&self, sig: usize, mode: Rounding) -> String {
        if self.mantissa.is_zero() {
            return "0".to_string();
        }
        let neg = self.mantissa.is_negative();
        let digits = self.mantissa.abs().to_string();
        let sig = sig.max(1);
        let (kept, bump) = if digits.len() <= sig {
            (digits.clone(), false)
        } else {
            let head = &digits[..sig];
            let next = digits.as_bytes()[sig] - b'0';
            (head.to_string(), mode == Rounding::Nearest && next >= 5)
        };
        let dropped = digits.len() - kept.len();
        let mut kept_num: BigInt = kept.parse().unwrap();
        if bump {
            kept_num += 1u32;
        }
        // value = kept_num * 10^(dropped - scale)
        let exp10 = dropped as i64 - self.scale as i64;
        let mut s = kept_num.to_string();
        // re-rendering may have gained a digit on rounding (999 -> 1000)
        if exp10 >= 0 {
            s.push_str(&"0".repeat(exp10 as usize));
        } else {
            let frac_len = (-exp10) as usize;
            if s.len() <= frac_len {
                let mut out = String::from("0.");
                out.push_str(&"0".repeat(frac_len - s.len()));
                out.push_str(&s);
                s = trim_fraction(out);
            } else {
                let point = s.len() - frac_len;
                let mut out = String::with_capacity(s.len() + 1);
                out.push_str(&s[..point]);
                out.push('.');
                out.push_str(&s[point..]);
                s = trim_fraction(out);
            }
        }
        if neg {
            format!("-{s}")
        } else {
            s
        }
    }

    /// Scientific rendering `d.dd...e[+-]xx` with `sig` significant digits.
    pub fn to_scientific(&self, sig: usize) -> String {
        if self.mantissa.is_zero() {
            return "0".to_string();
        }
        let neg = self.mantissa.is_negative();
        let digits = self.mantissa.abs().to_string();
        let exp10 = digits.len() as i64 - 1 - self.scale as i64;
        let sig = sig.max(1).min(digits.len());
        // round the kept digits
        let mut kept: num_bigint::BigInt = digits[..sig].parse().unwrap();
        if digits.len() > sig && digits.as_bytes()[sig] - b'0' >= 5 {
            kept += 1u32;
        }
        let mut kept_str = kept.to_string();
        let mut exp10 = exp10;
        if kept_str.len() > sig {
            // rounding carried (999 -> 1000)
            kept_str.truncate(sig);
            exp10 += 1;
        }
        let body = if kept_str.len() == 1 {
            kept_str
        } else {
            format!("{}.{}", &kept_str[..1], &kept_str[1..])
        };
        let sign = if neg { "-" } else { "" };
        format!("{sign}{body}e{exp10}")
    }

    /// Decimal rendering with a fixed number of places after the point.
    pub fn to_fixed_places(&self, places: usize, mode: Rounding) -> String {
        let neg = self.mantissa.is_negative();
        let scaled = if self.scale as usize >= places {
            let d = ten_pow(self.scale - places as u32);
            match mode {
                Rounding::Nearest => round_div(&self.mantissa, &d),
                Rounding::Truncate => &self.mantissa / &d,
            }
        } else {
            &self.mantissa * ten_pow(places as u32 - self.scale)
        };
        let digits = scaled.abs().to_string();
        let (int_part, frac_part) = if digits.len() <= places {
            ("0".to_string(), format!("{:0>width$}", digits, width = places))
        } else {
            let point = digits.len() - places;
            (digits[..point].to_string(), digits[point..].to_string())
        };
        let body = if places == 0 {
            int_part
        } else {
            format!("{int_part}.{frac_part}")
        };
        if neg && !scaled.is_zero() {
            format!("-{body}")
        } else {
            body
        }
    }
}

fn trim_fraction(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

/// `atan` for `0 <= x <= 1` by repeated half-angle reduction.
fn atan_reduced(x: &HighPrecision) -> HighPrecision {
    let scale = x.scale;
    let one = HighPrecision::one(scale);
    let threshold = ten_pow(scale) / 32u32;
    let mut x = x.clone();
    let mut doublings = 0u32;
    while x.mantissa.abs() > threshold {
        // x <- x / (1 + sqrt(1 + x^2))
        let denom = one.add(&one.add(&x.mul(&x)).sqrt().expect("1 + x^2 >= 0"));
        x = x.div(&denom).expect("denominator >= 2");
        doublings += 1;
    }
    // alternating odd series
    let ten_s = ten_pow(scale);
    let x2 = x.mul(&x);
    let mut term = x.mantissa.clone();
    let mut sum = term.clone();
    let mut odd = BigInt::from(3);
    while !term.is_zero() {
        term = -round_div(&(&term * &x2.mantissa), &ten_s);
        sum += round_div(&term, &odd);
        odd += 2;
    }
    HighPrecision {
        mantissa: sum << doublings,
        scale,
    }
}

/// `ln` on `[1, 10)` via square-root reduction and the `atanh` series.
fn ln_core(y: &HighPrecision) -> Result<HighPrecision, HighPrecError> {
    let scale = y.scale;
    let one = HighPrecision::one(scale);
    let threshold = ten_pow(scale) / 32u32;
    let mut y = y.clone();
    let mut halvings = 0u32;
    while (&y.mantissa - &one.mantissa).abs() > threshold {
        y = y.sqrt()?;
        halvings += 1;
    }
    let z = y.sub(&one).div(&y.add(&one))?;
    let ten_s = ten_pow(scale);
    let z2 = z.mul(&z);
    let mut term = z.mantissa.clone();
    let mut sum = term.clone();
    let mut odd = BigInt::from(3);
    while !term.is_zero() {
        term = round_div(&(&term * &z2.mantissa), &ten_s);
        sum += round_div(&term, &odd);
        odd += 2;
    }
    Ok(HighPrecision {
        mantissa: (sum << 1) << halvings,
        scale,
    })
}

fn const_cache() -> &'static Mutex<HashMap<(u8, u32), BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<(u8, u32), BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `atan(1/n)` summed from exact rational terms.
fn atan_inverse(n: u32, scale: u32) -> BigInt {
    let ten_s = ten_pow(scale);
    let n = BigInt::from(n);
    let n2 = &n * &n;
    let mut power = n.clone(); // n^(2i+1)
    let mut odd = BigInt::one();
    let mut sum = BigInt::zero();
    let mut sign = true;
    loop {
        let term = round_div(&ten_s, &(&power * &odd));
        if term.is_zero() {
            break;
        }
        if sign {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &n2;
        odd += 2;
        sign = !sign;
    }
    sum
}

/// High-precision pi from Machin's arctangent formula; deliberately
/// independent of every continued fraction in this crate.
pub fn pi(scale: u32) -> HighPrecision {
    let mut cache = const_cache().lock().unwrap();
    let mantissa = cache
        .entry((0, scale))
        .or_insert_with(|| {
            let work = scale + 10;
            let v = atan_inverse(5, work) * 16u32 - atan_inverse(239, work) * 4u32;
            round_div(&v, &ten_pow(10))
        })
        .clone();
    HighPrecision { mantissa, scale }
}

/// Natural logarithm of 10 (cached per scale).
pub fn ln_ten(scale: u32) -> HighPrecision {
    let mut cache = const_cache().lock().unwrap();
    let mantissa = cache
        .entry((1, scale))
        .or_insert_with(|| {
            let work = scale + 10;
            let ten = HighPrecision::from_int(10, work);
            let root = ten.sqrt().expect("10 > 0");
            let ln_root = ln_core(&root).expect("sqrt(10) > 1");
            round_div(&(ln_root.mantissa << 1), &ten_pow(10))
        })
        .clone();
    HighPrecision { mantissa, scale }
}

/// Euler's number at the given scale.
pub fn e(scale: u32) -> HighPrecision {
    let mut cache = const_cache().lock().unwrap();
    let mantissa = cache
        .entry((2, scale))
        .or_insert_with(|| {
            let v = HighPrecision::one(scale + 10).exp();
            round_div(&v.mantissa, &ten_pow(10))
        })
        .clone();
    HighPrecision { mantissa, scale }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    const SCALE: u32 = 60;

    // 65-digit references computed independently (mpmath).
    const PI_REF: &str = "3.1415926535897932384626433832795028841971693993751058209749445923";
    const E_REF: &str = "2.7182818284590452353602874713526624977572470936999595749669676277";
    const LN2_REF: &str =
        "0.69314718055994530941723212145817656807550013436025525412068000949";
    const LN3_REF: &str = "1.0986122886681096913952452369225257046474905578227494517346943336";
    const LN10_REF: &str = "2.3025850929940456840179914546843642076011014886287729760333279010";
    const SQRT2_REF: &str =
        "1.4142135623730950488016887242096980785696718753769480731766797380";
    const SQRT5_REF: &str =
        "2.2360679774997896964091736687312762354406183596115257242708972454";
    const ATAN_INV_SQRT3_REF: &str =
        "0.52359877559829887307710723054658381403286156656251763682915743205";

    fn close_ulps(a: &HighPrecision, reference: &str, ulps: u64) {
        let r = HighPrecision::parse(reference, a.scale()).unwrap();
        let d = a.ulps_from(&r);
        assert!(
            d <= BigInt::from(ulps),
            "off by {d} ulps from {reference}"
        );
    }

    #[test]
    fn basic_arithmetic_round_trips() {
        let a = HighPrecision::from_rational(&rat(22, 7), SCALE);
        let b = HighPrecision::from_rational(&rat(-3, 11), SCALE);
        let sum = a.add(&b);
        let back = sum.to_rational();
        let exact = rat(22, 7) + rat(-3, 11);
        let err = (back - exact).abs();
        assert!(err < rat(1, 10).pow(SCALE as i32 - 1));
        assert_eq!(
            HighPrecision::from_int(7, SCALE)
                .mul(&HighPrecision::from_int(6, SCALE))
                .to_rational(),
            int(42)
        );
    }

    #[test]
    fn sqrt_matches_reference() {
        close_ulps(
            &HighPrecision::from_int(2, SCALE).sqrt().unwrap(),
            SQRT2_REF,
            2,
        );
        close_ulps(
            &HighPrecision::from_int(5, SCALE).sqrt().unwrap(),
            SQRT5_REF,
            2,
        );
        assert!(HighPrecision::from_int(-1, SCALE).sqrt().is_err());
    }

    #[test]
    fn exp_and_e() {
        close_ulps(&HighPrecision::one(SCALE).exp(), E_REF, 8);
        close_ulps(&e(SCALE), E_REF, 8);
        // exp(ln 2) == 2
        let two = HighPrecision::from_int(2, SCALE);
        let round_trip = two.ln().unwrap().exp();
        assert!(round_trip.ulps_from(&two) <= BigInt::from(16u32));
        // large negative argument underflows cleanly to zero
        assert!(HighPrecision::from_int(-400, 50).exp().is_zero());
    }

    #[test]
    fn ln_matches_references() {
        close_ulps(&HighPrecision::from_int(2, SCALE).ln().unwrap(), LN2_REF, 8);
        close_ulps(&HighPrecision::from_int(3, SCALE).ln().unwrap(), LN3_REF, 8);
        close_ulps(&ln_ten(SCALE), LN10_REF, 8);
        // tiny argument: ln(10^-40) = -40 ln 10
        let tiny = HighPrecision::from_rational(&rat(1, 10).pow(40), SCALE);
        let expect = ln_ten(SCALE).mul_rational(&int(-40));
        assert!(tiny.ln().unwrap().ulps_from(&expect) <= BigInt::from(64u32));
        assert!(HighPrecision::zero(SCALE).ln().is_err());
    }

    #[test]
    fn atan_and_pi() {
        close_ulps(&pi(SCALE), PI_REF, 4);
        // atan(1) = pi/4
        let one = HighPrecision::one(SCALE);
        let quarter_pi = pi(SCALE).mul_rational(&rat(1, 4));
        assert!(one.atan().ulps_from(&quarter_pi) <= BigInt::from(16u32));
        // atan(1/sqrt(3)) = pi/6
        let arg = HighPrecision::one(SCALE)
            .div(&HighPrecision::from_int(3, SCALE).sqrt().unwrap())
            .unwrap();
        close_ulps(&arg.atan(), ATAN_INV_SQRT3_REF, 16);
        // odd function, and the >1 branch: atan(x) + atan(1/x) = pi/2
        let x = HighPrecision::from_rational(&rat(17, 3), SCALE);
        let inv = HighPrecision::one(SCALE).div(&x).unwrap();
        let half_pi = pi(SCALE).mul_rational(&rat(1, 2));
        assert!(
            x.atan().add(&inv.atan()).ulps_from(&half_pi) <= BigInt::from(32u32)
        );
        assert_eq!(x.neg().atan(), x.atan().neg());
    }

    #[test]
    fn pow_rational_paths() {
        let x = HighPrecision::from_int(2, SCALE);
        assert_eq!(
            x.pow_rational(&int(10)).unwrap().to_rational(),
            int(1024)
        );
        let inv = x.pow_rational(&int(-2)).unwrap();
        assert_eq!(inv.to_rational(), rat(1, 4));
        // 2^(1/2) = sqrt 2
        close_ulps(&x.pow_rational(&rat(1, 2)).unwrap(), SQRT2_REF, 2);
        // 8^(2/3) = 4
        let eight = HighPrecision::from_int(8, SCALE);
        let four = HighPrecision::from_int(4, SCALE);
        assert!(
            eight
                .pow_rational(&rat(2, 3))
                .unwrap()
                .ulps_from(&four)
                <= BigInt::from(64u32)
        );
        assert!(HighPrecision::from_int(-2, SCALE)
            .pow_rational(&rat(1, 3))
            .is_err());
    }

    #[test]
    fn rendering() {
        let v = HighPrecision::from_rational(&rat(27169, 10000), 20);
        assert_eq!(v.to_fixed_places(4, Rounding::Truncate), "2.7169");
        let e_val = e(40);
        assert_eq!(e_val.to_fixed_places(4, Rounding::Truncate), "2.7182");
        assert_eq!(e_val.to_fixed_places(4, Rounding::Nearest), "2.7183");
        assert_eq!(e_val.to_decimal(6, Rounding::Nearest), "2.71828");
        assert_eq!(
            HighPrecision::from_rational(&rat(-1, 8), 20).to_decimal(3, Rounding::Nearest),
            "-0.125"
        );
        assert_eq!(HighPrecision::zero(10).to_decimal(5, Rounding::Nearest), "0");
        // rounding that carries across the point: 0.9999 -> 1.0 at 3 digits
        let near_one = HighPrecision::from_rational(&rat(9999, 10000), 20);
        assert_eq!(near_one.to_decimal(3, Rounding::Nearest), "1");
        assert_eq!(
            HighPrecision::from_int(12345, 10).to_decimal(3, Rounding::Nearest),
            "12300"
        );
        assert_eq!(
            HighPrecision::from_rational(&rat(-27169, 10000), 20)
                .to_fixed_places(2, Rounding::Truncate),
            "-2.71"
        );
        assert_eq!(
            HighPrecision::from_rational(&rat(1, 2048), 30).to_scientific(3),
            "4.88e-4"
        );
        assert_eq!(
            HighPrecision::from_rational(&rat(-31415, 10), 20).to_scientific(4),
            "-3.142e3"
        );
        assert_eq!(
            HighPrecision::from_rational(&rat(9999, 1000), 20).to_scientific(2),
            "1.0e1"
        );
        assert_eq!(HighPrecision::zero(10).to_scientific(4), "0");
    }

    #[test]
    fn rescale_round_trips() {
        let x = HighPrecision::from_rational(&rat(355, 113), 60);
        let down = x.rescale(30);
        let up = down.rescale(60);
        assert!(x.ulps_from(&up) < ten_pow(31));
        assert_eq!(down.scale(), 30);
    }
}
