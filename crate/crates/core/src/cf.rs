//! Generalized continued fractions and their exact evaluation.
//!
//! A [`GeneralizedCf`] is a leading term `b0` plus a pure generator
//! `k -> (a_k, b_k)` of partial numerators and denominators,
//!
//! ```text
//! b0 + a1/(b1 + a2/(b2 + a3/(b3 + ...)))
//! ```
//!
//! Convergents `p_k/q_k` follow the fundamental recurrence
//! `p_k = b_k p_{k-1} + a_k p_{k-2}` (likewise `q`) with
//! `p_{-1} = 1, q_{-1} = 0, p_0 = b0, q_0 = 1`, all in exact rational
//! arithmetic. `q_k = 0` is never an error: the convergent's value is
//! absent at that level and evaluation continues.
//!
//! Internally the evaluator runs an integer recurrence: element
//! denominators are cleared level by level (an equivalence transform that
//! leaves every convergent value unchanged), which keeps deep evaluations
//! free of per-level gcd normalization. The true rational `p_k, q_k` are
//! recovered from the tracked common denominator.

use std::collections::VecDeque;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::oracle::highprec::HighPrecision;
use crate::rational::{display_ratio, BigRational};

/// One level of a generalized continued fraction: partial numerator `a`
/// and partial denominator `b`. `a` is nonzero for every generated level;
/// `b` may be zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfElement {
    pub a: BigRational,
    pub b: BigRational,
}

impl CfElement {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }
}

type ElementFn = Arc<dyn Fn(u64) -> CfElement + Send + Sync>;

/// Leading term plus element generator. Generators must be pure and
/// deterministic, so values are immutable and safe to share across
/// threads.
#[derive(Clone)]
pub struct GeneralizedCf {
    b0: BigRational,
    elements: ElementFn,
    depth: Option<u64>,
}

impl GeneralizedCf {
    /// A fraction from a generator. `depth` of `Some(d)` truncates after
    /// element `d`; `Some(0)` is the bare leading term. A generated
    /// `a_k = 0` also ends the fraction at level `k - 1` (sequential
    /// consumers stop there; [`GeneralizedCf::element`] reports `None`
    /// for that level).
    pub fn new(
        b0: BigRational,
        depth: Option<u64>,
        elements: impl Fn(u64) -> CfElement + Send + Sync + 'static,
    ) -> Self {
        Self {
            b0,
            elements: Arc::new(elements),
            depth,
        }
    }

    /// Finite fraction from an explicit element list.
    pub fn from_elements(b0: BigRational, elems: Vec<CfElement>) -> Self {
        let depth = elems.len() as u64;
        Self::new(b0, Some(depth), move |k| elems[(k - 1) as usize].clone())
    }

    /// The depth-0 fraction consisting of the leading term alone.
    pub fn constant(b0: BigRational) -> Self {
        Self::new(b0, Some(0), |_| unreachable!("depth-0 fraction has no elements"))
    }

    pub fn b0(&self) -> &BigRational {
        &self.b0
    }

    /// Declared finite truncation depth, if any.
    pub fn depth_hint(&self) -> Option<u64> {
        self.depth
    }

    /// Element at level `k >= 1`, `None` past the end of a finite
    /// fraction or where the generator yields a zero partial numerator.
    pub fn element(&self, k: u64) -> Option<CfElement> {
        debug_assert!(k >= 1, "elements are 1-indexed");
        if let Some(d) = self.depth {
            if k > d {
                return None;
            }
        }
        let e = (self.elements)(k);
        if e.a.is_zero() {
            return None;
        }
        Some(e)
    }

    /// Iterates elements from level 1, stopping at the end of a finite
    /// fraction or at a zero partial numerator.
    pub fn iter(&self) -> impl Iterator<Item = CfElement> + '_ {
        (1..).map_while(move |k| self.element(k))
    }

    /// True when leading terms and the first `depth` elements agree
    /// exactly (including where both end).
    pub fn structurally_equal(&self, other: &GeneralizedCf, depth: u64) -> bool {
        if self.b0 != other.b0 {
            return false;
        }
        (1..=depth).all(|k| self.element(k) == other.element(k))
    }

    /// Paper-style rendering of the first `levels` elements, e.g.
    /// `2 + 1/(1 + 1/(2 + ...))`.
    pub fn render(&self, levels: u64) -> String {
        let mut out = display_ratio(&self.b0);
        let mut open = 0usize;
        for k in 1..=levels {
            match self.element(k) {
                None => break,
                Some(e) => {
                    let (sign, a_abs) = if e.a.is_negative() {
                        (" - ", -e.a.clone())
                    } else {
                        (" + ", e.a.clone())
                    };
                    out.push_str(sign);
                    out.push_str(&display_ratio(&a_abs));
                    out.push_str("/(");
                    out.push_str(&display_ratio(&e.b));
                    open += 1;
                }
            }
        }
        if open > 0 && self.element(levels + 1).is_some() {
            out.push_str(" + ...");
        }
        out.push_str(&")".repeat(open));
        out
    }
}

impl fmt::Debug for GeneralizedCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneralizedCf({})", self.render(4))
    }
}

/// Exact convergent `p_k / q_k`. The value is computed on first request
/// and is present exactly when `q_k != 0`.
#[derive(Debug, Clone)]
pub struct Convergent {
    pub level: u64,
    pub p: BigRational,
    pub q: BigRational,
    value: OnceLock<Option<BigRational>>,
}

impl Convergent {
    fn new(level: u64, p: BigRational, q: BigRational) -> Self {
        Self {
            level,
            p,
            q,
            value: OnceLock::new(),
        }
    }

    /// `p/q` exactly, absent when `q = 0`.
    pub fn value(&self) -> Option<&BigRational> {
        self.value
            .get_or_init(|| {
                if self.q.is_zero() {
                    None
                } else {
                    Some(&self.p / &self.q)
                }
            })
            .as_ref()
    }
}

impl PartialEq for Convergent {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level && self.p == other.p && self.q == other.q
    }
}
impl Eq for Convergent {}

/// Why an evaluation stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// Two consecutive differences fell below the tolerance, or a finite
    /// fraction was exhausted (its last convergent is the exact value).
    ToleranceMet,
    MaxDepth,
    DivergenceDetected,
    /// `q = 0` for more than two consecutive levels.
    UndefinedConvergentRun,
}

impl fmt::Display for Termination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Termination::ToleranceMet => "tolerance_met",
            Termination::MaxDepth => "max_depth",
            Termination::DivergenceDetected => "divergence_detected",
            Termination::UndefinedConvergentRun => "undefined_convergent_run",
        };
        f.write_str(s)
    }
}

/// Evaluation knobs beyond tolerance and depth.
#[derive(Debug, Clone)]
pub struct EvalOptions {
    /// Stop once `|x_k - x_{k-1}| < tol` holds for two consecutive
    /// defined levels. A non-positive tolerance disables the check.
    pub tol: BigRational,
    pub max_depth: u64,
    /// Significant digits for the rendered final value.
    pub precision: u32,
    /// Length of the difference window inspected for divergence.
    pub divergence_window: usize,
    /// Divergence is flagged when the window's differences all share one
    /// sign and the newest magnitude is at least `ratio` times the
    /// oldest: same-sign steps that stop shrinking geometrically drift
    /// without a finite limit.
    pub divergence_ratio: BigRational,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            tol: BigRational::zero(),
            max_depth: 1024,
            precision: 50,
            divergence_window: 64,
            divergence_ratio: BigRational::new(BigInt::one(), BigInt::from(2)),
        }
    }
}

/// Outcome of [`eval_to_tolerance`]: the convergent trail plus
/// convergence diagnostics.
#[derive(Debug, Clone)]
pub struct EvalReport {
    pub convergents: Vec<Convergent>,
    /// Last defined convergent rendered at the requested precision.
    pub final_value: Option<HighPrecision>,
    /// Exact `|x_last - x_prev|` over the final two defined levels
    /// (zero when fewer than two are defined).
    pub est_error: BigRational,
    /// True when the signs of consecutive defined differences strictly
    /// alternated over the whole run (at least two differences seen).
    pub bracketing: bool,
    pub termination: Termination,
    pub depth_reached: u64,
}

impl EvalReport {
    /// Exact value of the last defined convergent.
    pub fn final_exact(&self) -> Option<&BigRational> {
        self.convergents
            .iter()
            .rev()
            .find_map(|c| c.value())
    }
}

/// Integerized state of the fundamental recurrence. Element denominators
/// are cleared with per-level factors `L_k`; `P_k = p_k * M_k` with
/// `M_k = den(b0) * L_1 ... L_k`, and `x_k = P_k / Q_k` unchanged.
struct Engine {
    p_prev: BigInt,
    p_cur: BigInt,
    q_prev: BigInt,
    q_cur: BigInt,
    m: BigInt,
    l_prev: BigInt,
    level: u64,
}

impl Engine {
    fn start(b0: &BigRational) -> Self {
        Self {
            p_prev: b0.denom().clone(),
            p_cur: b0.numer().clone(),
            q_prev: BigInt::zero(),
            q_cur: b0.denom().clone(),
            m: b0.denom().clone(),
            l_prev: BigInt::one(),
            level: 0,
        }
    }

    fn step(&mut self, e: &CfElement) {
        let l = e.a.denom().lcm(e.b.denom());
        let a_int = e.a.numer() * (&l / e.a.denom()) * &self.l_prev;
        let b_int = e.b.numer() * (&l / e.b.denom());
        let p = &b_int * &self.p_cur + &a_int * &self.p_prev;
        let q = &b_int * &self.q_cur + &a_int * &self.q_prev;
        self.p_prev = std::mem::replace(&mut self.p_cur, p);
        self.q_prev = std::mem::replace(&mut self.q_cur, q);
        self.m *= &l;
        self.l_prev = l;
        self.level += 1;
    }

    /// True rational `p_k` (and `q_k`) with the scaling divided back out.
    fn true_pair(&self) -> (BigRational, BigRational) {
        if self.m.is_one() {
            (
                BigRational::from_integer(self.p_cur.clone()),
                BigRational::from_integer(self.q_cur.clone()),
            )
        } else {
            (
                BigRational::new(self.p_cur.clone(), self.m.clone()),
                BigRational::new(self.q_cur.clone(), self.m.clone()),
            )
        }
    }

    fn convergent(&self) -> Convergent {
        let (p, q) = self.true_pair();
        Convergent::new(self.level, p, q)
    }

    fn defined(&self) -> bool {
        !self.q_cur.is_zero()
    }
}

/// Sign-and-magnitude of a difference `x_k - x_j` held as an unreduced
/// fraction `n / d` with `d > 0`.
#[derive(Clone)]
struct Diff {
    n: BigInt,
    d: BigInt,
}

impl Diff {
    fn between(p_new: &BigInt, q_new: &BigInt, p_old: &BigInt, q_old: &BigInt) -> Self {
        let n = p_new * q_old - p_old * q_new;
        let d = q_new * q_old;
        if d.is_negative() {
            Diff { n: -n, d: -d }
        } else {
            Diff { n, d }
        }
    }

    fn is_zero(&self) -> bool {
        self.n.is_zero()
    }

    fn sign_positive(&self) -> bool {
        self.n.is_positive()
    }

    /// `|self| < num/den`
    fn abs_less_than(&self, num: &BigInt, den: &BigInt) -> bool {
        self.n.magnitude() * den.magnitude() < num.magnitude() * self.d.magnitude()
    }

    /// `|self| >= |other| * (num/den)`
    fn abs_at_least_scaled(&self, other: &Diff, num: &BigInt, den: &BigInt) -> bool {
        self.n.magnitude() * other.d.magnitude() * den.magnitude()
            >= other.n.magnitude() * self.d.magnitude() * num.magnitude()
    }

    /// `|self| < |other|`
    fn abs_less(&self, other: &Diff) -> bool {
        self.n.magnitude() * other.d.magnitude() < other.n.magnitude() * self.d.magnitude()
    }

    fn to_rational_abs(&self) -> BigRational {
        BigRational::new(self.n.abs(), self.d.clone())
    }
}

/// Exact convergents for levels `0..=n` (fewer if the fraction ends
/// first). All arithmetic is exact; undefined levels (`q = 0`) are
/// reported with an absent value, never raised.
pub fn convergents(cf: &GeneralizedCf, n: u64) -> Vec<Convergent> {
    let mut engine = Engine::start(cf.b0());
    let mut out = Vec::with_capacity((n + 1) as usize);
    out.push(engine.convergent());
    for k in 1..=n {
        match cf.element(k) {
            None => break,
            Some(e) => {
                engine.step(&e);
                out.push(engine.convergent());
            }
        }
    }
    out
}

/// The convergent at level `k` alone.
pub fn convergent_at(cf: &GeneralizedCf, k: u64) -> Convergent {
    let mut engine = Engine::start(cf.b0());
    for level in 1..=k {
        match cf.element(level) {
            None => break,
            Some(e) => engine.step(&e),
        }
    }
    engine.convergent()
}

/// Evaluates until `|x_k - x_{k-1}| < tol` holds for two consecutive
/// defined levels (guarding against accidental near-agreement), the
/// fraction ends, a divergence pattern is detected, or `max_depth` is
/// reached.
pub fn eval_to_tolerance(
    cf: &GeneralizedCf,
    tol: &BigRational,
    max_depth: u64,
    precision: u32,
) -> EvalReport {
    eval_with_options(
        cf,
        &EvalOptions {
            tol: tol.clone(),
            max_depth,
            precision,
            ..EvalOptions::default()
        },
    )
}

pub fn eval_with_options(cf: &GeneralizedCf, opts: &EvalOptions) -> EvalReport {
    let mut engine = Engine::start(cf.b0());
    let mut convs = Vec::new();
    convs.push(engine.convergent());

    let use_tol = opts.tol.is_positive();
    let (tol_n, tol_d) = (opts.tol.numer().clone(), opts.tol.denom().clone());
    let (ratio_n, ratio_d) = (
        opts.divergence_ratio.numer().clone(),
        opts.divergence_ratio.denom().clone(),
    );

    // last defined convergent (raw integer pair)
    let mut last_defined: Option<(BigInt, BigInt)> = if engine.defined() {
        Some((engine.p_cur.clone(), engine.q_cur.clone()))
    } else {
        None
    };
    let mut last_diff: Option<Diff> = None;
    let mut window: VecDeque<Diff> = VecDeque::with_capacity(opts.divergence_window + 1);
    let mut window_signs: VecDeque<bool> = VecDeque::with_capacity(opts.divergence_window + 1);
    let mut small_streak = 0u32;
    let mut undefined_streak = 0u32;
    let mut alternating = true;
    let mut prev_sign: Option<bool> = None;
    let mut diff_count = 0u64;
    let mut termination = Termination::MaxDepth;

    'levels: for k in 1..=opts.max_depth {
        let e = match cf.element(k) {
            None => {
                termination = Termination::ToleranceMet;
                break 'levels;
            }
            Some(e) => e,
        };
        engine.step(&e);
        convs.push(engine.convergent());

        if !engine.defined() {
            undefined_streak += 1;
            if undefined_streak > 2 {
                termination = Termination::UndefinedConvergentRun;
                break 'levels;
            }
            continue;
        }
        undefined_streak = 0;

        if let Some((ref p_old, ref q_old)) = last_defined {
            let diff = Diff::between(&engine.p_cur, &engine.q_cur, p_old, q_old);
            diff_count += 1;

            if diff.is_zero() {
                alternating = false;
            } else {
                let sign = diff.sign_positive();
                if let Some(prev) = prev_sign {
                    if prev == sign {
                        alternating = false;
                    }
                }
                prev_sign = Some(sign);
            }

            if use_tol {
                if diff.abs_less_than(&tol_n, &tol_d) {
                    small_streak += 1;
                    if small_streak >= 2 {
                        last_diff = Some(diff);
                        last_defined = Some((engine.p_cur.clone(), engine.q_cur.clone()));
                        termination = Termination::ToleranceMet;
                        break 'levels;
                    }
                } else {
                    small_streak = 0;
                }
            }

            if !diff.is_zero() {
                window.push_back(diff.clone());
                window_signs.push_back(diff.sign_positive());
                if window.len() > opts.divergence_window {
                    window.pop_front();
                    window_signs.pop_front();
                }
                if window.len() == opts.divergence_window {
                    let same_sign = window_signs.iter().all(|s| *s == window_signs[0]);
                    if same_sign
                        && window
                            .back()
                            .unwrap()
                            .abs_at_least_scaled(window.front().unwrap(), &ratio_n, &ratio_d)
                    {
                        last_diff = Some(diff);
                        last_defined = Some((engine.p_cur.clone(), engine.q_cur.clone()));
                        termination = Termination::DivergenceDetected;
                        break 'levels;
                    }
                }
            }

            last_diff = Some(diff);
        }
        last_defined = Some((engine.p_cur.clone(), engine.q_cur.clone()));
    }

    let final_value = last_defined
        .as_ref()
        .map(|(p, q)| HighPrecision::from_ratio_parts(p, q, opts.precision + 10));
    let est_error = last_diff
        .map(|d| d.to_rational_abs())
        .unwrap_or_else(BigRational::zero);
    EvalReport {
        depth_reached: convs.last().map(|c| c.level).unwrap_or(0),
        convergents: convs,
        final_value,
        est_error,
        bracketing: alternating && diff_count >= 2,
        termination,
    }
}

/// Monotone-error check over `levels`: `|x_{k+1} - x_k| < |x_k - x_{k-1}|`
/// for every defined consecutive triple in the range. Used by the
/// positive-element diagnostics and the acceptance suite.
pub fn monotone_error_decrease(cf: &GeneralizedCf, from_level: u64, to_level: u64) -> bool {
    let mut engine = Engine::start(cf.b0());
    let mut prev_pair: Option<(BigInt, BigInt)> = Some((engine.p_cur.clone(), engine.q_cur.clone()));
    let mut prev_diff: Option<Diff> = None;
    let mut ok = true;
    for k in 1..=to_level {
        let e = match cf.element(k) {
            None => break,
            Some(e) => e,
        };
        engine.step(&e);
        if !engine.defined() {
            continue;
        }
        if let Some((ref p_old, ref q_old)) = prev_pair {
            let diff = Diff::between(&engine.p_cur, &engine.q_cur, p_old, q_old);
            if let Some(ref prev) = prev_diff {
                if k > from_level && !diff.abs_less(prev) {
                    ok = false;
                }
            }
            prev_diff = Some(diff);
        }
        prev_pair = Some((engine.p_cur.clone(), engine.q_cur.clone()));
    }
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    /// e = 2 + 1/(1 + 1/(2 + 2/(3 + 3/(4 + ...))))
    fn euler_e_cf() -> GeneralizedCf {
        GeneralizedCf::new(int(2), None, |k| {
            if k == 1 {
                CfElement::new(int(1), int(1))
            } else {
                CfElement::new(int(k as i64 - 1), int(k as i64))
            }
        })
    }

    /// 2/(e^2 - 1) = -1 + 2/(0 + 4/(1 + 6/(2 + ...))); b1 = 0.
    fn zero_denominator_cf() -> GeneralizedCf {
        GeneralizedCf::new(int(-1), None, |k| {
            CfElement::new(int(2 * k as i64), int(k as i64 - 1))
        })
    }

    #[test]
    fn euler_e_table() {
        let convs = convergents(&euler_e_cf(), 4);
        let expect = [int(2), int(3), rat(8, 3), rat(30, 11), rat(144, 53)];
        assert_eq!(convs.len(), 5);
        for (c, e) in convs.iter().zip(expect.iter()) {
            assert_eq!(c.value().unwrap(), e);
        }
    }

    #[test]
    fn depth_zero_fraction() {
        let cf = GeneralizedCf::constant(rat(7, 2));
        let convs = convergents(&cf, 10);
        assert_eq!(convs.len(), 1);
        assert_eq!(convs[0].value().unwrap(), &rat(7, 2));
        let report = eval_to_tolerance(&cf, &rat(1, 1000), 100, 30);
        assert_eq!(report.termination, Termination::ToleranceMet);
        assert_eq!(report.final_exact().unwrap(), &rat(7, 2));
        assert!(report.est_error.is_zero());
    }

    #[test]
    fn convergent_at_base_and_brouncker() {
        let cf = GeneralizedCf::new(int(5), None, |k| CfElement::new(int(1), int(k as i64)));
        let c0 = convergent_at(&cf, 0);
        assert_eq!((c0.p.clone(), c0.q.clone()), (int(5), int(1)));

        // Brouncker: 4/pi = 1 + 1/(2 + 9/(2 + 25/(2 + ...)))
        let brouncker = GeneralizedCf::new(int(1), None, |k| {
            CfElement::new(int((2 * k as i64 - 1).pow(2)), int(2))
        });
        let c1 = convergent_at(&brouncker, 1);
        assert_eq!(c1.value().unwrap(), &rat(3, 2));
    }

    #[test]
    fn zero_partial_denominator_is_not_an_error() {
        let cf = zero_denominator_cf();
        let convs = convergents(&cf, 3);
        // q_1 = 0*1 + 2*0 = 0: value absent at level 1
        assert!(convs[1].q.is_zero());
        assert!(convs[1].value().is_none());
        // level 2 is defined again: -1 + 2/(0 + 4/1) = -1/2
        assert_eq!(convs[2].value().unwrap(), &rat(-1, 2));
    }

    #[test]
    fn rational_elements_match_direct_recurrence() {
        // b0 = 1/2 with half-integer elements (the alpha = 1/2 exponential form)
        let cf = GeneralizedCf::new(rat(1, 2), None, |k| {
            CfElement::new(rat(k as i64, 2), rat(2 * k as i64 + 1, 2))
        });
        let convs = convergents(&cf, 6);
        // direct rational recurrence for comparison
        let (mut pm1, mut qm1) = (int(1), int(0));
        let (mut p0, mut q0) = (rat(1, 2), int(1));
        for k in 1..=6u64 {
            let a = rat(k as i64, 2);
            let b = rat(2 * k as i64 + 1, 2);
            let p = &b * &p0 + &a * &pm1;
            let q = &b * &q0 + &a * &qm1;
            pm1 = std::mem::replace(&mut p0, p);
            qm1 = std::mem::replace(&mut q0, q);
            assert_eq!(convs[k as usize].p, p0, "p at level {k}");
            assert_eq!(convs[k as usize].q, q0, "q at level {k}");
        }
    }

    #[test]
    fn tolerance_needs_two_consecutive_small_diffs() {
        // golden-ratio fraction: diffs shrink steadily, so a tolerance
        // larger than |x1-x0| and |x2-x1| stops at level 2.
        let cf = GeneralizedCf::new(int(1), None, |_| CfElement::new(int(1), int(1)));
        let report = eval_to_tolerance(&cf, &int(2), 100, 30);
        assert_eq!(report.termination, Termination::ToleranceMet);
        assert_eq!(report.depth_reached, 2);
    }

    #[test]
    fn golden_ratio_evaluation() {
        let cf = GeneralizedCf::new(int(1), None, |_| CfElement::new(int(1), int(1)));
        let tol = rat(1, 1_000_000_000_000);
        let report = eval_to_tolerance(&cf, &tol, 500, 50);
        assert_eq!(report.termination, Termination::ToleranceMet);
        assert!(report.bracketing);
        let rendered = report.final_value.unwrap().to_decimal(13, crate::oracle::highprec::Rounding::Truncate);
        assert_eq!(rendered, "1.618033988749");
    }

    #[test]
    fn divergence_detected_for_drifting_fraction() {
        // 0 - 1/(4 - 9/(8 - 25/(12 - ...))): same-sign differences that
        // decay only harmonically; must be flagged within 256 levels.
        let cf = GeneralizedCf::new(int(0), None, |k| {
            CfElement::new(int(-((2 * k as i64 - 1).pow(2))), int(4 * k as i64))
        });
        let report = eval_to_tolerance(&cf, &rat(1, 10_i64.pow(12)), 256, 30);
        assert_eq!(report.termination, Termination::DivergenceDetected);
        assert!(report.depth_reached <= 256);
    }

    #[test]
    fn geometric_same_sign_fraction_is_not_flagged() {
        // -1 + 4/ln 3 = 3 - 4/(13 - 36/(23 - ...)): same-sign diffs but
        // geometric decay; must run to tolerance, not divergence.
        let cf = GeneralizedCf::new(int(3), None, |k| {
            CfElement::new(int(-4 * (2 * k as i64 - 1).pow(2)), int(10 * k as i64 + 3))
        });
        let report = eval_to_tolerance(&cf, &rat(1, 10_i64.pow(10)), 400, 30);
        assert_eq!(report.termination, Termination::ToleranceMet);
    }

    #[test]
    fn undefined_levels_are_isolated_and_survived() {
        // With nonzero partial numerators, two consecutive zero q's are
        // impossible (the determinant identity would vanish), so the
        // undefined-run cutoff is a guard that valid fractions never
        // trip: all-zero partial denominators produce the worst case,
        // an undefined convergent at every other level.
        let cf = GeneralizedCf::new(int(0), None, |_| CfElement::new(int(1), int(0)));
        let report = eval_to_tolerance(&cf, &BigRational::zero(), 50, 30);
        assert_ne!(report.termination, Termination::UndefinedConvergentRun);
        let undefined = report
            .convergents
            .iter()
            .filter(|c| c.q.is_zero())
            .count();
        assert!(undefined >= 20);

        // an isolated zero crossing leaves the neighbors defined
        let cf = GeneralizedCf::from_elements(
            int(1),
            vec![
                CfElement::new(int(1), int(-1)), // q1 = -1
                CfElement::new(int(1), int(1)),  // q2 = -1 + 1 = 0
                CfElement::new(int(1), int(0)),  // q3 = 0 - 1 = -1
            ],
        );
        let convs = convergents(&cf, 3);
        assert!(convs[2].q.is_zero());
        assert!(!convs[3].q.is_zero());
    }

    #[test]
    fn bracketing_and_monotone_on_positive_elements() {
        let brouncker = GeneralizedCf::new(int(1), None, |k| {
            CfElement::new(int((2 * k as i64 - 1).pow(2)), int(2))
        });
        let report = eval_to_tolerance(&brouncker, &BigRational::zero(), 200, 30);
        assert_eq!(report.termination, Termination::MaxDepth);
        assert!(report.bracketing);
        assert!(monotone_error_decrease(&brouncker, 2, 200));
    }

    #[test]
    fn zero_partial_numerator_truncates() {
        let cf = GeneralizedCf::new(int(1), None, |k| {
            if k == 3 {
                CfElement::new(int(0), int(1))
            } else {
                CfElement::new(int(1), int(1))
            }
        });
        assert!(cf.element(3).is_none());
        let convs = convergents(&cf, 10);
        assert_eq!(convs.last().unwrap().level, 2);
    }

    #[test]
    fn render_matches_paper_layout() {
        assert_eq!(
            euler_e_cf().render(3),
            "2 + 1/(1 + 1/(2 + 2/(3 + ...)))"
        );
        let neg = GeneralizedCf::new(int(3), None, |k| {
            CfElement::new(int(-4 * (2 * k as i64 - 1).pow(2)), int(10 * k as i64 + 3))
        });
        assert_eq!(neg.render(2), "3 - 4/(13 - 36/(23 + ...))");
    }
}
