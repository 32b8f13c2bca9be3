//! Tanh-sinh (double-exponential) quadrature over `(0, U)`.
//!
//! The substitution `x = U / (1 + e^(-2u))` with `u = (pi/2) sinh t`
//! pushes the endpoints to `t = +-inf` with double-exponentially decaying
//! weights, which neutralizes integrable endpoint singularities such as
//! the `x^(-1/2)` and `(1-x)^(-1/2)` factors of the fractional-exponent
//! seed integrals. Distances to both endpoints are computed directly
//! (`U - x = U e^(-2u) / (1 + e^(-2u))`), never by cancelling
//! subtraction, and the fixed-point working scale is chosen by the
//! caller large enough to keep the nearest-node distances representable.
//!
//! Levels double the node density by halving the step `h`; each
//! refinement reuses all previous nodes (they are the even-index subset)
//! and the run stops when two successive levels agree to the target
//! absolute error. Both seed integrands are evaluated per node, so the
//! `A` and `B` integrals share every node computation.

use num_bigint::BigInt;

use super::highprec::{pi, HighPrecision};
use crate::rational::BigRational;

/// A quadrature node: position plus its exactly-tracked distance to the
/// upper endpoint (the distance to the lower endpoint is `x` itself).
pub struct Node {
    pub x: HighPrecision,
    pub from_upper: HighPrecision,
}

pub struct PairResult {
    pub a: HighPrecision,
    pub b: HighPrecision,
    /// `max(|I_L - I_{L-1}|)` over the two integrals at the last level.
    pub est_error: HighPrecision,
    pub converged: bool,
    pub levels: u32,
    pub nodes: usize,
}

struct NodeContribution {
    sum_a: HighPrecision,
    sum_b: HighPrecision,
    evaluations: usize,
}

/// Integrates a pair of integrands over `(0, upper)`. The integrand may
/// return `None` where its factors underflow the working scale; such
/// nodes lie inside the truncation-error budget and are skipped.
pub fn tanh_sinh_pair(
    f: &dyn Fn(&Node) -> Option<(HighPrecision, HighPrecision)>,
    upper: &HighPrecision,
    scale: u32,
    target_err: &HighPrecision,
    t_max: f64,
    max_level: u32,
) -> PairResult {
    let pi_half = pi(scale).mul_rational(&BigRational::new(BigInt::from(1), BigInt::from(2)));
    let mut nodes = 0usize;

    let eval_abscissa = |j: u64, level: u32| -> Option<NodeContribution> {
        // t = j / 2^level exactly
        let t = HighPrecision::from_rational(
            &BigRational::new(BigInt::from(j), BigInt::from(1u64) << level),
            scale,
        );
        let et = t.exp();
        let emt = HighPrecision::one(scale).div(&et).ok()?;
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let sinh_t = et.sub(&emt).mul_rational(&half);
        let cosh_t = et.add(&emt).mul_rational(&half);
        let u = pi_half.mul(&sinh_t);
        let ex = u.mul_rational(&BigRational::from_integer(BigInt::from(-2))).exp();
        if ex.is_zero() {
            return None; // beyond the representable tail
        }
        let s = HighPrecision::one(scale).add(&ex);
        let x_hi = upper.div(&s).ok()?;
        let x_lo = upper.mul(&ex).div(&s).ok()?;
        if x_lo.is_zero() {
            return None;
        }
        let wfac = pi_half
            .mul(&cosh_t)
            .mul_rational(&BigRational::from_integer(BigInt::from(2)))
            .mul(&x_hi)
            .mul(&x_lo)
            .div(upper)
            .ok()?;
        let mut sum_a = HighPrecision::zero(scale);
        let mut sum_b = HighPrecision::zero(scale);
        let mut evaluations = 0usize;
        if j == 0 {
            // center node, counted once
            if let Some((fa, fb)) = f(&Node {
                x: x_hi.clone(),
                from_upper: x_lo.clone(),
            }) {
                sum_a = sum_a.add(&wfac.mul(&fa));
                sum_b = sum_b.add(&wfac.mul(&fb));
                evaluations += 1;
            }
        } else {
            if let Some((fa, fb)) = f(&Node {
                x: x_hi.clone(),
                from_upper: x_lo.clone(),
            }) {
                sum_a = sum_a.add(&wfac.mul(&fa));
                sum_b = sum_b.add(&wfac.mul(&fb));
                evaluations += 1;
            }
            if let Some((fa, fb)) = f(&Node {
                x: x_lo,
                from_upper: x_hi,
            }) {
                sum_a = sum_a.add(&wfac.mul(&fa));
                sum_b = sum_b.add(&wfac.mul(&fb));
                evaluations += 1;
            }
        }
        Some(NodeContribution {
            sum_a,
            sum_b,
            evaluations,
        })
    };

    const FIRST_LEVEL: u32 = 3;
    let mut raw_a = HighPrecision::zero(scale);
    let mut raw_b = HighPrecision::zero(scale);
    let mut prev = None::<(HighPrecision, HighPrecision)>;
    let mut est_error = HighPrecision::zero(scale);
    let mut converged = false;
    let mut level = FIRST_LEVEL;

    while level <= max_level {
        let j_max = (t_max * f64::from(1u32 << level)).floor() as u64;
        if level == FIRST_LEVEL {
            for j in 0..=j_max {
                if let Some(c) = eval_abscissa(j, level) {
                    raw_a = raw_a.add(&c.sum_a);
                    raw_b = raw_b.add(&c.sum_b);
                    nodes += c.evaluations;
                }
            }
        } else {
            let mut j = 1;
            while j <= j_max {
                if let Some(c) = eval_abscissa(j, level) {
                    raw_a = raw_a.add(&c.sum_a);
                    raw_b = raw_b.add(&c.sum_b);
                    nodes += c.evaluations;
                }
                j += 2;
            }
        }
        let h = BigRational::new(BigInt::from(1), BigInt::from(1u64) << level);
        let cur_a = raw_a.mul_rational(&h);
        let cur_b = raw_b.mul_rational(&h);
        if let Some((pa, pb)) = prev {
            let da = cur_a.sub(&pa).abs();
            let db = cur_b.sub(&pb).abs();
            est_error = if da.compare(&db) == std::cmp::Ordering::Greater {
                da
            } else {
                db
            };
            if level > FIRST_LEVEL + 1 && est_error.compare(target_err) != std::cmp::Ordering::Greater
            {
                prev = Some((cur_a, cur_b));
                converged = true;
                break;
            }
        }
        prev = Some((cur_a, cur_b));
        level += 1;
    }

    let (a, b) = prev.expect("at least one level computed");
    PairResult {
        a,
        b,
        est_error,
        converged,
        levels: level.min(max_level),
        nodes,
    }
}
