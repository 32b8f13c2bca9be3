//! Value-preserving rewrites of continued fractions.
//!
//! * [`equivalence_scale`]: rescale level `k` by `c_k` ("depression"):
//!   `a_k' = c_k c_{k-1} a_k`, `b_k' = c_k b_k` with `c_0 = 1`. Every
//!   defined convergent value is unchanged.
//! * [`adjoin_head`] / [`drop_head`]: prefix or strip a leading term and
//!   partial numerator, mapping the value `v` to `b0' + a1'/v`; mutually
//!   inverse on the nose.
//! * [`alternate_signs`]: the `c_k = (-1)^k` scaling that trades
//!   subtracted partial numerators for negated partial denominators.
//! * [`clear_denominators`]: choose the least positive scales that make
//!   every element integral (and content-free) down to a given depth.
//!
//! Outputs are lazy: the returned fractions wrap the original's
//! generator, so infinite families stay infinite.

use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cf::{CfElement, GeneralizedCf};
use crate::rational::{affine_eval, affine_integer_root_at_least, BigRational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransformError {
    #[error("scale factor is zero at level {level}")]
    ZeroScale { level: u64 },
    #[error("scale denominator vanishes at level {level}")]
    ScalePole { level: u64 },
    #[error("cannot drop the head of a fraction with no elements")]
    EmptyFraction,
    #[error("adjoined partial numerator must be nonzero")]
    ZeroPartialNumerator,
}

type ScaleFn = Arc<dyn Fn(u64) -> BigRational + Send + Sync>;

/// Per-level scale factors `c_k` for `k >= 1`. Factors must be nonzero;
/// the checked constructors reject zeros eagerly, and a zero produced by
/// a raw [`ScaleGen::from_fn`] closure panics at element generation.
#[derive(Clone)]
pub struct ScaleGen(ScaleFn);

impl std::fmt::Debug for ScaleGen {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ScaleGen(c1={}, c2={})", (self.0)(1), (self.0)(2))
    }
}

impl ScaleGen {
    pub fn constant(c: BigRational) -> Result<Self, TransformError> {
        if c.is_zero() {
            return Err(TransformError::ZeroScale { level: 1 });
        }
        Ok(Self(Arc::new(move |_| c.clone())))
    }

    /// `c_k = (p1 + q1 k)/(p2 + q2 k)`, checked for roots and poles at
    /// every integer level `k >= 1`.
    pub fn affine_ratio(
        num: (BigRational, BigRational),
        den: (BigRational, BigRational),
    ) -> Result<Self, TransformError> {
        if num.0.is_zero() && num.1.is_zero() {
            return Err(TransformError::ZeroScale { level: 1 });
        }
        if den.0.is_zero() && den.1.is_zero() {
            return Err(TransformError::ScalePole { level: 1 });
        }
        if let Some(level) = affine_integer_root_at_least(&num.0, &num.1, 1) {
            return Err(TransformError::ZeroScale { level });
        }
        if let Some(level) = affine_integer_root_at_least(&den.0, &den.1, 1) {
            return Err(TransformError::ScalePole { level });
        }
        Ok(Self(Arc::new(move |k| {
            affine_eval(&num.0, &num.1, k) / affine_eval(&den.0, &den.1, k)
        })))
    }

    /// Arbitrary scale generator; the caller guarantees nonzero values.
    pub fn from_fn(f: impl Fn(u64) -> BigRational + Send + Sync + 'static) -> Self {
        Self(Arc::new(f))
    }

    fn at(&self, k: u64) -> BigRational {
        if k == 0 {
            return BigRational::one();
        }
        let c = (self.0)(k);
        assert!(!c.is_zero(), "scale factor is zero at level {k}");
        c
    }
}

/// The element at `k`, or the `a = 0` end marker that keeps wrapped
/// generators ending where the original did.
fn element_or_end(cf: &GeneralizedCf, k: u64) -> CfElement {
    cf.element(k)
        .unwrap_or_else(|| CfElement::new(BigRational::zero(), BigRational::zero()))
}

/// Rescales each level by `c_k` without changing any convergent value:
/// `b0` stays, `a_k' = c_k c_{k-1} a_k`, `b_k' = c_k b_k`.
pub fn equivalence_scale(cf: &GeneralizedCf, scales: ScaleGen) -> GeneralizedCf {
    let src = cf.clone();
    GeneralizedCf::new(cf.b0().clone(), cf.depth_hint(), move |k| {
        let e = element_or_end(&src, k);
        if e.a.is_zero() {
            return e;
        }
        let c = scales.at(k);
        let c_prev = scales.at(k - 1);
        CfElement::new(&e.a * &c * c_prev, &e.b * &c)
    })
}

/// Prefixes a new leading term: the value becomes `b0_new + a1_new / v`,
/// the old `b0` becomes the new `b1`, and convergent `k+1` of the result
/// is the Moebius image `(b0_new p_k + a1_new q_k) / p_k` of convergent
/// `k` of the input.
pub fn adjoin_head(
    cf: &GeneralizedCf,
    b0_new: BigRational,
    a1_new: BigRational,
) -> Result<GeneralizedCf, TransformError> {
    if a1_new.is_zero() {
        return Err(TransformError::ZeroPartialNumerator);
    }
    let src = cf.clone();
    let old_b0 = cf.b0().clone();
    let depth = cf.depth_hint().map(|d| d + 1);
    Ok(GeneralizedCf::new(b0_new, depth, move |k| {
        if k == 1 {
            CfElement::new(a1_new.clone(), old_b0.clone())
        } else {
            element_or_end(&src, k - 1)
        }
    }))
}

/// Splits off the head: returns `(b0, a1, tail)` such that
/// `adjoin_head(tail, b0, a1)` reproduces the input element-for-element.
pub fn drop_head(
    cf: &GeneralizedCf,
) -> Result<(BigRational, BigRational, GeneralizedCf), TransformError> {
    let first = cf.element(1).ok_or(TransformError::EmptyFraction)?;
    let src = cf.clone();
    let depth = cf.depth_hint().map(|d| d - 1);
    let tail = GeneralizedCf::new(first.b, depth, move |k| element_or_end(&src, k + 1));
    Ok((cf.b0().clone(), first.a, tail))
}

/// The `c_k = (-1)^k` equivalence scaling: negates every partial
/// numerator and every other partial denominator, leaving all defined
/// convergent values unchanged. Applying it twice is the identity.
pub fn alternate_signs(cf: &GeneralizedCf) -> GeneralizedCf {
    equivalence_scale(
        cf,
        ScaleGen::from_fn(|k| {
            if k % 2 == 1 {
                -BigRational::one()
            } else {
                BigRational::one()
            }
        }),
    )
}

/// Least positive scale `c` with `c*u` and `c*v` both integral:
/// `lcm(den u, den v) / gcd(num u, num v)`.
fn minimal_integralizing_scale(u: &BigRational, v: &BigRational) -> BigRational {
    let num = u.denom().lcm(v.denom());
    let den = u.numer().abs().gcd(&v.numer().abs());
    debug_assert!(!den.is_zero(), "both quantities zero");
    BigRational::new(num, den)
}

/// Rescales levels `1..=depth` so that every `a_k', b_k'` in that range
/// is an integer with no common factor per level, choosing each `c_k` as
/// the least positive rational that achieves integrality given
/// `c_{k-1}`. Deeper levels keep their original values up to the
/// boundary cross-term, so convergent values are unchanged everywhere.
pub fn clear_denominators(cf: &GeneralizedCf, depth: u64) -> GeneralizedCf {
    let mut scales: Vec<BigRational> = Vec::with_capacity(depth as usize);
    let mut prev = BigRational::one();
    for k in 1..=depth {
        match cf.element(k) {
            None => break,
            Some(e) => {
                let u = &e.a * &prev;
                let c = minimal_integralizing_scale(&u, &e.b);
                prev = c.clone();
                scales.push(c);
            }
        }
    }
    let scales = Arc::new(scales);
    equivalence_scale(
        cf,
        ScaleGen::from_fn(move |k| {
            scales
                .get((k - 1) as usize)
                .cloned()
                .unwrap_or_else(BigRational::one)
        }),
    )
}
