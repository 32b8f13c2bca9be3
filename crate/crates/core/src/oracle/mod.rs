//! Independent ground truth for the identity checks.
//!
//! Nothing here touches the fundamental recurrence: target values come
//! from high-precision elementary functions (with pi from Machin's
//! arctangent formula, not from any continued fraction), seed integrals
//! from tanh-sinh quadrature, and truncation values from a bottom-up
//! exact fold. Agreement between these routes and the convergent engine
//! is what the verification suite certifies.

pub mod highprec;
pub mod quadrature;

use num_traits::{Signed, Zero};

use crate::cf::GeneralizedCf;
use crate::families::{FamilyId, FamilySpec, LogArg, SeedIntegrals, Target};
use crate::rational::{int, rat, BigRational};
use highprec::{HighPrecError, HighPrecision};
use quadrature::{tanh_sinh_pair, Node};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("no finite target: the fraction diverges at this parameter point")]
    DivergentTarget,
    #[error("target is not real (negative radicand)")]
    NonRealTarget,
    #[error("target expression undefined: {0}")]
    UndefinedTarget(String),
    #[error("quadrature failed to converge within the level budget")]
    QuadratureDidNotConverge,
    #[error(transparent)]
    Numeric(#[from] HighPrecError),
}

fn hp(r: &BigRational, scale: u32) -> HighPrecision {
    HighPrecision::from_rational(r, scale)
}

/// `coeff * sqrt(radicand)` with a non-real check.
fn surd(coeff: &BigRational, radicand: &BigRational, scale: u32) -> Result<HighPrecision, OracleError> {
    if radicand.is_negative() {
        return Err(OracleError::NonRealTarget);
    }
    Ok(hp(radicand, scale).sqrt()?.mul_rational(coeff))
}

/// Evaluates a target descriptor at `precision` significant digits
/// (computed at `precision + 10` guard scale).
pub fn target_value(target: &Target, precision: u32) -> Result<HighPrecision, OracleError> {
    let scale = precision + 10;
    match target {
        Target::Divergent => Err(OracleError::DivergentTarget),
        Target::SqrtForm {
            offset,
            coeff,
            radicand,
        } => Ok(hp(offset, scale).add(&surd(coeff, radicand, scale)?)),
        Target::LogForm {
            offset,
            num_coeff,
            num_radicand,
            arg,
        } => {
            let denom = match arg {
                LogArg::Rational(w) => {
                    if !w.is_positive() {
                        return Err(OracleError::UndefinedTarget(
                            "logarithm argument must be positive".into(),
                        ));
                    }
                    hp(w, scale).ln()?
                }
                LogArg::SurdRatio { p, q } => {
                    if !q.is_positive() || p <= q {
                        return Err(OracleError::UndefinedTarget(
                            "surd-ratio logarithm needs p > q > 0".into(),
                        ));
                    }
                    let sp = hp(p, scale).sqrt()?;
                    let sq = hp(q, scale).sqrt()?;
                    sp.add(&sq).div(&sp.sub(&sq))?.ln()?
                }
            };
            if denom.is_zero() {
                return Err(OracleError::UndefinedTarget("logarithm vanishes".into()));
            }
            let numer = surd(num_coeff, num_radicand, scale)?;
            Ok(hp(offset, scale).add(&numer.div(&denom)?))
        }
        Target::AtanForm {
            offset,
            num_coeff,
            num_radicand,
            atan_radicand,
        } => {
            if atan_radicand.is_negative() {
                return Err(OracleError::NonRealTarget);
            }
            let denom = hp(atan_radicand, scale).sqrt()?.atan();
            if denom.is_zero() {
                return Err(OracleError::UndefinedTarget("arctangent vanishes".into()));
            }
            let numer = surd(num_coeff, num_radicand, scale)?;
            Ok(hp(offset, scale).add(&numer.div(&denom)?))
        }
        Target::ExpForm { exponent, num, den } => {
            let e_pow = hp(exponent, scale).exp();
            let numer = hp(&num.0, scale).add(&e_pow.mul_rational(&num.1));
            let denom = hp(&den.0, scale).add(&e_pow.mul_rational(&den.1));
            if denom.is_zero() {
                return Err(OracleError::UndefinedTarget(
                    "exponential denominator vanishes".into(),
                ));
            }
            Ok(numer.div(&denom)?)
        }
        Target::QuadratureRatio { coeff, integral } => {
            let (a, b) = quadrature_ab(integral, precision)?;
            if b.is_zero() {
                return Err(OracleError::UndefinedTarget("seed integral B vanishes".into()));
            }
            Ok(a.div(&b)?.mul_rational(coeff))
        }
    }
}

/// Target value for a family instance.
pub fn target_value_for(spec: &FamilySpec, precision: u32) -> Result<HighPrecision, OracleError> {
    target_value(&spec.target, precision)
}

/// `x^e` with fast paths for the exponents the integrands actually use.
fn power(x: &HighPrecision, e: &BigRational) -> Result<HighPrecision, OracleError> {
    if e.is_zero() {
        return Ok(HighPrecision::one(x.scale()));
    }
    if e == &int(1) {
        return Ok(x.clone());
    }
    Ok(x.pow_rational(e)?)
}

/// Seed integrals `A` and `B` by tanh-sinh quadrature at an absolute
/// error of at most `10^-(precision + 10)` (the returned values carry
/// `precision + 10` fractional digits).
pub fn quadrature_ab(
    integral: &SeedIntegrals,
    precision: u32,
) -> Result<(HighPrecision, HighPrecision), OracleError> {
    // Working scale: endpoint distances shrink double-exponentially, so
    // reserve twice the tail budget beyond the target digits.
    let tail_digits = precision + 15;
    let scale = precision + 2 * tail_digits + 25;
    let t_max = {
        let z = 2.0 * f64::from(tail_digits) * std::f64::consts::LN_10 / std::f64::consts::PI;
        (z + (z * z + 1.0).sqrt()).ln() // asinh
    };
    let target_err =
        HighPrecision::from_rational(&rat(1, 10).pow(precision as i32 + 12), scale);

    type PairIntegrand = Box<dyn Fn(&Node) -> Option<(HighPrecision, HighPrecision)>>;
    let (upper, integrand): (HighPrecision, PairIntegrand) = match integral {
        SeedIntegrals::PolyPower {
            a,
            b,
            c,
            theta,
            lambda,
            alpha,
        } => {
            let upper = poly_power_root(a, b, c, theta, scale)?;
            let (a, b, c) = (a.clone(), b.clone(), c.clone());
            let alpha_m1 = alpha - int(1);
            let lambda_m1 = lambda - int(1);
            let theta = theta.clone();
            let f = move |node: &Node| -> Option<(HighPrecision, HighPrecision)> {
                let scale = node.x.scale();
                let xt = power(&node.x, &theta).ok()?;
                let binom = hp(&a, scale)
                    .sub(&xt.mul_rational(&b))
                    .sub(&xt.mul(&xt).mul_rational(&c));
                if !binom.is_positive() {
                    return None; // underflowed past the root
                }
                let fa = power(&node.x, &alpha_m1)
                    .ok()?
                    .mul(&power(&binom, &lambda_m1).ok()?);
                let fb = fa.mul(&xt);
                Some((fa, fb))
            };
            (upper, Box::new(f))
        }
        SeedIntegrals::BinomialOverLinear {
            a,
            b,
            theta,
            lambda,
            alpha,
        } => {
            let (a, b) = (a.clone(), b.clone());
            let alpha_m1 = alpha - int(1);
            let lambda_m1 = lambda - int(1);
            let theta = theta.clone();
            let f = move |node: &Node| -> Option<(HighPrecision, HighPrecision)> {
                let scale = node.x.scale();
                let xt = power(&node.x, &theta).ok()?;
                let one_minus = HighPrecision::one(scale).sub(&xt);
                if !one_minus.is_positive() {
                    return None;
                }
                let den = hp(&a, scale).add(&xt.mul_rational(&b));
                let fa = power(&node.x, &alpha_m1)
                    .ok()?
                    .mul(&power(&one_minus, &lambda_m1).ok()?)
                    .div(&den)
                    .ok()?;
                let fb = fa.mul(&xt);
                Some((fa, fb))
            };
            (HighPrecision::one(scale), Box::new(f))
        }
        SeedIntegrals::ExpBeta {
            alpha,
            lambda,
            delta,
        } => {
            let alpha = alpha.clone();
            let delta_m1 = delta - int(1);
            let lambda_m1 = lambda - int(1);
            let f = move |node: &Node| -> Option<(HighPrecision, HighPrecision)> {
                if node.from_upper.is_zero() || node.x.is_zero() {
                    return None;
                }
                let expo = node.x.mul_rational(&alpha).exp();
                let fa = power(&node.x, &delta_m1)
                    .ok()?
                    .mul(&expo)
                    .mul(&power(&node.from_upper, &lambda_m1).ok()?);
                let fb = fa.mul(&node.x);
                Some((fa, fb))
            };
            (HighPrecision::one(scale), Box::new(f))
        }
    };

    let result = tanh_sinh_pair(&*integrand, &upper, scale, &target_err, t_max, 11);
    if !result.converged {
        return Err(OracleError::QuadratureDidNotConverge);
    }
    let out_scale = precision + 10;
    Ok((result.a.rescale(out_scale), result.b.rescale(out_scale)))
}

/// Smallest positive root of `a - b x^theta - c x^(2 theta)`, i.e.
/// `y^(1/theta)` for the smallest positive root `y` of
/// `c y^2 + b y - a = 0`.
fn poly_power_root(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    theta: &BigRational,
    scale: u32,
) -> Result<HighPrecision, OracleError> {
    let disc = b * b + rat(4, 1) * a * c;
    let sqrt_disc = hp(&disc, scale).sqrt()?;
    let two_c = int(2) * c;
    let minus_b = hp(&-b.clone(), scale);
    let y1 = minus_b.add(&sqrt_disc).mul_rational(&(int(1) / &two_c));
    let y2 = minus_b.sub(&sqrt_disc).mul_rational(&(int(1) / &two_c));
    let mut candidates: Vec<HighPrecision> =
        [y1, y2].into_iter().filter(|y| y.is_positive()).collect();
    candidates.sort_by(|x, y| x.compare(y));
    let y = candidates
        .into_iter()
        .next()
        .ok_or_else(|| OracleError::UndefinedTarget("no positive root".into()))?;
    if theta == &int(1) {
        return Ok(y);
    }
    Ok(y.pow_rational(&(int(1) / theta))?)
}

/// Evaluates `b0 + a1/(b1 + a2/(... + an/bn))` by exact rational folding
/// from the deepest level upward. Absent when a division by zero occurs
/// in the fold (a distinct notion from an undefined convergent).
pub fn bottom_up_truncation(cf: &GeneralizedCf, n: u64) -> Option<BigRational> {
    let elems: Vec<_> = (1..=n).map_while(|k| cf.element(k)).collect();
    if elems.is_empty() {
        return Some(cf.b0().clone());
    }
    let mut acc = elems.last().unwrap().b.clone();
    for idx in (1..elems.len()).rev() {
        // level idx carries b_idx; the numerator above it is a_{idx+1}
        if acc.is_zero() {
            return None;
        }
        acc = &elems[idx - 1].b + &elems[idx].a / acc;
    }
    if acc.is_zero() {
        return None;
    }
    Some(cf.b0() + &elems[0].a / acc)
}

/// Closed-form seed pair `(A, B)` for the families that have one
/// (logarithm, arctangent and exponential kinds); `None` elsewhere and
/// at the divergent boundary.
pub fn seed_closed_forms(
    spec: &FamilySpec,
    precision: u32,
) -> Result<Option<(HighPrecision, HighPrecision)>, OracleError> {
    let scale = precision + 10;
    let ab = family_alpha_beta(spec);
    match spec.family {
        FamilyId::II | FamilyId::IIMn => {
            let (alpha, beta) = ab.expect("log families carry alpha/beta");
            // A = ln((alpha + beta)/alpha)/beta, B = 1/beta - alpha A/beta
            let log = hp(&((&alpha + &beta) / &alpha), scale).ln()?;
            let a = log.mul_rational(&(int(1) / &beta));
            let b = hp(&(int(1) / &beta), scale).sub(&a.mul_rational(&(&alpha / &beta)));
            Ok(Some((a, b)))
        }
        FamilyId::III | FamilyId::IIILog => {
            let (alpha, beta) = ab.expect("arctangent families carry alpha/beta");
            let a = match &spec.target {
                Target::Divergent => return Ok(None),
                _ => {
                    if beta.is_positive() {
                        // A = atan(sqrt(beta/alpha)) / sqrt(alpha beta)
                        let root = hp(&(&beta / &alpha), scale).sqrt()?;
                        root.atan().div(&hp(&(&alpha * &beta), scale).sqrt()?)?
                    } else {
                        // A = ln((sqrt a + sqrt g)/(sqrt a - sqrt g)) / (2 sqrt(a g))
                        let gamma = -&beta;
                        let sa = hp(&alpha, scale).sqrt()?;
                        let sg = hp(&gamma, scale).sqrt()?;
                        let log = sa.add(&sg).div(&sa.sub(&sg))?.ln()?;
                        log.div(
                            &hp(&(&alpha * &gamma), scale)
                                .sqrt()?
                                .mul_rational(&int(2)),
                        )?
                    }
                }
            };
            // B = 1/beta - alpha A / beta
            let b = hp(&(int(1) / &beta), scale).sub(&a.mul_rational(&(&alpha / &beta)));
            Ok(Some((a, b)))
        }
        FamilyId::IV => {
            let alpha = spec.param("α").expect("family IV carries alpha").clone();
            // A = (e^a - 1)/a, B = ((a - 1) e^a + 1)/a^2
            let e_pow = hp(&alpha, scale).exp();
            let one = HighPrecision::one(scale);
            let a = e_pow.sub(&one).mul_rational(&(int(1) / &alpha));
            let b = e_pow
                .mul_rational(&(&alpha - int(1)))
                .add(&one)
                .mul_rational(&(int(1) / (&alpha * &alpha)));
            Ok(Some((a, b)))
        }
        _ => Ok(None),
    }
}

/// The term sequence `A_1, A_2, ...` extended from the closed-form seed
/// by the integrand's own one-step reduction (polynomial division or
/// integration by parts) - independent of the three-term rows it is
/// used to certify:
///
/// * log kind: `A_{k+1} = 1/(k b) - (a/b) A_k`
/// * arctangent kind: `A_{k+1} = 1/((2k-1) b) - (a/b) A_k`
/// * exponential kind: `A_{k+1} = e^a/a - (k/a) A_k`
pub fn closed_form_terms(
    spec: &FamilySpec,
    count: usize,
    precision: u32,
) -> Result<Option<Vec<HighPrecision>>, OracleError> {
    let scale = precision + 10;
    let Some((seed_a, _)) = seed_closed_forms(spec, precision)? else {
        return Ok(None);
    };
    let mut terms = Vec::with_capacity(count);
    terms.push(seed_a);
    match spec.family {
        FamilyId::II | FamilyId::IIMn | FamilyId::III | FamilyId::IIILog => {
            let (alpha, beta) = family_alpha_beta(spec).expect("checked above");
            let ratio = &alpha / &beta;
            let arctan_kind = matches!(spec.family, FamilyId::III | FamilyId::IIILog);
            for k in 1..count as i64 {
                let idx = if arctan_kind { 2 * k - 1 } else { k };
                let lead = hp(&(int(1) / (int(idx) * &beta)), scale);
                let prev = terms.last().unwrap();
                terms.push(lead.sub(&prev.mul_rational(&ratio)));
            }
        }
        FamilyId::IV => {
            let alpha = spec.param("α").expect("family IV carries alpha").clone();
            let e_over_a = hp(&alpha, scale).exp().mul_rational(&(int(1) / &alpha));
            for k in 1..count as i64 {
                let prev = terms.last().unwrap();
                terms.push(e_over_a.sub(&prev.mul_rational(&(int(k) / &alpha))));
            }
        }
        _ => return Ok(None),
    }
    Ok(Some(terms))
}

/// The `(alpha, beta)` pair behind the log/arctangent families,
/// whichever parameterization they were built from.
fn family_alpha_beta(spec: &FamilySpec) -> Option<(BigRational, BigRational)> {
    match spec.family {
        FamilyId::II | FamilyId::III | FamilyId::IIILog => {
            match (spec.param("α"), spec.param("β")) {
                (Some(a), Some(b)) => Some((a.clone(), b.clone())),
                _ => {
                    // the mn-parameterized arctangent form
                    let m = spec.param("m")?;
                    let n = spec.param("n")?;
                    Some((m + n, n - m))
                }
            }
        }
        FamilyId::IIMn => {
            let m = spec.param("m")?;
            let n = spec.param("n")?;
            Some((n - m, int(2) * m))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::{convergents, CfElement};
    use crate::families::{
        family_i_simple, family_ii, family_iii, family_iv, family_v, family_vi, family_vii,
    };
    use crate::rational::{int, rat};

    fn close_to(value: &HighPrecision, reference: &str, tol_pow: i32) {
        let r = HighPrecision::parse(reference, value.scale()).unwrap();
        let tol = HighPrecision::from_rational(&rat(1, 10).pow(-tol_pow), value.scale());
        assert!(
            value.sub(&r).abs().compare(&tol) != std::cmp::Ordering::Greater,
            "value {} vs {}",
            value.to_decimal(30, highprec::Rounding::Nearest),
            reference
        );
    }

    #[test]
    fn bottom_up_matches_convergents_and_handles_zero_denominators() {
        let e_cf = GeneralizedCf::new(int(2), None, |k| {
            if k == 1 {
                CfElement::new(int(1), int(1))
            } else {
                CfElement::new(int(k as i64 - 1), int(k as i64))
            }
        });
        assert_eq!(bottom_up_truncation(&e_cf, 0).unwrap(), int(2));
        assert_eq!(bottom_up_truncation(&e_cf, 4).unwrap(), rat(144, 53));
        let convs = convergents(&e_cf, 12);
        for k in 0..=12u64 {
            assert_eq!(
                bottom_up_truncation(&e_cf, k).as_ref(),
                convs[k as usize].value(),
                "level {k}"
            );
        }

        // 2/(e^2-1) form: truncation at the zero partial denominator is
        // undefined, one level deeper it is defined again
        let z = GeneralizedCf::new(int(-1), None, |k| {
            CfElement::new(int(2 * k as i64), int(k as i64 - 1))
        });
        assert!(bottom_up_truncation(&z, 1).is_none());
        assert_eq!(bottom_up_truncation(&z, 2).unwrap(), rat(-1, 2));
    }

    #[test]
    fn closed_form_targets() {
        let golden = family_i_simple(int(1), int(1)).unwrap();
        close_to(
            &target_value_for(&golden, 40).unwrap(),
            "1.6180339887498948482045868343656381177203091798057628621354486227",
            38,
        );
        let brouncker_head = family_iii(int(1), int(1)).unwrap();
        // beta + 1/A = 1 + 4/pi
        close_to(
            &target_value_for(&brouncker_head, 40).unwrap(),
            "2.2732395447351626861510701069801148962756771659236515899813387525",
            38,
        );
        // the reciprocal-form target 4/pi on its own
        let four_over_pi = Target::AtanForm {
            offset: int(0),
            num_coeff: int(1),
            num_radicand: int(1),
            atan_radicand: int(1),
        };
        close_to(
            &target_value(&four_over_pi, 40).unwrap(),
            "1.2732395447351626861510701069801148962756771659236515899813387525",
            38,
        );
        let log2 = family_ii(int(1), int(1)).unwrap();
        close_to(
            &target_value_for(&log2, 40).unwrap(),
            "1.4426950408889634073599246810018921374266459541529859341354494069",
            38,
        );
        let surd_log = family_iii(int(4), int(-1)).unwrap();
        close_to(
            &target_value_for(&surd_log, 40).unwrap(),
            "2.6409569065073495744569606629444280024505442290208469789052082532",
            38,
        );
        // double root: exactly 1
        let double_root = family_i_simple(int(2), int(-1)).unwrap();
        let v = target_value_for(&double_root, 40).unwrap();
        assert_eq!(v.to_rational(), int(1));
        // divergent target is an explicit error
        let div = family_iii(int(1), int(-1)).unwrap();
        assert_eq!(
            target_value_for(&div, 40).unwrap_err(),
            OracleError::DivergentTarget
        );
        // non-real target is an explicit error
        let nonreal = crate::families::family_i(int(-1), int(1), int(1)).unwrap();
        assert_eq!(
            target_value_for(&nonreal, 40).unwrap_err(),
            OracleError::NonRealTarget
        );
    }

    #[test]
    fn quadrature_matches_exponential_seed_closed_forms() {
        // family VII at delta = lambda = 1 has A = e - 1, B = 1
        let spec = family_vii(int(1), int(1), int(1)).unwrap();
        let Target::QuadratureRatio { integral, .. } = &spec.target else {
            panic!("expected quadrature target");
        };
        let (a, b) = quadrature_ab(integral, 50).unwrap();
        close_to(
            &a,
            "1.7182818284590452353602874713526624977572470936999595749669676277",
            40,
        );
        let one = HighPrecision::one(b.scale());
        let tol = HighPrecision::from_rational(&rat(1, 10).pow(40), b.scale());
        assert!(b.sub(&one).abs().compare(&tol) != std::cmp::Ordering::Greater);
    }

    #[test]
    fn quadrature_matches_log_seed_closed_forms() {
        // family VI at a=1, b=1, theta=1, lambda=1, alpha=1:
        // A = ln 2, B = 1 - ln 2
        let spec = family_vi(int(1), int(1), int(1), int(1), int(1)).unwrap();
        let Target::QuadratureRatio { integral, .. } = &spec.target else {
            panic!("expected quadrature target");
        };
        let (a, b) = quadrature_ab(integral, 50).unwrap();
        close_to(
            &a,
            "0.69314718055994530941723212145817656807550013436025525412068000949",
            40,
        );
        close_to(
            &b,
            "0.30685281944005469058276787854182343192449986563974474587931999051",
            40,
        );
    }

    #[test]
    fn quadrature_matches_polynomial_seeds() {
        // family V at a=1, b=0, c=1, theta=1, lambda=1, alpha=1:
        // U = 1, A = 1, B = 1/2
        let spec = family_v(int(1), int(0), int(1), int(1), int(1), int(1)).unwrap();
        let Target::QuadratureRatio { integral, .. } = &spec.target else {
            panic!("expected quadrature target");
        };
        let (a, b) = quadrature_ab(integral, 40).unwrap();
        let tol = HighPrecision::from_rational(&rat(1, 10).pow(38), a.scale());
        let exact_a = HighPrecision::from_rational(&int(1), a.scale());
        let exact_b = HighPrecision::from_rational(&rat(1, 2), b.scale());
        assert!(a.sub(&exact_a).abs().compare(&tol) != std::cmp::Ordering::Greater);
        assert!(b.sub(&exact_b).abs().compare(&tol) != std::cmp::Ordering::Greater);

        // the general sample: A = 7/6, B = 5/12 exactly
        let spec = family_v(int(2), int(1), int(1), int(1), int(2), int(1)).unwrap();
        let Target::QuadratureRatio { integral, .. } = &spec.target else {
            panic!("expected quadrature target");
        };
        let (a, b) = quadrature_ab(integral, 30).unwrap();
        let tol = HighPrecision::from_rational(&rat(1, 10).pow(28), a.scale());
        let exact_a = HighPrecision::from_rational(&rat(7, 6), a.scale());
        let exact_b = HighPrecision::from_rational(&rat(5, 12), b.scale());
        assert!(a.sub(&exact_a).abs().compare(&tol) != std::cmp::Ordering::Greater);
        assert!(b.sub(&exact_b).abs().compare(&tol) != std::cmp::Ordering::Greater);
    }

    #[test]
    fn singular_quadrature_matches_independent_reference() {
        // delta = lambda = 1/2, alpha = 1: integrable singularities at
        // both endpoints; references computed independently (mpmath).
        let spec = family_vii(int(1), rat(1, 2), rat(1, 2)).unwrap();
        let Target::QuadratureRatio { integral, .. } = &spec.target else {
            panic!("expected quadrature target");
        };
        let (a, b) = quadrature_ab(integral, 30).unwrap();
        close_to(
            &a,
            "5.5084297738861066616724115145275096335457148728500119275038146924",
            25,
        );
        close_to(
            &b,
            "3.4221109299910209939096834106464562385576308773861300086470112437",
            25,
        );
        let v = target_value_for(&spec, 30).unwrap();
        close_to(
            &v,
            "0.80482922479379705477498768293194811473446233504190577477774935882",
            25,
        );
    }

    #[test]
    fn quadrature_precision_escalation_is_consistent() {
        let spec = family_vii(int(-1), int(3), int(2)).unwrap();
        let Target::QuadratureRatio { integral, .. } = &spec.target else {
            panic!("expected quadrature target");
        };
        let (a1, _) = quadrature_ab(integral, 25).unwrap();
        let (a2, _) = quadrature_ab(integral, 35).unwrap();
        let a2_down = a2.rescale(a1.scale());
        let tol = HighPrecision::from_rational(&rat(1, 10).pow(23), a1.scale());
        assert!(a1.sub(&a2_down).abs().compare(&tol) != std::cmp::Ordering::Greater);
    }

    #[test]
    fn seed_closed_forms_and_terms() {
        // family IV alpha=1: A = e - 1, B = 1; terms extend by parts
        let spec = family_iv(int(1)).unwrap();
        let (a, b) = seed_closed_forms(&spec, 40).unwrap().unwrap();
        close_to(
            &a,
            "1.7182818284590452353602874713526624977572470936999595749669676277",
            38,
        );
        let one = HighPrecision::one(b.scale());
        let tol = HighPrecision::from_rational(&rat(1, 10).pow(38), b.scale());
        assert!(b.sub(&one).abs().compare(&tol) != std::cmp::Ordering::Greater);
        let terms = closed_form_terms(&spec, 5, 40).unwrap().unwrap();
        assert!(terms[1].sub(&b).abs().compare(&tol) != std::cmp::Ordering::Greater);

        // divergent boundary has no seeds
        let div = family_iii(int(1), int(-1)).unwrap();
        assert!(seed_closed_forms(&div, 30).unwrap().is_none());
        // quadrature-only families have no closed seeds
        let v = family_v(int(2), int(1), int(1), int(1), int(2), int(1)).unwrap();
        assert!(seed_closed_forms(&v, 30).unwrap().is_none());
    }
}
