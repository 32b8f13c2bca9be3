//! Parameterized families I-VII and the catalog of named identities.
//!
//! Each family constructor validates its parameter domain and returns a
//! [`FamilySpec`]: the coefficient rows of its three-term recurrence, the
//! documented head adjunction (where the canonical form carries one) and
//! a [`Target`] describing the closed-form or quadrature value the
//! fraction converges to.
//!
//! | family    | rows `(f_k, g_k, h_k)`                                  | value of the canonical fraction        |
//! |-----------|---------------------------------------------------------|----------------------------------------|
//! | I         | `k a, (k+1) b, (k+2) g`                                 | `b + sqrt(b^2 + 4 a g)`                |
//! | I_SIMPLE  | `1, b, e` (constant rows)                               | `(b + sqrt(b^2 + 4 e)) / 2`            |
//! | II        | `k a, (k+1) a - k b, (k+1) b`, head `(a, a b)`          | `b / ln((a + b)/a)`                    |
//! | II_MN     | II at `a = n - m, b = 2 m`                              | `2 m / ln((n + m)/(n - m))`            |
//! | III       | `(2k-1) a, (2k+1) a - (2k-1) b, (2k+1) b`, head `(a+b, a b)` | `b + sqrt(a b)/atan(sqrt(b/a))` for `b > 0`; `b + 2 sqrt(a g)/ln((sqrt a + sqrt g)/(sqrt a - sqrt g))` for `b = -g < 0` |
//! | IV        | `k, k + 1 - a, a`, head `(1 - a, a)`                    | `a / (e^a - 1)`                        |
//! | V         | `(a+(k-1)t) A, (a+(k-1)t+Lt) B, (a+(k-1)t+2Lt) C`       | `a A . Int_A / Int_B` (quadrature)     |
//! | VI        | like V for `(1 - x^t)^L / (A + B x^t)`                  | quadrature ratio                       |
//! | VII       | `d+k-1, d+k-1+L-a, a`                                   | `d . Int_A / Int_B` (quadrature)       |
//!
//! The catalog lists every concrete identity with the finite transform
//! recipe that produces its displayed shape, plus the tolerance schedule
//! its verification runs at.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::cf::GeneralizedCf;
use crate::rational::{display_ratio, int, rat, BigRational};
use crate::recurrence::{cf_from_recurrence, AffineCoeff, RecurrenceScheme};
use crate::transforms::{
    adjoin_head, alternate_signs, clear_denominators, drop_head, equivalence_scale, ScaleGen,
    TransformError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyId {
    I,
    ISimple,
    II,
    IIMn,
    III,
    IIILog,
    IV,
    V,
    VI,
    VII,
}

impl FamilyId {
    pub const ALL: [FamilyId; 10] = [
        FamilyId::I,
        FamilyId::ISimple,
        FamilyId::II,
        FamilyId::IIMn,
        FamilyId::III,
        FamilyId::IIILog,
        FamilyId::IV,
        FamilyId::V,
        FamilyId::VI,
        FamilyId::VII,
    ];

    pub fn parse(s: &str) -> Option<FamilyId> {
        let s = s.trim();
        let s = s.strip_prefix("family_").unwrap_or(s);
        let canon = s.to_ascii_uppercase();
        FamilyId::ALL
            .iter()
            .copied()
            .find(|id| id.to_string() == canon)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyId::I => "I",
            FamilyId::ISimple => "I_SIMPLE",
            FamilyId::II => "II",
            FamilyId::IIMn => "II_MN",
            FamilyId::III => "III",
            FamilyId::IIILog => "III_LOG",
            FamilyId::IV => "IV",
            FamilyId::V => "V",
            FamilyId::VI => "VI",
            FamilyId::VII => "VII",
        };
        f.write_str(s)
    }
}

/// Argument of the logarithm in a log-form target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LogArg {
    Rational(BigRational),
    /// `(sqrt p + sqrt q) / (sqrt p - sqrt q)` with `p > q > 0`.
    SurdRatio { p: BigRational, q: BigRational },
}

/// Integrand descriptors for the quadrature-backed seed pairs `A, B`;
/// `B`'s integrand is `A`'s times `x^theta` (`x` for the exponential
/// kind).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeedIntegrals {
    /// `Int x^(alpha-1) (a - b x^theta - c x^(2 theta))^(lambda-1) dx`
    /// over `(0, x_root)`.
    PolyPower {
        a: BigRational,
        b: BigRational,
        c: BigRational,
        theta: BigRational,
        lambda: BigRational,
        alpha: BigRational,
    },
    /// `Int x^(alpha-1) (1 - x^theta)^(lambda-1) / (a + b x^theta) dx`
    /// over `(0, 1)`.
    BinomialOverLinear {
        a: BigRational,
        b: BigRational,
        theta: BigRational,
        lambda: BigRational,
        alpha: BigRational,
    },
    /// `Int x^(delta-1) e^(alpha x) (1 - x)^(lambda-1) dx` over `(0, 1)`.
    ExpBeta {
        alpha: BigRational,
        lambda: BigRational,
        delta: BigRational,
    },
}

/// Closed-form (or quadrature) description of a fraction's limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    /// `offset + coeff * sqrt(radicand)`
    SqrtForm {
        offset: BigRational,
        coeff: BigRational,
        radicand: BigRational,
    },
    /// `offset + num_coeff * sqrt(num_radicand) / ln(arg)`
    LogForm {
        offset: BigRational,
        num_coeff: BigRational,
        num_radicand: BigRational,
        arg: LogArg,
    },
    /// `offset + num_coeff * sqrt(num_radicand) / atan(sqrt(atan_radicand))`
    AtanForm {
        offset: BigRational,
        num_coeff: BigRational,
        num_radicand: BigRational,
        atan_radicand: BigRational,
    },
    /// `(num.0 + num.1 e^exponent) / (den.0 + den.1 e^exponent)`
    ExpForm {
        exponent: BigRational,
        num: (BigRational, BigRational),
        den: (BigRational, BigRational),
    },
    /// `coeff * A / B` with `A, B` the seed integrals.
    QuadratureRatio {
        coeff: BigRational,
        integral: SeedIntegrals,
    },
    /// No finite value (the drifting boundary case).
    Divergent,
}

impl Target {
    pub fn kind(&self) -> &'static str {
        match self {
            Target::SqrtForm { .. } => "sqrt_form",
            Target::LogForm { .. } => "log_form",
            Target::AtanForm { .. } => "atan_form",
            Target::ExpForm { .. } => "exp_form",
            Target::QuadratureRatio { .. } => "quadrature_ratio",
            Target::Divergent => "divergent",
        }
    }

    /// True when the described value is not a real number (negative
    /// radicand): evaluation is allowed, verification is skipped.
    pub fn is_non_real(&self) -> bool {
        match self {
            Target::SqrtForm { radicand, .. } => radicand.is_negative(),
            _ => false,
        }
    }
}

fn surd_text(coeff: &BigRational, radicand: &BigRational) -> String {
    if radicand == &int(1) {
        return display_ratio(coeff);
    }
    let root = format!("sqrt({})", display_ratio(radicand));
    if coeff == &int(1) {
        root
    } else {
        format!("{}*{}", display_ratio(coeff), root)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::SqrtForm {
                offset,
                coeff,
                radicand,
            } => {
                if offset.is_zero() {
                    write!(f, "{}", surd_text(coeff, radicand))
                } else {
                    write!(f, "{} + {}", display_ratio(offset), surd_text(coeff, radicand))
                }
            }
            Target::LogForm {
                offset,
                num_coeff,
                num_radicand,
                arg,
            } => {
                let arg_text = match arg {
                    LogArg::Rational(w) => display_ratio(w),
                    LogArg::SurdRatio { p, q } => format!(
                        "(sqrt({p})+sqrt({q}))/(sqrt({p})-sqrt({q}))",
                        p = display_ratio(p),
                        q = display_ratio(q)
                    ),
                };
                if offset.is_zero() {
                    write!(f, "{}/ln({})", surd_text(num_coeff, num_radicand), arg_text)
                } else {
                    write!(
                        f,
                        "{} + {}/ln({})",
                        display_ratio(offset),
                        surd_text(num_coeff, num_radicand),
                        arg_text
                    )
                }
            }
            Target::AtanForm {
                offset,
                num_coeff,
                num_radicand,
                atan_radicand,
            } => {
                let body = format!(
                    "{}/atan(sqrt({}))",
                    surd_text(num_coeff, num_radicand),
                    display_ratio(atan_radicand)
                );
                if offset.is_zero() {
                    write!(f, "{body}")
                } else {
                    write!(f, "{} + {}", display_ratio(offset), body)
                }
            }
            Target::ExpForm { exponent, num, den } => {
                let side = |c: &(BigRational, BigRational)| -> String {
                    let e = format!("e^({})", display_ratio(exponent));
                    match (c.0.is_zero(), c.1.is_zero()) {
                        (false, true) => display_ratio(&c.0),
                        (true, false) => {
                            if c.1 == int(1) {
                                e
                            } else {
                                format!("{}*{}", display_ratio(&c.1), e)
                            }
                        }
                        _ => {
                            let coeff = if c.1 == int(1) {
                                e
                            } else {
                                format!("{}*{}", display_ratio(&c.1), e)
                            };
                            format!("{} + {}", display_ratio(&c.0), coeff)
                        }
                    }
                };
                let num_s = side(num);
                let den_s = side(den);
                if den_s == "1" {
                    write!(f, "{num_s}")
                } else {
                    write!(f, "({num_s})/({den_s})")
                }
            }
            Target::QuadratureRatio { coeff, integral } => {
                let name = match integral {
                    SeedIntegrals::PolyPower { .. } => "poly_power",
                    SeedIntegrals::BinomialOverLinear { .. } => "binomial_over_linear",
                    SeedIntegrals::ExpBeta { .. } => "exp_beta",
                };
                write!(f, "{}*A/B [{}]", display_ratio(coeff), name)
            }
            Target::Divergent => write!(f, "divergent"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("family {family}: {requirement}")]
    Domain {
        family: FamilyId,
        requirement: String,
    },
}

fn require(ok: bool, family: FamilyId, requirement: &str) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::Domain {
            family,
            requirement: requirement.to_string(),
        })
    }
}

/// A parameterized family instance: its recurrence scheme, the
/// documented head adjunction of its canonical fraction, and the target
/// its value is verified against.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub family: FamilyId,
    params: Vec<(&'static str, BigRational)>,
    pub target: Target,
    head: Option<(BigRational, BigRational)>,
    scheme: RecurrenceScheme,
}

impl FamilySpec {
    pub fn params(&self) -> &[(&'static str, BigRational)] {
        &self.params
    }

    pub fn param(&self, name: &str) -> Option<&BigRational> {
        self.params
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v)
    }

    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(n, v)| format!("{n}={}", display_ratio(v)))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn scheme(&self) -> &RecurrenceScheme {
        &self.scheme
    }

    /// The documented head `(b0, a1)` of the canonical form, if any.
    pub fn head(&self) -> Option<&(BigRational, BigRational)> {
        self.head.as_ref()
    }

    /// The fraction built straight from the recurrence rows (headless).
    pub fn raw_cf(&self) -> GeneralizedCf {
        cf_from_recurrence(&self.scheme).expect("family schemes have nonvanishing f")
    }

    /// The canonical fraction: the raw construction with the family's
    /// documented head supplied where one exists.
    pub fn cf(&self) -> GeneralizedCf {
        let raw = self.raw_cf();
        match &self.head {
            None => raw,
            Some((b0, a1)) => {
                adjoin_head(&raw, b0.clone(), a1.clone()).expect("family heads are nonzero")
            }
        }
    }
}

/// Quadratic-surd family: rows `f = k a, g = (k+1) b, h = (k+2) g`;
/// value `b + sqrt(b^2 + 4 a g)`. A negative discriminant flags the
/// target non-real; construction still succeeds and verification skips.
pub fn family_i(
    alpha: BigRational,
    beta: BigRational,
    gamma: BigRational,
) -> Result<FamilySpec, FamilyError> {
    require(!alpha.is_zero(), FamilyId::I, "alpha must be nonzero")?;
    require(!gamma.is_zero(), FamilyId::I, "gamma must be nonzero")?;
    let radicand = &beta * &beta + rat(4, 1) * &alpha * &gamma;
    let scheme = RecurrenceScheme::affine(
        AffineCoeff::new(int(0), alpha.clone()),
        AffineCoeff::new(beta.clone(), beta.clone()),
        AffineCoeff::new(&gamma * int(2), gamma.clone()),
        "A = x_root, B = x_root^2 / 2",
    );
    Ok(FamilySpec {
        family: FamilyId::I,
        params: vec![("α", alpha), ("β", beta.clone()), ("γ", gamma)],
        target: Target::SqrtForm {
            offset: beta,
            coeff: int(1),
            radicand,
        },
        head: None,
        scheme,
    })
}

/// The simplest surd form `b + e/(b + e/(b + ...))` from constant rows;
/// value `(b + sqrt(b^2 + 4 e)) / 2`.
pub fn family_i_simple(beta: BigRational, eps: BigRational) -> Result<FamilySpec, FamilyError> {
    require(!eps.is_zero(), FamilyId::ISimple, "epsilon must be nonzero")?;
    require(
        !beta.is_zero() || eps.is_positive(),
        FamilyId::ISimple,
        "beta must be nonzero or epsilon positive",
    )?;
    let radicand = &beta * &beta + rat(4, 1) * &eps;
    let scheme = RecurrenceScheme::affine(
        AffineCoeff::constant(int(1)),
        AffineCoeff::constant(beta.clone()),
        AffineCoeff::constant(eps.clone()),
        "A = 1, B = x_root (powers of the root)",
    );
    Ok(FamilySpec {
        family: FamilyId::ISimple,
        params: vec![("β", beta.clone()), ("ε", eps)],
        target: Target::SqrtForm {
            offset: beta / int(2),
            coeff: rat(1, 2),
            radicand,
        },
        head: None,
        scheme,
    })
}

fn family_ii_inner(
    family: FamilyId,
    params: Vec<(&'static str, BigRational)>,
    alpha: BigRational,
    beta: BigRational,
    target: Target,
) -> FamilySpec {
    let scheme = RecurrenceScheme::affine(
        AffineCoeff::new(int(0), alpha.clone()),
        AffineCoeff::new(alpha.clone(), &alpha - &beta),
        AffineCoeff::new(beta.clone(), beta.clone()),
        "A_k = integral of x^(k-1)/(alpha + beta x) over (0,1)",
    );
    let head = Some((alpha.clone(), &alpha * &beta));
    FamilySpec {
        family,
        params,
        target,
        head,
        scheme,
    }
}

/// Logarithm family: rows `f = k a, g = (k+1) a - k b, h = (k+1) b`,
/// head `(a, a b)`; value `b / ln((a + b)/a)`.
pub fn family_ii(alpha: BigRational, beta: BigRational) -> Result<FamilySpec, FamilyError> {
    require(alpha.is_positive(), FamilyId::II, "alpha must be positive")?;
    require(
        (&alpha + &beta).is_positive(),
        FamilyId::II,
        "alpha + beta must be positive",
    )?;
    require(!beta.is_zero(), FamilyId::II, "beta must be nonzero")?;
    let target = Target::LogForm {
        offset: int(0),
        num_coeff: beta.clone(),
        num_radicand: int(1),
        arg: LogArg::Rational((&alpha + &beta) / &alpha),
    };
    let params = vec![("α", alpha.clone()), ("β", beta.clone())];
    Ok(family_ii_inner(FamilyId::II, params, alpha, beta, target))
}

/// The `(m, n)` reparameterization of the logarithm family
/// (`a = n - m, b = 2 m`); value `2 m / ln((n + m)/(n - m))`.
pub fn family_ii_mn(m: BigRational, n: BigRational) -> Result<FamilySpec, FamilyError> {
    require(m.is_positive(), FamilyId::IIMn, "m must be positive")?;
    require(n > m, FamilyId::IIMn, "n must exceed m")?;
    let alpha = &n - &m;
    let beta = int(2) * &m;
    let target = Target::LogForm {
        offset: int(0),
        num_coeff: int(2) * &m,
        num_radicand: int(1),
        arg: LogArg::Rational((&n + &m) / (&n - &m)),
    };
    let params = vec![("m", m), ("n", n)];
    Ok(family_ii_inner(FamilyId::IIMn, params, alpha, beta, target))
}

fn family_iii_inner(
    family: FamilyId,
    params: Vec<(&'static str, BigRational)>,
    alpha: BigRational,
    beta: BigRational,
    target: Target,
) -> FamilySpec {
    let scheme = RecurrenceScheme::affine(
        AffineCoeff::new(-&alpha, int(2) * &alpha),
        AffineCoeff::new(&alpha + &beta, int(2) * (&alpha - &beta)),
        AffineCoeff::new(beta.clone(), int(2) * &beta),
        "A_k = integral of x^(2k-2)/(alpha + beta x^2) over (0,1)",
    );
    let head = Some((&alpha + &beta, &alpha * &beta));
    FamilySpec {
        family,
        params,
        target,
        head,
        scheme,
    }
}

/// Arctangent/logarithm family: rows
/// `f = (2k-1) a, g = (2k+1) a - (2k-1) b, h = (2k+1) b`, head
/// `(a + b, a b)`. For `b > 0` the value is
/// `b + sqrt(a b)/atan(sqrt(b/a))`; for `b = -g < 0` it is
/// `-g + 2 sqrt(a g)/ln((sqrt a + sqrt g)/(sqrt a - sqrt g))`, and at
/// `a = g` there is no finite value (target `divergent`).
pub fn family_iii(alpha: BigRational, beta: BigRational) -> Result<FamilySpec, FamilyError> {
    require(alpha.is_positive(), FamilyId::III, "alpha must be positive")?;
    require(!beta.is_zero(), FamilyId::III, "beta must be nonzero")?;
    let params = vec![("α", alpha.clone()), ("β", beta.clone())];
    if beta.is_positive() {
        let target = Target::AtanForm {
            offset: beta.clone(),
            num_coeff: int(1),
            num_radicand: &alpha * &beta,
            atan_radicand: &beta / &alpha,
        };
        Ok(family_iii_inner(FamilyId::III, params, alpha, beta, target))
    } else {
        let gamma = -&beta;
        let target = if alpha == gamma {
            Target::Divergent
        } else {
            require(
                alpha > gamma,
                FamilyId::IIILog,
                "alpha must exceed -beta for a real log target",
            )?;
            Target::LogForm {
                offset: beta.clone(),
                num_coeff: int(2),
                num_radicand: &alpha * &gamma,
                arg: LogArg::SurdRatio {
                    p: alpha.clone(),
                    q: gamma,
                },
            }
        };
        Ok(family_iii_inner(
            FamilyId::IIILog,
            params,
            alpha,
            beta,
            target,
        ))
    }
}

/// The `(m, n)` reparameterization of the arctangent family
/// (`a = m + n, b = n - m`); value
/// `(n - m) + sqrt(n^2 - m^2)/atan(sqrt((n - m)/(n + m)))`.
pub fn family_iii_mn(m: BigRational, n: BigRational) -> Result<FamilySpec, FamilyError> {
    require(n > m.abs(), FamilyId::III, "n must exceed |m|")?;
    let alpha = &m + &n;
    let beta = &n - &m;
    let target = Target::AtanForm {
        offset: beta.clone(),
        num_coeff: int(1),
        num_radicand: &n * &n - &m * &m,
        atan_radicand: (&n - &m) / (&n + &m),
    };
    let params = vec![("m", m), ("n", n)];
    Ok(family_iii_inner(FamilyId::III, params, alpha, beta, target))
}

/// Exponential family: rows `f = k, g = k + 1 - a, h = a`, head
/// `(1 - a, a)`; value `a / (e^a - 1)`.
pub fn family_iv(alpha: BigRational) -> Result<FamilySpec, FamilyError> {
    require(!alpha.is_zero(), FamilyId::IV, "alpha must be nonzero")?;
    let scheme = RecurrenceScheme::affine(
        AffineCoeff::new(int(0), int(1)),
        AffineCoeff::new(int(1) - &alpha, int(1)),
        AffineCoeff::constant(alpha.clone()),
        "A_k = integral of x^(k-1) e^(alpha x) over (0,1)",
    );
    Ok(FamilySpec {
        family: FamilyId::IV,
        params: vec![("α", alpha.clone())],
        target: Target::ExpForm {
            exponent: alpha.clone(),
            num: (alpha.clone(), int(0)),
            den: (int(-1), int(1)),
        },
        head: Some((int(1) - &alpha, alpha)),
        scheme,
    })
}

/// Most general polynomial-power family: rows
/// `f = (a + (k-1) t) A, g = (a + (k-1) t + L t) B, h = (a + (k-1) t + 2 L t) C`
/// for `x^(a-1) (A - B x^t - C x^(2t))^(L-1)`; value `a A Int_A / Int_B`
/// by quadrature over `(0, x_root)`.
pub fn family_v(
    a: BigRational,
    b: BigRational,
    c: BigRational,
    theta: BigRational,
    lambda: BigRational,
    alpha: BigRational,
) -> Result<FamilySpec, FamilyError> {
    require(
        a.is_positive(),
        FamilyId::V,
        "leading coefficient a must be positive (binomial positive near 0)",
    )?;
    require(!c.is_zero(), FamilyId::V, "c must be nonzero")?;
    require(theta.is_positive(), FamilyId::V, "theta must be positive")?;
    require(lambda.is_positive(), FamilyId::V, "lambda must be positive")?;
    require(alpha.is_positive(), FamilyId::V, "alpha must be positive")?;
    let disc = &b * &b + rat(4, 1) * &a * &c;
    require(
        disc.is_positive(),
        FamilyId::V,
        "b^2 + 4 a c must be positive for a real root",
    )?;
    // roots of c y^2 + b y - a: a positive root exists iff the product
    // -a/c is negative (c > 0) or the sum -b/c is positive (c < 0)
    require(
        c.is_positive() || (&b * &c).is_negative(),
        FamilyId::V,
        "no positive real root of a - b x^t - c x^(2t)",
    )?;
    let stride = |base: &BigRational, coeff: &BigRational| {
        AffineCoeff::new((&alpha - &theta + base) * coeff, &theta * coeff)
    };
    let scheme = RecurrenceScheme::affine(
        stride(&int(0), &a),
        stride(&(&lambda * &theta), &b),
        stride(&(int(2) * &lambda * &theta), &c),
        "A, B = binomial-power integrals over (0, x_root)",
    );
    let integral = SeedIntegrals::PolyPower {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        theta: theta.clone(),
        lambda: lambda.clone(),
        alpha: alpha.clone(),
    };
    Ok(FamilySpec {
        family: FamilyId::V,
        params: vec![
            ("a", a.clone()),
            ("b", b),
            ("c", c),
            ("θ", theta),
            ("λ", lambda),
            ("α", alpha.clone()),
        ],
        target: Target::QuadratureRatio {
            coeff: &alpha * &a,
            integral,
        },
        head: None,
        scheme,
    })
}

/// Binomial-over-linear family: rows
/// `f = (a + (k-1) t) A, g = (a + (k-1) t + L t) A - (a + (k-1) t) B,
/// h = (a + (k-1) t + L t) B`; value `a A Int_A / Int_B` over `(0, 1)`.
pub fn family_vi(
    a: BigRational,
    b: BigRational,
    theta: BigRational,
    lambda: BigRational,
    alpha: BigRational,
) -> Result<FamilySpec, FamilyError> {
    require(a.is_positive(), FamilyId::VI, "a must be positive")?;
    require(
        (&a + &b).is_positive(),
        FamilyId::VI,
        "a + b must be positive (denominator nonzero on (0,1])",
    )?;
    require(theta.is_positive(), FamilyId::VI, "theta must be positive")?;
    require(lambda.is_positive(), FamilyId::VI, "lambda must be positive")?;
    require(alpha.is_positive(), FamilyId::VI, "alpha must be positive")?;
    let level = AffineCoeff::new(&alpha - &theta, theta.clone()); // a + (k-1) t
    let level_l = AffineCoeff::new(&alpha - &theta + &lambda * &theta, theta.clone());
    let scheme = RecurrenceScheme::affine(
        AffineCoeff::new(&level.p * &a, &level.q * &a),
        AffineCoeff::new(
            &level_l.p * &a - &level.p * &b,
            &level_l.q * &a - &level.q * &b,
        ),
        AffineCoeff::new(&level_l.p * &b, &level_l.q * &b),
        "A, B = binomial/linear integrals over (0, 1)",
    );
    let integral = SeedIntegrals::BinomialOverLinear {
        a: a.clone(),
        b: b.clone(),
        theta: theta.clone(),
        lambda: lambda.clone(),
        alpha: alpha.clone(),
    };
    Ok(FamilySpec {
        family: FamilyId::VI,
        params: vec![
            ("a", a.clone()),
            ("b", b),
            ("θ", theta),
            ("λ", lambda),
            ("α", alpha.clone()),
        ],
        target: Target::QuadratureRatio {
            coeff: &alpha * &a,
            integral,
        },
        head: None,
        scheme,
    })
}

/// Exponential-beta family: rows `f = d + k - 1, g = d + k - 1 + L - a,
/// h = a`; value `d Int_A / Int_B` over `(0, 1)`.
pub fn family_vii(
    alpha: BigRational,
    lambda: BigRational,
    delta: BigRational,
) -> Result<FamilySpec, FamilyError> {
    require(!alpha.is_zero(), FamilyId::VII, "alpha must be nonzero")?;
    require(lambda.is_positive(), FamilyId::VII, "lambda must be positive")?;
    require(delta.is_positive(), FamilyId::VII, "delta must be positive")?;
    let scheme = RecurrenceScheme::affine(
        AffineCoeff::new(&delta - int(1), int(1)),
        AffineCoeff::new(&delta - int(1) + &lambda - &alpha, int(1)),
        AffineCoeff::constant(alpha.clone()),
        "A, B = exponential-beta integrals over (0, 1)",
    );
    let integral = SeedIntegrals::ExpBeta {
        alpha: alpha.clone(),
        lambda: lambda.clone(),
        delta: delta.clone(),
    };
    Ok(FamilySpec {
        family: FamilyId::VII,
        params: vec![("α", alpha), ("λ", lambda), ("δ", delta.clone())],
        target: Target::QuadratureRatio {
            coeff: delta,
            integral,
        },
        head: None,
        scheme,
    })
}

/// Affine-ratio scale template `(p + q k)/(r + s k)` used by recipes and
/// the CLI transform directives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleSpec {
    pub num: (BigRational, BigRational),
    pub den: (BigRational, BigRational),
}

impl ScaleSpec {
    pub fn constant(c: BigRational) -> Self {
        Self {
            num: (c, int(0)),
            den: (int(1), int(0)),
        }
    }

    pub fn to_scales(&self) -> Result<ScaleGen, TransformError> {
        ScaleGen::affine_ratio(self.num.clone(), self.den.clone())
    }
}

/// One step of a catalog recipe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransformStep {
    AdjoinHead { b0: BigRational, a1: BigRational },
    DropHead,
    Scale(ScaleSpec),
    AlternateSigns,
    ClearDenominators,
}

/// Applies a recipe left to right. `clear_depth` bounds the range over
/// which denominator clearing integralizes elements.
pub fn apply_recipe(
    cf: &GeneralizedCf,
    steps: &[TransformStep],
    clear_depth: u64,
) -> Result<GeneralizedCf, TransformError> {
    let mut cur = cf.clone();
    for step in steps {
        cur = match step {
            TransformStep::AdjoinHead { b0, a1 } => adjoin_head(&cur, b0.clone(), a1.clone())?,
            TransformStep::DropHead => drop_head(&cur)?.2,
            TransformStep::Scale(spec) => equivalence_scale(&cur, spec.to_scales()?),
            TransformStep::AlternateSigns => alternate_signs(&cur),
            TransformStep::ClearDenominators => clear_denominators(&cur, clear_depth),
        };
    }
    Ok(cur)
}

/// What `verify` checks for an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyKind {
    /// `|x_depth - target| < tol`.
    Value,
    /// Divergence must be detected within `depth` levels.
    Divergence,
    /// Stress entry: evaluation must traverse its undefined levels and
    /// reach `depth` without error; no value is asserted (the displayed
    /// identity is formal, its convergents drift to 0).
    Traversal,
}

#[derive(Debug, Clone)]
pub struct VerifySchedule {
    pub depth: u64,
    pub tol: BigRational,
    pub kind: VerifyKind,
}

/// A named identity: family instance, the transform recipe producing the
/// displayed form, the displayed form's own target, and the tolerance
/// schedule verification runs at.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub family: FamilySpec,
    pub recipe: Vec<TransformStep>,
    pub target: Target,
    pub verify: VerifySchedule,
    pub note: &'static str,
}

impl CatalogEntry {
    /// The displayed fraction: the family's canonical form with the
    /// recipe applied.
    pub fn cf(&self) -> GeneralizedCf {
        apply_recipe(&self.family.cf(), &self.recipe, self.verify.depth.max(64))
            .expect("catalog recipes apply cleanly")
    }
}

fn tol(num: i64, pow10: u32) -> BigRational {
    rat(num, 1) / int(10).pow(pow10 as i32)
}

fn value_schedule(depth: u64, t: BigRational) -> VerifySchedule {
    VerifySchedule {
        depth,
        tol: t,
        kind: VerifyKind::Value,
    }
}

fn scale_inv_k_plus_1() -> TransformStep {
    TransformStep::Scale(ScaleSpec {
        num: (int(1), int(0)),
        den: (int(1), int(1)),
    })
}

fn scale_const(c: BigRational) -> TransformStep {
    TransformStep::Scale(ScaleSpec::constant(c))
}

fn build_catalog() -> Vec<CatalogEntry> {
    let mut entries = Vec::new();
    let mut push = |name: &'static str,
                    family: FamilySpec,
                    recipe: Vec<TransformStep>,
                    target: Option<Target>,
                    verify: VerifySchedule,
                    note: &'static str| {
        let target = target.unwrap_or_else(|| family.target.clone());
        entries.push(CatalogEntry {
            name,
            family,
            recipe,
            target,
            verify,
            note,
        });
    };

    // --- quadratic surds ---
    push(
        "sqrt_family_raw",
        family_i(int(1), int(1), int(1)).unwrap(),
        vec![],
        None,
        value_schedule(200, tol(1, 30)),
        "2 + 6/(3 + 12/(4 + 20/(5 + ...))) = 1 + sqrt 5",
    );
    push(
        "sqrt_head_form",
        family_i(int(1), int(1), rat(1, 2)).unwrap(),
        vec![TransformStep::AdjoinHead {
            b0: int(1),
            a1: int(1),
        }],
        Some(Target::SqrtForm {
            offset: rat(1, 2),
            coeff: rat(1, 2),
            radicand: int(3),
        }),
        value_schedule(200, tol(1, 30)),
        "head supplied: 1 + 1/(2 + 3/(3 + 6/(4 + ...))) = (1 + sqrt 3)/2",
    );
    push(
        "sqrt_depressed",
        family_i(int(1), int(1), int(1)).unwrap(),
        vec![
            TransformStep::AdjoinHead {
                b0: int(1),
                a1: int(2),
            },
            scale_inv_k_plus_1(),
        ],
        Some(Target::SqrtForm {
            offset: rat(1, 2),
            coeff: rat(1, 2),
            radicand: int(5),
        }),
        value_schedule(200, tol(1, 30)),
        "depressed level by level to 1 + 1/(1 + 1/(1 + ...))",
    );
    push(
        "simple_powers_sqrt",
        family_i_simple(int(1), int(2)).unwrap(),
        vec![],
        None,
        value_schedule(200, tol(1, 30)),
        "constant rows: 1 + 2/(1 + 2/(1 + ...)) = 2",
    );
    push(
        "golden_ratio",
        family_i_simple(int(1), int(1)).unwrap(),
        vec![],
        None,
        value_schedule(200, tol(1, 30)),
        "1 + 1/(1 + 1/(1 + ...)) = (1 + sqrt 5)/2",
    );

    // --- logarithms ---
    push(
        "log2_reciprocal",
        family_ii(int(1), int(1)).unwrap(),
        vec![],
        None,
        value_schedule(2000, tol(1, 3)),
        "1 + 1/(1 + 4/(1 + 9/(1 + 16/(1 + ...)))) = 1/ln 2",
    );
    push(
        "log3_stress",
        family_ii(int(1), int(2)).unwrap(),
        vec![],
        None,
        VerifySchedule {
            depth: 2000,
            tol: tol(1, 3),
            kind: VerifyKind::Traversal,
        },
        "zero and negative denominators; kept as a q=0 traversal stress case",
    );
    push(
        "log2_m1_n3",
        family_ii_mn(int(1), int(3)).unwrap(),
        vec![],
        None,
        value_schedule(2000, tol(2, 3)),
        "2 + 4/(2 + 16/(2 + 36/(2 + ...))) = 2/ln 2",
    );
    push(
        "log2_m1_n3_halved",
        family_ii_mn(int(1), int(3)).unwrap(),
        vec![
            TransformStep::DropHead,
            TransformStep::AdjoinHead {
                b0: int(1),
                a1: int(2),
            },
            scale_const(rat(1, 2)),
        ],
        Some(Target::LogForm {
            offset: int(0),
            num_coeff: int(1),
            num_radicand: int(1),
            arg: LogArg::Rational(int(2)),
        }),
        value_schedule(2000, tol(1, 3)),
        "divided by 2 and reduced: recovers the 1/ln 2 display",
    );
    push(
        "log_5_over_2",
        family_ii_mn(int(1), int(4)).unwrap(),
        vec![],
        None,
        value_schedule(500, tol(1, 6)),
        "3 + 6/(4 + 24/(5 + 54/(6 + ...))) = 2/ln(5/2)",
    );
    push(
        "log_3_over_2",
        family_ii_mn(int(1), int(5)).unwrap(),
        vec![],
        None,
        value_schedule(500, tol(1, 6)),
        "4 + 8/(6 + 32/(8 + 72/(10 + ...))) = 2/ln(3/2)",
    );
    push(
        "log_3_over_2_halved",
        family_ii_mn(int(1), int(5)).unwrap(),
        vec![
            TransformStep::DropHead,
            TransformStep::AdjoinHead {
                b0: int(2),
                a1: int(4),
            },
            scale_const(rat(1, 2)),
        ],
        Some(Target::LogForm {
            offset: int(0),
            num_coeff: int(1),
            num_radicand: int(1),
            arg: LogArg::Rational(rat(3, 2)),
        }),
        value_schedule(500, tol(1, 6)),
        "halved: 2 + 2/(3 + 8/(4 + 18/(5 + ...))) = 1/ln(3/2)",
    );

    // --- arctangents and surd logs ---
    push(
        "brouncker_4_over_pi",
        family_iii(int(1), int(1)).unwrap(),
        vec![
            TransformStep::DropHead,
            TransformStep::AdjoinHead {
                b0: int(1),
                a1: int(1),
            },
        ],
        Some(Target::AtanForm {
            offset: int(0),
            num_coeff: int(1),
            num_radicand: int(1),
            atan_radicand: int(1),
        }),
        value_schedule(1000, tol(2, 3)),
        "1 + 1/(2 + 9/(2 + 25/(2 + ...))) = 4/pi",
    );
    push(
        "six_sqrt3_over_pi",
        family_iii(int(3), int(1)).unwrap(),
        vec![],
        None,
        value_schedule(2000, tol(1, 8)),
        "4 + 3/(8 + 27/(12 + 75/(16 + ...))) = 1 + 6 sqrt 3/pi",
    );
    push(
        "atan_mn_form",
        family_iii_mn(int(1), int(2)).unwrap(),
        vec![],
        None,
        value_schedule(2000, tol(1, 8)),
        "the (m, n) form at m=1, n=2; element-for-element the same fraction",
    );
    push(
        "log_surd_general",
        family_iii(int(2), int(-1)).unwrap(),
        vec![],
        None,
        value_schedule(500, tol(1, 6)),
        "negative beta: value by logarithms of surds",
    );
    push(
        "log3_from_surd",
        family_iii(int(4), int(-1)).unwrap(),
        vec![],
        None,
        value_schedule(2000, tol(1, 6)),
        "3 - 4/(13 - 36/(23 - 100/(33 - ...))) = -1 + 4/ln 3",
    );
    push(
        "log2_from_surd",
        family_iii(int(9), int(-1)).unwrap(),
        vec![],
        None,
        value_schedule(2000, tol(1, 6)),
        "8 - 9/(28 - 81/(48 - 225/(68 - ...))) = -1 + 6/ln 2",
    );
    push(
        "log_divergent_alpha_eq_gamma",
        family_iii(int(1), int(-1)).unwrap(),
        vec![],
        None,
        VerifySchedule {
            depth: 256,
            tol: tol(1, 12),
            kind: VerifyKind::Divergence,
        },
        "alpha = gamma: no finite value; divergence must be detected",
    );

    // --- exponentials ---
    push(
        "exp_head_form",
        family_iv(int(3)).unwrap(),
        vec![],
        None,
        value_schedule(200, tol(1, 30)),
        "-2 + 3/(-1 + 6/(0 + 9/(1 + ...))) = 3/(e^3 - 1)",
    );
    push(
        "inv_e_minus_1",
        family_iv(int(1)).unwrap(),
        vec![],
        None,
        value_schedule(200, tol(1, 30)),
        "0 + 1/(1 + 2/(2 + 3/(3 + ...))) = 1/(e - 1)",
    );
    push(
        "e_minus_1_unit_numerators",
        family_iv(int(1)).unwrap(),
        vec![TransformStep::DropHead, scale_inv_k_plus_1()],
        Some(Target::ExpForm {
            exponent: int(1),
            num: (int(-1), int(1)),
            den: (int(1), int(0)),
        }),
        value_schedule(200, tol(1, 30)),
        "1 + (1/1)/(1 + (1/2)/(1 + (1/3)/(1 + ...))) = e - 1",
    );
    push(
        "e_minus_1_cleared",
        family_iv(int(1)).unwrap(),
        vec![
            TransformStep::DropHead,
            scale_inv_k_plus_1(),
            TransformStep::ClearDenominators,
        ],
        Some(Target::ExpForm {
            exponent: int(1),
            num: (int(-1), int(1)),
            den: (int(1), int(0)),
        }),
        value_schedule(200, tol(1, 30)),
        "resolved by partial fractions: 1 + 1/(1 + 1/(2 + 2/(3 + ...)))",
    );
    push(
        "inv_e_minus_2",
        family_iv(int(1)).unwrap(),
        vec![
            TransformStep::DropHead,
            scale_inv_k_plus_1(),
            TransformStep::ClearDenominators,
            TransformStep::DropHead,
        ],
        Some(Target::ExpForm {
            exponent: int(1),
            num: (int(1), int(0)),
            den: (int(-2), int(1)),
        }),
        value_schedule(200, tol(1, 30)),
        "1 + 1/(2 + 2/(3 + 3/(4 + ...))) = 1/(e - 2)",
    );
    push(
        "euler_e",
        family_iv(int(1)).unwrap(),
        vec![
            TransformStep::DropHead,
            scale_inv_k_plus_1(),
            TransformStep::ClearDenominators,
            TransformStep::DropHead,
            TransformStep::AdjoinHead {
                b0: int(2),
                a1: int(1),
            },
        ],
        Some(Target::ExpForm {
            exponent: int(1),
            num: (int(0), int(1)),
            den: (int(1), int(0)),
        }),
        value_schedule(200, tol(1, 30)),
        "e = 2 + 1/(1 + 1/(2 + 2/(3 + 3/(4 + ...))))",
    );
    push(
        "exp2_zero_denominator",
        family_iv(int(2)).unwrap(),
        vec![],
        None,
        value_schedule(200, tol(1, 20)),
        "-1 + 2/(0 + 4/(1 + 6/(2 + ...))) = 2/(e^2 - 1); q_1 = 0 en route",
    );
    push(
        "e_over_e_minus_1",
        family_iv(int(-1)).unwrap(),
        vec![],
        None,
        value_schedule(200, tol(1, 30)),
        "2 - 1/(3 - 2/(4 - 3/(5 - ...))) = e/(e - 1)",
    );
    push(
        "e_over_e_minus_1_altsign",
        family_iv(int(-1)).unwrap(),
        vec![TransformStep::AlternateSigns],
        None,
        value_schedule(200, tol(1, 30)),
        "signs traded: 2 + 1/(-3 + 2/(4 + 3/(-5 + ...)))",
    );
    push(
        "inv_sqrt_e_minus_1",
        family_iv(rat(1, 2)).unwrap(),
        vec![
            TransformStep::DropHead,
            TransformStep::AdjoinHead {
                b0: int(1),
                a1: int(1),
            },
            TransformStep::ClearDenominators,
        ],
        Some(Target::ExpForm {
            exponent: rat(1, 2),
            num: (int(1), int(0)),
            den: (int(-1), int(1)),
        }),
        value_schedule(200, tol(1, 30)),
        "doubled and cleared: 1 + 2/(3 + 4/(5 + 6/(7 + 8/(9 + ...))))",
    );
    push(
        "inv_cbrt_e_minus_1",
        family_iv(rat(1, 3)).unwrap(),
        vec![
            TransformStep::DropHead,
            TransformStep::AdjoinHead {
                b0: int(2),
                a1: int(1),
            },
            // the displayed form scales every level by 3 (not the
            // minimal content-1 clearing, which would shrink level 2)
            scale_const(int(3)),
        ],
        Some(Target::ExpForm {
            exponent: rat(1, 3),
            num: (int(1), int(0)),
            den: (int(-1), int(1)),
        }),
        value_schedule(200, tol(1, 30)),
        "tripled and cleared: 2 + 3/(5 + 6/(8 + 9/(11 + 12/(14 + ...))))",
    );
    push(
        "two_over_cbrt_e2_minus_1",
        family_iv(rat(2, 3)).unwrap(),
        vec![
            TransformStep::DropHead,
            TransformStep::AdjoinHead {
                b0: int(1),
                a1: int(2),
            },
            scale_const(int(3)),
        ],
        Some(Target::ExpForm {
            exponent: rat(2, 3),
            num: (int(2), int(0)),
            den: (int(-1), int(1)),
        }),
        value_schedule(200, tol(1, 30)),
        "tripled and cleared: 1 + 6/(4 + 12/(7 + 18/(10 + 24/(13 + ...))))",
    );

    // --- quadrature-backed generalizations ---
    push(
        "general_v",
        family_v(int(2), int(1), int(1), int(1), int(2), int(1)).unwrap(),
        vec![],
        None,
        value_schedule(200, tol(1, 8)),
        "3 + 20/(4 + 36/(5 + 56/(6 + ...))) = 2 Int_A/Int_B = 28/5",
    );
    push(
        "general_vi",
        family_vi(int(1), int(0), int(1), int(2), int(1)).unwrap(),
        vec![],
        None,
        value_schedule(10, tol(1, 8)),
        "b = 0 degenerates to the exact depth-0 value 3 (beta integrals)",
    );
    push(
        "general_vi_log",
        family_vi(int(1), int(1), int(1), int(1), int(1)).unwrap(),
        vec![],
        None,
        // headless form converges harmonically (~2.7e-3 at depth 2000)
        value_schedule(2000, tol(5, 3)),
        "raw headless log form: value ln 2/(1 - ln 2) by quadrature",
    );
    push(
        "general_vii_singular",
        family_vii(int(1), rat(1, 2), rat(1, 2)).unwrap(),
        vec![],
        None,
        value_schedule(200, tol(1, 8)),
        "endpoint-singular seeds, value by double-exponential quadrature",
    );
    push(
        "general_vii",
        family_vii(int(-1), int(3), int(2)).unwrap(),
        vec![],
        None,
        value_schedule(200, tol(1, 8)),
        "6 - 3/(7 - 4/(8 - 5/(9 - ...))) = 2 Int_A/Int_B",
    );

    entries
}

/// The full named catalog, in stable order.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// Catalog entry by name.
pub fn catalog_entry(name: &str) -> Option<&'static CatalogEntry> {
    catalog().iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::{convergents, GeneralizedCf};

    fn elements(cf: &GeneralizedCf, n: u64) -> Vec<(BigRational, BigRational)> {
        (1..=n)
            .map(|k| {
                let e = cf.element(k).expect("element in range");
                (e.a, e.b)
            })
            .collect()
    }

    fn int_pairs(pairs: &[(i64, i64)]) -> Vec<(BigRational, BigRational)> {
        pairs.iter().map(|(a, b)| (int(*a), int(*b))).collect()
    }

    #[test]
    fn family_i_display_rows() {
        let spec = family_i(int(1), int(1), int(1)).unwrap();
        let cf = spec.cf();
        assert_eq!(cf.b0(), &int(2));
        assert_eq!(
            elements(&cf, 4),
            int_pairs(&[(6, 3), (12, 4), (20, 5), (30, 6)])
        );
        // beta = 0 is a legal target (sqrt 4 = 2) even though the
        // fraction itself degenerates; only the descriptor is checked
        let sym = family_i(int(1), int(0), int(1)).unwrap();
        assert_eq!(
            sym.target,
            Target::SqrtForm {
                offset: int(0),
                coeff: int(1),
                radicand: int(4)
            }
        );
        assert!(family_i(int(0), int(1), int(1)).is_err());
        assert!(family_i(int(1), int(1), int(0)).is_err());
        // negative discriminant: constructible, flagged non-real
        let nonreal = family_i(int(-1), int(1), int(1)).unwrap();
        assert!(nonreal.target.is_non_real());
    }

    #[test]
    fn family_i_simple_forms() {
        let golden = family_i_simple(int(1), int(1)).unwrap();
        let cf = golden.cf();
        assert_eq!(cf.b0(), &int(1));
        assert_eq!(elements(&cf, 3), int_pairs(&[(1, 1), (1, 1), (1, 1)]));
        // double root: target exactly 1
        let spec = family_i_simple(int(2), int(-1)).unwrap();
        match &spec.target {
            Target::SqrtForm {
                offset,
                coeff,
                radicand,
            } => {
                assert_eq!(offset, &int(1));
                assert_eq!(coeff, &rat(1, 2));
                assert_eq!(radicand, &int(0));
            }
            t => panic!("unexpected target {t:?}"),
        }
        let convs = convergents(&spec.cf(), 3);
        assert_eq!(convs[0].value().unwrap(), &int(2));
        assert_eq!(convs[1].value().unwrap(), &rat(3, 2));
        assert_eq!(convs[2].value().unwrap(), &rat(4, 3));
        assert!(family_i_simple(int(0), int(-1)).is_err());
    }

    #[test]
    fn family_ii_head_and_stress_forms() {
        let spec = family_ii(int(1), int(1)).unwrap();
        let cf = spec.cf();
        assert_eq!(cf.b0(), &int(1));
        assert_eq!(
            elements(&cf, 4),
            int_pairs(&[(1, 1), (4, 1), (9, 1), (16, 1)])
        );

        // n = 2: zero and negative partial denominators
        let stress = family_ii(int(1), int(2)).unwrap();
        let cf = stress.cf();
        assert_eq!(cf.b0(), &int(1));
        assert_eq!(
            elements(&cf, 5),
            int_pairs(&[(2, 0), (8, -1), (18, -2), (32, -3), (50, -4)])
        );

        assert!(family_ii(int(-1), int(1)).is_err());
        assert!(family_ii(int(1), int(-1)).is_err()); // alpha + beta = 0
        assert!(family_ii(int(1), int(0)).is_err());
    }

    #[test]
    fn family_ii_mn_special_cases() {
        // m=1, n=4: 3 + 6/(4 + 24/(5 + 54/(6 + 96/(7 + ...))))
        let spec = family_ii_mn(int(1), int(4)).unwrap();
        let cf = spec.cf();
        assert_eq!(cf.b0(), &int(3));
        assert_eq!(
            elements(&cf, 4),
            int_pairs(&[(6, 4), (24, 5), (54, 6), (96, 7)])
        );
        // m=1, n=5: 4 + 8/(6 + 32/(8 + 72/(10 + 128/(12 + ...))))
        let spec = family_ii_mn(int(1), int(5)).unwrap();
        let cf = spec.cf();
        assert_eq!(cf.b0(), &int(4));
        assert_eq!(
            elements(&cf, 4),
            int_pairs(&[(8, 6), (32, 8), (72, 10), (128, 12)])
        );
        assert!(family_ii_mn(int(2), int(2)).is_err());
        assert!(family_ii_mn(int(-1), int(3)).is_err());
    }

    #[test]
    fn family_iii_branches() {
        // Brouncker parameters
        let spec = family_iii(int(1), int(1)).unwrap();
        assert_eq!(spec.family, FamilyId::III);
        let cf = spec.cf();
        assert_eq!(cf.b0(), &int(2));
        assert_eq!(
            elements(&cf, 4),
            int_pairs(&[(1, 2), (9, 2), (25, 2), (49, 2)])
        );

        // alpha=3: 4 + 3/(8 + 27/(12 + 75/(16 + ...)))
        let spec = family_iii(int(3), int(1)).unwrap();
        let cf = spec.cf();
        assert_eq!(cf.b0(), &int(4));
        assert_eq!(
            elements(&cf, 4),
            int_pairs(&[(3, 8), (27, 12), (75, 16), (147, 20)])
        );

        // alpha=4, beta=-1: 3 - 4/(13 - 36/(23 - 100/(33 - ...)))
        let spec = family_iii(int(4), int(-1)).unwrap();
        assert_eq!(spec.family, FamilyId::IIILog);
        let cf = spec.cf();
        assert_eq!(cf.b0(), &int(3));
        assert_eq!(
            elements(&cf, 4),
            int_pairs(&[(-4, 13), (-36, 23), (-100, 33), (-196, 43)])
        );

        // alpha=9, beta=-1: 8 - 9/(28 - 81/(48 - ...))
        let spec = family_iii(int(9), int(-1)).unwrap();
        let cf = spec.cf();
        assert_eq!(cf.b0(), &int(8));
        assert_eq!(
            elements(&cf, 3),
            int_pairs(&[(-9, 28), (-81, 48), (-225, 68)])
        );

        // divergent boundary and the non-real side of it
        let div = family_iii(int(1), int(-1)).unwrap();
        assert_eq!(div.target, Target::Divergent);
        assert!(family_iii(int(1), int(-2)).is_err());
        assert!(family_iii(int(1), int(0)).is_err());
    }

    #[test]
    fn family_iii_mn_matches_direct_parameters() {
        // m=0, n=1 reduces to the Brouncker case alpha = beta = 1
        let mn = family_iii_mn(int(0), int(1)).unwrap();
        let direct = family_iii(int(1), int(1)).unwrap();
        assert!(mn.cf().structurally_equal(&direct.cf(), 30));
        // m=1, n=2 equals family III(3, 1) elementwise
        let mn = family_iii_mn(int(1), int(2)).unwrap();
        let direct = family_iii(int(3), int(1)).unwrap();
        assert!(mn.cf().structurally_equal(&direct.cf(), 50));
        assert!(family_iii_mn(int(2), int(1)).is_err());
    }

    #[test]
    fn family_iv_special_cases() {
        // alpha=1: 0 + 1/(1 + 2/(2 + 3/(3 + ...)))
        let cf = family_iv(int(1)).unwrap().cf();
        assert_eq!(cf.b0(), &int(0));
        assert_eq!(
            elements(&cf, 4),
            int_pairs(&[(1, 1), (2, 2), (3, 3), (4, 4)])
        );
        // alpha=2: -1 + 2/(0 + 4/(1 + 6/(2 + ...)))
        let cf = family_iv(int(2)).unwrap().cf();
        assert_eq!(cf.b0(), &int(-1));
        assert_eq!(
            elements(&cf, 4),
            int_pairs(&[(2, 0), (4, 1), (6, 2), (8, 3)])
        );
        // alpha=-1: 2 - 1/(3 - 2/(4 - 3/(5 - ...)))
        let cf = family_iv(int(-1)).unwrap().cf();
        assert_eq!(cf.b0(), &int(2));
        assert_eq!(
            elements(&cf, 4),
            int_pairs(&[(-1, 3), (-2, 4), (-3, 5), (-4, 6)])
        );
        // alpha=1/2: 1/2 + (1/2)/(3/2 + 1/(5/2 + (3/2)/(7/2 + ...)))
        let cf = family_iv(rat(1, 2)).unwrap().cf();
        assert_eq!(cf.b0(), &rat(1, 2));
        let e = elements(&cf, 4);
        assert_eq!(
            e,
            vec![
                (rat(1, 2), rat(3, 2)),
                (int(1), rat(5, 2)),
                (rat(3, 2), rat(7, 2)),
                (int(2), rat(9, 2)),
            ]
        );
        assert!(family_iv(int(0)).is_err());
    }

    #[test]
    fn family_v_rows_follow_the_general_rule() {
        let spec = family_v(int(2), int(1), int(1), int(1), int(2), int(1)).unwrap();
        let cf = spec.cf();
        // f_k = 2k, g_k = k+2, h_k = k+4:
        // b0 = 3, a_k = 2(k+1)(k+4), b_k = k+3
        assert_eq!(cf.b0(), &int(3));
        assert_eq!(
            elements(&cf, 4),
            int_pairs(&[(20, 4), (36, 5), (56, 6), (80, 7)])
        );
        match &spec.target {
            Target::QuadratureRatio { coeff, .. } => assert_eq!(coeff, &int(2)),
            t => panic!("unexpected target {t:?}"),
        }
        // no positive root: a - b x - c x^2 with all positive roots negative
        assert!(family_v(int(1), int(2), int(-1), int(1), int(1), int(1)).is_err());
        assert!(family_v(int(-1), int(1), int(1), int(1), int(1), int(1)).is_err());
    }

    #[test]
    fn family_vi_degenerate_and_generic() {
        // b = 0: h vanishes identically, the fraction is its exact
        // depth-0 value g_1 = (alpha + lambda theta) a = 3
        let spec = family_vi(int(1), int(0), int(1), int(2), int(1)).unwrap();
        let cf = spec.cf();
        assert_eq!(cf.depth_hint(), Some(0));
        assert_eq!(cf.b0(), &int(3));

        let spec = family_vi(int(1), int(1), int(1), int(1), int(1)).unwrap();
        let cf = spec.cf();
        // reproduces the log-family rows at (alpha, beta) = (a, b)
        let log_form = family_ii(int(1), int(1)).unwrap();
        assert!(cf.structurally_equal(&log_form.raw_cf(), 40));
        assert!(family_vi(int(1), int(-1), int(1), int(1), int(1)).is_err());
    }

    #[test]
    fn family_vii_rows() {
        let spec = family_vii(int(-1), int(3), int(2)).unwrap();
        let cf = spec.cf();
        // f_k = k+1, g_k = k+5, h_k = -1: b0 = 6, a_k = -(k+2), b_k = k+6
        assert_eq!(cf.b0(), &int(6));
        assert_eq!(
            elements(&cf, 3),
            int_pairs(&[(-3, 7), (-4, 8), (-5, 9)])
        );
        assert!(family_vii(int(0), int(1), int(1)).is_err());
        assert!(family_vii(int(1), int(0), int(1)).is_err());
        assert!(family_vii(int(1), int(1), rat(-1, 2)).is_err());
    }

    #[test]
    fn specialization_coherence() {
        // V(theta=1, lambda=1) vs I at (a, b, c): schemes match elementwise
        let v = family_v(int(2), int(3), int(1), int(1), int(1), int(1)).unwrap();
        let i = family_i(int(2), int(3), int(1)).unwrap();
        for k in 1..=50 {
            assert_eq!(v.scheme().triple(k), i.scheme().triple(k), "level {k}");
        }
        // VI(theta=1, lambda=1) vs II
        let vi = family_vi(int(1), int(2), int(1), int(1), int(1)).unwrap();
        let ii = family_ii(int(1), int(2)).unwrap();
        for k in 1..=50 {
            assert_eq!(vi.scheme().triple(k), ii.scheme().triple(k), "level {k}");
        }
        // VI(theta=2, lambda=1, a=1, b=1) vs III(1, 1)
        let vi = family_vi(int(1), int(1), int(2), int(1), int(1)).unwrap();
        let iii = family_iii(int(1), int(1)).unwrap();
        for k in 1..=50 {
            assert_eq!(vi.scheme().triple(k), iii.scheme().triple(k), "level {k}");
        }
        // VII(delta=1, lambda=1) vs IV
        let vii = family_vii(rat(3, 2), int(1), int(1)).unwrap();
        let iv = family_iv(rat(3, 2)).unwrap();
        for k in 1..=50 {
            assert_eq!(vii.scheme().triple(k), iv.scheme().triple(k), "level {k}");
        }
    }

    #[test]
    fn catalog_is_complete_and_stable() {
        let cat = catalog();
        assert!(cat.len() >= 22, "catalog has {} entries", cat.len());
        // stable, unique, snake-case names
        let mut names: Vec<_> = cat.iter().map(|e| e.name).collect();
        let total = names.len();
        names.dedup();
        assert_eq!(names.len(), total);
        for name in &names {
            assert!(name
                .chars()
                .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_'));
        }
        for required in [
            "brouncker_4_over_pi",
            "euler_e",
            "golden_ratio",
            "log2_reciprocal",
            "sqrt_head_form",
            "log_divergent_alpha_eq_gamma",
        ] {
            assert!(catalog_entry(required).is_some(), "missing {required}");
        }
    }

    #[test]
    fn euler_e_recipe_produces_the_display() {
        let entry = catalog_entry("euler_e").unwrap();
        let cf = entry.cf();
        assert_eq!(cf.b0(), &int(2));
        assert_eq!(
            elements(&cf, 5),
            int_pairs(&[(1, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
        );
    }

    #[test]
    fn brouncker_recipe_matches_display_to_depth_10() {
        let entry = catalog_entry("brouncker_4_over_pi").unwrap();
        let cf = entry.cf();
        assert_eq!(cf.b0(), &int(1));
        for k in 1..=10u64 {
            let e = cf.element(k).unwrap();
            assert_eq!(e.a, int(((2 * k - 1) * (2 * k - 1)) as i64));
            assert_eq!(e.b, int(2));
        }
    }

    #[test]
    fn cleared_exponential_recipes_match_displays() {
        let cf = catalog_entry("inv_sqrt_e_minus_1").unwrap().cf();
        assert_eq!(cf.b0(), &int(1));
        assert_eq!(
            elements(&cf, 5),
            int_pairs(&[(2, 3), (4, 5), (6, 7), (8, 9), (10, 11)])
        );

        let cf = catalog_entry("inv_cbrt_e_minus_1").unwrap().cf();
        assert_eq!(cf.b0(), &int(2));
        assert_eq!(
            elements(&cf, 4),
            int_pairs(&[(3, 5), (6, 8), (9, 11), (12, 14)])
        );

        let cf = catalog_entry("two_over_cbrt_e2_minus_1").unwrap().cf();
        assert_eq!(cf.b0(), &int(1));
        assert_eq!(
            elements(&cf, 4),
            int_pairs(&[(6, 4), (12, 7), (18, 10), (24, 13)])
        );

        let cf = catalog_entry("inv_e_minus_2").unwrap().cf();
        assert_eq!(cf.b0(), &int(1));
        assert_eq!(
            elements(&cf, 4),
            int_pairs(&[(1, 2), (2, 3), (3, 4), (4, 5)])
        );
    }

    #[test]
    fn halved_log_recipe_equals_the_reciprocal_display() {
        // 2/ln 2 halved and reduced must equal the 1/ln 2 fraction
        let halved = catalog_entry("log2_m1_n3_halved").unwrap().cf();
        let direct = catalog_entry("log2_reciprocal").unwrap().cf();
        assert!(halved.structurally_equal(&direct, 40));

        let halved = catalog_entry("log_3_over_2_halved").unwrap().cf();
        assert_eq!(halved.b0(), &int(2));
        assert_eq!(
            elements(&halved, 4),
            int_pairs(&[(2, 3), (8, 4), (18, 5), (32, 6)])
        );
    }

    #[test]
    fn depressed_sqrt_recipe_equals_golden() {
        let depressed = catalog_entry("sqrt_depressed").unwrap().cf();
        let golden = catalog_entry("golden_ratio").unwrap().cf();
        assert!(depressed.structurally_equal(&golden, 30));
    }

    #[test]
    fn sqrt_head_recipe_display() {
        let cf = catalog_entry("sqrt_head_form").unwrap().cf();
        assert_eq!(cf.b0(), &int(1));
        // 1 + 1/(2 + 3d/(3 + 6d/(4 + 10d/(5 + ...)))) at d = 1
        let want: Vec<(BigRational, BigRational)> = vec![
            (int(1), int(2)),
            (int(3), int(3)),
            (int(6), int(4)),
            (int(10), int(5)),
            (int(15), int(6)),
        ];
        assert_eq!(elements(&cf, 5), want);
    }

    #[test]
    fn family_id_parsing() {
        assert_eq!(FamilyId::parse("III"), Some(FamilyId::III));
        assert_eq!(FamilyId::parse("family_VII"), Some(FamilyId::VII));
        assert_eq!(FamilyId::parse("i_simple"), Some(FamilyId::ISimple));
        assert_eq!(FamilyId::parse("ii_mn"), Some(FamilyId::IIMn));
        assert_eq!(FamilyId::parse("nope"), None);
    }
}
