//! From three-term recurrences to continued fractions.
//!
//! Given a sequence `A_1, A_2, A_3, ...` in which consecutive terms are
//! linked by coefficient rows `(f_k, g_k, h_k)`,
//!
//! ```text
//! f_k A_k = g_k A_{k+1} + h_k A_{k+2},        k = 1, 2, 3, ...
//! ```
//!
//! the ratio `f_1 A_1 / A_2` unfolds into the generalized continued
//! fraction with `b_0 = g_1`, `a_k = f_{k+1} h_k`, `b_k = g_{k+1}`. Its
//! limit, when it exists, is determined by the first two terms alone.
//!
//! Every scheme in this crate's families is affine in the level index
//! (`p + q*k` with rational `p, q`), which is also what CLI scheme files
//! provide; custom generators remain available for tests and
//! instrumentation. The seeds `A_1, A_2` are deliberately metadata at
//! this layer - the fraction is well-defined without them and the oracle
//! resolves them later (some families have non-elementary seeds).

use std::sync::Arc;

use num_traits::Zero;

use crate::cf::{CfElement, GeneralizedCf};
use crate::rational::{affine_eval, affine_integer_root_at_least, BigRational};

/// One row of the recurrence: `f A_k = g A_{k+1} + h A_{k+2}` at level `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTriple {
    pub k: u64,
    pub f: BigRational,
    pub g: BigRational,
    pub h: BigRational,
}

/// Affine coefficient template `p + q*k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineCoeff {
    pub p: BigRational,
    pub q: BigRational,
}

impl AffineCoeff {
    pub fn new(p: BigRational, q: BigRational) -> Self {
        Self { p, q }
    }

    pub fn constant(p: BigRational) -> Self {
        Self {
            p,
            q: BigRational::zero(),
        }
    }

    pub fn eval(&self, k: u64) -> BigRational {
        affine_eval(&self.p, &self.q, k)
    }

    fn is_identically_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// Smallest integer root `k >= from`, if any.
    fn root_at_least(&self, from: u64) -> Option<u64> {
        affine_integer_root_at_least(&self.p, &self.q, from)
    }
}

type TripleFn = Arc<dyn Fn(u64) -> CoefficientTriple + Send + Sync>;

#[derive(Clone)]
struct AffineRows {
    f: AffineCoeff,
    g: AffineCoeff,
    h: AffineCoeff,
}

#[derive(Clone)]
enum Triples {
    Affine(Box<AffineRows>),
    Custom(TripleFn),
}

/// Generator of coefficient rows plus a textual note describing where
/// the seed terms `A_1, A_2` come from.
#[derive(Clone)]
pub struct RecurrenceScheme {
    triples: Triples,
    seed_descriptor: String,
}

impl std::fmt::Debug for RecurrenceScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let t1 = self.triple(1);
        write!(
            f,
            "RecurrenceScheme(f1={}, g1={}, h1={}; seeds: {})",
            t1.f, t1.g, t1.h, self.seed_descriptor
        )
    }
}

impl RecurrenceScheme {
    pub fn affine(
        f: AffineCoeff,
        g: AffineCoeff,
        h: AffineCoeff,
        seed_descriptor: impl Into<String>,
    ) -> Self {
        Self {
            triples: Triples::Affine(Box::new(AffineRows { f, g, h })),
            seed_descriptor: seed_descriptor.into(),
        }
    }

    /// Custom generator for tests and instrumentation. The generator
    /// must be pure and return the queried level in `.k`.
    pub fn from_fn(
        triples: impl Fn(u64) -> CoefficientTriple + Send + Sync + 'static,
        seed_descriptor: impl Into<String>,
    ) -> Self {
        Self {
            triples: Triples::Custom(Arc::new(triples)),
            seed_descriptor: seed_descriptor.into(),
        }
    }

    pub fn triple(&self, k: u64) -> CoefficientTriple {
        match &self.triples {
            Triples::Affine(rows) => CoefficientTriple {
                k,
                f: rows.f.eval(k),
                g: rows.g.eval(k),
                h: rows.h.eval(k),
            },
            Triples::Custom(gen) => {
                let t = gen(k);
                debug_assert_eq!(t.k, k, "triple generator returned wrong level");
                t
            }
        }
    }

    pub fn seed_descriptor(&self) -> &str {
        &self.seed_descriptor
    }

    /// The scheme with its first `by` rows removed (row `k` of the
    /// result is row `k + by` of the original), describing the tail
    /// sequence starting at `A_{1+by}`.
    pub fn shift(&self, by: u64) -> Self {
        let triples = match &self.triples {
            Triples::Affine(rows) => {
                let bump = |c: &AffineCoeff| AffineCoeff {
                    p: affine_eval(&c.p, &c.q, by),
                    q: c.q.clone(),
                };
                Triples::Affine(Box::new(AffineRows {
                    f: bump(&rows.f),
                    g: bump(&rows.g),
                    h: bump(&rows.h),
                }))
            }
            Triples::Custom(gen) => {
                let gen = gen.clone();
                Triples::Custom(Arc::new(move |k| {
                    let mut t = gen(k + by);
                    t.k = k;
                    t
                }))
            }
        };
        Self {
            triples,
            seed_descriptor: format!("{} (shifted by {by})", self.seed_descriptor),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecurrenceError {
    /// Some row has `f_k = 0`: the relation cannot be solved for its
    /// leading term.
    #[error("leading coefficient f vanishes at level {level}")]
    ZeroLeadingCoefficient { level: u64 },
    /// The residual check was given fewer terms than `k_max + 2`.
    #[error("need at least {needed} terms, got {got}")]
    TermsLengthMismatch { needed: usize, got: usize },
}

/// Builds the continued fraction for `f_1 A / B` from a scheme:
/// `b_0 = g_1`, `a_k = f_{k+1} h_k`, `b_k = g_{k+1}`.
///
/// Affine schemes are validated symbolically: a vanishing `f` at any
/// level `k >= 1` is rejected, and a vanishing `h` at level `k0` ends
/// the fraction at depth `k0 - 1` (an identically-zero `h` leaves the
/// bare leading term, which the recurrence itself pins to the exact
/// value `g_1`). Custom schemes are validated lazily as elements are
/// generated.
pub fn cf_from_recurrence(scheme: &RecurrenceScheme) -> Result<GeneralizedCf, RecurrenceError> {
    let depth = match &scheme.triples {
        Triples::Affine(rows) => {
            if rows.f.is_identically_zero() {
                return Err(RecurrenceError::ZeroLeadingCoefficient { level: 1 });
            }
            if let Some(k) = rows.f.root_at_least(1) {
                return Err(RecurrenceError::ZeroLeadingCoefficient { level: k });
            }
            if rows.h.is_identically_zero() {
                Some(0)
            } else {
                rows.h.root_at_least(1).map(|k0| k0 - 1)
            }
        }
        Triples::Custom(_) => None,
    };
    let b0 = scheme.triple(1).g;
    if depth == Some(0) {
        return Ok(GeneralizedCf::constant(b0));
    }
    let scheme = scheme.clone();
    Ok(GeneralizedCf::new(b0, depth, move |k| {
        let row_k = scheme.triple(k);
        let row_next = scheme.triple(k + 1);
        assert!(
            !row_next.f.is_zero(),
            "leading coefficient f vanishes at level {}",
            k + 1
        );
        CfElement::new(row_next.f * row_k.h, row_next.g)
    }))
}

/// Residuals `r_k = f_k A_k - g_k A_{k+1} - h_k A_{k+2}` for
/// `k = 1..=k_max` against an explicit term sequence (`terms[0]` is
/// `A_1`). All-zero residuals certify the scheme against the sequence.
pub fn recurrence_residual(
    scheme: &RecurrenceScheme,
    terms: &[BigRational],
    k_max: usize,
) -> Result<Vec<BigRational>, RecurrenceError> {
    if terms.len() < k_max + 2 {
        return Err(RecurrenceError::TermsLengthMismatch {
            needed: k_max + 2,
            got: terms.len(),
        });
    }
    Ok((1..=k_max)
        .map(|k| {
            let t = scheme.triple(k as u64);
            &t.f * &terms[k - 1] - &t.g * &terms[k] - &t.h * &terms[k + 1]
        })
        .collect())
}
