//! Exact-arithmetic toolkit for generalized continued fractions built from
//! three-term recurrences.
//!
//! The crate is organized around one pipeline:
//!
//! 1. [`recurrence`] turns coefficient rows `(f_k, g_k, h_k)` of a
//!    three-term relation `f_k A_k = g_k A_{k+1} + h_k A_{k+2}` into a
//!    [`cf::GeneralizedCf`] whose limit is `f_1 A / B`.
//! 2. [`cf`] evaluates any generalized continued fraction with exact
//!    rational convergents via the fundamental recurrence, with bracketing
//!    and divergence diagnostics.
//! 3. [`transforms`] rewrites fractions without changing their convergent
//!    values: equivalence scaling, head adjunction/removal, alternating
//!    sign flips and denominator clearing.
//! 4. [`families`] provides the parameterized families I-VII (quadratic
//!    surds, logarithms, arctangents, exponentials and their quadrature
//!    generalizations) plus a named catalog of concrete identities.
//! 5. [`oracle`] supplies independent ground truth: high-precision
//!    elementary functions, tanh-sinh quadrature for the seed integrals
//!    `A` and `B`, and a bottom-up truncation evaluator that cross-checks
//!    the convergent engine.
//!
//! ```
//! use cfrac::cf::{convergents, eval_to_tolerance, Termination};
//! use cfrac::rational::{int, parse_decimal, rat};
//! use cfrac::{CfElement, GeneralizedCf};
//!
//! // the golden-ratio fraction 1 + 1/(1 + 1/(1 + ...))
//! let cf = GeneralizedCf::new(int(1), None, |_| CfElement::new(int(1), int(1)));
//! let convs = convergents(&cf, 3);
//! assert_eq!(convs[3].value().unwrap(), &rat(5, 3));
//!
//! let tol = parse_decimal("1e-12").unwrap();
//! let report = eval_to_tolerance(&cf, &tol, 200, 30);
//! assert_eq!(report.termination, Termination::ToleranceMet);
//! assert!(report.bracketing);
//! ```

pub mod cf;
pub mod families;
pub mod oracle;
pub mod rational;
pub mod recurrence;
pub mod transforms;

pub use cf::{CfElement, Convergent, EvalOptions, EvalReport, GeneralizedCf, Termination};
pub use families::{CatalogEntry, FamilyId, FamilySpec, Target};
pub use oracle::highprec::HighPrecision;
pub use rational::BigRational;
pub use recurrence::{CoefficientTriple, RecurrenceScheme};
