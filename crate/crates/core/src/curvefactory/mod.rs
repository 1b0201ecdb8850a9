//! Curve models built from a solution of the central equation, the
//! construction procedure with its genus predicates, and the closed forms
//! and quartic families of the appendix.

mod appendix;
mod appendix_data;
mod bundle;
mod descent;
mod identities;
mod quartic;
mod quartic_data;
mod smooth;

use thiserror::Error;

use crate::diophantine::SolverError;
use crate::exactcore::PolyError;

pub use appendix::{
    appendix_consistency, appendix_h, appendix_s6, elementary_symmetric, symmetric_denominator, AppendixReport,
    Normalization,
};
pub use bundle::{
    assemble_bundle, build_bundle, genus3_discriminant_check, genus3_model, genus8_txz_model, CheckResult, CurveBundle,
    DiscriminantCheck,
};
pub use descent::{
    genus2_condition, plane14_invariant, plane14_is_invariant, steps15_construct, transport_to_m, DescentParams,
    Transport,
};
pub use identities::{
    product_identity_lhs, product_identity_rhs, r_discriminant_ratio, r_model, verify_product_identity,
    verify_r_identity,
};
pub use quartic::{compare_with_base, quartic_specialize, QuarticDiff, QuarticFamily, QuarticFixture};
pub use smooth::{quartic_smoothness, smoothness, Smoothness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("identity check `{0}` failed")]
    IdentityFailure(String),
    #[error("L(w) = w - a needs a != 0")]
    DegenerateL,
    #[error("{what} must have degree {expected}, got {got}")]
    DegreeViolation {
        what: &'static str,
        expected: String,
        got: i64,
    },
    #[error("square part has degree {square_degree} and square-free part degree {free_degree}; expected 4 and 6")]
    ShapeMismatch { square_degree: i64, free_degree: i64 },
    #[error("-αβγ + γ² + α²δ vanishes")]
    DegenerateSymmetricPoint,
    #[error("family {family} has a pole at parameter {param}")]
    ParameterPole { family: &'static str, param: String },
}
