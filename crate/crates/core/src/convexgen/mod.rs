//! The point-generated lattice K(X): saturation under hull-of-union and
//! intersection, completions, finiteness classification, and checks of the
//! extreme-point lemma and the K(X) ≅ R(X) theorem for complete X.

mod classify;
mod saturate;
mod theorem;

use crate::relative::RelativeError;

pub use classify::{classify_finiteness, regular_pentagon, Certificate, Classification, Finiteness};
pub use saturate::{first_new_point, saturate, Budget, GeneratedLattice, SaturationStatus};
pub use theorem::{
    completion_points, verify_extreme_lemma, verify_iso_theorem, CompletionResult, ExtremeReport, IsoReport, Verdict,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConvexgenError {
    #[error("saturation needs at least one point")]
    EmptyConfiguration,
    #[error("a generated coordinate exceeds {0} bits")]
    CoordinateCap(u64),
    #[error("configuration is incomplete ({0} new points)")]
    NotComplete(usize),
    #[error("saturation did not finish within the budget")]
    NotSaturated,
    #[error(transparent)]
    Relative(#[from] RelativeError),
}
