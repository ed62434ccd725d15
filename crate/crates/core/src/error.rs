//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A rational function was requested with a denominator vanishing at 0.
    #[error("denominator is not a unit: constant term is zero")]
    NonUnitDenominator,

    /// Inversion of a series with no known nonzero term.
    #[error("series is not invertible: no nonzero term known")]
    NotInvertible,

    /// A computation needed coefficients beyond the known truncation order.
    #[error("truncation order too low on branch {branch}: need {needed}, have {have}")]
    OrderTooLow { branch: usize, needed: i64, have: i64 },

    /// Conductor candidates kept changing up to the doubling cap.
    #[error("conductor did not stabilize below the order cap {cap}")]
    NoStabilization { cap: i64 },

    /// A branch parametrization is identically zero, or two branches coincide
    /// up to the working order.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// A semigroup box query ranges outside the certified moduli.
    #[error("query box exceeds the working moduli")]
    BoxExceedsModuli,

    /// The generators of a would-be fractional ideal span no non-zerodivisor.
    #[error("generators contain no non-zerodivisor")]
    NoNonZeroDivisor,

    /// Length of a quotient I/J was requested with J ⊄ I.
    #[error("quotient undefined: second module is not contained in the first")]
    NotContained,

    /// A sandwich A ⊆ End(I) ⊆ Ã failed; indicates a truncation bug.
    #[error("containment violation: {0}")]
    ContainmentViolation(String),

    /// Two provably equivalent criteria returned different verdicts;
    /// indicates an implementation bug.
    #[error("criteria disagree: {0}")]
    CriteriaDisagree(String),

    /// An operation requiring a defining equation set was called without one.
    #[error("curve has no equations")]
    NoEquations,

    /// The supplied equations do not vanish on the parametrization.
    #[error("equations do not vanish on the parametrization")]
    EquationsFailVerification,

    /// Ideals from different curve models were mixed.
    #[error("fractional ideals belong to different curve models")]
    ModelMismatch,

    /// An element does not fit the exponent window of a subspace.
    #[error("element does not fit the subspace window on branch {branch} at exponent {exponent}")]
    OutsideWindow { branch: usize, exponent: i64 },
}
