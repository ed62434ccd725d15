//! Exact-arithmetic invariants of reduced algebroid curve singularities.
//!
//! A curve is given by branch parametrizations `t_i ↦ (x_1(t_i), …, x_n(t_i))`
//! with rational coefficients. From these the crate builds a finite-dimensional
//! model of the coordinate ring inside its normalization, certifies the
//! conductor by order doubling, and computes:
//!
//! * the value semigroup together with Δ-set queries and the Delgado/Kunz
//!   symmetry test (Gorenstein criterion),
//! * the fractional-ideal calculus (duals, endomorphism rings, colengths,
//!   module-isomorphism witnesses),
//! * the modules attached to the Euler derivative of the maximal ideal, the
//!   Jacobian ideal of a complete-intersection presentation, the invariants
//!   ρ and ρ′, and the quasihomogeneity verdicts they support,
//! * one normalization step through the endomorphism ring of the inverse
//!   Jacobian ideal.
//!
//! Everything is computed over ℚ with no rounding anywhere; truncation orders
//! are tracked explicitly and all certified quantities can be re-verified at
//! doubled order.

pub mod algebra;
pub mod corpus;
pub mod criteria;
pub mod error;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod semigroup;
pub mod series;

pub use algebra::{AlgebraModel, CurveSpec, ModelOptions, ParamSeries};
pub use criteria::{InvariantReport, Lengths};
pub use error::Error;
pub use ideal::{FracIdeal, IsoVerdict};
pub use linalg::{SubspaceBasis, Window};
pub use rational::{parse_rational, rational_to_string, Rational};
pub use semigroup::{DeltaQuery, SemigroupTable};
pub use series::{BranchValuation, MultiSeries, Trunc, TruncatedSeries, Valuation};

/// Convenience result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
