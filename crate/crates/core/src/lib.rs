//! Exact computer-algebra toolkit for families of square polynomial systems.
//!
//! Given `n` polynomials in `n` unknowns with `k` parameters, the crate
//! computes saturated ideals, parameterized lex Gröbner bases, an explicit
//! discriminant hypersurface of degenerate parameters, and the generic count
//! of regular zeros, together with a floating-point homotopy-tracking witness
//! layer that cross-validates the symbolic results.

pub mod context;
pub mod continuation;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod numeric;
pub mod polynomial;
pub mod rational;
pub mod sampling;
pub mod text;

pub use context::VariableContext;
pub use continuation::{
    discriminant, regular_zero_count, standard_monomials, verify_continuation_theorem,
    DiscriminantReport, StandardMonomialSet, VerificationReport,
};
pub use error::{Error, Result};
pub use groebner::{buchberger, s_polynomial, GroebnerBasis};
pub use ideal::{
    check_generic_regularity, jacobian_determinant, saturate, specialize_basis,
    specialize_saturated, FamilySpec, GuardFailure, ParamLeadingCoeff, SaturationResult,
    Specialization,
};
pub use monomial::Monomial;
pub use numeric::{
    solve_triangular, track_path, univariate_roots, verify_count_numerically, Complex64,
    ComplexPoint, NumericFamily, TrackResult, TrackStatus, TrackerConfig,
};
pub use polynomial::{ParameterPoint, Polynomial, Term};
pub use rational::{Integer, Rational};
