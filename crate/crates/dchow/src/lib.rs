//! Exactness-defect computations for mod-p Chow rings of classifying spaces
//! of Borel subgroups.
//!
//! The engine reconstructs, degree by degree, the quotient
//! `D = Ker(j⁺) / Ideal(Im(i⁺))` attached to a restriction sequence
//! `CH*(BG)/p → CH*(BB)/p → CH*(F)/p`, where `CH*(BB)/p` is a graded
//! polynomial ring over a prime field.  Kernels and images are entered as
//! homogeneous ideals; `D` is computed as a difference of Hilbert functions
//! by two independent methods (Groebner staircase counting and Macaulay-matrix
//! ranks over F_p) and compared against closed-form series.
//!
//! Companion suites check Steenrod reduced-power identities, Milnor
//! derivations against the Dickson expansion of the spin Euler class, and
//! Weyl-group invariance of the named generator classes.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod steenrod;
pub mod symfun;
pub mod weyl;

pub use algebra::{
    apply_substitution, monomials_of_degree, parse_polynomial, Ctx, FieldElement, Monomial,
    MonomialOrder, Polynomial, RingContext,
};
pub use catalog::{
    build_case, emit_report, list_cases, verify_case, CaseSpec, DegreeRow, VerificationReport,
};
pub use error::{Error, Result};
pub use groebner::IdealHandle;
pub use hilbert::{d_series, hf_linalg, hf_staircase, series_eval, Method, SeriesExpr};
