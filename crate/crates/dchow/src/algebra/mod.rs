//! Exact arithmetic for graded multivariate polynomials over prime fields.

mod field;
mod monomial;
mod parse;
mod poly;
mod ring;

pub use field::{is_prime, FieldElement};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::{apply_substitution, monomials_of_degree, Polynomial};
pub use ring::{same_context, Ctx, RingContext};
