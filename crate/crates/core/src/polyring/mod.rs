//! Coefficient fields, weighted monomials, sparse polynomials and the vector
//! calculus on polynomial triples.

mod field;
mod polynomial;
mod vector;
mod weights;

pub use field::{cyclotomic_polynomial, Field, FieldElement};
pub use polynomial::Polynomial;
pub use vector::PolyVector;
pub use weights::{monomial_basis, monomial_cmp, Monomial, Weights};
