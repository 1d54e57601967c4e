//! Coefficients, monomials, term orders, polynomials and monomial ideals.

mod field;
mod ideal;
mod monomial;
mod order;
mod poly;

pub use field::{is_prime, PrimeField};
pub use ideal::MonomialIdeal;
pub use monomial::{Monomial, MAX_VARS};
pub use order::{OrderKind, TermOrder};
pub use poly::{Polynomial, Ring, Term};
