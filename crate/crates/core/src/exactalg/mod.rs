//! Exact arithmetic substrate: polynomials, Laurent polynomials, normalized
//! rational functions and fraction-free determinants.
//!
//! The polynomial types are generic over the coefficient ring through the
//! [`Coeff`] trait (built on `num-traits`); the crate root instantiates them
//! at `BigInt` and `BigRational`. All values are immutable after
//! construction and all operations are pure functions, so everything here is
//! freely shareable across threads.

mod coeff;
mod gcd;
mod laurent;
mod matrix;
mod poly;
mod ratfn;

pub use coeff::Coeff;
pub use laurent::LaurentPolynomial;
pub use matrix::{bareiss_det, cofactor_det, PolynomialMatrix};
pub use poly::Polynomial;
pub use ratfn::RationalFn;
