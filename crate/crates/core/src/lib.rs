//! Exact computation of the magnitude of odd-dimensional Euclidean balls.
//!
//! The magnitude `|B^n_R|` of the ball of radius `R` in odd dimension
//! `n = 2p + 1` is a rational function of `R` with integer coefficients.
//! This crate computes it by three independent routes and cross-validates
//! them, exactly:
//!
//! * [`hankel`] — as a ratio of Hankel determinants of reverse Bessel
//!   polynomials, with the predicted monomial factors divided out;
//! * [`weights`] — by building the boundary-weighting linear system and
//!   solving it with exact Cramer elimination;
//! * [`schroeder`] — as weighted sums over collections of vertex-disjoint
//!   Schröder lattice paths.
//!
//! All exact arithmetic is over arbitrary-precision integers ([`exactalg`]);
//! the [`analytic`] module adds a floating-point harness (Gauss–Legendre
//! quadrature and finite point clouds) that checks the underlying integral
//! identities numerically.

pub mod analytic;
pub mod bessel;
pub mod exactalg;
pub mod hankel;
pub mod mp;
pub mod schroeder;
pub mod weights;

mod error;

pub use error::Error;

/// Dense univariate polynomial over arbitrary-precision integers.
pub type IntPoly = exactalg::Polynomial<num_bigint::BigInt>;
/// Dense univariate polynomial over arbitrary-precision rationals.
pub type RatPoly = exactalg::Polynomial<num_rational::BigRational>;
/// Integer Laurent polynomial (finitely many negative powers).
pub type LaurentPoly = exactalg::LaurentPolynomial<num_bigint::BigInt>;
/// Square or rectangular matrix of integer Laurent polynomials.
pub type PolyMatrix = exactalg::PolynomialMatrix<num_bigint::BigInt>;

pub use exactalg::RationalFn;
