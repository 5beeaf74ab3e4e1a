//! Content, primitive parts and polynomial gcd over the integers.
//!
//! The gcd uses a primitive pseudo-remainder sequence: coefficients are
//! reduced to their primitive part after every pseudo-division, which keeps
//! growth under control at the sizes this crate meets. Divisors coming out
//! of the magnitude pipeline are monic, so the expensive first reduction
//! step involves no scaling at all.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Polynomial;

pub type IntPoly = Polynomial<BigInt>;

impl Polynomial<BigInt> {
    /// Nonnegative gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut c = BigInt::zero();
        for a in self.coeffs() {
            c = c.gcd(a);
        }
        c
    }

    /// `self / content`, with positive leading coefficient. Zero maps to zero.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.exact_div(&IntPoly::constant(c))
            .expect("content divides every coefficient")
    }

    /// Number of trailing zero coefficients, i.e. the largest `k` with
    /// `R^k | self`. Zero polynomial reports 0.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs()
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }
}

/// Pseudo-remainder of `a` by nonzero `b`: the remainder of
/// `lc(b)^k · a` by `b` for a suitable `k`, computed without fractions.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let lead = b.leading();
    let db = b.degree().expect("pseudo_rem divisor is nonzero");
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let top = r.leading();
        r = &r.scale(&lead) - &b.mul_monomial(dr - db).scale(&top);
    }
    r
}

/// Polynomial gcd over `Z`, primitive with positive leading coefficient
/// (the integer content of the inputs is deliberately not included; callers
/// that need it combine with [`Polynomial::content`]).
pub fn poly_gcd_primitive(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }

    // Common power of R comes out exactly; it dominates in the determinant
    // pipeline and removing it first keeps the remainder sequence short.
    let shift = a.trailing_zeros().min(b.trailing_zeros());
    let mut p = a
        .exact_div(&IntPoly::monomial(BigInt::from(1), a.trailing_zeros()))
        .unwrap()
        .primitive_part();
    let mut q = b
        .exact_div(&IntPoly::monomial(BigInt::from(1), b.trailing_zeros()))
        .unwrap()
        .primitive_part();
    if p.degree() < q.degree() {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = pseudo_rem(&p, &q);
        if r.is_zero() {
            break;
        }
        p = q;
        q = r.primitive_part();
    }
    q.primitive_part().mul_monomial(shift)
}
