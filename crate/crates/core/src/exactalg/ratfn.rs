use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::poly_gcd_primitive;
use crate::{Error, IntPoly, LaurentPoly};

/// Normalized quotient of two integer polynomials.
///
/// Canonical form: numerator and denominator share no polynomial factor
/// over the rationals, their integer contents are coprime, and the
/// denominator has positive leading coefficient. Equality of values is then
/// structural equality, and `a/b == c/d` iff `a·d == c·b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFn {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        let mut out = RationalFn { num, den };
        out.normalize();
        Ok(out)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = IntPoly::one();
            return;
        }
        let g = poly_gcd_primitive(&self.num, &self.den);
        if g.degree() > Some(0) || g.trailing_zeros() > 0 {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
        }
        let c = self.num.content().gcd(&self.den.content());
        if !c.is_one() {
            let c = IntPoly::constant(c);
            self.num = self.num.exact_div(&c).expect("common content divides");
            self.den = self.den.exact_div(&c).expect("common content divides");
        }
        if self.den.leading().is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RationalFn {
            num: p,
            den: IntPoly::one(),
        }
    }

    /// `R^low · poly` as a fraction with a monomial denominator.
    pub fn from_laurent(l: &LaurentPoly) -> Self {
        match l.parts() {
            (low, poly) if low >= 0 => RationalFn::from_poly(poly.mul_monomial(low as usize)),
            (low, poly) => RationalFn::new(
                poly.clone(),
                IntPoly::monomial(BigInt::one(), (-low) as usize),
            )
            .expect("monomial denominator is nonzero"),
        }
    }

    pub fn zero() -> Self {
        RationalFn::from_poly(IntPoly::zero())
    }

    pub fn one() -> Self {
        RationalFn::from_poly(IntPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn recip(&self) -> Result<Self, Error> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    /// Exact value at a rational point; `None` at poles.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let embed = |c: &BigInt| BigRational::from_integer(c.clone());
        let d = self.den.eval_map(x, embed);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_map(x, embed) / d)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFn::new(num, den).expect("denominator product is nonzero")
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("denominator product is nonzero")
    }
}

impl Div for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
            .expect("division by zero rational function")
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: RationalFn) -> RationalFn {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
