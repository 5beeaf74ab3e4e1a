use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{Coeff, Polynomial};
use crate::Error;

/// Laurent polynomial: `R^low · poly` with finitely many negative powers.
///
/// Normal form: `poly` has nonzero constant term unless the whole value is
/// zero, in which case `low == 0` and `poly` is the zero polynomial. The
/// exponent bookkeeping is exact throughout.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial<T> {
    low: i64,
    poly: Polynomial<T>,
}

impl<T: Coeff> LaurentPolynomial<T> {
    pub fn new(low: i64, poly: Polynomial<T>) -> Self {
        let mut out = LaurentPolynomial { low, poly };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.poly.is_zero() {
            self.low = 0;
            return;
        }
        let shift = self
            .poly
            .coeffs()
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial has a nonzero coefficient");
        if shift > 0 {
            let coeffs = self.poly.coeffs()[shift..].to_vec();
            self.poly = Polynomial::new(coeffs);
            self.low += shift as i64;
        }
    }

    pub fn zero() -> Self {
        LaurentPolynomial {
            low: 0,
            poly: Polynomial::zero(),
        }
    }

    pub fn one() -> Self {
        LaurentPolynomial {
            low: 0,
            poly: Polynomial::one(),
        }
    }

    /// The monomial `c·R^k`, `k` possibly negative.
    pub fn monomial(c: T, k: i64) -> Self {
        LaurentPolynomial::new(k, Polynomial::constant(c))
    }

    pub fn from_poly(poly: Polynomial<T>) -> Self {
        LaurentPolynomial::new(0, poly)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Lowest exponent with nonzero coefficient; `None` when zero.
    pub fn low_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with nonzero coefficient; `None` when zero.
    pub fn high_exponent(&self) -> Option<i64> {
        self.poly.degree().map(|d| self.low + d as i64)
    }

    /// Coefficient of `R^k`.
    pub fn coeff(&self, k: i64) -> T {
        if k < self.low {
            return T::zero();
        }
        self.poly.coeff((k - self.low) as usize)
    }

    /// The underlying `(low, polynomial)` pair with `value = R^low · poly`.
    pub fn parts(&self) -> (i64, &Polynomial<T>) {
        (self.low, &self.poly)
    }

    /// Multiply by `R^k` (`k` may be negative).
    pub fn mul_monomial(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            low: self.low + k,
            poly: self.poly.clone(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        LaurentPolynomial::new(self.low, self.poly.scale(c))
    }

    /// Termwise d/dR: `c·R^k ↦ k·c·R^{k-1}`.
    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let coeffs: Vec<T> = self
            .poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let k = self.low + j as i64;
                c.clone() * T::from_i64(k).expect("small integer fits any Coeff")
            })
            .collect();
        LaurentPolynomial::new(self.low - 1, Polynomial::new(coeffs))
    }

    /// Conversion to an ordinary polynomial; fails if any negative power
    /// survives normalization.
    pub fn to_polynomial(&self) -> Result<Polynomial<T>, Error> {
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        if self.low < 0 {
            return Err(Error::NotDivisible("negative exponents remain"));
        }
        Ok(self.poly.mul_monomial(self.low as usize))
    }

    /// Exact evaluation at a nonzero point of any ring containing the
    /// coefficients and the inverse of `x`.
    pub fn eval_map<U, F>(&self, x: &U, x_inv: &U, embed: F) -> U
    where
        U: Clone + Zero + Add<Output = U> + Mul<Output = U>,
        F: Fn(&T) -> U,
    {
        let positive = self.poly.eval_map(x, embed);
        let mut acc = positive;
        if self.low >= 0 {
            for _ in 0..self.low {
                acc = acc * x.clone();
            }
        } else {
            for _ in 0..(-self.low) {
                acc = acc * x_inv.clone();
            }
        }
        acc
    }
}

impl<T: Coeff> Add for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;
    fn add(self, rhs: &LaurentPolynomial<T>) -> LaurentPolynomial<T> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let a = self.poly.mul_monomial((self.low - low) as usize);
        let b = rhs.poly.mul_monomial((rhs.low - low) as usize);
        LaurentPolynomial::new(low, &a + &b)
    }
}

impl<T: Coeff> Sub for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;
    fn sub(self, rhs: &LaurentPolynomial<T>) -> LaurentPolynomial<T> {
        &self.clone() + &(-rhs)
    }
}

impl<T: Coeff> Mul for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;
    fn mul(self, rhs: &LaurentPolynomial<T>) -> LaurentPolynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial::new(self.low + rhs.low, &self.poly * &rhs.poly)
    }
}

impl<T: Coeff> Neg for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;
    fn neg(self) -> LaurentPolynomial<T> {
        LaurentPolynomial {
            low: self.low,
            poly: -&self.poly,
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl<T: Coeff> $trait for LaurentPolynomial<T> {
            type Output = LaurentPolynomial<T>;
            fn $method(self, rhs: LaurentPolynomial<T>) -> LaurentPolynomial<T> {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl<T: Coeff> Neg for LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;
    fn neg(self) -> LaurentPolynomial<T> {
        -&self
    }
}

impl<T: Coeff> fmt::Display for LaurentPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.low == 0 {
            return write!(f, "{}", self.poly);
        }
        write!(f, "R^{}·({})", self.low, self.poly)
    }
}

impl<T: Coeff> fmt::Debug for LaurentPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
