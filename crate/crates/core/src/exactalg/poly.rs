use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Coeff;
use crate::Error;

/// Dense univariate polynomial, coefficients ascending in the variable `R`.
///
/// Invariants: the empty list represents the zero polynomial; otherwise the
/// last entry is nonzero. The zero polynomial has no degree (`degree()`
/// returns `None`, a genuine "minus infinity" — never `-1`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `c·R^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// The variable `R` itself.
    pub fn x() -> Self {
        Polynomial::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `R^k`, zero beyond the stored range.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// True when the polynomial is the constant 1.
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `R^k`.
    pub fn mul_monomial(&self, k: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Termwise d/dR.
    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.clone() * T::from_usize(k).expect("small integer fits any Coeff"));
        }
        Polynomial::new(out)
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Fails with [`Error::NotDivisible`] when the division leaves a
    /// remainder or a coefficient quotient falls outside the ring.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, Error> {
        if divisor.is_zero() {
            return Err(Error::NotDivisible("division by zero polynomial"));
        }
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        let (da, db) = (self.coeffs.len() - 1, divisor.coeffs.len() - 1);
        if da < db {
            return Err(Error::NotDivisible("degree of divisor exceeds dividend"));
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = rem[k + db].clone();
            if top.is_zero() {
                continue;
            }
            let q = top
                .exact_div(lead)
                .ok_or(Error::NotDivisible("leading coefficient does not divide"))?;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * d.clone();
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible("nonzero remainder"));
        }
        Ok(Polynomial::new(quot))
    }

    /// Horner evaluation in any ring the coefficients map into.
    pub fn eval_map<U, F>(&self, x: &U, embed: F) -> U
    where
        U: Clone + Zero + Add<Output = U> + Mul<Output = U>,
        F: Fn(&T) -> U,
    {
        let mut acc = U::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + embed(c);
        }
        acc
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, x: &T) -> T {
        self.eval_map(x, Clone::clone)
    }
}

impl<T: Coeff> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(short.coeffs.iter()) {
            *o = o.clone() + s.clone();
        }
        Polynomial::new(out)
    }
}

impl<T: Coeff> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let mut out = self.coeffs.clone();
        if out.len() < rhs.coeffs.len() {
            out.resize(rhs.coeffs.len(), T::zero());
        }
        for (o, s) in out.iter_mut().zip(rhs.coeffs.iter()) {
            *o = o.clone() - s.clone();
        }
        Polynomial::new(out)
    }
}

impl<T: Coeff> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Coeff> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| T::zero() - c.clone()).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl<T: Coeff> $trait for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $method(self, rhs: Polynomial<T>) -> Polynomial<T> {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl<T: Coeff> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

impl<T: Coeff> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "R")?,
                (1, false) => write!(f, "{mag}R")?,
                (_, true) => write!(f, "R^{k}")?,
                (_, false) => write!(f, "{mag}R^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: Coeff> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
