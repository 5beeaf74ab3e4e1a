//! Thin multiprecision layer over `astro-float`.
//!
//! Every [`Real`] carries its working precision in bits; operations use the
//! precision of the left operand. The numeric-verification defaults in this
//! crate are expressed in decimal digits and converted with
//! [`digits_to_bits`], which adds guard bits on top of the requested count.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

/// Bits for a requested number of significant decimal digits, with guard.
pub fn digits_to_bits(digits: u32) -> usize {
    ((digits as f64) * std::f64::consts::LOG2_10).ceil() as usize + 32
}

/// Arbitrary-precision binary float.
#[derive(Clone, Debug)]
pub struct Real {
    v: BigFloat,
    prec: usize,
}

impl Real {
    pub fn zero(prec: usize) -> Self {
        Real {
            v: BigFloat::from_i8(0, prec),
            prec,
        }
    }

    pub fn one(prec: usize) -> Self {
        Real {
            v: BigFloat::from_i8(1, prec),
            prec,
        }
    }

    pub fn from_f64(x: f64, prec: usize) -> Self {
        Real {
            v: BigFloat::from_f64(x, prec),
            prec,
        }
    }

    pub fn from_i64(x: i64, prec: usize) -> Self {
        Real {
            v: BigFloat::from_i64(x, prec),
            prec,
        }
    }

    pub fn from_bigint(x: &BigInt, prec: usize) -> Self {
        let s = x.to_str_radix(16);
        let v = CONSTS.with(|cc| {
            BigFloat::parse(&s, Radix::Hex, prec, RM, &mut cc.borrow_mut())
        });
        Real { v, prec }
    }

    pub fn from_ratio(x: &BigRational, prec: usize) -> Self {
        let n = Real::from_bigint(x.numer(), prec);
        let d = Real::from_bigint(x.denom(), prec);
        n.div(&d)
    }

    pub fn pi(prec: usize) -> Self {
        let v = CONSTS.with(|cc| cc.borrow_mut().pi(prec, RM));
        Real { v, prec }
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn add(&self, o: &Real) -> Real {
        Real {
            v: self.v.add(&o.v, self.prec, RM),
            prec: self.prec,
        }
    }

    pub fn sub(&self, o: &Real) -> Real {
        Real {
            v: self.v.sub(&o.v, self.prec, RM),
            prec: self.prec,
        }
    }

    pub fn mul(&self, o: &Real) -> Real {
        Real {
            v: self.v.mul(&o.v, self.prec, RM),
            prec: self.prec,
        }
    }

    pub fn div(&self, o: &Real) -> Real {
        Real {
            v: self.v.div(&o.v, self.prec, RM),
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Real {
        Real {
            v: self.v.neg(),
            prec: self.prec,
        }
    }

    pub fn abs(&self) -> Real {
        Real {
            v: self.v.abs(),
            prec: self.prec,
        }
    }

    pub fn sqrt(&self) -> Real {
        Real {
            v: self.v.sqrt(self.prec, RM),
            prec: self.prec,
        }
    }

    pub fn exp(&self) -> Real {
        let v = CONSTS.with(|cc| self.v.exp(self.prec, RM, &mut cc.borrow_mut()));
        Real { v, prec: self.prec }
    }

    pub fn powi(&self, n: usize) -> Real {
        Real {
            v: self.v.powi(n, self.prec, RM),
            prec: self.prec,
        }
    }

    pub fn recip(&self) -> Real {
        Real {
            v: self.v.reciprocal(self.prec, RM),
            prec: self.prec,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.v.sign() == Some(Sign::Neg) && !self.v.is_zero()
    }

    pub fn cmp(&self, o: &Real) -> Ordering {
        match self.v.cmp(&o.v) {
            Some(c) => match c {
                c if c < 0 => Ordering::Less,
                0 => Ordering::Equal,
                _ => Ordering::Greater,
            },
            None => Ordering::Equal,
        }
    }

    pub fn lt(&self, o: &Real) -> bool {
        self.cmp(o) == Ordering::Less
    }

    /// Binary exponent: value magnitude is in `[2^(e-1), 2^e)`.
    pub fn exponent(&self) -> Option<i64> {
        self.v.exponent().map(|e| e as i64)
    }

    pub fn to_f64(&self) -> f64 {
        if self.v.is_zero() {
            return 0.0;
        }
        let mut t = self.v.clone();
        t.set_precision(64, RM).expect("precision reduction");
        let Some((words, _n, sign, exp, _)) = t.as_raw_parts() else {
            return f64::NAN;
        };
        // Mantissa words are little-endian; the most significant word holds
        // the top bit. value = 0.mantissa * 2^exp.
        let top = *words.last().unwrap_or(&0);
        let frac = top as f64 / (u64::MAX as f64 + 1.0);
        let mag = frac * 2f64.powi(exp);
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    /// Decimal rendering with the chosen radix-10 digit count.
    pub fn to_decimal_string(&self) -> String {
        CONSTS.with(|cc| {
            self.v
                .format(Radix::Dec, RM, &mut cc.borrow_mut())
                .unwrap_or_else(|_| "<nan>".into())
        })
    }
}

/// Complex number over [`Real`].
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn zero(prec: usize) -> Self {
        Complex::new(Real::zero(prec), Real::zero(prec))
    }

    pub fn add(&self, o: &Complex) -> Complex {
        Complex::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Complex) -> Complex {
        Complex::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &Complex) -> Complex {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        Complex::new(re, im)
    }

    pub fn div(&self, o: &Complex) -> Complex {
        let d = o.norm_sqr();
        let re = self.re.mul(&o.re).add(&self.im.mul(&o.im)).div(&d);
        let im = self.im.mul(&o.re).sub(&self.re.mul(&o.im)).div(&d);
        Complex::new(re, im)
    }

    pub fn norm_sqr(&self) -> Real {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, cached per `(n, prec)`.
///
/// Nodes come from Newton iteration on the Legendre recurrence seeded with
/// the Chebyshev-angle estimates; at the precisions used here a handful of
/// iterations converges far below the working tolerance.
pub fn gauss_legendre(n: usize, prec: usize) -> Arc<(Vec<Real>, Vec<Real>)> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<(Vec<Real>, Vec<Real>)>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(n, prec)) {
        return hit.clone();
    }

    let mut nodes = vec![Real::zero(prec); n];
    let mut weights = vec![Real::zero(prec); n];
    let two = Real::from_i64(2, prec);
    let one = Real::one(prec);
    for i in 0..n.div_ceil(2) {
        let seed = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut x = Real::from_f64(seed, prec);
        let mut dpn = Real::zero(prec);
        for _ in 0..60 {
            let (pn, pn1) = legendre_pair(n, &x, prec);
            // P'_n = n (x P_n - P_{n-1}) / (x^2 - 1)
            let denom = x.mul(&x).sub(&one);
            dpn = Real::from_i64(n as i64, prec)
                .mul(&x.mul(&pn).sub(&pn1))
                .div(&denom);
            let dx = pn.div(&dpn);
            x = x.sub(&dx);
            if dx.is_zero() || dx.exponent().unwrap_or(i64::MIN) < -(prec as i64) + 2 {
                break;
            }
        }
        let w = two.div(&one.sub(&x.mul(&x)).mul(&dpn).mul(&dpn));
        nodes[i] = x.neg();
        weights[i] = w.clone();
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = Real::zero(prec);
    }

    let arc = Arc::new((nodes, weights));
    cache.lock().unwrap().insert((n, prec), arc.clone());
    arc
}

/// `(P_n(x), P_{n-1}(x))` by the three-term recurrence.
fn legendre_pair(n: usize, x: &Real, prec: usize) -> (Real, Real) {
    let mut p_prev = Real::one(prec);
    let mut p = x.clone();
    if n == 0 {
        return (p_prev, Real::zero(prec));
    }
    for k in 1..n {
        // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
        let a = Real::from_i64(2 * k as i64 + 1, prec).mul(&x.mul(&p));
        let b = Real::from_i64(k as i64, prec).mul(&p_prev);
        let next = a.sub(&b).div(&Real::from_i64(k as i64 + 1, prec));
        p_prev = p;
        p = next;
    }
    (p, p_prev)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_round_trip() {
        let prec = 192;
        for &x in &[0.0, 1.0, -2.5, 1.0e10, -3.25e-7, 0.1] {
            let r = Real::from_f64(x, prec);
            assert_eq!(r.to_f64(), x, "round trip failed for {x}");
        }
    }

    #[test]
    fn bigint_conversion_is_exact_at_high_precision() {
        let prec = 512;
        let x: BigInt = BigInt::from(10).pow(40) + 7;
        let r = Real::from_bigint(&x, prec);
        let back = r.sub(&Real::from_f64(0.0, prec));
        // compare against rational reconstruction through division
        let q = Real::from_ratio(&BigRational::from_integer(x), prec);
        assert_eq!(back.cmp(&q), Ordering::Equal);
    }

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let prec = digits_to_bits(40);
        let gl = gauss_legendre(12, prec);
        // integral of x^8 over [-1,1] = 2/9
        let mut acc = Real::zero(prec);
        for (x, w) in gl.0.iter().zip(gl.1.iter()) {
            acc = acc.add(&w.mul(&x.powi(8)));
        }
        let expected = Real::from_i64(2, prec).div(&Real::from_i64(9, prec));
        let err = acc.sub(&expected).abs();
        assert!(
            err.exponent().unwrap_or(i64::MIN) < -(prec as i64) + 16,
            "GL error too large: {}",
            err.to_decimal_string()
        );
    }

    #[test]
    fn exp_and_pi() {
        let prec = digits_to_bits(40);
        let e = Real::one(prec).exp();
        assert!((e.to_f64() - std::f64::consts::E).abs() < 1e-15);
        assert!((Real::pi(prec).to_f64() - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn ratio_conversion() {
        let prec = 192;
        let q = BigRational::new(BigInt::from(1), BigInt::from(3));
        let r = Real::from_ratio(&q, prec);
        assert!((r.to_f64() - 1.0 / 3.0).abs() < 1e-16);
    }
}
