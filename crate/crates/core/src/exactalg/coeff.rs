use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, Zero};

/// Coefficient ring for the polynomial types.
///
/// `Signed` (from num-traits) supplies the ring operations, zero/one and
/// sign queries; `exact_div` is the only extra requirement. It must return
/// `None` exactly when `other` does not divide `self` in the ring.
pub trait Coeff: Clone + std::fmt::Debug + std::fmt::Display + Signed + FromPrimitive {
    fn exact_div(&self, other: &Self) -> Option<Self>;
}

impl Coeff for BigInt {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }
}

impl Coeff for BigRational {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        (!other.is_zero()).then(|| self / other)
    }
}

impl Coeff for i64 {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if *other == 0 || self % other != 0 {
            None
        } else {
            Some(self / other)
        }
    }
}
