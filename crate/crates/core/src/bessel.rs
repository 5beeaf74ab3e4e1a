//! Reverse Bessel polynomials χ_i, the τ/ψ function sequences, the
//! conjugated derivative δ, the superfactorial and the exact identities
//! connecting them.
//!
//! χ_i is defined by the recursion `χ_{i+2} = R²·χ_i + (2i+1)·χ_{i+1}` with
//! `χ_0 = 1`, `χ_1 = R`; the table is memoized behind a lock so concurrent
//! readers never observe a partially built entry.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::mp::Real;
use crate::{Error, IntPoly, LaurentPoly};

/// Largest |s| accepted by [`tau_eval`]; the factorially decaying Taylor
/// coefficients guarantee a monotone tail below this bound.
pub const TAU_S_MAX: f64 = 50.0;

/// Memoized table of reverse Bessel polynomials.
pub struct ReverseBesselTable {
    polys: RwLock<Vec<IntPoly>>,
}

impl ReverseBesselTable {
    pub fn new() -> Self {
        ReverseBesselTable {
            polys: RwLock::new(vec![IntPoly::one(), IntPoly::x()]),
        }
    }

    /// The i-th reverse Bessel polynomial (cloned out of the table).
    pub fn get(&self, i: usize) -> IntPoly {
        {
            let read = self.polys.read().unwrap();
            if i < read.len() {
                return read[i].clone();
            }
        }
        let mut write = self.polys.write().unwrap();
        let r2 = IntPoly::monomial(BigInt::one(), 2);
        while write.len() <= i {
            let m = write.len();
            // χ_m = R²·χ_{m-2} + (2m-3)·χ_{m-1}
            let next = &(&r2 * &write[m - 2]) + &write[m - 1].scale(&BigInt::from(2 * m - 3));
            write.push(next);
        }
        write[i].clone()
    }

    pub fn max_index(&self) -> usize {
        self.polys.read().unwrap().len() - 1
    }
}

impl Default for ReverseBesselTable {
    fn default() -> Self {
        Self::new()
    }
}

fn global_table() -> &'static ReverseBesselTable {
    static TABLE: OnceLock<ReverseBesselTable> = OnceLock::new();
    TABLE.get_or_init(ReverseBesselTable::new)
}

/// The i-th reverse Bessel polynomial χ_i(R).
pub fn chi(i: usize) -> IntPoly {
    global_table().get(i)
}

/// k! as a big integer.
pub fn factorial(k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for m in 2..=k {
        acc *= m;
    }
    acc
}

/// Superfactorial sf(k) = 0!·1!·…·k!.
pub fn superfactorial(k: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut f = BigInt::one();
    for m in 1..=k {
        f *= m;
        acc *= &f;
    }
    acc
}

/// Binomial coefficient C(n, k).
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Conjugated derivative δf = f′ − f − 2p·f/R, applied `j` times.
///
/// This is the expansion of f ↦ e^R R^{2p} (d/dR)(e^{-R} R^{-2p} f) on
/// Laurent polynomials; on monomials δ(R^k) = −R^k − (2p−k)·R^{k−1}, and on
/// products R^k·χ_m it satisfies
/// `δ(R^k χ_m) = −R^{k+1} χ_{m−1} − (2p−k−1) R^{k−1} χ_m`.
pub fn delta_apply(f: &LaurentPoly, p: u32, j: u32) -> LaurentPoly {
    let mut out = f.clone();
    for _ in 0..j {
        let df = out.derivative();
        let scaled = out.scale(&BigInt::from(2 * p)).mul_monomial(-1);
        out = &(&df - &out) - &scaled;
    }
    out
}

/// Even-power Taylor coefficients of τ_i.
///
/// Coefficient `k` multiplies `s^{2k}` and equals
/// `(−1)^i / ((2k)! · (2k+1)(2k+3)···(2k+2i−1))` (empty product for i = 0,
/// which makes τ_0 = cosh).
#[derive(Clone, Debug, PartialEq)]
pub struct TauSeries {
    pub index: usize,
    pub coeffs: Vec<BigRational>,
}

/// First `order` even-power Taylor coefficients of τ_i.
pub fn tau_taylor(i: usize, order: usize) -> TauSeries {
    let mut coeffs = Vec::with_capacity(order);
    for k in 0..order {
        let mut den = factorial(2 * k);
        for t in 0..i {
            den *= 2 * k + 2 * t + 1;
        }
        let mut c = BigRational::new(BigInt::one(), den);
        if i % 2 == 1 {
            c = -c;
        }
        coeffs.push(c);
    }
    TauSeries { index: i, coeffs }
}

/// τ_i(s) by Taylor summation with a rigorous tail cutoff.
///
/// Terms are generated by the ratio
/// `term_{k+1}/term_k = s² / ((2k+2)(2k+2i+1))`; summation stops once the
/// term magnitude falls below 10^-(digits+2) while the ratio is below 1/2,
/// which bounds the discarded tail by the last term.
pub fn tau_eval(i: usize, s: &Real, digits: u32) -> Result<Real, Error> {
    let s_f64 = s.to_f64().abs();
    if s_f64 > TAU_S_MAX {
        return Err(Error::ArgumentTooLarge {
            value: s_f64,
            max: TAU_S_MAX,
        });
    }
    let prec = s.prec();
    let mut den = BigInt::one();
    for t in 0..i {
        den *= 2 * t + 1;
    }
    let mut term = Real::from_bigint(&den, prec).recip();
    if i % 2 == 1 {
        term = term.neg();
    }
    let s2 = s.mul(s);
    let threshold = Real::from_i64(10, prec)
        .powi(digits as usize + 2)
        .recip();
    let mut acc = Real::zero(prec);
    let mut k: usize = 0;
    loop {
        acc = acc.add(&term);
        let ratio_den = ((2 * k + 2) * (2 * k + 2 * i + 1)) as i64;
        term = term.mul(&s2).div(&Real::from_i64(ratio_den, prec));
        k += 1;
        let ratio_ok = s_f64 * s_f64 < 0.5 * ratio_den as f64;
        if ratio_ok && term.abs().lt(&threshold) {
            break;
        }
        if k > 10_000 {
            return Err(Error::PrecisionNotReached {
                estimate: term.to_f64(),
                tolerance: 10f64.powi(-(digits as i32)),
            });
        }
    }
    Ok(acc)
}

/// ψ_i(r) = e^{−r} · r^{−2i} · χ_i(r), for r > 0.
pub fn psi_eval(i: usize, r: &Real) -> Result<Real, Error> {
    if r.is_zero() || r.is_negative() {
        return Err(Error::NonPositiveArgument(r.to_f64()));
    }
    let prec = r.prec();
    let chi_r = chi(i).eval_map(r, |c| Real::from_bigint(c, prec));
    let e = r.neg().exp();
    Ok(e.mul(&chi_r).div(&r.powi(2 * i)))
}

/// Exact polynomial identity behind the antiderivative of e^{−r}·χ_i:
/// `r²·χ_i = r·χ_{i+1} − r·χ_{i+1}′ + χ_{i+1}`.
pub fn antiderivative_identity_check(i: usize) -> bool {
    let chi_i = chi(i);
    let chi_next = chi(i + 1);
    let lhs = chi_i.mul_monomial(2);
    let r = IntPoly::x();
    let rhs = &(&(&r * &chi_next) - &(&r * &chi_next.derivative())) + &chi_next;
    lhs == rhs
}

/// Three-term relation on both the χ and τ sides:
/// `χ_{i+1} = R²·χ_{i−1} + (2i−1)·χ_i` exactly, and
/// `s²·τ_{i+1} = τ_{i−1} + (2i−1)·τ_i` through the first `order`
/// series coefficients.
pub fn three_term_check(i: usize, order: usize) -> bool {
    assert!(i >= 1, "three-term relation needs i >= 1");
    let chi_ok = chi(i + 1)
        == &(&IntPoly::monomial(BigInt::one(), 2) * &chi(i - 1))
            + &chi(i).scale(&BigInt::from(2 * i - 1));

    let lo = tau_taylor(i - 1, order);
    let mid = tau_taylor(i, order);
    let hi = tau_taylor(i + 1, order);
    let factor = BigRational::from_integer(BigInt::from(2 * i - 1));
    let tau_ok = (0..order).all(|k| {
        let lhs = if k == 0 {
            BigRational::zero()
        } else {
            hi.coeffs[k - 1].clone()
        };
        let rhs = &lo.coeffs[k] + &mid.coeffs[k] * &factor;
        lhs == rhs
    });
    chi_ok && tau_ok
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent χ oracle: χ_i(R) = R^i · Y_{i−1}(1/R) with the Bessel
    /// polynomial built from its explicit coefficient formula
    /// Y_m(x) = Σ_k (m+k)!/((m−k)!·k!·2^k) x^k.
    fn chi_oracle(i: usize) -> IntPoly {
        if i == 0 {
            return IntPoly::one();
        }
        let m = i - 1;
        let mut coeffs = vec![BigInt::zero(); i + 1];
        for k in 0..=m {
            let num = factorial(m + k);
            let den = factorial(m - k) * factorial(k) * BigInt::from(2).pow(k as u32);
            coeffs[i - k] = num
                .exact_div_checked(&den)
                .expect("Bessel coefficients are integers");
        }
        IntPoly::new(coeffs)
    }

    trait ExactDivChecked {
        fn exact_div_checked(&self, d: &BigInt) -> Option<BigInt>;
    }
    impl ExactDivChecked for BigInt {
        fn exact_div_checked(&self, d: &BigInt) -> Option<BigInt> {
            use num_integer::Integer;
            let (q, r) = self.div_rem(d);
            r.is_zero().then_some(q)
        }
    }

    fn poly(cs: &[i64]) -> IntPoly {
        IntPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn chi_listing() {
        assert_eq!(chi(0), IntPoly::one());
        assert_eq!(chi(1), IntPoly::x());
        assert_eq!(chi(2), poly(&[0, 1, 1]));
        assert_eq!(chi(3), poly(&[0, 3, 3, 1]));
        assert_eq!(chi(4), poly(&[0, 15, 15, 6, 1]));
        assert_eq!(chi(5), poly(&[0, 105, 105, 45, 10, 1]));
    }

    #[test]
    fn chi_matches_bessel_oracle_up_to_20() {
        for i in 0..=20 {
            assert_eq!(chi(i), chi_oracle(i), "chi({i}) differs from oracle");
        }
    }

    #[test]
    fn chi_structure_up_to_40() {
        for i in 1..=40 {
            let c = chi(i);
            assert_eq!(c.degree(), Some(i));
            assert!(c.is_monic());
            assert!(c.coeff(0).is_zero(), "chi({i})(0) must vanish");
            assert!(
                c.coeffs().iter().skip(1).all(|a| a.is_positive()),
                "chi({i}) must have positive coefficients"
            );
        }
    }

    #[test]
    fn superfactorial_small_values() {
        assert_eq!(superfactorial(0), BigInt::one());
        assert_eq!(superfactorial(3), BigInt::from(12));
        // direct product oracle
        let direct: BigInt = (0..=5).map(factorial).product();
        assert_eq!(superfactorial(5), direct);
        assert_eq!(superfactorial(5), BigInt::from(34560));
    }

    #[test]
    fn delta_on_constants_and_chi() {
        // δ(R^0) at p = 2: −1 − 4·R^{−1}
        let one = LaurentPoly::one();
        let d = delta_apply(&one, 2, 1);
        let expected = &LaurentPoly::monomial(BigInt::from(-1), 0)
            + &LaurentPoly::monomial(BigInt::from(-4), -1);
        assert_eq!(d, expected);

        // j = 0 is the identity
        assert_eq!(delta_apply(&one, 3, 0), one);

        // δχ_2 at p = 2 is −R² − 3R − 3 and δ²χ_2 is (R³+5R²+12R+12)/R
        let chi2 = LaurentPoly::from_poly(chi(2));
        assert_eq!(
            delta_apply(&chi2, 2, 1),
            LaurentPoly::from_poly(poly(&[-3, -3, -1]))
        );
        assert_eq!(
            delta_apply(&chi2, 2, 2),
            LaurentPoly::new(-1, poly(&[12, 12, 5, 1]))
        );
    }

    #[test]
    fn delta_satisfies_product_rule_on_chi() {
        // δ(R^k χ_m) = −R^{k+1} χ_{m−1} − (2p−k−1) R^{k−1} χ_m
        for p in 1..=5i64 {
            for m in 1..=8usize {
                for k in -3..=3i64 {
                    let f = LaurentPoly::from_poly(chi(m)).mul_monomial(k);
                    let got = delta_apply(&f, p as u32, 1);
                    let t1 = LaurentPoly::from_poly(chi(m - 1))
                        .mul_monomial(k + 1)
                        .scale(&BigInt::from(-1));
                    let t2 = LaurentPoly::from_poly(chi(m))
                        .mul_monomial(k - 1)
                        .scale(&BigInt::from(-(2 * p - k - 1)));
                    assert_eq!(got, &t1 + &t2, "p={p} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn tau_series_values() {
        // τ_0 = cosh: coefficients 1/(2k)!
        let t0 = tau_taylor(0, 6);
        for (k, c) in t0.coeffs.iter().enumerate() {
            assert_eq!(
                *c,
                BigRational::new(BigInt::one(), factorial(2 * k)),
                "cosh coefficient {k}"
            );
        }
        // τ_2(0) = 1/3
        let t2 = tau_taylor(2, 1);
        assert_eq!(t2.coeffs[0], BigRational::new(BigInt::one(), BigInt::from(3)));
        // τ_1 coefficient k=1: −1/(2!·3) = −1/6
        let t1 = tau_taylor(1, 2);
        assert_eq!(
            t1.coeffs[1],
            -BigRational::new(BigInt::one(), BigInt::from(6))
        );
        // τ_3(0) = −1/15
        let t3 = tau_taylor(3, 1);
        assert_eq!(
            t3.coeffs[0],
            -BigRational::new(BigInt::one(), BigInt::from(15))
        );
    }

    #[test]
    fn tau_eval_against_closed_forms() {
        let prec = crate::mp::digits_to_bits(40);
        // τ_0(0) = 1
        let v = tau_eval(0, &Real::zero(prec), 40).unwrap();
        assert!((v.to_f64() - 1.0).abs() < 1e-30);
        // τ_1(1) = −sinh(1)
        let v = tau_eval(1, &Real::one(prec), 40).unwrap();
        assert!((v.to_f64() + 1.1752011936438014).abs() < 1e-12);
        // τ_3(0) = −1/15
        let v = tau_eval(3, &Real::zero(prec), 40).unwrap();
        assert!((v.to_f64() + 1.0 / 15.0).abs() < 1e-12);
        // argument bound enforced
        assert!(matches!(
            tau_eval(0, &Real::from_f64(51.0, prec), 40),
            Err(Error::ArgumentTooLarge { .. })
        ));
    }

    #[test]
    fn tau_eval_three_term_numeric() {
        let prec = crate::mp::digits_to_bits(40);
        for i in 1..=8 {
            for s in [0.25f64, 1.0, 3.0] {
                let sv = Real::from_f64(s, prec);
                let lhs = sv.mul(&sv).mul(&tau_eval(i + 1, &sv, 40).unwrap());
                let rhs = tau_eval(i - 1, &sv, 40)
                    .unwrap()
                    .add(&tau_eval(i, &sv, 40).unwrap().mul(&Real::from_i64(
                        2 * i as i64 - 1,
                        prec,
                    )));
                let err = lhs.sub(&rhs).abs().to_f64();
                assert!(err <= 1e-36, "i={i} s={s}: residual {err}");
            }
        }
    }

    #[test]
    fn psi_eval_matches_listing() {
        let prec = crate::mp::digits_to_bits(40);
        // ψ_0(1) = e^{−1}
        let v = psi_eval(0, &Real::one(prec)).unwrap();
        assert!((v.to_f64() - (-1.0f64).exp()).abs() < 1e-15);
        // ψ_1(2) = e^{−2}/2
        let v = psi_eval(1, &Real::from_f64(2.0, prec)).unwrap();
        assert!((v.to_f64() - (-2.0f64).exp() / 2.0).abs() < 1e-15);
        // ψ_2(1) = e^{−1}·(1 + 1) = 2e^{−1}
        let v = psi_eval(2, &Real::one(prec)).unwrap();
        assert!((v.to_f64() - 2.0 * (-1.0f64).exp()).abs() < 1e-15);
        // positivity requirement
        assert!(psi_eval(1, &Real::zero(prec)).is_err());
    }

    #[test]
    fn psi_eval_consistent_with_exact_chi() {
        let prec = crate::mp::digits_to_bits(40);
        for i in 0..=10 {
            for r in [0.5f64, 1.0, 2.0, 5.0] {
                let rv = Real::from_f64(r, prec);
                let psi = psi_eval(i, &rv).unwrap();
                let back = psi.mul(&rv.exp()).mul(&rv.powi(2 * i));
                let exact = chi(i).eval_map(&rv, |c| Real::from_bigint(c, prec));
                let err = back.sub(&exact).abs().to_f64() / exact.to_f64().abs().max(1.0);
                assert!(err < 1e-30, "i={i} r={r}: {err}");
            }
        }
    }

    #[test]
    fn antiderivative_identity() {
        for i in [0, 3, 20] {
            assert!(antiderivative_identity_check(i), "identity fails at i={i}");
        }
    }

    #[test]
    fn three_term_small_cases() {
        assert!(three_term_check(1, 8));
        assert!(three_term_check(4, 12));
        assert!(three_term_check(2, 6)); // includes χ_3 = R²χ_1 + 3χ_2
        for i in 1..=10 {
            assert!(three_term_check(i, 20), "three-term fails at i={i}");
        }
    }

    #[test]
    fn binomial_and_factorial() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 0), BigInt::one());
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
