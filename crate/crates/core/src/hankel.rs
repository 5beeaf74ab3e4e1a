//! Magnitude of the odd ball as a ratio of Hankel determinants of reverse
//! Bessel polynomials, with the structural checks and diagnostics on the
//! resulting integer polynomials.
//!
//! For `n = 2p+1`,
//! `|B^n_R| = det[χ_{i+j+2}]_{i,j=0}^p / (n!·R·det[χ_{i+j}]_{i,j=0}^p)`,
//! and dividing the two determinants by their common monomial factors
//! `sf(p)·R^{p+1}` and `sf(p)·R^p` leaves the numerator and denominator
//! polynomials `N_p`, `D_p` with `|B^n_R| = N_p/(n!·D_p)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bessel::{chi, factorial, superfactorial};
use crate::exactalg::bareiss_det;
use crate::mp::{Complex, Real};
use crate::{Error, IntPoly, LaurentPoly, PolyMatrix, RationalFn};

/// Which route produced a [`MagnitudeResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Hankel,
    Cramer,
    Schroeder,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Hankel => "hankel",
            Method::Cramer => "cramer",
            Method::Schroeder => "schroeder",
        }
    }
}

/// Per-dimension record: `|B^n_R| = numerator / (n! · denominator)`.
#[derive(Clone, Debug)]
pub struct MagnitudeResult {
    pub n: usize,
    pub p: usize,
    pub numerator: IntPoly,
    pub denominator: IntPoly,
    pub magnitude: RationalFn,
    pub method: Method,
    pub checks: BTreeMap<String, bool>,
}

/// Hankel matrix with entry `(i,j) = χ_{i+j+start}`.
pub fn hankel_matrix(start: usize, size: usize) -> PolyMatrix {
    PolyMatrix::from_fn(size, size, |i, j| LaurentPoly::from_poly(chi(i + j + start)))
}

/// Assemble a [`MagnitudeResult`] from an exact numerator/denominator pair.
pub(crate) fn result_from_parts(
    p: usize,
    numerator: IntPoly,
    denominator: IntPoly,
    method: Method,
) -> Result<MagnitudeResult, Error> {
    let n = 2 * p + 1;
    let den_scaled = denominator.scale(&factorial(n));
    let magnitude = RationalFn::new(numerator.clone(), den_scaled)?;
    Ok(MagnitudeResult {
        n,
        p,
        numerator,
        denominator,
        magnitude,
        method,
        checks: BTreeMap::new(),
    })
}

/// Magnitude of `B^{2p+1}_R` via the two Hankel determinants.
pub fn magnitude_hankel(p: usize) -> Result<MagnitudeResult, Error> {
    let det_lo = bareiss_det(&hankel_matrix(0, p + 1))?;
    let det_hi = bareiss_det(&hankel_matrix(2, p + 1))?;
    let sf = superfactorial(p);

    let numerator = det_hi
        .to_polynomial()?
        .exact_div(&IntPoly::monomial(sf.clone(), p + 1))?;
    let denominator = det_lo
        .to_polynomial()?
        .exact_div(&IntPoly::monomial(sf, p))?;
    result_from_parts(p, numerator, denominator, Method::Hankel)
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// The predicted top-three coefficients `[1, c1, c2]` of `N_p`.
fn numerator_leading_terms(p: i64) -> [BigInt; 3] {
    [
        BigInt::one(),
        (big(p + 1).pow(2) * big(p + 2)) / big(2),
        (big(p) * big(p + 1).pow(3) * big(p + 2) * big(p + 3)) / big(8),
    ]
}

/// The predicted top-three coefficients `[1, c1, c2]` of `D_p`.
fn denominator_leading_terms(p: i64) -> [BigInt; 3] {
    [
        BigInt::one(),
        (big(p - 1) * big(p) * big(p + 1)) / big(2),
        (big(p - 2) * big(p - 1) * big(p) * big(p + 1).pow(3)) / big(8),
    ]
}

fn check_leading(poly: &IntPoly, expected: &[BigInt; 3]) -> bool {
    let Some(deg) = poly.degree() else {
        return false;
    };
    expected.iter().enumerate().all(|(t, want)| {
        let got = if t <= deg {
            poly.coeff(deg - t)
        } else {
            BigInt::zero()
        };
        got == *want
    })
}

/// Structural theorem suite: degrees, monicity, positivity, the
/// constant-term relation `N_p(0) = n!·D_p(0)` and the top three
/// coefficients of both polynomials, all as exact integer comparisons.
pub fn structural_checks(r: &MagnitudeResult) -> BTreeMap<String, bool> {
    let p = r.p;
    let kappa = (p + 1) * (p + 2) / 2;
    let mut out = BTreeMap::new();
    out.insert(
        "degree_numerator".into(),
        r.numerator.degree() == Some(kappa),
    );
    out.insert(
        "degree_denominator".into(),
        r.denominator.degree() == Some(p * (p.max(1) - 1) / 2),
    );
    out.insert("monic_numerator".into(), r.numerator.is_monic());
    out.insert("monic_denominator".into(), r.denominator.is_monic());
    out.insert(
        "positive_numerator".into(),
        !r.numerator.is_zero() && r.numerator.coeffs().iter().all(Signed::is_positive),
    );
    out.insert(
        "positive_denominator".into(),
        !r.denominator.is_zero() && r.denominator.coeffs().iter().all(Signed::is_positive),
    );
    out.insert(
        "constant_term_relation".into(),
        r.numerator.coeff(0) == factorial(r.n) * r.denominator.coeff(0),
    );
    out.insert(
        "leading_terms_numerator".into(),
        check_leading(&r.numerator, &numerator_leading_terms(p as i64)),
    );
    out.insert(
        "leading_terms_denominator".into(),
        check_leading(&r.denominator, &denominator_leading_terms(p as i64)),
    );
    out
}

/// Large-`R` expansion of `N_p/(n!·D_p)` by exact long division in
/// descending powers: entry `t` is the rational coefficient of `R^{n-t}`.
pub fn asymptotic_expansion(
    r: &MagnitudeResult,
    terms: usize,
) -> Result<Vec<BigRational>, Error> {
    let deg_n = r.numerator.degree().expect("numerator is nonzero");
    let deg_d = r.denominator.degree().expect("denominator is nonzero");
    let max = deg_n - deg_d + 1;
    if terms > max {
        return Err(Error::TooManyTerms {
            requested: terms,
            max,
        });
    }
    let embed = |c: &BigInt| BigRational::from_integer(c.clone());
    let den: Vec<BigRational> = r.denominator.coeffs().iter().map(embed).collect();
    let den_scale = BigRational::from_integer(factorial(r.n));
    let mut rem: Vec<BigRational> = r.numerator.coeffs().iter().map(embed).collect();
    let mut out = Vec::with_capacity(terms);
    for t in 0..terms {
        let q_deg = deg_n - deg_d - t;
        let c = rem[deg_d + q_deg].clone() / den.last().unwrap().clone();
        for (j, d) in den.iter().enumerate() {
            let idx = q_deg + j;
            rem[idx] = &rem[idx] - &(&c * d);
        }
        out.push(c / &den_scale);
    }
    Ok(out)
}

/// Exact log-concavity test `a_i² ≥ a_{i−1}·a_{i+1}` for all interior `i`.
pub fn log_concavity_check(poly: &IntPoly) -> Result<bool, Error> {
    if let Some(idx) = poly.coeffs().iter().position(|c| !c.is_positive()) {
        return Err(Error::NonPositiveCoefficient(idx));
    }
    let cs = poly.coeffs();
    Ok((1..cs.len().saturating_sub(1))
        .all(|i| &cs[i] * &cs[i] >= &cs[i - 1] * &cs[i + 1]))
}

/// Numeric roots of one polynomial with residual and sector diagnostics.
#[derive(Clone, Debug)]
pub struct RootReport {
    /// (re, im) pairs, double precision renderings of the high-precision
    /// iterates.
    pub roots: Vec<(f64, f64)>,
    /// `|poly(z)| / Σ|a_k||z|^k` per root.
    pub residuals: Vec<f64>,
    pub max_residual: f64,
    /// Strict sector test `3π/4 < arg z < 5π/4` per root.
    pub in_sector: Vec<bool>,
    pub converged: Vec<bool>,
    pub all_converged: bool,
    pub iterations: usize,
}

/// All complex roots by Aberth–Ehrlich simultaneous iteration at the given
/// binary precision (256 bits by default upstream).
///
/// Zero roots are split off exactly beforehand. If some root fails to
/// converge within the iteration budget the partial result is still
/// returned, flagged per root.
pub fn roots_aberth(poly: &IntPoly, prec: usize) -> Result<RootReport, Error> {
    let Some(deg) = poly.degree() else {
        return Err(Error::InvalidInput("zero polynomial has no roots".into()));
    };
    if deg == 0 {
        return Err(Error::InvalidInput(
            "constant polynomial has no roots".into(),
        ));
    }

    let zero_roots = poly.trailing_zeros();
    let reduced = poly
        .exact_div(&IntPoly::monomial(BigInt::one(), zero_roots))
        .expect("trailing zeros divide exactly");
    let d = reduced.degree().unwrap();

    let coeffs: Vec<Real> = reduced
        .coeffs()
        .iter()
        .map(|c| Real::from_bigint(c, prec))
        .collect();
    let deriv: Vec<Real> = reduced
        .derivative()
        .coeffs()
        .iter()
        .map(|c| Real::from_bigint(c, prec))
        .collect();

    // Fujiwara-style radius from coefficient bit lengths.
    let lead_bits = reduced.leading().bits() as f64;
    let mut radius: f64 = 0.0;
    for k in 1..=d {
        let c = reduced.coeff(d - k);
        if c.is_zero() {
            continue;
        }
        let bits = c.bits() as f64;
        radius = radius.max(2f64.powf((bits - lead_bits + 1.0) / k as f64));
    }
    radius = radius.max(1e-3);

    let mut z: Vec<Complex> = (0..d)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / d as f64 + 0.4;
            Complex::new(
                Real::from_f64(radius * theta.cos(), prec),
                Real::from_f64(radius * theta.sin(), prec),
            )
        })
        .collect();

    let tol_shift = -(prec as i64) + 16;
    let mut converged = vec![false; d];
    let max_iter = 400;
    let mut iterations = 0;
    for it in 0..max_iter {
        iterations = it + 1;
        let mut all_done = true;
        for i in 0..d {
            if converged[i] {
                continue;
            }
            let pv = horner(&coeffs, &z[i], prec);
            let pd = horner(&deriv, &z[i], prec);
            if pd.norm_sqr().is_zero() {
                // nudge off a critical point
                z[i] = z[i].add(&Complex::new(
                    Real::from_f64(1e-3 * radius, prec),
                    Real::from_f64(1e-3 * radius, prec),
                ));
                all_done = false;
                continue;
            }
            let w = pv.div(&pd);
            let mut sum = Complex::zero(prec);
            for j in 0..d {
                if i != j {
                    let diff = z[i].sub(&z[j]);
                    sum = sum.add(&Complex::new(Real::one(prec), Real::zero(prec)).div(&diff));
                }
            }
            let one = Complex::new(Real::one(prec), Real::zero(prec));
            let denom = one.sub(&w.mul(&sum));
            let delta = if denom.norm_sqr().is_zero() {
                w.clone()
            } else {
                w.div(&denom)
            };
            z[i] = z[i].sub(&delta);
            let scale_exp = z[i].abs().exponent().unwrap_or(0).max(0);
            let small = delta
                .abs()
                .exponent()
                .map_or(true, |e| e < scale_exp + tol_shift);
            if small {
                converged[i] = true;
            } else {
                all_done = false;
            }
        }
        if all_done {
            break;
        }
    }

    let mut roots = Vec::with_capacity(deg);
    let mut residuals = Vec::with_capacity(deg);
    let mut in_sector = Vec::with_capacity(deg);
    let mut flags = Vec::with_capacity(deg);
    for _ in 0..zero_roots {
        roots.push((0.0, 0.0));
        residuals.push(0.0);
        in_sector.push(false);
        flags.push(true);
    }
    for (i, zi) in z.iter().enumerate() {
        let pv = horner(&coeffs, zi, prec).abs();
        let az = zi.abs();
        // coefficient scale Σ |a_k| |z|^k
        let mut scale = Real::zero(prec);
        for c in coeffs.iter().rev() {
            scale = scale.mul(&az).add(&c.abs());
        }
        let rel = if scale.is_zero() {
            0.0
        } else {
            pv.div(&scale).to_f64()
        };
        let (re, im) = (zi.re.to_f64(), zi.im.to_f64());
        roots.push((re, im));
        residuals.push(rel);
        in_sector.push(re < 0.0 && im.abs() < -re);
        flags.push(converged[i]);
    }
    let max_residual = residuals.iter().cloned().fold(0.0, f64::max);
    let all_converged = flags.iter().all(|&c| c);
    Ok(RootReport {
        roots,
        residuals,
        max_residual,
        in_sector,
        converged: flags,
        all_converged,
        iterations,
    })
}

fn horner(coeffs: &[Real], z: &Complex, prec: usize) -> Complex {
    let mut acc = Complex::zero(prec);
    for c in coeffs.iter().rev() {
        acc = acc.mul(z);
        acc.re = acc.re.add(c);
    }
    acc
}
