//! The boundary-weighting linear system and its exact solution.
//!
//! For `n = 2p+1` the weighting functions β_0…β_p satisfy
//! `Σ_j δ^j χ_{p+i}(R) · β_j(R) = χ_{p+i+1}(R)/R` for `i = 0..p`, and the
//! magnitude follows from β_0 alone:
//! `|B^n_R| = (R^n + n·β_0(R)·R^{n-1}) / n!`.
//!
//! Appending that last relation as an extra row/column gives an extended
//! `(p+2)×(p+2)` system whose Cramer determinants yield the magnitude
//! directly; this is the second, independent route to `N_p` and `D_p`.

use num_bigint::BigInt;

use crate::bessel::{chi, delta_apply, factorial};
use crate::exactalg::bareiss_det;
use crate::hankel::{result_from_parts, MagnitudeResult, Method};
use crate::{Error, IntPoly, LaurentPoly, PolyMatrix, RationalFn};

/// The `(p+1)×(p+1)` system of Laurent-polynomial entries together with its
/// right-hand side.
#[derive(Clone)]
pub struct WeightSystem {
    pub p: usize,
    pub matrix: PolyMatrix,
    pub rhs: Vec<LaurentPoly>,
}

/// Exact solution: the weights β_j and the magnitude assembled from β_0.
#[derive(Clone, Debug)]
pub struct WeightSolution {
    pub p: usize,
    pub betas: Vec<RationalFn>,
    pub magnitude: RationalFn,
    /// Outcome of the recorded residual check `matrix·betas − rhs = 0`.
    pub residual_ok: bool,
}

/// Build the weighting system: entry `(i,j) = δ^j χ_{p+i}`, rhs entry
/// `i = χ_{p+i+1}/R`.
pub fn build_system(p: usize) -> WeightSystem {
    assert!(p >= 1, "the weighting system needs p >= 1");
    let matrix = PolyMatrix::from_fn(p + 1, p + 1, |i, j| {
        delta_apply(&LaurentPoly::from_poly(chi(p + i)), p as u32, j as u32)
    });
    let rhs: Vec<LaurentPoly> = (0..=p)
        .map(|i| LaurentPoly::from_poly(chi(p + i + 1)).mul_monomial(-1))
        .collect();
    WeightSystem { p, matrix, rhs }
}

/// Solve by per-unknown Cramer determinants over the integer Laurent ring,
/// then verify the residual exactly.
pub fn solve_weights(sys: &WeightSystem) -> Result<WeightSolution, Error> {
    let det = bareiss_det(&sys.matrix)?;
    if det.is_zero() {
        return Err(Error::SingularSystem { p: sys.p as u32 });
    }
    let det_rf = RationalFn::from_laurent(&det);
    let betas: Vec<RationalFn> = (0..=sys.p)
        .map(|j| {
            let replaced = sys.matrix.with_column(j, &sys.rhs);
            let det_j = bareiss_det(&replaced)?;
            Ok(&RationalFn::from_laurent(&det_j) / &det_rf)
        })
        .collect::<Result<_, Error>>()?;

    let residual_ok = (0..=sys.p).all(|i| {
        let mut acc = RationalFn::zero();
        for (j, beta) in betas.iter().enumerate() {
            acc = &acc + &(&RationalFn::from_laurent(sys.matrix.get(i, j)) * beta);
        }
        (&acc - &RationalFn::from_laurent(&sys.rhs[i])).is_zero()
    });

    let n = 2 * sys.p + 1;
    let r_pow_n = RationalFn::from_poly(IntPoly::monomial(BigInt::from(1), n));
    let n_r_pow = RationalFn::from_poly(IntPoly::monomial(BigInt::from(n as i64), n - 1));
    let magnitude = &(&r_pow_n + &(&betas[0] * &n_r_pow))
        / &RationalFn::from_poly(IntPoly::constant(factorial(n)));

    Ok(WeightSolution {
        p: sys.p,
        betas,
        magnitude,
        residual_ok,
    })
}

/// Magnitude via the extended `(p+2)×(p+2)` Cramer determinants.
///
/// The ratio of the two determinants is `|B^n_R|`; its canonical form has
/// numerator `N_p` and denominator `n!·D_p`, so both polynomials are
/// recovered by one exact integer division. For `p = 0` the system is
/// empty and the Hankel route value `R+1` is used directly.
pub fn magnitude_cramer(p: usize) -> Result<MagnitudeResult, Error> {
    if p == 0 {
        let mut r = crate::hankel::magnitude_hankel(0)?;
        r.method = Method::Cramer;
        return Ok(r);
    }
    let n = 2 * p + 1;
    let sys = build_system(p);
    let size = p + 2;

    let bottom = |j: usize, corner: LaurentPoly| -> LaurentPoly {
        if j == 0 {
            LaurentPoly::monomial(BigInt::from(-(n as i64)), (n - 1) as i64)
        } else if j == p + 1 {
            corner
        } else {
            LaurentPoly::zero()
        }
    };

    let den_matrix = PolyMatrix::from_fn(size, size, |i, j| {
        if i <= p {
            if j <= p {
                sys.matrix.get(i, j).clone()
            } else {
                LaurentPoly::zero()
            }
        } else {
            bottom(j, LaurentPoly::monomial(factorial(n), 0))
        }
    });
    let num_matrix = PolyMatrix::from_fn(size, size, |i, j| {
        if i <= p {
            if j <= p {
                sys.matrix.get(i, j).clone()
            } else {
                sys.rhs[i].clone()
            }
        } else {
            bottom(j, LaurentPoly::monomial(BigInt::from(1), n as i64))
        }
    });

    let num_det = bareiss_det(&num_matrix)?;
    let den_det = bareiss_det(&den_matrix)?;
    if den_det.is_zero() {
        return Err(Error::SingularSystem { p: p as u32 });
    }
    let magnitude = &RationalFn::from_laurent(&num_det) / &RationalFn::from_laurent(&den_det);

    let numerator = magnitude.numerator().clone();
    let denominator = magnitude
        .denominator()
        .exact_div(&IntPoly::constant(factorial(n)))?;
    result_from_parts(p, numerator, denominator, Method::Cramer)
}
