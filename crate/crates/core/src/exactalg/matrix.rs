use rayon::prelude::*;

use super::{Coeff, LaurentPolynomial, Polynomial};
use crate::Error;

/// Row-major matrix of Laurent polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct PolynomialMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPolynomial<T>>,
}

impl<T: Coeff> PolynomialMatrix<T> {
    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> LaurentPolynomial<T>,
    {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolynomialMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: Vec<LaurentPolynomial<T>>,
    ) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(PolynomialMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPolynomial<T> {
        &self.entries[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// The matrix with column `col` replaced by `column`.
    pub fn with_column(&self, col: usize, column: &[LaurentPolynomial<T>]) -> Self {
        assert_eq!(column.len(), self.rows);
        let mut out = self.clone();
        for i in 0..self.rows {
            out.entries[i * self.cols + col] = column[i].clone();
        }
        out
    }
}

/// Exact determinant by fraction-free Bareiss elimination.
///
/// Negative exponents are cleared by a single global power of `R` up front
/// and divided back out of the result, so the elimination itself runs over
/// ordinary integer polynomials where every intermediate division is exact.
pub fn bareiss_det<T: Coeff + Send + Sync>(
    m: &PolynomialMatrix<T>,
) -> Result<LaurentPolynomial<T>, Error> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let clear = m
        .entries
        .iter()
        .filter_map(|e| e.low_exponent())
        .min()
        .unwrap_or(0)
        .min(0);

    let mut a: Vec<Vec<Polynomial<T>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    m.get(i, j)
                        .mul_monomial(-clear)
                        .to_polynomial()
                        .expect("entries are polynomial after clearing")
                })
                .collect()
        })
        .collect();

    let mut sign = false;
    let mut prev = Polynomial::<T>::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return Ok(LaurentPolynomial::zero()),
            }
        }
        if k + 1 == n {
            break;
        }
        let pivot_row = a[k].clone();
        let pivot = pivot_row[k].clone();
        let prev_piv = prev.clone();
        a[k + 1..].par_iter_mut().try_for_each(|row| {
            let lead = row[k].clone();
            for j in k..n {
                let t = &(&pivot * &row[j]) - &(&lead * &pivot_row[j]);
                row[j] = t.exact_div(&prev_piv)?;
            }
            Ok::<(), Error>(())
        })?;
        prev = pivot;
    }

    let det = a[n - 1][n - 1].clone();
    let det = if sign { -&det } else { det };
    Ok(LaurentPolynomial::new(clear * n as i64, det))
}

/// Determinant by cofactor expansion along the first row. Exponential cost;
/// kept as the independent oracle for small matrices.
pub fn cofactor_det<T: Coeff>(m: &PolynomialMatrix<T>) -> Result<LaurentPolynomial<T>, Error> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    fn go<T: Coeff>(
        m: &PolynomialMatrix<T>,
        rows: &[usize],
        cols: &[usize],
    ) -> LaurentPolynomial<T> {
        if rows.len() == 1 {
            return m.get(rows[0], cols[0]).clone();
        }
        let mut acc = LaurentPolynomial::zero();
        let sub_rows = &rows[1..];
        for (idx, &c) in cols.iter().enumerate() {
            let entry = m.get(rows[0], c);
            if entry.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&cc| cc != c)
                .collect();
            let minor = go(m, sub_rows, &sub_cols);
            let term = entry * &minor;
            acc = if idx % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    let idx: Vec<usize> = (0..m.rows).collect();
    Ok(go(m, &idx, &idx))
}
