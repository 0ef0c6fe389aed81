//! Minimal dense linear algebra for the oracle's small fixed-size systems
//! (6x6 complex frequency solves, 36x36 real Lyapunov solves).

use num_complex::Complex;

use crate::error::{GyroError, Result};
use crate::scalar::{lit, Real};

/// Solve `A X = B` in place by Gaussian elimination with partial pivoting.
/// `a` is n x n row-major, `b` is n x ncols row-major; on success `b` holds `X`.
pub fn solve_complex_in_place<F: Real>(
    a: &mut [Complex<F>],
    b: &mut [Complex<F>],
    n: usize,
    ncols: usize,
) -> Result<()> {
    assert_eq!(a.len(), n * n);
    assert_eq!(b.len(), n * ncols);
    let scale = a
        .iter()
        .map(|z| z.norm_sqr())
        .fold(F::zero(), F::max)
        .sqrt();
    let tiny = scale * lit::<F>(1e-14) * F::from_usize(n).unwrap();

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&i, &j| {
                a[i * n + col]
                    .norm_sqr()
                    .partial_cmp(&a[j * n + col].norm_sqr())
                    .unwrap()
            })
            .unwrap();
        if a[pivot_row * n + col].norm() <= tiny {
            return Err(GyroError::SingularSystem);
        }
        if pivot_row != col {
            for k in 0..n {
                a.swap(col * n + k, pivot_row * n + k);
            }
            for k in 0..ncols {
                b.swap(col * ncols + k, pivot_row * ncols + k);
            }
        }
        let pivot = a[col * n + col];
        for row in (col + 1)..n {
            let factor = a[row * n + col] / pivot;
            if factor == Complex::new(F::zero(), F::zero()) {
                continue;
            }
            for k in col..n {
                let above = a[col * n + k];
                a[row * n + k] = a[row * n + k] - factor * above;
            }
            for k in 0..ncols {
                let above = b[col * ncols + k];
                b[row * ncols + k] = b[row * ncols + k] - factor * above;
            }
        }
    }

    for col in (0..n).rev() {
        let pivot = a[col * n + col];
        for k in 0..ncols {
            let mut sum = b[col * ncols + k];
            for j in (col + 1)..n {
                sum = sum - a[col * n + j] * b[j * ncols + k];
            }
            b[col * ncols + k] = sum / pivot;
        }
    }
    Ok(())
}

/// Solve the real system `A x = b` (row-major `a`, length-n `b`).
pub fn solve_real<F: Real>(a: &[F], b: &[F], n: usize) -> Result<Vec<F>> {
    let mut ac: Vec<Complex<F>> = a.iter().map(|&x| Complex::new(x, F::zero())).collect();
    let mut bc: Vec<Complex<F>> = b.iter().map(|&x| Complex::new(x, F::zero())).collect();
    solve_complex_in_place(&mut ac, &mut bc, n, 1)?;
    Ok(bc.into_iter().map(|z| z.re).collect())
}

/// Cholesky factorization of a symmetric matrix; `Err` means the matrix is
/// not positive definite. Used to certify Hurwitz stability through the
/// Lyapunov criterion.
pub fn cholesky_is_positive_definite<F: Real>(a: &[F], n: usize) -> bool {
    assert_eq!(a.len(), n * n);
    let mut l = vec![F::zero(); n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut sum = a[i * n + j];
            for k in 0..j {
                sum -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if sum <= F::zero() {
                    return false;
                }
                l[i * n + i] = sum.sqrt();
            } else {
                l[i * n + j] = sum / l[j * n + j];
            }
        }
    }
    true
}
