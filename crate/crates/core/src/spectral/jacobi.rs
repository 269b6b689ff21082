//! Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const MAX_SWEEPS: usize = 50;

fn off_diagonal_norm<T: Scalar>(a: &[T], size: usize) -> T {
    let mut acc = T::zero();
    for i in 0..size {
        for j in 0..size {
            if i != j {
                acc += a[i * size + j] * a[i * size + j];
            }
        }
    }
    acc.sqrt()
}

fn sweep<T: Scalar>(a: &mut [T], size: usize) {
    let two = T::lit(2.0);
    for p in 0..size {
        for q in p + 1..size {
            let apq = a[p * size + q];
            if apq == T::zero() {
                continue;
            }
            let app = a[p * size + p];
            let aqq = a[q * size + q];
            let theta = (aqq - app) / (two * apq);
            let t = theta.signum() / (theta.abs() + theta.hypot(T::one()));
            let c = T::one() / t.hypot(T::one());
            let s = t * c;
            a[p * size + p] = app - t * apq;
            a[q * size + q] = aqq + t * apq;
            a[p * size + q] = T::zero();
            a[q * size + p] = T::zero();
            for r in 0..size {
                if r == p || r == q {
                    continue;
                }
                let arp = a[r * size + p];
                let arq = a[r * size + q];
                let new_rp = c * arp - s * arq;
                let new_rq = s * arp + c * arq;
                a[r * size + p] = new_rp;
                a[p * size + r] = new_rp;
                a[r * size + q] = new_rq;
                a[q * size + r] = new_rq;
            }
        }
    }
}

/// Eigenvalues of the symmetric `size × size` row-major matrix `a`,
/// ascending. Sweeps until the off-diagonal Frobenius norm drops below
/// `tol · ‖a‖_F`, then runs one more sweep. `a` is overwritten.
pub fn symmetric_eigenvalues<T: Scalar>(a: &mut [T], size: usize, tol: T) -> Result<Vec<T>> {
    assert_eq!(a.len(), size * size);
    let norm = a.iter().map(|&x| x * x).sum::<T>().sqrt();
    let target = tol * norm;
    let mut converged = norm == T::zero();
    let mut sweeps = 0;
    while !converged {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Numeric(format!(
                "Jacobi iteration did not converge in {MAX_SWEEPS} sweeps (off-diagonal norm {})",
                off_diagonal_norm(a, size)
            )));
        }
        sweep(a, size);
        sweeps += 1;
        if off_diagonal_norm(a, size) < target {
            sweep(a, size);
            converged = true;
        }
    }
    let mut eig: Vec<T> = (0..size).map(|i| a[i * size + i]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    Ok(eig)
}
