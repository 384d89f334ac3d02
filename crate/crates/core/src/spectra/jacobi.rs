//! Cyclic-by-row Jacobi eigenvalue iteration for dense symmetric matrices.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{Spectrum, SymmetricMatrix};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_SWEEP_CAP: usize = 100;

#[derive(Debug, Clone, Copy)]
pub struct JacobiOptions<T> {
    /// Relative stopping tolerance: iteration stops once the off-diagonal
    /// Frobenius norm is at most `tol * (1 + ||A||_F)`.
    pub tol: T,
    pub sweep_cap: usize,
}

impl<T: Scalar> Default for JacobiOptions<T> {
    fn default() -> Self {
        let floor = T::epsilon() * T::from_f64_lossy(16.0);
        Self {
            tol: T::from_f64_lossy(DEFAULT_TOLERANCE).max(floor),
            sweep_cap: DEFAULT_SWEEP_CAP,
        }
    }
}

/// Eigenvalues of `a`, sorted descending, with the default sweep cap.
pub fn eigenvalues_symmetric<T: Scalar>(a: &SymmetricMatrix<T>, tol: T) -> Result<Spectrum<T>> {
    eigenvalues_with(
        a,
        JacobiOptions {
            tol,
            sweep_cap: DEFAULT_SWEEP_CAP,
        },
    )
}

pub fn eigenvalues_with<T: Scalar>(
    a: &SymmetricMatrix<T>,
    options: JacobiOptions<T>,
) -> Result<Spectrum<T>> {
    if options.tol.is_nan() || options.tol <= T::zero() {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let n = a.n();
    let threshold = options.tol * (T::one() + a.frobenius_norm());
    let mut w = a.clone().into_data();

    let mut sweeps = 0;
    let mut residual = off_diagonal_norm(&w, n);
    while residual > threshold {
        if sweeps == options.sweep_cap {
            return Err(Error::Convergence {
                residual: residual.to_f64_lossy(),
                sweeps,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut w, n, p, q);
            }
        }
        sweeps += 1;
        residual = off_diagonal_norm(&w, n);
    }

    let values = (0..n).map(|i| w[i * n + i]).collect();
    Ok(Spectrum::from_unsorted(values, residual))
}

/// Annihilates `w[p][q]` with a plane rotation applied on both sides.
fn rotate<T: Scalar>(w: &mut [T], n: usize, p: usize, q: usize) {
    let apq = w[p * n + q];
    if apq == T::zero() {
        return;
    }
    let app = w[p * n + p];
    let aqq = w[q * n + q];
    let hundred = T::from_f64_lossy(100.0);
    let g = hundred * apq.abs();
    // Below working precision relative to both diagonal entries.
    if app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
        w[p * n + q] = T::zero();
        w[q * n + p] = T::zero();
        return;
    }

    let h = aqq - app;
    let t = if h.abs() + g == h.abs() {
        apq / h
    } else {
        let theta = T::from_f64_lossy(0.5) * h / apq;
        let t = T::one() / (theta.abs() + (T::one() + theta * theta).sqrt());
        if theta < T::zero() {
            -t
        } else {
            t
        }
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;
    let tau = s / (T::one() + c);

    w[p * n + p] = app - t * apq;
    w[q * n + q] = aqq + t * apq;
    w[p * n + q] = T::zero();
    w[q * n + p] = T::zero();
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = w[r * n + p];
        let arq = w[r * n + q];
        let new_rp = arp - s * (arq + arp * tau);
        let new_rq = arq + s * (arp - arq * tau);
        w[r * n + p] = new_rp;
        w[p * n + r] = new_rp;
        w[r * n + q] = new_rq;
        w[q * n + r] = new_rq;
    }
}

fn off_diagonal_norm<T: Scalar>(w: &[T], n: usize) -> T {
    let mut sum = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum = sum + w[i * n + j] * w[i * n + j];
            }
        }
    }
    sum.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exchange_matrix() {
        let a = SymmetricMatrix::<f64>::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let s = eigenvalues_symmetric(&a, 1e-12).unwrap();
        assert!((s.values()[0] - 1.0).abs() < 1e-14);
        assert!((s.values()[1] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn zero_matrix() {
        let s = eigenvalues_symmetric(&SymmetricMatrix::<f64>::zeros(3), 1e-12).unwrap();
        assert_eq!(s.values(), &[0.0, 0.0, 0.0]);
        assert_eq!(s.residual(), 0.0);
    }

    #[test]
    fn path_on_three_vertices() {
        // Characteristic polynomial x^3 - 2x.
        let a = SymmetricMatrix::from_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![1.0, 0.0, 1.0],
            vec![0.0, 1.0, 0.0],
        ])
        .unwrap();
        let s = eigenvalues_symmetric(&a, 1e-12).unwrap();
        let r2 = 2f64.sqrt();
        for (got, want) in s.values().iter().zip([r2, 0.0, -r2]) {
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
    }

    #[test]
    fn single_entry() {
        let a = SymmetricMatrix::from_rows(&[vec![4.5]]).unwrap();
        assert_eq!(eigenvalues_symmetric(&a, 1e-12).unwrap().values(), &[4.5]);
    }

    #[test]
    fn works_in_single_precision() {
        let a = SymmetricMatrix::<f32>::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let s = eigenvalues_with(&a, JacobiOptions::default()).unwrap();
        assert!((s.values()[0] - 3.0).abs() < 1e-5);
        assert!((s.values()[1] - 1.0).abs() < 1e-5);
    }

    #[test]
    fn sweep_cap_reports_residual() {
        let a = SymmetricMatrix::from_rows(&[
            vec![1.0, 2.0, 3.0],
            vec![2.0, 4.0, 5.0],
            vec![3.0, 5.0, 6.0],
        ])
        .unwrap();
        let err = eigenvalues_with(
            &a,
            JacobiOptions {
                tol: 1e-12,
                sweep_cap: 0,
            },
        )
        .unwrap_err();
        match err {
            Error::Convergence { residual, sweeps } => {
                assert_eq!(sweeps, 0);
                assert!(residual > 0.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_nonpositive_tolerance() {
        assert!(eigenvalues_symmetric(&SymmetricMatrix::<f64>::zeros(2), 0.0).is_err());
    }

    #[test]
    fn rejects_asymmetric_input() {
        assert!(SymmetricMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
    }
}
