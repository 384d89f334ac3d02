//! Adjacency spectra, the blow-up spectrum formulas, and the classical
//! one-line bounds on the spectral radius.

mod bounds;
mod jacobi;
mod matrix;

pub use bounds::{classical_bounds, classical_bounds_with, BipartiteBounds, ClassicalBounds};
pub use jacobi::{
    eigenvalues_symmetric, eigenvalues_with, JacobiOptions, DEFAULT_SWEEP_CAP, DEFAULT_TOLERANCE,
};
pub use matrix::SymmetricMatrix;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Eigenvalues sorted descending, `mu_1 >= ... >= mu_n`, together with the
/// off-diagonal norm the solver stopped at.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    values: Vec<T>,
    residual: T,
}

impl<T: Scalar> Spectrum<T> {
    pub fn from_unsorted(mut values: Vec<T>, residual: T) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
        Self { values, residual }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn residual(&self) -> T {
        self.residual
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `mu_k` with the 1-based index used in the literature.
    pub fn mu(&self, k: usize) -> T {
        assert!(
            k >= 1 && k <= self.values.len(),
            "eigenvalue index {k} out of range"
        );
        self.values[k - 1]
    }

    /// Spectral radius of an adjacency matrix, `mu_1`.
    pub fn largest(&self) -> T {
        self.values[0]
    }

    pub fn smallest(&self) -> T {
        self.values[self.values.len() - 1]
    }

    pub fn sum(&self) -> T {
        self.values.iter().fold(T::zero(), |acc, &x| acc + x)
    }

    pub fn sum_of_squares(&self) -> T {
        self.values.iter().fold(T::zero(), |acc, &x| acc + x * x)
    }

    /// Sup-norm distance between two equally long sorted spectra.
    pub fn linf_distance(&self, other: &Self) -> Result<T> {
        if self.len() != other.len() {
            return Err(Error::SpectrumLength {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .fold(T::zero(), |acc, (&a, &b)| acc.max((a - b).abs())))
    }

    pub fn to_f64(&self) -> Spectrum<f64> {
        Spectrum {
            values: self.values.iter().map(|v| v.to_f64_lossy()).collect(),
            residual: self.residual.to_f64_lossy(),
        }
    }
}

/// Adjacency spectrum of `g` using the default solver settings for `T`.
pub fn graph_spectrum<T: Scalar>(g: &Graph) -> Result<Spectrum<T>> {
    eigenvalues_with(&SymmetricMatrix::adjacency(g), JacobiOptions::default())
}

/// Spectrum of `blow_up(g, t)` predicted from the spectrum of `g`:
/// every eigenvalue scaled by `t`, plus `n(t-1)` zeros.
pub fn predicted_blow_up_spectrum<T: Scalar>(
    spectrum: &Spectrum<T>,
    n: usize,
    t: usize,
) -> Result<Spectrum<T>> {
    predicted(spectrum, n, t, T::zero(), T::zero())
}

/// Spectrum of `closed_blow_up(g, t)` predicted from the spectrum of `g`:
/// `t * mu_i + t - 1` for each eigenvalue, plus `n(t-1)` copies of `-1`.
pub fn predicted_closed_blow_up_spectrum<T: Scalar>(
    spectrum: &Spectrum<T>,
    n: usize,
    t: usize,
) -> Result<Spectrum<T>> {
    let shift = T::from_usize(t).unwrap_or_else(T::nan) - T::one();
    predicted(spectrum, n, t, shift, -T::one())
}

fn predicted<T: Scalar>(
    spectrum: &Spectrum<T>,
    n: usize,
    t: usize,
    shift: T,
    filler: T,
) -> Result<Spectrum<T>> {
    if spectrum.len() != n {
        return Err(Error::SpectrumLength {
            expected: n,
            found: spectrum.len(),
        });
    }
    if t == 0 {
        return Err(Error::ZeroBlowUp);
    }
    let scale = T::from_usize(t).unwrap_or_else(T::nan);
    let mut values: Vec<T> = spectrum
        .values
        .iter()
        .map(|&mu| scale * mu + shift)
        .collect();
    values.extend(std::iter::repeat_n(filler, n * (t - 1)));
    Ok(Spectrum::from_unsorted(values, scale * spectrum.residual))
}
