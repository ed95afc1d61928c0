//! Tsallis q-entropy of probability vectors and density matrices.
//!
//! `S_q(p) = (1 - sum_i p_i^q) / (q - 1)` for `q > 1`, with the
//! conventions `0^q = 0` and natural logarithms. As `q -> 1` the formula
//! tends to the Shannon entropy `-sum p ln p`, and inside a small window
//! around 1 the limit form is used directly to avoid cancellation.
//! Zero entries never contribute, so padding a distribution with zeros
//! leaves every value here exactly unchanged.

use crate::error::{Error, Result};
use crate::linalg::{eigenvalues_hermitian, DensityMatrix, Tolerances};
use crate::tomography::TomogramVector;

/// Width of the window around `q = 1` inside which the Shannon limit
/// replaces the `1 / (q - 1)` form.
pub const Q_LIMIT_WINDOW: f64 = 1e-8;

/// Entropic order `q >= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QParameter(f64);

impl QParameter {
    pub fn new(q: f64) -> Result<Self> {
        if !q.is_finite() || q < 1.0 {
            return Err(Error::QOutOfRange { q });
        }
        Ok(QParameter(q))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// True when the Shannon limit form applies.
    pub fn is_limit(self) -> bool {
        (self.0 - 1.0).abs() <= Q_LIMIT_WINDOW
    }
}

/// `sum_i p_i^q` over the strictly positive entries.
pub fn sum_q_powers(p: &[f64], q: f64) -> f64 {
    p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x.powf(q))
        .sum()
}

fn shannon_of_slice(p: &[f64]) -> f64 {
    -p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x * x.ln())
        .sum::<f64>()
}

fn tsallis_of_slice(p: &[f64], q: QParameter) -> f64 {
    if q.is_limit() {
        shannon_of_slice(p)
    } else {
        (1.0 - sum_q_powers(p, q.value())) / (q.value() - 1.0)
    }
}

/// Tsallis entropy of a measurement outcome distribution.
pub fn tsallis_classical(w: &TomogramVector, q: QParameter) -> f64 {
    tsallis_of_slice(w.probabilities(), q)
}

/// Shannon entropy of a measurement outcome distribution.
pub fn shannon(w: &TomogramVector) -> f64 {
    shannon_of_slice(w.probabilities())
}

/// Tsallis entropy of a state, evaluated on its eigenvalue spectrum.
/// Eigenvalues inside the negative rounding band are clamped to zero.
pub fn tsallis_quantum(
    rho: &DensityMatrix,
    q: QParameter,
    tolerances: &Tolerances,
) -> Result<f64> {
    let spectrum: Vec<f64> = eigenvalues_hermitian(rho.matrix(), tolerances)?
        .into_iter()
        .map(|lambda| lambda.max(0.0))
        .collect();
    Ok(tsallis_of_slice(&spectrum, q))
}

/// Shannon entropy of the eigenvalue spectrum.
pub fn von_neumann(rho: &DensityMatrix, tolerances: &Tolerances) -> Result<f64> {
    let spectrum: Vec<f64> = eigenvalues_hermitian(rho.matrix(), tolerances)?
        .into_iter()
        .map(|lambda| lambda.max(0.0))
        .collect();
    Ok(shannon_of_slice(&spectrum))
}
