//! Tomographic probability vectors of qudit states.
//!
//! The tomogram of a state `rho` under a measurement unitary `u` is the
//! diagonal of `u rho u^H`: the outcome distribution of the von Neumann
//! measurement in the rotated basis. Two independent routes compute it,
//! a direct conjugation and a spectral route through the eigenbasis, and
//! they must agree to tight tolerance on every state.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::indexing::{marginalization_matrix, reduce_density, FactorShape, MarginalizationMatrix};
use crate::linalg::{
    abs_squared, conjugate_by, eig_hermitian, kron, ComplexMatrix, DensityMatrix, Tolerances,
    UnitaryMatrix,
};
use crate::sampling::{haar_unitary, SeededGenerator};

/// Rotation angles for an irreducible representation block: polar angle
/// `theta` and azimuth `phi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SU2Angles {
    pub theta: f64,
    pub phi: f64,
}

impl SU2Angles {
    pub fn new(theta: f64, phi: f64) -> Self {
        SU2Angles { theta, phi }
    }
}

/// A measurement outcome distribution: nonnegative entries summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct TomogramVector {
    probabilities: Vec<f64>,
}

impl TomogramVector {
    /// Entries this far below zero are treated as rounding noise and
    /// clamped; anything lower is rejected.
    pub const NEGATIVE_FLOOR: f64 = -1e-12;

    /// Permitted deviation of the entry sum from one.
    pub const SUM_TOLERANCE: f64 = 1e-10;

    pub fn new(entries: Vec<f64>) -> Result<Self> {
        let mut probabilities = entries;
        for p in &mut probabilities {
            if *p < Self::NEGATIVE_FLOOR {
                return Err(Error::NegativeProbability { value: *p });
            }
            if *p < 0.0 {
                *p = 0.0;
            }
        }
        let sum: f64 = probabilities.iter().sum();
        if (sum - 1.0).abs() > Self::SUM_TOLERANCE {
            return Err(Error::NotNormalized { sum });
        }
        Ok(TomogramVector { probabilities })
    }

    pub fn uniform(n: usize) -> Self {
        TomogramVector {
            probabilities: vec![1.0 / n as f64; n],
        }
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn len(&self) -> usize {
        self.probabilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probabilities.is_empty()
    }

    /// Largest entrywise gap; infinite if the lengths differ.
    pub fn max_abs_diff(&self, other: &TomogramVector) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.probabilities
            .iter()
            .zip(&other.probabilities)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Direct route: real diagonal of `u rho u^H`.
pub fn tomogram(rho: &DensityMatrix, u: &UnitaryMatrix) -> Result<TomogramVector> {
    if rho.dim() != u.dim() {
        return Err(Error::DimMismatch(format!(
            "state dimension {} vs unitary dimension {}",
            rho.dim(),
            u.dim()
        )));
    }
    let rotated = conjugate_by(rho.matrix(), u.matrix());
    TomogramVector::new(rotated.diagonal_real())
}

/// Spectral route: eigendecompose `rho = u_0 diag(lambda) u_0^H` and feed
/// the eigenvalue vector through the doubly stochastic matrix
/// `|(u u_0)_kj|^2`. Agrees with [`tomogram`] up to rounding and serves
/// as its cross-check.
pub fn tomogram_spectral(
    rho: &DensityMatrix,
    u: &UnitaryMatrix,
    tolerances: &Tolerances,
) -> Result<TomogramVector> {
    if rho.dim() != u.dim() {
        return Err(Error::DimMismatch(format!(
            "state dimension {} vs unitary dimension {}",
            rho.dim(),
            u.dim()
        )));
    }
    let spectral = eig_hermitian(rho.matrix(), tolerances)?;
    let overlap = abs_squared(&u.matrix().mul(spectral.eigenvectors.matrix()));
    let n = rho.dim();
    let mut probabilities = vec![0.0; n];
    for (k, out) in probabilities.iter_mut().enumerate() {
        for (j, &lambda) in spectral.eigenvalues.iter().enumerate() {
            *out += overlap[(k, j)].re * lambda.max(0.0);
        }
    }
    TomogramVector::new(probabilities)
}

/// Largest supported representation label `2j`. The factorial sum below
/// loses precision slowly as `2j` grows; this cap keeps the result
/// comfortably inside working tolerance.
pub const MAX_TWO_J: usize = 100;

/// Irreducible rotation matrix of dimension `2j + 1` for spin label
/// `two_j = 2j`, basis ordered by descending weight.
///
/// At `phi = 0` and `two_j = 1` this is the plane rotation
/// `[[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]]`;
/// the azimuth enters as the column phase `exp(-i m phi)`.
pub fn su2_irrep(two_j: usize, angles: &SU2Angles) -> Result<UnitaryMatrix> {
    if two_j > MAX_TWO_J {
        return Err(Error::BadSpin { two_j });
    }
    let n = two_j + 1;
    let ln_fact = ln_factorials(two_j);
    let half = 0.5 * angles.theta;
    let (sin_half, cos_half) = half.sin_cos();
    let mut m = ComplexMatrix::zeros(n, n);
    for p in 0..n {
        // Row p carries weight m' = j - p, column c weight m = j - c.
        let a = two_j - p;
        for c in 0..n {
            let b = two_j - c;
            let prefactor = 0.5 * (ln_fact[a] + ln_fact[p] + ln_fact[b] + ln_fact[c]);
            let s_min = p.saturating_sub(c);
            let s_max = b.min(p);
            let mut d = 0.0;
            for s in s_min..=s_max {
                let sign = if (c + s - p) % 2 == 0 { 1.0 } else { -1.0 };
                let ln_denom =
                    ln_fact[b - s] + ln_fact[s] + ln_fact[c + s - p] + ln_fact[p - s];
                let cos_exp = (two_j + p - c - 2 * s) as i32;
                let sin_exp = (c + 2 * s - p) as i32;
                d += sign
                    * (prefactor - ln_denom).exp()
                    * cos_half.powi(cos_exp)
                    * sin_half.powi(sin_exp);
            }
            // Column weight m = (two_j - 2c) / 2, phase exp(-i m phi).
            let m_weight = (two_j as f64 - 2.0 * c as f64) / 2.0;
            let phase = Complex64::from_polar(1.0, -m_weight * angles.phi);
            m[(p, c)] = phase * d;
        }
    }
    Ok(UnitaryMatrix::new_unchecked(m))
}

fn ln_factorials(up_to: usize) -> Vec<f64> {
    let mut table = vec![0.0; up_to + 1];
    for k in 2..=up_to {
        table[k] = table[k - 1] + (k as f64).ln();
    }
    table
}

/// Kronecker product of per-factor unitaries, first factor slowest.
pub fn product_unitary(factors: &[UnitaryMatrix]) -> Result<UnitaryMatrix> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::ShapeMismatch("product needs at least one factor".into()))?;
    let mut m = first.matrix().clone();
    for u in rest {
        m = kron(&m, u.matrix());
    }
    Ok(UnitaryMatrix::new_unchecked(m))
}

/// Marginal distribution: apply the marginalization matrix and keep the
/// leading block the marginal is packed into.
pub fn marginal_tomogram(
    w: &TomogramVector,
    matrix: &MarginalizationMatrix,
) -> Result<TomogramVector> {
    if w.len() != matrix.dim() {
        return Err(Error::DimMismatch(format!(
            "tomogram length {} vs marginalization dimension {}",
            w.len(),
            matrix.dim()
        )));
    }
    let full = matrix.apply(w.probabilities());
    TomogramVector::new(full[..matrix.kept_shape().total()].to_vec())
}

/// Outcome of a no-signaling run.
#[derive(Debug, Clone)]
pub struct NoSignalingCheck {
    /// Largest entrywise gap between any observed marginal and the
    /// marginal predicted from the reduced state alone.
    pub max_deviation: f64,
    pub tolerance: f64,
    /// Number of fresh redraws of the discarded factors.
    pub partners: usize,
    pub holds: bool,
}

/// Verify that the marginal over the kept factors is set by the reduced
/// state and the kept local rotations alone.
///
/// The predicted marginal is the tomogram of the reduced state under the
/// kept factors' unitaries. The observed marginal is recomputed for
/// `partners` fresh draws of the discarded factors' unitaries (plus the
/// provided ones); all must coincide with the prediction.
pub fn check_no_signaling(
    rho: &DensityMatrix,
    shape: &FactorShape,
    keep: &[usize],
    locals: &[UnitaryMatrix],
    partners: usize,
    rng: &mut SeededGenerator,
    tolerance: f64,
) -> Result<NoSignalingCheck> {
    if shape.total() != rho.dim() {
        return Err(Error::ShapeMismatch(format!(
            "shape product {} does not match state dimension {}",
            shape.total(),
            rho.dim()
        )));
    }
    if locals.len() != shape.factors() {
        return Err(Error::DimMismatch(format!(
            "{} local unitaries for {} factors",
            locals.len(),
            shape.factors()
        )));
    }
    for (pos, (u, &d)) in locals.iter().zip(shape.dims()).enumerate() {
        if u.dim() != d {
            return Err(Error::DimMismatch(format!(
                "factor {} has dimension {d}, unitary is {}",
                pos + 1,
                u.dim()
            )));
        }
    }

    let matrix = marginalization_matrix(shape, keep)?;
    let kept: Vec<usize> = matrix.keep().to_vec();
    let reduced = reduce_density(rho, shape, &kept)?;
    let kept_locals: Vec<UnitaryMatrix> =
        kept.iter().map(|&p| locals[p - 1].clone()).collect();
    let predicted = tomogram(&reduced, &product_unitary(&kept_locals)?)?;

    let mut max_deviation = 0.0_f64;
    for round in 0..=partners {
        let mut factors = Vec::with_capacity(shape.factors());
        for (pos, &d) in shape.dims().iter().enumerate() {
            let position = pos + 1;
            if round == 0 || kept.contains(&position) {
                factors.push(locals[pos].clone());
            } else {
                factors.push(haar_unitary(d, rng));
            }
        }
        let w = tomogram(rho, &product_unitary(&factors)?)?;
        let marginal = marginal_tomogram(&w, &matrix)?;
        max_deviation = max_deviation.max(marginal.max_abs_diff(&predicted));
    }

    Ok(NoSignalingCheck {
        max_deviation,
        tolerance,
        partners,
        holds: max_deviation <= tolerance,
    })
}
