//! Dense complex matrix core: validated quantum-state types, Hermitian
//! eigendecomposition, Kronecker products, and entrywise modulus-squared.
//!
//! Matrices are stored row-major. The composite ordering produced by
//! [`kron`] (row `(i,k)` maps to `i * p + k`) is the same big-endian
//! convention used by the index maps in [`crate::indexing`].

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Validation tolerances for the quantum-state types.
///
/// Double-precision eigensolvers on dimensions up to a few hundred meet
/// these comfortably; they are deliberately loose enough to accept
/// round-tripped matrices and tight enough to reject genuinely bad input.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Max allowed entrywise deviation from `A = A^H`.
    pub hermitian: f64,
    /// Max allowed deviation of the trace from 1.
    pub trace: f64,
    /// How far below zero the smallest eigenvalue may sit.
    pub psd: f64,
    /// Max allowed entrywise deviation of `U U^H` from the identity.
    pub unitary: f64,
    /// Max allowed eigendecomposition reconstruction residual.
    pub reconstruction: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            hermitian: 1e-10,
            trace: 1e-10,
            psd: 1e-9,
            unitary: 1e-10,
            reconstruction: 1e-9,
        }
    }
}

/// Dense complex matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Build from row-major entries. Fails if the entry count is wrong.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::BadEntryCount {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(ComplexMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Complex64,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ComplexMatrix { rows, cols, entries }
    }

    /// Square matrix from nested real rows; imaginary parts zero.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::BadEntryCount {
                    rows: n,
                    cols: n,
                    len: row.len() * n,
                });
            }
            entries.extend(row.iter().map(|&x| Complex64::new(x, 0.0)));
        }
        ComplexMatrix::new(n, n, entries)
    }

    pub fn diag_real(values: &[f64]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix product dimension mismatch ({}x{} * {}x{})",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> Complex64 {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, factor: f64) -> ComplexMatrix {
        let entries = self.entries.iter().map(|e| e * factor).collect();
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Real parts of the diagonal.
    pub fn diagonal_real(&self) -> Vec<f64> {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)].re).collect()
    }

    /// Max entrywise modulus of the difference, infinity if shapes differ.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        if self.rows != other.rows || self.cols != other.cols {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Max entrywise modulus of `A - A^H`; zero for exactly Hermitian input.
    pub fn hermiticity_residual(&self) -> f64 {
        debug_assert!(self.is_square());
        let mut residual = 0.0f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                residual = residual.max(d);
            }
        }
        residual
    }

    /// Max entrywise modulus of `U U^H - I`.
    pub fn unitarity_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let product = self.mul(&self.adjoint());
        product.max_abs_diff(&ComplexMatrix::identity(self.rows))
    }

    pub(crate) fn to_nalgebra(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)])
    }

    pub(crate) fn from_nalgebra(m: &DMatrix<Complex64>) -> Self {
        ComplexMatrix::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
    }

    /// Parse the shared square-matrix JSON format
    /// `{"n": int, "re": [[..]..], "im": [[..]..]}` (`im` optional).
    pub fn from_json_str(text: &str) -> Result<Self> {
        let dto: MatrixJson = serde_json::from_str(text)?;
        dto.into_matrix()
    }

    /// Serialize to the shared square-matrix JSON format.
    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.json_dto()?)?)
    }

    /// Same format as [`ComplexMatrix::to_json_string`], as a JSON value
    /// ready for embedding in a larger document.
    pub fn to_json_value(&self) -> Result<serde_json::Value> {
        Ok(serde_json::to_value(self.json_dto()?)?)
    }

    fn json_dto(&self) -> Result<MatrixJson> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let re: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)].re).collect())
            .collect();
        let im: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)].im).collect())
            .collect();
        Ok(MatrixJson { n, re, im: Some(im) })
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.cols + j]
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    re: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    im: Option<Vec<Vec<f64>>>,
}

impl MatrixJson {
    fn into_matrix(self) -> Result<ComplexMatrix> {
        let n = self.n;
        let check = |rows: &Vec<Vec<f64>>| -> Result<()> {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::BadEntryCount {
                    rows: n,
                    cols: n,
                    len: rows.iter().map(|r| r.len()).sum(),
                });
            }
            Ok(())
        };
        check(&self.re)?;
        if let Some(im) = &self.im {
            check(im)?;
        }
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let im = self.im.as_ref().map_or(0.0, |rows| rows[i][j]);
                m[(i, j)] = Complex64::new(self.re[i][j], im);
            }
        }
        Ok(m)
    }
}

/// Hermitian, unit-trace, positive-semidefinite matrix.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validate with default [`Tolerances`].
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        validate_density(matrix, &Tolerances::default())
    }

    /// Skip validation; the caller guarantees the invariants hold.
    pub(crate) fn new_unchecked(matrix: ComplexMatrix) -> Self {
        debug_assert!(matrix.is_square());
        DensityMatrix { matrix }
    }

    /// Maximally mixed state I/N.
    pub fn maximally_mixed(n: usize) -> Self {
        DensityMatrix::new_unchecked(ComplexMatrix::identity(n).scale(1.0 / n as f64))
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

/// Matrix with `U U^H = I` to tolerance.
#[derive(Debug, Clone)]
pub struct UnitaryMatrix {
    matrix: ComplexMatrix,
}

impl UnitaryMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(matrix, Tolerances::default().unitary)
    }

    pub fn with_tolerance(matrix: ComplexMatrix, tolerance: f64) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let residual = matrix.unitarity_residual();
        if residual > tolerance {
            return Err(Error::NotUnitary { residual, tolerance });
        }
        Ok(UnitaryMatrix { matrix })
    }

    pub(crate) fn new_unchecked(matrix: ComplexMatrix) -> Self {
        debug_assert!(matrix.is_square());
        UnitaryMatrix { matrix }
    }

    pub fn identity(n: usize) -> Self {
        UnitaryMatrix {
            matrix: ComplexMatrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn adjoint(&self) -> UnitaryMatrix {
        UnitaryMatrix {
            matrix: self.matrix.adjoint(),
        }
    }
}

/// Eigenvalues (ascending) and matching eigenvector columns of a
/// Hermitian matrix.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: UnitaryMatrix,
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Eigenvalues come back real and sorted ascending with stable tie order;
/// eigenvector column `k` pairs with eigenvalue `k`.
pub fn eig_hermitian(matrix: &ComplexMatrix, tolerances: &Tolerances) -> Result<SpectralDecomposition> {
    if !matrix.is_square() {
        return Err(Error::NotSquare {
            rows: matrix.rows(),
            cols: matrix.cols(),
        });
    }
    let residual = matrix.hermiticity_residual();
    if residual > tolerances.hermitian {
        return Err(Error::NotHermitian {
            residual,
            tolerance: tolerances.hermitian,
        });
    }
    let n = matrix.rows();
    // Symmetrize so the solver sees an exactly Hermitian matrix.
    let symmetrized = DMatrix::from_fn(n, n, |i, j| {
        (matrix[(i, j)] + matrix[(j, i)].conj()) * 0.5
    });
    let eig = symmetrized.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .partial_cmp(&eig.eigenvalues[b])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors: UnitaryMatrix::new_unchecked(eigenvectors),
    })
}

/// Eigenvalues only, ascending.
pub fn eigenvalues_hermitian(matrix: &ComplexMatrix, tolerances: &Tolerances) -> Result<Vec<f64>> {
    Ok(eig_hermitian(matrix, tolerances)?.eigenvalues)
}

/// Kronecker product. Composite row `(i, k)` of `A (n x m) kron B (p x q)`
/// lands at `i * p + k`, row-major in both factors.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (n, m) = (a.rows(), a.cols());
    let (p, q) = (b.rows(), b.cols());
    ComplexMatrix::from_fn(n * p, m * q, |r, c| {
        a[(r / p, c / q)] * b[(r % p, c % q)]
    })
}

/// Entrywise `|a_ij|^2`, returned with zero imaginary parts.
///
/// For unitary input the result is doubly stochastic.
pub fn abs_squared(matrix: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(matrix.rows(), matrix.cols(), |i, j| {
        Complex64::new(matrix[(i, j)].norm_sqr(), 0.0)
    })
}

/// Check the density-matrix invariants and wrap the matrix on success.
///
/// Reports the first violated invariant: squareness, Hermiticity, unit
/// trace, then positive semidefiniteness.
pub fn validate_density(matrix: ComplexMatrix, tolerances: &Tolerances) -> Result<DensityMatrix> {
    if !matrix.is_square() {
        return Err(Error::NotSquare {
            rows: matrix.rows(),
            cols: matrix.cols(),
        });
    }
    let residual = matrix.hermiticity_residual();
    if residual > tolerances.hermitian {
        return Err(Error::NotHermitian {
            residual,
            tolerance: tolerances.hermitian,
        });
    }
    let trace = matrix.trace();
    if (trace.re - 1.0).abs() > tolerances.trace || trace.im.abs() > tolerances.trace {
        return Err(Error::TraceNotOne { actual: trace.re });
    }
    let eigenvalues = eigenvalues_hermitian(&matrix, tolerances)?;
    let min_eigenvalue = eigenvalues.first().copied().unwrap_or(0.0);
    if min_eigenvalue < -tolerances.psd {
        return Err(Error::NotPositiveSemidefinite { min_eigenvalue });
    }
    Ok(DensityMatrix { matrix })
}

/// `rho^q = U diag(lambda_i^q) U^H` with the convention `0^q = 0`.
///
/// Eigenvalues inside `[-psd tolerance, 0)` are treated as exact zeros.
pub fn matrix_q_power(rho: &DensityMatrix, q: f64) -> Result<ComplexMatrix> {
    if q < 1.0 {
        return Err(Error::QOutOfRange { q });
    }
    let tolerances = Tolerances::default();
    let spectral = eig_hermitian(rho.matrix(), &tolerances)?;
    let powered: Vec<f64> = spectral
        .eigenvalues
        .iter()
        .map(|&lambda| if lambda <= 0.0 { 0.0 } else { lambda.powf(q) })
        .collect();
    let u = spectral.eigenvectors.matrix();
    let d = ComplexMatrix::diag_real(&powered);
    Ok(u.mul(&d).mul(&u.adjoint()))
}

/// Convenience: `u rho u^H` as a plain matrix.
pub(crate) fn conjugate_by(rho: &ComplexMatrix, u: &ComplexMatrix) -> ComplexMatrix {
    u.mul(rho).mul(&u.adjoint())
}
