//! Composite-index bijections, block structure, stochastic marginalization
//! matrices, reduced density matrices, and zero-padding.
//!
//! A dimension-N system is read as a formal composite with factor shape
//! `(n_1, ..., n_f)`, `N = n_1 * ... * n_f`. Linear indices are 1-based and
//! row-major (big-endian): the FIRST factor varies slowest. This matches
//! the composite ordering of [`crate::linalg::kron`].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix};

/// Ordered factor dimensions `(n_1, ..., n_f)` with product N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorShape {
    dims: Vec<usize>,
}

impl FactorShape {
    /// At least one factor, every factor >= 1.
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::ShapeMismatch("shape needs at least one factor".into()));
        }
        if dims.contains(&0) {
            return Err(Error::ShapeMismatch("factor dimensions must be >= 1".into()));
        }
        Ok(FactorShape { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn factors(&self) -> usize {
        self.dims.len()
    }

    /// Total dimension N.
    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }
}

/// 1-based multi-index `(i_1, ..., i_f)` with `i_j` in `[1, n_j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIndex {
    values: Vec<usize>,
}

impl MultiIndex {
    pub fn new(values: Vec<usize>) -> Self {
        MultiIndex { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// Row-major linear index: `s0 = ((v_1 * n_2) + v_2) * n_3 + ...` with
/// all values 0-based.
pub(crate) fn compose0(dims: &[usize], values: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), values.len());
    let mut s = 0;
    for (&d, &v) in dims.iter().zip(values) {
        debug_assert!(v < d);
        s = s * d + v;
    }
    s
}

pub(crate) fn decompose0(dims: &[usize], mut s: usize) -> Vec<usize> {
    let mut values = vec![0; dims.len()];
    for (pos, &d) in dims.iter().enumerate().rev() {
        values[pos] = s % d;
        s /= d;
    }
    debug_assert_eq!(s, 0);
    values
}

/// 1-based composite index of a 1-based multi-index,
/// `s = 1 + sum_j (i_j - 1) * prod_{j' > j} n_{j'}`.
pub fn compose_index(shape: &FactorShape, idx: &MultiIndex) -> Result<usize> {
    if idx.values().len() != shape.factors() {
        return Err(Error::IndexOutOfRange(format!(
            "multi-index has {} components, shape has {} factors",
            idx.values().len(),
            shape.factors()
        )));
    }
    let mut zero_based = Vec::with_capacity(shape.factors());
    for (pos, (&v, &d)) in idx.values().iter().zip(shape.dims()).enumerate() {
        if v < 1 || v > d {
            return Err(Error::IndexOutOfRange(format!(
                "component {} is {v}, valid range is 1..={d}",
                pos + 1
            )));
        }
        zero_based.push(v - 1);
    }
    Ok(compose0(shape.dims(), &zero_based) + 1)
}

/// Inverse of [`compose_index`]; `s` is 1-based.
pub fn decompose_index(shape: &FactorShape, s: usize) -> Result<MultiIndex> {
    let n = shape.total();
    if s < 1 || s > n {
        return Err(Error::IndexOutOfRange(format!(
            "linear index {s} outside 1..={n}"
        )));
    }
    let values = decompose0(shape.dims(), s - 1)
        .into_iter()
        .map(|v| v + 1)
        .collect();
    Ok(MultiIndex::new(values))
}

/// 0/1 column-stochastic N x N matrix that sends a joint probability
/// vector to a marginal packed into its leading rows.
#[derive(Debug, Clone)]
pub struct MarginalizationMatrix {
    n: usize,
    keep: Vec<usize>,
    kept_shape: FactorShape,
    entries: Vec<f64>,
}

impl MarginalizationMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Kept factor positions, ascending, 1-based.
    pub fn keep(&self) -> &[usize] {
        &self.keep
    }

    pub fn kept_shape(&self) -> &FactorShape {
        &self.kept_shape
    }

    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.n + col]
    }

    pub fn dense_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.entry(r, c)).collect())
            .collect()
    }

    /// Multiply onto a length-N vector.
    pub fn apply(&self, w: &[f64]) -> Vec<f64> {
        assert_eq!(w.len(), self.n, "vector length must match matrix dimension");
        let mut out = vec![0.0; self.n];
        for (r, out_r) in out.iter_mut().enumerate() {
            for (c, &wc) in w.iter().enumerate() {
                if self.entry(r, c) != 0.0 {
                    *out_r += wc;
                }
            }
        }
        out
    }
}

/// Normalize a keep set: ascending, deduplicated, all positions valid.
fn normalize_keep(shape: &FactorShape, keep: &[usize]) -> Result<Vec<usize>> {
    if keep.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    for &pos in &keep {
        if pos < 1 || pos > shape.factors() {
            return Err(Error::BadPosition {
                position: pos,
                factors: shape.factors(),
            });
        }
    }
    Ok(keep)
}

fn split_positions(shape: &FactorShape, keep: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let kept: Vec<usize> = keep.iter().map(|&p| p - 1).collect();
    let discarded: Vec<usize> = (0..shape.factors()).filter(|p| !kept.contains(p)).collect();
    (kept, discarded)
}

/// Build the marginalization matrix for the given kept factor positions
/// (1-based). Column `s` carries a single 1 in the row indexed by the kept
/// components of `s`; rows beyond the kept-shape dimension stay zero.
pub fn marginalization_matrix(shape: &FactorShape, keep: &[usize]) -> Result<MarginalizationMatrix> {
    let keep = normalize_keep(shape, keep)?;
    let (kept_pos, _) = split_positions(shape, &keep);
    let kept_dims: Vec<usize> = kept_pos.iter().map(|&p| shape.dims()[p]).collect();
    let n = shape.total();
    let mut entries = vec![0.0; n * n];
    for col in 0..n {
        let full = decompose0(shape.dims(), col);
        let kept_vals: Vec<usize> = kept_pos.iter().map(|&p| full[p]).collect();
        let row = compose0(&kept_dims, &kept_vals);
        entries[row * n + col] = 1.0;
    }
    Ok(MarginalizationMatrix {
        n,
        keep,
        kept_shape: FactorShape::new(kept_dims)?,
        entries,
    })
}

/// Partial-trace analog on the block structure: keep the listed factor
/// positions and sum the diagonal over the discarded ones.
///
/// Entry `(a, b)` of the result is `sum_d rho[s(a, d), s(b, d)]` with the
/// discarded components `d` held equal on both sides. For a two-factor
/// shape this is the block-trace matrix (keep {1}) or the block-sum
/// matrix (keep {2}).
pub fn reduce_density(
    rho: &DensityMatrix,
    shape: &FactorShape,
    keep: &[usize],
) -> Result<DensityMatrix> {
    if shape.total() != rho.dim() {
        return Err(Error::ShapeMismatch(format!(
            "shape product {} does not match matrix dimension {}",
            shape.total(),
            rho.dim()
        )));
    }
    let keep = normalize_keep(shape, keep)?;
    let (kept_pos, discarded_pos) = split_positions(shape, &keep);
    let kept_dims: Vec<usize> = kept_pos.iter().map(|&p| shape.dims()[p]).collect();
    let discarded_dims: Vec<usize> = discarded_pos.iter().map(|&p| shape.dims()[p]).collect();
    let k: usize = kept_dims.iter().product();
    let d_total: usize = discarded_dims.iter().product();

    let mut full = vec![0usize; shape.factors()];
    let mut out = ComplexMatrix::zeros(k, k);
    for a in 0..k {
        let a_vals = decompose0(&kept_dims, a);
        for b in 0..k {
            let b_vals = decompose0(&kept_dims, b);
            let mut acc = Complex64::new(0.0, 0.0);
            for d in 0..d_total {
                let d_vals = decompose0(&discarded_dims, d);
                for (slot, &p) in kept_pos.iter().enumerate() {
                    full[p] = a_vals[slot];
                }
                for (slot, &p) in discarded_pos.iter().enumerate() {
                    full[p] = d_vals[slot];
                }
                let row = compose0(shape.dims(), &full);
                for (slot, &p) in kept_pos.iter().enumerate() {
                    full[p] = b_vals[slot];
                }
                let col = compose0(shape.dims(), &full);
                acc += rho.matrix()[(row, col)];
            }
            out[(a, b)] = acc;
        }
    }
    Ok(DensityMatrix::new_unchecked(out))
}

/// Embed `rho` into the top-left block of a `target x target` matrix of
/// zeros. Trace is preserved; the spectrum gains `target - N` zeros.
pub fn pad_density(rho: &DensityMatrix, target: usize) -> Result<DensityMatrix> {
    let n = rho.dim();
    if target < n {
        return Err(Error::TargetTooSmall { target, current: n });
    }
    if target == n {
        return Ok(rho.clone());
    }
    let mut out = ComplexMatrix::zeros(target, target);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = rho.matrix()[(i, j)];
        }
    }
    Ok(DensityMatrix::new_unchecked(out))
}

/// Smallest `target >= n` that factors into exactly `factors` integers,
/// each >= 2 (a single factor may be anything), together with the
/// ascending factorization found.
pub fn suggest_padded_shape(n: usize, factors: usize) -> Result<FactorShape> {
    if factors == 0 {
        return Err(Error::ShapeMismatch("factor count must be >= 1".into()));
    }
    if n == 0 {
        return Err(Error::ShapeMismatch("dimension must be >= 1".into()));
    }
    if factors == 1 {
        return FactorShape::new(vec![n]);
    }
    let mut target = n.max(1usize << factors);
    loop {
        if let Some(dims) = factor_into(target, factors, 2) {
            return FactorShape::new(dims);
        }
        target += 1;
    }
}

/// Ascending factorization of `n` into exactly `parts` factors, each
/// >= `min_factor`; None if impossible.
fn factor_into(n: usize, parts: usize, min_factor: usize) -> Option<Vec<usize>> {
    if parts == 1 {
        return (n >= min_factor).then(|| vec![n]);
    }
    let mut d = min_factor;
    while (d as u128).pow(parts as u32) <= n as u128 {
        if n.is_multiple_of(d) {
            if let Some(mut rest) = factor_into(n / d, parts - 1, d) {
                rest.insert(0, d);
                return Some(rest);
            }
        }
        d += 1;
    }
    None
}
