//! Hand-entered reference marginalization matrices for the j=5/2 and
//! j=7/2 walkthroughs.
//!
//! These are written out literally, independent of the generator in
//! [`crate::indexing`], so the two can be cross-checked entry by entry.

fn rows<const N: usize>(a: [[u8; N]; N]) -> Vec<Vec<f64>> {
    a.iter()
        .map(|row| row.iter().map(|&x| f64::from(x)).collect())
        .collect()
}

/// 6x6 first-factor marginal for a j=5/2 qudit split as (2, 3):
/// row i sums the three entries sharing block index i.
pub fn j52_first_marginal() -> Vec<Vec<f64>> {
    rows([
        [1, 1, 1, 0, 0, 0],
        [0, 0, 0, 1, 1, 1],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ])
}

/// 6x6 second-factor marginal for the (2, 3) split: row k sums the two
/// entries sharing within-block index k.
pub fn j52_second_marginal() -> Vec<Vec<f64>> {
    rows([
        [1, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 1, 0],
        [0, 0, 1, 0, 0, 1],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ])
}

/// 8x8 (2,3)-pair marginal for a j=7/2 qudit split as (2, 2, 2):
/// identity blocks side by side, i.e. it sums out the first factor.
pub fn j72_pair23_marginal() -> Vec<Vec<f64>> {
    rows([
        [1, 0, 0, 0, 1, 0, 0, 0],
        [0, 1, 0, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0, 1, 0],
        [0, 0, 0, 1, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
    ])
}

/// 8x8 middle-factor marginal for the (2, 2, 2) split: row 1 sums the
/// positions {1, 2, 5, 6} whose middle index is 1.
pub fn j72_middle_marginal() -> Vec<Vec<f64>> {
    rows([
        [1, 1, 0, 0, 1, 1, 0, 0],
        [0, 0, 1, 1, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
    ])
}

/// Coarse two-block 8x8 matrix sometimes quoted for the (1,2)-pair
/// marginal of the (2, 2, 2) split. Its rows of four ones sum over BOTH
/// the middle and the last factor, so it is really the keep-{1} matrix;
/// the true (1,2)-pair marginal has row supports {1,2}, {3,4}, {5,6},
/// {7,8}. The demo and the acceptance suite assert this mismatch.
pub fn j72_pair12_coarse() -> Vec<Vec<f64>> {
    rows([
        [1, 1, 1, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 1, 1, 1],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0],
    ])
}
