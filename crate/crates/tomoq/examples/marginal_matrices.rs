//! The 0/1 matrices that marginalize a composite tomogram.
//!
//! A dimension-N probability vector read as a (n1, n2, ...) composite
//! can be coarse-grained by an N x N column-stochastic matrix of zeros
//! and ones. Row r of the matrix collects every joint outcome whose
//! kept indices compose to r, and the marginal sits in the leading rows.
//!
//! # Running
//! ```bash
//! cargo run --example marginal_matrices
//! ```

use tomoq::fixtures;
use tomoq::indexing::{marginalization_matrix, FactorShape};
use tomoq::tomography::{marginal_tomogram, TomogramVector};

fn print_matrix(label: &str, rows: &[Vec<f64>]) {
    println!("{label}");
    for row in rows {
        let cells: Vec<String> = row.iter().map(|&v| format!("{}", v as u8)).collect();
        println!("  {}", cells.join(" "));
    }
}

fn main() {
    // Six outcomes read as a (2, 3) pair.
    let pair = FactorShape::new(vec![2, 3]).unwrap();
    let keep_first = marginalization_matrix(&pair, &[1]).unwrap();
    let keep_second = marginalization_matrix(&pair, &[2]).unwrap();

    print_matrix("keep factor 1 of (2, 3):", &keep_first.dense_rows());
    print_matrix("keep factor 2 of (2, 3):", &keep_second.dense_rows());

    println!(
        "match the hand-entered references: {} and {}",
        keep_first.dense_rows() == fixtures::j52_first_marginal(),
        keep_second.dense_rows() == fixtures::j52_second_marginal(),
    );

    // Every column holds exactly one 1, so probability is conserved.
    let n = keep_first.dim();
    let column_sums_ok = (0..n).all(|c| {
        let sum: f64 = (0..n).map(|r| keep_first.entry(r, c)).sum();
        sum == 1.0
    });
    println!("columns each sum to one: {column_sums_ok}\n");

    // Apply them to a joint distribution.
    let w = TomogramVector::new(vec![0.05, 0.10, 0.15, 0.20, 0.25, 0.25]).unwrap();
    let w1 = marginal_tomogram(&w, &keep_first).unwrap();
    let w2 = marginal_tomogram(&w, &keep_second).unwrap();
    println!("joint w         = {:?}", w.probabilities());
    println!("first marginal  = {:?}", w1.probabilities());
    println!("second marginal = {:?}\n", w2.probabilities());

    // Eight outcomes read as (2, 2, 2): keeping the pair (1, 2) sums
    // adjacent entries. A coarser two-block matrix is sometimes quoted
    // for this marginal, but it really keeps factor 1 alone.
    let triple = FactorShape::new(vec![2, 2, 2]).unwrap();
    let keep_pair12 = marginalization_matrix(&triple, &[1, 2]).unwrap();
    print_matrix("keep factors (1, 2) of (2, 2, 2):", &keep_pair12.dense_rows());
    println!(
        "coarse two-block variant matches this pair marginal: {}",
        keep_pair12.dense_rows() == fixtures::j72_pair12_coarse()
    );
    println!(
        "coarse two-block variant matches the keep-1 marginal: {}",
        marginalization_matrix(&triple, &[1]).unwrap().dense_rows()
            == fixtures::j72_pair12_coarse()
    );
}
