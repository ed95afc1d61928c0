//! Rotations of a discarded subsystem cannot move the kept marginal.
//!
//! For a bipartite state rotated by a product unitary u1 (x) u2, the
//! marginal tomogram of factor 1 depends only on u1 and on the reduced
//! state. Re-drawing u2 any number of times leaves it fixed, and it
//! always equals the tomogram computed from the reduced state directly.
//!
//! # Running
//! ```bash
//! cargo run --example no_signaling
//! ```

use tomoq::indexing::{marginalization_matrix, reduce_density, FactorShape};
use tomoq::sampling::{haar_unitary, random_density, SeededGenerator};
use tomoq::tomography::{check_no_signaling, marginal_tomogram, product_unitary, tomogram};

fn main() {
    let shape = FactorShape::new(vec![2, 3]).unwrap();
    let mut rng = SeededGenerator::new(3);
    let rho = random_density(6, 6, &mut rng).unwrap();
    let u1 = haar_unitary(2, &mut rng);
    let keep_first = marginalization_matrix(&shape, &[1]).unwrap();

    // Fix u1, vary u2, and watch the kept marginal.
    let u2 = haar_unitary(3, &mut rng);
    let joint = tomogram(&rho, &product_unitary(&[u1.clone(), u2]).unwrap()).unwrap();
    let base = marginal_tomogram(&joint, &keep_first).unwrap();
    println!("kept marginal: {:?}", base.probabilities());

    let mut worst = 0.0f64;
    for partner in 1..=5 {
        let u2 = haar_unitary(3, &mut rng);
        let joint = tomogram(&rho, &product_unitary(&[u1.clone(), u2]).unwrap()).unwrap();
        let marginal = marginal_tomogram(&joint, &keep_first).unwrap();
        let shift = marginal.max_abs_diff(&base);
        println!("  partner rotation {partner}: max shift {shift:e}");
        worst = worst.max(shift);
    }
    println!("worst shift over 5 partners: {worst:e}");

    // The marginal is exactly the tomogram of the reduced state.
    let reduced = reduce_density(&rho, &shape, &[1]).unwrap();
    let predicted = tomogram(&reduced, &u1).unwrap();
    println!(
        "deviation from the reduced-state tomogram: {:e}\n",
        base.max_abs_diff(&predicted)
    );

    // The same sweep, bundled: the check re-draws the discarded factor's
    // rotation and reports the largest deviation from the prediction.
    let locals = vec![u1, haar_unitary(3, &mut rng)];
    let check = check_no_signaling(&rho, &shape, &[1], &locals, 20, &mut rng, 1e-10).unwrap();
    println!(
        "bundled check: max deviation {:e} over {} partner draws, holds = {}",
        check.max_deviation, check.partners, check.holds
    );
}
