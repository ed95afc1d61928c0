//! Two routes to the same tomographic probability vector.
//!
//! The direct route conjugates the state by the rotation and reads off
//! the diagonal. The spectral route decomposes the state first and then
//! mixes squared overlaps with the eigenbasis. The two must agree for
//! any state, including rank-deficient and degenerate ones.
//!
//! # Running
//! ```bash
//! cargo run --example tomogram_paths
//! ```

use tomoq::linalg::Tolerances;
use tomoq::sampling::{haar_unitary, random_density, random_pure, SeededGenerator};
use tomoq::tomography::{tomogram, tomogram_spectral};

fn main() {
    let mut rng = SeededGenerator::new(11);
    let tolerances = Tolerances::default();

    let rho = random_density(6, 6, &mut rng).unwrap();
    let u = haar_unitary(6, &mut rng);

    let direct = tomogram(&rho, &u).unwrap();
    let spectral = tomogram_spectral(&rho, &u, &tolerances).unwrap();

    println!("full-rank state, N = 6");
    println!("  direct route:   {:?}", direct.probabilities());
    println!("  spectral route: {:?}", spectral.probabilities());
    println!("  max |difference| = {:e}", direct.max_abs_diff(&spectral));
    let total: f64 = direct.probabilities().iter().sum();
    println!("  probabilities sum to {total}");

    // Rank-one states exercise the eigenvalue clamping in the spectral
    // route: tiny negative rounding noise must not leak into the vector.
    let pure = random_pure(6, &mut rng);
    let direct = tomogram(&pure, &u).unwrap();
    let spectral = tomogram_spectral(&pure, &u, &tolerances).unwrap();
    println!("\npure state, N = 6");
    println!("  max |difference| = {:e}", direct.max_abs_diff(&spectral));

    // A low-rank mixture sits between the two extremes.
    let low_rank = random_density(6, 2, &mut rng).unwrap();
    let direct = tomogram(&low_rank, &u).unwrap();
    let spectral = tomogram_spectral(&low_rank, &u, &tolerances).unwrap();
    println!("\nrank-2 state, N = 6");
    println!("  max |difference| = {:e}", direct.max_abs_diff(&spectral));
}
