//! Order-q entropies of probability vectors and density matrices.
//!
//! The order-q entropy (1 - sum p^q) / (q - 1) interpolates between the
//! Shannon entropy at q -> 1 and ever flatter functionals as q grows.
//! Zero outcomes never contribute, so padding a vector with zeros is
//! exactly invisible.
//!
//! # Running
//! ```bash
//! cargo run --example entropy_basics
//! ```

use tomoq::entropy::{shannon, tsallis_classical, tsallis_quantum, QParameter};
use tomoq::linalg::{DensityMatrix, Tolerances};
use tomoq::sampling::{random_pure, SeededGenerator};
use tomoq::tomography::TomogramVector;

fn main() {
    // Uniform vectors have the closed form (1 - N^(1-q)) / (q - 1).
    println!("uniform vectors against the closed form:");
    for n in [2usize, 4, 6] {
        let w = TomogramVector::uniform(n);
        for qv in [1.5, 2.0, 3.0] {
            let q = QParameter::new(qv).unwrap();
            let got = tsallis_classical(&w, q);
            let expected = (1.0 - (n as f64).powf(1.0 - qv)) / (qv - 1.0);
            println!("  N = {n}, q = {qv}: {got:.12} (closed form {expected:.12})");
        }
    }

    // Near q = 1 the power form converges to the Shannon entropy, and
    // inside a small window the Shannon branch is evaluated directly.
    let w = TomogramVector::new(vec![0.2, 0.3, 0.5]).unwrap();
    println!("\nq -> 1 limit on (0.2, 0.3, 0.5):");
    println!("  shannon            = {}", shannon(&w));
    for qv in [1.01, 1.001, 1.000001] {
        let q = QParameter::new(qv).unwrap();
        println!("  q = {qv}: {}", tsallis_classical(&w, q));
    }

    // Padding with zero outcomes changes nothing, bit for bit.
    let padded = TomogramVector::new(vec![0.2, 0.3, 0.5, 0.0, 0.0, 0.0]).unwrap();
    let q2 = QParameter::new(2.0).unwrap();
    println!(
        "\npadding invariance at q = 2: {} vs {}",
        tsallis_classical(&w, q2),
        tsallis_classical(&padded, q2)
    );

    // The quantum functional applies the same form to the spectrum.
    let tolerances = Tolerances::default();
    let mixed = DensityMatrix::maximally_mixed(6);
    let mut rng = SeededGenerator::new(17);
    let pure = random_pure(6, &mut rng);
    println!("\nquantum entropies at q = 2:");
    println!(
        "  maximally mixed N = 6: {} (expected 5/6)",
        tsallis_quantum(&mixed, q2, &tolerances).unwrap()
    );
    println!(
        "  random pure state:     {:e} (expected 0)",
        tsallis_quantum(&pure, q2, &tolerances).unwrap()
    );
}
