//! Reading a dimension with no matching split by zero-padding.
//!
//! A seven-dimensional state admits no three-factor composite reading,
//! since 7 is prime. Embedding it in the top-left corner of an
//! eight-dimensional state adds only zero-probability outcomes, which
//! the order-q entropies ignore, so every inequality can be checked on
//! the padded state.
//!
//! # Running
//! ```bash
//! cargo run --example padding
//! ```

use tomoq::entropy::QParameter;
use tomoq::indexing::{pad_density, suggest_padded_shape, FactorShape};
use tomoq::inequalities::{check_ssa_tomographic, run_ensemble, EnsembleConfig, InequalityId};
use tomoq::linalg::Tolerances;
use tomoq::sampling::{haar_unitary, random_density, SeededGenerator};

fn main() {
    // Smallest shapes that can host awkward dimensions.
    for (n, factors) in [(7usize, 3usize), (5, 2), (11, 2)] {
        let shape = suggest_padded_shape(n, factors).unwrap();
        println!(
            "N = {n} with {factors} factors: pad to {} read as {:?}",
            shape.total(),
            shape.dims()
        );
    }

    let mut rng = SeededGenerator::new(13);
    let rho7 = random_density(7, 7, &mut rng).unwrap();
    let padded = pad_density(&rho7, 8).unwrap();
    println!(
        "\npadded trace: {:.12} (unchanged)",
        padded.matrix().trace().re
    );

    // The spectrum only gains zeros, so the entropy is unchanged.
    let q2 = QParameter::new(2.0).unwrap();
    let tolerances = Tolerances::default();
    let before = tomoq::entropy::tsallis_quantum(&rho7, q2, &tolerances).unwrap();
    let after = tomoq::entropy::tsallis_quantum(&padded, q2, &tolerances).unwrap();
    println!("entropy at q = 2: {before:.12} before, {after:.12} after");

    // Check strong subadditivity on the padded state directly.
    let shape = FactorShape::new(vec![2, 2, 2]).unwrap();
    let u = haar_unitary(8, &mut rng);
    let report = check_ssa_tomographic(&padded, &u, &shape, q2, 1e-9).unwrap();
    println!(
        "strong subadditivity on the padded state: slack {:e}, holds = {}",
        report.slack, report.holds
    );

    // Or let the ensemble runner pad every sampled state itself.
    let mut config = EnsembleConfig::new(
        vec![InequalityId::SsaTomo],
        7,
        shape,
        vec![q2],
        3,
        13,
    );
    config.pad = true;
    let outcome = run_ensemble(&config).unwrap();
    println!("\nensemble with automatic padding:");
    for report in &outcome.reports {
        println!(
            "  trial {}: N = {} (padded from {}), slack {:e}",
            report.extra["trial"], report.n, report.extra["padded_from"], report.slack
        );
    }
}
