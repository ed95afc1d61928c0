//! Rotation matrices for spin-j systems and tomograms built from them.
//!
//! A spin with label 2j carries a (2j + 1)-dimensional irreducible
//! rotation u(theta, phi), ordered by descending magnetic number. Two
//! such rotations combine into a product rotation for a composite
//! reading, here a six-dimensional qudit split as (2, 3), i.e. a
//! spin-1/2 factor times a spin-1 factor.
//!
//! # Running
//! ```bash
//! cargo run --example spin_tomograms
//! ```

use tomoq::sampling::{random_density, sample_su2_angles, SeededGenerator};
use tomoq::tomography::{product_unitary, su2_irrep, tomogram, SU2Angles};

fn print_unitary(label: &str, u: &tomoq::linalg::UnitaryMatrix) {
    println!("{label}");
    let m = u.matrix();
    for i in 0..m.rows() {
        let cells: Vec<String> = (0..m.cols())
            .map(|j| format!("{:+.4}{:+.4}i", m[(i, j)].re, m[(i, j)].im))
            .collect();
        println!("  {}", cells.join("  "));
    }
    println!("  unitarity residual: {:e}", m.unitarity_residual());
}

fn main() {
    let angles = SU2Angles::new(0.7, 1.9);

    // 2j = 1: the familiar 2x2 rotation with an azimuthal phase.
    let u_half = su2_irrep(1, &angles).unwrap();
    print_unitary("spin 1/2 (2j = 1), theta = 0.7, phi = 1.9:", &u_half);

    // 2j = 2: the 3x3 spin-1 rotation.
    let u_one = su2_irrep(2, &angles).unwrap();
    print_unitary("\nspin 1 (2j = 2), same angles:", &u_one);

    // At phi = 0 the spin-1/2 matrix is the plane rotation by theta/2.
    let planar = su2_irrep(1, &SU2Angles::new(0.7, 0.0)).unwrap();
    println!("\nspin 1/2 at phi = 0 (plane rotation by theta/2):");
    println!(
        "  [{:.6}, {:.6}; {:.6}, {:.6}]",
        planar.matrix()[(0, 0)].re,
        planar.matrix()[(0, 1)].re,
        planar.matrix()[(1, 0)].re,
        planar.matrix()[(1, 1)].re
    );

    // Combine the two irreps into a rotation of the (2, 3) composite and
    // read out a tomogram of a random six-dimensional state.
    let mut rng = SeededGenerator::new(29);
    let rho = random_density(6, 6, &mut rng).unwrap();
    let u = product_unitary(&[u_half, u_one]).unwrap();
    let w = tomogram(&rho, &u).unwrap();
    println!("\ntomogram of a random state under the (2, 3) product rotation:");
    println!("  {:?}", w.probabilities());

    // Angles can also be drawn uniformly over the sphere.
    let drawn = sample_su2_angles(&mut rng);
    let u_drawn = su2_irrep(3, &drawn).unwrap();
    println!(
        "\nsampled angles theta = {:.4}, phi = {:.4} give a spin-3/2 rotation",
        drawn.theta, drawn.phi
    );
    println!(
        "  dimension {}, unitarity residual {:e}",
        u_drawn.dim(),
        u_drawn.matrix().unitarity_residual()
    );
}
