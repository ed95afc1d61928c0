//! Tomographic probability vectors of single-qudit states and Tsallis
//! q-entropy inequality checks.
//!
//! A dimension-N qudit state `rho`, measured in the basis rotated by a
//! unitary `u`, yields the outcome distribution `w = diag(u rho u^H)`.
//! Reading the N outcomes as a formal composite of smaller factors
//! turns marginalization into multiplication by 0/1 column-stochastic
//! matrices, and classical entropy inequalities on `w` become
//! nontrivial statements about a single quantum system:
//!
//! - marginals over kept factors ignore rotations of discarded factors
//!   (a no-signaling identity),
//! - Tsallis q-entropy of `w` obeys subadditivity and strong
//!   subadditivity for every `q >= 1`,
//! - the quantum entropies of `rho` and its middle-factor reduction are
//!   bounded by tomographic pair entropies under product rotations,
//! - subadditivity can be rewritten as a bound between sums of q-th
//!   powers of probabilities.
//!
//! The crate checks all of these numerically: deterministic closed-form
//! fixtures, seeded random ensembles, and a CLI (`verify`, `nosignal`,
//! `demo`, `sweep`) that emits JSON or CSV reports. Runnable walkthroughs
//! live in `examples/`.
//!
//! ```
//! use tomoq::entropy::QParameter;
//! use tomoq::indexing::FactorShape;
//! use tomoq::inequalities::check_subadditivity_tomographic;
//! use tomoq::linalg::{DensityMatrix, UnitaryMatrix};
//!
//! let rho = DensityMatrix::maximally_mixed(6);
//! let u = UnitaryMatrix::identity(6);
//! let shape = FactorShape::new(vec![2, 3]).unwrap();
//! let q = QParameter::new(2.0).unwrap();
//! let report = check_subadditivity_tomographic(&rho, &u, &shape, q, 1e-9).unwrap();
//! assert!(report.holds);
//! assert!((report.slack - 1.0 / 3.0).abs() < 1e-12);
//! ```

pub mod cli;
pub mod entropy;
pub mod error;
pub mod fixtures;
pub mod indexing;
pub mod inequalities;
pub mod linalg;
pub mod sampling;
pub mod tomography;

pub use error::{Error, Result};
