//! Acceptance suite: one test per shipping criterion, each printing a
//! single PASS/FAIL line. Oracles are computed here from first
//! principles wherever possible rather than trusting library internals.

use std::process::Command;
use std::time::Instant;

use tomoq::entropy::{tsallis_classical, tsallis_quantum, QParameter, Q_LIMIT_WINDOW};
use tomoq::fixtures;
use tomoq::indexing::{marginalization_matrix, reduce_density, FactorShape};
use tomoq::inequalities::{
    check_mixed_inequality, check_ssa_tomographic, check_subadditivity_quantum,
    check_subadditivity_tomographic, check_sumform_a1, run_ensemble, EnsembleConfig,
    InequalityId, DEFAULT_Q_GRID,
};
use tomoq::linalg::{ComplexMatrix, DensityMatrix, Tolerances, UnitaryMatrix};
use tomoq::sampling::{haar_unitary, random_density, random_pure, SeededGenerator};
use tomoq::tomography::{
    marginal_tomogram, product_unitary, tomogram, tomogram_spectral, TomogramVector,
};

fn check(failures: &mut Vec<String>, ok: bool, message: String) {
    if !ok {
        failures.push(message);
    }
}

fn conclude(criterion: &str, failures: Vec<String>) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("acceptance [{criterion}]: {verdict}");
    assert!(
        failures.is_empty(),
        "{criterion} failed:\n{}",
        failures.join("\n")
    );
}

fn shape(dims: &[usize]) -> FactorShape {
    FactorShape::new(dims.to_vec()).unwrap()
}

fn q(v: f64) -> QParameter {
    QParameter::new(v).unwrap()
}

fn point_mass(n: usize) -> DensityMatrix {
    let mut p = vec![0.0; n];
    p[0] = 1.0;
    DensityMatrix::new(ComplexMatrix::diag_real(&p)).unwrap()
}

#[test]
fn criterion_1_marginal_matrix_fixtures() {
    let mut failures = Vec::new();

    let s23 = shape(&[2, 3]);
    let m1 = marginalization_matrix(&s23, &[1]).unwrap();
    let m2 = marginalization_matrix(&s23, &[2]).unwrap();
    check(
        &mut failures,
        m1.dense_rows() == fixtures::j52_first_marginal(),
        "keep {1} on (2,3) differs from the reference matrix".into(),
    );
    check(
        &mut failures,
        m2.dense_rows() == fixtures::j52_second_marginal(),
        "keep {2} on (2,3) differs from the reference matrix".into(),
    );

    let s222 = shape(&[2, 2, 2]);
    let m23 = marginalization_matrix(&s222, &[2, 3]).unwrap();
    let mm2 = marginalization_matrix(&s222, &[2]).unwrap();
    let m12 = marginalization_matrix(&s222, &[1, 2]).unwrap();
    check(
        &mut failures,
        m23.dense_rows() == fixtures::j72_pair23_marginal(),
        "keep {2,3} on (2,2,2) differs from the reference matrix".into(),
    );
    check(
        &mut failures,
        mm2.dense_rows() == fixtures::j72_middle_marginal(),
        "keep {2} on (2,2,2) differs from the reference matrix".into(),
    );
    // The circulated coarse pair matrix actually marginalizes onto
    // factor 1 alone; the generated pair matrix must NOT match it.
    check(
        &mut failures,
        m12.dense_rows() != fixtures::j72_pair12_coarse(),
        "keep {1,2} unexpectedly matches the coarse two-block variant".into(),
    );
    check(
        &mut failures,
        fixtures::j72_pair12_coarse()
            == marginalization_matrix(&s222, &[1]).unwrap().dense_rows(),
        "coarse variant should coincide with the keep {1} marginal".into(),
    );

    conclude("1 marginal matrix fixtures", failures);
}

fn no_signaling_case(
    dims: &[usize],
    seed: u64,
    trials: usize,
    partners: usize,
    tolerance: f64,
    failures: &mut Vec<String>,
) {
    let s = shape(dims);
    let n = s.total();
    let m1 = marginalization_matrix(&s, &[1]).unwrap();
    let m2 = marginalization_matrix(&s, &[2]).unwrap();
    let mut worst = 0.0f64;
    for trial in 0..trials {
        let mut rng = SeededGenerator::substream(seed, trial as u64);
        let rho = random_density(n, n, &mut rng).unwrap();
        let u1 = haar_unitary(dims[0], &mut rng);
        let u2 = haar_unitary(dims[1], &mut rng);
        let base = tomogram(&rho, &product_unitary(&[u1.clone(), u2.clone()]).unwrap()).unwrap();
        let base1 = marginal_tomogram(&base, &m1).unwrap();
        let base2 = marginal_tomogram(&base, &m2).unwrap();

        // The kept marginal must equal the tomogram of the reduced state.
        let rho1 = reduce_density(&rho, &s, &[1]).unwrap();
        let rho2 = reduce_density(&rho, &s, &[2]).unwrap();
        worst = worst.max(base1.max_abs_diff(&tomogram(&rho1, &u1).unwrap()));
        worst = worst.max(base2.max_abs_diff(&tomogram(&rho2, &u2).unwrap()));

        // And it must not move when the other factor's rotation changes.
        for _ in 0..partners {
            let u2p = haar_unitary(dims[1], &mut rng);
            let w = tomogram(&rho, &product_unitary(&[u1.clone(), u2p]).unwrap()).unwrap();
            worst = worst.max(marginal_tomogram(&w, &m1).unwrap().max_abs_diff(&base1));
            let u1p = haar_unitary(dims[0], &mut rng);
            let w = tomogram(&rho, &product_unitary(&[u1p, u2.clone()]).unwrap()).unwrap();
            worst = worst.max(marginal_tomogram(&w, &m2).unwrap().max_abs_diff(&base2));
        }
    }
    check(
        failures,
        worst <= tolerance,
        format!("shape {dims:?}: worst marginal deviation {worst:e} exceeds {tolerance:e}"),
    );
}

#[test]
fn criterion_2_no_signaling_identity() {
    let started = Instant::now();
    let mut failures = Vec::new();
    no_signaling_case(&[2, 3], 1001, 500, 20, 1e-10, &mut failures);
    no_signaling_case(&[2, 4], 1002, 500, 20, 1e-10, &mut failures);
    let elapsed = started.elapsed();
    check(
        &mut failures,
        elapsed.as_secs_f64() < 30.0,
        format!("runtime {elapsed:?} exceeds the 30 s budget"),
    );
    conclude("2 no-signaling identity", failures);
}

#[test]
fn criterion_3_strong_subadditivity_ensemble() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let q_grid: Vec<QParameter> = DEFAULT_Q_GRID.iter().map(|&v| q(v)).collect();
    let config = EnsembleConfig::new(
        vec![InequalityId::SsaTomo],
        8,
        shape(&[2, 2, 2]),
        q_grid,
        1000,
        31,
    );
    let outcome = run_ensemble(&config).unwrap();
    check(
        &mut failures,
        outcome.reports.len() == 6000,
        format!("expected 6000 reports, got {}", outcome.reports.len()),
    );
    check(
        &mut failures,
        outcome.summary.violations == 0,
        format!(
            "{} violations at tolerance 1e-9, min slack {:?}",
            outcome.summary.violations, outcome.summary.min_slack
        ),
    );

    // A deterministic outcome distribution makes every entropy zero and
    // the inequality an exact equality.
    for &qv in DEFAULT_Q_GRID.iter() {
        let r = check_ssa_tomographic(
            &point_mass(8),
            &UnitaryMatrix::identity(8),
            &shape(&[2, 2, 2]),
            q(qv),
            1e-9,
        )
        .unwrap();
        check(
            &mut failures,
            r.slack.abs() <= 1e-12,
            format!("deterministic slack {} at q = {qv}", r.slack),
        );
    }

    let elapsed = started.elapsed();
    check(
        &mut failures,
        elapsed.as_secs_f64() < 60.0,
        format!("runtime {elapsed:?} exceeds the 60 s budget"),
    );
    conclude("3 tomographic strong subadditivity", failures);
}

#[test]
fn criterion_4_subadditivity_and_sum_form() {
    let mut failures = Vec::new();

    // 1000 shared samples: both checkers see identical draws per trial.
    let config = EnsembleConfig::new(
        vec![InequalityId::SubTomo, InequalityId::SumformA1],
        6,
        shape(&[2, 3]),
        vec![q(2.0)],
        1000,
        41,
    );
    let outcome = run_ensemble(&config).unwrap();
    check(
        &mut failures,
        outcome.reports.len() == 2000,
        format!("expected 2000 reports, got {}", outcome.reports.len()),
    );
    let mut verdict_mismatches = 0usize;
    for pair in outcome.reports.chunks_exact(2) {
        if pair[0].holds != pair[1].holds {
            verdict_mismatches += 1;
        }
    }
    check(
        &mut failures,
        verdict_mismatches == 0,
        format!("{verdict_mismatches} verdict mismatches between the two forms"),
    );
    check(
        &mut failures,
        outcome.summary.violations == 0,
        format!("{} violations", outcome.summary.violations),
    );

    // Closed forms on the uniform vector.
    let uniform = DensityMatrix::maximally_mixed(6);
    let id6 = UnitaryMatrix::identity(6);
    let sub = check_subadditivity_tomographic(&uniform, &id6, &shape(&[2, 3]), q(2.0), 1e-9)
        .unwrap();
    check(
        &mut failures,
        (sub.lhs - 5.0 / 6.0).abs() <= 1e-14 && (sub.rhs - 7.0 / 6.0).abs() <= 1e-14,
        format!("uniform closed form: lhs {} rhs {}", sub.lhs, sub.rhs),
    );
    let sum = check_sumform_a1(&uniform, &id6, &shape(&[2, 3]), q(2.0), 1e-9).unwrap();
    check(
        &mut failures,
        sum.holds,
        "sum form fails on the uniform vector".into(),
    );
    // The reversed direction is falsified by this very input.
    check(
        &mut failures,
        sum.extra.get("printed_direction_holds") == Some(&serde_json::Value::Bool(false)),
        format!(
            "reversed direction not falsified: lhs {} rhs {}",
            sum.lhs, sum.rhs
        ),
    );

    conclude("4 subadditivity and its sum form", failures);
}

#[test]
fn criterion_5_quantum_subadditivity() {
    let mut failures = Vec::new();
    let mut total_violations = 0usize;

    for (n, dims) in [(4, vec![2, 2]), (6, vec![2, 3]), (8, vec![2, 4])] {
        let config = EnsembleConfig::new(
            vec![InequalityId::SubQuantum],
            n,
            shape(&dims),
            vec![q(1.0), q(2.0), q(3.0)],
            1000,
            51,
        );
        let outcome = run_ensemble(&config).unwrap();
        total_violations += outcome.summary.violations;
        if outcome.summary.violations > 0 {
            let idx = outcome.summary.worst_index.unwrap();
            println!(
                "  recorded violation, N = {n}: worst slack {:?} at q = {}",
                outcome.summary.min_slack,
                outcome.reports[idx].q
            );
        }
    }
    println!("  quantum subadditivity violations recorded: {total_violations}");

    let sub = check_subadditivity_quantum(
        &DensityMatrix::maximally_mixed(6),
        &shape(&[2, 3]),
        q(2.0),
        1e-9,
    )
    .unwrap();
    check(
        &mut failures,
        (sub.lhs - 5.0 / 6.0).abs() <= 1e-12 && (sub.rhs - 7.0 / 6.0).abs() <= 1e-12,
        format!("uniform closed form: lhs {} rhs {}", sub.lhs, sub.rhs),
    );

    let mut bell = ComplexMatrix::zeros(4, 4);
    for &i in &[0usize, 3] {
        for &j in &[0usize, 3] {
            bell[(i, j)] = num_complex::Complex64::new(0.5, 0.0);
        }
    }
    let entangled = DensityMatrix::new(bell).unwrap();
    let r = check_subadditivity_quantum(&entangled, &shape(&[2, 2]), q(2.0), 1e-9).unwrap();
    check(
        &mut failures,
        r.lhs.abs() <= 1e-12 && (r.rhs - 1.0).abs() <= 1e-12 && r.holds,
        format!("maximally entangled closed form: lhs {} rhs {}", r.lhs, r.rhs),
    );

    conclude("5 quantum subadditivity", failures);
}

#[test]
fn criterion_6_mixed_inequality() {
    let mut failures = Vec::new();
    let s = shape(&[2, 2, 2]);
    let mut violations = 0usize;
    let mut chain_breaks = 0usize;
    for trial in 0..500u64 {
        let mut rng = SeededGenerator::substream(61, trial);
        let rho = random_density(8, 8, &mut rng).unwrap();
        let locals: Vec<UnitaryMatrix> = (0..3).map(|_| haar_unitary(2, &mut rng)).collect();
        let product = product_unitary(&locals).unwrap();
        for qv in [1.5, 2.0] {
            let mixed = check_mixed_inequality(
                &rho, &locals[0], &locals[1], &locals[2], &s, q(qv), 1e-9,
            )
            .unwrap();
            if !mixed.holds {
                violations += 1;
            }
            // The quantum side is dominated by the tomographic side of
            // the same product rotation, entropy by entropy.
            let ssa = check_ssa_tomographic(&rho, &product, &s, q(qv), 1e-9).unwrap();
            if mixed.lhs > ssa.lhs + 1e-10 {
                chain_breaks += 1;
            }
        }
    }
    check(
        &mut failures,
        violations == 0,
        format!("{violations} mixed-inequality violations"),
    );
    check(
        &mut failures,
        chain_breaks == 0,
        format!("{chain_breaks} samples where the quantum side exceeded the tomographic side"),
    );
    conclude("6 mixed quantum/tomographic inequality", failures);
}

#[test]
fn criterion_7_entropy_oracles() {
    let mut failures = Vec::new();

    // Uniform closed form (1 - N^(1-q)) / (q - 1).
    for n in 2..=16usize {
        let w = TomogramVector::uniform(n);
        for qv in [1.5, 2.0, 3.0] {
            let expected = (1.0 - (n as f64).powf(1.0 - qv)) / (qv - 1.0);
            let got = tsallis_classical(&w, q(qv));
            check(
                &mut failures,
                (got - expected).abs() <= 1e-12,
                format!("uniform N = {n}, q = {qv}: {got} vs {expected}"),
            );
        }
    }

    // Limit branch: inside the window the Shannon form is used exactly;
    // just outside it the power form stays within 1e-6.
    for p in [vec![0.25; 4], vec![0.2, 0.3, 0.5]] {
        let w = TomogramVector::new(p).unwrap();
        let at_one = tsallis_classical(&w, q(1.0));
        check(
            &mut failures,
            tsallis_classical(&w, q(1.0 + 0.5 * Q_LIMIT_WINDOW)) == at_one,
            "window interior should evaluate the Shannon branch".into(),
        );
        let outside = tsallis_classical(&w, q(1.0 + 1e-6));
        check(
            &mut failures,
            (outside - at_one).abs() <= 1e-6,
            format!("limit continuity: {outside} vs {at_one}"),
        );
    }

    // Pure states carry zero entropy.
    for qv in [1.0, 2.0, 3.0] {
        let w = TomogramVector::new(vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        check(
            &mut failures,
            tsallis_classical(&w, q(qv)) == 0.0,
            format!("deterministic vector nonzero at q = {qv}"),
        );
    }
    let tolerances = Tolerances::default();
    let mut rng = SeededGenerator::new(71);
    for n in [2, 4, 8] {
        let pure = random_pure(n, &mut rng);
        for qv in [1.0, 2.0, 3.0] {
            let s = tsallis_quantum(&pure, q(qv), &tolerances).unwrap();
            check(
                &mut failures,
                s.abs() <= 1e-12,
                format!("pure state entropy {s:e} at N = {n}, q = {qv}"),
            );
        }
    }

    // Padding with zeros is exactly invisible.
    let w = TomogramVector::new(vec![0.3, 0.25, 0.45]).unwrap();
    let padded = TomogramVector::new(vec![0.3, 0.25, 0.45, 0.0, 0.0]).unwrap();
    for qv in [1.0, 1.5, 2.0, 5.0] {
        check(
            &mut failures,
            tsallis_classical(&w, q(qv)).to_bits()
                == tsallis_classical(&padded, q(qv)).to_bits(),
            format!("padding changed the entropy at q = {qv}"),
        );
    }

    conclude("7 entropy oracles", failures);
}

#[test]
fn criterion_8_tomogram_path_equivalence() {
    let mut failures = Vec::new();
    let tolerances = Tolerances::default();
    let mut worst = 0.0f64;
    let mut count = 0usize;
    for (case, n) in [(0u64, 2usize), (1, 4), (2, 6), (3, 8)] {
        for trial in 0..250u64 {
            let mut rng = SeededGenerator::substream(81 + case, trial);
            let rho = match trial % 4 {
                // Full rank, a generic rank-deficient state, a pure
                // state, and an exactly degenerate spectrum.
                0 => random_density(n, n, &mut rng).unwrap(),
                1 => random_density(n, 1 + n / 2, &mut rng).unwrap(),
                2 => random_pure(n, &mut rng),
                _ => {
                    let basis = haar_unitary(n, &mut rng);
                    let mut d = vec![0.0; n];
                    for v in d.iter_mut().take(n / 2) {
                        *v = 2.0 / n as f64;
                    }
                    let m = basis
                        .matrix()
                        .mul(&ComplexMatrix::diag_real(&d))
                        .mul(&basis.matrix().adjoint());
                    DensityMatrix::new(m).unwrap()
                }
            };
            let u = haar_unitary(n, &mut rng);
            let direct = tomogram(&rho, &u).unwrap();
            let spectral = tomogram_spectral(&rho, &u, &tolerances).unwrap();
            worst = worst.max(direct.max_abs_diff(&spectral));
            count += 1;
        }
    }
    check(&mut failures, count == 1000, format!("ran {count} samples"));
    check(
        &mut failures,
        worst <= 1e-10,
        format!("worst route disagreement {worst:e}"),
    );
    conclude("8 tomogram path equivalence", failures);
}

fn run_cli(args: &[&str]) -> (Vec<u8>, Vec<u8>, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_tomoq"))
        .args(args)
        .output()
        .expect("binary should run");
    (
        output.stdout,
        output.stderr,
        output.status.code().unwrap_or(-1),
    )
}

#[test]
fn criterion_9_cli_determinism() {
    let mut failures = Vec::new();
    let commands: Vec<Vec<&str>> = vec![
        vec![
            "verify", "--ineq", "ssa-tomo", "--N", "8", "--shape", "2,2,2", "--q", "1,2",
            "--trials", "20", "--seed", "42",
        ],
        vec![
            "sweep", "--ineq", "sub-tomo,sumform-a1", "--N", "6", "--shape", "2,3", "--q",
            "1.5,2", "--trials", "10", "--seed", "5",
        ],
        vec![
            "nosignal", "--N", "6", "--shape", "2,3", "--trials", "5", "--seed", "3",
        ],
        vec!["demo", "j52", "--seed", "1"],
        vec!["demo", "j72", "--seed", "2"],
    ];
    for args in &commands {
        let (out_a, _, code_a) = run_cli(args);
        let (out_b, _, code_b) = run_cli(args);
        check(
            &mut failures,
            code_a == 0 && code_b == 0,
            format!("{args:?} exited with {code_a}/{code_b}"),
        );
        check(
            &mut failures,
            out_a == out_b,
            format!("{args:?} output differs between identical runs"),
        );
    }

    // Same through a file sink.
    let dir = std::env::temp_dir();
    let path_a = dir.join("tomoq_det_a.csv");
    let path_b = dir.join("tomoq_det_b.csv");
    for (path, _) in [(&path_a, 0), (&path_b, 1)] {
        let (_, _, code) = run_cli(&[
            "sweep",
            "--ineq",
            "ssa-tomo",
            "--N",
            "8",
            "--shape",
            "2,2,2",
            "--q",
            "2",
            "--trials",
            "5",
            "--seed",
            "9",
            "--output",
            path.to_str().unwrap(),
        ]);
        check(&mut failures, code == 0, format!("file run exited {code}"));
    }
    let bytes_a = std::fs::read(&path_a).unwrap();
    let bytes_b = std::fs::read(&path_b).unwrap();
    check(
        &mut failures,
        bytes_a == bytes_b,
        "file outputs differ between identical runs".into(),
    );
    let _ = std::fs::remove_file(&path_a);
    let _ = std::fs::remove_file(&path_b);

    conclude("9 seeded CLI determinism", failures);
}
