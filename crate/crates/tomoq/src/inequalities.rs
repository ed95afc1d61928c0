//! Entropy inequality checkers and seeded ensemble sweeps.
//!
//! Every checker evaluates one inequality on concrete inputs and returns
//! an [`InequalityReport`] carrying both sides, the slack `rhs - lhs`,
//! and a verdict `holds = slack >= -tolerance`. Checkers never assume an
//! inequality is true: a violated report is data, and ensembles attach
//! the full counterexample so a violation can be replayed.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::entropy::{sum_q_powers, tsallis_classical, tsallis_quantum, QParameter};
use crate::error::{Error, Result};
use crate::indexing::{marginalization_matrix, pad_density, reduce_density, FactorShape};
use crate::linalg::{DensityMatrix, Tolerances, UnitaryMatrix};
use crate::sampling::{haar_unitary, random_density, SeededGenerator};
use crate::tomography::{
    check_no_signaling, marginal_tomogram, product_unitary, tomogram, TomogramVector,
};

/// Default slack tolerance for entropy inequalities. Entropies of short
/// vectors carry rounding well below 1e-12 per term; this leaves margin
/// for amplification by the q-th powers.
pub const DEFAULT_SLACK_TOLERANCE: f64 = 1e-9;

/// Default tolerance on the no-signaling deviation, which is an exact
/// identity up to matrix arithmetic rounding.
pub const DEFAULT_NOSIGNAL_TOLERANCE: f64 = 1e-10;

/// Default number of fresh partner draws per no-signaling run.
pub const DEFAULT_NOSIGNAL_PARTNERS: usize = 20;

/// Default grid of entropic orders.
pub const DEFAULT_Q_GRID: [f64; 6] = [1.0, 1.1, 1.5, 2.0, 3.0, 5.0];

/// Which inequality a report speaks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InequalityId {
    /// Joint distribution entropy vs sum of its two marginals.
    SubTomo,
    /// State entropy vs sum of its two reduced states.
    SubQuantum,
    /// Strong subadditivity on the measured distribution of a
    /// three-factor shape.
    SsaTomo,
    /// Quantum left side against the tomographic right side, product
    /// measurement rotations only.
    Mixed,
    /// Subadditivity rewritten as a bound between sums of q-th powers.
    SumformA1,
    /// Marginal invariance under rotations of the discarded factors.
    Nosig,
}

impl InequalityId {
    pub const ALL: [InequalityId; 6] = [
        InequalityId::SubTomo,
        InequalityId::SubQuantum,
        InequalityId::SsaTomo,
        InequalityId::Mixed,
        InequalityId::SumformA1,
        InequalityId::Nosig,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InequalityId::SubTomo => "sub-tomo",
            InequalityId::SubQuantum => "sub-quantum",
            InequalityId::SsaTomo => "ssa-tomo",
            InequalityId::Mixed => "mixed",
            InequalityId::SumformA1 => "sumform-a1",
            InequalityId::Nosig => "nosig",
        }
    }

    /// Number of shape factors the checker expects, if it is fixed.
    fn required_factors(self) -> Option<usize> {
        match self {
            InequalityId::SubTomo | InequalityId::SubQuantum | InequalityId::SumformA1 => Some(2),
            InequalityId::SsaTomo | InequalityId::Mixed => Some(3),
            InequalityId::Nosig => None,
        }
    }
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InequalityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InequalityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| {
                Error::Config(format!(
                    "unknown inequality id '{s}' (expected one of: sub-tomo, sub-quantum, \
                     ssa-tomo, mixed, sumform-a1, nosig)"
                ))
            })
    }
}

/// One checked inequality instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InequalityReport {
    pub inequality: InequalityId,
    /// Entropic order; 1.0 for the order-independent no-signaling check.
    pub q: f64,
    #[serde(rename = "N")]
    pub n: usize,
    pub shape: Vec<usize>,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs` exactly as computed.
    pub slack: f64,
    /// `slack >= -tolerance`.
    pub holds: bool,
    pub tolerance: f64,
    /// Ensemble seed when the inputs were sampled, absent for direct calls.
    pub seed: Option<u64>,
    /// Open side channel: printed-direction verdict for the sum form,
    /// deviation details for no-signaling, trial index and counterexample
    /// data in ensembles.
    #[serde(default)]
    pub extra: Map<String, Value>,
}

fn make_report(
    inequality: InequalityId,
    q: f64,
    n: usize,
    shape: &FactorShape,
    lhs: f64,
    rhs: f64,
    tolerance: f64,
) -> InequalityReport {
    let slack = rhs - lhs;
    InequalityReport {
        inequality,
        q,
        n,
        shape: shape.dims().to_vec(),
        lhs,
        rhs,
        slack,
        holds: slack >= -tolerance,
        tolerance,
        seed: None,
        extra: Map::new(),
    }
}

fn require_factors(shape: &FactorShape, expected: usize, what: &str) -> Result<()> {
    if shape.factors() != expected {
        return Err(Error::ShapeMismatch(format!(
            "{what} needs a shape with exactly {expected} factors, got {}",
            shape.factors()
        )));
    }
    Ok(())
}

fn require_dim(shape: &FactorShape, rho: &DensityMatrix) -> Result<()> {
    if shape.total() != rho.dim() {
        return Err(Error::ShapeMismatch(format!(
            "shape product {} does not match state dimension {}",
            shape.total(),
            rho.dim()
        )));
    }
    Ok(())
}

/// Joint vs marginal entropies of the measured distribution:
/// `S_q(w) <= S_q(w_1) + S_q(w_2)` for a two-factor shape.
pub fn check_subadditivity_tomographic(
    rho: &DensityMatrix,
    u: &UnitaryMatrix,
    shape: &FactorShape,
    q: QParameter,
    tolerance: f64,
) -> Result<InequalityReport> {
    require_factors(shape, 2, "subadditivity")?;
    require_dim(shape, rho)?;
    let w = tomogram(rho, u)?;
    let (w1, w2) = two_factor_marginals(&w, shape)?;
    let lhs = tsallis_classical(&w, q);
    let rhs = tsallis_classical(&w1, q) + tsallis_classical(&w2, q);
    Ok(make_report(
        InequalityId::SubTomo,
        q.value(),
        rho.dim(),
        shape,
        lhs,
        rhs,
        tolerance,
    ))
}

fn two_factor_marginals(
    w: &TomogramVector,
    shape: &FactorShape,
) -> Result<(TomogramVector, TomogramVector)> {
    let m1 = marginalization_matrix(shape, &[1])?;
    let m2 = marginalization_matrix(shape, &[2])?;
    Ok((marginal_tomogram(w, &m1)?, marginal_tomogram(w, &m2)?))
}

/// State vs reduced-state entropies: `S_q(rho) <= S_q(rho_1) + S_q(rho_2)`.
///
/// Recorded, not assumed: quantum Tsallis subadditivity has no blanket
/// guarantee here, so a violated report is a finding rather than a bug.
pub fn check_subadditivity_quantum(
    rho: &DensityMatrix,
    shape: &FactorShape,
    q: QParameter,
    tolerance: f64,
) -> Result<InequalityReport> {
    require_factors(shape, 2, "quantum subadditivity")?;
    require_dim(shape, rho)?;
    let tolerances = Tolerances::default();
    let rho1 = reduce_density(rho, shape, &[1])?;
    let rho2 = reduce_density(rho, shape, &[2])?;
    let lhs = tsallis_quantum(rho, q, &tolerances)?;
    let rhs = tsallis_quantum(&rho1, q, &tolerances)? + tsallis_quantum(&rho2, q, &tolerances)?;
    Ok(make_report(
        InequalityId::SubQuantum,
        q.value(),
        rho.dim(),
        shape,
        lhs,
        rhs,
        tolerance,
    ))
}

/// Strong subadditivity of the measured distribution on a three-factor
/// shape: `S_q(w) + S_q(w_2) <= S_q(w_12) + S_q(w_23)`.
pub fn check_ssa_tomographic(
    rho: &DensityMatrix,
    u: &UnitaryMatrix,
    shape: &FactorShape,
    q: QParameter,
    tolerance: f64,
) -> Result<InequalityReport> {
    require_factors(shape, 3, "strong subadditivity")?;
    require_dim(shape, rho)?;
    let w = tomogram(rho, u)?;
    let m12 = marginalization_matrix(shape, &[1, 2])?;
    let m23 = marginalization_matrix(shape, &[2, 3])?;
    let m2 = marginalization_matrix(shape, &[2])?;
    let w12 = marginal_tomogram(&w, &m12)?;
    let w23 = marginal_tomogram(&w, &m23)?;
    let w2 = marginal_tomogram(&w, &m2)?;
    let lhs = tsallis_classical(&w, q) + tsallis_classical(&w2, q);
    let rhs = tsallis_classical(&w12, q) + tsallis_classical(&w23, q);
    Ok(make_report(
        InequalityId::SsaTomo,
        q.value(),
        rho.dim(),
        shape,
        lhs,
        rhs,
        tolerance,
    ))
}

/// Quantum left side against a tomographic right side on a three-factor
/// shape: `S_q(rho) + S_q(rho_2) <= S_q(w_12) + S_q(w_23)`, with the
/// measurement rotation restricted to the product form `u1 x u2 x u3`.
pub fn check_mixed_inequality(
    rho: &DensityMatrix,
    u1: &UnitaryMatrix,
    u2: &UnitaryMatrix,
    u3: &UnitaryMatrix,
    shape: &FactorShape,
    q: QParameter,
    tolerance: f64,
) -> Result<InequalityReport> {
    require_factors(shape, 3, "the mixed inequality")?;
    require_dim(shape, rho)?;
    let factors = [u1, u2, u3];
    for (pos, (u, &d)) in factors.iter().zip(shape.dims()).enumerate() {
        if u.dim() != d {
            return Err(Error::NonProductInput(format!(
                "factor {} rotation is {}-dimensional, shape expects {d}",
                pos + 1,
                u.dim()
            )));
        }
    }
    let u = product_unitary(&[u1.clone(), u2.clone(), u3.clone()])?;
    let w = tomogram(rho, &u)?;
    let m12 = marginalization_matrix(shape, &[1, 2])?;
    let m23 = marginalization_matrix(shape, &[2, 3])?;
    let w12 = marginal_tomogram(&w, &m12)?;
    let w23 = marginal_tomogram(&w, &m23)?;
    let tolerances = Tolerances::default();
    let rho2 = reduce_density(rho, shape, &[2])?;
    let lhs = tsallis_quantum(rho, q, &tolerances)? + tsallis_quantum(&rho2, q, &tolerances)?;
    let rhs = tsallis_classical(&w12, q) + tsallis_classical(&w23, q);
    Ok(make_report(
        InequalityId::Mixed,
        q.value(),
        rho.dim(),
        shape,
        lhs,
        rhs,
        tolerance,
    ))
}

/// Subadditivity in sum form: `sum (M1 w)^q + sum (M2 w)^q <= 1 + sum w^q`.
///
/// For `q > 1` this is the two-marginal subadditivity scaled by `q - 1`.
/// The literature also circulates the reversed direction; the uniform
/// distribution falsifies that one, so it is evaluated and reported in
/// `extra.printed_direction_holds` instead of being checked as truth.
pub fn check_sumform_a1(
    rho: &DensityMatrix,
    u: &UnitaryMatrix,
    shape: &FactorShape,
    q: QParameter,
    tolerance: f64,
) -> Result<InequalityReport> {
    require_factors(shape, 2, "the sum form")?;
    require_dim(shape, rho)?;
    let w = tomogram(rho, u)?;
    let m1 = marginalization_matrix(shape, &[1])?;
    let m2 = marginalization_matrix(shape, &[2])?;
    let w1 = m1.apply(w.probabilities());
    let w2 = m2.apply(w.probabilities());
    let qv = q.value();
    let lhs = sum_q_powers(&w1, qv) + sum_q_powers(&w2, qv);
    let rhs = 1.0 + sum_q_powers(w.probabilities(), qv);
    let mut report = make_report(
        InequalityId::SumformA1,
        qv,
        rho.dim(),
        shape,
        lhs,
        rhs,
        tolerance,
    );
    report.extra.insert(
        "printed_direction_holds".into(),
        Value::Bool(rhs - lhs <= tolerance),
    );
    Ok(report)
}

/// No-signaling as a report: for every factor position, the marginal kept
/// at that position must be unchanged under fresh rotations of the other
/// factors. `lhs` is the worst deviation observed, `rhs` is zero.
pub fn check_no_signaling_report(
    rho: &DensityMatrix,
    shape: &FactorShape,
    locals: &[UnitaryMatrix],
    partners: usize,
    rng: &mut SeededGenerator,
    tolerance: f64,
) -> Result<InequalityReport> {
    let mut max_deviation = 0.0_f64;
    for position in 1..=shape.factors() {
        let check = check_no_signaling(rho, shape, &[position], locals, partners, rng, tolerance)?;
        max_deviation = max_deviation.max(check.max_deviation);
    }
    let mut report = make_report(
        InequalityId::Nosig,
        1.0,
        rho.dim(),
        shape,
        max_deviation,
        0.0,
        tolerance,
    );
    report
        .extra
        .insert("max_deviation".into(), Value::from(max_deviation));
    report
        .extra
        .insert("partners".into(), Value::from(partners as u64));
    Ok(report)
}

/// What to run and how to sample it.
#[derive(Debug, Clone)]
pub struct EnsembleConfig {
    pub inequalities: Vec<InequalityId>,
    /// State dimension before optional padding.
    pub n: usize,
    pub shape: FactorShape,
    pub q_values: Vec<QParameter>,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub nosignal_tolerance: f64,
    pub nosignal_partners: usize,
    /// Fixed input state; when present it replaces the per-trial density
    /// draw while rotations are still sampled per trial.
    pub state: Option<DensityMatrix>,
    /// Permit embedding the state into the (larger) shape dimension.
    pub pad: bool,
}

impl EnsembleConfig {
    pub fn new(
        inequalities: Vec<InequalityId>,
        n: usize,
        shape: FactorShape,
        q_values: Vec<QParameter>,
        trials: usize,
        seed: u64,
    ) -> Self {
        EnsembleConfig {
            inequalities,
            n,
            shape,
            q_values,
            trials,
            seed,
            tolerance: DEFAULT_SLACK_TOLERANCE,
            nosignal_tolerance: DEFAULT_NOSIGNAL_TOLERANCE,
            nosignal_partners: DEFAULT_NOSIGNAL_PARTNERS,
            state: None,
            pad: false,
        }
    }

    /// Inequality list with duplicates dropped, original order kept.
    fn unique_inequalities(&self) -> Vec<InequalityId> {
        let mut seen = HashSet::new();
        self.inequalities
            .iter()
            .copied()
            .filter(|id| seen.insert(*id))
            .collect()
    }

    fn validate(&self) -> Result<()> {
        if self.inequalities.is_empty() {
            return Err(Error::Config("no inequalities selected".into()));
        }
        if self.q_values.is_empty() {
            return Err(Error::Config("empty q grid".into()));
        }
        if self.n == 0 {
            return Err(Error::Config("dimension must be >= 1".into()));
        }
        if !self.tolerance.is_finite() || !self.nosignal_tolerance.is_finite() {
            return Err(Error::Config("tolerances must be finite".into()));
        }
        let working = self.shape.total();
        if working != self.n {
            if !self.pad {
                return Err(Error::ShapeMismatch(format!(
                    "shape product {} does not match dimension {} (pass pad to embed)",
                    working, self.n
                )));
            }
            if working < self.n {
                return Err(Error::TargetTooSmall {
                    target: working,
                    current: self.n,
                });
            }
        }
        if let Some(state) = &self.state {
            if state.dim() != self.n {
                return Err(Error::Config(format!(
                    "input state dimension {} does not match requested dimension {}",
                    state.dim(),
                    self.n
                )));
            }
        }
        for id in self.unique_inequalities() {
            if let Some(required) = id.required_factors() {
                if self.shape.factors() != required {
                    return Err(Error::ShapeMismatch(format!(
                        "{id} needs a shape with exactly {required} factors, got {}",
                        self.shape.factors()
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Aggregates of one ensemble run.
#[derive(Debug, Clone, Serialize)]
pub struct EnsembleSummary {
    pub total: usize,
    pub violations: usize,
    pub min_slack: Option<f64>,
    /// Index into the report list of the smallest slack.
    pub worst_index: Option<usize>,
}

/// Reports in deterministic order plus their summary.
#[derive(Debug, Clone)]
pub struct EnsembleOutcome {
    pub reports: Vec<InequalityReport>,
    pub summary: EnsembleSummary,
}

/// Run the configured checks over seeded trials.
///
/// Trial `t` draws from substream `t` of the seed: first the state (when
/// not fixed), then the full rotation, then one rotation per factor.
/// Every requested inequality and order sees the same trial draws, so
/// cross-checker comparisons act on identical inputs. Reports are
/// emitted by trial, then inequality in the configured order, then q;
/// the no-signaling check is order-independent and emits once per trial.
pub fn run_ensemble(config: &EnsembleConfig) -> Result<EnsembleOutcome> {
    config.validate()?;
    let ids = config.unique_inequalities();
    let working = config.shape.total();
    let mut reports = Vec::new();

    for trial in 0..config.trials {
        let mut rng = SeededGenerator::substream(config.seed, trial as u64);
        let base = match &config.state {
            Some(state) => state.clone(),
            None => random_density(config.n, config.n, &mut rng)?,
        };
        let rho = if working != config.n {
            pad_density(&base, working)?
        } else {
            base
        };
        let u = haar_unitary(working, &mut rng);
        let locals: Vec<UnitaryMatrix> = config
            .shape
            .dims()
            .iter()
            .map(|&d| haar_unitary(d, &mut rng))
            .collect();

        for &id in &ids {
            if id == InequalityId::Nosig {
                let report = check_no_signaling_report(
                    &rho,
                    &config.shape,
                    &locals,
                    config.nosignal_partners,
                    &mut rng,
                    config.nosignal_tolerance,
                )?;
                push_ensemble_report(&mut reports, report, config, trial, &rho, None);
                continue;
            }
            for &q in &config.q_values {
                let report = match id {
                    InequalityId::SubTomo => check_subadditivity_tomographic(
                        &rho,
                        &u,
                        &config.shape,
                        q,
                        config.tolerance,
                    )?,
                    InequalityId::SubQuantum => {
                        check_subadditivity_quantum(&rho, &config.shape, q, config.tolerance)?
                    }
                    InequalityId::SsaTomo => {
                        check_ssa_tomographic(&rho, &u, &config.shape, q, config.tolerance)?
                    }
                    InequalityId::Mixed => check_mixed_inequality(
                        &rho,
                        &locals[0],
                        &locals[1],
                        &locals[2],
                        &config.shape,
                        q,
                        config.tolerance,
                    )?,
                    InequalityId::SumformA1 => {
                        check_sumform_a1(&rho, &u, &config.shape, q, config.tolerance)?
                    }
                    InequalityId::Nosig => unreachable!("handled above"),
                };
                let used_u = match id {
                    InequalityId::SubQuantum => None,
                    InequalityId::Mixed => Some(product_unitary(&locals)?),
                    _ => Some(u.clone()),
                };
                push_ensemble_report(&mut reports, report, config, trial, &rho, used_u.as_ref());
            }
        }
    }

    let summary = summarize(&reports);
    Ok(EnsembleOutcome { reports, summary })
}

fn push_ensemble_report(
    reports: &mut Vec<InequalityReport>,
    mut report: InequalityReport,
    config: &EnsembleConfig,
    trial: usize,
    rho: &DensityMatrix,
    u: Option<&UnitaryMatrix>,
) {
    report.seed = Some(config.seed);
    report.extra.insert("trial".into(), Value::from(trial as u64));
    if config.shape.total() != config.n {
        report
            .extra
            .insert("padded_from".into(), Value::from(config.n as u64));
    }
    if !report.holds {
        let mut witness = Map::new();
        if let Ok(value) = rho.matrix().to_json_value() {
            witness.insert("rho".into(), value);
        }
        if let Some(u) = u {
            if let Ok(value) = u.matrix().to_json_value() {
                witness.insert("u".into(), value);
            }
        }
        report
            .extra
            .insert("counterexample".into(), Value::Object(witness));
    }
    reports.push(report);
}

fn summarize(reports: &[InequalityReport]) -> EnsembleSummary {
    let mut min_slack = None;
    let mut worst_index = None;
    for (idx, report) in reports.iter().enumerate() {
        if report.slack.is_nan() {
            continue;
        }
        if min_slack.is_none_or(|best| report.slack < best) {
            min_slack = Some(report.slack);
            worst_index = Some(idx);
        }
    }
    EnsembleSummary {
        total: reports.len(),
        violations: reports.iter().filter(|r| !r.holds).count(),
        min_slack,
        worst_index,
    }
}
