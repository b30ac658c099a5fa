//! Deterministic random-instance generation and experiment scenarios.
//!
//! The generator is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded explicitly,
//! with `rand` 0.8 uniform sampling — never the platform default — so
//! fixtures and reports are reproducible everywhere. Trial `t` of a
//! scenario uses seed `base_seed + t`; skipped trials stay in the report
//! under their index so seeds remain aligned.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::betti::{betti_numbers, reg_pd, BettiTable};
use crate::exec;
use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::oracle::upper_koszul_betti;
use crate::pipeline::{check_bounds, resolve_product, BoundsReport, ModuleSpec, PipelineError, VerificationReport};
use crate::taylor::{taylor_complex, TaylorMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("variable range must be nonempty")]
    EmptyVarRange,
    #[error("variable index {0} out of range for {1} variables")]
    VarOutOfRange(usize, usize),
    #[error("num_gens must be at least 1")]
    ZeroGens,
    #[error("max_exp must be at least 1")]
    ZeroMaxExp,
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
}

/// Parameters for drawing a random monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub nvars: usize,
    /// Variables (0-based) the generators may use.
    pub var_range: BTreeSet<usize>,
    pub num_gens: usize,
    pub max_exp: u32,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.var_range.is_empty() {
            return Err(ConfigError::EmptyVarRange);
        }
        if let Some(&v) = self.var_range.iter().find(|&&v| v >= self.nvars) {
            return Err(ConfigError::VarOutOfRange(v, self.nvars));
        }
        if self.num_gens == 0 {
            return Err(ConfigError::ZeroGens);
        }
        if self.max_exp == 0 {
            return Err(ConfigError::ZeroMaxExp);
        }
        Ok(())
    }
}

fn draw_ideal(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    var_range: &BTreeSet<usize>,
    num_gens: usize,
    max_exp: u32,
) -> MonomialIdeal {
    let mut gens = Vec::with_capacity(num_gens);
    for _ in 0..num_gens {
        loop {
            let mut exps = vec![0u32; nvars];
            for &v in var_range {
                exps[v] = rng.gen_range(0..=max_exp);
            }
            if exps.iter().any(|&e| e > 0) {
                gens.push(Monomial::new(exps));
                break;
            }
        }
    }
    MonomialIdeal::new(nvars, gens)
}

/// Draw a random ideal: `num_gens` monomials supported on `var_range` with
/// exponents in `[0, max_exp]` (the unit monomial is rejected and redrawn),
/// minimalized. Deterministic in the seed.
pub fn random_ideal(spec: &GeneratorSpec) -> Result<MonomialIdeal, ConfigError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    Ok(draw_ideal(
        &mut rng,
        spec.nvars,
        &spec.var_range,
        spec.num_gens,
        spec.max_exp,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    Disjoint,
    Overlap1,
    Overlap2,
    Counterexample,
}

impl Scenario {
    pub fn name(&self) -> &'static str {
        match self {
            Scenario::Disjoint => "disjoint",
            Scenario::Overlap1 => "overlap1",
            Scenario::Overlap2 => "overlap2",
            Scenario::Counterexample => "counterexample",
        }
    }

    pub fn from_name(s: &str) -> Result<Self, ConfigError> {
        match s {
            "disjoint" => Ok(Scenario::Disjoint),
            "overlap1" => Ok(Scenario::Overlap1),
            "overlap2" => Ok(Scenario::Overlap2),
            "counterexample" => Ok(Scenario::Counterexample),
            other => Err(ConfigError::UnknownScenario(other.to_string())),
        }
    }
}

/// One (mode, pair) run inside a trial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairOutcome {
    pub module_kind: String,
    pub verification: Option<VerificationReport>,
    pub bounds: BoundsReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialReport {
    pub index: u64,
    pub ideal_i: String,
    pub ideal_j: String,
    pub skipped: Option<String>,
    pub outcomes: Vec<PairOutcome>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Aggregates {
    pub trials: u64,
    pub completed: u64,
    pub skipped: u64,
    pub verifications: u64,
    pub validate_pass: u64,
    pub acyclic_pass: u64,
    pub h0_pass: u64,
    pub bounds_checked: u64,
    pub pd_bound_true: u64,
    pub pd_bound_false: u64,
    pub reg_bound_true: u64,
    pub reg_bound_false: u64,
    pub intersection_eq_true: u64,
    pub intersection_eq_false: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentReport {
    pub scenario: String,
    pub trials: u64,
    pub seed: u64,
    pub field: String,
    pub max_gens: usize,
    pub aggregates: Aggregates,
    pub counterexample: Option<CounterexampleReport>,
    pub trial_reports: Vec<TrialReport>,
}

impl ExperimentReport {
    /// True when every verification passed and every bound verdict is TRUE
    /// (and the built-in pair reproduced, when present).
    pub fn all_pass(&self) -> bool {
        let a = &self.aggregates;
        a.validate_pass == a.verifications
            && a.acyclic_pass == a.verifications
            && a.h0_pass == a.verifications
            && a.pd_bound_false == 0
            && a.reg_bound_false == 0
            && self
                .counterexample
                .as_ref()
                .map_or(true, |c| c.matches_expected)
    }

    /// CLI exit code: 0 on all-pass, 1 on any FALSE verdict. The overlap2
    /// scenario expects violations and exits 0; skipped trials do not fail.
    pub fn exit_code(&self) -> i32 {
        if self.scenario == "overlap2" || self.all_pass() {
            0
        } else {
            1
        }
    }
}

fn skip_reason(e: &PipelineError) -> Option<String> {
    match e {
        PipelineError::Cap(c) => Some(c.to_string()),
        PipelineError::Cone(crate::cone::ConeError::Cap(c)) => Some(c.to_string()),
        _ => None,
    }
}

struct TrialRun<F: Field> {
    field: F,
    max_gens: usize,
}

impl<F: Field> TrialRun<F> {
    fn verified_pair(
        &self,
        ideal_i: &MonomialIdeal,
        module: ModuleSpec,
    ) -> Result<PairOutcome, PipelineError> {
        let (star, verification) = resolve_product(&self.field, ideal_i, &module, self.max_gens)?;
        let star_ref = match module {
            ModuleSpec::Ideal(_) => Some(&star),
            ModuleSpec::Quotient(_) => None,
        };
        let bounds = check_bounds(&self.field, ideal_i, &module, self.max_gens, star_ref)?;
        Ok(PairOutcome {
            module_kind: module.kind_str().to_string(),
            verification: Some(verification),
            bounds,
        })
    }

    fn bounds_pair(
        &self,
        ideal_i: &MonomialIdeal,
        module: ModuleSpec,
    ) -> Result<PairOutcome, PipelineError> {
        let bounds = check_bounds(&self.field, ideal_i, &module, self.max_gens, None)?;
        Ok(PairOutcome {
            module_kind: module.kind_str().to_string(),
            verification: None,
            bounds,
        })
    }

    fn report(
        &self,
        index: u64,
        ideal_i: &MonomialIdeal,
        ideal_j: &MonomialIdeal,
        outcomes: Result<Vec<PairOutcome>, PipelineError>,
    ) -> TrialReport {
        match outcomes {
            Ok(outcomes) => TrialReport {
                index,
                ideal_i: ideal_i.to_string(),
                ideal_j: ideal_j.to_string(),
                skipped: None,
                outcomes,
            },
            Err(e) => TrialReport {
                index,
                ideal_i: ideal_i.to_string(),
                ideal_j: ideal_j.to_string(),
                skipped: Some(skip_reason(&e).unwrap_or_else(|| e.to_string())),
                outcomes: Vec::new(),
            },
        }
    }
}

fn disjoint_trial<F: Field>(run: &TrialRun<F>, index: u64, seed: u64) -> TrialReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(index));
    let n = 6usize;
    let split = rng.gen_range(2..=4usize);
    let vars_i: BTreeSet<usize> = (0..split).collect();
    let vars_j: BTreeSet<usize> = (split..n).collect();
    let gi = rng.gen_range(1..=4usize);
    let gj = rng.gen_range(1..=4usize);
    let ideal_i = draw_ideal(&mut rng, n, &vars_i, gi, 3);
    let ideal_j = draw_ideal(&mut rng, n, &vars_j, gj, 3);
    let outcomes = (|| {
        Ok(vec![
            run.verified_pair(&ideal_i, ModuleSpec::Quotient(ideal_j.clone()))?,
            run.verified_pair(&ideal_i, ModuleSpec::Ideal(ideal_j.clone()))?,
        ])
    })();
    run.report(index, &ideal_i, &ideal_j, outcomes)
}

fn overlap_trial<F: Field>(
    run: &TrialRun<F>,
    index: u64,
    seed: u64,
    shared: usize,
) -> TrialReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(index));
    let n = 6usize;
    let shared_vars: BTreeSet<usize> = (0..shared).collect();
    let split = rng.gen_range(shared + 1..=shared + 3);
    let mut vars_i: BTreeSet<usize> = (shared..split).collect();
    vars_i.extend(&shared_vars);
    let mut vars_j: BTreeSet<usize> = (split..n).collect();
    vars_j.extend(&shared_vars);
    let gi = rng.gen_range(1..=3usize);
    let gj = rng.gen_range(1..=3usize);
    for _ in 0..64 {
        let ideal_i = draw_ideal(&mut rng, n, &vars_i, gi, 2);
        let ideal_j = draw_ideal(&mut rng, n, &vars_j, gj, 2);
        let overlap: BTreeSet<usize> = ideal_i
            .gens_vars()
            .intersection(&ideal_j.gens_vars())
            .copied()
            .collect();
        if overlap == shared_vars {
            let outcomes =
                (|| Ok(vec![run.bounds_pair(&ideal_i, ModuleSpec::Ideal(ideal_j.clone()))?]))();
            return run.report(index, &ideal_i, &ideal_j, outcomes);
        }
    }
    TrialReport {
        index,
        ideal_i: String::new(),
        ideal_j: String::new(),
        skipped: Some(format!(
            "could not draw a pair sharing exactly {shared} variable(s)"
        )),
        outcomes: Vec::new(),
    }
}

/// The fixed pair with `Reg(IJ) > Reg(I) + Reg(J)`.
pub fn counterexample_pair() -> (MonomialIdeal, MonomialIdeal) {
    let ideals = crate::parse::parse_ideals(&[
        "x2, x3",
        "x1^2*x2, x1*x2*x3, x2*x3*x4, x3*x4^2",
    ])
    .expect("built-in pair parses");
    (ideals[0].clone(), ideals[1].clone())
}

fn builtin_trial<F: Field>(run: &TrialRun<F>, index: u64) -> TrialReport {
    let (ideal_i, ideal_j) = counterexample_pair();
    let outcomes = (|| Ok(vec![run.bounds_pair(&ideal_i, ModuleSpec::Ideal(ideal_j.clone()))?]))();
    run.report(index, &ideal_i, &ideal_j, outcomes)
}

fn aggregate(scenario: Scenario, reports: &[TrialReport]) -> Aggregates {
    let mut a = Aggregates {
        trials: reports.len() as u64,
        ..Default::default()
    };
    for t in reports {
        if t.skipped.is_some() {
            a.skipped += 1;
            continue;
        }
        a.completed += 1;
        for o in &t.outcomes {
            if let Some(v) = &o.verification {
                a.verifications += 1;
                a.validate_pass += v.validate_ok as u64;
                a.acyclic_pass += v.acyclic as u64;
                a.h0_pass += v.h0_agrees as u64;
            }
            a.bounds_checked += 1;
            if o.bounds.pd_bound_holds {
                a.pd_bound_true += 1;
            } else {
                a.pd_bound_false += 1;
            }
            if o.bounds.reg_bound_holds {
                a.reg_bound_true += 1;
            } else {
                a.reg_bound_false += 1;
            }
        }
        // intersection equality is a property of the pair; count once
        if let Some(o) = t.outcomes.first() {
            if o.bounds.intersection_equals_product {
                a.intersection_eq_true += 1;
            } else {
                a.intersection_eq_false += 1;
            }
        }
    }
    let _ = scenario;
    a
}

/// Run a scenario: `trials` independent seeded trials, in parallel when the
/// `parallel` feature is enabled, assembled in index order.
pub fn run_scenario<F: Field>(
    field: &F,
    scenario: Scenario,
    trials: u64,
    seed: u64,
    max_gens: usize,
) -> ExperimentReport {
    let run = TrialRun {
        field: field.clone(),
        max_gens,
    };
    let trial_reports: Vec<TrialReport> = match scenario {
        Scenario::Disjoint => {
            exec::map_indices(trials as usize, |i| disjoint_trial(&run, i as u64, seed))
        }
        Scenario::Overlap1 => {
            exec::map_indices(trials as usize, |i| overlap_trial(&run, i as u64, seed, 1))
        }
        Scenario::Overlap2 => exec::map_indices(trials as usize, |i| {
            if i == 0 {
                builtin_trial(&run, 0)
            } else {
                overlap_trial(&run, i as u64, seed, 2)
            }
        }),
        Scenario::Counterexample => vec![builtin_trial(&run, 0)],
    };
    let counterexample = match scenario {
        Scenario::Counterexample => Some(counterexample_report(field, max_gens)),
        _ => None,
    };
    ExperimentReport {
        scenario: scenario.name().to_string(),
        trials: trial_reports.len() as u64,
        seed,
        field: field.name(),
        max_gens,
        aggregates: aggregate(scenario, &trial_reports),
        counterexample,
        trial_reports,
    }
}

/// Full reproduction data for the built-in pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub ideal_i: String,
    pub ideal_j: String,
    pub field: String,
    pub reg_i: i64,
    pub reg_j: i64,
    pub reg_ij: i64,
    pub pd_i: usize,
    pub pd_j: usize,
    pub pd_ij: usize,
    pub reg_bound_holds: bool,
    pub routes_agree: bool,
    pub matches_expected: bool,
    pub mismatches: Vec<String>,
    pub betti_i: serde_json::Value,
    pub betti_j: serde_json::Value,
    pub betti_ij: serde_json::Value,
}

fn expected_totals() -> [Vec<(usize, u32, usize)>; 3] {
    [
        // I: 2 generators in degree 1, 1 syzygy in degree 2
        vec![(0, 1, 2), (1, 2, 1)],
        // J: 4 generators in degree 3, 3 syzygies in degree 4
        vec![(0, 3, 4), (1, 4, 3)],
        // IJ: 8@4; 10@5 and 1@6; 5@6 and 2@7; 1@8
        vec![
            (0, 4, 8),
            (1, 5, 10),
            (1, 6, 1),
            (2, 6, 5),
            (2, 7, 2),
            (3, 8, 1),
        ],
    ]
}

fn check_totals(name: &str, table: &BettiTable, expected: &[(usize, u32, usize)], out: &mut Vec<String>) {
    let got = table.by_total_degree();
    let want: std::collections::BTreeMap<(usize, u32), usize> = expected
        .iter()
        .map(|&(i, d, dim)| ((i, d), dim))
        .collect();
    if got != want {
        out.push(format!("betti table of {name}: got {got:?}, expected {want:?}"));
    }
}

/// Compute the counterexample reproduction over `field`, cross-checking the
/// Taylor route against the lattice-homology route.
pub fn counterexample_report<F: Field>(field: &F, max_gens: usize) -> CounterexampleReport {
    let (ideal_i, ideal_j) = counterexample_pair();
    let ideal_ij = ideal_i.product(&ideal_j).expect("same ambient ring");

    let mut mismatches = Vec::new();
    let mut routes_agree = true;
    let mut tables = Vec::new();
    for (name, ideal) in [("I", &ideal_i), ("J", &ideal_j), ("IJ", &ideal_ij)] {
        let oracle_table = upper_koszul_betti(field, ideal);
        let taylor = taylor_complex(field, ideal, TaylorMode::Ideal, max_gens)
            .expect("within the generator cap");
        match betti_numbers(&taylor) {
            Ok(direct) => {
                if direct != oracle_table {
                    routes_agree = false;
                    mismatches.push(format!(
                        "resolution route and lattice route disagree on {name}"
                    ));
                }
            }
            Err(e) => {
                routes_agree = false;
                mismatches.push(format!("Taylor complex of {name} failed acyclicity: {e}"));
            }
        }
        tables.push(oracle_table);
    }

    let expected = expected_totals();
    check_totals("I", &tables[0], &expected[0], &mut mismatches);
    check_totals("J", &tables[1], &expected[1], &mut mismatches);
    check_totals("IJ", &tables[2], &expected[2], &mut mismatches);

    let (reg_i, pd_i) = reg_pd(&tables[0], 0).expect("nonzero");
    let (reg_j, pd_j) = reg_pd(&tables[1], 0).expect("nonzero");
    let (reg_ij, pd_ij) = reg_pd(&tables[2], 0).expect("nonzero");
    for (name, reg, want) in [("I", reg_i, 1), ("J", reg_j, 3), ("IJ", reg_ij, 5)] {
        if reg != want {
            mismatches.push(format!("reg({name}) = {reg}, expected {want}"));
        }
    }
    let reg_bound_holds = reg_ij <= reg_i + reg_j;
    if reg_bound_holds {
        mismatches.push("reg(IJ) <= reg(I) + reg(J) holds, but the pair should violate it".into());
    }

    CounterexampleReport {
        ideal_i: ideal_i.to_string(),
        ideal_j: ideal_j.to_string(),
        field: field.name(),
        reg_i,
        reg_j,
        reg_ij,
        pd_i,
        pd_j,
        pd_ij,
        reg_bound_holds,
        routes_agree,
        matches_expected: mismatches.is_empty(),
        mismatches,
        betti_i: tables[0].to_json(),
        betti_j: tables[1].to_json(),
        betti_ij: tables[2].to_json(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn gf() -> PrimeField {
        PrimeField::default_prime()
    }

    #[test]
    fn random_ideal_is_deterministic() {
        let spec = GeneratorSpec {
            nvars: 4,
            var_range: (0..4).collect(),
            num_gens: 3,
            max_exp: 3,
            seed: 7,
        };
        let a = random_ideal(&spec).unwrap();
        let b = random_ideal(&spec).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_ideal_single_variable_collapses() {
        let spec = GeneratorSpec {
            nvars: 3,
            var_range: BTreeSet::from([0]),
            num_gens: 5,
            max_exp: 4,
            seed: 1,
        };
        let i = random_ideal(&spec).unwrap();
        assert_eq!(i.num_gens(), 1);
    }

    #[test]
    fn random_ideal_rejects_bad_specs() {
        let mut spec = GeneratorSpec {
            nvars: 3,
            var_range: BTreeSet::new(),
            num_gens: 1,
            max_exp: 1,
            seed: 0,
        };
        assert_eq!(random_ideal(&spec), Err(ConfigError::EmptyVarRange));
        spec.var_range = BTreeSet::from([5]);
        assert!(matches!(
            random_ideal(&spec),
            Err(ConfigError::VarOutOfRange(5, 3))
        ));
    }

    #[test]
    fn disjoint_scenario_smoke() {
        let report = run_scenario(&gf(), Scenario::Disjoint, 3, 99, 16);
        assert_eq!(report.trials, 3);
        assert_eq!(report.aggregates.skipped, 0);
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.exit_code(), 0);
        // byte-identical reruns
        let again = run_scenario(&gf(), Scenario::Disjoint, 3, 99, 16);
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            serde_json::to_string(&again).unwrap()
        );
    }

    #[test]
    fn overlap1_scenario_smoke() {
        let report = run_scenario(&gf(), Scenario::Overlap1, 4, 5, 16);
        assert_eq!(report.aggregates.skipped, 0);
        for t in &report.trial_reports {
            assert_eq!(t.outcomes[0].bounds.overlap_size, 1, "{t:?}");
        }
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn overlap2_reports_builtin_violation_and_exits_zero() {
        let report = run_scenario(&gf(), Scenario::Overlap2, 3, 17, 16);
        assert!(report.aggregates.reg_bound_false >= 1);
        let first = &report.trial_reports[0];
        assert!(!first.outcomes[0].bounds.reg_bound_holds);
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn tight_cap_skips_trials() {
        let report = run_scenario(&gf(), Scenario::Disjoint, 4, 99, 2);
        assert!(report.aggregates.skipped > 0);
        for t in &report.trial_reports {
            if let Some(reason) = &t.skipped {
                assert!(reason.contains("cap"), "reason: {reason}");
            }
        }
    }

    #[test]
    fn counterexample_reproduces() {
        let report = counterexample_report(&gf(), 16);
        assert!(report.matches_expected, "{:?}", report.mismatches);
        assert_eq!(
            (report.reg_i, report.reg_j, report.reg_ij),
            (1, 3, 5)
        );
        assert_eq!((report.pd_i, report.pd_j, report.pd_ij), (1, 1, 3));
        assert!(!report.reg_bound_holds);
        assert!(report.routes_agree);
    }
}
