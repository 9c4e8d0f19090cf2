//! Experiment runner: builds scenario variants per (problem, m, replicate)
//! group, evaluates all indicators, ranks and grades the variants.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fronts::{dense_sample, load_external, structured_front, FrontKind};
use crate::geometry::{DistanceKind, Pfa};
use crate::indicators::{evaluate_all, IndicatorId, IndicatorParams, IndicatorResult, Orientation};
use crate::numerics::kendall_tau;
use crate::rng::derive_seed;
use crate::scenarios::{
    degrade_uniformity, pathology, shrink_coverage, uniform_subset, PathologyCase, Scenario,
    ScenarioInstance,
};
use crate::tables::{coverage_row, pathology_row, CardinalityRow, PathologySize};
use crate::weights::{two_layer_lattice, WeightSet};

/// Dense sample size used for uniformity and pathology experiments.
pub const DEFAULT_DENSE_COUNT: usize = 3000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Experiment {
    Coverage,
    Uniformity,
    Pathology,
}

impl Experiment {
    pub fn label(self) -> &'static str {
        match self {
            Experiment::Coverage => "coverage",
            Experiment::Uniformity => "uniformity",
            Experiment::Pathology => "pathology",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "coverage" => Some(Experiment::Coverage),
            "uniformity" => Some(Experiment::Uniformity),
            "pathology" => Some(Experiment::Pathology),
            _ => None,
        }
    }

    pub fn scale(self) -> GradeScale {
        match self {
            Experiment::Pathology => GradeScale::FourPoint,
            _ => GradeScale::TenPoint,
        }
    }
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// What to run: problems × objective counts × replicates, each group holding
/// one variant per entry of `levels`.
#[derive(Debug, Clone)]
pub struct ExperimentPlan {
    pub experiment: Experiment,
    pub problems: Vec<FrontKind>,
    pub objective_counts: Vec<usize>,
    pub cardinalities: Vec<CardinalityRow>,
    pub levels: Vec<Scenario>,
    pub dense_count: usize,
    pub replicates: usize,
    pub master_seed: u64,
}

pub fn coverage_levels() -> Vec<Scenario> {
    (1..=10)
        .map(|i| Scenario::Coverage(i as f64 / 10.0))
        .collect()
}

pub fn uniformity_levels() -> Vec<Scenario> {
    (1..=10).map(|i| Scenario::Uniformity(10 * i)).collect()
}

pub fn pathology_levels() -> Vec<Scenario> {
    let mut v = vec![Scenario::Control];
    v.extend(PathologyCase::ALL.map(Scenario::Pathology));
    v
}

fn rows_for(
    ms: &[usize],
    f: impl Fn(usize) -> Option<CardinalityRow>,
) -> Result<Vec<CardinalityRow>> {
    ms.iter()
        .map(|&m| {
            f(m).ok_or_else(|| Error::InvalidParameter(format!("no cardinality row for m = {m}")))
        })
        .collect()
}

impl ExperimentPlan {
    pub fn coverage(
        problems: Vec<FrontKind>,
        objective_counts: Vec<usize>,
        master_seed: u64,
    ) -> Result<Self> {
        Ok(Self {
            experiment: Experiment::Coverage,
            cardinalities: rows_for(&objective_counts, coverage_row)?,
            problems,
            objective_counts,
            levels: coverage_levels(),
            dense_count: DEFAULT_DENSE_COUNT,
            replicates: 1,
            master_seed,
        })
    }

    pub fn uniformity(
        problems: Vec<FrontKind>,
        objective_counts: Vec<usize>,
        master_seed: u64,
    ) -> Result<Self> {
        Ok(Self {
            experiment: Experiment::Uniformity,
            cardinalities: rows_for(&objective_counts, coverage_row)?,
            problems,
            objective_counts,
            levels: uniformity_levels(),
            dense_count: DEFAULT_DENSE_COUNT,
            replicates: 1,
            master_seed,
        })
    }

    pub fn pathology(
        problems: Vec<FrontKind>,
        objective_counts: Vec<usize>,
        size: PathologySize,
        master_seed: u64,
    ) -> Result<Self> {
        Ok(Self {
            experiment: Experiment::Pathology,
            cardinalities: rows_for(&objective_counts, |m| pathology_row(m, size))?,
            problems,
            objective_counts,
            levels: pathology_levels(),
            dense_count: DEFAULT_DENSE_COUNT,
            replicates: 1,
            master_seed,
        })
    }

    pub fn with_levels(mut self, levels: Vec<Scenario>) -> Self {
        self.levels = levels;
        self
    }

    pub fn with_replicates(mut self, replicates: usize) -> Self {
        self.replicates = replicates;
        self
    }

    pub fn with_dense_count(mut self, dense_count: usize) -> Self {
        self.dense_count = dense_count;
        self
    }

    fn row(&self, m: usize) -> Result<CardinalityRow> {
        self.cardinalities
            .iter()
            .copied()
            .find(|r| r.m == m)
            .ok_or_else(|| Error::InvalidParameter(format!("no cardinality row for m = {m}")))
    }

    pub fn validate(&self) -> Result<()> {
        if self.problems.is_empty() || self.objective_counts.is_empty() || self.levels.is_empty() {
            return Err(Error::InvalidParameter(
                "plan needs problems, objective counts and levels".into(),
            ));
        }
        if self.replicates == 0 {
            return Err(Error::InvalidParameter(
                "plan needs at least one replicate".into(),
            ));
        }
        for &m in &self.objective_counts {
            self.row(m)?;
        }
        for level in &self.levels {
            let ok = matches!(
                (self.experiment, level),
                (Experiment::Coverage, Scenario::Coverage(_))
                    | (Experiment::Uniformity, Scenario::Uniformity(_))
                    | (
                        Experiment::Pathology,
                        Scenario::Pathology(_) | Scenario::Control
                    )
            );
            if !ok {
                return Err(Error::InvalidParameter(format!(
                    "level {level} does not belong to a {} experiment",
                    self.experiment
                )));
            }
        }
        Ok(())
    }
}

/// Grading scale: ten points for ten variants, or 10/7.5/5/2.5 for four.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GradeScale {
    TenPoint,
    FourPoint,
}

impl GradeScale {
    pub fn variants(self) -> usize {
        match self {
            GradeScale::TenPoint => 10,
            GradeScale::FourPoint => 4,
        }
    }

    /// Points for a (possibly fractional) rank; linear, so tied ranks interpolate.
    pub fn points(self, rank: f64) -> f64 {
        match self {
            GradeScale::TenPoint => 11.0 - rank,
            GradeScale::FourPoint => 12.5 - 2.5 * rank,
        }
    }
}

/// Rank 1 = most preferred; exact ties share the mean of their positions.
pub fn rank_values(values: &[f64], orientation: Orientation) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| {
        let c = values[a].total_cmp(&values[b]);
        match orientation {
            Orientation::Maximize => c.reverse(),
            Orientation::Minimize => c,
        }
    });
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let avg = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = avg;
        }
        start = end;
    }
    ranks
}

/// Ranks results of a single indicator across variants.
pub fn rank_variants(
    results: &[IndicatorResult<f64>],
    orientation: Orientation,
) -> Result<Vec<f64>> {
    if let Some(first) = results.first() {
        if results.iter().any(|r| r.indicator != first.indicator) {
            return Err(Error::MixedIndicators);
        }
    }
    let values: Vec<f64> = results.iter().map(|r| r.value).collect();
    Ok(rank_values(&values, orientation))
}

pub fn grade(ranks: &[f64], scale: GradeScale) -> Result<Vec<f64>> {
    if ranks.len() != scale.variants() {
        return Err(Error::ScaleMismatch {
            expected: scale.variants(),
            found: ranks.len(),
        });
    }
    Ok(ranks.iter().map(|&r| scale.points(r)).collect())
}

/// One (variant, indicator) evaluation inside a group.
#[derive(Debug, Clone, PartialEq)]
pub struct GradeRow {
    pub problem: String,
    pub m: usize,
    pub cardinality: usize,
    /// Seed of the group; identifies the replicate.
    pub seed: u64,
    pub scenario: Scenario,
    pub indicator: IndicatorId,
    pub orientation: Orientation,
    pub value: Option<f64>,
    pub error: Option<String>,
    pub rank: Option<f64>,
    pub grade: Option<f64>,
}

impl GradeRow {
    pub fn group_key(&self) -> (String, usize, usize, u64) {
        (self.problem.clone(), self.m, self.cardinality, self.seed)
    }
}

/// Mean grade of one variant under one indicator across groups.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateRow {
    pub indicator: IndicatorId,
    pub scenario: Scenario,
    pub mean_grade: f64,
    pub groups: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GradeTable {
    pub experiment: Experiment,
    pub rows: Vec<GradeRow>,
}

impl GradeTable {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Variants in order of first appearance.
    pub fn variants(&self) -> Vec<Scenario> {
        let mut out: Vec<Scenario> = Vec::new();
        for r in &self.rows {
            if !out.contains(&r.scenario) {
                out.push(r.scenario);
            }
        }
        out
    }

    pub fn indicators(&self) -> Vec<IndicatorId> {
        IndicatorId::ALL
            .into_iter()
            .filter(|id| self.rows.iter().any(|r| r.indicator == *id))
            .collect()
    }

    /// Group keys in order of first appearance.
    pub fn groups(&self) -> Vec<(String, usize, usize, u64)> {
        let mut out = Vec::new();
        for r in &self.rows {
            let k = r.group_key();
            if !out.contains(&k) {
                out.push(k);
            }
        }
        out
    }

    pub fn rows_for<'a>(
        &'a self,
        group: &'a (String, usize, usize, u64),
        indicator: IndicatorId,
    ) -> impl Iterator<Item = &'a GradeRow> + 'a {
        self.rows
            .iter()
            .filter(move |r| r.indicator == indicator && &r.group_key() == group)
    }

    /// Arithmetic mean grade per (indicator, variant) across groups.
    pub fn aggregate(&self) -> Vec<AggregateRow> {
        let mut out = Vec::new();
        for indicator in self.indicators() {
            for scenario in self.variants() {
                let grades: Vec<f64> = self
                    .rows
                    .iter()
                    .filter(|r| r.indicator == indicator && r.scenario == scenario)
                    .filter_map(|r| r.grade)
                    .collect();
                if grades.is_empty() {
                    continue;
                }
                out.push(AggregateRow {
                    indicator,
                    scenario,
                    mean_grade: grades.iter().sum::<f64>() / grades.len() as f64,
                    groups: grades.len(),
                });
            }
        }
        out
    }
}

/// Ground-truth variant label, base set for reference purposes, and variants.
struct GroupInstances {
    reference: Pfa<f64>,
    instances: Vec<ScenarioInstance>,
}

fn load_dense(kind: &FrontKind, m: usize, count: usize, seed: u64) -> Result<Pfa<f64>> {
    let raw = match kind {
        FrontKind::External(path) => {
            let pfa: Pfa<f64> = load_external(path)?;
            if pfa.m() != m {
                return Err(Error::Dimension {
                    expected: m,
                    found: pfa.m(),
                });
            }
            pfa
        }
        _ => dense_sample(kind, m, count, seed)?,
    };
    Ok(raw.normalize().0)
}

fn build_group(
    plan: &ExperimentPlan,
    kind: &FrontKind,
    row: CardinalityRow,
    weights: &WeightSet<f64>,
    group_seed: u64,
) -> Result<GroupInstances> {
    let problem = kind.label();
    let m = row.m;
    let make = |pfa: Pfa<f64>, scenario: Scenario, seed: u64| ScenarioInstance {
        cardinality: pfa.len(),
        pfa,
        problem: problem.clone(),
        m,
        scenario,
        seed,
    };
    match plan.experiment {
        Experiment::Coverage => {
            let base = match kind {
                FrontKind::External(path) => load_external::<f64>(path)?.normalize().0,
                _ => structured_front(kind, weights)?.normalize().0,
            };
            let instances = plan
                .levels
                .iter()
                .map(|&level| {
                    let Scenario::Coverage(gamma) = level else {
                        unreachable!("validated")
                    };
                    Ok(make(shrink_coverage(&base, gamma)?, level, group_seed))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(GroupInstances {
                reference: base,
                instances,
            })
        }
        Experiment::Uniformity => {
            let dense = load_dense(kind, m, plan.dense_count, derive_seed(group_seed, "dense"))?;
            let uniform = uniform_subset(&dense, weights)?;
            let instances = plan
                .levels
                .iter()
                .map(|&level| {
                    let Scenario::Uniformity(beta) = level else {
                        unreachable!("validated")
                    };
                    let seed = derive_seed(group_seed, &level.to_string());
                    Ok(make(
                        degrade_uniformity(&uniform, &dense, beta, seed)?,
                        level,
                        seed,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(GroupInstances {
                reference: uniform,
                instances,
            })
        }
        Experiment::Pathology => {
            let dense = load_dense(kind, m, plan.dense_count, derive_seed(group_seed, "dense"))?;
            let uniform = uniform_subset(&dense, weights)?;
            let instances = plan
                .levels
                .iter()
                .map(|&level| {
                    let seed = derive_seed(group_seed, &level.to_string());
                    let pfa = match level {
                        Scenario::Control => uniform.clone(),
                        Scenario::Pathology(case) => pathology(&dense, case, row.n, seed)?,
                        _ => unreachable!("validated"),
                    };
                    Ok(make(pfa, level, seed))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(GroupInstances {
                reference: uniform,
                instances,
            })
        }
    }
}

/// Largest of the per-variant minimum pairwise Euclidean distances.
pub fn group_dbar(sets: &[&Pfa<f64>]) -> Option<f64> {
    sets.iter()
        .filter_map(|p| p.min_pairwise_distance(DistanceKind::Euclidean))
        .filter(|d| *d > 0.0)
        .fold(None, |acc: Option<f64>, d| {
            Some(acc.map_or(d, |a| a.max(d)))
        })
}

/// Builds, evaluates, ranks and grades every group of the plan.
///
/// Unset fields of `params` are filled per group: DIR weights from the
/// cardinality row, the CPF reference from the ground-truth variant, and CDI's
/// `d̄` as the largest per-variant minimum distance.
pub fn run_experiment(plan: &ExperimentPlan, params: &IndicatorParams<f64>) -> Result<GradeTable> {
    plan.validate()?;
    let scale = plan.experiment.scale();
    let mut rows = Vec::new();
    for kind in &plan.problems {
        for &m in &plan.objective_counts {
            let row = plan.row(m)?;
            let weights = two_layer_lattice::<f64>(m, row.h1, row.h2)?;
            for rep in 0..plan.replicates {
                let label = format!(
                    "{}/{}/m{}/n{}/r{}",
                    plan.experiment,
                    kind.label(),
                    m,
                    row.n,
                    rep
                );
                let group_seed = derive_seed(plan.master_seed, &label);
                let group = build_group(plan, kind, row, &weights, group_seed)
                    .map_err(|e| e.in_instance(label.clone()))?;

                let mut gp = params.clone();
                gp.weights.get_or_insert_with(|| weights.clone());
                gp.reference.get_or_insert_with(|| group.reference.clone());
                if gp.dbar.is_none() {
                    let sets: Vec<&Pfa<f64>> = group.instances.iter().map(|i| &i.pfa).collect();
                    gp.dbar = group_dbar(&sets);
                }

                let evaluations: Vec<_> = group
                    .instances
                    .par_iter()
                    .map(|inst| evaluate_all(&inst.pfa, &gp))
                    .collect();

                for indicator in IndicatorId::ALL {
                    let outcomes: Vec<(usize, &Result<IndicatorResult<f64>>)> = evaluations
                        .iter()
                        .enumerate()
                        .map(|(v, evs)| {
                            let e = evs
                                .iter()
                                .find(|e| e.indicator == indicator)
                                .expect("all nine");
                            (v, &e.outcome)
                        })
                        .collect();
                    let ok: Vec<(usize, f64)> = outcomes
                        .iter()
                        .filter_map(|(v, o)| o.as_ref().ok().map(|r| (*v, r.value)))
                        .collect();
                    let values: Vec<f64> = ok.iter().map(|(_, x)| *x).collect();
                    let ranks = rank_values(&values, indicator.orientation());
                    let grades: Option<Vec<f64>> = if ranks.len() == 1 {
                        Some(vec![10.0])
                    } else {
                        match grade(&ranks, scale) {
                            Ok(g) => Some(g),
                            Err(e) => {
                                log::warn!("{label} {indicator}: not graded ({e})");
                                None
                            }
                        }
                    };
                    for (v, outcome) in outcomes {
                        let inst = &group.instances[v];
                        let pos = ok.iter().position(|(i, _)| *i == v);
                        if let Err(e) = outcome {
                            log::warn!("{label} {} {indicator}: {e}", inst.scenario);
                        }
                        rows.push(GradeRow {
                            problem: inst.problem.clone(),
                            m,
                            cardinality: inst.cardinality,
                            seed: group_seed,
                            scenario: inst.scenario,
                            indicator,
                            orientation: indicator.orientation(),
                            value: pos.map(|p| ok[p].1),
                            error: outcome.as_ref().err().map(|e| e.code().to_string()),
                            rank: pos.map(|p| ranks[p]),
                            grade: pos.and_then(|p| grades.as_ref().map(|g| g[p])),
                        });
                    }
                }
            }
        }
    }
    Ok(GradeTable {
        experiment: plan.experiment,
        rows,
    })
}

/// Mean Kendall τ, per indicator, between preference (negated rank) and the
/// ground-truth degradation order over all groups with two or more ranked variants.
pub fn ordering_report(table: &GradeTable) -> Vec<(IndicatorId, f64)> {
    let groups = table.groups();
    table
        .indicators()
        .into_iter()
        .filter_map(|indicator| {
            let taus: Vec<f64> = groups
                .iter()
                .filter_map(|g| {
                    let (pref, truth): (Vec<f64>, Vec<f64>) = table
                        .rows_for(g, indicator)
                        .filter_map(|r| r.rank.map(|rank| (-rank, r.scenario.truth_order())))
                        .unzip();
                    (pref.len() >= 2).then(|| kendall_tau(&pref, &truth).expect("equal lengths"))
                })
                .collect();
            (!taus.is_empty()).then(|| (indicator, taus.iter().sum::<f64>() / taus.len() as f64))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_by_orientation() {
        assert_eq!(
            rank_values(&[3.0, 1.0, 2.0], Orientation::Minimize),
            vec![3.0, 1.0, 2.0]
        );
        assert_eq!(
            rank_values(&[3.0, 1.0, 2.0], Orientation::Maximize),
            vec![1.0, 3.0, 2.0]
        );
        assert_eq!(
            rank_values(&[5.0, 5.0, 1.0], Orientation::Maximize),
            vec![1.5, 1.5, 3.0]
        );
    }

    #[test]
    fn mixed_indicators_rejected() {
        let a = IndicatorResult::new(IndicatorId::Rse, 1.0);
        let b = IndicatorResult::new(IndicatorId::Spd, 2.0);
        assert_eq!(
            rank_variants(&[a.clone(), b], Orientation::Minimize),
            Err(Error::MixedIndicators)
        );
        assert_eq!(
            rank_variants(&[a.clone(), a], Orientation::Minimize).unwrap(),
            vec![1.5, 1.5]
        );
    }

    #[test]
    fn grading_scales() {
        let ranks: Vec<f64> = (1..=10).map(f64::from).collect();
        let want: Vec<f64> = (1..=10).rev().map(f64::from).collect();
        assert_eq!(grade(&ranks, GradeScale::TenPoint).unwrap(), want);
        assert_eq!(
            grade(&[1.0, 2.0, 3.0, 4.0], GradeScale::FourPoint).unwrap(),
            vec![10.0, 7.5, 5.0, 2.5]
        );
        assert_eq!(
            grade(&[1.5, 1.5, 3.0, 4.0], GradeScale::FourPoint).unwrap(),
            vec![8.75, 8.75, 5.0, 2.5]
        );
        assert_eq!(
            grade(&[1.0, 2.0], GradeScale::FourPoint),
            Err(Error::ScaleMismatch {
                expected: 4,
                found: 2
            })
        );
    }

    #[test]
    fn plan_validation() {
        let plan = ExperimentPlan::coverage(vec![FrontKind::LinearSimplex], vec![2], 1).unwrap();
        assert!(plan.validate().is_ok());
        let bad = plan.clone().with_levels(vec![Scenario::Uniformity(50)]);
        assert!(bad.validate().is_err());
        assert!(ExperimentPlan::coverage(vec![FrontKind::LinearSimplex], vec![11], 1).is_err());
    }

    fn synthetic(values: &[f64], indicator: IndicatorId) -> GradeTable {
        let ranks = rank_values(values, indicator.orientation());
        let rows = values
            .iter()
            .zip(&ranks)
            .enumerate()
            .map(|(i, (&v, &r))| GradeRow {
                problem: "p".into(),
                m: 2,
                cardinality: 3,
                seed: 0,
                scenario: Scenario::Coverage((i + 1) as f64 / 10.0),
                indicator,
                orientation: indicator.orientation(),
                value: Some(v),
                error: None,
                rank: Some(r),
                grade: None,
            })
            .collect();
        GradeTable {
            experiment: Experiment::Coverage,
            rows,
        }
    }

    #[test]
    fn ordering_report_examples() {
        let up = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(
            ordering_report(&synthetic(&up, IndicatorId::Spd)),
            vec![(IndicatorId::Spd, 1.0)]
        );
        assert_eq!(
            ordering_report(&synthetic(&up, IndicatorId::Rse)),
            vec![(IndicatorId::Rse, -1.0)]
        );
        let flat = [2.0; 4];
        assert_eq!(
            ordering_report(&synthetic(&flat, IndicatorId::Cdi)),
            vec![(IndicatorId::Cdi, 0.0)]
        );
    }

    #[test]
    fn single_variant_uniformity_grades_ten() {
        let plan = ExperimentPlan::uniformity(vec![FrontKind::LinearSimplex], vec![2], 3)
            .unwrap()
            .with_levels(vec![Scenario::Uniformity(100)])
            .with_dense_count(400);
        let table = run_experiment(&plan, &IndicatorParams::default()).unwrap();
        assert_eq!(table.rows.len(), 9);
        for r in &table.rows {
            assert_eq!(r.grade, Some(10.0), "{r:?}");
        }
    }

    #[test]
    fn coverage_rse_prefers_full_coverage() {
        let plan = ExperimentPlan::coverage(vec![FrontKind::LinearSimplex], vec![2], 0).unwrap();
        let table = run_experiment(&plan, &IndicatorParams::default()).unwrap();
        let full = table
            .rows
            .iter()
            .find(|r| r.indicator == IndicatorId::Rse && r.scenario == Scenario::Coverage(1.0))
            .unwrap();
        assert_eq!(full.grade, Some(10.0));
        // Every group's grades sum to the scale total regardless of indicator.
        for id in IndicatorId::ALL {
            let sum: f64 = table
                .rows
                .iter()
                .filter(|r| r.indicator == id)
                .filter_map(|r| r.grade)
                .sum();
            assert!((sum - 55.0).abs() < 1e-9, "{id}: {sum}");
        }
    }

    #[test]
    fn missing_external_file_names_the_group() {
        let plan = ExperimentPlan::uniformity(
            vec![FrontKind::External("/nonexistent/wfg1.csv".into())],
            vec![2],
            0,
        )
        .unwrap();
        let err = run_experiment(&plan, &IndicatorParams::default()).unwrap_err();
        assert!(matches!(err, Error::Instance { ref label, .. } if label.contains("wfg1")));
        assert_eq!(err.code(), "IoError");
    }
}
