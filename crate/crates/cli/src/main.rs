//! `pareto-di`: generate fronts and scenario instances, evaluate distribution
//! indicators, run the experiments and plot their grades.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pareto_di::fronts::{dense_sample, structured_front};
use pareto_di::harness::{
    ordering_report, run_experiment, Experiment, ExperimentPlan, DEFAULT_DENSE_COUNT,
};
use pareto_di::indicators::{default_weights, evaluate, rse_ln, IndicatorId, IndicatorParams};
use pareto_di::io::{format_pfa, read_pfa, write_pfa};
use pareto_di::results::{read_results, write_results};
use pareto_di::rng::derive_seed;
use pareto_di::scenarios::{
    degrade_uniformity, pathology, shrink_coverage, uniform_subset, PathologyCase,
};
use pareto_di::svg::emit_likert_svg;
use pareto_di::tables::{coverage_row, PathologySize};
use pareto_di::weights::two_layer_lattice;
use pareto_di::{Error, FrontKind, Pfa64, WeightSet64, VERSION};

#[derive(Parser)]
#[command(
    name = "pareto-di",
    version,
    about = "Distribution indicators for Pareto front approximations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a front, weight set or scenario instance as a PFA file.
    Generate(GenerateArgs),
    /// Evaluate indicators on a PFA file.
    Evaluate(EvaluateArgs),
    /// Run an experiment and write results.csv and likert.svg.
    Experiment(ExperimentArgs),
    /// Render a Likert plot from a results file.
    Plot(PlotArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GenerateKind {
    Linear,
    Inverted,
    Dtlz1,
    Dtlz2,
    Weights,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: GenerateKind,
    #[arg(long)]
    objectives: usize,
    /// Outer lattice divisions; defaults to the coverage table row for m.
    #[arg(long)]
    h1: Option<usize>,
    /// Inner lattice divisions (0 for a single layer).
    #[arg(long)]
    h2: Option<usize>,
    /// Coverage fraction; shrinks the structured front toward its centroid.
    #[arg(long, conflicts_with_all = ["beta", "case"])]
    gamma: Option<f64>,
    /// Percentage of the uniform subset kept; the rest is drawn from a dense sample.
    #[arg(long, conflicts_with = "case")]
    beta: Option<u32>,
    /// Pathology case 1, 2 or 3 drawn from a dense sample.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    case: Option<u8>,
    /// Dense sample size for --beta and --case.
    #[arg(long, default_value_t = DEFAULT_DENSE_COUNT)]
    count: usize,
    #[arg(long, env = "PARETO_DI_SEED", default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvaluateArgs {
    file: PathBuf,
    /// Indicators to evaluate, comma separated, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    indicator: Vec<String>,
    #[arg(long)]
    theta: Option<f64>,
    /// RSE exponent; default m − 1.
    #[arg(long)]
    s: Option<f64>,
    #[arg(long = "t-grid")]
    t_grid: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// CDI merge threshold; required whenever CDI is evaluated.
    #[arg(long)]
    dbar: Option<f64>,
    /// DIR reference vectors (PFA file of simplex weights).
    #[arg(long)]
    weights: Option<PathBuf>,
    /// CPF reference set (PFA file).
    #[arg(long)]
    reference: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlanKind {
    Coverage,
    Uniformity,
    Pathology,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long, value_enum)]
    plan: PlanKind,
    /// Builtin problem names or paths to external fronts, comma separated.
    #[arg(long, value_delimiter = ',')]
    problems: Option<Vec<String>>,
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    objectives: Vec<usize>,
    #[arg(long, env = "PARETO_DI_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long = "out-dir", default_value = ".")]
    out_dir: PathBuf,
    /// Pathology cardinality column: N50, N100 or N200.
    #[arg(long, default_value = "N100")]
    size: String,
    #[arg(long, default_value_t = DEFAULT_DENSE_COUNT)]
    dense: usize,
    #[arg(long, default_value_t = 1)]
    replicates: usize,
}

#[derive(Args)]
struct PlotArgs {
    results: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

/// Failures that map to an exit code.
enum Failure {
    Usage(String),
    Data(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Data(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Generate(args) => generate(args),
        Command::Evaluate(args) => evaluate_cmd(args),
        Command::Experiment(args) => experiment(args),
        Command::Plot(args) => plot(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Data(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn meta(pairs: &[(&str, String)]) -> Vec<(String, String)> {
    let mut out = vec![("pareto-di".to_string(), VERSION.to_string())];
    out.extend(pairs.iter().map(|(k, v)| (k.to_string(), v.clone())));
    out
}

fn generate(args: GenerateArgs) -> Outcome {
    let m = args.objectives;
    let (h1, h2) = match (args.h1, args.h2) {
        (Some(h1), h2) => (h1, h2.unwrap_or(0)),
        (None, None) => {
            let row = coverage_row(m).ok_or_else(|| {
                Failure::Usage(format!("no default lattice for m = {m}; pass --h1"))
            })?;
            (row.h1, row.h2)
        }
        (None, Some(_)) => return Err(Failure::Usage("--h2 needs --h1".into())),
    };
    let weights: WeightSet64 = two_layer_lattice(m, h1, h2)?;
    let mut pairs = vec![
        ("kind", String::new()),
        ("m", m.to_string()),
        ("h1", h1.to_string()),
        ("h2", h2.to_string()),
    ];
    let kind = match args.kind {
        GenerateKind::Weights => {
            if args.gamma.is_some() || args.beta.is_some() || args.case.is_some() {
                return Err(Failure::Usage(
                    "--kind weights takes no scenario flags".into(),
                ));
            }
            pairs[0].1 = "weights".into();
            return emit(&weights.to_pfa()?, args.out.as_deref(), &meta(&pairs));
        }
        GenerateKind::Linear => FrontKind::LinearSimplex,
        GenerateKind::Inverted => FrontKind::InvertedSimplex,
        GenerateKind::Dtlz1 => FrontKind::Dtlz1,
        GenerateKind::Dtlz2 => FrontKind::Dtlz2Sphere,
    };
    pairs[0].1 = kind.label();

    let pfa = if args.beta.is_some() || args.case.is_some() {
        let dense_seed = derive_seed(args.seed, "dense");
        let dense: Pfa64 = dense_sample::<f64>(&kind, m, args.count, dense_seed)?
            .normalize()
            .0;
        pairs.push(("seed", args.seed.to_string()));
        pairs.push(("dense", args.count.to_string()));
        if let Some(case) = args.case {
            let case = PathologyCase::from_number(case)?;
            pairs.push(("scenario", format!("pathology case{}", case.number())));
            pathology(
                &dense,
                case,
                weights.len(),
                derive_seed(args.seed, "scenario"),
            )?
        } else {
            let beta = args.beta.expect("checked above");
            if !(10..=100).contains(&beta) {
                return Err(Failure::Usage(format!(
                    "--beta must be in 10..=100, got {beta}"
                )));
            }
            pairs.push(("scenario", format!("uniformity {beta}")));
            let uniform = uniform_subset(&dense, &weights)?;
            degrade_uniformity(&uniform, &dense, beta, derive_seed(args.seed, "scenario"))?
        }
    } else {
        let front = structured_front(&kind, &weights)?.normalize().0;
        match args.gamma {
            Some(g) => {
                pairs.push(("scenario", format!("coverage {g}")));
                shrink_coverage(&front, g)?
            }
            None => front,
        }
    };
    emit(&pfa, args.out.as_deref(), &meta(&pairs))
}

fn emit(pfa: &Pfa64, out: Option<&Path>, metadata: &[(String, String)]) -> Outcome {
    match out {
        Some(path) => write_pfa(pfa, path, metadata)?,
        None => print!("{}", format_pfa(pfa, metadata)),
    }
    Ok(())
}

fn selected_indicators(names: &[String]) -> Result<Vec<IndicatorId>, Failure> {
    if names.iter().any(|n| n.eq_ignore_ascii_case("all")) {
        return Ok(IndicatorId::ALL.to_vec());
    }
    let mut out = Vec::new();
    for name in names {
        let id = IndicatorId::parse(name)
            .ok_or_else(|| Failure::Usage(format!("unknown indicator `{name}`")))?;
        if !out.contains(&id) {
            out.push(id);
        }
    }
    Ok(out)
}

fn evaluate_cmd(args: EvaluateArgs) -> Outcome {
    let ids = selected_indicators(&args.indicator)?;
    if ids.contains(&IndicatorId::Cdi) && args.dbar.is_none() {
        return Err(Failure::Usage("CDI needs an explicit --dbar".into()));
    }
    let a: Pfa64 = read_pfa(&args.file)?;
    let mut params = IndicatorParams::<f64> {
        s: args.s,
        dbar: args.dbar,
        ..IndicatorParams::default()
    };
    if let Some(theta) = args.theta {
        params.theta = theta;
    }
    if let Some(t) = args.t_grid {
        params.t_grid = t;
    }
    if let Some(k) = args.k {
        params.k = k;
    }
    if let Some(path) = &args.weights {
        let w: Pfa64 = read_pfa(path)?;
        params.weights = Some(WeightSet64::new(w.m(), w.into_points())?);
    }
    if let Some(path) = &args.reference {
        params.reference = Some(read_pfa(path)?);
    }
    if params.weights.is_none() && ids.contains(&IndicatorId::Dir) {
        params.weights = Some(default_weights(a.m(), a.len())?);
    }

    let mut failed = None;
    for id in ids {
        match evaluate(&a, id, &params) {
            Ok(r) => {
                let mut line = format!(
                    "{:<4}{:>14.7}  ({})",
                    id.name(),
                    r.value,
                    r.orientation.label()
                );
                if id == IndicatorId::Rse {
                    let s = params.s.unwrap_or((a.m() - 1) as f64);
                    line.push_str(&format!("  ln = {:.7}", rse_ln(&a, s)?));
                }
                println!("{line}");
            }
            Err(e) => {
                println!("{:<4}{:>14}  ({})", id.name(), "-", e.code());
                log::warn!("{id}: {e}");
                failed.get_or_insert(e);
            }
        }
    }
    match failed {
        Some(e) => Err(Failure::Data(e)),
        None => Ok(()),
    }
}

fn experiment(args: ExperimentArgs) -> Outcome {
    let problems: Vec<FrontKind> = match &args.problems {
        Some(names) => names.iter().map(|n| FrontKind::parse(n)).collect(),
        None => match args.plan {
            PlanKind::Coverage => vec![FrontKind::LinearSimplex, FrontKind::InvertedSimplex],
            _ => vec![
                FrontKind::LinearSimplex,
                FrontKind::Dtlz1,
                FrontKind::Dtlz2Sphere,
            ],
        },
    };
    let usage = |e: Error| match e {
        Error::InvalidParameter(msg) => Failure::Usage(msg),
        other => Failure::Data(other),
    };
    let plan = match args.plan {
        PlanKind::Coverage => {
            ExperimentPlan::coverage(problems, args.objectives.clone(), args.seed)
        }
        PlanKind::Uniformity => {
            ExperimentPlan::uniformity(problems, args.objectives.clone(), args.seed)
        }
        PlanKind::Pathology => {
            let size = PathologySize::parse(&args.size)
                .ok_or_else(|| Failure::Usage(format!("unknown size `{}`", args.size)))?;
            ExperimentPlan::pathology(problems, args.objectives.clone(), size, args.seed)
        }
    }
    .map_err(usage)?
    .with_dense_count(args.dense)
    .with_replicates(args.replicates);
    plan.validate().map_err(usage)?;

    let params = IndicatorParams::<f64>::default();
    let table = run_experiment(&plan, &params)?;

    std::fs::create_dir_all(&args.out_dir).map_err(|e| {
        Failure::Data(Error::Io {
            path: args.out_dir.display().to_string(),
            message: e.to_string(),
        })
    })?;
    let problems: Vec<String> = plan.problems.iter().map(FrontKind::label).collect();
    let objectives: Vec<String> = plan.objective_counts.iter().map(usize::to_string).collect();
    let mut pairs = vec![
        ("experiment", plan.experiment.label().to_string()),
        ("seed", plan.master_seed.to_string()),
        ("problems", problems.join(",")),
        ("objectives", objectives.join(",")),
        ("replicates", plan.replicates.to_string()),
        (
            "params",
            format!(
                "theta={} s=m-1 t_grid={} k={} pud=lp0.1 unl=chebyshev dbar=group",
                params.theta, params.t_grid, params.k
            ),
        ),
    ];
    if plan.experiment != Experiment::Coverage {
        pairs.push(("dense", plan.dense_count.to_string()));
    }
    if plan.experiment == Experiment::Pathology {
        pairs.push(("size", args.size.to_uppercase()));
    }
    let csv = args.out_dir.join("results.csv");
    let svg = args.out_dir.join("likert.svg");
    write_results(&table, &csv, &meta(&pairs))?;
    emit_likert_svg(&table, &svg)?;

    for (id, tau) in ordering_report(&table) {
        println!("{:<4} mean tau {:+.3}", id.name(), tau);
    }
    println!("wrote {} and {}", csv.display(), svg.display());
    Ok(())
}

fn plot(args: PlotArgs) -> Outcome {
    let table = read_results(&args.results)?;
    emit_likert_svg(&table, &args.out)?;
    Ok(())
}
