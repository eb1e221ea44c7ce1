//! Command-line front end: `run` a scenario, `sweep` it over seeds, or list
//! the built-in `presets`. Exit status 0 on success, 1 on validation
//! errors, 2 when every requested algorithm failed to plan.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use rm_dijkstra::{
    load_scenario, preset, preset_names, run_scenario, run_seed_sweep, AlgorithmSpec, Error,
    RunSummary, Scenario, SweepSummary,
};

#[derive(Debug, Parser)]
#[command(name = "rm-dijkstra", version, about = "Optimal path planning on height surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one scenario with one seed
    Run {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run one scenario across many seeds and aggregate statistics
    Sweep {
        #[command(flatten)]
        common: CommonArgs,
        /// Seed count (`20` means seeds 0..19) or explicit list (`3,5,8`)
        #[arg(long, default_value = "10")]
        seeds: String,
    },
    /// List the built-in scenarios
    Presets,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Preset name or path to a JSON scenario file
    #[arg(long)]
    scenario: String,

    /// Algorithms to run: `all` or a comma-separated subset of
    /// rm-dijkstra, dijkstra-euclid, astar-euclid
    #[arg(long)]
    algo: Option<String>,

    /// Override the scenario's node count (start and goal included)
    #[arg(long)]
    samples: Option<usize>,

    /// Override the scenario's RNG seed
    #[arg(long)]
    seed: Option<u64>,

    /// Override the Gauss-Legendre order for edge costs
    #[arg(long)]
    gauss_points: Option<usize>,

    /// Sparsify every roadmap to k nearest neighbours
    #[arg(long)]
    knn: Option<usize>,

    /// Sparsify only the chord-cost baseline roadmaps
    #[arg(long)]
    baseline_knn: Option<usize>,

    /// Directory for output artifacts (omit to skip writing files)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn resolve_scenario(common: &CommonArgs) -> Result<Scenario, Error> {
    let source = &common.scenario;
    let mut sc = if preset(source).is_some() || !std::path::Path::new(source).exists() {
        load_scenario(source)?
    } else {
        load_scenario(&fs::read_to_string(source)?)?
    };
    if let Some(samples) = common.samples {
        sc.samples = samples;
    }
    if let Some(seed) = common.seed {
        sc.seed = seed;
    }
    if let Some(gp) = common.gauss_points {
        sc.gauss_points = gp;
    }
    if common.knn.is_some() {
        sc.knn = common.knn;
    }
    if common.baseline_knn.is_some() {
        sc.baseline_knn = common.baseline_knn;
    }
    if let Some(algo) = &common.algo {
        if algo != "all" {
            sc.algorithms = algo
                .split(',')
                .map(|s| AlgorithmSpec::from_str(s.trim()))
                .collect::<Result<Vec<_>, _>>()?;
        }
    }
    sc.validate()?;
    Ok(sc)
}

fn parse_seeds(spec: &str) -> Result<Vec<u64>, Error> {
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| Error::Config(format!("`{s}` is not a valid seed")))
    };
    if spec.contains(',') {
        return spec.split(',').map(parse).collect();
    }
    let count = parse(spec)?;
    if count == 0 {
        return Err(Error::Config("seed count must be at least 1".into()));
    }
    Ok((0..count).collect())
}

fn print_run(summary: &RunSummary) {
    println!("scenario `{}` seed {} ({} nodes)", summary.scenario.name, summary.seed, summary.scenario.samples);
    println!(
        "{:<16} {:>12} {:>14} {:>10} {:>9} {:>9}",
        "algorithm", "edge cost", "surface len", "path pts", "expanded", "time (s)"
    );
    for rec in &summary.records {
        match rec.edge_cost_total {
            Some(cost) => println!(
                "{:<16} {:>12.6} {:>14.6} {:>10} {:>9} {:>9.3}",
                rec.algorithm,
                cost,
                rec.surface_length.unwrap_or(f64::NAN),
                rec.path_node_count.unwrap_or(0),
                rec.expanded.unwrap_or(0),
                rec.wall_time.as_secs_f64(),
            ),
            None => println!(
                "{:<16} failed: {}",
                rec.algorithm,
                rec.error.as_deref().unwrap_or("unknown")
            ),
        }
    }
}

fn print_sweep(sweep: &SweepSummary) {
    println!(
        "scenario `{}`, {} seeds, {} nodes",
        sweep.scenario.name,
        sweep.seeds.len(),
        sweep.scenario.samples
    );
    println!(
        "{:<16} {:>6} {:>12} {:>12} {:>12} {:>12} {:>15}",
        "algorithm", "runs", "mean cost", "min", "max", "std dev", "mean surf len"
    );
    for stats in &sweep.per_algorithm {
        match stats.edge_cost {
            Some(cost) => println!(
                "{:<16} {:>6} {:>12.6} {:>12.6} {:>12.6} {:>12.6} {:>15.6}",
                stats.algorithm,
                stats.runs,
                cost.mean,
                cost.min,
                cost.max,
                cost.std_dev,
                stats.surface_length.map(|s| s.mean).unwrap_or(f64::NAN),
            ),
            None => println!("{:<16} {:>6} all runs failed", stats.algorithm, stats.runs),
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Presets => {
            for name in preset_names() {
                let sc = preset(name).expect("preset listed but missing");
                let field = match &sc.field {
                    rm_dijkstra::HeightField::PeakSum(p) => format!("{} peak(s)", p.len()),
                    rm_dijkstra::HeightField::Flat(c) => format!("flat at {c}"),
                    rm_dijkstra::HeightField::Plane(a, b) => format!("plane [{a}, {b}]"),
                };
                println!("{name:<14} {field:<14} {} nodes", sc.samples);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Run { common } => {
            let sc = resolve_scenario(&common)?;
            let summary = run_scenario(&sc, common.out.as_deref())?;
            print_run(&summary);
            if summary.all_failed() {
                Ok(ExitCode::from(2))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Sweep { common, seeds } => {
            let sc = resolve_scenario(&common)?;
            let seeds = parse_seeds(&seeds)?;
            let sweep = run_seed_sweep(&sc, &seeds, common.out.as_deref())?;
            print_sweep(&sweep);
            let all_failed = sweep
                .per_algorithm
                .iter()
                .all(|s| s.failures == s.runs);
            if all_failed {
                Ok(ExitCode::from(2))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
