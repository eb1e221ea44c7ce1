//! Scenario-driven experiment harness.
//!
//! A [`Scenario`] bundles a terrain, a workspace, endpoints and sampling
//! parameters. Running it samples one node set, builds one roadmap per
//! requested cost model on that identical node set, runs each algorithm,
//! lifts the resulting paths and (optionally) writes plot-ready artifacts:
//! per-algorithm planar and 3D path CSVs, a shared node list and a JSON
//! summary. Wall-clock times go to a separate `timings.json` so summary
//! files stay byte-identical across reruns.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::edge_cost::CostModel;
use crate::error::Error;
use crate::path_lift::lift_path;
use crate::planner::{astar, dijkstra, path_surface_length, PlanResult};
use crate::quadrature::QuadratureRule;
use crate::roadmap::{build_graph, prune_knn, sample_points, Roadmap, Workspace};
use crate::surface::{GaussianPeak, HeightField, Point2};

/// Default Gauss-Legendre order for edge costs.
pub const DEFAULT_GAUSS_POINTS: usize = 16;
/// Default lift sampling density for 3D path output files.
pub const DEFAULT_LIFT_DENSITY: usize = 200;
/// Baseline k-nearest-neighbour degree used by the built-in terrain presets.
///
/// With chord weights on a complete graph the direct start-goal edge always
/// wins (triangle inequality in 3D), which makes the classical planners
/// trivial and useless as baselines. A k-NN topology forces them to commit
/// to multi-hop routes the way grid or radius discretizations do; k = 12
/// reproduces the reference baseline costs on the built-in terrains.
pub const PRESET_BASELINE_KNN: usize = 12;

fn default_gauss_points() -> usize {
    DEFAULT_GAUSS_POINTS
}

fn default_lift_density() -> usize {
    DEFAULT_LIFT_DENSITY
}

fn all_algorithms() -> Vec<AlgorithmSpec> {
    vec![AlgorithmSpec::RmDijkstra, AlgorithmSpec::DijkstraEuclid, AlgorithmSpec::AstarEuclid]
}

/// An algorithm selectable in a scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlgorithmSpec {
    /// Dijkstra over Riemannian segment lengths.
    #[serde(rename = "rm-dijkstra")]
    RmDijkstra,
    /// Dijkstra over 3D chord distances.
    #[serde(rename = "dijkstra-euclid")]
    DijkstraEuclid,
    /// A* over 3D chord distances.
    #[serde(rename = "astar-euclid")]
    AstarEuclid,
}

impl AlgorithmSpec {
    pub fn label(&self) -> &'static str {
        match self {
            AlgorithmSpec::RmDijkstra => "rm-dijkstra",
            AlgorithmSpec::DijkstraEuclid => "dijkstra-euclid",
            AlgorithmSpec::AstarEuclid => "astar-euclid",
        }
    }

    pub fn cost_model(&self) -> CostModel {
        match self {
            AlgorithmSpec::RmDijkstra => CostModel::RiemannianLength,
            AlgorithmSpec::DijkstraEuclid | AlgorithmSpec::AstarEuclid => {
                CostModel::EuclideanChord3D
            }
        }
    }
}

impl std::str::FromStr for AlgorithmSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "rm-dijkstra" => Ok(AlgorithmSpec::RmDijkstra),
            "dijkstra-euclid" => Ok(AlgorithmSpec::DijkstraEuclid),
            "astar-euclid" => Ok(AlgorithmSpec::AstarEuclid),
            other => Err(Error::Config(format!(
                "unknown algorithm `{other}`; expected rm-dijkstra, dijkstra-euclid or astar-euclid"
            ))),
        }
    }
}

/// A complete experiment description; serializable as JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub field: HeightField,
    pub workspace: Workspace,
    pub start: Point2,
    pub goal: Point2,
    /// Total node count, including start and goal.
    pub samples: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_gauss_points")]
    pub gauss_points: usize,
    /// Optional k-NN sparsification applied to every roadmap.
    #[serde(default)]
    pub knn: Option<usize>,
    /// Optional k-NN sparsification applied to the chord-cost (baseline)
    /// roadmaps only; overrides `knn` for those. See [`PRESET_BASELINE_KNN`].
    #[serde(default)]
    pub baseline_knn: Option<usize>,
    #[serde(default = "default_lift_density")]
    pub lift_density: usize,
    #[serde(default = "all_algorithms")]
    pub algorithms: Vec<AlgorithmSpec>,
}

impl Scenario {
    /// Checks the cross-field invariants a bare parse cannot.
    pub fn validate(&self) -> Result<(), Error> {
        self.workspace.validate()?;
        if self.samples < 2 {
            return Err(Error::invalid("samples", "need at least 2 nodes"));
        }
        if self.start == self.goal {
            return Err(Error::invalid("goal", "start and goal must differ"));
        }
        if !self.workspace.contains(self.start) {
            return Err(Error::invalid("start", "must lie inside the workspace"));
        }
        if !self.workspace.contains(self.goal) {
            return Err(Error::invalid("goal", "must lie inside the workspace"));
        }
        if self.gauss_points == 0 {
            return Err(Error::invalid("gauss_points", "must be at least 1"));
        }
        if self.knn == Some(0) {
            return Err(Error::invalid("knn", "must be at least 1 when set"));
        }
        if self.baseline_knn == Some(0) {
            return Err(Error::invalid("baseline_knn", "must be at least 1 when set"));
        }
        if self.lift_density == 0 {
            return Err(Error::invalid("lift_density", "must be at least 1"));
        }
        if self.algorithms.is_empty() {
            return Err(Error::invalid("algorithms", "select at least one algorithm"));
        }
        if let HeightField::PeakSum(peaks) = &self.field {
            for (i, pk) in peaks.iter().enumerate() {
                if !(pk.sigma > 0.0) {
                    return Err(Error::invalid(
                        "field",
                        format!("peak {i}: sigma must be strictly positive"),
                    ));
                }
                if !pk.amplitude.is_finite() {
                    return Err(Error::invalid("field", format!("peak {i}: amplitude not finite")));
                }
            }
        }
        Ok(())
    }
}

fn paper_workspace() -> Workspace {
    Workspace::new(-1.0, 11.0, -1.0, 11.0)
}

fn preset_base(name: &str, field: HeightField, samples: usize) -> Scenario {
    Scenario {
        name: name.to_string(),
        field,
        workspace: paper_workspace(),
        start: Point2::new(0.0, 0.0),
        goal: Point2::new(10.0, 10.0),
        samples,
        seed: 0,
        gauss_points: DEFAULT_GAUSS_POINTS,
        knn: None,
        baseline_knn: Some(PRESET_BASELINE_KNN),
        lift_density: DEFAULT_LIFT_DENSITY,
        algorithms: all_algorithms(),
    }
}

/// Names of the built-in scenarios.
pub fn preset_names() -> &'static [&'static str] {
    &["one-peak", "three-peaks", "four-peaks", "flat"]
}

/// A built-in scenario by name, if it exists.
pub fn preset(name: &str) -> Option<Scenario> {
    let sigma1 = (5.0f64 / 2.0).sqrt(); // exponent coefficient 1/5
    match name {
        "one-peak" => Some(preset_base(
            name,
            HeightField::PeakSum(vec![GaussianPeak::new(6.0, Point2::new(5.0, 6.0), sigma1)]),
            500,
        )),
        "three-peaks" => Some(preset_base(
            name,
            HeightField::PeakSum(vec![
                GaussianPeak::new(8.0, Point2::new(3.0, 2.0), 1.0),
                GaussianPeak::new(9.0, Point2::new(7.0, 3.0), 1.0),
                GaussianPeak::new(8.0, Point2::new(6.0, 8.0), 1.0),
            ]),
            700,
        )),
        "four-peaks" => Some(preset_base(
            name,
            HeightField::PeakSum(vec![
                GaussianPeak::new(5.0, Point2::new(3.0, 2.0), 1.0),
                GaussianPeak::new(5.0, Point2::new(7.0, 3.0), 1.0),
                GaussianPeak::new(5.0, Point2::new(3.0, 7.0), 1.0),
                GaussianPeak::new(5.0, Point2::new(7.0, 7.0), 1.0),
            ]),
            700,
        )),
        "flat" => {
            let mut sc = preset_base(name, HeightField::Flat(0.0), 500);
            sc.baseline_knn = None;
            Some(sc)
        }
        _ => None,
    }
}

/// Loads a scenario from a preset name or from JSON config text.
pub fn load_scenario(source: &str) -> Result<Scenario, Error> {
    let trimmed = source.trim();
    if let Some(sc) = preset(trimmed) {
        return Ok(sc);
    }
    if trimmed.starts_with('{') {
        let sc: Scenario =
            serde_json::from_str(trimmed).map_err(|e| Error::Config(e.to_string()))?;
        sc.validate()?;
        return Ok(sc);
    }
    Err(Error::UnknownPreset { name: trimmed.to_string(), available: preset_names().join(", ") })
}

/// Outcome of one algorithm inside one run. All fields that make it into
/// `summary.json` are deterministic for a fixed scenario and seed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgorithmRecord {
    pub algorithm: String,
    /// Sum of traversed edge weights under the algorithm's own cost model.
    pub edge_cost_total: Option<f64>,
    /// The same path re-measured as a surface length.
    pub surface_length: Option<f64>,
    /// 3D chord length of the lifted path at the scenario's lift density.
    pub lifted_chord_length: Option<f64>,
    pub path_node_count: Option<usize>,
    pub node_sequence: Option<Vec<usize>>,
    pub expanded: Option<usize>,
    /// Failure description when planning did not produce a path.
    pub error: Option<String>,
    /// Search wall time; excluded from the serialized summary.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl AlgorithmRecord {
    pub fn succeeded(&self) -> bool {
        self.error.is_none()
    }
}

/// Everything one scenario run produced.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunSummary {
    pub scenario: Scenario,
    pub seed: u64,
    pub records: Vec<AlgorithmRecord>,
}

impl RunSummary {
    pub fn record(&self, algorithm: AlgorithmSpec) -> Option<&AlgorithmRecord> {
        self.records.iter().find(|r| r.algorithm == algorithm.label())
    }

    pub fn all_failed(&self) -> bool {
        self.records.iter().all(|r| !r.succeeded())
    }
}

fn write_planar_csv(path: &Path, polyline: &[Point2]) -> Result<(), Error> {
    let mut out = String::from("x1,x2\n");
    for p in polyline {
        out.push_str(&format!("{},{}\n", p.x1, p.x2));
    }
    fs::write(path, out)?;
    Ok(())
}

fn write_path3d_csv(path: &Path, surface: &crate::path_lift::SurfacePath) -> Result<(), Error> {
    let total = surface.total_chord_length;
    let mut out = String::from("t,x1,x2,x3\n");
    let mut acc = 0.0;
    let mut prev = None;
    for s in &surface.samples {
        if let Some(p) = prev {
            acc += s.distance(p);
        }
        let t = if total > 0.0 { acc / total } else { 0.0 };
        out.push_str(&format!("{},{},{},{}\n", t, s.x1, s.x2, s.x3));
        prev = Some(*s);
    }
    fs::write(path, out)?;
    Ok(())
}

fn write_nodes_csv(path: &Path, points: &[Point2]) -> Result<(), Error> {
    let mut out = String::from("x1,x2\n");
    for p in points {
        out.push_str(&format!("{},{}\n", p.x1, p.x2));
    }
    fs::write(path, out)?;
    Ok(())
}

/// Directory a run writes into: `<out>/<scenario>/seed_<seed>/`.
pub fn run_dir(out: &Path, scenario: &Scenario, seed: u64) -> PathBuf {
    out.join(&scenario.name).join(format!("seed_{seed}"))
}

/// Runs every requested algorithm on one shared node set. When `out` is
/// given, writes the node list, per-algorithm path files, `summary.json`
/// and `timings.json` under [`run_dir`].
pub fn run_scenario(sc: &Scenario, out: Option<&Path>) -> Result<RunSummary, Error> {
    sc.validate()?;
    let rule = QuadratureRule::cached(sc.gauss_points)?;
    let nodes = sample_points(sc.samples, &sc.workspace, sc.seed, sc.start, sc.goal)?;

    let build_model = |model: CostModel| -> Roadmap {
        let r = build_graph(&nodes, &sc.field, model, &rule);
        let k = match model {
            CostModel::RiemannianLength => sc.knn,
            CostModel::EuclideanChord3D => sc.baseline_knn.or(sc.knn),
        };
        match k {
            Some(k) => prune_knn(&r, k),
            None => r,
        }
    };

    let rm_roadmap = sc
        .algorithms
        .iter()
        .any(|a| a.cost_model() == CostModel::RiemannianLength)
        .then(|| build_model(CostModel::RiemannianLength));
    let eu_roadmap = sc
        .algorithms
        .iter()
        .any(|a| a.cost_model() == CostModel::EuclideanChord3D)
        .then(|| build_model(CostModel::EuclideanChord3D));

    let dir = match out {
        Some(root) => {
            let dir = run_dir(root, sc, sc.seed);
            fs::create_dir_all(&dir)?;
            write_nodes_csv(&dir.join("nodes.csv"), &nodes.points)?;
            Some(dir)
        }
        None => None,
    };

    let mut records = Vec::with_capacity(sc.algorithms.len());
    for algo in &sc.algorithms {
        let roadmap = match algo.cost_model() {
            CostModel::RiemannianLength => rm_roadmap.as_ref().unwrap(),
            CostModel::EuclideanChord3D => eu_roadmap.as_ref().unwrap(),
        };
        let planned: Result<PlanResult, Error> = match algo {
            AlgorithmSpec::RmDijkstra | AlgorithmSpec::DijkstraEuclid => dijkstra(roadmap),
            AlgorithmSpec::AstarEuclid => astar(roadmap, &sc.field),
        };
        let record = match planned {
            Ok(plan) => {
                let surface_length =
                    path_surface_length(&sc.field, &plan.planar_polyline, &rule);
                let lifted = lift_path(&sc.field, &plan.planar_polyline, sc.lift_density);
                if let Some(dir) = &dir {
                    write_planar_csv(
                        &dir.join(format!("{}_planar.csv", algo.label())),
                        &plan.planar_polyline,
                    )?;
                    write_path3d_csv(&dir.join(format!("{}_path3d.csv", algo.label())), &lifted)?;
                }
                AlgorithmRecord {
                    algorithm: algo.label().to_string(),
                    edge_cost_total: Some(plan.total_cost),
                    surface_length: Some(surface_length),
                    lifted_chord_length: Some(lifted.total_chord_length),
                    path_node_count: Some(plan.node_sequence.len()),
                    node_sequence: Some(plan.node_sequence.clone()),
                    expanded: Some(plan.expanded_count),
                    error: None,
                    wall_time: plan.elapsed,
                }
            }
            Err(e) => AlgorithmRecord {
                algorithm: algo.label().to_string(),
                edge_cost_total: None,
                surface_length: None,
                lifted_chord_length: None,
                path_node_count: None,
                node_sequence: None,
                expanded: None,
                error: Some(e.to_string()),
                wall_time: Duration::ZERO,
            },
        };
        records.push(record);
    }

    let summary = RunSummary { scenario: sc.clone(), seed: sc.seed, records };
    if let Some(dir) = &dir {
        let json = serde_json::to_string_pretty(&summary).map_err(|e| {
            Error::Config(format!("failed to serialize summary: {e}"))
        })?;
        fs::write(dir.join("summary.json"), json + "\n")?;
        let mut timings = String::from("{\n");
        for (i, r) in summary.records.iter().enumerate() {
            let sep = if i + 1 == summary.records.len() { "" } else { "," };
            timings.push_str(&format!(
                "  \"{}\": {}{}\n",
                r.algorithm,
                r.wall_time.as_secs_f64(),
                sep
            ));
        }
        timings.push_str("}\n");
        fs::write(dir.join("timings.json"), timings)?;
    }
    Ok(summary)
}

/// Mean / min / max / standard deviation of a sample.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Stats {
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    pub std_dev: f64,
}

impl Stats {
    fn from_values(values: &[f64]) -> Option<Self> {
        if values.is_empty() {
            return None;
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        Some(Stats {
            mean,
            min: values.iter().copied().fold(f64::INFINITY, f64::min),
            max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            std_dev: var.sqrt(),
        })
    }
}

/// Aggregate over one algorithm across a seed sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgorithmStats {
    pub algorithm: String,
    pub runs: usize,
    pub failures: usize,
    pub edge_cost: Option<Stats>,
    pub surface_length: Option<Stats>,
}

/// Result of [`run_seed_sweep`]: per-algorithm statistics plus every
/// individual run summary.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepSummary {
    pub scenario: Scenario,
    pub seeds: Vec<u64>,
    pub per_algorithm: Vec<AlgorithmStats>,
    pub runs: Vec<RunSummary>,
}

/// Runs the scenario once per seed and aggregates per-algorithm statistics.
/// When `out` is given, per-seed artifacts land in their own
/// subdirectories and the aggregate in `<out>/<scenario>/sweep.json`.
pub fn run_seed_sweep(
    sc: &Scenario,
    seeds: &[u64],
    out: Option<&Path>,
) -> Result<SweepSummary, Error> {
    if seeds.is_empty() {
        return Err(Error::Config("seed sweep needs at least one seed".into()));
    }
    let mut runs = Vec::with_capacity(seeds.len());
    for &seed in seeds {
        let mut per_seed = sc.clone();
        per_seed.seed = seed;
        runs.push(run_scenario(&per_seed, out)?);
    }
    let mut per_algorithm = Vec::with_capacity(sc.algorithms.len());
    for algo in &sc.algorithms {
        let records: Vec<_> =
            runs.iter().filter_map(|r| r.record(*algo)).collect();
        let costs: Vec<f64> = records.iter().filter_map(|r| r.edge_cost_total).collect();
        let lengths: Vec<f64> = records.iter().filter_map(|r| r.surface_length).collect();
        per_algorithm.push(AlgorithmStats {
            algorithm: algo.label().to_string(),
            runs: records.len(),
            failures: records.iter().filter(|r| !r.succeeded()).count(),
            edge_cost: Stats::from_values(&costs),
            surface_length: Stats::from_values(&lengths),
        });
    }
    let sweep =
        SweepSummary { scenario: sc.clone(), seeds: seeds.to_vec(), per_algorithm, runs };
    if let Some(root) = out {
        let dir = root.join(&sc.name);
        fs::create_dir_all(&dir)?;
        let json = serde_json::to_string_pretty(&sweep)
            .map_err(|e| Error::Config(format!("failed to serialize sweep: {e}")))?;
        let mut f = fs::File::create(dir.join("sweep.json"))?;
        writeln!(f, "{json}")?;
    }
    Ok(sweep)
}
