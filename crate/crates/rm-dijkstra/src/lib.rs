//! Optimal path planning on height surfaces.
//!
//! The surface `x3 = f(x1, x2)` carries the Euclidean metric of the ambient
//! space; pulling it back through the projection onto the `(x1, x2)` plane
//! yields a Riemannian metric under which plane-curve lengths equal the
//! lengths of their lifts onto the surface. Planning then happens entirely
//! in the plane: sample a roadmap, weigh each straight edge by its metric
//! length (Gauss-Legendre quadrature of the length integrand), and run
//! Dijkstra. The winning polyline, lifted back onto the surface, is a
//! piecewise-smooth surface path approximating the geodesic.
//!
//! Classical baselines (Dijkstra and A* over 3D chord distances) and a
//! scenario-driven experiment harness with built-in terrains are included.
//!
//! ```
//! use rm_dijkstra::{
//!     build_graph, dijkstra, sample_points, CostModel, GaussianPeak, HeightField, Point2,
//!     QuadratureRule, Workspace,
//! };
//!
//! let field = HeightField::PeakSum(vec![GaussianPeak::new(
//!     6.0,
//!     Point2::new(5.0, 6.0),
//!     (5.0f64 / 2.0).sqrt(),
//! )]);
//! let ws = Workspace::new(-1.0, 11.0, -1.0, 11.0);
//! let rule = QuadratureRule::gauss_legendre(16)?;
//! let nodes = sample_points(60, &ws, 7, Point2::new(0.0, 0.0), Point2::new(10.0, 10.0))?;
//! let roadmap = build_graph(&nodes, &field, CostModel::RiemannianLength, &rule);
//! let plan = dijkstra(&roadmap)?;
//! assert!(plan.total_cost >= 200.0f64.sqrt()); // never shorter than the planar diagonal
//! # Ok::<(), rm_dijkstra::Error>(())
//! ```

pub mod edge_cost;
mod error;
pub mod experiment;
pub mod metric;
pub mod path_lift;
pub mod planner;
pub mod quadrature;
pub mod roadmap;
pub mod surface;

pub use edge_cost::{
    edge_weight, euclid3d_distance, lifted_polyline_length, rm_line_distance, CostModel, Segment,
    MAX_PANEL_LEN,
};
pub use error::Error;
pub use experiment::{
    load_scenario, preset, preset_names, run_dir, run_scenario, run_seed_sweep, AlgorithmRecord,
    AlgorithmSpec, AlgorithmStats, RunSummary, Scenario, Stats, SweepSummary,
    DEFAULT_GAUSS_POINTS, DEFAULT_LIFT_DENSITY, PRESET_BASELINE_KNN,
};
pub use metric::{isometry_residual, metric_at, MetricInverse, MetricTensor};
pub use path_lift::{lift_path, SurfacePath};
pub use planner::{astar, dijkstra, path_surface_length, PlanResult, SearchKind};
pub use quadrature::QuadratureRule;
pub use roadmap::{build_graph, prune_knn, sample_points, NodeSet, Roadmap, Workspace};
pub use surface::{GaussianPeak, HeightField, Point2, Point3, Vec2, Vec3};

// The guide chapters under book/ double as doc-tests so their code snippets
// stay compilable against the current API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/surfaces.md")]
    pub mod surfaces {}
    #[doc = include_str!("../../../book/src/metric.md")]
    pub mod metric {}
    #[doc = include_str!("../../../book/src/length.md")]
    pub mod length {}
    #[doc = include_str!("../../../book/src/roadmaps.md")]
    pub mod roadmaps {}
    #[doc = include_str!("../../../book/src/planning.md")]
    pub mod planning {}
    #[doc = include_str!("../../../book/src/lifting.md")]
    pub mod lifting {}
    #[doc = include_str!("../../../book/src/experiments.md")]
    pub mod experiments {}
}
