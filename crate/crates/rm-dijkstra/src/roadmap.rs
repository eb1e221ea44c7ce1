//! Roadmap sampling and graph construction.
//!
//! A roadmap is a set of planar nodes (always containing start and goal) and
//! a dense symmetric edge-weight matrix under one cost model. Construction
//! builds the complete graph; [`prune_knn`] optionally sparsifies it to a
//! symmetrized k-nearest-neighbour topology by planar distance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::edge_cost::{edge_weight, CostModel, Segment};
use crate::error::Error;
use crate::quadrature::QuadratureRule;
use crate::surface::{HeightField, Point2};

/// The rectangular sampling region.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Workspace {
    pub min1: f64,
    pub max1: f64,
    pub min2: f64,
    pub max2: f64,
}

impl Workspace {
    pub fn new(min1: f64, max1: f64, min2: f64, max2: f64) -> Self {
        Workspace { min1, max1, min2, max2 }
    }

    pub fn contains(&self, p: Point2) -> bool {
        p.x1 >= self.min1 && p.x1 <= self.max1 && p.x2 >= self.min2 && p.x2 <= self.max2
    }

    pub(crate) fn validate(&self) -> Result<(), Error> {
        if !(self.min1 < self.max1 && self.min2 < self.max2) {
            return Err(Error::invalid("workspace", "bounds must satisfy min < max per axis"));
        }
        if ![self.min1, self.max1, self.min2, self.max2].iter().all(|v| v.is_finite()) {
            return Err(Error::invalid("workspace", "bounds must be finite"));
        }
        Ok(())
    }
}

impl From<[f64; 4]> for Workspace {
    fn from(a: [f64; 4]) -> Self {
        Workspace::new(a[0], a[1], a[2], a[3])
    }
}

impl From<Workspace> for [f64; 4] {
    fn from(w: Workspace) -> Self {
        [w.min1, w.max1, w.min2, w.max2]
    }
}

/// Sampled roadmap nodes. `points[start_idx]` is the scenario start and
/// `points[goal_idx]` the goal; the remaining points are uniform over the
/// workspace rectangle from a seeded generator.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet {
    pub points: Vec<Point2>,
    pub start_idx: usize,
    pub goal_idx: usize,
    pub seed: u64,
}

/// Samples `n` total nodes (including start and goal). Identical arguments
/// reproduce an identical node list.
pub fn sample_points(
    n: usize,
    ws: &Workspace,
    seed: u64,
    start: Point2,
    goal: Point2,
) -> Result<NodeSet, Error> {
    if n < 2 {
        return Err(Error::TooFewNodes(n));
    }
    ws.validate()?;
    if !ws.contains(start) {
        return Err(Error::OutsideWorkspace { what: "start", x1: start.x1, x2: start.x2 });
    }
    if !ws.contains(goal) {
        return Err(Error::OutsideWorkspace { what: "goal", x1: goal.x1, x2: goal.x2 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(n);
    points.push(start);
    for _ in 0..n - 2 {
        let x1 = rng.gen_range(ws.min1..ws.max1);
        let x2 = rng.gen_range(ws.min2..ws.max2);
        points.push(Point2::new(x1, x2));
    }
    points.push(goal);
    Ok(NodeSet { points, start_idx: 0, goal_idx: n - 1, seed })
}

/// A roadmap: nodes plus a dense symmetric weight matrix under one cost
/// model. Absent edges (possible only after pruning) are `f64::INFINITY`;
/// the diagonal is zero.
#[derive(Debug, Clone)]
pub struct Roadmap {
    nodes: NodeSet,
    weights: Vec<f64>,
    cost_model: CostModel,
    start_goal_connected: bool,
}

impl Roadmap {
    /// Builds a roadmap from an explicit row-major weight matrix. The matrix
    /// must be n x n, symmetric, non-negative with a zero diagonal; absent
    /// edges are `f64::INFINITY`.
    pub fn from_weights(
        nodes: NodeSet,
        weights: Vec<f64>,
        cost_model: CostModel,
    ) -> Result<Self, Error> {
        let n = nodes.points.len();
        if weights.len() != n * n {
            return Err(Error::invalid("weights", format!("expected {} entries", n * n)));
        }
        for i in 0..n {
            if weights[i * n + i] != 0.0 {
                return Err(Error::invalid("weights", "diagonal must be zero"));
            }
            for j in 0..n {
                let w = weights[i * n + j];
                if w < 0.0 || w.is_nan() {
                    return Err(Error::invalid("weights", "weights must be non-negative"));
                }
                if w != weights[j * n + i] {
                    return Err(Error::invalid("weights", "matrix must be symmetric"));
                }
            }
        }
        let mut r = Roadmap { nodes, weights, cost_model, start_goal_connected: true };
        r.start_goal_connected = r.connected();
        Ok(r)
    }

    pub fn len(&self) -> usize {
        self.nodes.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.points.is_empty()
    }

    pub fn points(&self) -> &[Point2] {
        &self.nodes.points
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn start_idx(&self) -> usize {
        self.nodes.start_idx
    }

    pub fn goal_idx(&self) -> usize {
        self.nodes.goal_idx
    }

    pub fn cost_model(&self) -> CostModel {
        self.cost_model
    }

    pub fn seed(&self) -> u64 {
        self.nodes.seed
    }

    /// False when pruning separated start from goal.
    pub fn start_goal_connected(&self) -> bool {
        self.start_goal_connected
    }

    /// Edge weight between two nodes, `None` for pruned pairs.
    pub fn weight(&self, i: usize, j: usize) -> Option<f64> {
        let w = self.weights[i * self.len() + j];
        w.is_finite().then_some(w)
    }

    /// Neighbours of `i` with their edge weights.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let n = self.len();
        self.weights[i * n..(i + 1) * n]
            .iter()
            .enumerate()
            .filter(move |&(j, w)| j != i && w.is_finite())
            .map(|(j, &w)| (j, w))
    }

    /// Number of unordered node pairs that still carry an edge.
    pub fn edge_count(&self) -> usize {
        let n = self.len();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.weights[i * n + j].is_finite()).count()).sum()
    }

    #[cfg(test)]
    pub(crate) fn raw_weights(&self) -> &[f64] {
        &self.weights
    }

    fn connected(&self) -> bool {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut stack = vec![self.nodes.start_idx];
        seen[self.nodes.start_idx] = true;
        while let Some(i) = stack.pop() {
            if i == self.nodes.goal_idx {
                return true;
            }
            for (j, _) in self.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        false
    }
}

/// Builds the complete graph on the node set under the given cost model.
/// Pair costs are independent, so the upper triangle is computed in parallel
/// (row per task); the result does not depend on thread scheduling.
pub fn build_graph(
    nodes: &NodeSet,
    field: &HeightField,
    model: CostModel,
    rule: &QuadratureRule,
) -> Roadmap {
    let n = nodes.points.len();
    let pts = &nodes.points;
    let mut weights = vec![0.0_f64; n * n];
    weights.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
        for j in i + 1..n {
            let seg = Segment::new(pts[i], pts[j]);
            row[j] = edge_weight(field, &seg, model, rule);
        }
    });
    for i in 0..n {
        for j in 0..i {
            weights[i * n + j] = weights[j * n + i];
        }
    }
    Roadmap { nodes: nodes.clone(), weights, cost_model: model, start_goal_connected: true }
}

/// Keeps, for each node, the edges to its `k` nearest neighbours by planar
/// distance, symmetrized: an edge survives if either endpoint keeps it.
/// Removed edges become absent. The result records whether start and goal
/// are still connected.
pub fn prune_knn(r: &Roadmap, k: usize) -> Roadmap {
    assert!(k >= 1, "k must be at least 1");
    let n = r.len();
    let pts = r.points();
    let mut keep = vec![false; n * n];
    let mut order: Vec<usize> = Vec::with_capacity(n - 1);
    for i in 0..n {
        order.clear();
        order.extend((0..n).filter(|&j| j != i));
        // ties broken by node index for determinism
        order.sort_by(|&a, &b| {
            pts[i]
                .distance(pts[a])
                .total_cmp(&pts[i].distance(pts[b]))
                .then(a.cmp(&b))
        });
        for &j in order.iter().take(k) {
            keep[i * n + j] = true;
            keep[j * n + i] = true;
        }
    }
    let mut weights = r.weights.clone();
    for i in 0..n {
        for j in 0..n {
            if i != j && !keep[i * n + j] {
                weights[i * n + j] = f64::INFINITY;
            }
        }
    }
    let mut pruned = Roadmap {
        nodes: r.nodes.clone(),
        weights,
        cost_model: r.cost_model,
        start_goal_connected: true,
    };
    pruned.start_goal_connected = pruned.connected();
    pruned
}
