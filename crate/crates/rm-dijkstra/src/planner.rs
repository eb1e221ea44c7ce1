//! Shortest-path search over a roadmap: Dijkstra and A* with an admissible
//! 3D-chord heuristic, plus path reconstruction and re-measurement.
//!
//! The frontier is a binary heap with lazy deletion; equal tentative
//! distances are broken by lower node index so runs are deterministic. The
//! search exits as soon as the goal is settled, which returns the same path
//! as a full sweep for non-negative weights.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::time::{Duration, Instant};

use crate::edge_cost::{rm_line_distance, CostModel, Segment};
use crate::error::Error;
use crate::quadrature::QuadratureRule;
use crate::roadmap::Roadmap;
use crate::surface::{HeightField, Point2};

/// Which search produced a [`PlanResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchKind {
    Dijkstra,
    AStar,
}

/// A shortest path through a roadmap.
#[derive(Debug, Clone)]
pub struct PlanResult {
    /// Node indices from start to goal; consecutive nodes share an edge.
    pub node_sequence: Vec<usize>,
    /// The node sequence as planar points.
    pub planar_polyline: Vec<Point2>,
    /// Sum of the traversed edge weights.
    pub total_cost: f64,
    /// Weight of each traversed edge, in path order.
    pub per_edge_costs: Vec<f64>,
    /// Search that produced the path.
    pub search: SearchKind,
    /// Cost model of the roadmap the search ran on.
    pub cost_model: CostModel,
    /// Number of nodes settled before the goal was reached.
    pub expanded_count: usize,
    /// Wall time of the search.
    pub elapsed: Duration,
}

impl PlanResult {
    /// Conventional label: `rm-dijkstra`, `dijkstra-euclid`, `astar-euclid`
    /// (or `astar-rm` for an A* run on a Riemannian roadmap).
    pub fn algorithm_label(&self) -> &'static str {
        match (self.search, self.cost_model) {
            (SearchKind::Dijkstra, CostModel::RiemannianLength) => "rm-dijkstra",
            (SearchKind::Dijkstra, CostModel::EuclideanChord3D) => "dijkstra-euclid",
            (SearchKind::AStar, CostModel::EuclideanChord3D) => "astar-euclid",
            (SearchKind::AStar, CostModel::RiemannianLength) => "astar-rm",
        }
    }
}

/// Max-heap entry ordered so the smallest key pops first, ties broken by
/// lower node index.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Frontier {
    key: f64,
    node: usize,
}

impl Eq for Frontier {}

impl Ord for Frontier {
    fn cmp(&self, other: &Self) -> Ordering {
        other.key.total_cmp(&self.key).then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for Frontier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn reconstruct(prev: &[usize], start: usize, goal: usize) -> Vec<usize> {
    let mut seq = vec![goal];
    while *seq.last().unwrap() != start {
        seq.push(prev[*seq.last().unwrap()]);
    }
    seq.reverse();
    seq
}

fn finish(
    r: &Roadmap,
    node_sequence: Vec<usize>,
    search: SearchKind,
    expanded_count: usize,
    started: Instant,
) -> PlanResult {
    let per_edge_costs: Vec<f64> = node_sequence
        .windows(2)
        .map(|w| r.weight(w[0], w[1]).expect("path edge must exist"))
        .collect();
    let total_cost = per_edge_costs.iter().fold(0.0, |acc, c| acc + c);
    let planar_polyline = node_sequence.iter().map(|&i| r.points()[i]).collect();
    PlanResult {
        node_sequence,
        planar_polyline,
        total_cost,
        per_edge_costs,
        search,
        cost_model: r.cost_model(),
        expanded_count,
        elapsed: started.elapsed(),
    }
}

/// Dijkstra's algorithm from the roadmap's start to its goal.
pub fn dijkstra(r: &Roadmap) -> Result<PlanResult, Error> {
    let started = Instant::now();
    let n = r.len();
    let (start, goal) = (r.start_idx(), r.goal_idx());
    let mut dist = vec![f64::INFINITY; n];
    let mut prev = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[start] = 0.0;
    heap.push(Frontier { key: 0.0, node: start });
    let mut expanded = 0;
    while let Some(Frontier { key, node }) = heap.pop() {
        if visited[node] || key > dist[node] {
            continue; // stale entry, lazily deleted
        }
        visited[node] = true;
        expanded += 1;
        if node == goal {
            break;
        }
        for (nb, w) in r.neighbors(node) {
            if visited[nb] {
                continue;
            }
            let cand = dist[node] + w;
            if cand < dist[nb] {
                dist[nb] = cand;
                prev[nb] = node;
                heap.push(Frontier { key: cand, node: nb });
            }
        }
    }
    if !visited[goal] {
        return Err(Error::GoalUnreachable);
    }
    Ok(finish(r, reconstruct(&prev, start, goal), SearchKind::Dijkstra, expanded, started))
}

/// A* from the roadmap's start to its goal. The heuristic is the 3D chord
/// from each lifted node to the lifted goal, which never exceeds any edge
/// weight sequence under either cost model, so results match Dijkstra.
pub fn astar(r: &Roadmap, field: &HeightField) -> Result<PlanResult, Error> {
    let started = Instant::now();
    let n = r.len();
    let (start, goal) = (r.start_idx(), r.goal_idx());
    let lifted: Vec<_> = r.points().iter().map(|&p| field.lift_point(p)).collect();
    let goal3 = lifted[goal];
    let h = |i: usize| lifted[i].distance(goal3);

    let mut g_score = vec![f64::INFINITY; n];
    let mut prev = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    let mut heap = BinaryHeap::new();
    g_score[start] = 0.0;
    heap.push(Frontier { key: h(start), node: start });
    let mut expanded = 0;
    while let Some(Frontier { node, .. }) = heap.pop() {
        if visited[node] {
            continue;
        }
        visited[node] = true;
        expanded += 1;
        if node == goal {
            break;
        }
        for (nb, w) in r.neighbors(node) {
            if visited[nb] {
                continue;
            }
            let cand = g_score[node] + w;
            if cand < g_score[nb] {
                g_score[nb] = cand;
                prev[nb] = node;
                heap.push(Frontier { key: cand + h(nb), node: nb });
            }
        }
    }
    if !visited[goal] {
        return Err(Error::GoalUnreachable);
    }
    Ok(finish(r, reconstruct(&prev, start, goal), SearchKind::AStar, expanded, started))
}

/// Re-measures any planar polyline under the pullback metric: the sum of
/// segment lengths, regardless of which cost model produced the polyline.
pub fn path_surface_length(field: &HeightField, polyline: &[Point2], rule: &QuadratureRule) -> f64 {
    assert!(polyline.len() >= 2, "a path needs at least two points");
    polyline
        .windows(2)
        .map(|w| rm_line_distance(field, &Segment::new(w[0], w[1]), rule))
        .fold(0.0, |acc, c| acc + c)
}
