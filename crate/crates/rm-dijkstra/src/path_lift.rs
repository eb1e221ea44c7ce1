//! Lifting planar polylines onto the surface.
//!
//! The planner's output is a polyline on the projection plane; its preimage
//! on the surface is the actual 3D path. Each planar segment is sampled at
//! uniform parameter values and lifted pointwise, so every sample lies
//! exactly on the surface and the path is piecewise smooth by construction.

use crate::surface::{HeightField, Point2, Point3};

/// A densely sampled 3D path on the surface.
#[derive(Debug, Clone)]
pub struct SurfacePath {
    /// Ordered surface samples.
    pub samples: Vec<Point3>,
    /// Indices into `samples` marking the lifted polyline vertices.
    pub segment_boundaries: Vec<usize>,
    /// Sum of consecutive 3D chord distances.
    pub total_chord_length: f64,
}

/// Lifts a planar polyline onto the surface, sampling each segment at
/// `samples_per_segment` uniform parameter steps.
pub fn lift_path(
    field: &HeightField,
    polyline: &[Point2],
    samples_per_segment: usize,
) -> SurfacePath {
    assert!(polyline.len() >= 2, "a path needs at least two points");
    assert!(samples_per_segment >= 1, "need at least one sample per segment");
    let mut samples = Vec::with_capacity((polyline.len() - 1) * samples_per_segment + 1);
    let mut segment_boundaries = Vec::with_capacity(polyline.len());
    samples.push(field.lift_point(polyline[0]));
    segment_boundaries.push(0);
    for w in polyline.windows(2) {
        let (a, b) = (w[0], w[1]);
        for s in 1..=samples_per_segment {
            let p = if s == samples_per_segment {
                b // land on the vertex exactly
            } else {
                let t = s as f64 / samples_per_segment as f64;
                Point2::new(a.x1 + t * (b.x1 - a.x1), a.x2 + t * (b.x2 - a.x2))
            };
            samples.push(field.lift_point(p));
        }
        segment_boundaries.push(samples.len() - 1);
    }
    let total_chord_length =
        samples.windows(2).map(|w| w[0].distance(w[1])).fold(0.0, |acc, d| acc + d);
    SurfacePath { samples, segment_boundaries, total_chord_length }
}
