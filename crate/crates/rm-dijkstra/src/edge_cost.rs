//! Edge-weight models for roadmap construction.
//!
//! The length of a straight planar segment under the pullback metric is
//!
//! ```text
//! L = integral over [0,1] of sqrt(h11*dx1^2 + 2*h12*dx1*dx2 + h22*dx2^2) dt
//! ```
//!
//! with the tensor evaluated along the segment. Because that equals the
//! Euclidean length of the segment's lift onto the surface, minimizing sums
//! of these weights approximates geodesics. The 3D chord between the lifted
//! endpoints is the classical baseline weight.

use crate::metric::metric_at;
use crate::quadrature::QuadratureRule;
use crate::surface::{HeightField, Point2};

/// A straight planar segment, parameterized as `start + t * (end - start)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub start: Point2,
    pub end: Point2,
}

impl Segment {
    pub fn new(start: Point2, end: Point2) -> Self {
        Segment { start, end }
    }

    pub fn planar_length(&self) -> f64 {
        self.start.distance(self.end)
    }
}

/// Which weight a roadmap edge carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CostModel {
    /// Segment length under the pullback metric (the surface length of the
    /// lifted segment).
    RiemannianLength,
    /// 3D Euclidean distance between the lifted endpoints.
    EuclideanChord3D,
}

/// Maximum planar panel length for the composite quadrature in
/// [`rm_line_distance`]. A single Gauss rule cannot resolve the integrand of
/// a long segment crossing a narrow peak (the metric varies on the scale of
/// the peak width), so segments are split into panels of at most this length
/// and the rule is applied per panel. Half a workspace unit keeps the error
/// below 1e-9 relative on unit-width peaks at order 16.
pub const MAX_PANEL_LEN: f64 = 0.5;

/// Length of the straight segment under the pullback metric, by composite
/// Gauss-Legendre quadrature: `rule` is applied on panels of at most
/// [`MAX_PANEL_LEN`] planar units. Zero-length segments cost exactly 0; the
/// result is never below the planar length.
pub fn rm_line_distance(field: &HeightField, seg: &Segment, rule: &QuadratureRule) -> f64 {
    let dx1 = seg.end.x1 - seg.start.x1;
    let dx2 = seg.end.x2 - seg.start.x2;
    let planar = seg.planar_length();
    if planar == 0.0 {
        return 0.0;
    }
    let integrand = |t: f64| {
        let h = metric_at(
            field,
            Point2::new(seg.start.x1 + t * dx1, seg.start.x2 + t * dx2),
        );
        (h.h11 * dx1 * dx1 + 2.0 * h.h12 * dx1 * dx2 + h.h22 * dx2 * dx2).sqrt()
    };
    let panels = (planar / MAX_PANEL_LEN).ceil() as usize;
    (0..panels)
        .map(|j| {
            rule.integrate(j as f64 / panels as f64, (j + 1) as f64 / panels as f64, integrand)
        })
        .sum()
}

/// 3D Euclidean distance between the lifted endpoints of the segment.
pub fn euclid3d_distance(field: &HeightField, seg: &Segment) -> f64 {
    field.lift_point(seg.start).distance(field.lift_point(seg.end))
}

/// Splits the segment into `m` equal planar pieces, lifts the m+1 points and
/// sums the 3D chord lengths. Converges to the lifted-curve length from
/// below under refinement; serves as the independent length oracle.
pub fn lifted_polyline_length(field: &HeightField, seg: &Segment, m: usize) -> f64 {
    assert!(m >= 1, "need at least one piece");
    let mut total = 0.0;
    let mut prev = field.lift_point(seg.start);
    for i in 1..=m {
        let t = i as f64 / m as f64;
        let p = if i == m {
            seg.end
        } else {
            Point2::new(
                seg.start.x1 + t * (seg.end.x1 - seg.start.x1),
                seg.start.x2 + t * (seg.end.x2 - seg.start.x2),
            )
        };
        let cur = field.lift_point(p);
        total += prev.distance(cur);
        prev = cur;
    }
    total
}

/// Edge weight under the given model.
pub fn edge_weight(
    field: &HeightField,
    seg: &Segment,
    model: CostModel,
    rule: &QuadratureRule,
) -> f64 {
    match model {
        CostModel::RiemannianLength => rm_line_distance(field, seg, rule),
        CostModel::EuclideanChord3D => euclid3d_distance(field, seg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::GaussianPeak;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn one_peak() -> HeightField {
        HeightField::PeakSum(vec![GaussianPeak::new(
            6.0,
            Point2::new(5.0, 6.0),
            (5.0f64 / 2.0).sqrt(),
        )])
    }

    fn three_peaks() -> HeightField {
        HeightField::PeakSum(vec![
            GaussianPeak::new(8.0, Point2::new(3.0, 2.0), 1.0),
            GaussianPeak::new(9.0, Point2::new(7.0, 3.0), 1.0),
            GaussianPeak::new(8.0, Point2::new(6.0, 8.0), 1.0),
        ])
    }

    fn gl16() -> QuadratureRule {
        QuadratureRule::gauss_legendre(16).unwrap()
    }

    /// Composite Simpson over the same integrand; the independent oracle.
    fn simpson_rm(field: &HeightField, seg: &Segment, m: usize) -> f64 {
        assert!(m % 2 == 0);
        let dx1 = seg.end.x1 - seg.start.x1;
        let dx2 = seg.end.x2 - seg.start.x2;
        let f = |t: f64| {
            let h = metric_at(
                field,
                Point2::new(seg.start.x1 + t * dx1, seg.start.x2 + t * dx2),
            );
            (h.h11 * dx1 * dx1 + 2.0 * h.h12 * dx1 * dx2 + h.h22 * dx2 * dx2).sqrt()
        };
        let mut sum = f(0.0) + f(1.0);
        for i in 1..m {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            sum += w * f(i as f64 / m as f64);
        }
        sum / (3.0 * m as f64)
    }

    #[test]
    fn flat_field_gives_planar_length() {
        let seg = Segment::new(Point2::new(0.0, 0.0), Point2::new(3.0, 4.0));
        let d = rm_line_distance(&HeightField::Flat(2.0), &seg, &gl16());
        assert!((d - 5.0).abs() < 1e-12);
    }

    #[test]
    fn plane_field_constant_metric() {
        let seg = Segment::new(Point2::new(0.0, 0.0), Point2::new(1.0, 0.0));
        let d = rm_line_distance(&HeightField::Plane(1.0, 0.0), &seg, &gl16());
        assert!((d - 2.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn zero_length_segment_costs_zero() {
        let p = Point2::new(5.0, 6.0);
        let seg = Segment::new(p, p);
        assert_eq!(rm_line_distance(&one_peak(), &seg, &gl16()), 0.0);
        assert_eq!(euclid3d_distance(&one_peak(), &seg), 0.0);
    }

    #[test]
    fn one_peak_diagonal_matches_simpson_oracle() {
        let field = one_peak();
        let seg = Segment::new(Point2::new(0.0, 0.0), Point2::new(10.0, 10.0));
        let gl = rm_line_distance(&field, &seg, &gl16());
        let oracle = simpson_rm(&field, &seg, 1_000_000);
        let rel = (gl - oracle).abs() / oracle;
        assert!(rel < 1e-6, "relative error {rel}: gl={gl}, oracle={oracle}");
    }

    #[test]
    fn euclid3d_examples() {
        let seg = Segment::new(Point2::new(0.0, 0.0), Point2::new(3.0, 4.0));
        assert_eq!(euclid3d_distance(&HeightField::Flat(0.0), &seg), 5.0);
        let seg = Segment::new(Point2::new(0.0, 0.0), Point2::new(1.0, 0.0));
        assert!(
            (euclid3d_distance(&HeightField::Plane(1.0, 0.0), &seg) - 2.0f64.sqrt()).abs() < 1e-15
        );
    }

    #[test]
    fn lifted_polyline_flat_and_plane() {
        let seg = Segment::new(Point2::new(0.0, 0.0), Point2::new(3.0, 4.0));
        for m in [1usize, 7, 100] {
            assert!((lifted_polyline_length(&HeightField::Flat(0.0), &seg, m) - 5.0).abs() < 1e-12);
        }
        let seg = Segment::new(Point2::new(0.0, 0.0), Point2::new(1.0, 0.0));
        for m in [1usize, 13] {
            let d = lifted_polyline_length(&HeightField::Plane(1.0, 0.0), &seg, m);
            assert!((d - 2.0f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn lifted_polyline_single_piece_is_the_chord() {
        let field = one_peak();
        let seg = Segment::new(Point2::new(1.0, 2.0), Point2::new(8.0, 9.0));
        let chord = euclid3d_distance(&field, &seg);
        assert_eq!(lifted_polyline_length(&field, &seg, 1), chord);
    }

    #[test]
    fn lifted_polyline_converges_to_metric_length() {
        let field = one_peak();
        let seg = Segment::new(Point2::new(0.0, 0.0), Point2::new(10.0, 10.0));
        let rm = rm_line_distance(&field, &seg, &gl16());
        let poly = lifted_polyline_length(&field, &seg, 1_000_000);
        let rel = (rm - poly).abs() / rm;
        assert!(rel < 1e-5, "relative gap {rel}");
    }

    #[test]
    fn lifted_polyline_nondecreasing_under_doubling() {
        let field = three_peaks();
        let seg = Segment::new(Point2::new(-0.5, 0.5), Point2::new(10.5, 9.0));
        let mut prev = lifted_polyline_length(&field, &seg, 1);
        for m in [2usize, 4, 8, 16, 32, 64] {
            let cur = lifted_polyline_length(&field, &seg, m);
            assert!(cur >= prev - 1e-12, "refinement decreased length at m={m}");
            prev = cur;
        }
    }

    #[test]
    fn lower_bound_chain_on_random_segments() {
        let rule = gl16();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for field in [one_peak(), three_peaks()] {
            for _ in 0..200 {
                let seg = Segment::new(
                    Point2::new(rng.gen_range(-1.0..11.0), rng.gen_range(-1.0..11.0)),
                    Point2::new(rng.gen_range(-1.0..11.0), rng.gen_range(-1.0..11.0)),
                );
                let planar = seg.planar_length();
                let chord = euclid3d_distance(&field, &seg);
                let rm = rm_line_distance(&field, &seg, &rule);
                assert!(planar <= chord + 1e-12);
                assert!(chord <= rm + 1e-6 * rm.max(1.0), "chord {chord} > rm {rm}");
                assert!(rm >= planar - 1e-12);
            }
        }
    }

    #[test]
    fn rm_distance_is_symmetric() {
        let rule = gl16();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let field = three_peaks();
        for _ in 0..100 {
            let seg = Segment::new(
                Point2::new(rng.gen_range(-1.0..11.0), rng.gen_range(-1.0..11.0)),
                Point2::new(rng.gen_range(-1.0..11.0), rng.gen_range(-1.0..11.0)),
            );
            let fwd = rm_line_distance(&field, &seg, &rule);
            let rev = rm_line_distance(&field, &Segment::new(seg.end, seg.start), &rule);
            assert!((fwd - rev).abs() < 1e-12 * fwd.max(1.0), "fwd {fwd} rev {rev}");
        }
    }

    #[test]
    fn metric_length_equals_lifted_length_on_random_segments() {
        let rule = gl16();
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let field = three_peaks();
        for _ in 0..40 {
            let seg = Segment::new(
                Point2::new(rng.gen_range(-1.0..11.0), rng.gen_range(-1.0..11.0)),
                Point2::new(rng.gen_range(-1.0..11.0), rng.gen_range(-1.0..11.0)),
            );
            if seg.planar_length() < 1e-9 {
                continue;
            }
            let rm = rm_line_distance(&field, &seg, &rule);
            let poly = lifted_polyline_length(&field, &seg, 100_000);
            assert!((rm - poly).abs() / rm < 1e-4, "rm {rm} vs poly {poly}");
        }
    }

    #[test]
    fn flat_degeneracy_on_arbitrary_segments() {
        let rule = gl16();
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..100 {
            let seg = Segment::new(
                Point2::new(rng.gen_range(-50.0..50.0), rng.gen_range(-50.0..50.0)),
                Point2::new(rng.gen_range(-50.0..50.0), rng.gen_range(-50.0..50.0)),
            );
            let d = rm_line_distance(&HeightField::Flat(7.0), &seg, &rule);
            assert!((d - seg.planar_length()).abs() < 1e-12 * seg.planar_length().max(1.0));
        }
    }

    proptest::proptest! {
        // On an inclined plane the metric is constant and the length has a
        // closed form: the 3D length of the lifted segment.
        #[test]
        fn plane_field_length_matches_closed_form(
            a in -3.0..3.0f64,
            b in -3.0..3.0f64,
            x1 in -10.0..10.0f64,
            y1 in -10.0..10.0f64,
            x2 in -10.0..10.0f64,
            y2 in -10.0..10.0f64,
        ) {
            let field = HeightField::Plane(a, b);
            let seg = Segment::new(Point2::new(x1, y1), Point2::new(x2, y2));
            let (dx, dy) = (x2 - x1, y2 - y1);
            let rise = a * dx + b * dy;
            let exact = (dx * dx + dy * dy + rise * rise).sqrt();
            let got = rm_line_distance(&field, &seg, &gl16());
            proptest::prop_assert!((got - exact).abs() < 1e-9 * exact.max(1.0));
        }

        #[test]
        fn chord_never_exceeds_surface_length(
            x1 in -1.0..11.0f64,
            y1 in -1.0..11.0f64,
            x2 in -1.0..11.0f64,
            y2 in -1.0..11.0f64,
        ) {
            let field = three_peaks();
            let seg = Segment::new(Point2::new(x1, y1), Point2::new(x2, y2));
            let chord = euclid3d_distance(&field, &seg);
            let rm = rm_line_distance(&field, &seg, &gl16());
            proptest::prop_assert!(chord <= rm + 1e-9 * rm.max(1.0));
            proptest::prop_assert!(seg.planar_length() <= rm + 1e-12);
        }
    }
}
