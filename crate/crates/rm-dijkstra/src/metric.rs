//! The pullback Riemannian metric on the projection plane.
//!
//! At every planar point the surface's Euclidean inner product is pulled back
//! through the lifting map, giving a 2x2 symmetric positive-definite tensor
//!
//! ```text
//! h11 = 1 + (dx3/dx1)^2      h12 = h21 = (dx3/dx1)(dx3/dx2)
//! h22 = 1 + (dx3/dx2)^2
//! ```
//!
//! Measuring plane curves with this tensor yields exactly the Euclidean
//! length of their lifts onto the surface; [`isometry_residual`] checks that
//! identity numerically.

use crate::surface::{HeightField, Point2, Vec2};

/// The pullback metric tensor at a planar point. Only the upper triangle is
/// stored; symmetry is structural.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricTensor {
    pub h11: f64,
    pub h12: f64,
    pub h22: f64,
    /// Where the tensor was evaluated.
    pub at: Point2,
}

/// The inverse tensor `[h^kl]`. Not consumed by the planner; exposed for
/// geodesic-equation extensions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricInverse {
    pub k11: f64,
    pub k12: f64,
    pub k22: f64,
}

impl MetricTensor {
    /// Determinant `h11*h22 - h12^2`; always >= 1 for a pullback tensor.
    pub fn det(&self) -> f64 {
        self.h11 * self.h22 - self.h12 * self.h12
    }

    /// Inverse via the closed-form 2x2 formula; safe because det >= 1.
    pub fn inverse(&self) -> MetricInverse {
        let d = self.det();
        MetricInverse { k11: self.h22 / d, k12: -self.h12 / d, k22: self.h11 / d }
    }

    /// Inner product of two planar tangent vectors under this tensor.
    pub fn inner(&self, u: Vec2, v: Vec2) -> f64 {
        self.h11 * u.x1 * v.x1 + self.h12 * (u.x1 * v.x2 + u.x2 * v.x1) + self.h22 * u.x2 * v.x2
    }
}

/// Evaluates the pullback metric of `field` at `p`.
pub fn metric_at(field: &HeightField, p: Point2) -> MetricTensor {
    let g = field.gradient(p);
    MetricTensor {
        h11: 1.0 + g.x1 * g.x1,
        h12: g.x1 * g.x2,
        h22: 1.0 + g.x2 * g.x2,
        at: p,
    }
}

/// Absolute difference between the planar inner product under the pullback
/// metric and the ambient 3D dot product of the lifted vectors. Identically
/// zero in exact arithmetic; the numerical check of the isometry property.
pub fn isometry_residual(field: &HeightField, p: Point2, u: Vec2, v: Vec2) -> f64 {
    let planar = metric_at(field, p).inner(u, v);
    let ambient = field.lift_tangent(p, u).dot(field.lift_tangent(p, v));
    (planar - ambient).abs()
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

    fn field_variants() -> Vec<HeightField> {
        vec![
            HeightField::Flat(0.0),
            HeightField::Plane(2.0, 0.0),
            HeightField::Plane(1.0, 1.0),
            one_peak(),
            HeightField::PeakSum(vec![
                GaussianPeak::new(8.0, Point2::new(3.0, 2.0), 1.0),
                GaussianPeak::new(9.0, Point2::new(7.0, 3.0), 1.0),
                GaussianPeak::new(8.0, Point2::new(6.0, 8.0), 1.0),
            ]),
        ]
    }

    #[test]
    fn metric_examples() {
        let p = Point2::new(0.3, -0.7);
        let m = metric_at(&HeightField::Flat(4.0), p);
        assert_eq!((m.h11, m.h12, m.h22), (1.0, 0.0, 1.0));
        let m = metric_at(&HeightField::Plane(2.0, 0.0), p);
        assert_eq!((m.h11, m.h12, m.h22), (5.0, 0.0, 1.0));
        let m = metric_at(&HeightField::Plane(1.0, 1.0), p);
        assert_eq!((m.h11, m.h12, m.h22), (2.0, 1.0, 2.0));
    }

    #[test]
    fn det_examples() {
        let p = Point2::new(1.0, 1.0);
        assert_eq!(metric_at(&HeightField::Flat(0.0), p).det(), 1.0);
        assert_eq!(metric_at(&HeightField::Plane(2.0, 0.0), p).det(), 5.0);
        assert_eq!(metric_at(&HeightField::Plane(1.0, 1.0), p).det(), 3.0);
    }

    #[test]
    fn inverse_examples() {
        let p = Point2::new(0.0, 0.0);
        let inv = metric_at(&HeightField::Flat(0.0), p).inverse();
        assert_eq!((inv.k11, inv.k12, inv.k22), (1.0, 0.0, 1.0));
        let inv = metric_at(&HeightField::Plane(2.0, 0.0), p).inverse();
        assert!((inv.k11 - 0.2).abs() < 1e-15);
        assert_eq!(inv.k12, 0.0);
        assert_eq!(inv.k22, 1.0);
        let inv = metric_at(&HeightField::Plane(1.0, 1.0), p).inverse();
        assert!((inv.k11 - 2.0 / 3.0).abs() < 1e-15);
        assert!((inv.k12 + 1.0 / 3.0).abs() < 1e-15);
        assert!((inv.k22 - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn inner_examples() {
        let p = Point2::new(0.0, 0.0);
        let identity = metric_at(&HeightField::Flat(0.0), p);
        assert_eq!(identity.inner(Vec2::new(3.0, 4.0), Vec2::new(3.0, 4.0)), 25.0);
        let plane = metric_at(&HeightField::Plane(2.0, 0.0), p);
        assert_eq!(plane.inner(Vec2::new(1.0, 0.0), Vec2::new(1.0, 0.0)), 5.0);
        let peak = metric_at(&one_peak(), Point2::new(4.0, 4.0));
        assert_eq!(peak.inner(Vec2::new(0.0, 0.0), Vec2::new(1.0, 2.0)), 0.0);
    }

    #[test]
    fn tensor_bounds_and_det_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for f in field_variants() {
            for _ in 0..200 {
                let p = Point2::new(rng.gen_range(-1.0..11.0), rng.gen_range(-1.0..11.0));
                let m = metric_at(&f, p);
                assert!(m.h11 >= 1.0);
                assert!(m.h22 >= 1.0);
                assert!(m.det() >= 1.0);
                let g = f.gradient(p);
                let expected = 1.0 + g.x1 * g.x1 + g.x2 * g.x2;
                assert!((m.det() - expected).abs() < 1e-12, "det identity off at {p:?}");
            }
        }
    }

    #[test]
    fn inverse_times_tensor_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for f in field_variants() {
            for _ in 0..200 {
                let p = Point2::new(rng.gen_range(-1.0..11.0), rng.gen_range(-1.0..11.0));
                let m = metric_at(&f, p);
                let inv = m.inverse();
                let a = m.h11 * inv.k11 + m.h12 * inv.k12;
                let b = m.h11 * inv.k12 + m.h12 * inv.k22;
                let c = m.h12 * inv.k11 + m.h22 * inv.k12;
                let d = m.h12 * inv.k12 + m.h22 * inv.k22;
                assert!((a - 1.0).abs() < 1e-10);
                assert!(b.abs() < 1e-10);
                assert!(c.abs() < 1e-10);
                assert!((d - 1.0).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn inner_is_symmetric_and_bilinear() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for f in field_variants() {
            for _ in 0..200 {
                let p = Point2::new(rng.gen_range(-1.0..11.0), rng.gen_range(-1.0..11.0));
                let m = metric_at(&f, p);
                let u = Vec2::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
                let v = Vec2::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
                let w = Vec2::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
                let (a, b) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
                assert!((m.inner(u, v) - m.inner(v, u)).abs() < 1e-12);
                let combo = Vec2::new(a * u.x1 + b * w.x1, a * u.x2 + b * w.x2);
                let lhs = m.inner(combo, v);
                let rhs = a * m.inner(u, v) + b * m.inner(w, v);
                assert!((lhs - rhs).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn isometry_residual_flat_is_exactly_zero() {
        let r = isometry_residual(
            &HeightField::Flat(0.0),
            Point2::new(0.5, 0.5),
            Vec2::new(1.0, 2.0),
            Vec2::new(3.0, 4.0),
        );
        assert_eq!(r, 0.0);
    }

    #[test]
    fn isometry_residual_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let f = one_peak();
        let mut worst: f64 = 0.0;
        for _ in 0..1000 {
            let p = Point2::new(rng.gen_range(-1.0..11.0), rng.gen_range(-1.0..11.0));
            let u = Vec2::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let v = Vec2::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            worst = worst.max(isometry_residual(&f, p, u, v));
        }
        assert!(worst < 1e-10, "worst residual {worst}");
    }

    proptest::proptest! {
        #[test]
        fn isometry_holds_on_arbitrary_inclines(
            a in -4.0..4.0f64,
            b in -4.0..4.0f64,
            px in -10.0..10.0f64,
            py in -10.0..10.0f64,
            u1 in -3.0..3.0f64,
            u2 in -3.0..3.0f64,
            v1 in -3.0..3.0f64,
            v2 in -3.0..3.0f64,
        ) {
            let field = HeightField::Plane(a, b);
            let r = isometry_residual(
                &field,
                Point2::new(px, py),
                Vec2::new(u1, u2),
                Vec2::new(v1, v2),
            );
            proptest::prop_assert!(r < 1e-10);
        }

        #[test]
        fn det_identity_on_arbitrary_inclines(a in -6.0..6.0f64, b in -6.0..6.0f64) {
            let m = metric_at(&HeightField::Plane(a, b), Point2::new(0.0, 0.0));
            let expected = 1.0 + a * a + b * b;
            proptest::prop_assert!((m.det() - expected).abs() < 1e-12);
        }
    }
}
