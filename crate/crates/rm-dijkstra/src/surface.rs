//! Analytic height surfaces and their differential data.
//!
//! A surface is the graph of a smooth function `x3(x1, x2)`. Everything the
//! planner needs from it is the height, the gradient, and the lifting maps
//! that send planar points and tangent vectors onto the embedded surface.

use serde::{Deserialize, Serialize};

/// A point on the projection plane, in chart coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x1: f64,
    pub x2: f64,
}

impl Point2 {
    pub fn new(x1: f64, x2: f64) -> Self {
        Point2 { x1, x2 }
    }

    /// Planar Euclidean distance to `other`.
    pub fn distance(&self, other: Point2) -> f64 {
        (self.x1 - other.x1).hypot(self.x2 - other.x2)
    }
}

impl From<[f64; 2]> for Point2 {
    fn from(a: [f64; 2]) -> Self {
        Point2::new(a[0], a[1])
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x1, p.x2]
    }
}

/// A point on the embedded surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point3 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Point3 {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Point3 { x1, x2, x3 }
    }

    /// 3D Euclidean distance to `other`.
    pub fn distance(&self, other: Point3) -> f64 {
        let d1 = self.x1 - other.x1;
        let d2 = self.x2 - other.x2;
        let d3 = self.x3 - other.x3;
        (d1 * d1 + d2 * d2 + d3 * d3).sqrt()
    }
}

/// A tangent vector on the projection plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2 {
    pub x1: f64,
    pub x2: f64,
}

impl Vec2 {
    pub fn new(x1: f64, x2: f64) -> Self {
        Vec2 { x1, x2 }
    }

    pub fn norm(&self) -> f64 {
        self.x1.hypot(self.x2)
    }
}

/// A tangent vector in ambient 3D space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Vec3 {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Vec3 { x1, x2, x3 }
    }

    /// Standard Euclidean dot product.
    pub fn dot(&self, other: Vec3) -> f64 {
        self.x1 * other.x1 + self.x2 * other.x2 + self.x3 * other.x3
    }
}

/// One Gaussian bump: `amplitude * exp(-r^2 / (2 sigma^2))` around `center`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianPeak {
    pub amplitude: f64,
    pub center: Point2,
    pub sigma: f64,
}

impl GaussianPeak {
    pub fn new(amplitude: f64, center: Point2, sigma: f64) -> Self {
        GaussianPeak { amplitude, center, sigma }
    }

    fn height(&self, p: Point2) -> f64 {
        let d1 = p.x1 - self.center.x1;
        let d2 = p.x2 - self.center.x2;
        self.amplitude * (-(d1 * d1 + d2 * d2) / (2.0 * self.sigma * self.sigma)).exp()
    }

    fn gradient(&self, p: Point2) -> Vec2 {
        let h = self.height(p);
        let s2 = self.sigma * self.sigma;
        Vec2::new(-h * (p.x1 - self.center.x1) / s2, -h * (p.x2 - self.center.x2) / s2)
    }
}

/// An analytic height field `x3(x1, x2)`, defined on all of the plane.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HeightField {
    /// Constant height `c`.
    Flat(f64),
    /// Inclined plane `x3 = a*x1 + b*x2`.
    Plane(f64, f64),
    /// Sum of Gaussian peaks.
    #[serde(rename = "peaks")]
    PeakSum(Vec<GaussianPeak>),
}

impl HeightField {
    /// Height `x3` at a planar point.
    pub fn height(&self, p: Point2) -> f64 {
        match self {
            HeightField::Flat(c) => *c,
            HeightField::Plane(a, b) => a * p.x1 + b * p.x2,
            HeightField::PeakSum(peaks) => peaks.iter().map(|pk| pk.height(p)).sum(),
        }
    }

    /// Analytic gradient `(d x3 / d x1, d x3 / d x2)` at a planar point.
    pub fn gradient(&self, p: Point2) -> Vec2 {
        match self {
            HeightField::Flat(_) => Vec2::new(0.0, 0.0),
            HeightField::Plane(a, b) => Vec2::new(*a, *b),
            HeightField::PeakSum(peaks) => {
                let mut g = Vec2::new(0.0, 0.0);
                for pk in peaks {
                    let gp = pk.gradient(p);
                    g.x1 += gp.x1;
                    g.x2 += gp.x2;
                }
                g
            }
        }
    }

    /// Central finite-difference gradient; a validation oracle for
    /// [`HeightField::gradient`], never used by the planner itself.
    pub fn gradient_fd(&self, p: Point2, step: f64) -> Vec2 {
        assert!(step > 0.0, "finite-difference step must be positive");
        let dx1 = self.height(Point2::new(p.x1 + step, p.x2))
            - self.height(Point2::new(p.x1 - step, p.x2));
        let dx2 = self.height(Point2::new(p.x1, p.x2 + step))
            - self.height(Point2::new(p.x1, p.x2 - step));
        Vec2::new(dx1 / (2.0 * step), dx2 / (2.0 * step))
    }

    /// Lifts a planar point onto the surface: `(x1, x2, x3(x1, x2))`.
    pub fn lift_point(&self, p: Point2) -> Point3 {
        Point3::new(p.x1, p.x2, self.height(p))
    }

    /// Lifts a planar tangent vector into the tangent plane of the surface
    /// at `p`: the third component is `v1 * d x3/d x1 + v2 * d x3/d x2`.
    pub fn lift_tangent(&self, p: Point2, v: Vec2) -> Vec3 {
        let g = self.gradient(p);
        Vec3::new(v.x1, v.x2, v.x1 * g.x1 + v.x2 * g.x2)
    }
}
