//! Plane geometry primitives: points, orientation, segment intersection.

use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

/// Absolute tolerance on the orientation cross product. Coordinates are
/// expected at unit scale.
pub const ORIENTATION_EPS: f64 = 1e-12;

/// A position in the plane. Serializes as `[x, y]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn distance_sq(self, other: Point) -> f64 {
        (self - other).norm_sq()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

/// Orientation of the triple `(a, b, c)` with an absolute epsilon on the
/// cross product.
pub fn orient(a: Point, b: Point, c: Point, eps: f64) -> Orientation {
    let cross = (b - a).cross(c - a);
    if cross > eps {
        Orientation::CounterClockwise
    } else if cross < -eps {
        Orientation::Clockwise
    } else {
        Orientation::Collinear
    }
}

/// `p` is collinear with `a`–`b` and inside their bounding box.
fn on_segment(a: Point, b: Point, p: Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Whether the closed segments `a1–a2` and `b1–b2` share at least one point.
///
/// Touching, collinear overlap and endpoint-on-segment all count.
pub fn segments_intersect(a1: Point, a2: Point, b1: Point, b2: Point, eps: f64) -> bool {
    use Orientation::Collinear;

    let o1 = orient(a1, a2, b1, eps);
    let o2 = orient(a1, a2, b2, eps);
    let o3 = orient(b1, b2, a1, eps);
    let o4 = orient(b1, b2, a2, eps);

    if o1 != o2 && o3 != o4 && o1 != Collinear && o2 != Collinear && o3 != Collinear && o4 != Collinear
    {
        return true;
    }

    (o1 == Collinear && on_segment(a1, a2, b1))
        || (o2 == Collinear && on_segment(a1, a2, b2))
        || (o3 == Collinear && on_segment(b1, b2, a1))
        || (o4 == Collinear && on_segment(b1, b2, a2))
}
