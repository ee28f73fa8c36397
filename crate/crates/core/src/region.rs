//! Stimulus regions: where initial positions and random stimuli are drawn.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Point, Result};

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegionKind {
    Rectangle { min: Point, max: Point },
    /// Flat-topped regular hexagon: vertices at angles 0°, 60°, …, 300°.
    Hexagon { center: Point, circumradius: f64 },
}

/// A convex sampling region with strictly positive extent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Region {
    kind: RegionKind,
}

impl Region {
    pub fn rectangle(min: Point, max: Point) -> Result<Self> {
        let (w, h) = (max.x - min.x, max.y - min.y);
        if !(min.is_finite() && max.is_finite()) || w <= 0.0 || h <= 0.0 {
            return Err(Error::InvalidRegion(format!(
                "rectangle needs positive width and height, got {w} x {h}"
            )));
        }
        Ok(Region {
            kind: RegionKind::Rectangle { min, max },
        })
    }

    pub fn hexagon(center: Point, circumradius: f64) -> Result<Self> {
        if !center.is_finite() || !circumradius.is_finite() || circumradius <= 0.0 {
            return Err(Error::InvalidRegion(format!(
                "hexagon needs a positive circumradius, got {circumradius}"
            )));
        }
        Ok(Region {
            kind: RegionKind::Hexagon {
                center,
                circumradius,
            },
        })
    }

    /// `[0, 1]²`, the default region.
    pub fn unit_square() -> Self {
        Region {
            kind: RegionKind::Rectangle {
                min: Point::new(0.0, 0.0),
                max: Point::new(1.0, 1.0),
            },
        }
    }

    /// Hexagon centred at `(0.5, 0.5)` with circumradius 0.5.
    pub fn unit_hexagon() -> Self {
        Region {
            kind: RegionKind::Hexagon {
                center: Point::new(0.5, 0.5),
                circumradius: 0.5,
            },
        }
    }

    pub fn kind(&self) -> RegionKind {
        self.kind
    }

    /// Axis-aligned bounding box as `(min, max)`.
    pub fn bounding_box(&self) -> (Point, Point) {
        match self.kind {
            RegionKind::Rectangle { min, max } => (min, max),
            RegionKind::Hexagon {
                center,
                circumradius: r,
            } => {
                let half = Point::new(r, r * SQRT3 / 2.0);
                (center - half, center + half)
            }
        }
    }

    pub fn centroid(&self) -> Point {
        let (min, max) = self.bounding_box();
        (min + max) * 0.5
    }

    /// Corner points in counter-clockwise order.
    pub fn vertices(&self) -> Vec<Point> {
        match self.kind {
            RegionKind::Rectangle { min, max } => vec![
                min,
                Point::new(max.x, min.y),
                max,
                Point::new(min.x, max.y),
            ],
            RegionKind::Hexagon {
                center,
                circumradius: r,
            } => (0..6)
                .map(|k| {
                    let a = std::f64::consts::FRAC_PI_3 * k as f64;
                    center + Point::new(r * a.cos(), r * a.sin())
                })
                .collect(),
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        match self.kind {
            RegionKind::Rectangle { min, max } => {
                p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y
            }
            RegionKind::Hexagon {
                center,
                circumradius: r,
            } => {
                let d = p - center;
                let (ax, ay) = (d.x.abs(), d.y.abs());
                ay <= r * SQRT3 / 2.0 && SQRT3 * ax + ay <= SQRT3 * r
            }
        }
    }

    /// Uniform point in the region. Hexagons use rejection sampling from the
    /// bounding box, so the number of draws consumed varies but is fixed by
    /// the stream state.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Point {
        let (min, max) = self.bounding_box();
        loop {
            let u: f64 = rng.random();
            let v: f64 = rng.random();
            let p = Point::new(min.x + (max.x - min.x) * u, min.y + (max.y - min.y) * v);
            if self.contains(p) {
                return p;
            }
        }
    }
}

impl Default for Region {
    fn default() -> Self {
        Region::unit_square()
    }
}

/// Free-function form of [`Region::sample`].
pub fn sample_stimulus<R: Rng + ?Sized>(region: &Region, rng: &mut R) -> Point {
    region.sample(rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{orient, Orientation};
    use crate::rng::seeded_rng;

    /// Point-in-convex-polygon via orientation against every edge.
    fn inside_convex(poly: &[Point], p: Point) -> bool {
        (0..poly.len()).all(|i| {
            orient(poly[i], poly[(i + 1) % poly.len()], p, 1e-12) != Orientation::Clockwise
        })
    }

    #[test]
    fn degenerate_rectangles_rejected() {
        assert!(Region::rectangle(Point::new(0.0, 0.5), Point::new(1.0, 0.5)).is_err());
        assert!(Region::rectangle(Point::new(1.0, 0.0), Point::new(0.0, 1.0)).is_err());
        assert!(Region::hexagon(Point::new(0.0, 0.0), 0.0).is_err());
        assert!(Region::hexagon(Point::new(0.0, 0.0), -1.0).is_err());
    }

    #[test]
    fn unit_square_samples_inside() {
        let mut rng = seeded_rng(3);
        let r = Region::unit_square();
        for _ in 0..1000 {
            let p = r.sample(&mut rng);
            assert!((0.0..=1.0).contains(&p.x) && (0.0..=1.0).contains(&p.y));
        }
    }

    #[test]
    fn hexagon_samples_pass_polygon_oracle() {
        let mut rng = seeded_rng(5);
        let r = Region::unit_hexagon();
        let poly = r.vertices();
        for _ in 0..5000 {
            assert!(inside_convex(&poly, r.sample(&mut rng)));
        }
    }

    #[test]
    fn hexagon_contains_agrees_with_polygon_oracle() {
        let mut rng = seeded_rng(8);
        let r = Region::unit_hexagon();
        let poly = r.vertices();
        let square = Region::rectangle(Point::new(-0.1, -0.1), Point::new(1.1, 1.1)).unwrap();
        for _ in 0..5000 {
            let p = square.sample(&mut rng);
            assert_eq!(r.contains(p), inside_convex(&poly, p), "{p:?}");
        }
    }

    #[test]
    fn unit_square_mean_is_centre() {
        let mut rng = seeded_rng(1234);
        let r = Region::unit_square();
        let n = 100_000;
        let sum = (0..n).fold(Point::default(), |acc, _| acc + r.sample(&mut rng));
        let mean = sum * (1.0 / n as f64);
        assert!((mean.x - 0.5).abs() < 0.01 && (mean.y - 0.5).abs() < 0.01, "{mean:?}");
    }

    #[test]
    fn sampling_is_deterministic() {
        let r = Region::unit_hexagon();
        let a: Vec<_> = {
            let mut rng = seeded_rng(9);
            (0..50).map(|_| r.sample(&mut rng)).collect()
        };
        let b: Vec<_> = {
            let mut rng = seeded_rng(9);
            (0..50).map(|_| sample_stimulus(&r, &mut rng)).collect()
        };
        assert_eq!(a, b);
    }
}
