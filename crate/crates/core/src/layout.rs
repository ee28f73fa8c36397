//! Node positions, the random initial layout, and the winner search shared by
//! both learning algorithms.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::rng::seeded_rng;
use crate::{Error, Graph, Point, Region, Result};

/// One finite 2-D position per node, indexed by node.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Layout {
    positions: Vec<Point>,
}

impl Layout {
    pub fn new(positions: Vec<Point>) -> Result<Self> {
        if let Some(i) = positions.iter().position(|p| !p.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "position of node {i} is not finite"
            )));
        }
        Ok(Layout { positions })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn position(&self, node: usize) -> Point {
        self.positions[node]
    }

    pub(crate) fn positions_mut(&mut self) -> &mut [Point] {
        &mut self.positions
    }

    /// Errors unless there is exactly one position per node of `g`.
    pub fn check_matches(&self, g: &Graph) -> Result<()> {
        if self.positions.len() == g.node_count() {
            Ok(())
        } else {
            Err(Error::LayoutMismatch {
                positions: self.positions.len(),
                nodes: g.node_count(),
            })
        }
    }

    /// Axis-aligned bounding box `(min, max)` of the positions.
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        let first = *self.positions.first()?;
        Some(self.positions.iter().fold((first, first), |(lo, hi), p| {
            (
                Point::new(lo.x.min(p.x), lo.y.min(p.y)),
                Point::new(hi.x.max(p.x), hi.y.max(p.y)),
            )
        }))
    }

    /// Applies `f` to every position.
    pub fn map(&self, f: impl Fn(Point) -> Point) -> Layout {
        Layout {
            positions: self.positions.iter().map(|&p| f(p)).collect(),
        }
    }

    /// Index of the node nearest to `stimulus` in Euclidean distance; ties
    /// go to the lowest index.
    pub fn winner(&self, stimulus: Point) -> Result<usize> {
        let mut best = None;
        let mut best_d = f64::INFINITY;
        for (i, p) in self.positions.iter().enumerate() {
            let d = p.distance_sq(stimulus);
            if d < best_d {
                best_d = d;
                best = Some(i);
            }
        }
        best.ok_or(Error::EmptyLayout)
    }
}

/// Free-function form of [`Layout::winner`].
pub fn winner(layout: &Layout, stimulus: Point) -> Result<usize> {
    layout.winner(stimulus)
}

/// Positions for every node of `g`, drawn i.i.d. uniform over `region` from
/// an existing stream.
pub fn random_layout_from<R: Rng + ?Sized>(g: &Graph, region: &Region, rng: &mut R) -> Layout {
    Layout {
        positions: (0..g.node_count()).map(|_| region.sample(rng)).collect(),
    }
}

/// Seeded uniform random layout. Equal seeds give bit-identical layouts.
pub fn random_layout(g: &Graph, region: &Region, seed: u64) -> Layout {
    random_layout_from(g, region, &mut seeded_rng(seed))
}

/// Natural drawing of [`crate::grid_graph`]: node `(r, c)` at
/// `(c * spacing, r * spacing)`.
pub fn grid_layout(rows: usize, cols: usize, spacing: f64) -> Layout {
    let positions = (0..rows)
        .flat_map(|r| (0..cols).map(move |c| Point::new(c as f64 * spacing, r as f64 * spacing)))
        .collect();
    Layout { positions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid_graph;

    #[test]
    fn nearer_node_wins() {
        let l = Layout::new(vec![Point::new(0.0, 0.0), Point::new(1.0, 1.0)]).unwrap();
        assert_eq!(l.winner(Point::new(0.1, 0.1)).unwrap(), 0);
        assert_eq!(l.winner(Point::new(0.9, 0.8)).unwrap(), 1);
    }

    #[test]
    fn ties_go_to_lowest_index() {
        let l = Layout::new(vec![Point::new(0.5, 0.5), Point::new(0.5, 0.5)]).unwrap();
        for s in [Point::new(0.0, 0.0), Point::new(0.5, 0.5), Point::new(3.0, -2.0)] {
            assert_eq!(l.winner(s).unwrap(), 0);
        }
    }

    #[test]
    fn empty_layout_has_no_winner() {
        let l = Layout::new(vec![]).unwrap();
        assert!(matches!(l.winner(Point::default()), Err(Error::EmptyLayout)));
    }

    #[test]
    fn winner_matches_exhaustive_scan() {
        let mut rng = seeded_rng(77);
        let (g, _) = grid_graph(4, 4).unwrap();
        let region = Region::unit_square();
        let l = random_layout_from(&g, &region, &mut rng);
        for _ in 0..1000 {
            let s = region.sample(&mut rng);
            let mut best = 0;
            for j in 1..l.len() {
                let dj = ((l.position(j).x - s.x).powi(2) + (l.position(j).y - s.y).powi(2)).sqrt();
                let db = ((l.position(best).x - s.x).powi(2) + (l.position(best).y - s.y).powi(2)).sqrt();
                if dj < db {
                    best = j;
                }
            }
            assert_eq!(l.winner(s).unwrap(), best);
        }
    }

    #[test]
    fn random_layout_determinism_and_containment() {
        let (g, _) = grid_graph(10, 10).unwrap();
        let region = Region::unit_square();
        let a = random_layout(&g, &region, 42);
        let b = random_layout(&g, &region, 42);
        let c = random_layout(&g, &region, 43);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.len(), 100);
        assert!(a.positions().iter().all(|&p| region.contains(p)));
    }

    #[test]
    fn rejects_non_finite() {
        assert!(Layout::new(vec![Point::new(f64::NAN, 0.0)]).is_err());
    }
}
