//! Drawing quality: crossings, bounding area, edge length, face convexity.

use serde::{Deserialize, Serialize};

use crate::geometry::{segments_intersect, ORIENTATION_EPS};
use crate::{Error, FaceList, Graph, Layout, Point, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub crossings: usize,
    pub area: f64,
    pub avg_edge_length: f64,
    /// Absent when no face list was supplied.
    pub convex_face_fraction: Option<f64>,
}

/// Number of unordered edge pairs, not sharing an endpoint, whose closed
/// segments meet.
///
/// Collinear overlap counts once per pair, as does a node lying on the
/// interior of a non-incident edge.
pub fn count_crossings(g: &Graph, layout: &Layout) -> Result<usize> {
    count_crossings_with_eps(g, layout, ORIENTATION_EPS)
}

pub fn count_crossings_with_eps(g: &Graph, layout: &Layout, eps: f64) -> Result<usize> {
    layout.check_matches(g)?;
    let pos = layout.positions();
    let edges = g.edges();
    let mut count = 0;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if segments_intersect(pos[a], pos[b], pos[c], pos[d], eps) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Area of the axis-aligned bounding box of the node positions.
pub fn bounding_area(layout: &Layout) -> Result<f64> {
    let (lo, hi) = layout.bounding_box().ok_or(Error::EmptyLayout)?;
    Ok((hi.x - lo.x) * (hi.y - lo.y))
}

pub fn average_edge_length(g: &Graph, layout: &Layout) -> Result<f64> {
    layout.check_matches(g)?;
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let total: f64 = g
        .edges()
        .iter()
        .map(|&(u, v)| layout.position(u).distance(layout.position(v)))
        .sum();
    Ok(total / g.edge_count() as f64)
}

/// Whether the closed polygon is simple and turns consistently one way.
///
/// Collinear turns are allowed, so degenerate (flat) polygons count as
/// convex as long as no two non-adjacent sides touch.
pub fn is_convex_polygon(poly: &[Point]) -> bool {
    is_convex_polygon_with_eps(poly, ORIENTATION_EPS)
}

pub fn is_convex_polygon_with_eps(poly: &[Point], eps: f64) -> bool {
    let n = poly.len();
    let (mut pos, mut neg) = (false, false);
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        let c = poly[(i + 2) % n];
        let turn = (b - a).cross(c - b);
        pos |= turn > eps;
        neg |= turn < -eps;
    }
    if pos && neg {
        return false;
    }
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (a1, a2) = (poly[i], poly[(i + 1) % n]);
            let (b1, b2) = (poly[j], poly[(j + 1) % n]);
            if segments_intersect(a1, a2, b1, b2, eps) {
                return false;
            }
        }
    }
    true
}

/// Fraction of inner faces drawn as convex polygons. A face list without
/// inner faces scores 1.0.
pub fn convex_face_fraction(faces: &FaceList, layout: &Layout) -> Result<f64> {
    let mut total = 0usize;
    let mut convex = 0usize;
    for (i, face) in faces.inner_faces().enumerate() {
        if face.len() < 3 {
            return Err(Error::InvalidFaces(format!("face {i} has fewer than 3 vertices")));
        }
        if let Some(&v) = face.iter().find(|&&v| v >= layout.len()) {
            return Err(Error::NodeOutOfRange {
                index: v,
                node_count: layout.len(),
            });
        }
        let poly: Vec<Point> = face.iter().map(|&v| layout.position(v)).collect();
        total += 1;
        if is_convex_polygon(&poly) {
            convex += 1;
        }
    }
    Ok(if total == 0 {
        1.0
    } else {
        convex as f64 / total as f64
    })
}

pub fn evaluate(g: &Graph, layout: &Layout, faces: Option<&FaceList>) -> Result<MetricsReport> {
    Ok(MetricsReport {
        crossings: count_crossings(g, layout)?,
        area: bounding_area(layout)?,
        avg_edge_length: average_edge_length(g, layout)?,
        convex_face_fraction: faces.map(|f| convex_face_fraction(f, layout)).transpose()?,
    })
}
