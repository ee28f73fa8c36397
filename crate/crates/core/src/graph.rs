//! Graph data model, grid generator and hop-distance queries.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::{Error, Result};

/// Simple undirected graph over dense node indices `0..node_count`.
///
/// Edges keep their insertion order (normalized so that `u < v`), which makes
/// serialization and rendering deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    node_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn new(node_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if node_count == 0 {
            return Err(Error::InvalidGraph("graph must have at least one node".into()));
        }
        let mut seen = HashSet::new();
        let mut normalized = Vec::new();
        let mut adjacency = vec![Vec::new(); node_count];
        for (i, (u, v)) in edges.into_iter().enumerate() {
            if u >= node_count || v >= node_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} ({u}, {v}) references a node outside 0..{node_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("edge {i} is a self-loop on node {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} ({u}, {v}) duplicates an earlier edge"
                )));
            }
            normalized.push(key);
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Graph {
            node_count,
            edges: normalized,
            adjacency,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count && self.adjacency[u].contains(&v)
    }

    fn check_node(&self, node: usize) -> Result<()> {
        if node < self.node_count {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                index: node,
                node_count: self.node_count,
            })
        }
    }

    /// Every node within `radius` hops of `source`, mapped to its exact hop
    /// distance. `source` maps to 0.
    pub fn distances_within(&self, source: usize, radius: usize) -> Result<BTreeMap<usize, usize>> {
        self.check_node(source)?;
        Ok(self.bfs_ball(source, radius).into_iter().collect())
    }

    /// BFS from `source` truncated at `radius`; output is in non-decreasing
    /// distance order.
    fn bfs_ball(&self, source: usize, radius: usize) -> Vec<(usize, usize)> {
        let mut dist = vec![usize::MAX; self.node_count];
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u];
            order.push((u, d));
            if d == radius {
                continue;
            }
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = d + 1;
                    queue.push_back(v);
                }
            }
        }
        order
    }
}

/// Free-function form of [`Graph::distances_within`].
pub fn graph_distance_within(
    g: &Graph,
    source: usize,
    radius: usize,
) -> Result<BTreeMap<usize, usize>> {
    g.distances_within(source, radius)
}

/// Precomputed hop-distance balls up to a maximum radius, one per node.
///
/// The layout loops query the neighbourhood of the winner once per
/// iteration; caching the BFS keeps that query a slice lookup.
#[derive(Clone, Debug)]
pub struct Neighborhoods {
    max_radius: usize,
    balls: Vec<Vec<(usize, usize)>>,
}

impl Neighborhoods {
    pub fn new(g: &Graph, max_radius: usize) -> Self {
        let balls = (0..g.node_count()).map(|s| g.bfs_ball(s, max_radius)).collect();
        Neighborhoods { max_radius, balls }
    }

    pub fn max_radius(&self) -> usize {
        self.max_radius
    }

    /// `(node, distance)` pairs with `distance <= radius`, winner first.
    ///
    /// Panics if `radius` exceeds the precomputed maximum.
    pub fn ball(&self, node: usize, radius: usize) -> &[(usize, usize)] {
        assert!(
            radius <= self.max_radius,
            "radius {radius} exceeds precomputed maximum {}",
            self.max_radius
        );
        let ball = &self.balls[node];
        let end = ball.partition_point(|&(_, d)| d <= radius);
        &ball[..end]
    }
}

/// Facial cycles of a plane graph, with an optional marked outer face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceList {
    faces: Vec<Vec<usize>>,
    outer_face: Option<usize>,
}

impl FaceList {
    /// Validates every cycle against `g`: at least three distinct nodes and
    /// every consecutive pair (including last to first) an edge.
    pub fn new(g: &Graph, faces: Vec<Vec<usize>>, outer_face: Option<usize>) -> Result<Self> {
        for (i, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(Error::InvalidFaces(format!(
                    "face {i} has {} vertices, need at least 3",
                    face.len()
                )));
            }
            let mut seen = HashSet::new();
            for &v in face {
                if v >= g.node_count() {
                    return Err(Error::InvalidFaces(format!(
                        "face {i} references node {v} outside 0..{}",
                        g.node_count()
                    )));
                }
                if !seen.insert(v) {
                    return Err(Error::InvalidFaces(format!("face {i} repeats node {v}")));
                }
            }
            for k in 0..face.len() {
                let (u, v) = (face[k], face[(k + 1) % face.len()]);
                if !g.has_edge(u, v) {
                    return Err(Error::InvalidFaces(format!(
                        "face {i}: consecutive nodes {u} and {v} are not joined by an edge"
                    )));
                }
            }
        }
        if let Some(o) = outer_face {
            if o >= faces.len() {
                return Err(Error::InvalidFaces(format!(
                    "outer face index {o} out of range for {} faces",
                    faces.len()
                )));
            }
        }
        Ok(FaceList { faces, outer_face })
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn outer_face(&self) -> Option<usize> {
        self.outer_face
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Faces other than the marked outer face.
    pub fn inner_faces(&self) -> impl Iterator<Item = &[usize]> {
        self.faces
            .iter()
            .enumerate()
            .filter(move |&(i, _)| Some(i) != self.outer_face)
            .map(|(_, f)| f.as_slice())
    }
}

/// `rows × cols` grid graph with 4-neighbour edges.
///
/// Node `(r, c)` has index `r * cols + c`. The face list holds every unit
/// square (counter-clockwise when `(r, c)` is drawn at `(c, r)`) followed by
/// the outer boundary cycle, which is marked as the outer face.
pub fn grid_graph(rows: usize, cols: usize) -> Result<(Graph, FaceList)> {
    if rows < 2 || cols < 2 {
        return Err(Error::InvalidGraph(format!(
            "grid needs at least 2 rows and 2 columns, got {rows}x{cols}"
        )));
    }
    let idx = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::with_capacity(2 * rows * cols - rows - cols);
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((idx(r, c), idx(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((idx(r, c), idx(r + 1, c)));
            }
        }
    }
    let graph = Graph::new(rows * cols, edges)?;

    let mut faces = Vec::with_capacity((rows - 1) * (cols - 1) + 1);
    for r in 0..rows - 1 {
        for c in 0..cols - 1 {
            faces.push(vec![idx(r, c), idx(r, c + 1), idx(r + 1, c + 1), idx(r + 1, c)]);
        }
    }
    let mut boundary = Vec::with_capacity(2 * (rows + cols) - 4);
    boundary.extend((0..cols).map(|c| idx(0, c)));
    boundary.extend((1..rows).map(|r| idx(r, cols - 1)));
    boundary.extend((0..cols - 1).rev().map(|c| idx(rows - 1, c)));
    boundary.extend((1..rows - 1).rev().map(|r| idx(r, 0)));
    faces.push(boundary);
    let outer = faces.len() - 1;

    let faces = FaceList::new(&graph, faces, Some(outer))?;
    Ok((graph, faces))
}
