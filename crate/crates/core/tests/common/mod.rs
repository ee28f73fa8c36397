//! Shared test helpers: an independent crossing oracle and random instances.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use somlayout::rng::seeded_rng;
use somlayout::{Graph, Layout, Point};

/// Random simple graph with `n` nodes and up to `max_edges` edges.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, max_edges: usize) -> Graph {
    let mut edges = BTreeSet::new();
    let target = rng.random_range(0..=max_edges.min(n * (n - 1) / 2));
    while edges.len() < target {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Either generic float coordinates in [0,1]² or small integer coordinates
/// (heavy on collinear and coincident configurations).
pub fn random_instance(seed: u64, integer_coords: bool) -> (Graph, Vec<[i64; 2]>, Layout) {
    let mut rng = seeded_rng(seed);
    let n = rng.random_range(2..=20);
    let g = random_graph(&mut rng, n, 40);
    if integer_coords {
        let ints: Vec<[i64; 2]> = (0..n)
            .map(|_| [rng.random_range(0..=4), rng.random_range(0..=4)])
            .collect();
        let layout = Layout::new(ints.iter().map(|&[x, y]| Point::new(x as f64, y as f64)).collect()).unwrap();
        (g, ints, layout)
    } else {
        let layout = Layout::new((0..n).map(|_| Point::new(rng.random(), rng.random())).collect()).unwrap();
        (g, Vec::new(), layout)
    }
}

fn icross(a: [i64; 2], b: [i64; 2]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

fn idot(a: [i64; 2], b: [i64; 2]) -> i64 {
    a[0] * b[0] + a[1] * b[1]
}

fn isub(a: [i64; 2], b: [i64; 2]) -> [i64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

/// Point `p` on segment `q1 + u·s`, `u ∈ [0,1]`, exactly.
fn point_on_int_segment(p: [i64; 2], q1: [i64; 2], s: [i64; 2]) -> bool {
    let d = isub(p, q1);
    icross(s, d) == 0 && (0..=idot(s, s)).contains(&idot(d, s))
}

/// Exact parametric test on integer coordinates: `p1 + t·r` meets
/// `q1 + u·s` for some `t, u ∈ [0, 1]`.
pub fn int_segments_meet(p1: [i64; 2], p2: [i64; 2], q1: [i64; 2], q2: [i64; 2]) -> bool {
    let r = isub(p2, p1);
    let s = isub(q2, q1);
    let zero = [0, 0];
    match (r == zero, s == zero) {
        (true, true) => return p1 == q1,
        (true, false) => return point_on_int_segment(p1, q1, s),
        (false, true) => return point_on_int_segment(q1, p1, r),
        _ => {}
    }
    let qp = isub(q1, p1);
    let mut denom = icross(r, s);
    if denom != 0 {
        let mut t = icross(qp, s);
        let mut u = icross(qp, r);
        if denom < 0 {
            denom = -denom;
            t = -t;
            u = -u;
        }
        return (0..=denom).contains(&t) && (0..=denom).contains(&u);
    }
    if icross(qp, r) != 0 {
        return false;
    }
    // collinear: project q's endpoints onto r and overlap with [0, |r|²]
    let t0 = idot(qp, r);
    let t1 = idot(isub(q2, p1), r);
    t0.min(t1) <= idot(r, r) && t0.max(t1) >= 0
}

/// Parametric float test for generic (non-degenerate) positions.
pub fn float_segments_meet(p1: Point, p2: Point, q1: Point, q2: Point) -> bool {
    let r = (p2.x - p1.x, p2.y - p1.y);
    let s = (q2.x - q1.x, q2.y - q1.y);
    let qp = (q1.x - p1.x, q1.y - p1.y);
    let denom = r.0 * s.1 - r.1 * s.0;
    if denom == 0.0 {
        return false;
    }
    let t = (qp.0 * s.1 - qp.1 * s.0) / denom;
    let u = (qp.0 * r.1 - qp.1 * r.0) / denom;
    (0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&u)
}

/// Brute-force crossing count, all edge pairs, shared endpoints excluded.
pub fn oracle_crossings(g: &Graph, ints: &[[i64; 2]], layout: &Layout) -> usize {
    let e = g.edges();
    let mut count = 0;
    for i in 0..e.len() {
        for j in 0..e.len() {
            if j <= i {
                continue;
            }
            let (a, b) = e[i];
            let (c, d) = e[j];
            if [a, b].iter().any(|x| *x == c || *x == d) {
                continue;
            }
            let meet = if ints.is_empty() {
                float_segments_meet(layout.position(a), layout.position(b), layout.position(c), layout.position(d))
            } else {
                int_segments_meet(ints[a], ints[b], ints[c], ints[d])
            };
            count += usize::from(meet);
        }
    }
    count
}
