mod common;

use proptest::prelude::*;
use rand::Rng;
use somlayout::geometry::segments_intersect;
use somlayout::layout::random_layout;
use somlayout::metrics::{convex_face_fraction, count_crossings};
use somlayout::rng::seeded_rng;
use somlayout::{grid_graph, io, isom, som, Graph, IsomParams, Layout, Point, Region, SomParams};

use common::{oracle_crossings, random_graph, random_instance};

fn rigid(layout: &Layout, angle: f64, shift: Point, scale: f64) -> Layout {
    let (s, c) = angle.sin_cos();
    layout.map(|p| Point::new(c * p.x - s * p.y, s * p.x + c * p.y) * scale + shift)
}

#[test]
fn crossings_match_oracle_on_random_instances() {
    for seed in 0..200 {
        let (g, ints, l) = random_instance(seed, seed % 2 == 1);
        assert_eq!(count_crossings(&g, &l).unwrap(), oracle_crossings(&g, &ints, &l), "seed {seed}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn crossings_invariant_under_motion_and_scale(
        seed in any::<u64>(),
        angle in 0.0..std::f64::consts::TAU,
        dx in -5.0..5.0f64,
        dy in -5.0..5.0f64,
        scale in 0.25..4.0f64,
    ) {
        let (g, _, l) = random_instance(seed, false);
        let moved = rigid(&l, angle, Point::new(dx, dy), scale);
        prop_assert_eq!(count_crossings(&g, &l).unwrap(), count_crossings(&g, &moved).unwrap());
    }

    #[test]
    fn crossings_invariant_under_relabeling(seed in any::<u64>()) {
        let (g, _, l) = random_instance(seed, false);
        let mut rng = seeded_rng(seed ^ 0x5eed);
        let n = g.node_count();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.random_range(0..=i));
        }
        let g2 = Graph::new(n, g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap();
        let mut pos = vec![Point::default(); n];
        for v in 0..n {
            pos[perm[v]] = l.position(v);
        }
        let l2 = Layout::new(pos).unwrap();
        prop_assert_eq!(count_crossings(&g, &l).unwrap(), count_crossings(&g2, &l2).unwrap());
    }

    #[test]
    fn convexity_invariant_under_rigid_motion(
        seed in any::<u64>(),
        angle in 0.0..std::f64::consts::TAU,
        dx in -3.0..3.0f64,
    ) {
        let (g, faces) = grid_graph(4, 4).unwrap();
        let l = random_layout(&g, &Region::unit_square(), seed);
        let moved = rigid(&l, angle, Point::new(dx, -dx), 1.0);
        prop_assert_eq!(
            convex_face_fraction(&faces, &l).unwrap(),
            convex_face_fraction(&faces, &moved).unwrap()
        );
    }

    #[test]
    fn som_step_is_local(seed in any::<u64>(), radius in 0usize..4, alpha in 0.01..1.0f64) {
        let mut rng = seeded_rng(seed);
        let n = rng.random_range(1..30);
        let g = random_graph(&mut rng, n, 60);
        let region = Region::unit_square();
        let mut l = random_layout(&g, &region, seed);
        let before = l.clone();
        let stimulus = region.sample(&mut rng);
        let w = som::som_step(&mut l, &g, stimulus, alpha, radius, 1.3).unwrap();
        let ball = g.distances_within(w, radius).unwrap();
        for v in 0..n {
            if !ball.contains_key(&v) {
                prop_assert_eq!(l.position(v), before.position(v));
            }
        }
    }

    #[test]
    fn isom_step_is_local(seed in any::<u64>(), radius in 0usize..4, alpha in 0.01..1.0f64) {
        let mut rng = seeded_rng(seed);
        let n = rng.random_range(1..30);
        let g = random_graph(&mut rng, n, 60);
        let region = Region::unit_square();
        let mut l = random_layout(&g, &region, seed);
        let before = l.clone();
        let stimulus = region.sample(&mut rng);
        let w = isom::isom_step(&mut l, &g, stimulus, alpha, radius).unwrap();
        let ball = g.distances_within(w, radius).unwrap();
        for v in 0..n {
            if !ball.contains_key(&v) {
                prop_assert_eq!(l.position(v), before.position(v));
            }
        }
    }

    #[test]
    fn layouts_stay_in_convex_regions(seed in any::<u64>(), hexagon in any::<bool>()) {
        let mut rng = seeded_rng(seed);
        let n = rng.random_range(1..25);
        let g = random_graph(&mut rng, n, 50);
        let (region, slack) = if hexagon {
            (Region::unit_hexagon(), Region::hexagon(Point::new(0.5, 0.5), 0.5 + 1e-9).unwrap())
        } else {
            (Region::unit_square(), Region::unit_square())
        };
        let sp = SomParams { t_max: 3000, ..SomParams::default() };
        let ip = IsomParams::default();
        for l in [
            som::som_layout(&g, &region, &sp, seed).unwrap(),
            isom::isom_layout(&g, &region, &ip, seed).unwrap(),
        ] {
            prop_assert!(l.positions().iter().all(|&p| slack.contains(p)));
        }
    }

    #[test]
    fn graph_json_round_trip(seed in any::<u64>(), rows in 2usize..7, cols in 2usize..7) {
        let (grid, faces) = grid_graph(rows, cols).unwrap();
        let (g2, f2) = io::parse_graph_str(&io::graph_to_json(&grid, Some(&faces)), "rt").unwrap();
        prop_assert_eq!(&grid, &g2);
        prop_assert_eq!(Some(faces), f2);

        let mut rng = seeded_rng(seed);
        let n = rng.random_range(1..40);
        let g = random_graph(&mut rng, n, 80);
        let (g3, f3) = io::parse_graph_str(&io::graph_to_json(&g, None), "rt").unwrap();
        prop_assert_eq!(g, g3);
        prop_assert!(f3.is_none());
    }

    #[test]
    fn seeds_determine_layouts(seed in any::<u64>()) {
        let (g, _) = grid_graph(3, 4).unwrap();
        let r = Region::unit_square();
        let a = random_layout(&g, &r, seed);
        prop_assert_eq!(&a, &random_layout(&g, &r, seed));
        prop_assert_ne!(&a, &random_layout(&g, &r, seed.wrapping_add(1)));
    }
}

/// Plane grid layouts from either algorithm have simple inner faces.
#[test]
fn plane_layouts_have_simple_faces() {
    let (g, faces) = grid_graph(5, 5).unwrap();
    let region = Region::unit_square();
    let sp = SomParams { t_max: 100_000, ..SomParams::default() };
    let mut checked = 0;
    for seed in 0..6 {
        for l in [
            som::som_layout(&g, &region, &sp, seed).unwrap(),
            isom::isom_layout(&g, &region, &IsomParams::default(), seed).unwrap(),
        ] {
            if count_crossings(&g, &l).unwrap() != 0 {
                continue;
            }
            checked += 1;
            for face in faces.inner_faces() {
                let k = face.len();
                for i in 0..k {
                    for j in i + 2..k {
                        if i == 0 && j == k - 1 {
                            continue;
                        }
                        let a = (l.position(face[i]), l.position(face[(i + 1) % k]));
                        let b = (l.position(face[j]), l.position(face[(j + 1) % k]));
                        assert!(!segments_intersect(a.0, a.1, b.0, b.1, 1e-12));
                    }
                }
            }
        }
    }
    assert!(checked > 0, "no plane layout to check");
}
