//! Scores a few hand-built drawings with every metric.
//!
//!     cargo run --example metrics_tour

use somlayout::layout::grid_layout;
use somlayout::metrics;
use somlayout::{grid_graph, Graph, Layout, Point};

fn main() -> somlayout::Result<()> {
    // K4 drawn on a square: the two diagonals cross once.
    let k4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])?;
    let square = Layout::new(vec![
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0, 1.0),
        Point::new(0.0, 1.0),
    ])?;
    println!("K4 on a square: {:?}", metrics::evaluate(&k4, &square, None)?);

    // 3x3 grid, first regular, then with the centre pushed into a corner cell.
    let (g, faces) = grid_graph(3, 3)?;
    let regular = grid_layout(3, 3, 0.5);
    println!("regular 3x3 grid: {:?}", metrics::evaluate(&g, &regular, Some(&faces))?);

    let dented = regular.map(|p| if p == Point::new(0.5, 0.5) { Point::new(0.2, 0.2) } else { p });
    println!("dented 3x3 grid: {:?}", metrics::evaluate(&g, &dented, Some(&faces))?);

    let dart = [Point::new(0.0, 0.0), Point::new(2.0, 0.0), Point::new(0.5, 0.5), Point::new(0.0, 2.0)];
    println!("dart is convex: {}", metrics::is_convex_polygon(&dart));
    Ok(())
}
