//! Untangles a random drawing of a grid with ISOM and writes before/after SVGs.
//!
//!     cargo run --release --example untangle_grid -- 10 3

use std::path::PathBuf;

use somlayout::io::{write_svg, SvgStyle};
use somlayout::layout::{random_layout_from, Layout};
use somlayout::{grid_graph, isom, metrics, rng, IsomParams, Region};

fn main() -> somlayout::Result<()> {
    let mut args = std::env::args().skip(1);
    let side: usize = args.next().map_or(10, |s| s.parse().expect("side length"));
    let seed: u64 = args.next().map_or(3, |s| s.parse().expect("seed"));

    let (graph, faces) = grid_graph(side, side)?;
    let region = Region::unit_square();
    // Larger graphs need more epochs than the default 1000.
    let params = IsomParams { t_max: 1_000 * graph.node_count().max(10), ..IsomParams::default() };

    let mut rng = rng::seeded_rng(seed);
    let before: Layout = random_layout_from(&graph, &region, &mut rng);
    let mut after = before.clone();
    isom::isom_train(&mut after, &graph, &region, &params, &mut rng)?;

    let out = std::env::temp_dir();
    for (name, layout) in [("before", &before), ("after", &after)] {
        let report = metrics::evaluate(&graph, layout, Some(&faces))?;
        let path: PathBuf = out.join(format!("grid{side}_{name}.svg"));
        write_svg(&graph, layout, &path, &SvgStyle::default())?;
        println!(
            "{name:>6}: {:>5} crossings, area {:.3}, convex faces {:.2}  -> {}",
            report.crossings,
            report.area,
            report.convex_face_fraction.unwrap_or(f64::NAN),
            path.display()
        );
    }
    Ok(())
}
