//! Draws the same grid into a square and a hexagonal stimulus region.
//!
//!     cargo run --release --example hexagon_region

use somlayout::io::{write_svg, SvgStyle};
use somlayout::{grid_graph, isom, metrics, IsomParams, Point, Region};

fn main() -> somlayout::Result<()> {
    let (graph, faces) = grid_graph(6, 6)?;
    let params = IsomParams { t_max: 5_000, ..IsomParams::default() };
    let regions = [
        ("square", Region::unit_square()),
        ("hexagon", Region::hexagon(Point::new(0.5, 0.5), 0.5)?),
    ];
    for (name, region) in regions {
        let layout = isom::isom_layout(&graph, &region, &params, 0)?;
        let inside = layout.positions().iter().filter(|&&p| region.contains(p)).count();
        let report = metrics::evaluate(&graph, &layout, Some(&faces))?;
        let path = std::env::temp_dir().join(format!("grid6_{name}.svg"));
        write_svg(&graph, &layout, &path, &SvgStyle::default())?;
        println!(
            "{name:>8}: crossings {}, area {:.3}, {inside}/{} nodes inside  -> {}",
            report.crossings,
            report.area,
            graph.node_count(),
            path.display()
        );
    }
    Ok(())
}
