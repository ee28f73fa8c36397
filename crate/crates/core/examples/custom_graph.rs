//! Loads a graph from JSON, lays it out with SOM, and writes layout and SVG.
//!
//!     cargo run --release --example custom_graph

use somlayout::io::{self, SvgStyle};
use somlayout::{metrics, som, Region, SomParams};

// A triangulated hexagon wheel: centre 0, rim 1..=6.
const WHEEL: &str = r#"{
  "nodes": 7,
  "edges": [[0,1],[0,2],[0,3],[0,4],[0,5],[0,6],
            [1,2],[2,3],[3,4],[4,5],[5,6],[6,1]],
  "faces": [[0,1,2],[0,2,3],[0,3,4],[0,4,5],[0,5,6],[0,6,1],[6,5,4,3,2,1]],
  "outer_face": 6
}"#;

fn main() -> somlayout::Result<()> {
    let (graph, faces) = io::parse_graph_str(WHEEL, "wheel")?;
    let params = SomParams { t_max: 200_000, ..SomParams::default() };
    let layout = som::som_layout(&graph, &Region::unit_square(), &params, 1)?;
    let report = metrics::evaluate(&graph, &layout, faces.as_ref())?;
    println!("{report:?}");

    let dir = std::env::temp_dir();
    io::write_layout_file(dir.join("wheel_layout.json"), &layout)?;
    io::write_svg(&graph, &layout, dir.join("wheel.svg"), &SvgStyle::default())?;
    println!("wrote {}", dir.join("wheel_layout.json").display());
    println!("{}", io::graph_to_json(&graph, faces.as_ref()));
    Ok(())
}
