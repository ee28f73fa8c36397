//! Seeded SOM vs ISOM comparison on square grids, printed as a table.
//!
//!     cargo run --release --example compare_algorithms

use somlayout::bench::{self, Algorithm, GraphSource, RunConfig};

fn main() -> somlayout::Result<()> {
    let config = RunConfig {
        graphs: [4, 6, 8].iter().map(|&n| GraphSource::Grid { rows: n, cols: n }).collect(),
        seeds: (0..5).collect(),
        algorithms: vec![Algorithm::Som, Algorithm::Isom],
        ..RunConfig::default()
    };
    let records = bench::run_benchmark(&config)?;
    println!("{:<9} {:<5} {:>5} {:>10} {:>8} {:>9} {:>8}", "graph", "alg", "runs", "crossings", "area", "edge len", "time s");
    for s in bench::summarize(&records) {
        println!(
            "{:<9} {:<5} {:>5} {:>10.1} {:>8.4} {:>9.4} {:>8.4}",
            s.graph_label, s.algorithm.as_str(), s.runs, s.crossings, s.area, s.avg_edge_length, s.wall_time
        );
    }
    Ok(())
}
