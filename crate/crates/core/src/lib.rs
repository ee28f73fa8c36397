//! Competitive-learning layouts for straight-line drawings of planar graphs.
//!
//! Two algorithms share one data model:
//!
//! * [`som`]: the stimulus-driven Kohonen map. A random point is drawn from the
//!   stimulus region, the nearest node wins, and the winner plus its
//!   topological neighbours are pulled toward the point with a Gaussian
//!   neighbourhood falloff.
//! * [`isom`]: the inverted map. Same competition, but with an exponentially
//!   cooled adaption and a `2^-d` neighbourhood falloff.
//!
//! The graph being drawn doubles as the map lattice: the neighbourhood of the
//! winner is measured in hops ([`Graph::distances_within`]).
//!
//! [`metrics`] scores a drawing (edge crossings, bounding area, average edge
//! length, inner-face convexity), [`io`] reads and writes graphs, layouts, SVG
//! and CSV, and [`bench`] runs seeded SOM-vs-ISOM comparisons.
//!
//! ```
//! use somlayout::{grid_graph, isom, metrics, IsomParams, Region};
//!
//! let (graph, faces) = grid_graph(4, 4).unwrap();
//! let layout = isom::isom_layout(&graph, &Region::unit_square(), &IsomParams::default(), 7).unwrap();
//! let report = metrics::evaluate(&graph, &layout, Some(&faces)).unwrap();
//! assert!(report.area <= 1.0);
//! ```

pub mod bench;
pub mod cli;
mod error;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod isom;
pub mod layout;
pub mod metrics;
pub mod region;
pub mod rng;
pub mod som;

pub use error::{Error, Result};
pub use geometry::Point;
pub use graph::{grid_graph, FaceList, Graph, Neighborhoods};
pub use isom::IsomParams;
pub use layout::Layout;
pub use metrics::MetricsReport;
pub use region::Region;
pub use som::SomParams;
