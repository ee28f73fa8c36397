//! File formats: graph JSON, layout JSON and SVG rendering.
//!
//! Graph JSON:
//!
//! ```json
//! {"nodes": 4, "edges": [[0,1],[1,2],[2,3],[3,0]], "faces": [[0,1,2,3]], "outer_face": null}
//! ```
//!
//! `faces` and `outer_face` are optional. Layout JSON is
//! `{"positions": [[x, y], ...]}`, one pair per node.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{Error, FaceList, Graph, Layout, Point, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    nodes: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    faces: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    outer_face: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LayoutDoc {
    positions: Vec<Point>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

/// Parses and validates a graph document. `context` prefixes error messages
/// (usually the file name).
pub fn parse_graph_str(text: &str, context: &str) -> Result<(Graph, Option<FaceList>)> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|source| Error::Json {
        context: context.to_string(),
        source,
    })?;
    let graph = Graph::new(doc.nodes, doc.edges.iter().map(|&[u, v]| (u, v)))
        .map_err(|e| Error::InvalidGraph(format!("{context}: {e}")))?;
    let faces = match doc.faces {
        Some(faces) => Some(
            FaceList::new(&graph, faces, doc.outer_face)
                .map_err(|e| Error::InvalidFaces(format!("{context}: {e}")))?,
        ),
        None if doc.outer_face.is_some() => {
            return Err(Error::InvalidFaces(format!(
                "{context}: outer_face given without faces"
            )))
        }
        None => None,
    };
    Ok((graph, faces))
}

pub fn parse_graph_file(path: impl AsRef<Path>) -> Result<(Graph, Option<FaceList>)> {
    let path = path.as_ref();
    parse_graph_str(&read(path)?, &path.display().to_string())
}

pub fn graph_to_json(g: &Graph, faces: Option<&FaceList>) -> String {
    let doc = GraphDoc {
        nodes: g.node_count(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        faces: faces.map(|f| f.faces().to_vec()),
        outer_face: faces.and_then(FaceList::outer_face),
    };
    serde_json::to_string(&doc).expect("graph document serializes")
}

pub fn write_graph_file(path: impl AsRef<Path>, g: &Graph, faces: Option<&FaceList>) -> Result<()> {
    write(path.as_ref(), &graph_to_json(g, faces))
}

pub fn parse_layout_str(text: &str, context: &str) -> Result<Layout> {
    let doc: LayoutDoc = serde_json::from_str(text).map_err(|source| Error::Json {
        context: context.to_string(),
        source,
    })?;
    Layout::new(doc.positions)
}

pub fn parse_layout_file(path: impl AsRef<Path>) -> Result<Layout> {
    let path = path.as_ref();
    parse_layout_str(&read(path)?, &path.display().to_string())
}

pub fn layout_to_json(layout: &Layout) -> String {
    let doc = LayoutDoc {
        positions: layout.positions().to_vec(),
    };
    serde_json::to_string(&doc).expect("layout document serializes")
}

pub fn write_layout_file(path: impl AsRef<Path>, layout: &Layout) -> Result<()> {
    write(path.as_ref(), &layout_to_json(layout))
}

/// Rendering options for [`render_svg`].
#[derive(Clone, Debug, PartialEq)]
pub struct SvgStyle {
    /// Pixel width of the image; height follows the aspect ratio.
    pub width_px: f64,
    /// Node radius as a fraction of the larger layout extent.
    pub node_radius: f64,
    /// Edge stroke width as a fraction of the larger layout extent.
    pub stroke_width: f64,
    pub node_fill: String,
    pub edge_stroke: String,
    pub background: Option<String>,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            width_px: 600.0,
            node_radius: 0.008,
            stroke_width: 0.003,
            node_fill: "#d62728".into(),
            edge_stroke: "#1f3b73".into(),
            background: Some("#ffffff".into()),
        }
    }
}

/// Straight-line drawing as SVG 1.1: one `<line>` per edge, one `<circle>`
/// per node, viewBox fit to the bounding box plus a 5% margin. The y axis is
/// flipped so that larger y is drawn higher.
pub fn render_svg(g: &Graph, layout: &Layout, style: &SvgStyle) -> Result<String> {
    layout.check_matches(g)?;
    let (lo, hi) = layout.bounding_box().ok_or(Error::EmptyLayout)?;
    let (w, h) = (hi.x - lo.x, hi.y - lo.y);
    let extent = if w.max(h) > 0.0 { w.max(h) } else { 1.0 };
    let margin = 0.05 * extent;
    let (vx, vy) = (lo.x - margin, lo.y - margin);
    let (vw, vh) = (w + 2.0 * margin, h + 2.0 * margin);
    let height_px = style.width_px * vh / vw;
    let flip = |p: Point| Point::new(p.x, lo.y + hi.y - p.y);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0}\" height=\"{:.0}\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">",
        style.width_px, height_px, vx, vy, vw, vh
    );
    if let Some(bg) = &style.background {
        let _ = writeln!(
            out,
            "  <rect x=\"{vx:.6}\" y=\"{vy:.6}\" width=\"{vw:.6}\" height=\"{vh:.6}\" fill=\"{}\"/>",
            escape(bg)
        );
    }
    let _ = writeln!(
        out,
        "  <g stroke=\"{}\" stroke-width=\"{:.6}\" stroke-linecap=\"round\">",
        escape(&style.edge_stroke),
        style.stroke_width * extent
    );
    for &(u, v) in g.edges() {
        let (a, b) = (flip(layout.position(u)), flip(layout.position(v)));
        let _ = writeln!(
            out,
            "    <line x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\"/>",
            a.x, a.y, b.x, b.y
        );
    }
    out.push_str("  </g>\n");
    let _ = writeln!(out, "  <g fill=\"{}\">", escape(&style.node_fill));
    let r = style.node_radius * extent;
    for p in layout.positions().iter().map(|&p| flip(p)) {
        let _ = writeln!(out, "    <circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"{r:.6}\"/>", p.x, p.y);
    }
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}

pub fn write_svg(g: &Graph, layout: &Layout, path: impl AsRef<Path>, style: &SvgStyle) -> Result<()> {
    write(path.as_ref(), &render_svg(g, layout, style)?)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
