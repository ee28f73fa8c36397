//! Seeded SOM-vs-ISOM benchmark harness and its CSV output.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Deserialize;

use crate::metrics::{evaluate, MetricsReport};
use crate::{grid_graph, io, isom, som, Error, FaceList, Graph, IsomParams, Layout, Region, Result, SomParams};

pub const CSV_HEADER: [&str; 9] = [
    "algorithm",
    "graph",
    "nodes",
    "seed",
    "wall_time_s",
    "crossings",
    "area",
    "avg_edge_length",
    "convex_face_fraction",
];

/// Node counts of the square grids in the standard comparison table.
pub const TABLE_NODE_COUNTS: [usize; 10] = [9, 16, 25, 36, 49, 64, 81, 100, 144, 225];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Som,
    Isom,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Som => "som",
            Algorithm::Isom => "isom",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "som" => Ok(Algorithm::Som),
            "isom" => Ok(Algorithm::Isom),
            other => Err(Error::Config(format!("unknown algorithm {other:?}, expected som or isom"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    Grid { rows: usize, cols: usize },
    File(PathBuf),
}

impl GraphSource {
    pub fn label(&self) -> String {
        match self {
            GraphSource::Grid { rows, cols } => format!("grid{rows}x{cols}"),
            GraphSource::File(p) => p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| p.display().to_string()),
        }
    }

    pub fn load(&self) -> Result<(Graph, Option<FaceList>)> {
        match self {
            GraphSource::Grid { rows, cols } => grid_graph(*rows, *cols).map(|(g, f)| (g, Some(f))),
            GraphSource::File(p) => io::parse_graph_file(p),
        }
    }
}

/// Parses `RxC`, e.g. `4x4`.
pub fn parse_grid(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Config(format!("grid must look like RxC (e.g. 4x4), got {s:?}"));
    let (r, c) = s.trim().split_once(['x', 'X']).ok_or_else(bad)?;
    let rows = r.trim().parse().map_err(|_| bad())?;
    let cols = c.trim().parse().map_err(|_| bad())?;
    Ok((rows, cols))
}

/// Parses an inclusive seed range `N..M` or a single seed `N`.
pub fn parse_seed_range(s: &str) -> Result<Vec<u64>> {
    let bad = || Error::Config(format!("seeds must look like N..M or N, got {s:?}"));
    match s.trim().split_once("..") {
        Some((a, b)) => {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b.trim().parse().map_err(|_| bad())?;
            if b < a {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![s.trim().parse().map_err(|_| bad())?]),
    }
}

pub fn parse_region(s: &str) -> Result<Region> {
    match s.to_ascii_lowercase().as_str() {
        "square" => Ok(Region::unit_square()),
        "hexagon" => Ok(Region::unit_hexagon()),
        other => Err(Error::Config(format!("unknown region {other:?}, expected square or hexagon"))),
    }
}

/// Everything a benchmark run needs.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub algorithms: Vec<Algorithm>,
    pub graphs: Vec<GraphSource>,
    pub region: Region,
    pub som: SomParams,
    pub isom: IsomParams,
    pub seeds: Vec<u64>,
    pub csv: Option<PathBuf>,
}

impl Default for RunConfig {
    /// The standard comparison: square grids with the table's node counts,
    /// both algorithms, seeds 0..=9.
    fn default() -> Self {
        RunConfig {
            algorithms: vec![Algorithm::Som, Algorithm::Isom],
            graphs: TABLE_NODE_COUNTS
                .iter()
                .map(|&n| {
                    let side = (n as f64).sqrt().round() as usize;
                    GraphSource::Grid { rows: side, cols: side }
                })
                .collect(),
            region: Region::unit_square(),
            som: SomParams::default(),
            isom: IsomParams::default(),
            seeds: (0..10).collect(),
            csv: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.seeds.is_empty() {
            return Err(Error::Config("at least one seed is required".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::Config("at least one algorithm is required".into()));
        }
        if self.graphs.is_empty() {
            return Err(Error::Config("at least one graph is required".into()));
        }
        self.som.validate()?;
        self.isom.validate()
    }

    /// Reads a flat TOML config; see [`RunConfig::from_toml_str`].
    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg = Self::from_toml_str(&text)?;
        // relative graph and csv paths resolve against the config's directory
        if let Some(dir) = path.parent() {
            for g in &mut cfg.graphs {
                if let GraphSource::File(p) = g {
                    if p.is_relative() {
                        *p = dir.join(&*p);
                    }
                }
            }
            if let Some(csv) = &mut cfg.csv {
                if csv.is_relative() {
                    *csv = dir.join(&*csv);
                }
            }
        }
        Ok(cfg)
    }

    /// Flat key-value config. Every key is optional; omitted keys keep the
    /// defaults of [`RunConfig::default`].
    ///
    /// ```toml
    /// algorithm = "both"          # som | isom | both
    /// grid = ["3x3", "4x4"]       # replaces the default grid list
    /// input = ["my_graph.json"]   # extra graphs from files
    /// seeds = "0..9"              # inclusive range, or a list [1, 2, 3]
    /// region = "square"           # square | hexagon
    /// som_t_max = 1000000
    /// alpha_max = 0.5
    /// alpha_min = 0.1
    /// sigma_scale = 1.0
    /// isom_t_max = 1000
    /// cooling = 1.0
    /// max_adaption = 0.8
    /// min_adaption = 0.15
    /// radius = 3                  # initial radius, both algorithms
    /// min_radius = 1              # final radius, both algorithms
    /// radius_decay = "staged"     # staged | per-epoch (ISOM)
    /// csv = "results.csv"
    /// ```
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let doc: ConfigDoc = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        doc.into_config()
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum SeedsSpec {
    Range(String),
    List(Vec<u64>),
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigDoc {
    algorithm: Option<String>,
    grid: Option<Vec<String>>,
    input: Option<Vec<PathBuf>>,
    seeds: Option<SeedsSpec>,
    region: Option<String>,
    som_t_max: Option<usize>,
    alpha_max: Option<f64>,
    alpha_min: Option<f64>,
    sigma_scale: Option<f64>,
    isom_t_max: Option<usize>,
    cooling: Option<f64>,
    max_adaption: Option<f64>,
    min_adaption: Option<f64>,
    radius: Option<usize>,
    min_radius: Option<usize>,
    radius_decay: Option<String>,
    csv: Option<PathBuf>,
}

impl ConfigDoc {
    fn into_config(self) -> Result<RunConfig> {
        let mut cfg = RunConfig::default();
        if let Some(a) = self.algorithm {
            cfg.algorithms = parse_algorithms(&a)?;
        }
        if self.grid.is_some() || self.input.is_some() {
            cfg.graphs.clear();
        }
        for g in self.grid.unwrap_or_default() {
            let (rows, cols) = parse_grid(&g)?;
            cfg.graphs.push(GraphSource::Grid { rows, cols });
        }
        cfg.graphs.extend(self.input.unwrap_or_default().into_iter().map(GraphSource::File));
        match self.seeds {
            Some(SeedsSpec::Range(s)) => cfg.seeds = parse_seed_range(&s)?,
            Some(SeedsSpec::List(l)) => cfg.seeds = l,
            None => {}
        }
        if let Some(r) = self.region {
            cfg.region = parse_region(&r)?;
        }
        let som = &mut cfg.som;
        som.t_max = self.som_t_max.unwrap_or(som.t_max);
        som.alpha_max = self.alpha_max.unwrap_or(som.alpha_max);
        som.alpha_min = self.alpha_min.unwrap_or(som.alpha_min);
        som.sigma_scale = self.sigma_scale.unwrap_or(som.sigma_scale);
        let isom = &mut cfg.isom;
        isom.t_max = self.isom_t_max.unwrap_or(isom.t_max);
        isom.cooling = self.cooling.unwrap_or(isom.cooling);
        isom.max_adaption = self.max_adaption.unwrap_or(isom.max_adaption);
        isom.min_adaption = self.min_adaption.unwrap_or(isom.min_adaption);
        if let Some(r) = self.radius {
            cfg.som.r_max = r;
            cfg.isom.r_max = r;
        }
        if let Some(r) = self.min_radius {
            cfg.som.r_min = r;
            cfg.isom.r_min = r;
        }
        if let Some(d) = self.radius_decay {
            cfg.isom.radius_stage_length = parse_radius_decay(&d)?;
        }
        cfg.csv = self.csv;
        cfg.validate()?;
        Ok(cfg)
    }
}

/// `som`, `isom` or `both`.
pub fn parse_algorithms(s: &str) -> Result<Vec<Algorithm>> {
    if s.eq_ignore_ascii_case("both") {
        Ok(vec![Algorithm::Som, Algorithm::Isom])
    } else {
        Ok(vec![s.parse()?])
    }
}

/// `staged` (equal time per radius) or `per-epoch`.
pub fn parse_radius_decay(s: &str) -> Result<Option<usize>> {
    match s.to_ascii_lowercase().as_str() {
        "staged" => Ok(None),
        "per-epoch" | "per_epoch" => Ok(Some(1)),
        other => Err(Error::Config(format!(
            "unknown radius_decay {other:?}, expected staged or per-epoch"
        ))),
    }
}

/// Runs one layout algorithm on `g`.
pub fn run_layout(
    algorithm: Algorithm,
    g: &Graph,
    region: &Region,
    som_params: &SomParams,
    isom_params: &IsomParams,
    seed: u64,
) -> Result<Layout> {
    match algorithm {
        Algorithm::Som => som::som_layout(g, region, som_params, seed),
        Algorithm::Isom => isom::isom_layout(g, region, isom_params, seed),
    }
}

/// One seeded run. A run that failed keeps its error message in `outcome`.
#[derive(Clone, Debug, PartialEq)]
pub struct RunRecord {
    pub algorithm: Algorithm,
    pub graph_label: String,
    pub node_count: usize,
    pub seed: u64,
    pub wall_time: f64,
    pub outcome: std::result::Result<MetricsReport, String>,
}

impl RunRecord {
    pub fn metrics(&self) -> Option<&MetricsReport> {
        self.outcome.as_ref().ok()
    }
}

/// Per-(graph, algorithm) means over the successful runs.
#[derive(Clone, Debug, PartialEq)]
pub struct Summary {
    pub algorithm: Algorithm,
    pub graph_label: String,
    pub node_count: usize,
    pub runs: usize,
    pub wall_time: f64,
    pub crossings: f64,
    pub area: f64,
    pub avg_edge_length: f64,
    pub convex_face_fraction: Option<f64>,
}

/// Runs every (graph, algorithm, seed) cell of `config`.
///
/// Cells run in parallel; the result keeps config order (graph, then
/// algorithm, then seed).
pub fn run_benchmark(config: &RunConfig) -> Result<Vec<RunRecord>> {
    config.validate()?;
    let graphs = config
        .graphs
        .iter()
        .map(|src| src.load().map(|(g, f)| (src.label(), g, f)))
        .collect::<Result<Vec<_>>>()?;
    let cells: Vec<_> = graphs
        .iter()
        .flat_map(|graph| {
            config
                .algorithms
                .iter()
                .flat_map(move |&alg| config.seeds.iter().map(move |&seed| (graph, alg, seed)))
        })
        .collect();
    Ok(cells
        .into_par_iter()
        .map(|((label, g, faces), algorithm, seed)| {
            let start = Instant::now();
            let layout = run_layout(algorithm, g, &config.region, &config.som, &config.isom, seed);
            let wall_time = start.elapsed().as_secs_f64();
            let outcome = layout
                .and_then(|l| evaluate(g, &l, faces.as_ref()))
                .map_err(|e| e.to_string());
            RunRecord {
                algorithm,
                graph_label: label.clone(),
                node_count: g.node_count(),
                seed,
                wall_time,
                outcome,
            }
        })
        .collect())
}

/// Groups consecutive records with the same graph and algorithm.
pub fn summarize(records: &[RunRecord]) -> Vec<Summary> {
    let mut out = Vec::new();
    for group in records.chunk_by(|a, b| a.algorithm == b.algorithm && a.graph_label == b.graph_label) {
        let ok: Vec<&MetricsReport> = group.iter().filter_map(RunRecord::metrics).collect();
        let n = ok.len() as f64;
        let mean = |f: &dyn Fn(&MetricsReport) -> f64| ok.iter().map(|m| f(m)).sum::<f64>() / n;
        let convex: Option<Vec<f64>> = ok.iter().map(|m| m.convex_face_fraction).collect();
        out.push(Summary {
            algorithm: group[0].algorithm,
            graph_label: group[0].graph_label.clone(),
            node_count: group[0].node_count,
            runs: ok.len(),
            wall_time: group.iter().map(|r| r.wall_time).sum::<f64>() / group.len() as f64,
            crossings: mean(&|m| m.crossings as f64),
            area: mean(&|m| m.area),
            avg_edge_length: mean(&|m| m.avg_edge_length),
            convex_face_fraction: convex.filter(|c| !c.is_empty()).map(|c| c.iter().sum::<f64>() / n),
        });
    }
    out
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Writes the data rows, each (graph, algorithm) group followed by its mean
/// row (seed column `mean`). Failed runs carry `error: <message>` in the
/// crossings column and leave the remaining metric columns empty.
pub fn write_csv<W: Write>(records: &[RunRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    let summaries = summarize(records);
    let groups = records.chunk_by(|a, b| a.algorithm == b.algorithm && a.graph_label == b.graph_label);
    for (group, summary) in groups.zip(&summaries) {
        for r in group {
            let head = [
                r.algorithm.to_string(),
                r.graph_label.clone(),
                r.node_count.to_string(),
                r.seed.to_string(),
                format!("{:.6}", r.wall_time),
            ];
            let tail = match &r.outcome {
                Ok(m) => [
                    m.crossings.to_string(),
                    m.area.to_string(),
                    m.avg_edge_length.to_string(),
                    fmt_opt(m.convex_face_fraction),
                ],
                Err(e) => [format!("error: {e}"), String::new(), String::new(), String::new()],
            };
            w.write_record(head.iter().chain(tail.iter()))?;
        }
        w.write_record([
            summary.algorithm.to_string(),
            summary.graph_label.clone(),
            summary.node_count.to_string(),
            "mean".to_string(),
            format!("{:.6}", summary.wall_time),
            summary.crossings.to_string(),
            summary.area.to_string(),
            summary.avg_edge_length.to_string(),
            fmt_opt(summary.convex_face_fraction),
        ])?;
    }
    w.flush().map_err(|e| Error::Csv(e.into()))?;
    Ok(())
}

pub fn csv_string(records: &[RunRecord]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(records, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_config() -> RunConfig {
        RunConfig {
            graphs: [3, 4, 5].iter().map(|&n| GraphSource::Grid { rows: n, cols: n }).collect(),
            seeds: vec![1, 2, 3],
            som: SomParams {
                t_max: 5_000,
                ..SomParams::default()
            },
            ..RunConfig::default()
        }
    }

    #[test]
    fn parsers() {
        assert_eq!(parse_grid("4x4").unwrap(), (4, 4));
        assert_eq!(parse_grid("10X3").unwrap(), (10, 3));
        assert!(parse_grid("4").is_err());
        assert_eq!(parse_seed_range("3..5").unwrap(), vec![3, 4, 5]);
        assert_eq!(parse_seed_range("7").unwrap(), vec![7]);
        assert!(parse_seed_range("5..3").is_err());
        assert!("foo".parse::<Algorithm>().is_err());
        assert_eq!(parse_algorithms("both").unwrap().len(), 2);
    }

    #[test]
    fn default_config_matches_table_sizes() {
        let cfg = RunConfig::default();
        let nodes: Vec<usize> = cfg
            .graphs
            .iter()
            .map(|g| g.load().unwrap().0.node_count())
            .collect();
        assert_eq!(nodes, TABLE_NODE_COUNTS);
    }

    #[test]
    fn cardinality() {
        let records = run_benchmark(&quick_config()).unwrap();
        assert_eq!(records.len(), 18);
        assert_eq!(summarize(&records).len(), 6);
        let csv = csv_string(&records).unwrap();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER.join(","));
        assert_eq!(lines.len(), 1 + 18 + 6);
        assert_eq!(lines.iter().filter(|l| l.split(',').nth(3) == Some("mean")).count(), 6);
    }

    #[test]
    fn config_order_is_kept() {
        let records = run_benchmark(&quick_config()).unwrap();
        let keys: Vec<_> = records.iter().map(|r| (r.node_count, r.algorithm, r.seed)).collect();
        let mut expected = Vec::new();
        for n in [9, 16, 25] {
            for a in [Algorithm::Som, Algorithm::Isom] {
                for s in [1, 2, 3] {
                    expected.push((n, a, s));
                }
            }
        }
        assert_eq!(keys, expected);
    }

    #[test]
    fn failed_runs_are_marked() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("edgeless.json");
        std::fs::write(&path, r#"{"nodes": 3, "edges": []}"#).unwrap();
        let cfg = RunConfig {
            graphs: vec![GraphSource::File(path)],
            seeds: vec![0],
            algorithms: vec![Algorithm::Isom],
            ..RunConfig::default()
        };
        let records = run_benchmark(&cfg).unwrap();
        assert!(records[0].outcome.is_err());
        let csv = csv_string(&records).unwrap();
        assert!(csv.lines().nth(1).unwrap().contains("error: graph has no edges"), "{csv}");
    }

    #[test]
    fn toml_config() {
        let cfg = RunConfig::from_toml_str(
            r#"
            algorithm = "isom"
            grid = ["3x3", "5x4"]
            seeds = "2..4"
            region = "hexagon"
            isom_t_max = 500
            cooling = 2.0
            radius = 2
            min_radius = 0
            radius_decay = "per-epoch"
            "#,
        )
        .unwrap();
        assert_eq!(cfg.algorithms, vec![Algorithm::Isom]);
        assert_eq!(cfg.graphs, vec![GraphSource::Grid { rows: 3, cols: 3 }, GraphSource::Grid { rows: 5, cols: 4 }]);
        assert_eq!(cfg.seeds, vec![2, 3, 4]);
        assert_eq!(cfg.region, Region::unit_hexagon());
        assert_eq!(cfg.isom.t_max, 500);
        assert_eq!(cfg.isom.cooling, 2.0);
        assert_eq!((cfg.isom.r_max, cfg.isom.r_min, cfg.som.r_max), (2, 0, 2));
        assert_eq!(cfg.isom.radius_stage_length, Some(1));

        let list = RunConfig::from_toml_str("seeds = [5, 9]").unwrap();
        assert_eq!(list.seeds, vec![5, 9]);
        assert!(RunConfig::from_toml_str("bogus = 1").is_err());
        assert!(RunConfig::from_toml_str("seeds = []").is_err());
        assert!(RunConfig::from_toml_str("alpha_min = 0.9").is_err());
    }
}
