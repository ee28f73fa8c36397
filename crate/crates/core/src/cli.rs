//! Command-line front end: `gen`, `layout`, `metrics`, `bench`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, CommandFactory, Parser, Subcommand};
use serde_json::json;

use crate::bench::{
    self, parse_algorithms, parse_grid, parse_radius_decay, parse_region, parse_seed_range, Algorithm,
    GraphSource, RunConfig,
};
use crate::{grid_graph, io, metrics, Error, IsomParams, Result, SomParams};

#[derive(Debug, Parser)]
#[command(name = "somlayout", version, about = "SOM / ISOM straight-line layouts of planar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit a generated grid graph (with faces) as JSON.
    Gen {
        #[arg(long, value_name = "RxC")]
        grid: String,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Lay out one graph; writes SVG and prints metrics JSON.
    Layout(LayoutArgs),
    /// Evaluate a layout file against a graph file.
    Metrics {
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
        #[arg(long, value_name = "PATH")]
        layout: PathBuf,
    },
    /// Run the seeded SOM-vs-ISOM benchmark; writes CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct ParamArgs {
    /// Iterations (SOM) or epochs (ISOM).
    #[arg(long)]
    t_max: Option<usize>,
    #[arg(long)]
    alpha_max: Option<f64>,
    #[arg(long)]
    alpha_min: Option<f64>,
    #[arg(long)]
    sigma_scale: Option<f64>,
    #[arg(long)]
    cooling: Option<f64>,
    #[arg(long)]
    max_adaption: Option<f64>,
    #[arg(long)]
    min_adaption: Option<f64>,
    /// Initial neighbourhood radius in hops.
    #[arg(long)]
    radius: Option<usize>,
    /// Final neighbourhood radius in hops.
    #[arg(long)]
    min_radius: Option<usize>,
    /// ISOM radius schedule: staged or per-epoch.
    #[arg(long)]
    radius_decay: Option<String>,
    /// square (default) or hexagon.
    #[arg(long)]
    region: Option<String>,
}

impl ParamArgs {
    fn has_som_only(&self) -> bool {
        self.alpha_max.is_some() || self.alpha_min.is_some() || self.sigma_scale.is_some()
    }

    fn has_isom_only(&self) -> bool {
        self.cooling.is_some()
            || self.max_adaption.is_some()
            || self.min_adaption.is_some()
            || self.radius_decay.is_some()
    }

    fn apply(&self, som: &mut SomParams, isom: &mut IsomParams, t_max_for: Option<Algorithm>) -> Result<()> {
        som.alpha_max = self.alpha_max.unwrap_or(som.alpha_max);
        som.alpha_min = self.alpha_min.unwrap_or(som.alpha_min);
        som.sigma_scale = self.sigma_scale.unwrap_or(som.sigma_scale);
        isom.cooling = self.cooling.unwrap_or(isom.cooling);
        isom.max_adaption = self.max_adaption.unwrap_or(isom.max_adaption);
        isom.min_adaption = self.min_adaption.unwrap_or(isom.min_adaption);
        if let Some(r) = self.radius {
            som.r_max = r;
            isom.r_max = r;
        }
        if let Some(r) = self.min_radius {
            som.r_min = r;
            isom.r_min = r;
        }
        if let Some(d) = &self.radius_decay {
            isom.radius_stage_length = parse_radius_decay(d)?;
        }
        if let Some(t) = self.t_max {
            match t_max_for {
                Some(Algorithm::Som) => som.t_max = t,
                Some(Algorithm::Isom) => isom.t_max = t,
                None => {
                    som.t_max = t;
                    isom.t_max = t;
                }
            }
        }
        som.validate()?;
        isom.validate()
    }
}

#[derive(Debug, Args)]
struct LayoutArgs {
    #[arg(long, value_name = "RxC", conflicts_with = "input", required_unless_present = "input")]
    grid: Option<String>,
    /// Graph JSON file.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    #[arg(long, default_value = "isom")]
    algorithm: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    params: ParamArgs,
    /// SVG output path.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Layout JSON output path.
    #[arg(long, value_name = "PATH")]
    layout_out: Option<PathBuf>,
    /// Metrics JSON output path (default: stdout).
    #[arg(long, value_name = "PATH")]
    metrics_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Flat TOML config; flags given alongside override it.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// som, isom or both.
    #[arg(long)]
    algorithm: Option<String>,
    #[arg(long, value_name = "RxC")]
    grid: Vec<String>,
    #[arg(long, value_name = "PATH")]
    input: Vec<PathBuf>,
    /// Inclusive seed range N..M.
    #[arg(long, value_name = "N..M")]
    seeds: Option<String>,
    #[command(flatten)]
    params: ParamArgs,
    /// CSV output path (default: stdout).
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
}

/// Parses `argv` (program name first) and runs the command. Returns the
/// process exit code.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let stdout = std::io::stdout();
    match run(cli.command, &mut stdout.lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::Config(_) | Error::InvalidParams(_)) {
                eprintln!();
                let _ = Cli::command().print_help();
            }
            2
        }
    }
}

fn write_or_print(path: Option<&PathBuf>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::io(p, e)),
        None => writeln!(out, "{text}").map_err(|e| Error::io("<stdout>", e)),
    }
}

fn run(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Gen { grid, out: path } => {
            let (rows, cols) = parse_grid(&grid)?;
            let (g, f) = grid_graph(rows, cols)?;
            write_or_print(path.as_ref(), &io::graph_to_json(&g, Some(&f)), out)
        }
        Command::Layout(args) => run_layout(args, out),
        Command::Metrics { input, layout } => {
            let (g, faces) = io::parse_graph_file(&input)?;
            let l = io::parse_layout_file(&layout)?;
            let report = metrics::evaluate(&g, &l, faces.as_ref())?;
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            write_or_print(None, &text, out)
        }
        Command::Bench(args) => run_bench(args, out),
    }
}

fn run_layout(args: LayoutArgs, out: &mut dyn Write) -> Result<()> {
    let algorithm: Algorithm = args.algorithm.parse().map_err(|e: Error| Error::Config(e.to_string()))?;
    match algorithm {
        Algorithm::Som if args.params.has_isom_only() => {
            return Err(Error::Config(
                "--cooling, --max-adaption, --min-adaption and --radius-decay apply to --algorithm isom".into(),
            ))
        }
        Algorithm::Isom if args.params.has_som_only() => {
            return Err(Error::Config(
                "--alpha-max, --alpha-min and --sigma-scale apply to --algorithm som".into(),
            ))
        }
        _ => {}
    }
    let source = match (&args.grid, &args.input) {
        (Some(grid), _) => {
            let (rows, cols) = parse_grid(grid)?;
            GraphSource::Grid { rows, cols }
        }
        (None, Some(p)) => GraphSource::File(p.clone()),
        (None, None) => return Err(Error::Config("one of --grid or --input is required".into())),
    };
    let (g, faces) = source.load()?;
    let region = parse_region(args.params.region.as_deref().unwrap_or("square"))?;
    let mut som = SomParams::default();
    let mut isom = IsomParams::default();
    args.params.apply(&mut som, &mut isom, Some(algorithm))?;

    let start = Instant::now();
    let layout = bench::run_layout(algorithm, &g, &region, &som, &isom, args.seed)?;
    let wall_time = start.elapsed().as_secs_f64();
    let report = metrics::evaluate(&g, &layout, faces.as_ref())?;

    if let Some(p) = &args.out {
        io::write_svg(&g, &layout, p, &io::SvgStyle::default())?;
    }
    if let Some(p) = &args.layout_out {
        io::write_layout_file(p, &layout)?;
    }
    let doc = json!({
        "algorithm": algorithm.as_str(),
        "graph": source.label(),
        "nodes": g.node_count(),
        "seed": args.seed,
        "wall_time_s": wall_time,
        "crossings": report.crossings,
        "area": report.area,
        "avg_edge_length": report.avg_edge_length,
        "convex_face_fraction": report.convex_face_fraction,
    });
    let text = serde_json::to_string_pretty(&doc).expect("metrics serialize");
    write_or_print(args.metrics_out.as_ref(), &text, out)
}

fn run_bench(args: BenchArgs, out: &mut dyn Write) -> Result<()> {
    let mut cfg = match &args.config {
        Some(p) => RunConfig::from_file(p)?,
        None => RunConfig::default(),
    };
    if let Some(a) = &args.algorithm {
        cfg.algorithms = parse_algorithms(a)?;
    }
    if !args.grid.is_empty() || !args.input.is_empty() {
        cfg.graphs.clear();
        for g in &args.grid {
            let (rows, cols) = parse_grid(g)?;
            cfg.graphs.push(GraphSource::Grid { rows, cols });
        }
        cfg.graphs.extend(args.input.iter().cloned().map(GraphSource::File));
    }
    if let Some(s) = &args.seeds {
        cfg.seeds = parse_seed_range(s)?;
    }
    if let Some(r) = &args.params.region {
        cfg.region = parse_region(r)?;
    }
    if args.params.t_max.is_some() && cfg.algorithms.len() > 1 {
        return Err(Error::Config(
            "--t-max is ambiguous with both algorithms; use som_t_max / isom_t_max in a config file".into(),
        ));
    }
    let t_max_for = cfg.algorithms.first().copied();
    args.params.apply(&mut cfg.som, &mut cfg.isom, t_max_for)?;
    if let Some(p) = &args.csv {
        cfg.csv = Some(p.clone());
    }

    let records = bench::run_benchmark(&cfg)?;
    for s in bench::summarize(&records) {
        eprintln!(
            "{:<5} {:<12} n={:<4} runs={:<3} crossings={:<8.2} area={:.4} avg_len={:.4} time={:.3}s",
            s.algorithm.as_str(),
            s.graph_label,
            s.node_count,
            s.runs,
            s.crossings,
            s.area,
            s.avg_edge_length,
            s.wall_time
        );
    }
    match &cfg.csv {
        Some(p) => {
            let file = std::fs::File::create(p).map_err(|e| Error::io(p, e))?;
            bench::write_csv(&records, file)
        }
        None => bench::write_csv(&records, out),
    }
}
