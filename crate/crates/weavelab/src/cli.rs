//! Command-line front end. One thin binary with five subcommands — `gen`,
//! `det`, `bounds`, `angles`, `scan` — all delegating to the library.
//!
//! Exit codes: 0 success, 2 usage/parameter errors, 3 domain errors,
//! 4 numeric errors. Floats print with 12 significant digits and identical
//! invocations produce byte-identical output; `WEAVELAB_THREADS` sets the
//! default worker count for scans.

use crate::anglestruct::{
    angle_space, build_weaving_triangulation, maximize_volume, octahedral_point,
};
use crate::density::{
    crossing_change_experiment, folner_density_experiment, grid_entropy_scan, mu_density_scan,
    spectrum_sample, weaving_scan, DensityRecord, ScanConfig,
};
use crate::diagrams::{
    braid_closure, grid_weave_closure, weaving_diagram, BraidWord, DiagramJson, LinkDiagram,
};
use crate::hypgeom::{alternating_bounds, twist_bounds, weaving_bounds, VolumeBounds};
use crate::spanning::{determinant, determinant_density, log_determinant};
use crate::{Error, Result};
use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "weavelab",
    version,
    about = "Weaving-knot diagrams, determinants, volume bounds, angle structures, scans"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a link diagram and write it as JSON or PD codes.
    Gen(GenArgs),
    /// Knot determinant, log-determinant, and determinant density.
    Det(DetArgs),
    /// Closed-form volume bounds.
    Bounds(BoundsArgs),
    /// Build the braid-axis triangulation and maximize its volume.
    Angles(AnglesArgs),
    /// Batch experiments.
    Scan(ScanArgs),
}

#[derive(Args)]
struct OutputOpt {
    /// Output path; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    what: GenCmd,
    #[command(flatten)]
    output: OutputOpt,
}

#[derive(Subcommand)]
enum GenCmd {
    /// The weaving diagram W(p,q).
    Weave {
        #[arg(short)]
        p: usize,
        #[arg(short)]
        q: usize,
        /// Emit PD-code lines instead of JSON.
        #[arg(long)]
        pd: bool,
    },
    /// Plaitwork closure of the m×n square-lattice block.
    Grid {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(long)]
        pd: bool,
    },
    /// Trace closure of a braid word.
    Braid {
        /// Strand count.
        #[arg(short)]
        p: usize,
        /// Whitespace-separated signed generator indices, e.g. "1 -2 1".
        #[arg(short)]
        w: String,
        /// Override crossings with the alternating assignment.
        #[arg(long)]
        alternating: bool,
        #[arg(long)]
        pd: bool,
    },
}

#[derive(Args)]
struct DetArgs {
    /// Weaving diagram parameters: --weave P Q.
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    weave: Option<Vec<usize>>,
    /// Read the diagram from a JSON file.
    #[arg(long, conflicts_with = "weave")]
    file: Option<PathBuf>,
    /// Print the log-determinant (floating path for alternating inputs).
    #[arg(long)]
    log: bool,
    /// Print the determinant density 2π·log det / c.
    #[arg(long)]
    density: bool,
    /// Emit the full record as JSON instead of plain values.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    output: OutputOpt,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(subcommand)]
    what: BoundsCmd,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(flatten)]
    output: OutputOpt,
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// Weaving-knot bounds for W(p,q).
    Weave {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: u64,
    },
    /// Bounds for a prime alternating twist-reduced bigon-free diagram.
    Alternating {
        #[arg(short)]
        c: u64,
    },
    /// Twist-number bounds.
    Twist {
        #[arg(short)]
        t: u64,
    },
}

#[derive(Args)]
struct AnglesArgs {
    /// Strand count of the one-pass weave, p >= 3.
    #[arg(short)]
    p: usize,
    /// Report q times the maximized volume (q-fold cover).
    #[arg(short, default_value_t = 1)]
    q: usize,
    /// Write the ascent trace as CSV (iteration, volume, grad-norm).
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Write the triangulation as JSON.
    #[arg(long)]
    triangulation: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    output: OutputOpt,
}

#[derive(Args)]
struct ScanArgs {
    #[command(subcommand)]
    what: ScanCmd,
    #[command(flatten)]
    output: OutputOpt,
}

#[derive(Subcommand)]
enum ScanCmd {
    /// Weaving grid scan with density and ordering verdicts.
    Weave {
        /// p range, inclusive: "3..12" or a single value.
        #[arg(long, required_unless_present = "config")]
        p: Option<String>,
        /// q range, inclusive.
        #[arg(long, required_unless_present = "config")]
        q: Option<String>,
        /// Key=value config file with keys p, q, exact, axis, jobs,
        /// format, spectrum; explicit flags win.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Exact big-integer determinants.
        #[arg(long)]
        exact: bool,
        /// Also maximize the axis volume per cell.
        #[arg(long)]
        axis: bool,
        /// Worker threads (default WEAVELAB_THREADS or 1).
        #[arg(long)]
        jobs: Option<usize>,
        /// Output format: jsonl or csv.
        #[arg(long)]
        format: Option<String>,
        /// Append a density-spectrum summary (jsonl only).
        #[arg(long)]
        spectrum: bool,
    },
    /// Spanning-tree entropy of n×n grid graphs.
    GridEntropy {
        /// n values: "2..20" or "2,4,6".
        #[arg(long)]
        n: String,
        /// Largest n computed with exact big-integer counts.
        #[arg(long, default_value_t = crate::density::thresholds::GRID_ENTROPY_EXACT_MAX)]
        exact_max: usize,
        #[arg(long, default_value = "jsonl")]
        format: String,
    },
    /// Determinant density of grid-weave closures.
    Folner {
        #[arg(long)]
        n: String,
        #[arg(long, default_value = "jsonl")]
        format: String,
    },
    /// Jones-average density table.
    Mu {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value = "jsonl")]
        format: String,
    },
    /// Crossing-change monotonicity sweep over the bundled corpus.
    CrossingChange {
        #[arg(long, default_value_t = 7)]
        max_crossings: usize,
    },
}

/// Entry point used by the binary; returns the process exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("weavelab: {e}");
            e.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Gen(args) => {
            let (d, pd) = match args.what {
                GenCmd::Weave { p, q, pd } => (weaving_diagram(p, q)?, pd),
                GenCmd::Grid { m, n, pd } => (grid_weave_closure(m, n)?.diagram, pd),
                GenCmd::Braid {
                    p,
                    w,
                    alternating,
                    pd,
                } => (braid_closure(&BraidWord::parse(p, &w)?, alternating)?, pd),
            };
            let text = if pd {
                let mut s = d.pd_codes().join("\n");
                s.push('\n');
                s
            } else {
                json_line(&d.to_json())?
            };
            emit(&args.output, &text)
        }
        Cmd::Det(args) => {
            let d = load_diagram(&args)?;
            let det = determinant(&d)?;
            let mut lines = Vec::new();
            let mut record = serde_json::Map::new();
            record.insert("name".into(), d.name().into());
            record.insert("crossings".into(), d.crossing_count().into());
            record.insert(
                "determinant".into(),
                det.exact.as_ref().unwrap().to_string().into(),
            );
            if !args.log && !args.density {
                lines.push(det.exact.as_ref().unwrap().to_string());
            }
            if args.log {
                let log = if d.is_alternating() {
                    log_determinant(&d)?.log_value
                } else {
                    det.log_value
                };
                record.insert("log_det".into(), sig12(log).into());
                lines.push(fmt12(log));
            }
            if args.density {
                let density = determinant_density(&d)?;
                record.insert("det_density".into(), sig12(density).into());
                lines.push(fmt12(density));
            }
            let text = if args.json {
                json_line(&serde_json::Value::Object(record))?
            } else {
                lines.join("\n") + "\n"
            };
            emit(&args.output, &text)
        }
        Cmd::Bounds(args) => {
            let b: VolumeBounds = match args.what {
                BoundsCmd::Weave { p, q } => weaving_bounds(p, q)?,
                BoundsCmd::Alternating { c } => alternating_bounds(c)?,
                BoundsCmd::Twist { t } => twist_bounds(t)?,
            };
            let text = if args.json {
                json_line(&b)?
            } else {
                let mut s = String::new();
                match b.lower {
                    Some(l) => s.push_str(&format!("lower {}\n", fmt12(l))),
                    None => s.push_str("lower none\n"),
                }
                s.push_str(&format!("upper {}\n", fmt12(b.upper)));
                if let Some(w) = &b.warning {
                    s.push_str(&format!("warning {w}\n"));
                }
                s
            };
            emit(&args.output, &text)
        }
        Cmd::Angles(args) => {
            if args.q < 1 {
                return Err(Error::parameter("q must be at least 1"));
            }
            let tri = build_weaving_triangulation(args.p).map_err(|e| match e {
                // p < 3 is a usage error at the CLI surface
                Error::Domain(m) if args.p < 3 => Error::Parameter(m),
                other => other,
            })?;
            let space = angle_space(&tri)?;
            let init = octahedral_point(&tri)?;
            let feas_residual = space.residual(&init);
            let result = maximize_volume(&space, &init)?;
            if let Some(path) = &args.trace {
                let mut csv = String::from("iteration,volume,grad_norm\n");
                for row in &result.trace {
                    csv.push_str(&format!(
                        "{},{},{}\n",
                        row.iteration,
                        fmt12(row.volume),
                        fmt12(row.grad_norm)
                    ));
                }
                std::fs::write(path, csv)?;
            }
            if let Some(path) = &args.triangulation {
                std::fs::write(path, json_line(&tri)?)?;
            }
            let bounds = weaving_bounds(args.p as u64, args.q as u64)?;
            let volume = args.q as f64 * result.volume;
            let report = serde_json::json!({
                "p": args.p,
                "q": args.q,
                "tetrahedra": tri.tet_count(),
                "edge_classes": tri.class_count(),
                "dimension": space.dimension(),
                "volume": sig12(volume),
                "iterations": result.iterations,
                "kkt_residual": sig12(result.kkt_residual),
                "feasibility_residual": sig12(feas_residual),
                "reference_volume": sig12(args.q as f64
                    * crate::anglestruct::total_volume(&tri, &init)?),
                "upper_reference": sig12(bounds.upper),
            });
            let text = if args.json {
                json_line(&report)?
            } else {
                format!(
                    "volume {}\nkkt_residual {}\nfeasibility_residual {}\ndimension {}\niterations {}\n",
                    fmt12(volume),
                    fmt12(result.kkt_residual),
                    fmt12(feas_residual),
                    space.dimension(),
                    result.iterations
                )
            };
            emit(&args.output, &text)
        }
        Cmd::Scan(args) => {
            let text = match args.what {
                ScanCmd::Weave {
                    p,
                    q,
                    config,
                    exact,
                    axis,
                    jobs,
                    format,
                    spectrum,
                } => {
                    let file = config.as_deref().map(read_config).transpose()?;
                    let file = file.unwrap_or_default();
                    let lookup = |key: &str| file.iter().find(|(k, _)| k == key).map(|(_, v)| v);
                    let p = match p {
                        Some(p) => p,
                        None => lookup("p")
                            .cloned()
                            .ok_or_else(|| Error::parameter("missing p (flag or config)"))?,
                    };
                    let q = match q {
                        Some(q) => q,
                        None => lookup("q")
                            .cloned()
                            .ok_or_else(|| Error::parameter("missing q (flag or config)"))?,
                    };
                    let (p_min, p_max) = parse_range(&p)?;
                    let (q_min, q_max) = parse_range(&q)?;
                    let truthy = |key: &str| lookup(key).map(|v| v == "true").unwrap_or(false);
                    let mut cfg = ScanConfig::new(p_min, p_max, q_min, q_max)?;
                    cfg.exact = exact || truthy("exact");
                    cfg.include_axis = axis || truthy("axis");
                    cfg.jobs = jobs
                        .or_else(|| lookup("jobs").and_then(|v| v.parse().ok()))
                        .unwrap_or_else(default_jobs);
                    let spectrum = spectrum || truthy("spectrum");
                    let format = format
                        .or_else(|| lookup("format").cloned())
                        .unwrap_or_else(|| "jsonl".into());
                    let out = weaving_scan(&cfg)?;
                    match format.as_str() {
                        "jsonl" => {
                            let mut s = String::new();
                            for r in &out.records {
                                s.push_str(&json_line(r)?);
                            }
                            for f in &out.failures {
                                s.push_str(&json_line(f)?);
                            }
                            if spectrum {
                                s.push_str(&json_line(&spectrum_sample(&out.records)?)?);
                            }
                            s
                        }
                        "csv" => records_csv(&out.records),
                        other => return Err(Error::parameter(format!("unknown format {other:?}"))),
                    }
                }
                ScanCmd::GridEntropy {
                    n,
                    exact_max,
                    format,
                } => {
                    let rows = grid_entropy_scan(&parse_list(&n)?, exact_max)?;
                    table(
                        &rows,
                        &format,
                        |r| {
                            vec![
                                r.n.to_string(),
                                fmt12(r.log_tau),
                                fmt12(r.entropy),
                                r.exact.to_string(),
                                fmt12(r.gap_to_limit),
                            ]
                        },
                        "n,log_tau,entropy,exact,gap_to_limit",
                    )?
                }
                ScanCmd::Folner { n, format } => {
                    let rows = folner_density_experiment(&parse_list(&n)?)?;
                    table(
                        &rows,
                        &format,
                        |r| {
                            vec![
                                r.n.to_string(),
                                r.crossings.to_string(),
                                r.block_vertices.to_string(),
                                fmt12(r.block_ratio),
                                fmt12(r.det_density),
                            ]
                        },
                        "n,crossings,block_vertices,block_ratio,det_density",
                    )?
                }
                ScanCmd::Mu {
                    p,
                    q,
                    exact,
                    format,
                } => {
                    let (p_min, p_max) = parse_range(&p)?;
                    let (q_min, q_max) = parse_range(&q)?;
                    let mut cfg = ScanConfig::new(p_min, p_max, q_min, q_max)?;
                    cfg.exact = exact;
                    let rows = mu_density_scan(&cfg)?;
                    table(
                        &rows,
                        &format,
                        |r| {
                            vec![
                                r.p.to_string(),
                                r.q.to_string(),
                                r.c.to_string(),
                                fmt12(r.det_density),
                                fmt12(r.mu_density),
                                fmt12(r.gap),
                                fmt12(r.identity_residual),
                            ]
                        },
                        "p,q,c,det_density,mu_density,gap,identity_residual",
                    )?
                }
                ScanCmd::CrossingChange { max_crossings } => {
                    let corpus = bundled_corpus()?;
                    let report = crossing_change_experiment(&corpus, max_crossings)?;
                    json_line(&report)?
                }
            };
            emit(&args.output, &text)
        }
    }
}

/// The bundled reduced alternating corpus: two-strand torus closures up to
/// seven crossings plus the small weaves.
pub fn bundled_corpus() -> Result<Vec<LinkDiagram>> {
    let mut corpus = Vec::new();
    for k in 3..=7 {
        let mut d = braid_closure(&BraidWord::new(2, vec![1; k])?, true)?;
        d.set_name(format!("T(2,{k})"));
        corpus.push(d);
    }
    corpus.push(weaving_diagram(3, 2)?);
    corpus.push(weaving_diagram(3, 3)?);
    corpus.push(weaving_diagram(4, 2)?);
    Ok(corpus)
}

fn load_diagram(args: &DetArgs) -> Result<LinkDiagram> {
    if let Some(pq) = &args.weave {
        return weaving_diagram(pq[0], pq[1]);
    }
    if let Some(path) = &args.file {
        let text = std::fs::read_to_string(path)?;
        let parsed: DiagramJson = serde_json::from_str(&text)?;
        return LinkDiagram::from_json(&parsed);
    }
    Err(Error::parameter("det needs --weave P Q or --file PATH"))
}

fn default_jobs() -> usize {
    std::env::var("WEAVELAB_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1)
}

/// Rounds to 12 significant digits, the printing precision of the CLI.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let mag = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(11 - mag);
    (x * scale).round() / scale
}

fn fmt12(x: f64) -> String {
    let r = sig12(x);
    if r != 0.0 && r.abs() < 1e-4 {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

/// One JSON line with every float rounded to 12 significant digits and
/// keys in sorted order.
fn json_line<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut v = serde_json::to_value(value)?;
    round_floats(&mut v);
    Ok(serde_json::to_string(&v)? + "\n")
}

fn round_floats(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                if n.is_f64() {
                    if let Some(r) = serde_json::Number::from_f64(sig12(f)) {
                        *n = r;
                    }
                }
            }
        }
        serde_json::Value::Array(a) => a.iter_mut().for_each(round_floats),
        serde_json::Value::Object(o) => o.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn records_csv(records: &[DensityRecord]) -> String {
    let mut s = String::from(
        "p,q,c,log_det,det_density,vol_lower,vol_upper,axis_volume,\
         ordering_ok,vol_below_det,density_below_v8\n",
    );
    for r in records {
        let opt = |x: Option<f64>| x.map(fmt12).unwrap_or_default();
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.p,
            r.q,
            r.c,
            fmt12(r.log_det),
            fmt12(r.det_density),
            opt(r.vol_lower),
            opt(r.vol_upper),
            opt(r.axis_volume),
            r.verdicts.ordering_ok,
            r.verdicts.vol_below_det,
            r.verdicts.density_below_v8
        ));
    }
    s
}

fn table<T: serde::Serialize>(
    rows: &[T],
    format: &str,
    csv_row: impl Fn(&T) -> Vec<String>,
    header: &str,
) -> Result<String> {
    match format {
        "jsonl" => {
            let mut s = String::new();
            for r in rows {
                s.push_str(&json_line(r)?);
            }
            Ok(s)
        }
        "csv" => {
            let mut s = String::from(header);
            s.push('\n');
            for r in rows {
                s.push_str(&csv_row(r).join(","));
                s.push('\n');
            }
            Ok(s)
        }
        other => Err(Error::parameter(format!("unknown format {other:?}"))),
    }
}

/// Key=value config lines; `#` comments and blank lines are skipped.
fn read_config(path: &std::path::Path) -> Result<Vec<(String, String)>> {
    let text = std::fs::read_to_string(path)?;
    let mut pairs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Error::parameter(format!("config line {}: expected key=value", lineno + 1))
        })?;
        pairs.push((k.trim().to_string(), v.trim().trim_matches('"').to_string()));
    }
    Ok(pairs)
}

/// Inclusive "a..b" range, or a single value.
fn parse_range(text: &str) -> Result<(u64, u64)> {
    let bad = || Error::parameter(format!("bad range {text:?}; expected A..B or N"));
    if let Some((a, b)) = text.split_once("..") {
        let lo: u64 = a.trim().parse().map_err(|_| bad())?;
        let hi: u64 = b.trim().parse().map_err(|_| bad())?;
        Ok((lo, hi))
    } else {
        let v: u64 = text.trim().parse().map_err(|_| bad())?;
        Ok((v, v))
    }
}

/// "a..b" expands to every value; "2,4,6" is taken literally.
fn parse_list(text: &str) -> Result<Vec<usize>> {
    if text.contains(',') {
        text.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parameter(format!("bad list entry {t:?}")))
            })
            .collect()
    } else {
        let (lo, hi) = parse_range(text)?;
        Ok((lo..=hi).map(|v| v as usize).collect())
    }
}

fn emit(output: &OutputOpt, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}
