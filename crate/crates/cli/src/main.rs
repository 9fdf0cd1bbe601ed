//! `lspace`: exact L-space Dehn-surgery regions for satellites by torus
//! links, iterated torus links, and algebraic links.
//!
//! Subcommands: `query` classifies a single filling, `region` rasterizes
//! a two-parameter window, `check` runs the self-check suites, and
//! `validate` reports structural diagnostics for a tree file.

mod checks;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use region_catalog::{
    oracle_point_label, psi_inv, raster_region, RasterBasis, RasterFormat, RasterMode,
    RasterRequest,
};
use satellite_graph::{algebraicity_check, validate_tree, SatelliteTree, Session, SlopeAssignment};
use seifert_engine::DEFAULT_PERIOD_CAP;
use slope_core::{ExtendedSlope, SlopeInterval};

/// Environment variable overriding the fiber-period cap used by the
/// window-scan engine.
const PERIOD_CAP_VAR: &str = "LSPACE_PERIOD_CAP";

#[derive(Parser)]
#[command(
    name = "lspace",
    version,
    about = "Exact L-space surgery regions for torus-link, iterated, and algebraic satellites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    /// Fiber-exterior coordinates (the engine's native basis).
    Sf,
    /// Surgery coefficients on the satellite link in the three-sphere.
    S3,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Recursive graph-manifold oracle (any tree).
    Oracle,
    /// Closed-form region predicates (single-vertex trees only).
    Closed,
    /// Oracle versus closed form, cell by cell.
    Diff,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Svg,
    Pgm,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one filling: verdict, root interval, and region flags.
    Query {
        /// Tree description file (JSON).
        #[arg(long)]
        tree: PathBuf,
        /// Slopes for every unfilled component, e.g. "v1:1=3/4,v1:2=inf".
        #[arg(long)]
        slope: String,
        /// Coordinate basis the slopes are given in.
        #[arg(long, value_enum, default_value_t = BasisArg::Sf)]
        basis: BasisArg,
    },
    /// Rasterize a two-parameter window of fillings.
    Region {
        /// Tree description file (JSON).
        #[arg(long)]
        tree: PathBuf,
        /// The two swept components, e.g. "v1:1,v1:2".
        #[arg(long)]
        free: String,
        /// Pinned slopes for all remaining components, e.g. "v2:1=5".
        #[arg(long)]
        pin: Option<String>,
        /// Window bounds "x0:x1:y0:y1" (inclusive, rationals or inf).
        #[arg(long)]
        window: String,
        /// Grid spacing, a positive rational such as "1/2".
        #[arg(long)]
        step: String,
        /// Coordinate basis of the window, step, and pins.
        #[arg(long, value_enum, default_value_t = BasisArg::Sf)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = ModeArg::Oracle)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Output file; written to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for cell evaluation (output order is fixed).
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Run the self-check suites.
    Check {
        /// Run only the named suite; omit to run all of them.
        #[arg(long)]
        suite: Option<String>,
        /// Seed for the randomized suites (fixed default).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Structural validation and an algebraicity report for a tree file.
    Validate {
        /// Tree description file (JSON).
        #[arg(long)]
        tree: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Query { tree, slope, basis } => cmd_query(&tree, &slope, basis),
        Command::Region {
            tree,
            free,
            pin,
            window,
            step,
            basis,
            mode,
            format,
            out,
            threads,
        } => cmd_region(
            &tree,
            &free,
            pin.as_deref(),
            &window,
            &step,
            basis,
            mode,
            format,
            out.as_deref(),
            threads,
        ),
        Command::Check { suite, seed } => checks::cmd_check(suite.as_deref(), seed),
        Command::Validate { tree } => cmd_validate(&tree),
    };
    run.unwrap_or_else(|msg| {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    })
}

fn period_cap_from_env() -> Result<u64, String> {
    match std::env::var(PERIOD_CAP_VAR) {
        Ok(text) => match text.trim().parse::<u64>() {
            Ok(cap) if cap > 0 => Ok(cap),
            _ => Err(format!(
                "{PERIOD_CAP_VAR} must be a positive integer, got {text:?}"
            )),
        },
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_PERIOD_CAP),
        Err(e) => Err(format!("{PERIOD_CAP_VAR}: {e}")),
    }
}

fn load_tree(path: &Path) -> Result<SatelliteTree, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    SatelliteTree::from_json_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Parses one component reference "vertex:slot".
fn parse_component(text: &str) -> Result<(String, usize), String> {
    let (vertex, slot) = text
        .rsplit_once(':')
        .ok_or_else(|| format!("component {text:?} must look like \"vertex:slot\""))?;
    let vertex = vertex.trim();
    if vertex.is_empty() {
        return Err(format!("component {text:?} has an empty vertex id"));
    }
    let slot: usize = slot
        .trim()
        .parse()
        .map_err(|_| format!("slot in {text:?} must be a positive integer"))?;
    if slot == 0 {
        return Err(format!("slot in {text:?} must be at least 1"));
    }
    Ok((vertex.to_string(), slot))
}

/// Parses "v:i=a/b,…" into component/slope triples, rejecting repeats.
fn parse_slope_list(text: &str) -> Result<Vec<(String, usize, ExtendedSlope)>, String> {
    let mut out: Vec<(String, usize, ExtendedSlope)> = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(format!("empty entry in slope list {text:?}"));
        }
        let (lhs, rhs) = part
            .split_once('=')
            .ok_or_else(|| format!("slope entry {part:?} must look like \"vertex:slot=value\""))?;
        let (vertex, slot) = parse_component(lhs.trim())?;
        let slope: ExtendedSlope = rhs
            .trim()
            .parse()
            .map_err(|e| format!("slope {:?} for {vertex}:{slot}: {e}", rhs.trim()))?;
        if out.iter().any(|(v, i, _)| *v == vertex && *i == slot) {
            return Err(format!("component {vertex}:{slot} listed twice"));
        }
        out.push((vertex, slot, slope));
    }
    Ok(out)
}

/// Converts parsed slopes into a fiber-basis assignment; surgery
/// coefficients transform through each owning vertex's fiber product.
fn to_engine_basis(
    tree: &SatelliteTree,
    items: Vec<(String, usize, ExtendedSlope)>,
    basis: BasisArg,
) -> Result<SlopeAssignment, String> {
    let mut a = SlopeAssignment::new();
    for (vertex, slot, slope) in items {
        let value = match basis {
            BasisArg::Sf => slope,
            BasisArg::S3 => {
                let data = tree
                    .vertices
                    .get(&vertex)
                    .ok_or_else(|| format!("unknown vertex {vertex:?}"))?;
                psi_inv(&slope, &(&data.p * &data.q))
            }
        };
        a.set(&vertex, slot, value);
    }
    Ok(a)
}

/// Human-readable interval text. Arcs run counterclockwise from the
/// first endpoint to the second and wrap through ∞ when lo ≥ hi.
fn interval_text(i: &SlopeInterval) -> String {
    match i {
        SlopeInterval::Empty => "empty".into(),
        SlopeInterval::FullCircle => "all slopes".into(),
        SlopeInterval::Point(x) => format!("{{{x}}}"),
        SlopeInterval::LongitudeComplement(l) => format!("all slopes except {l}"),
        SlopeInterval::Arc {
            lo,
            hi,
            lo_closed,
            hi_closed,
        } => format!(
            "{}{lo}, {hi}{}",
            if *lo_closed { '[' } else { '(' },
            if *hi_closed { ']' } else { ')' },
        ),
    }
}

fn cmd_query(path: &Path, slope_text: &str, basis: BasisArg) -> Result<ExitCode, String> {
    let tree = load_tree(path)?;
    let cap = period_cap_from_env()?;
    let items = parse_slope_list(slope_text)?;
    let a = to_engine_basis(&tree, items, basis)?;
    tree.check_assignment(&a).map_err(|e| e.to_string())?;

    let session = Session::with_period_cap(&tree, cap).map_err(|e| e.to_string())?;
    let point = oracle_point_label(&session, &a, cap).map_err(|e| e.to_string())?;
    let root = session
        .vertex_state(&tree.root, &a)
        .map_err(|e| e.to_string())?;

    println!("{}", if point.label.lspace { "L" } else { "NL" });
    println!("root interval: {}", interval_text(&root.interval));
    println!(
        "root boundary: {}",
        if root.is_bc {
            "compressible (BC)"
        } else {
            "incompressible (BI)"
        }
    );
    let flags = point.label.flags_string();
    println!("flags: {}", if flags.is_empty() { "-" } else { &flags });

    Ok(ExitCode::from(if point.label.lspace { 0 } else { 1 }))
}

fn parse_window(
    text: &str,
) -> Result<(ExtendedSlope, ExtendedSlope, ExtendedSlope, ExtendedSlope), String> {
    let parts: Vec<&str> = text.split(':').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("--window must be \"x0:x1:y0:y1\", got {text:?}"));
    }
    let mut vals = Vec::with_capacity(4);
    for p in &parts {
        vals.push(
            p.parse::<ExtendedSlope>()
                .map_err(|e| format!("window bound {p:?}: {e}"))?,
        );
    }
    Ok((
        vals[0].clone(),
        vals[1].clone(),
        vals[2].clone(),
        vals[3].clone(),
    ))
}

#[allow(clippy::too_many_arguments)]
fn cmd_region(
    path: &Path,
    free_text: &str,
    pin_text: Option<&str>,
    window_text: &str,
    step_text: &str,
    basis: BasisArg,
    mode: ModeArg,
    format: FormatArg,
    out: Option<&Path>,
    threads: usize,
) -> Result<ExitCode, String> {
    let tree = load_tree(path)?;
    let cap = period_cap_from_env()?;

    let parts: Vec<&str> = free_text.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(format!(
            "--free needs exactly two components \"v:i,v:j\", got {free_text:?}"
        ));
    }
    let free = [parse_component(parts[0])?, parse_component(parts[1])?];

    let mut pins = SlopeAssignment::new();
    if let Some(text) = pin_text {
        // Pins stay in the request basis; rasterization converts them.
        for (vertex, slot, slope) in parse_slope_list(text)? {
            pins.set(&vertex, slot, slope);
        }
    }

    let window = parse_window(window_text)?;
    let step: ExtendedSlope = step_text
        .trim()
        .parse()
        .map_err(|e| format!("--step {step_text:?}: {e}"))?;

    let req = RasterRequest {
        tree,
        free,
        pins,
        window,
        step,
        basis: match basis {
            BasisArg::Sf => RasterBasis::Sf,
            BasisArg::S3 => RasterBasis::S3,
        },
        mode: match mode {
            ModeArg::Oracle => RasterMode::Oracle,
            ModeArg::Closed => RasterMode::ClosedForm,
            ModeArg::Diff => RasterMode::Diff,
        },
        period_cap: cap,
        threads,
    };
    let grid = raster_region(&req).map_err(|e| e.to_string())?;
    let rendered = grid.render(match format {
        FormatArg::Csv => RasterFormat::Csv,
        FormatArg::Svg => RasterFormat::Svg,
        FormatArg::Pgm => RasterFormat::Pgm,
    });
    match out {
        Some(p) => std::fs::write(p, rendered.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", p.display()))?,
        None => print!("{rendered}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_validate(path: &Path) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let tree =
        SatelliteTree::from_json_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;

    let diagnostics = validate_tree(&tree);
    if !diagnostics.is_empty() {
        for d in &diagnostics {
            eprintln!("{d}");
        }
        eprintln!("{} problem(s) found", diagnostics.len());
        return Ok(ExitCode::from(1));
    }

    println!(
        "valid: {} vertex/vertices, {} edge(s), root {:?}",
        tree.vertices.len(),
        tree.edges.len(),
        tree.root
    );
    match algebraicity_check(&tree) {
        Ok(report) => {
            println!(
                "algebraic: {}",
                if report.is_algebraic { "yes" } else { "no" }
            );
            for (child, delta) in &report.deltas {
                println!("  splice delta at {child}: {delta}");
            }
        }
        Err(e) => println!("algebraicity: not determined ({e})"),
    }
    Ok(ExitCode::SUCCESS)
}
