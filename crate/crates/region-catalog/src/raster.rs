//! Exact rasterization of a two-parameter slice of the slope torus.
//!
//! A raster request pins all but two filling slopes of a satellite tree,
//! sweeps the two free slopes over an exact rational grid, classifies
//! every cell, and renders the grid as CSV, SVG, or PGM. Every grid
//! point is an exact rational (or ∞) — there is no rounding anywhere,
//! so repeated runs and different thread counts produce byte-identical
//! output.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use satellite_graph::{CompanionKnot, SatelliteTree, Session, SlopeAssignment};
use slope_core::ExtendedSlope;

use crate::monotone::monotone_stratum_member_session;
use crate::psi::psi_inv;
use crate::torus::{
    in_lambda_orbit_minus, in_lambda_orbit_plus, torus_label_sf_capped, RegionLabel,
    TorusSatelliteSpec,
};
use crate::util::sum_slopes;
use crate::CatalogError;

/// Coordinate convention for the request window, the step, the pinned
/// slopes, and the CSV output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RasterBasis {
    /// Each vertex's own fiber basis (the engine's native coordinates).
    Sf,
    /// Conventional surgery coordinates; each coordinate is translated
    /// through the Möbius change of basis of its owning vertex.
    S3,
}

/// Which classifier fills the cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RasterMode {
    /// The recursive graph-manifold oracle (works for every tree).
    Oracle,
    /// The closed-form region predicates (single-vertex trees with an
    /// unknot or genus-defined companion only).
    ClosedForm,
    /// Run both and record whether they agree.
    Diff,
}

/// Output renderings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RasterFormat {
    Csv,
    Svg,
    Pgm,
}

/// A rasterization job: sweep two free slopes over a window, keep the
/// rest pinned.
#[derive(Clone, Debug)]
pub struct RasterRequest {
    pub tree: SatelliteTree,
    /// The two swept components, as (vertex id, 1-based slot). The first
    /// is the horizontal axis, the second the vertical axis.
    pub free: [(String, usize); 2],
    /// Slopes for every other unfilled component, in the request basis.
    pub pins: SlopeAssignment,
    /// `(x0, x1, y0, y1)`: inclusive bounds for the two axes.
    pub window: (ExtendedSlope, ExtendedSlope, ExtendedSlope, ExtendedSlope),
    /// Grid spacing; must be finite and positive.
    pub step: ExtendedSlope,
    pub basis: RasterBasis,
    pub mode: RasterMode,
    /// Engine period cap forwarded to every cell evaluation.
    pub period_cap: u64,
    /// Worker threads (≥ 1). Output is identical for every value.
    pub threads: usize,
}

/// Per-cell classification result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellOutcome {
    Label {
        label: RegionLabel,
        /// Negative-side Λ-orbit membership (drawn dark grey).
        orbit_minus: bool,
        /// Positive-side Λ-orbit membership (drawn light grey).
        orbit_plus: bool,
    },
    Diff {
        oracle_lspace: bool,
        closed_lspace: bool,
    },
    Error(String),
}

impl CellOutcome {
    pub fn label_token(&self) -> String {
        match self {
            CellOutcome::Label { label, .. } => {
                if label.lspace { "L".into() } else { "NL".into() }
            }
            CellOutcome::Diff {
                oracle_lspace,
                closed_lspace,
            } => {
                if oracle_lspace == closed_lspace {
                    "EQ".into()
                } else {
                    "DIFF".into()
                }
            }
            CellOutcome::Error(_) => "ERR".into(),
        }
    }

    pub fn flags_token(&self) -> String {
        match self {
            CellOutcome::Label { label, .. } => label.flags_string(),
            _ => String::new(),
        }
    }
}

/// One grid cell: the two swept coordinates (request basis) plus the
/// classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RasterCell {
    pub a1: ExtendedSlope,
    pub a2: ExtendedSlope,
    pub outcome: CellOutcome,
}

/// A classified grid, row-major with rows ordered by ascending second
/// coordinate and columns by ascending first coordinate.
#[derive(Clone, Debug)]
pub struct RasterGrid {
    pub cols: usize,
    pub rows: usize,
    /// Axis labels: the two swept components as `vertex.slot`.
    pub axis_names: [String; 2],
    pub cells: Vec<RasterCell>,
}

const MAX_CELLS: usize = 4_000_000;
const SVG_CELL_PX: usize = 8;

impl RasterGrid {
    pub fn cell(&self, col: usize, row: usize) -> &RasterCell {
        &self.cells[row * self.cols + col]
    }

    pub fn render(&self, format: RasterFormat) -> String {
        match format {
            RasterFormat::Csv => self.to_csv(),
            RasterFormat::Svg => self.to_svg(),
            RasterFormat::Pgm => self.to_pgm(),
        }
    }

    /// `a1,a2,label,flags` per cell, rows by ascending second coordinate.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{},{},label,flags",
            self.axis_names[0], self.axis_names[1]
        );
        for cell in &self.cells {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                cell.a1,
                cell.a2,
                cell.outcome.label_token(),
                cell.outcome.flags_token()
            );
        }
        out
    }

    /// Fixed-palette SVG: reducible slopes black (with a white dot when
    /// the filling has an `S¹×S²` summand), the negative-side orbit dark
    /// grey, the positive-side orbit light grey, other L-spaces mid
    /// grey, non-L-spaces white, errors magenta; a black dot marks
    /// positive first Betti number. The vertical axis points up.
    pub fn to_svg(&self) -> String {
        let width = self.cols * SVG_CELL_PX;
        let height = self.rows * SVG_CELL_PX;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
             viewBox=\"0 0 {width} {height}\">"
        );
        let _ = writeln!(
            out,
            "<rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#fff\"/>"
        );
        for row in 0..self.rows {
            let py = (self.rows - 1 - row) * SVG_CELL_PX;
            for col in 0..self.cols {
                let px = col * SVG_CELL_PX;
                let outcome = &self.cell(col, row).outcome;
                let (fill, white_dot, black_dot) = svg_cell_style(outcome);
                if fill != "#fff" {
                    let _ = writeln!(
                        out,
                        "<rect x=\"{px}\" y=\"{py}\" width=\"{SVG_CELL_PX}\" \
                         height=\"{SVG_CELL_PX}\" fill=\"{fill}\"/>"
                    );
                }
                if white_dot || black_dot {
                    let cx = px + SVG_CELL_PX / 2;
                    let cy = py + SVG_CELL_PX / 2;
                    let dot = if white_dot { "#fff" } else { "#000" };
                    let _ = writeln!(out, "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"2\" fill=\"{dot}\"/>");
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }

    /// Plain-text greyscale PGM (`P2`), top row = largest second
    /// coordinate.
    pub fn to_pgm(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "P2");
        let _ = writeln!(out, "{} {}", self.cols, self.rows);
        let _ = writeln!(out, "255");
        for row in (0..self.rows).rev() {
            let mut line = String::new();
            for col in 0..self.cols {
                if col > 0 {
                    line.push(' ');
                }
                let _ = write!(line, "{}", pgm_level(&self.cell(col, row).outcome));
            }
            let _ = writeln!(out, "{line}");
        }
        out
    }
}

fn svg_cell_style(outcome: &CellOutcome) -> (&'static str, bool, bool) {
    match outcome {
        CellOutcome::Error(_) => ("#f0f", false, false),
        CellOutcome::Diff {
            oracle_lspace,
            closed_lspace,
        } => {
            if oracle_lspace == closed_lspace {
                ("#fff", false, false)
            } else {
                ("#d00", false, false)
            }
        }
        CellOutcome::Label {
            label,
            orbit_minus,
            orbit_plus,
        } => {
            if label.in_z {
                ("#000", true, false)
            } else if label.in_r {
                ("#000", false, false)
            } else {
                let fill = if label.lspace {
                    if *orbit_minus {
                        "#555"
                    } else if *orbit_plus {
                        "#bbb"
                    } else {
                        "#888"
                    }
                } else {
                    "#fff"
                };
                (fill, false, label.in_b)
            }
        }
    }
}

fn pgm_level(outcome: &CellOutcome) -> u8 {
    match outcome {
        CellOutcome::Error(_) => 200,
        CellOutcome::Diff {
            oracle_lspace,
            closed_lspace,
        } => {
            if oracle_lspace == closed_lspace {
                255
            } else {
                0
            }
        }
        CellOutcome::Label {
            label,
            orbit_minus,
            orbit_plus,
        } => {
            if label.in_z {
                16
            } else if label.in_r {
                0
            } else if label.lspace {
                if *orbit_minus {
                    85
                } else if *orbit_plus {
                    187
                } else {
                    136
                }
            } else {
                255
            }
        }
    }
}

struct EvalContext<'t> {
    tree: &'t SatelliteTree,
    mode: RasterMode,
    period_cap: u64,
    pins_sf: SlopeAssignment,
    free: [(String, usize); 2],
    /// Closed-form description when the tree is a single vertex with an
    /// unknot or genus-defined companion.
    closed_spec: Option<TorusSatelliteSpec>,
    /// Slot order of the single vertex for closed-form evaluation.
    closed_slots: Vec<usize>,
}

/// Sweeps the request grid and classifies every cell.
pub fn raster_region(req: &RasterRequest) -> Result<RasterGrid, CatalogError> {
    if req.threads == 0 {
        return Err(CatalogError::InvalidInput(
            "thread count must be at least 1".into(),
        ));
    }
    if req.free[0] == req.free[1] {
        return Err(CatalogError::InvalidInput(
            "the two swept components must be distinct".into(),
        ));
    }
    for (vertex, slot) in &req.free {
        if req.pins.get(vertex, *slot).is_some() {
            return Err(CatalogError::InvalidInput(format!(
                "component {vertex}.{slot} is both swept and pinned"
            )));
        }
    }
    if req.step.is_infinite() || req.step.numer() <= &BigInt::zero() {
        return Err(CatalogError::InvalidInput(format!(
            "grid step must be finite and positive, got {}",
            req.step
        )));
    }

    // Validate the tree once; workers re-create sessions from it.
    Session::with_period_cap(&req.tree, req.period_cap)?;

    let (x0, x1, y0, y1) = (
        &req.window.0,
        &req.window.1,
        &req.window.2,
        &req.window.3,
    );
    let a1_values = axis_values(x0, x1, &req.step, "first")?;
    let a2_values = axis_values(y0, y1, &req.step, "second")?;
    let cols = a1_values.len();
    let rows = a2_values.len();
    if cols.saturating_mul(rows) > MAX_CELLS {
        return Err(CatalogError::InvalidInput(format!(
            "grid of {cols}×{rows} cells exceeds the {MAX_CELLS}-cell limit"
        )));
    }

    // Convert pinned slopes and axis values to the engine basis.
    let pins_sf = convert_assignment(&req.tree, &req.pins, req.basis)?;
    let a1_sf = convert_axis(&req.tree, &req.free[0], &a1_values, req.basis)?;
    let a2_sf = convert_axis(&req.tree, &req.free[1], &a2_values, req.basis)?;

    // The first grid point must complete the assignment exactly.
    {
        let mut probe = pins_sf.clone();
        probe.set(&req.free[0].0, req.free[0].1, a1_sf[0].clone());
        probe.set(&req.free[1].0, req.free[1].1, a2_sf[0].clone());
        req.tree.check_assignment(&probe)?;
    }

    let closed_spec = single_vertex_spec(&req.tree);
    if matches!(req.mode, RasterMode::ClosedForm | RasterMode::Diff) && closed_spec.is_none() {
        return Err(CatalogError::InvalidInput(
            "closed-form rasterization needs a single-vertex tree with an unknot or \
             genus-defined companion"
                .into(),
        ));
    }
    let closed_slots = match &closed_spec {
        Some(_) => req.tree.free_slots(&req.tree.root)?,
        None => Vec::new(),
    };

    let ctx = EvalContext {
        tree: &req.tree,
        mode: req.mode,
        period_cap: req.period_cap,
        pins_sf,
        free: req.free.clone(),
        closed_spec,
        closed_slots,
    };

    let jobs: Vec<(usize, usize)> = (0..rows)
        .flat_map(|row| (0..cols).map(move |col| (row, col)))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(req.threads)
        .build()
        .map_err(|e| CatalogError::InvalidInput(format!("thread pool: {e}")))?;
    let outcomes: Vec<CellOutcome> = pool.install(|| {
        jobs.par_iter()
            .map_init(
                || Session::with_period_cap(ctx.tree, ctx.period_cap).expect("tree validated"),
                |session, (row, col)| evaluate_cell(session, &ctx, &a1_sf[*col], &a2_sf[*row]),
            )
            .collect()
    });

    let mut cells = Vec::with_capacity(outcomes.len());
    for ((row, col), outcome) in jobs.into_iter().zip(outcomes) {
        cells.push(RasterCell {
            a1: a1_values[col].clone(),
            a2: a2_values[row].clone(),
            outcome,
        });
    }

    Ok(RasterGrid {
        cols,
        rows,
        axis_names: [
            format!("{}.{}", req.free[0].0, req.free[0].1),
            format!("{}.{}", req.free[1].0, req.free[1].1),
        ],
        cells,
    })
}

/// `start, start+step, …` up to and including `end` (when hit exactly).
/// An infinite `start` yields the single value ∞.
fn axis_values(
    start: &ExtendedSlope,
    end: &ExtendedSlope,
    step: &ExtendedSlope,
    which: &str,
) -> Result<Vec<ExtendedSlope>, CatalogError> {
    if start.cmp_linear(end) == std::cmp::Ordering::Greater {
        return Err(CatalogError::InvalidInput(format!(
            "{which} axis window is empty: {start} > {end}"
        )));
    }
    if end.is_infinite() && !start.is_infinite() {
        return Err(CatalogError::InvalidInput(format!(
            "{which} axis cannot step from the finite value {start} to ∞"
        )));
    }
    let mut values = Vec::new();
    let mut v = start.clone();
    loop {
        if v.cmp_linear(end) == std::cmp::Ordering::Greater {
            break;
        }
        values.push(v.clone());
        match v.checked_add(step) {
            Some(next) => v = next,
            None => break,
        }
        if values.len() > MAX_CELLS {
            return Err(CatalogError::InvalidInput(format!(
                "{which} axis exceeds the {MAX_CELLS}-value limit"
            )));
        }
    }
    Ok(values)
}

fn owning_pq(tree: &SatelliteTree, vertex: &str) -> Result<BigInt, CatalogError> {
    let data = tree.vertex(vertex)?;
    Ok(&data.p * &data.q)
}

fn convert_assignment(
    tree: &SatelliteTree,
    pins: &SlopeAssignment,
    basis: RasterBasis,
) -> Result<SlopeAssignment, CatalogError> {
    match basis {
        RasterBasis::Sf => Ok(pins.clone()),
        RasterBasis::S3 => {
            let mut out = SlopeAssignment::new();
            for ((vertex, slot), slope) in pins.iter() {
                let pq = owning_pq(tree, vertex)?;
                out.set(vertex, *slot, psi_inv(slope, &pq));
            }
            Ok(out)
        }
    }
}

fn convert_axis(
    tree: &SatelliteTree,
    free: &(String, usize),
    values: &[ExtendedSlope],
    basis: RasterBasis,
) -> Result<Vec<ExtendedSlope>, CatalogError> {
    match basis {
        RasterBasis::Sf => Ok(values.to_vec()),
        RasterBasis::S3 => {
            let pq = owning_pq(tree, &free.0)?;
            Ok(values.iter().map(|v| psi_inv(v, &pq)).collect())
        }
    }
}

/// Oracle classification of one complete assignment, carrying the same
/// flag set as oracle-mode rasterization: the recursive verdict, the
/// reducible/essential-sphere/rational-homology loci, monotonicity, and
/// (for single-vertex trees with an unknot or genus-defined companion)
/// the closed-form enrichment flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointLabel {
    pub label: RegionLabel,
    /// Lies in the canonical negative orbit sector.
    pub orbit_minus: bool,
    /// Lies in the canonical positive orbit sector.
    pub orbit_plus: bool,
}

/// Classifies a single complete assignment through the recursive oracle,
/// producing the flags rendered by oracle-mode rasters.
pub fn oracle_point_label(
    session: &Session<'_>,
    a: &SlopeAssignment,
    period_cap: u64,
) -> Result<PointLabel, CatalogError> {
    let tree = session.tree();
    let lspace = session.is_lspace_filling(a)?.lspace;
    let monotone = monotone_stratum_member_session(session, a)?;

    // Per-piece special loci, joined across vertices: a fiber slope at
    // any vertex reduces the filling; two at one vertex give an S¹×S²
    // summand; the rational-longitude hyperplane of any piece
    // contributes positive first Betti number.
    let mut in_r = false;
    let mut in_z = false;
    let mut in_b = false;
    for (id, data) in &tree.vertices {
        let slots = tree.free_slots(id)?;
        let ys: Vec<ExtendedSlope> = slots
            .iter()
            .map(|slot| a.get(id, *slot).cloned().expect("assignment checked"))
            .collect();
        let pq = &data.p * &data.q;
        let n_inf = ys.iter().filter(|y| y.is_infinite()).count();
        in_r |= n_inf >= 1;
        in_z |= n_inf >= 2;
        in_b |= if pq.is_zero() {
            n_inf >= 1
        } else {
            n_inf >= 2
                || sum_slopes(&ys).is_some_and(|s| {
                    s == ExtendedSlope::new(BigInt::from(-1), pq.clone()).expect("pq nonzero")
                })
        };
    }

    let (orbit_minus, orbit_plus, raw_minus, raw_plus, lstar) = match single_vertex_spec(tree) {
        Some(spec) => {
            let slots = tree.free_slots(&tree.root)?;
            let ys: Vec<ExtendedSlope> = slots
                .iter()
                .map(|slot| a.get(&tree.root, *slot).cloned().expect("assignment checked"))
                .collect();
            let closed = torus_label_sf_capped(&spec, &ys, period_cap)?;
            (
                in_lambda_orbit_minus(&spec, &ys),
                in_lambda_orbit_plus(&ys),
                closed.in_l_minus,
                closed.in_l_plus,
                closed.in_lambda_orbit_of_lstar,
            )
        }
        None => (false, false, false, false, lspace),
    };

    Ok(PointLabel {
        label: RegionLabel {
            lspace,
            in_r,
            in_z,
            in_b,
            in_l_minus: raw_minus,
            in_l_plus: raw_plus,
            in_lambda_orbit_of_lstar: lstar,
            monotone: Some(monotone),
        },
        orbit_minus,
        orbit_plus,
    })
}

fn single_vertex_spec(tree: &SatelliteTree) -> Option<TorusSatelliteSpec> {
    if tree.vertices.len() != 1 || !tree.edges.is_empty() {
        return None;
    }
    let genus = match &tree.companion {
        CompanionKnot::Unknot => 0,
        CompanionKnot::PositiveLSpaceKnot { genus } => *genus,
        CompanionKnot::FloerSimple { .. } => return None,
    };
    let data = tree.vertices.values().next()?;
    TorusSatelliteSpec::new(genus, data.p.clone(), data.q.clone(), data.n).ok()
}

fn evaluate_cell(
    session: &Session<'_>,
    ctx: &EvalContext<'_>,
    y1: &ExtendedSlope,
    y2: &ExtendedSlope,
) -> CellOutcome {
    let mut assignment = ctx.pins_sf.clone();
    assignment.set(&ctx.free[0].0, ctx.free[0].1, y1.clone());
    assignment.set(&ctx.free[1].0, ctx.free[1].1, y2.clone());
    match cell_outcome(session, ctx, &assignment) {
        Ok(outcome) => outcome,
        Err(e) => CellOutcome::Error(e.to_string()),
    }
}

fn closed_slot_vector(ctx: &EvalContext<'_>, a: &SlopeAssignment) -> Vec<ExtendedSlope> {
    ctx.closed_slots
        .iter()
        .map(|slot| {
            a.get(&ctx.tree.root, *slot)
                .cloned()
                .expect("assignment checked")
        })
        .collect()
}

fn cell_outcome(
    session: &Session<'_>,
    ctx: &EvalContext<'_>,
    a: &SlopeAssignment,
) -> Result<CellOutcome, CatalogError> {
    match ctx.mode {
        RasterMode::Diff => {
            let spec = ctx.closed_spec.as_ref().expect("validated");
            let oracle = session.is_lspace_filling(a)?.lspace;
            let closed =
                torus_label_sf_capped(spec, &closed_slot_vector(ctx, a), ctx.period_cap)?.lspace;
            Ok(CellOutcome::Diff {
                oracle_lspace: oracle,
                closed_lspace: closed,
            })
        }
        RasterMode::ClosedForm => {
            let spec = ctx.closed_spec.as_ref().expect("validated");
            let ys = closed_slot_vector(ctx, a);
            let label = torus_label_sf_capped(spec, &ys, ctx.period_cap)?;
            Ok(CellOutcome::Label {
                orbit_minus: in_lambda_orbit_minus(spec, &ys),
                orbit_plus: in_lambda_orbit_plus(&ys),
                label,
            })
        }
        RasterMode::Oracle => {
            let point = oracle_point_label(session, a, ctx.period_cap)?;
            Ok(CellOutcome::Label {
                label: point.label,
                orbit_minus: point.orbit_minus,
                orbit_plus: point.orbit_plus,
            })
        }
    }
}
