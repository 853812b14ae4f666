//! Command-line front end: point-set generation, colorings, verification,
//! tightness searches and SVG rendering.
//!
//! Every command returns its output as a string plus an exit code so that
//! callers (the binary, tests) decide where it goes.

use std::path::{Path, PathBuf};

use chroma::edges::{color_bottomless_edges, color_disk_edges, color_halfplane_edges, color_rectangle_edges};
use chroma::families::axis_halfspaces;
use chroma::generate::{bottomless_fixture, grid_points, random_points, random_points_for, regular_polygon};
use chroma::geometry::parse_rational;
use chroma::io;
use chroma::tuples::{
    box_threshold, color_pairs_boxes, color_pairs_rectangles_optimal, color_tuples_h_regions, lift_proper_two_coloring,
    lift_tuples, local_mapping_survivors, m_prime, polychromatic_tuples_from_vertex_coloring, ramsey_number, Ramsey,
};
use chroma::verify::{
    exhaustive_impossibility, find_bottomless_counterexample, verify_edge_coloring, verify_tuple_coloring, Target,
    BOTTOMLESS_BUDGET, EXHAUSTIVE_BUDGET,
};
use chroma::{EdgeColoring, FamilyKind, HalfspaceSpec, Mode, Point, PointSet, ThresholdKind, TupleColoring};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::ToPrimitive;
use serde_json::{json, Value};

mod svg;

pub use svg::render_svg;

/// Environment variable that replaces the default search budgets.
pub const BUDGET_ENV: &str = "CHROMA_BUDGET";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Chroma(#[from] chroma::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Text to emit and the process exit code: 0 pass, 1 fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

#[derive(Debug, Parser)]
#[command(name = "chroma", version, about = "Color and verify Delaunay-edges and t-tuples of point sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a point set.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Color the Delaunay-edges or t-tuples of a point set.
    Color(ColorArgs),
    /// Check a coloring against every canonical region.
    Verify(VerifyArgs),
    /// Draw a point set and its colored edges.
    Svg(SvgArgs),
    /// Run an exhaustive tightness search.
    Tighten {
        #[command(subcommand)]
        kind: TightenKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Random points with distinct coordinates.
    Random {
        n: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Resample until the set is in general position for this family.
        #[arg(long)]
        family: Option<FamilyName>,
    },
    /// The integer grid `0..side` in each axis.
    Grid {
        side: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// A regular `n`-gon with rational vertices.
    Convex { n: usize },
    /// A fixed set on which a smaller threshold is impossible.
    Counterexample {
        which: CounterexampleKind,
        /// Vertex count of the odd polygon.
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CounterexampleKind {
    HalfplaneOdd,
    Bottomless,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Halfplane,
    Bottomless,
    Axisrect,
    Disk,
    Hregion,
    Boxd,
}

impl FamilyName {
    fn as_str(self) -> &'static str {
        match self {
            FamilyName::Halfplane => "halfplane",
            FamilyName::Bottomless => "bottomless",
            FamilyName::Axisrect => "axisrect",
            FamilyName::Disk => "disk",
            FamilyName::Hregion => "hregion",
            FamilyName::Boxd => "boxd",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    /// Halfplanes: alternate colors along the hull walk (2 colors, 3 edges).
    HalfplaneWalk,
    /// Bottomless rectangles: bottom-to-top sweep (2 colors, 4 points).
    BottomlessSweep,
    /// Axis-parallel rectangles: two dominance orders (3 points).
    RectDominance,
    /// Disks: 4-coloring of the planar conflict graph (3 points).
    DiskPlanar,
    /// Pairs in rectangles, proper with 2 colors at 3 points.
    RectPairs,
    /// Pairs in boxes, polychromatic with `k` colors.
    BoxPairs,
    /// `t`-tuples in H-regions, polychromatic with `k` colors.
    HregionTuples,
    /// Box pairs lifted to `t`-tuples along the first axis.
    BoxLift,
    /// Proper pair coloring lifted to `t`-tuples by red/blue rules.
    RamseyLift,
    /// Polychromatic vertex coloring lifted to `t`-tuples.
    VertexLift,
}

impl Algorithm {
    fn id(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    fn default_family(self) -> FamilyName {
        match self {
            Algorithm::HalfplaneWalk => FamilyName::Halfplane,
            Algorithm::BottomlessSweep => FamilyName::Bottomless,
            Algorithm::RectDominance | Algorithm::RectPairs | Algorithm::RamseyLift => FamilyName::Axisrect,
            Algorithm::DiskPlanar => FamilyName::Disk,
            Algorithm::BoxPairs => FamilyName::Boxd,
            Algorithm::HregionTuples | Algorithm::BoxLift | Algorithm::VertexLift => FamilyName::Hregion,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Points,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Proper,
    Polychromatic,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub family: Option<FamilyName>,
    /// Halfspace normals for `hregion`, e.g. "1,0;1,1". Defaults to the
    /// coordinate axes.
    #[arg(long)]
    pub halfspaces: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ColorArgs {
    /// Point set JSON.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub alg: Algorithm,
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Number of colors for polychromatic algorithms.
    #[arg(long, default_value_t = 2)]
    pub k: u32,
    /// Tuple size for tuple algorithms.
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    /// Recorded in the provenance header.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Vertex coloring JSON `{"k": 2, "colors": [1, 2, ...]}` for vertex-lift.
    #[arg(long)]
    pub vertex_colors: Option<PathBuf>,
    /// Threshold at which the vertex coloring is polychromatic (vertex-lift).
    #[arg(long)]
    pub threshold: Option<usize>,
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Point set JSON.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Edge or tuple coloring JSON.
    #[arg(long)]
    pub coloring: PathBuf,
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Defaults to the guarantee recorded in the coloring's provenance.
    #[arg(long)]
    pub threshold: Option<usize>,
    #[arg(long)]
    pub threshold_kind: Option<KindArg>,
    #[arg(long)]
    pub mode: Option<ModeArg>,
}

#[derive(Debug, Clone, Args)]
pub struct SvgArgs {
    /// Point set JSON.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Edge coloring, or pair coloring, JSON.
    #[arg(long)]
    pub coloring: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum TightenKind {
    /// No 2-coloring of a regular odd polygon's edges works at 2 edges.
    HalfplaneOdd {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        threshold: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Search for a 5-point set forcing a monochromatic bottomless range.
    Bottomless {
        #[arg(long, default_value_t = 3)]
        threshold: usize,
        /// Caps both the candidate search and the coloring enumeration.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Count local rules for triples that survive every gadget.
    Nocol {
        #[arg(long, default_value_t = 8)]
        m_max: usize,
    },
}

/// `flag`, else the environment override, else `default`.
pub fn budget(flag: Option<u64>, default: u64) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("{BUDGET_ENV}={v:?} is not an integer"))),
        Err(_) => Ok(default),
    }
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    Ok(io::parse_json(&text)?)
}

pub fn read_points(path: &Path) -> Result<PointSet> {
    Ok(io::point_set_from_json(&read_json(path)?)?)
}

fn parse_halfspaces(text: &str) -> Result<Vec<HalfspaceSpec>> {
    text.split(';')
        .map(|normal| {
            let coords = normal.split(',').map(|c| parse_rational(c.trim())).collect::<chroma::Result<Vec<_>>>()?;
            Ok(HalfspaceSpec::new(Point::new(coords))?)
        })
        .collect()
}

fn resolve_family(args: &FamilyArgs, fallback: Option<FamilyKind>, default: FamilyName, dim: usize) -> Result<FamilyKind> {
    let name = match (args.family, fallback) {
        (Some(name), _) => name,
        (None, Some(f)) if args.halfspaces.is_none() => return Ok(f),
        (None, _) => default,
    };
    let halfspaces = match (&args.halfspaces, name) {
        (Some(text), FamilyName::Hregion) => parse_halfspaces(text)?,
        (Some(_), _) => return Err(usage("--halfspaces only applies to --family hregion")),
        (None, FamilyName::Hregion) => axis_halfspaces(dim),
        (None, _) => Vec::new(),
    };
    Ok(io::family_from_name(name.as_str(), halfspaces)?)
}

fn hregion_normals(family: &FamilyKind) -> Result<&[HalfspaceSpec]> {
    match family {
        FamilyKind::HRegion(hs) => Ok(hs),
        other => Err(usage(format!("this algorithm needs --family hregion, not {other}"))),
    }
}

fn json_out(v: &Value) -> String {
    io::to_pretty(v)
}

pub fn cmd_gen(kind: &GenKind) -> Result<Output> {
    let (s, provenance) = match kind {
        GenKind::Random { n, dim, seed, family } => {
            let s = match family {
                Some(f) => {
                    let family = io::family_from_name(f.as_str(), axis_halfspaces(*dim))?;
                    random_points_for(&family, *n, *dim, *seed)?
                }
                None => random_points(*n, *dim, *seed)?,
            };
            let mut p = json!({"generator": "random", "n": n, "dim": dim, "seed": seed});
            if let Some(f) = family {
                p["family"] = json!(f.as_str());
            }
            (s, p)
        }
        GenKind::Grid { side, dim } => (grid_points(*side, *dim)?, json!({"generator": "grid", "side": side, "dim": dim})),
        GenKind::Convex { n } => (regular_polygon(*n)?, json!({"generator": "convex", "n": n})),
        GenKind::Counterexample { which: CounterexampleKind::HalfplaneOdd, n } => {
            if n % 2 == 0 || *n < 3 {
                return Err(usage(format!("halfplane-odd needs an odd n >= 3, got {n}")));
            }
            (regular_polygon(*n)?, json!({"generator": "counterexample", "which": "halfplane-odd", "n": n}))
        }
        GenKind::Counterexample { which: CounterexampleKind::Bottomless, .. } => {
            (bottomless_fixture(), json!({"generator": "counterexample", "which": "bottomless"}))
        }
    };
    let mut v = io::point_set_to_json(&s);
    v["provenance"] = provenance;
    Ok(Output::ok(json_out(&v)))
}

/// A computed coloring with the guarantee its algorithm promises.
pub enum Colored {
    Edges(EdgeColoring),
    Tuples(TupleColoring),
}

struct Guarantee {
    threshold: usize,
    kind: ThresholdKind,
    mode: Mode,
}

fn read_vertex_colors(path: &Path) -> Result<(u32, Vec<u32>)> {
    let v = read_json(path)?;
    let k = v.get("k").and_then(Value::as_u64).ok_or_else(|| usage("vertex coloring needs an integer \"k\""))?;
    let colors = v
        .get("colors")
        .and_then(Value::as_array)
        .ok_or_else(|| usage("vertex coloring needs a \"colors\" array"))?
        .iter()
        .map(|c| c.as_u64().map(|c| c as u32).ok_or_else(|| usage("vertex colors are positive integers")))
        .collect::<Result<Vec<_>>>()?;
    Ok((k as u32, colors))
}

pub fn cmd_color(args: &ColorArgs) -> Result<Output> {
    let s = read_points(&args.input)?;
    let family = resolve_family(&args.family, None, args.alg.default_family(), s.dim())?;
    let default_family = args.alg.default_family();
    let family_ok = family.name() == default_family.as_str()
        || (args.alg == Algorithm::VertexLift)
        || (args.alg == Algorithm::RamseyLift);
    if !family_ok {
        return Err(usage(format!("{} colors for --family {}, not {}", args.alg.id(), default_family.as_str(), family)));
    }
    let (k, t) = (args.k, args.t);
    let points = |threshold| Guarantee { threshold, kind: ThresholdKind::Points, mode: Mode::Proper };
    let poly = |threshold: Option<u64>, k| -> Result<Guarantee> {
        let threshold = threshold.ok_or_else(|| usage("threshold overflows"))? as usize;
        Ok(Guarantee { threshold, kind: ThresholdKind::Points, mode: Mode::Polychromatic(k) })
    };
    let (colored, guarantee) = match args.alg {
        Algorithm::HalfplaneWalk => (
            Colored::Edges(color_halfplane_edges(&s)?),
            Some(Guarantee { threshold: 3, kind: ThresholdKind::Edges, mode: Mode::Proper }),
        ),
        Algorithm::BottomlessSweep => (Colored::Edges(color_bottomless_edges(&s)?), Some(points(4))),
        Algorithm::RectDominance => (Colored::Edges(color_rectangle_edges(&s)?), Some(points(3))),
        Algorithm::DiskPlanar => (Colored::Edges(color_disk_edges(&s)?), Some(points(3))),
        Algorithm::RectPairs => (Colored::Tuples(color_pairs_rectangles_optimal(&s)?), Some(points(3))),
        Algorithm::BoxPairs => (Colored::Tuples(color_pairs_boxes(&s, k)?), Some(poly(box_threshold(s.dim(), k, 2), k)?)),
        Algorithm::HregionTuples => {
            let hs = hregion_normals(&family)?;
            let c = color_tuples_h_regions(&s, hs, t, k)?;
            (Colored::Tuples(c), Some(poly(box_threshold(hs.len(), k, t), k)?))
        }
        Algorithm::BoxLift => {
            let hs = hregion_normals(&family)?;
            if *hs != axis_halfspaces(s.dim()) {
                return Err(usage("box-lift works on the coordinate halfspaces; omit --halfspaces"));
            }
            let base = color_pairs_boxes(&s, k)?;
            let c = if t == 2 { base } else { lift_tuples(&base, &s, &hs[0], t)? };
            (Colored::Tuples(c), Some(poly(box_threshold(s.dim(), k, t), k)?))
        }
        Algorithm::RamseyLift => {
            if family != FamilyKind::AxisRect {
                return Err(usage("ramsey-lift starts from the rectangle pair coloring; use --family axisrect"));
            }
            let base = color_pairs_rectangles_optimal(&s)?;
            let c = lift_proper_two_coloring(&base, t)?;
            let guarantee = match ramsey_number(2, 2, t, budget(args.budget, EXHAUSTIVE_BUDGET)?)? {
                Ramsey::Exact(r) => Some(points(r.max(3))),
                Ramsey::Unknown { .. } => None,
            };
            (Colored::Tuples(c), guarantee)
        }
        Algorithm::VertexLift => {
            let path = args.vertex_colors.as_ref().ok_or_else(|| usage("vertex-lift needs --vertex-colors"))?;
            let (vk, colors) = read_vertex_colors(path)?;
            if colors.len() != s.len() {
                return Err(usage(format!("{} vertex colors for {} points", colors.len(), s.len())));
            }
            let c = polychromatic_tuples_from_vertex_coloring(&colors, vk, t)?;
            let kp = c.k();
            let guarantee = args.threshold.map(|m| Guarantee {
                threshold: m_prime(m, vk, t),
                kind: ThresholdKind::Points,
                mode: Mode::Polychromatic(kp),
            });
            (Colored::Tuples(c), guarantee)
        }
    };
    let mut v = match &colored {
        Colored::Edges(c) => io::edge_coloring_to_json(c),
        Colored::Tuples(c) => io::tuple_coloring_to_json(c),
    };
    let mut parameters = json!({"k": k, "t": t});
    if let Some(seed) = args.seed {
        parameters["seed"] = json!(seed);
    }
    let mut provenance = json!({
        "algorithm": args.alg.id(),
        "family": io::family_to_json(&family),
        "parameters": parameters,
        "tool": concat!("chroma ", env!("CARGO_PKG_VERSION")),
    });
    if let Some(g) = guarantee {
        provenance["guarantee"] = json!({"threshold": g.threshold, "threshold_kind": g.kind, "mode": g.mode});
    }
    v["provenance"] = provenance;
    Ok(Output::ok(json_out(&v)))
}

fn guarantee_from(provenance: Option<&Value>) -> (Option<usize>, Option<ThresholdKind>, Option<ModeArg>) {
    let g = provenance.and_then(|p| p.get("guarantee"));
    let threshold = g.and_then(|g| g.get("threshold")).and_then(Value::as_u64).map(|x| x as usize);
    let kind = g.and_then(|g| g.get("threshold_kind")).and_then(Value::as_str).and_then(|k| match k {
        "points" => Some(ThresholdKind::Points),
        "edges" => Some(ThresholdKind::Edges),
        _ => None,
    });
    let mode = g.and_then(|g| g.get("mode")).map(|m| match m.as_str() {
        Some("proper") => ModeArg::Proper,
        _ => ModeArg::Polychromatic,
    });
    (threshold, kind, mode)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Output> {
    let s = read_points(&args.input)?;
    let c = read_json(&args.coloring)?;
    let provenance = c.get("provenance");
    let recorded = provenance.and_then(|p| p.get("family")).map(io::family_from_json).transpose()?;
    let family = match (&recorded, args.family.family) {
        (None, None) => return Err(usage("--family is required when the coloring has no provenance")),
        _ => resolve_family(&args.family, recorded, FamilyName::Axisrect, s.dim())?,
    };
    let (p_threshold, p_kind, p_mode) = guarantee_from(provenance);
    let threshold = args.threshold.or(p_threshold).ok_or_else(|| usage("--threshold is required"))?;
    let kind = match args.threshold_kind {
        Some(KindArg::Points) => ThresholdKind::Points,
        Some(KindArg::Edges) => ThresholdKind::Edges,
        None => p_kind.unwrap_or(if family == FamilyKind::Halfplane { ThresholdKind::Edges } else { ThresholdKind::Points }),
    };
    let report = if c.get("edges").is_some() {
        if args.mode == Some(ModeArg::Polychromatic) {
            return Err(usage("edge colorings are verified in proper mode"));
        }
        verify_edge_coloring(&s, &family, &io::edge_coloring_from_json(&c)?, threshold, kind)?
    } else {
        if kind == ThresholdKind::Edges {
            return Err(usage("tuple colorings count points"));
        }
        let tc = io::tuple_coloring_from_json(&c, s.len())?;
        let mode = match args.mode.or(p_mode).unwrap_or(ModeArg::Polychromatic) {
            ModeArg::Proper => Mode::Proper,
            ModeArg::Polychromatic => Mode::Polychromatic(tc.k()),
        };
        verify_tuple_coloring(&s, &family, &tc, threshold, mode)?
    };
    let mut v = serde_json::to_value(&report).expect("report serializes");
    v["family"] = io::family_to_json(&family);
    Ok(Output { text: json_out(&v), code: if report.passed { 0 } else { 1 } })
}

pub fn cmd_svg(args: &SvgArgs) -> Result<Output> {
    let s = read_points(&args.input)?;
    if s.dim() != 2 {
        return Err(usage(format!("svg draws planar sets, this one has dimension {}", s.dim())));
    }
    let edges: Vec<((usize, usize), u32)> = match &args.coloring {
        None => Vec::new(),
        Some(path) => {
            let c = read_json(path)?;
            if c.get("edges").is_some() {
                io::edge_coloring_from_json(&c)?.iter().collect()
            } else {
                let tc = io::tuple_coloring_from_json(&c, s.len())?;
                if tc.t() != 2 {
                    return Err(usage(format!("svg draws pairs, the coloring has t = {}", tc.t())));
                }
                tc.iter().map(|(p, col)| ((p[0], p[1]), col)).collect()
            }
        }
    };
    if let Some(((i, j), _)) = edges.iter().find(|((_, j), _)| *j >= s.len()) {
        return Err(usage(format!("edge ({i}, {j}) is outside the point set")));
    }
    let coords: Vec<(f64, f64)> = s
        .points()
        .iter()
        .map(|p| (p.x().to_f64().unwrap_or(0.0), p.y().to_f64().unwrap_or(0.0)))
        .collect();
    Ok(Output::ok(render_svg(&coords, &edges)))
}

pub fn cmd_tighten(kind: &TightenKind) -> Result<Output> {
    match kind {
        TightenKind::HalfplaneOdd { n, threshold, budget: b } => {
            let s = regular_polygon(*n)?;
            let b = budget(*b, EXHAUSTIVE_BUDGET)?;
            let hit =
                exhaustive_impossibility(&s, &FamilyKind::Halfplane, *threshold, 2, Target::Edges, ThresholdKind::Edges, b)?;
            let text = format!("regular {n}-gon, halfplanes, 2 colors\nimpossible at threshold {threshold}: {hit}\n");
            Ok(Output { text, code: if hit { 0 } else { 1 } })
        }
        TightenKind::Bottomless { threshold, budget: b } => {
            let s = find_bottomless_counterexample(budget(*b, BOTTOMLESS_BUDGET)?)?;
            let hit = exhaustive_impossibility(
                &s,
                &FamilyKind::BottomlessRect,
                *threshold,
                2,
                Target::Edges,
                ThresholdKind::Points,
                budget(*b, EXHAUSTIVE_BUDGET)?,
            )?;
            let points: Vec<String> = s
                .points()
                .iter()
                .map(|p| format!("({}, {})", chroma::geometry::format_rational(p.x()), chroma::geometry::format_rational(p.y())))
                .collect();
            let text = format!("witness: {}\nimpossible at threshold {threshold}: {hit}\n", points.join(" "));
            Ok(Output { text, code: if hit { 0 } else { 1 } })
        }
        TightenKind::Nocol { m_max } => {
            let c = local_mapping_survivors(*m_max);
            let text = format!(
                "{} / {} mappings valid\nafter first gadget: {}\nafter second gadget: {}\n",
                c.all_gadgets, c.candidates, c.first_gadget, c.second_gadget
            );
            Ok(Output { text, code: if c.all_gadgets == 0 { 0 } else { 1 } })
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Gen { kind } => cmd_gen(kind),
        Command::Color(args) => cmd_color(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Svg(args) => cmd_svg(args),
        Command::Tighten { kind } => cmd_tighten(kind),
    }
}

/// Parses `argv`, runs, and writes the output; returns the exit code
/// (2 on any error).
pub fn main_with<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = run(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => std::fs::write(path, &out.text).map_err(|source| CliError::Io { path: path.clone(), source })?,
            None => print!("{}", out.text),
        }
        Ok(out.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
