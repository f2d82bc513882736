use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use strgraph::generators as gen;
use strgraph::io::{self, FileKind};
use strgraph::string_graph::{build_edge_crossing_graph, build_string_graph};
use strgraph::{CurveFamily, Drawing, Graph};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenKind {
    Disjoint,
    Star,
    Path,
    Cycle,
    Grid,
    RandomSeg,
    Convex,
    RandomDraw,
    PlaneDraw,
}

impl GenKind {
    pub fn name(self) -> &'static str {
        match self {
            GenKind::Disjoint => "disjoint",
            GenKind::Star => "star",
            GenKind::Path => "path",
            GenKind::Cycle => "cycle",
            GenKind::Grid => "grid",
            GenKind::RandomSeg => "random-seg",
            GenKind::Convex => "convex",
            GenKind::RandomDraw => "random-draw",
            GenKind::PlaneDraw => "plane-draw",
        }
    }

    pub fn seeded(self) -> bool {
        matches!(
            self,
            GenKind::RandomSeg | GenKind::RandomDraw | GenKind::PlaneDraw
        )
    }

    /// Whether `m` means anything to this generator.
    pub fn takes_m(self) -> bool {
        matches!(self, GenKind::RandomDraw | GenKind::PlaneDraw)
    }
}

/// Everything a generator needs. Unused fields are ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    /// Edge count for `random-draw` (default `min(4n, n(n-1)/2)`), edge cap
    /// for `plane-draw` (default unlimited).
    pub m: Option<usize>,
    /// Vertical segments for `grid` (default `n`).
    pub cols: Option<usize>,
    /// Coordinate span for `random-seg` (default `8n`).
    pub span: Option<i64>,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Family(CurveFamily),
    Drawing(Drawing),
    Graph(Graph),
}

impl Instance {
    pub fn generate(spec: &GenSpec) -> CliResult<Self> {
        let n = spec.n;
        Ok(match spec.kind {
            GenKind::Disjoint => Instance::Family(gen::disjoint_segments(n)?),
            GenKind::Star => Instance::Family(gen::pairwise_crossing_star(n)?),
            GenKind::Path => Instance::Family(gen::interval_path(n)?),
            GenKind::Cycle => Instance::Family(gen::interval_cycle(n)?),
            GenKind::Grid => Instance::Family(gen::grid_biclique(n, spec.cols.unwrap_or(n))?),
            GenKind::RandomSeg => {
                let span = spec.span.unwrap_or(8 * n as i64);
                Instance::Family(gen::random_segments(n, span, spec.seed)?)
            }
            GenKind::Convex => Instance::Drawing(gen::convex_drawing(n)?),
            GenKind::RandomDraw => {
                let m = spec.m.unwrap_or((4 * n).min(n * n.saturating_sub(1) / 2));
                Instance::Drawing(gen::random_drawing(n, m, spec.seed)?)
            }
            GenKind::PlaneDraw => Instance::Drawing(gen::random_plane_drawing(
                n,
                spec.m.unwrap_or(usize::MAX),
                spec.seed,
            )?),
        })
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        match io::sniff(text) {
            Some(FileKind::CurveFamily) => Ok(Instance::Family(io::parse_curve_family(text)?)),
            Some(FileKind::Drawing) => Ok(Instance::Drawing(io::parse_drawing(text)?)),
            Some(FileKind::Graph) => Ok(Instance::Graph(io::parse_graph(text)?)),
            None => Err(CliError::BadInput("input file is empty".into())),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Instance::Family(f) => io::write_curve_family(f),
            Instance::Drawing(d) => io::write_drawing(d),
            Instance::Graph(g) => io::write_graph(g),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Instance::Family(_) => "curve-family",
            Instance::Drawing(_) => "drawing",
            Instance::Graph(_) => "graph",
        }
    }

    /// The string graph the analyses run on: the intersection graph of a
    /// curve family, the crossing graph of a drawing, or the graph itself.
    pub fn string_graph(&self) -> Graph {
        match self {
            Instance::Family(f) => build_string_graph(f),
            Instance::Drawing(d) => build_edge_crossing_graph(d),
            Instance::Graph(g) => g.clone(),
        }
    }

    /// Curves, points or vertices.
    pub fn n(&self) -> usize {
        match self {
            Instance::Family(f) => f.len(),
            Instance::Drawing(d) => d.n(),
            Instance::Graph(g) => g.n(),
        }
    }

    pub fn drawing(&self) -> Option<&Drawing> {
        match self {
            Instance::Drawing(d) => Some(d),
            _ => None,
        }
    }
}
