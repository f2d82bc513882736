//! Experiment grids: configuration, one report row per generated instance,
//! and the CSV/JSON persistence of the result.

use std::collections::BTreeMap;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use strgraph::decomposition::{
    clique_or_independent, color_graph, crossing_count, crossing_pair_sets, eq1_target,
    find_independent_set, greedy_biclique, lemma2_target, quasi_planarity, theorem3_bound,
    BoundParams,
};
use strgraph::graph::is_kt_free;
use strgraph::separators::{lemma1_bound, SeparatorAlgo, EXACT_SEPARATOR_MAX_N};
use strgraph::ParamSet;

use crate::error::{CliError, CliResult};
use crate::instance::{GenKind, GenSpec, Instance};
use crate::params::{ParamOverrides, ParamsRecord};
use crate::report::{rows_to_csv, to_json, Cell};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Analysis {
    Separate,
    Indep,
    Color,
    Biclique,
    Eh,
    Crossings,
    Quasiplanar,
    Bound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeparatorChoice {
    Exact,
    #[default]
    Spectral,
    Bfs,
}

impl From<SeparatorChoice> for SeparatorAlgo {
    fn from(c: SeparatorChoice) -> Self {
        match c {
            SeparatorChoice::Exact => SeparatorAlgo::Exact,
            SeparatorChoice::Spectral => SeparatorAlgo::Spectral,
            SeparatorChoice::Bfs => SeparatorAlgo::Bfs,
        }
    }
}

/// One generator with the values to sweep. Every combination of `n`, `m`,
/// `cols` and `seeds` becomes an instance; lists that do not apply to the
/// generator are ignored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub generator: GenKind,
    pub n: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub m: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cols: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span: Option<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub seeds: Vec<u64>,
}

fn default_t() -> usize {
    4
}

fn default_epsilon() -> f64 {
    0.5
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub name: String,
    pub grids: Vec<GridSpec>,
    pub analyses: Vec<Analysis>,
    /// Clique parameter for `indep`, `color`, `quasiplanar` and `bound`.
    #[serde(default = "default_t")]
    pub t: usize,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    #[serde(default)]
    pub separator: SeparatorChoice,
    #[serde(default)]
    pub params: ParamOverrides,
}

impl ExperimentConfig {
    pub fn validate(&self) -> CliResult<()> {
        let bad = |msg: String| Err(CliError::BadInput(msg));
        if self.grids.is_empty() {
            return bad("config lists no grids".into());
        }
        if let Some(g) = self.grids.iter().find(|g| g.n.is_empty()) {
            return bad(format!(
                "grid for `{}` lists no n values",
                g.generator.name()
            ));
        }
        if self.analyses.is_empty() {
            return bad("config lists no analyses".into());
        }
        if self.t < 2 {
            return bad(format!("t must be at least 2, got {}", self.t));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return bad(format!("epsilon must lie in (0, 1), got {}", self.epsilon));
        }
        Ok(())
    }

    /// Instances in report order: grids in config order, then `n`, `m`,
    /// `cols` and seed ascending. Duplicate values collapse.
    pub fn instances(&self) -> Vec<GenSpec> {
        fn values<T: Copy + Ord>(list: &[T], used: bool) -> Vec<Option<T>> {
            let mut v: Vec<Option<T>> = list.iter().map(|&x| Some(x)).collect();
            v.sort_unstable();
            v.dedup();
            if v.is_empty() || !used {
                vec![None]
            } else {
                v
            }
        }
        let mut out = Vec::new();
        for grid in &self.grids {
            let kind = grid.generator;
            for n in values(&grid.n, true).into_iter().flatten() {
                for m in values(&grid.m, kind.takes_m()) {
                    for cols in values(&grid.cols, kind == GenKind::Grid) {
                        for seed in values(&grid.seeds, kind.seeded()) {
                            out.push(GenSpec {
                                kind,
                                n,
                                m,
                                cols,
                                span: grid.span,
                                seed: seed.unwrap_or(0),
                            });
                        }
                    }
                }
            }
        }
        out
    }
}

/// One instance and everything measured on it. The column order here is the
/// CSV schema.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct ReportRow {
    pub generator: Cell,
    pub n_param: Cell,
    pub m_param: Cell,
    pub cols_param: Cell,
    pub seed: Cell,
    pub n: Cell,
    pub m: Cell,
    pub graph_n: Cell,
    pub graph_m: Cell,
    pub t: Cell,
    pub kt_free: Cell,
    pub separator: Cell,
    pub sep_size: Cell,
    pub sep_valid: Cell,
    pub lemma1_bound: Cell,
    pub sep_ratio: Cell,
    pub indep_size: Cell,
    pub indep_valid: Cell,
    pub eq1_target: Cell,
    pub indep_ratio: Cell,
    pub colors: Cell,
    pub coloring_proper: Cell,
    pub color_bound: Cell,
    pub color_ratio: Cell,
    pub biclique_size: Cell,
    pub biclique_valid: Cell,
    pub lemma2_target: Cell,
    pub biclique_ratio: Cell,
    pub eh_branch: Cell,
    pub eh_size: Cell,
    pub eh_valid: Cell,
    pub eh_target: Cell,
    pub eh_met: Cell,
    pub crossings: Cell,
    pub crossing_ratio: Cell,
    pub crossing_pairs: Cell,
    pub crossing_pairs_valid: Cell,
    pub planar_edge_ok: Cell,
    pub quasi_planar: Cell,
    pub edges_per_vertex: Cell,
    pub theorem3_bound_per_vertex: Cell,
    pub theorem3_ratio: Cell,
}

impl ReportRow {
    /// `generator n=.. m=.. seed=..`, for listings.
    pub fn label(&self) -> String {
        let mut s = self.generator.to_string();
        for (k, v) in [
            ("n", &self.n_param),
            ("m", &self.m_param),
            ("cols", &self.cols_param),
            ("seed", &self.seed),
        ] {
            if !v.is_empty() {
                s.push_str(&format!(" {k}={v}"));
            }
        }
        s
    }
}

fn ratio(num: f64, den: f64) -> Cell {
    Cell::Num(num / den)
}

/// Runs every configured analysis on one instance, re-checking each
/// certificate before it is recorded.
pub fn analyze(
    spec: &GenSpec,
    inst: &Instance,
    config: &ExperimentConfig,
    params: &ParamSet,
    bounds: &mut BTreeMap<usize, CliResult<BoundParams>>,
) -> ReportRow {
    let g = inst.string_graph();
    let (gn, gm) = (g.n(), g.m());
    let t = config.t;
    let wants = |a: Analysis| config.analyses.contains(&a);
    let mut row = ReportRow {
        generator: Cell::text(spec.kind.name()),
        n_param: Cell::int(spec.n),
        m_param: spec
            .m
            .filter(|_| spec.kind.takes_m())
            .map_or(Cell::Empty, Cell::int),
        cols_param: if spec.kind == GenKind::Grid {
            Cell::int(spec.cols.unwrap_or(spec.n))
        } else {
            Cell::Empty
        },
        seed: if spec.kind.seeded() {
            Cell::Int(spec.seed)
        } else {
            Cell::Empty
        },
        n: Cell::int(inst.n()),
        m: Cell::int(inst.drawing().map_or(gm, |d| d.m())),
        graph_n: Cell::int(gn),
        graph_m: Cell::int(gm),
        t: Cell::int(t),
        ..ReportRow::default()
    };

    let kt_free = (wants(Analysis::Indep) || wants(Analysis::Color)).then(|| is_kt_free(&g, t));
    if let Some(free) = kt_free {
        row.kt_free = Cell::Bool(free);
    }
    let kt_target = |value: Option<f64>| match (kt_free, value) {
        (Some(false), _) => Cell::NotApplicable,
        (_, Some(v)) => Cell::Num(v),
        (_, None) => Cell::NotApplicable,
    };

    if wants(Analysis::Separate) {
        let algo = SeparatorAlgo::from(config.separator);
        row.separator = Cell::text(algo.name());
        if algo == SeparatorAlgo::Exact && gn > EXACT_SEPARATOR_MAX_N {
            let why = format!("n>{EXACT_SEPARATOR_MAX_N}");
            row.sep_size = Cell::skip(&why);
            row.sep_valid = Cell::skip(&why);
            row.sep_ratio = Cell::skip(&why);
        } else {
            let sep = algo.run(&g).expect("size checked");
            row.sep_size = Cell::int(sep.len());
            row.sep_valid = Cell::Bool(sep.certifies(&g));
            match lemma1_bound(gm, params) {
                Ok(bound) => {
                    row.sep_ratio = ratio(sep.len() as f64, bound);
                    row.lemma1_bound = Cell::Num(bound);
                }
                Err(_) => row.sep_ratio = Cell::NotApplicable,
            }
        }
        if row.lemma1_bound.is_empty() {
            row.lemma1_bound = lemma1_bound(gm, params).map_or(Cell::NotApplicable, Cell::Num);
        }
    }

    if wants(Analysis::Indep) {
        let set = find_independent_set(&g, t, params);
        row.indep_size = Cell::int(set.len());
        row.indep_valid = Cell::Bool(g.is_independent(&set));
        row.eq1_target = kt_target((gn >= 2).then(|| eq1_target(gn, t, params)));
        row.indep_ratio = match row.eq1_target.as_f64() {
            Some(target) => ratio(set.len() as f64, target),
            None => Cell::NotApplicable,
        };
    }

    if wants(Analysis::Color) {
        let out = color_graph(&g, t, params);
        row.colors = Cell::int(out.coloring.k);
        row.coloring_proper = Cell::Bool(out.coloring.is_proper(&g));
        row.color_bound = kt_target(out.bound);
        row.color_ratio = match row.color_bound.as_f64() {
            Some(bound) => ratio(out.coloring.k as f64, bound),
            None => Cell::NotApplicable,
        };
    }

    let biclique =
        (wants(Analysis::Biclique) || wants(Analysis::Bound)).then(|| greedy_biclique(&g));
    if wants(Analysis::Biclique) {
        let bic = biclique.as_ref().expect("computed above");
        row.biclique_size = Cell::int(bic.size());
        row.biclique_valid = Cell::Bool(bic.certifies(&g));
        match lemma2_target(gn, gm, params) {
            Ok(target) => {
                row.lemma2_target = Cell::Num(target);
                row.biclique_ratio = ratio(bic.size() as f64, target);
            }
            Err(_) => {
                row.lemma2_target = Cell::NotApplicable;
                row.biclique_ratio = Cell::NotApplicable;
            }
        }
    }

    if wants(Analysis::Eh) {
        match clique_or_independent(&g, config.epsilon, params) {
            Ok(out) => {
                row.eh_branch = Cell::text(out.branch.name());
                row.eh_size = Cell::int(out.set.len());
                row.eh_valid = Cell::Bool(out.verified);
                row.eh_target = Cell::Num(match out.branch {
                    strgraph::decomposition::Branch::Clique => out.clique_target,
                    strgraph::decomposition::Branch::Independent => out.independent_target,
                });
                row.eh_met = Cell::Bool(out.meets_target());
            }
            Err(_) => {
                let why = "n<3";
                for cell in [
                    &mut row.eh_branch,
                    &mut row.eh_size,
                    &mut row.eh_valid,
                    &mut row.eh_target,
                    &mut row.eh_met,
                ] {
                    *cell = Cell::skip(why);
                }
            }
        }
    }

    if wants(Analysis::Crossings) {
        match inst.drawing() {
            Some(d) => {
                let stats = crossing_count(d);
                row.crossings = Cell::int(stats.count);
                row.crossing_ratio = stats.ratio.map_or(Cell::NotApplicable, Cell::Num);
                let pairs = crossing_pair_sets(d);
                row.crossing_pairs = Cell::int(pairs.e1.len());
                row.crossing_pairs_valid = Cell::Bool(pairs.certifies(d));
                row.planar_edge_ok = if stats.count == 0 && d.n() >= 3 {
                    Cell::Bool(d.m() <= 3 * d.n() - 6)
                } else {
                    Cell::NotApplicable
                };
            }
            None => {
                for cell in [
                    &mut row.crossings,
                    &mut row.crossing_ratio,
                    &mut row.crossing_pairs,
                    &mut row.crossing_pairs_valid,
                    &mut row.planar_edge_ok,
                ] {
                    *cell = Cell::NotApplicable;
                }
            }
        }
    }

    if wants(Analysis::Quasiplanar) {
        row.quasi_planar = match inst.drawing() {
            Some(d) => Cell::Bool(quasi_planarity(d, t).expect("t >= 2 is validated")),
            None => Cell::NotApplicable,
        };
    }

    if wants(Analysis::Bound) {
        row.edges_per_vertex = if gn == 0 {
            Cell::NotApplicable
        } else {
            ratio(gm as f64, gn as f64)
        };
        let witness = biclique.as_ref().expect("computed above").size() >= t;
        let bound = bounds
            .entry(t)
            .or_insert_with(|| theorem3_bound(t, params).map_err(CliError::from));
        match bound {
            Ok(bp) => {
                row.theorem3_bound_per_vertex = Cell::Num(bp.bound_per_vertex);
                row.theorem3_ratio = match (&row.edges_per_vertex, witness) {
                    (Cell::Num(epv), false) => ratio(*epv, bp.bound_per_vertex),
                    _ => Cell::NotApplicable,
                };
            }
            Err(_) => {
                row.theorem3_bound_per_vertex = Cell::skip("hypothesis");
                row.theorem3_ratio = Cell::skip("hypothesis");
            }
        }
    }
    row
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub params: ParamSet,
    pub rows: Vec<ReportRow>,
}

#[derive(Serialize)]
struct Metadata<'a> {
    tool: &'static str,
    version: &'static str,
    config: &'a ExperimentConfig,
    params: ParamsRecord,
    rows: usize,
}

impl ExperimentReport {
    pub fn to_csv(&self) -> CliResult<String> {
        rows_to_csv(&self.rows)
    }

    pub fn rows_json(&self) -> CliResult<String> {
        to_json(&self.rows)
    }

    /// Config, effective constants and tool version.
    pub fn metadata_json(&self) -> CliResult<String> {
        to_json(&Metadata {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            config: &self.config,
            params: self.params.into(),
            rows: self.rows.len(),
        })
    }
}

/// Runs the whole grid. `flags` override the config's constants.
pub fn run_experiment(
    config: &ExperimentConfig,
    flags: ParamOverrides,
) -> CliResult<ExperimentReport> {
    config.validate()?;
    let params = flags.over(config.params).resolve()?;
    let mut bounds = BTreeMap::new();
    let rows = config
        .instances()
        .iter()
        .map(|spec| {
            let inst = Instance::generate(spec).map_err(|e| {
                CliError::BadInput(format!("{} n={}: {e}", spec.kind.name(), spec.n))
            })?;
            Ok(analyze(spec, &inst, config, &params, &mut bounds))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(ExperimentReport {
        config: config.clone(),
        params,
        rows,
    })
}

/// Reads either a config or a metadata file written next to a report.
pub fn load_config(text: &str) -> CliResult<ExperimentConfig> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::BadInput(format!("json: {e}")))?;
    let config = match value.get("config") {
        Some(inner) if value.get("tool").is_some() => inner.clone(),
        _ => value,
    };
    let config: ExperimentConfig = serde_json::from_value(config)
        .map_err(|e| CliError::BadInput(format!("experiment config: {e}")))?;
    config.validate()?;
    Ok(config)
}
