use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use strgraph::decomposition::{
    clique_or_independent, color_graph, crossing_count, crossing_pair_sets, eq1_target,
    find_independent_set, greedy_biclique, lemma2_target, max_biclique_exact, quasi_planarity,
    theorem3_bound, Branch, EXACT_BICLIQUE_MAX_N,
};
use strgraph::graph::is_kt_free;
use strgraph::io;
use strgraph::separators::{lemma1_bound, SeparatorAlgo};
use strgraph::{Drawing, ParamSet};

use crate::error::{read_file, write_file, CliError, CliResult};
use crate::experiment::{load_config, run_experiment, SeparatorChoice};
use crate::instance::{GenKind, GenSpec, Instance};
use crate::params::ParamOverrides;
use crate::report::{Cell, Format, Record};
use crate::verify::verify_bounds;

/// String graphs: separators, independent sets, colourings, bicliques and
/// crossing statistics, with every certificate re-checked.
#[derive(Debug, Parser)]
#[command(name = "strgraph", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Separator constant.
    #[arg(long, global = true)]
    pub d: Option<f64>,
    /// Biclique exponent.
    #[arg(long, global = true)]
    pub b: Option<f64>,
    /// Exponent constant of the independent-set and colouring bounds
    /// (default max(8d, 6b + 1)).
    #[arg(long = "C", global = true)]
    pub c: Option<f64>,
    /// Largest graph the independent-set recursion solves exactly.
    #[arg(long, global = true)]
    pub base_case_n: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Result file. Without it, `gen`, `build` and `experiment` print their
    /// result instead of a report.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

impl GlobalArgs {
    fn overrides(&self) -> ParamOverrides {
        ParamOverrides {
            d: self.d,
            b: self.b,
            c: self.c,
            base_case_n: self.base_case_n,
        }
    }

    fn params(&self) -> CliResult<ParamSet> {
        self.overrides().resolve()
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a curve family or drawing.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        /// Edges of `random-draw`, edge cap of `plane-draw`.
        #[arg(long)]
        m: Option<usize>,
        /// Vertical segments of `grid` (default n).
        #[arg(long)]
        cols: Option<usize>,
        /// Coordinate span of `random-seg` (default 8n).
        #[arg(long)]
        span: Option<i64>,
    },
    /// Write the string graph of a curve family, or the crossing graph of a
    /// drawing.
    Build { input: PathBuf },
    /// Balanced separator.
    Separate {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = SeparatorChoice::Spectral)]
        algo: SeparatorChoice,
    },
    /// Independent set by the separator/biclique recursion.
    Indep {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        t: usize,
    },
    /// Colouring by repeated independent-set extraction.
    Color {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        t: usize,
    },
    /// Large clique or large independent set.
    Eh {
        input: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        epsilon: f64,
    },
    /// Balanced biclique.
    Biclique {
        input: PathBuf,
        /// Exhaustive search (at most 16 vertices).
        #[arg(long, conflicts_with = "greedy")]
        exact: bool,
        /// Greedy search (the default).
        #[arg(long)]
        greedy: bool,
    },
    /// Edge bound for K_{t,t}-free string graphs.
    Bound {
        #[arg(long)]
        t: usize,
    },
    /// Crossing count of a drawing.
    Crossings { input: PathBuf },
    /// Two edge sets of a drawing that pairwise cross.
    CrossingPairs { input: PathBuf },
    /// Whether a drawing has no t pairwise crossing edges.
    Quasiplanar {
        input: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Run an experiment grid from a JSON config.
    Experiment { config: PathBuf },
    /// Rerun an experiment (config or report metadata) and check every row.
    Verify { config: PathBuf },
}

fn load(path: &Path) -> CliResult<Instance> {
    Instance::parse(&read_file(path)?)
}

fn load_drawing(path: &Path) -> CliResult<Drawing> {
    match load(path)? {
        Instance::Drawing(d) => Ok(d),
        other => Err(CliError::BadInput(format!(
            "{} holds a {}, expected a drawing",
            path.display(),
            other.kind_name()
        ))),
    }
}

fn check_t(t: usize) -> CliResult<()> {
    if t < 2 {
        return Err(CliError::BadInput(format!("t must be at least 2, got {t}")));
    }
    Ok(())
}

fn join(set: &[usize]) -> String {
    set.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt_num(v: Option<f64>) -> Cell {
    v.map_or(Cell::NotApplicable, Cell::Num)
}

/// What a command produced: a result payload, a report, and whether every
/// certificate re-checked.
struct Output {
    payload: Option<String>,
    report: Record,
    ok: bool,
}

impl Output {
    fn new(payload: Option<String>, report: Record, ok: bool) -> Self {
        Output {
            payload,
            report,
            ok,
        }
    }
}

/// Runs one command, writing files and returning what goes to stdout.
pub fn execute(cli: &Cli) -> CliResult<String> {
    let g = &cli.global;
    let output = match &cli.command {
        Command::Experiment { config } => return experiment(g, config),
        Command::Verify { config } => return verify(g, config),
        Command::Gen {
            kind,
            n,
            m,
            cols,
            span,
        } => {
            let spec = GenSpec {
                kind: *kind,
                n: *n,
                m: *m,
                cols: *cols,
                span: *span,
                seed: g.seed,
            };
            let inst = Instance::generate(&spec)?;
            let mut r = Record::default();
            r.push("kind", Cell::text(kind.name()))
                .push("n", Cell::int(inst.n()))
                .push(
                    "seed",
                    if kind.seeded() {
                        Cell::Int(g.seed)
                    } else {
                        Cell::Empty
                    },
                );
            if let Some(d) = inst.drawing() {
                r.push("m", Cell::int(d.m()));
            }
            return emit_primary(g, &inst.to_text(), &r);
        }
        Command::Build { input } => {
            let inst = load(input)?;
            let graph = inst.string_graph();
            let mut r = Record::default();
            r.push("input", Cell::text(inst.kind_name()))
                .push("n", Cell::int(graph.n()))
                .push("m", Cell::int(graph.m()));
            return emit_primary(g, &io::write_graph(&graph), &r);
        }
        Command::Separate { input, algo } => {
            let graph = load(input)?.string_graph();
            let algo = SeparatorAlgo::from(*algo);
            let sep = algo.run(&graph)?;
            let ok = sep.certifies(&graph);
            let mut r = Record::default();
            r.push("algo", Cell::text(algo.name()))
                .push("n", Cell::int(graph.n()))
                .push("m", Cell::int(graph.m()))
                .push("sep_size", Cell::int(sep.len()))
                .push("v1", Cell::int(sep.v1.len()))
                .push("v2", Cell::int(sep.v2.len()))
                .push("valid", Cell::Bool(ok))
                .push(
                    "lemma1_bound",
                    opt_num(lemma1_bound(graph.m(), &g.params()?).ok()),
                );
            Output::new(Some(io::write_separator(&sep)), r, ok)
        }
        Command::Indep { input, t } => {
            check_t(*t)?;
            let params = g.params()?;
            let graph = load(input)?.string_graph();
            let set = find_independent_set(&graph, *t, &params);
            let ok = graph.is_independent(&set);
            let free = is_kt_free(&graph, *t);
            let mut r = Record::default();
            r.push("n", Cell::int(graph.n()))
                .push("m", Cell::int(graph.m()))
                .push("t", Cell::int(*t))
                .push("kt_free", Cell::Bool(free))
                .push("size", Cell::int(set.len()))
                .push("valid", Cell::Bool(ok))
                .push(
                    "eq1_target",
                    opt_num((free && graph.n() >= 2).then(|| eq1_target(graph.n(), *t, &params))),
                );
            Output::new(Some(io::write_vertex_set(&set)), r, ok)
        }
        Command::Color { input, t } => {
            check_t(*t)?;
            let graph = load(input)?.string_graph();
            let out = color_graph(&graph, *t, &g.params()?);
            let ok = out.coloring.is_proper(&graph);
            let free = is_kt_free(&graph, *t);
            let mut payload = String::new();
            for (c, class) in out.coloring.classes().iter().enumerate() {
                let _ = writeln!(payload, "{c}: {}", join(class));
            }
            let mut r = Record::default();
            r.push("n", Cell::int(graph.n()))
                .push("m", Cell::int(graph.m()))
                .push("t", Cell::int(*t))
                .push("kt_free", Cell::Bool(free))
                .push("colors", Cell::int(out.coloring.k))
                .push("proper", Cell::Bool(ok))
                .push("theorem1_bound", opt_num(out.bound.filter(|_| free)));
            Output::new(Some(payload), r, ok)
        }
        Command::Eh { input, epsilon } => {
            let graph = load(input)?.string_graph();
            let out = clique_or_independent(&graph, *epsilon, &g.params()?)?;
            let mut r = Record::default();
            r.push("n", Cell::int(graph.n()))
                .push("m", Cell::int(graph.m()))
                .push("epsilon", Cell::Num(*epsilon))
                .push("t", Cell::int(out.t))
                .push("branch", Cell::text(out.branch.name()))
                .push("size", Cell::int(out.set.len()))
                .push("valid", Cell::Bool(out.verified))
                .push("clique_target", Cell::Num(out.clique_target))
                .push("independent_target", Cell::Num(out.independent_target))
                .push("met", Cell::Bool(out.meets_target()))
                .push("target_ratio", Cell::Num(out.target_ratio()));
            let tag = match out.branch {
                Branch::Clique => "clique",
                Branch::Independent => "independent",
            };
            Output::new(
                Some(format!("{tag}: {}\n", join(&out.set))),
                r,
                out.verified,
            )
        }
        Command::Biclique {
            input,
            exact,
            greedy: _,
        } => {
            let graph = load(input)?.string_graph();
            let bic = if *exact {
                if graph.n() > EXACT_BICLIQUE_MAX_N {
                    return Err(CliError::BadInput(format!(
                        "exact biclique search handles at most {EXACT_BICLIQUE_MAX_N} vertices, got {}",
                        graph.n()
                    )));
                }
                max_biclique_exact(&graph)?
            } else {
                greedy_biclique(&graph)
            };
            let ok = bic.certifies(&graph);
            let mut r = Record::default();
            r.push(
                "method",
                Cell::text(if *exact { "exact" } else { "greedy" }),
            )
            .push("n", Cell::int(graph.n()))
            .push("m", Cell::int(graph.m()))
            .push("size", Cell::int(bic.size()))
            .push("valid", Cell::Bool(ok))
            .push(
                "lemma2_target",
                opt_num(lemma2_target(graph.n(), graph.m(), &g.params()?).ok()),
            );
            Output::new(
                Some(format!("A: {}\nB: {}\n", join(&bic.a), join(&bic.b))),
                r,
                ok,
            )
        }
        Command::Bound { t } => {
            check_t(*t)?;
            let bp =
                theorem3_bound(*t, &g.params()?).map_err(|e| CliError::BadInput(e.to_string()))?;
            let mut r = Record::default();
            r.push("t", Cell::int(*t))
                .push("d", Cell::Num(bp.d))
                .push("b", Cell::Num(bp.b))
                .push("log2_x", Cell::Num(bp.log2_x))
                .push("a", Cell::Num(bp.a))
                .push("log2_n0", Cell::Num(bp.log2_n0))
                .push("phi_n0", Cell::Num(bp.phi_n0))
                .push("ratio_n0", Cell::Num(bp.ratio_n0))
                .push("factors", Cell::int(bp.product.factors))
                .push("tail_bound", Cell::Num(bp.product.tail_bound))
                .push("q_lower", Cell::text(format!("{:.9e}", bp.product.lower)))
                .push("q", Cell::text(format!("{:.9e}", bp.q)))
                .push("e_b", Cell::Num(bp.b.exp()))
                .push("log2_bound_per_vertex", Cell::Num(bp.log2_bound_per_vertex))
                .push("bound_per_vertex", Cell::Num(bp.bound_per_vertex));
            Output::new(None, r, true)
        }
        Command::Crossings { input } => {
            let d = load_drawing(input)?;
            let stats = crossing_count(&d);
            let plane = stats.count == 0;
            let planar_ok = (plane && d.n() >= 3).then(|| d.m() <= 3 * d.n() - 6);
            let mut r = Record::default();
            r.push("n", Cell::int(d.n()))
                .push("m", Cell::int(d.m()))
                .push("crossings", Cell::int(stats.count))
                .push("ratio", opt_num(stats.ratio))
                .push(
                    "planar_edge_ok",
                    planar_ok.map_or(Cell::NotApplicable, Cell::Bool),
                );
            Output::new(None, r, planar_ok != Some(false))
        }
        Command::CrossingPairs { input } => {
            let d = load_drawing(input)?;
            let sets = crossing_pair_sets(&d);
            let ok = sets.certifies(&d);
            let name = |i: &usize| format!("{}-{}", d.edges()[*i].u, d.edges()[*i].v);
            let line = |set: &[usize]| set.iter().map(name).collect::<Vec<_>>().join(" ");
            let mut r = Record::default();
            r.push("n", Cell::int(d.n()))
                .push("m", Cell::int(d.m()))
                .push("size", Cell::int(sets.e1.len()))
                .push("valid", Cell::Bool(ok));
            Output::new(
                Some(format!("E1: {}\nE2: {}\n", line(&sets.e1), line(&sets.e2))),
                r,
                ok,
            )
        }
        Command::Quasiplanar { input, t } => {
            check_t(*t)?;
            let d = load_drawing(input)?;
            let mut r = Record::default();
            r.push("n", Cell::int(d.n()))
                .push("m", Cell::int(d.m()))
                .push("t", Cell::int(*t))
                .push("quasi_planar", Cell::Bool(quasi_planarity(&d, *t)?));
            Output::new(None, r, true)
        }
    };
    finish(g, output)
}

/// Report to stdout; the payload, or the report when there is none, to
/// `--out`.
fn finish(g: &GlobalArgs, output: Output) -> CliResult<String> {
    let report = output.report.render(g.format)?;
    if let Some(path) = &g.out {
        write_file(path, output.payload.as_deref().unwrap_or(&report))?;
    }
    if !output.ok {
        print!("{report}");
        return Err(CliError::Invariant(
            "a certificate failed its re-check".into(),
        ));
    }
    Ok(report)
}

/// For commands whose result is a file: the file goes to `--out` and the
/// report to stdout, or the file to stdout without `--out`.
fn emit_primary(g: &GlobalArgs, payload: &str, report: &Record) -> CliResult<String> {
    match &g.out {
        Some(path) => {
            write_file(path, payload)?;
            report.render(g.format)
        }
        None => Ok(payload.to_owned()),
    }
}

fn experiment(g: &GlobalArgs, config_path: &Path) -> CliResult<String> {
    let config = load_config(&read_file(config_path)?)?;
    let report = run_experiment(&config, g.overrides())?;
    let rows = match g.format {
        Format::Csv => report.to_csv()?,
        Format::Json => report.rows_json()?,
    };
    let failures = verify_bounds(&report).hard_failures();
    let stdout = match &g.out {
        Some(path) => {
            write_file(path, &rows)?;
            write_file(&path.with_extension("json"), &report.metadata_json()?)?;
            let mut r = Record::default();
            r.push("rows", Cell::int(report.rows.len()))
                .push("hard_failures", Cell::int(failures));
            r.render(g.format)?
        }
        None => rows,
    };
    if failures > 0 {
        print!("{stdout}");
        return Err(CliError::Invariant(format!(
            "{failures} hard checks failed"
        )));
    }
    Ok(stdout)
}

fn verify(g: &GlobalArgs, config_path: &Path) -> CliResult<String> {
    let config = load_config(&read_file(config_path)?)?;
    let report = run_experiment(&config, g.overrides())?;
    let verification = verify_bounds(&report);
    let listing = verification.render(g.format)?;
    if let Some(path) = &g.out {
        write_file(path, &listing)?;
    }
    let failures = verification.hard_failures();
    if failures > 0 {
        print!("{listing}");
        return Err(CliError::Invariant(format!(
            "{failures} hard checks failed"
        )));
    }
    Ok(listing)
}
