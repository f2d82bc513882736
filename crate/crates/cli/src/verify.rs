//! Row-by-row checking of an experiment report.
//!
//! Hard checks are structural: a certificate that fails its re-check means a
//! bug. Bound comparisons are informational, since the constants in the
//! bounds are free parameters.

use serde::Serialize;

use crate::error::CliResult;
use crate::experiment::{ExperimentReport, ReportRow};
use crate::report::{rows_to_csv, to_json, Cell, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Hard,
    Info,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub row: usize,
    pub instance: String,
    pub check: &'static str,
    pub kind: CheckKind,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Verification {
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn hard_failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.kind == CheckKind::Hard && c.status == Status::Fail)
            .count()
    }

    pub fn find(&self, row: usize, check: &str) -> Option<&Check> {
        self.checks
            .iter()
            .find(|c| c.row == row && c.check == check)
    }

    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Csv => rows_to_csv(&self.checks),
            Format::Json => to_json(&self.checks),
        }
    }
}

fn status_of(cell: &Cell) -> Option<Status> {
    match cell {
        Cell::Empty => None,
        Cell::Bool(true) => Some(Status::Pass),
        Cell::Bool(false) => Some(Status::Fail),
        Cell::Skipped(_) => Some(Status::Skipped),
        _ => Some(Status::NotApplicable),
    }
}

/// Compares `measured` against `bound`; `at_most` selects the direction.
fn compare(measured: &Cell, bound: &Cell, at_most: bool) -> Option<(Status, String)> {
    if measured.is_empty() && bound.is_empty() {
        return None;
    }
    Some(match (measured.as_f64(), bound.as_f64()) {
        (Some(x), Some(b)) => {
            let ok = if at_most { x <= b } else { x >= b };
            let op = if at_most { "<=" } else { ">=" };
            let detail = format!("{} {op} {}", Cell::Num(x), Cell::Num(b));
            (if ok { Status::Pass } else { Status::Fail }, detail)
        }
        _ if matches!(measured, Cell::Skipped(_)) || matches!(bound, Cell::Skipped(_)) => {
            (Status::Skipped, format!("{measured} vs {bound}"))
        }
        _ => (Status::NotApplicable, format!("{measured} vs {bound}")),
    })
}

fn row_checks(i: usize, row: &ReportRow) -> Vec<Check> {
    let instance = row.label();
    let mut out = Vec::new();
    let mut push = |check: &'static str, kind: CheckKind, status: Status, detail: String| {
        out.push(Check {
            row: i,
            instance: instance.clone(),
            check,
            kind,
            status,
            detail,
        });
    };

    let hard: [(&'static str, &Cell, &Cell); 7] = [
        ("separator_valid", &row.sep_valid, &row.sep_size),
        ("independent_set_valid", &row.indep_valid, &row.indep_size),
        ("coloring_proper", &row.coloring_proper, &row.colors),
        ("biclique_valid", &row.biclique_valid, &row.biclique_size),
        ("eh_certificate_valid", &row.eh_valid, &row.eh_size),
        (
            "crossing_pairs_valid",
            &row.crossing_pairs_valid,
            &row.crossing_pairs,
        ),
        (
            "planar_edges_at_most_3n_minus_6",
            &row.planar_edge_ok,
            &row.m,
        ),
    ];
    for (name, flag, size) in hard {
        if let Some(status) = status_of(flag).filter(|&s| s != Status::NotApplicable) {
            push(name, CheckKind::Hard, status, format!("size {size}"));
        }
    }

    if let Some(status) = status_of(&row.kt_free) {
        let detail = match status {
            Status::Fail => format!("contains K_{}; t-dependent bounds not applicable", row.t),
            _ => format!("no K_{}", row.t),
        };
        push("kt_free", CheckKind::Info, status, detail);
    }
    let info: [(&'static str, &Cell, &Cell, bool); 6] = [
        (
            "separator_within_lemma1_bound",
            &row.sep_size,
            &row.lemma1_bound,
            true,
        ),
        (
            "independent_set_reaches_eq1_target",
            &row.indep_size,
            &row.eq1_target,
            false,
        ),
        (
            "colors_within_theorem1_bound",
            &row.colors,
            &row.color_bound,
            true,
        ),
        (
            "biclique_reaches_lemma2_target",
            &row.biclique_size,
            &row.lemma2_target,
            false,
        ),
        ("eh_reaches_target", &row.eh_size, &row.eh_target, false),
        (
            "edges_within_theorem3_bound",
            &row.edges_per_vertex,
            &row.theorem3_bound_per_vertex,
            true,
        ),
    ];
    for (name, measured, bound, at_most) in info {
        // a t-dependent bound on a graph that is not K_t-free does not apply
        if bound == &Cell::NotApplicable {
            if !measured.is_empty() {
                push(
                    name,
                    CheckKind::Info,
                    Status::NotApplicable,
                    "bound not applicable".into(),
                );
            }
            continue;
        }
        if name == "edges_within_theorem3_bound" && row.theorem3_ratio == Cell::NotApplicable {
            push(
                name,
                CheckKind::Info,
                Status::NotApplicable,
                format!("contains K_{{{0},{0}}}", row.t),
            );
            continue;
        }
        if let Some((status, detail)) = compare(measured, bound, at_most) {
            push(name, CheckKind::Info, status, detail);
        }
    }
    if let Some(status) = status_of(&row.quasi_planar).filter(|&s| s != Status::NotApplicable) {
        push(
            "quasi_planar",
            CheckKind::Info,
            status,
            format!("no {} pairwise crossing edges", row.t),
        );
    }
    out
}

/// Every check for every row, in row order.
pub fn verify_bounds(report: &ExperimentReport) -> Verification {
    Verification {
        checks: report
            .rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row_checks(i, row))
            .collect(),
    }
}
