//! Plain-text formats.
//!
//! Curve family, one curve per line (`#` starts a comment line):
//!
//! ```text
//! 0: 0,0 4,0 4,4
//! 1: 2,-1 2,1
//! ```
//!
//! Graph: header `n m`, then one `u v` line per edge with `u < v`.
//!
//! Drawing: a `[points]` section of `id: x,y` lines and an `[edges]` section
//! of `u v: x1,y1 x2,y2 ...` lines whose first and last points are the
//! endpoints' coordinates.
//!
//! Separator: three lines `S:`, `V1:`, `V2:` each followed by vertex indices.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{Point, Polyline};
use crate::graph::Graph;
use crate::separators::SeparatorResult;
use crate::string_graph::{CurveFamily, Drawing};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| {
        parse_err(
            line,
            format!("expected a non-negative integer, got `{tok}`"),
        )
    })
}

fn parse_point(tok: &str, line: usize) -> Result<Point> {
    let (x, y) = tok
        .split_once(',')
        .ok_or_else(|| parse_err(line, format!("expected `x,y`, got `{tok}`")))?;
    let coord = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| parse_err(line, format!("bad coordinate `{s}`")))
    };
    Point::new(coord(x)?, coord(y)?).map_err(|e| parse_err(line, e.to_string()))
}

fn parse_polyline(body: &str, line: usize) -> Result<Polyline> {
    let points = body
        .split_whitespace()
        .map(|tok| parse_point(tok, line))
        .collect::<Result<Vec<_>>>()?;
    Polyline::new(points).map_err(|e| parse_err(line, e.to_string()))
}

fn write_polyline(out: &mut String, curve: &Polyline) {
    for (i, p) in curve.vertices().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{p}");
    }
}

/// Collects `id: payload` entries into a dense vector indexed by id.
fn dense<T>(entries: Vec<(usize, usize, T)>, what: &str) -> Result<Vec<T>> {
    let n = entries.len();
    let mut slots: Vec<Option<T>> = (0..n).map(|_| None).collect();
    for (line, id, item) in entries {
        if id >= n {
            return Err(parse_err(
                line,
                format!("{what} id {id} out of range 0..{n}"),
            ));
        }
        if slots[id].replace(item).is_some() {
            return Err(parse_err(line, format!("duplicate {what} id {id}")));
        }
    }
    Ok(slots
        .into_iter()
        .map(|s| s.expect("ids are a permutation"))
        .collect())
}

pub fn parse_curve_family(text: &str) -> Result<CurveFamily> {
    let mut entries = Vec::new();
    for (line, l) in content_lines(text) {
        let (id, body) = l
            .split_once(':')
            .ok_or_else(|| parse_err(line, "expected `id: x1,y1 x2,y2 ...`"))?;
        entries.push((
            line,
            parse_usize(id.trim(), line)?,
            parse_polyline(body, line)?,
        ));
    }
    Ok(CurveFamily::new(dense(entries, "curve")?))
}

pub fn write_curve_family(family: &CurveFamily) -> String {
    let mut out = String::new();
    for (i, c) in family.curves.iter().enumerate() {
        let _ = write!(out, "{i}: ");
        write_polyline(&mut out, c);
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let mut it = header.split_whitespace();
    let (n, m) = match (it.next(), it.next(), it.next()) {
        (Some(n), Some(m), None) => (parse_usize(n, hline)?, parse_usize(m, hline)?),
        _ => return Err(parse_err(hline, "header must be `n m`")),
    };
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let mut it = l.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (parse_usize(u, line)?, parse_usize(v, line)?),
            _ => return Err(parse_err(line, "edge line must be `u v`")),
        };
        if u >= v || v >= n {
            return Err(parse_err(
                line,
                format!("edge `{u} {v}` needs u < v < n = {n}"),
            ));
        }
        edges.push((u, v));
    }
    let g = Graph::from_edges(n, edges)?;
    if g.m() != m {
        return Err(parse_err(
            hline,
            format!("header promises {m} edges, found {} distinct", g.m()),
        ));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_drawing(text: &str) -> Result<Drawing> {
    #[derive(PartialEq)]
    enum Section {
        None,
        Points,
        Edges,
    }
    let mut section = Section::None;
    let mut points = Vec::new();
    let mut edges = Vec::new();
    for (line, l) in content_lines(text) {
        match l {
            "[points]" => section = Section::Points,
            "[edges]" => section = Section::Edges,
            _ => {
                let (head, body) = l
                    .split_once(':')
                    .ok_or_else(|| parse_err(line, "expected `head: payload`"))?;
                match section {
                    Section::Points => {
                        let id = parse_usize(head.trim(), line)?;
                        points.push((line, id, parse_point(body.trim(), line)?));
                    }
                    Section::Edges => {
                        let mut it = head.split_whitespace();
                        let (u, v) = match (it.next(), it.next(), it.next()) {
                            (Some(u), Some(v), None) => {
                                (parse_usize(u, line)?, parse_usize(v, line)?)
                            }
                            _ => return Err(parse_err(line, "edge head must be `u v`")),
                        };
                        edges.push((u, v, parse_polyline(body, line)?));
                    }
                    Section::None => {
                        return Err(parse_err(line, "content before `[points]`"));
                    }
                }
            }
        }
    }
    Drawing::new(dense(points, "point")?, edges)
}

pub fn write_drawing(d: &Drawing) -> String {
    let mut out = String::from("[points]\n");
    for (i, p) in d.points().iter().enumerate() {
        let _ = writeln!(out, "{i}: {p}");
    }
    out.push_str("[edges]\n");
    for e in d.edges() {
        let _ = write!(out, "{} {}: ", e.u, e.v);
        write_polyline(&mut out, &e.curve);
        out.push('\n');
    }
    out
}

fn join(set: &[usize]) -> String {
    set.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn write_separator(sep: &SeparatorResult) -> String {
    format!(
        "S: {}\nV1: {}\nV2: {}\n",
        join(&sep.s),
        join(&sep.v1),
        join(&sep.v2)
    )
}

pub fn parse_separator(text: &str) -> Result<SeparatorResult> {
    let mut sep = SeparatorResult::default();
    let mut seen = [false; 3];
    for (line, l) in content_lines(text) {
        let (tag, body) = l
            .split_once(':')
            .ok_or_else(|| parse_err(line, "expected `S:`, `V1:` or `V2:`"))?;
        let (slot, idx) = match tag.trim() {
            "S" => (&mut sep.s, 0),
            "V1" => (&mut sep.v1, 1),
            "V2" => (&mut sep.v2, 2),
            other => return Err(parse_err(line, format!("unknown tag `{other}`"))),
        };
        seen[idx] = true;
        *slot = body
            .split_whitespace()
            .map(|t| parse_usize(t, line))
            .collect::<Result<Vec<_>>>()?;
    }
    if seen != [true; 3] {
        return Err(parse_err(0, "separator file needs S, V1 and V2 lines"));
    }
    Ok(sep)
}

/// Whitespace-separated vertex indices on one line.
pub fn write_vertex_set(set: &[usize]) -> String {
    format!("{}\n", join(set))
}

/// Which format a text file is in, by its first content line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    CurveFamily,
    Graph,
    Drawing,
}

pub fn sniff(text: &str) -> Option<FileKind> {
    let (_, first) = content_lines(text).next()?;
    if first == "[points]" {
        Some(FileKind::Drawing)
    } else if first.contains(':') {
        Some(FileKind::CurveFamily)
    } else {
        Some(FileKind::Graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{convex_drawing, random_segments};

    #[test]
    fn curve_family_round_trip_and_comments() {
        let family = random_segments(7, 40, 3).unwrap();
        let text = write_curve_family(&family);
        assert_eq!(parse_curve_family(&text).unwrap(), family);

        let with_comments = "# header\n1: 2,-1 2,1\n\n0: 0,0 4,0 4,4\n";
        let parsed = parse_curve_family(with_comments).unwrap();
        assert_eq!(parsed.curves[0].vertices().len(), 3);
        assert!(parse_curve_family("0: 0,0 0,0\n").is_err());
        assert!(parse_curve_family("0: 0,0 1,1\n0: 1,1 2,2\n").is_err());
        assert!(parse_curve_family("0: 0,0 1;1\n").is_err());
    }

    #[test]
    fn graph_format() {
        let g = Graph::cycle(5);
        let text = write_graph(&g);
        assert!(text.starts_with("5 5\n0 1\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert!(parse_graph("3 1\n1 0\n").is_err());
        assert!(parse_graph("3 2\n0 1\n").is_err());
        assert!(parse_graph("3 1\n0 3\n").is_err());
    }

    #[test]
    fn drawing_format() {
        let d = convex_drawing(5).unwrap();
        let text = write_drawing(&d);
        assert_eq!(parse_drawing(&text).unwrap(), d);
        let bad_end = "[points]\n0: 0,0\n1: 4,0\n[edges]\n0 1: 0,0 3,0\n";
        assert!(parse_drawing(bad_end).is_err());
    }

    #[test]
    fn separator_format() {
        let sep = SeparatorResult {
            s: vec![4],
            v1: vec![0, 1, 2, 3],
            v2: vec![5, 6, 7, 8],
        };
        let text = write_separator(&sep);
        assert_eq!(text, "S: 4\nV1: 0 1 2 3\nV2: 5 6 7 8\n");
        assert_eq!(parse_separator(&text).unwrap(), sep);
        let empty = SeparatorResult::default();
        assert_eq!(parse_separator(&write_separator(&empty)).unwrap(), empty);
    }

    #[test]
    fn sniffing() {
        assert_eq!(sniff("# c\n0: 0,0 1,1\n"), Some(FileKind::CurveFamily));
        assert_eq!(sniff("3 0\n"), Some(FileKind::Graph));
        assert_eq!(sniff("[points]\n"), Some(FileKind::Drawing));
        assert_eq!(sniff("\n"), None);
    }
}
