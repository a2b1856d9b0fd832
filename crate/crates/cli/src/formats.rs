//! Text formats for graphs and stopping distributions.
//!
//! Both are line based; `#` starts a comment running to the end of the
//! line and blank lines are ignored. Numbers are integers or exact
//! fractions `p/q`.

use std::fmt::Write as _;

use horizon_core::rational::{parse_rational, to_fraction_string};
use horizon_core::{Edge, Rational, StoppingDistribution, WeightedGraph};

use crate::error::{CliError, CliResult};

/// Content lines with their 1-based line numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn parse_error(origin: &str, line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        origin: origin.to_string(),
        line,
        message: message.into(),
    }
}

fn parse_index(origin: &str, line: usize, field: &str, what: &str) -> CliResult<usize> {
    field.parse().map_err(|_| {
        parse_error(
            origin,
            line,
            format!("{what} `{field}` is not a natural number"),
        )
    })
}

/// Parses a graph file:
///
/// ```text
/// vertices <N>
/// edge <source> <target> <weight>
/// ```
///
/// The header comes first. Every vertex needs an outgoing edge and no
/// `(source, target)` pair may repeat.
pub fn parse_graph(text: &str, origin: &str) -> CliResult<WeightedGraph> {
    let mut vertex_count: Option<usize> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line, fields) in content_lines(text) {
        match (fields[0], vertex_count) {
            ("vertices", None) => {
                if fields.len() != 2 {
                    return Err(parse_error(origin, line, "expected `vertices <N>`"));
                }
                let n = parse_index(origin, line, fields[1], "vertex count")?;
                if n == 0 {
                    return Err(parse_error(
                        origin,
                        line,
                        "a graph needs at least one vertex",
                    ));
                }
                vertex_count = Some(n);
            }
            ("vertices", Some(_)) => {
                return Err(parse_error(origin, line, "repeated `vertices` header"));
            }
            ("edge", None) => {
                return Err(parse_error(
                    origin,
                    line,
                    "edge before the `vertices` header",
                ));
            }
            ("edge", Some(n)) => {
                if fields.len() != 4 {
                    return Err(parse_error(
                        origin,
                        line,
                        "expected `edge <source> <target> <weight>`",
                    ));
                }
                let source = parse_index(origin, line, fields[1], "source")?;
                let target = parse_index(origin, line, fields[2], "target")?;
                for v in [source, target] {
                    if v >= n {
                        return Err(parse_error(
                            origin,
                            line,
                            format!("vertex {v} out of range (graph has {n} vertices)"),
                        ));
                    }
                }
                let weight = parse_rational(fields[3]).ok_or_else(|| {
                    parse_error(
                        origin,
                        line,
                        format!("weight `{}` is not an integer or p/q", fields[3]),
                    )
                })?;
                if !seen.insert((source, target)) {
                    return Err(parse_error(
                        origin,
                        line,
                        format!("duplicate edge {source} -> {target}"),
                    ));
                }
                edges.push(Edge::new(source, target, weight));
            }
            (other, _) => {
                return Err(parse_error(
                    origin,
                    line,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }
    let n = vertex_count.ok_or_else(|| CliError::Invalid {
        origin: origin.to_string(),
        message: "missing `vertices` header".into(),
    })?;
    WeightedGraph::new(n, edges).map_err(|e| CliError::Invalid {
        origin: origin.to_string(),
        message: e.to_string(),
    })
}

/// Integers without a denominator, everything else as `p/q`.
fn format_weight(w: &Rational) -> String {
    if w.is_integer() {
        w.numer().to_string()
    } else {
        to_fraction_string(w)
    }
}

/// Canonical text of a graph: header, then edges by source and target.
pub fn print_graph(graph: &WeightedGraph) -> String {
    let mut out = format!("vertices {}\n", graph.vertex_count());
    for e in graph.edges() {
        writeln!(
            out,
            "edge {} {} {}",
            e.source,
            e.target,
            format_weight(&e.weight)
        )
        .unwrap();
    }
    out
}

/// Parses a distribution file: one `<time> <probability>` per line, times
/// strictly increasing, probabilities positive and summing to exactly 1.
pub fn parse_distribution(text: &str, origin: &str) -> CliResult<StoppingDistribution> {
    let mut points: Vec<(u64, Rational)> = Vec::new();
    for (line, fields) in content_lines(text) {
        if fields.len() != 2 {
            return Err(parse_error(origin, line, "expected `<time> <probability>`"));
        }
        let t: u64 = fields[0].parse().map_err(|_| {
            parse_error(
                origin,
                line,
                format!("time `{}` is not a natural number", fields[0]),
            )
        })?;
        let p = parse_rational(fields[1]).ok_or_else(|| {
            parse_error(
                origin,
                line,
                format!("probability `{}` is not an integer or p/q", fields[1]),
            )
        })?;
        if let Some((last, _)) = points.last() {
            if t <= *last {
                return Err(parse_error(
                    origin,
                    line,
                    format!("time {t} does not exceed the previous time {last}"),
                ));
            }
        }
        if p <= Rational::from_integer(0.into()) {
            return Err(parse_error(
                origin,
                line,
                format!("probability {p} is not positive"),
            ));
        }
        points.push((t, p));
    }
    StoppingDistribution::new(points).map_err(|e| CliError::Invalid {
        origin: origin.to_string(),
        message: e.to_string(),
    })
}

pub fn print_distribution(dist: &StoppingDistribution) -> String {
    let mut out = String::new();
    for (t, p) in dist.points() {
        writeln!(out, "{t} {}", to_fraction_string(p)).unwrap();
    }
    out
}
