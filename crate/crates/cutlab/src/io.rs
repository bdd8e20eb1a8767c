//! The line-oriented graph file format.
//!
//! Header `n m d` with `d` either `u` (undirected) or `d` (directed),
//! followed by `m` lines `u v w` with 0-based vertex ids and decimal
//! weights. Lines starting with `#` are comments and may appear
//! anywhere; blank lines are ignored.

use std::io::{BufRead, BufReader, Read, Write};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::weight::Weight;

pub fn load_graph(input: impl Read) -> Result<WeightedGraph> {
    let reader = BufReader::new(input);
    let mut header: Option<(usize, usize, bool)> = None;
    let mut edges: Vec<(usize, usize, Weight)> = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = text.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 3 {
                    return Err(parse_err(line_no, "expected header `n m d`"));
                }
                let n = parse_usize(fields[0], line_no, "vertex count")?;
                let m = parse_usize(fields[1], line_no, "edge count")?;
                let directed = match fields[2] {
                    "u" => false,
                    "d" => true,
                    other => {
                        return Err(parse_err(
                            line_no,
                            format!("direction flag must be `u` or `d`, got {other:?}"),
                        ))
                    }
                };
                header = Some((n, m, directed));
            }
            Some((n, m, _)) => {
                if edges.len() == m {
                    return Err(parse_err(line_no, format!("more than {m} edge lines")));
                }
                if fields.len() != 3 {
                    return Err(parse_err(line_no, "expected edge line `u v w`"));
                }
                let u = parse_usize(fields[0], line_no, "vertex id")?;
                let v = parse_usize(fields[1], line_no, "vertex id")?;
                for x in [u, v] {
                    if x >= n {
                        return Err(parse_err(
                            line_no,
                            format!("vertex id {x} out of range for {n} vertices"),
                        ));
                    }
                }
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
                }
                let w: Weight = fields[2]
                    .parse()
                    .map_err(|e: String| parse_err(line_no, e))?;
                edges.push((u, v, w));
            }
        }
    }

    let (n, m, directed) = header.ok_or_else(|| parse_err(0, "empty input: missing header"))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("header promised {m} edges, found {}", edges.len()),
        ));
    }
    WeightedGraph::new(n, edges, directed)
}

pub fn load_graph_str(text: &str) -> Result<WeightedGraph> {
    load_graph(text.as_bytes())
}

/// Writes the graph in the same format, with optional leading comments
/// (written as `# ...` lines).
pub fn write_graph(g: &WeightedGraph, comments: &[String], mut out: impl Write) -> Result<()> {
    for c in comments {
        writeln!(out, "# {c}")?;
    }
    writeln!(
        out,
        "{} {} {}",
        g.vertex_count(),
        g.edge_count(),
        if g.is_directed() { "d" } else { "u" }
    )?;
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.w)?;
    }
    Ok(())
}

pub fn graph_to_string(g: &WeightedGraph, comments: &[String]) -> String {
    let mut buf = Vec::new();
    write_graph(g, comments, &mut buf).expect("write to Vec cannot fail");
    String::from_utf8(buf).expect("graph text is ASCII")
}

fn parse_usize(s: &str, line: usize, what: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} {s:?}")))
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
