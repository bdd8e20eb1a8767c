//! Parsers for the demand and family literals accepted on the command
//! line.
//!
//! Demands: `K:{a,...},{b,...}` (complete bipartite), `S:{...}` (clique),
//! `P:(u,v);(x,y)` (explicit pairs). Families: `groupcut:ALPHA,BETA`,
//! `multiway:K`, `multicut:K`, each optionally suffixed `<=` before the
//! colon (e.g. `groupcut<=:2,1`) for the at-most-sizes variant.

use cutlab::family::{FamilyKind, InstanceFamily};
use cutlab::{DemandGraph, Error, Result};

pub fn parse_demands(text: &str, directed: bool) -> Result<DemandGraph> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("K:") {
        let (a, b) = split_two_sets(rest)?;
        return DemandGraph::bipartite(&a, &b, directed);
    }
    if let Some(rest) = text.strip_prefix("S:") {
        let s = parse_set(rest.trim())?;
        return DemandGraph::clique(&s, directed);
    }
    if let Some(rest) = text.strip_prefix("P:") {
        let mut pairs = Vec::new();
        for part in rest.split(';') {
            pairs.push(parse_pair(part.trim())?);
        }
        return DemandGraph::explicit(&pairs, directed);
    }
    Err(bad(format!(
        "demand literal must start with K:, S:, or P: (got {text:?})"
    )))
}

pub fn parse_family(text: &str, terminals: &[usize]) -> Result<InstanceFamily> {
    let text = text.trim();
    let (name, params) = text
        .split_once(':')
        .ok_or_else(|| bad(format!("family literal needs KIND:PARAMS (got {text:?})")))?;
    let (name, exact) = match name.strip_suffix("<=") {
        Some(base) => (base, false),
        None => (name, true),
    };
    let nums: Vec<usize> = params
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| bad(format!("invalid family parameter {p:?}")))
        })
        .collect::<Result<_>>()?;
    let kind = match (name, nums.as_slice()) {
        ("groupcut", [alpha, beta]) => FamilyKind::GroupCut {
            alpha: *alpha,
            beta: *beta,
        },
        ("multiway", [k]) => FamilyKind::Multiway { k: *k },
        ("multicut", [k]) => FamilyKind::Multicut { k: *k },
        _ => {
            return Err(bad(format!(
                "unknown family {text:?}; expected groupcut:A,B | multiway:K | multicut:K"
            )))
        }
    };
    InstanceFamily::new(kind, terminals, exact)
}

/// `0,3,5` or `0 3 5`.
pub fn parse_vertex_list(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| bad(format!("invalid vertex id {p:?}")))
        })
        .collect()
}

fn split_two_sets(rest: &str) -> Result<(Vec<usize>, Vec<usize>)> {
    let rest = rest.trim();
    let close = rest
        .find('}')
        .ok_or_else(|| bad("expected {a,...},{b,...}"))?;
    let first = &rest[..=close];
    let tail = rest[close + 1..].trim_start();
    let tail = tail
        .strip_prefix(',')
        .ok_or_else(|| bad("expected a comma between the two sets"))?;
    Ok((parse_set(first.trim())?, parse_set(tail.trim())?))
}

fn parse_set(text: &str) -> Result<Vec<usize>> {
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| bad(format!("expected a {{...}} set, got {text:?}")))?;
    parse_vertex_list(inner)
}

fn parse_pair(text: &str) -> Result<(usize, usize)> {
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| bad(format!("expected a (u,v) pair, got {text:?}")))?;
    let xs = parse_vertex_list(inner)?;
    match xs.as_slice() {
        [u, v] => Ok((*u, *v)),
        _ => Err(bad(format!(
            "pair needs exactly two vertices, got {text:?}"
        ))),
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
