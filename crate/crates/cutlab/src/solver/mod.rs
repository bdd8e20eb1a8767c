//! Exact minimum-cut solvers.
//!
//! `st_mincut` and `groupcut` run in polynomial time via max-flow;
//! `multiway` and `multicut` are NP-hard in general and are solved
//! exactly by guarded enumeration, as is `directed_mincut` for
//! multi-pair demands. `mincut_oracle` is the brute-force reference
//! every other route is tested against.

mod dinic;
mod oracle;

pub use oracle::{mincut_oracle, ORACLE_MAX_N};

use crate::demand::{DemandGraph, DemandKind};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::partition::Partition;
use crate::weight::Weight;
use dinic::FlowNetwork;

/// Assignment enumeration cap for `multiway` (k^(n-k) candidate maps).
pub const MULTIWAY_MAX_ASSIGNMENTS: u64 = 10_000_000;
/// Edge-subset enumeration cap for `directed_mincut`.
pub const DIRECTED_MAX_EDGES: usize = 24;

/// An optimal value together with a partition attaining it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CutResult {
    pub value: Weight,
    pub partition: Partition,
}

/// Minimum-weight edge set separating `s` from `t`, via max-flow.
/// The returned partition is the residual-reachability split, so it
/// attains the value and separates the pair.
pub fn st_mincut(g: &WeightedGraph, s: usize, t: usize) -> Result<CutResult> {
    let n = g.vertex_count();
    if s == t {
        return Err(Error::contract("st_mincut requires s != t"));
    }
    if s >= n || t >= n {
        return Err(Error::contract(format!(
            "terminal out of range for {n} vertices"
        )));
    }
    let mut net = FlowNetwork::new(n);
    for e in g.edges() {
        if g.is_directed() {
            net.add_arc(e.u, e.v, e.w.clone());
        } else {
            net.add_undirected(e.u, e.v, e.w.clone());
        }
    }
    let value = net.max_flow(s, t);
    let reach = net.residual_reachable(s);
    let labels: Vec<usize> = reach.iter().map(|&r| !r as usize).collect();
    let partition = Partition::new(&labels);
    debug_assert!(!reach[t]);
    debug_assert_eq!(g.cut_of_labels(partition.blocks()), value);
    Ok(CutResult { value, partition })
}

/// Minimum cut separating every vertex of `a` from every vertex of `b`:
/// contract each side to a single super-vertex, run `st_mincut`, and
/// lift the split back through the contraction maps. Exact because some
/// optimal partition has exactly two parts, one containing all of `a`
/// and one all of `b`.
pub fn groupcut(g: &WeightedGraph, a: &[usize], b: &[usize]) -> Result<CutResult> {
    if g.is_directed() {
        return Err(Error::contract("groupcut requires an undirected graph"));
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::contract("groupcut requires nonempty sides"));
    }
    if a.iter().any(|x| b.contains(x)) {
        return Err(Error::contract("groupcut sides intersect"));
    }
    if let Some(&bad) = a.iter().chain(b).find(|&&v| v >= g.vertex_count()) {
        return Err(Error::contract(format!(
            "vertex {bad} out of range for {} vertices",
            g.vertex_count()
        )));
    }
    let (g1, map1) = g.contract(a)?;
    let b1: Vec<usize> = {
        let mut v: Vec<usize> = b.iter().map(|&x| map1[x]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let (g2, map2) = g1.contract(&b1)?;
    let s = map2[map1[a[0]]];
    let t = map2[map1[b[0]]];
    let flat = st_mincut(&g2, s, t)?;
    let labels: Vec<usize> = (0..g.vertex_count())
        .map(|v| flat.partition.block_of(map2[map1[v]]))
        .collect();
    let partition = Partition::new(&labels);
    debug_assert_eq!(g.cut_of_labels(partition.blocks()), flat.value);
    Ok(CutResult {
        value: flat.value,
        partition,
    })
}

/// Minimum cut separating every pair of `s` (the clique demand K_S).
/// Exact enumeration over assignments of non-terminals to the k
/// terminal-rooted blocks; an optimal solution never needs more than k
/// parts, since surplus parts can be merged without raising the value.
pub fn multiway(g: &WeightedGraph, s: &[usize]) -> Result<CutResult> {
    if g.is_directed() {
        return Err(Error::contract("multiway requires an undirected graph"));
    }
    let n = g.vertex_count();
    let mut terms = s.to_vec();
    terms.sort_unstable();
    terms.dedup();
    if terms.len() < 2 {
        return Err(Error::contract("multiway requires at least 2 terminals"));
    }
    if let Some(&bad) = terms.iter().find(|&&v| v >= n) {
        return Err(Error::contract(format!(
            "terminal {bad} out of range for {n} vertices"
        )));
    }
    let k = terms.len();
    let free: Vec<usize> = (0..n).filter(|v| !terms.contains(v)).collect();
    let combos = (k as u64).checked_pow(free.len() as u32);
    match combos {
        Some(c) if c <= MULTIWAY_MAX_ASSIGNMENTS => {}
        _ => {
            return Err(Error::guard(format!(
                "multiway assignment enumeration {k}^{} exceeds {MULTIWAY_MAX_ASSIGNMENTS}",
                free.len()
            )))
        }
    }

    let mut labels = vec![0usize; n];
    for (block, &t) in terms.iter().enumerate() {
        labels[t] = block;
    }
    let mut assign = vec![0usize; free.len()];
    let mut best: Option<CutResult> = None;
    loop {
        for (i, &v) in free.iter().enumerate() {
            labels[v] = assign[i];
        }
        let value = g.cut_of_labels(&labels);
        let better = match &best {
            None => true,
            Some(b) => {
                value < b.value || (value == b.value && Partition::new(&labels) < b.partition)
            }
        };
        if better {
            best = Some(CutResult {
                value,
                partition: Partition::new(&labels),
            });
        }
        // Odometer over assignments.
        let mut i = free.len();
        loop {
            if i == 0 {
                let best = best.expect("at least one assignment enumerated");
                return Ok(best);
            }
            i -= 1;
            assign[i] += 1;
            if assign[i] < k {
                break;
            }
            assign[i] = 0;
        }
    }
}

/// Minimum cut separating every listed demand pair; exact via the
/// partition-enumeration oracle.
pub fn multicut(g: &WeightedGraph, demands: &DemandGraph) -> Result<CutResult> {
    mincut_oracle(g, demands)
}

/// Minimum total weight of an edge set whose removal eliminates every
/// demanded directed path. Single-pair demands go through directed
/// max-flow; multi-pair demands are solved exactly by guarded edge
/// subset enumeration.
pub fn directed_mincut(g: &WeightedGraph, demands: &DemandGraph) -> Result<Weight> {
    if !g.is_directed() {
        return Err(Error::contract("directed_mincut requires a directed graph"));
    }
    if !demands.is_directed() {
        return Err(Error::contract(
            "directed_mincut requires ordered (directed) demands",
        ));
    }
    let n = g.vertex_count();
    demands.check_range(n)?;
    if demands.is_empty() {
        return Ok(Weight::ZERO);
    }
    if demands.len() == 1 {
        let (s, t) = demands.pairs()[0];
        let mut net = FlowNetwork::new(n);
        for e in g.edges() {
            net.add_arc(e.u, e.v, e.w.clone());
        }
        return Ok(net.max_flow(s, t));
    }

    let m = g.edge_count();
    if m > DIRECTED_MAX_EDGES {
        return Err(Error::guard(format!(
            "edge subset enumeration refused for m = {m} > {DIRECTED_MAX_EDGES}"
        )));
    }
    let mut best: Option<Weight> = None;
    for mask in 0u64..(1u64 << m) {
        let weight: Weight = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| &e.w)
            .sum();
        if let Some(b) = &best {
            if weight >= *b {
                continue;
            }
        }
        if severs_all(g, mask, demands) {
            best = Some(weight);
        }
    }
    // Removing every edge always works, so a minimum exists.
    Ok(best.expect("full edge set severs every demand"))
}

fn severs_all(g: &WeightedGraph, removed: u64, demands: &DemandGraph) -> bool {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (i, e) in g.edges().iter().enumerate() {
        if removed >> i & 1 == 0 {
            adj[e.u].push(e.v);
        }
    }
    demands.pairs().iter().all(|&(s, t)| {
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            if u == t {
                return false;
            }
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        true
    })
}

/// Exact minimum cut for an arbitrary demand graph on an undirected
/// graph, dispatched to the cheapest exact route for the demand kind.
pub fn solve(g: &WeightedGraph, demands: &DemandGraph) -> Result<CutResult> {
    if demands.is_empty() {
        return Ok(CutResult {
            value: Weight::ZERO,
            partition: Partition::single_block(g.vertex_count()),
        });
    }
    match demands.kind() {
        DemandKind::Bipartite { a, b } => groupcut(g, a, b),
        DemandKind::Clique { s } => multiway(g, s),
        DemandKind::Explicit => mincut_oracle(g, demands),
    }
}
