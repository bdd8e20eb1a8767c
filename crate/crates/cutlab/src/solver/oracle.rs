//! The brute-force reference solver: exhaustive minimization of the cut
//! function over every partition of the vertex set that agrees with the
//! demands. Exponential (Bell-number scale) and guarded accordingly;
//! every faster solver in this crate is cross-checked against it.

use crate::demand::DemandGraph;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::partition::AllPartitions;
use crate::solver::CutResult;

/// Partition enumeration is Bell(n); Bell(12) ~ 4.2e6 keeps a single
/// oracle call in the tens of milliseconds.
pub const ORACLE_MAX_N: usize = 12;

pub fn mincut_oracle(g: &WeightedGraph, demands: &DemandGraph) -> Result<CutResult> {
    if g.is_directed() {
        return Err(Error::contract(
            "mincut_oracle enumerates partitions of an undirected graph; use directed_mincut",
        ));
    }
    let n = g.vertex_count();
    if n > ORACLE_MAX_N {
        return Err(Error::guard(format!(
            "partition enumeration refused for n = {n} > {ORACLE_MAX_N}"
        )));
    }
    if n == 0 {
        return Err(Error::contract("empty graph"));
    }
    demands.check_range(n)?;
    if demands.pairs().iter().any(|&(u, v)| u == v) {
        return Err(Error::contract("infeasible demands: self-pair"));
    }

    // Lexicographic enumeration means the first optimum seen is the
    // canonically smallest, so a strict `<` keeps the tie-break rule.
    let mut best: Option<CutResult> = None;
    for p in AllPartitions::new(n) {
        if !crate::demand::agrees(&p, demands) {
            continue;
        }
        let value = g.cut_of_labels(p.blocks());
        match &best {
            Some(b) if b.value <= value => {}
            _ => {
                best = Some(CutResult {
                    value,
                    partition: p,
                })
            }
        }
    }
    best.ok_or_else(|| Error::contract("no partition agrees with the demands"))
}
