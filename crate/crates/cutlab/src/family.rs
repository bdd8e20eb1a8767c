//! Demand-graph families over a terminal set: enumeration, exact
//! distinct-value counts, redundancy factors, and the matching
//! theoretical upper bounds on how many distinct values can occur.

use std::collections::BTreeSet;
use std::fmt;

use crate::combin::{binomial, combinations_of};
use crate::demand::DemandGraph;
use crate::error::{Error, Result};
use crate::exec::try_map;
use crate::graph::WeightedGraph;
use crate::solver;
use crate::weight::Weight;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    /// Complete-bipartite demands K_{A,B} with |A| = alpha, |B| = beta.
    GroupCut { alpha: usize, beta: usize },
    /// Clique demands K_S with |S| = k.
    Multiway { k: usize },
    /// Explicit k-pair demand sets.
    Multicut { k: usize },
}

/// A family of demand graphs over a terminal set. With `exact_sizes`
/// the side/set sizes are exactly the stated parameters; without it the
/// family also contains every smaller-sized instance (sides down to 1,
/// multiway sets down to 2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InstanceFamily {
    kind: FamilyKind,
    terminals: Vec<usize>,
    exact_sizes: bool,
}

impl InstanceFamily {
    pub fn new(kind: FamilyKind, terminals: &[usize], exact_sizes: bool) -> Result<InstanceFamily> {
        let mut t = terminals.to_vec();
        t.sort_unstable();
        t.dedup();
        if t.len() != terminals.len() {
            return Err(Error::contract("duplicate terminals"));
        }
        let tn = t.len();
        match kind {
            FamilyKind::GroupCut { alpha, beta } => {
                if alpha == 0 || beta == 0 {
                    return Err(Error::contract("group-cut sizes must be at least 1"));
                }
                if alpha + beta > tn {
                    return Err(Error::contract(format!(
                        "group-cut needs alpha + beta = {} terminals, have {tn}",
                        alpha + beta
                    )));
                }
            }
            FamilyKind::Multiway { k } => {
                if k < 2 {
                    return Err(Error::contract("multiway needs k >= 2"));
                }
                if k > tn {
                    return Err(Error::contract(format!(
                        "multiway needs k = {k} terminals, have {tn}"
                    )));
                }
            }
            FamilyKind::Multicut { k } => {
                if k == 0 {
                    return Err(Error::contract("multicut needs k >= 1"));
                }
                if k as u64 > binomial(tn, 2) {
                    return Err(Error::contract(format!(
                        "multicut needs k = {k} <= C({tn},2) = {}",
                        binomial(tn, 2)
                    )));
                }
            }
        }
        Ok(InstanceFamily {
            kind,
            terminals: t,
            exact_sizes,
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn terminals(&self) -> &[usize] {
        &self.terminals
    }

    pub fn exact_sizes(&self) -> bool {
        self.exact_sizes
    }

    fn size_range(&self, exact: usize, min: usize) -> std::ops::RangeInclusive<usize> {
        if self.exact_sizes {
            exact..=exact
        } else {
            min..=exact
        }
    }

    /// Every demand graph of the family exactly once, in a canonical
    /// order: ascending sizes, then lexicographic over the sorted vertex
    /// sets (or the sorted pair list for multicut). K_{A,B} and K_{B,A}
    /// are the same demand graph, so for equal side sizes only the
    /// lexicographically ordered pair is emitted; the family is a *set*
    /// of demand graphs and its counts follow set semantics.
    pub fn enumerate(&self) -> Vec<DemandGraph> {
        let t = &self.terminals;
        let mut out = Vec::new();
        match self.kind {
            FamilyKind::GroupCut { alpha, beta } => {
                let mut seen = BTreeSet::new();
                for a_size in self.size_range(alpha, 1) {
                    for b_size in self.size_range(beta, 1) {
                        for a in combinations_of(t, a_size) {
                            let rest: Vec<usize> =
                                t.iter().copied().filter(|x| !a.contains(x)).collect();
                            for b in combinations_of(&rest, b_size) {
                                let key = if (a.len(), &a) <= (b.len(), &b) {
                                    (a.clone(), b.clone())
                                } else {
                                    (b.clone(), a.clone())
                                };
                                if !seen.insert(key) {
                                    continue;
                                }
                                out.push(
                                    DemandGraph::bipartite(&a, &b, false)
                                        .expect("disjoint sides by construction"),
                                );
                            }
                        }
                    }
                }
            }
            FamilyKind::Multiway { k } => {
                for size in self.size_range(k, 2) {
                    for s in combinations_of(t, size) {
                        out.push(DemandGraph::clique(&s, false).expect("valid clique demand"));
                    }
                }
            }
            FamilyKind::Multicut { k } => {
                let mut pairs = Vec::new();
                for (i, &u) in t.iter().enumerate() {
                    for &v in &t[i + 1..] {
                        pairs.push((u, v));
                    }
                }
                for size in self.size_range(k, 1) {
                    for chosen in combinations_of(&pairs, size) {
                        out.push(DemandGraph::explicit(&chosen, false).expect("no self-pairs"));
                    }
                }
            }
        }
        out
    }

    /// |family| without materializing it.
    pub fn instance_count(&self) -> u64 {
        let tn = self.terminals.len();
        match self.kind {
            FamilyKind::GroupCut { alpha, beta } => {
                // One term per unordered size pair {p, q} the family
                // admits; equal-size pairs halve since the two
                // orientations name the same demand graph.
                let (lo_cap, hi_cap) = (alpha.min(beta), alpha.max(beta));
                let (lo_min, hi_min) = if self.exact_sizes {
                    (lo_cap, hi_cap)
                } else {
                    (1, 1)
                };
                let mut total = 0u64;
                for p in lo_min..=lo_cap {
                    for q in p.max(hi_min)..=hi_cap {
                        let pairs = binomial(tn, p) * binomial(tn - p, q);
                        total += if p == q { pairs / 2 } else { pairs };
                    }
                }
                total
            }
            FamilyKind::Multiway { k } => self.size_range(k, 2).map(|s| binomial(tn, s)).sum(),
            FamilyKind::Multicut { k } => {
                let pairs = binomial(tn, 2) as usize;
                self.size_range(k, 1).map(|s| binomial(pairs, s)).sum()
            }
        }
    }

    /// Exact upper bound on the number of distinct minimum-cut values
    /// any graph can produce over this family with `t` terminals.
    ///
    /// Group-cut: the count of distinct demand graphs K_{A,B} with
    /// nonempty sides of sizes at most (alpha, beta) and a fixed vertex
    /// inside A or B, obtained by direct enumeration (the at-most-size
    /// bound also covers the exact-size family). Multiway: sum over set
    /// sizes of C(t-1, k-1). Multicut: C(t+k, k), which already spans
    /// all demand sets of size at most k.
    pub fn theoretical_upper_bound(&self) -> u64 {
        theoretical_upper_bound(self.kind, self.terminals.len(), self.exact_sizes)
    }

    pub fn descriptor(&self) -> String {
        let le = if self.exact_sizes { "" } else { "<=" };
        match self.kind {
            FamilyKind::GroupCut { alpha, beta } => format!("groupcut{le}:{alpha},{beta}"),
            FamilyKind::Multiway { k } => format!("multiway{le}:{k}"),
            FamilyKind::Multicut { k } => format!("multicut{le}:{k}"),
        }
    }
}

impl fmt::Display for InstanceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} over {} terminals",
            self.descriptor(),
            self.terminals.len()
        )
    }
}

pub fn theoretical_upper_bound(kind: FamilyKind, t: usize, exact_sizes: bool) -> u64 {
    match kind {
        FamilyKind::GroupCut { alpha, beta } => group_bound_by_enumeration(t, alpha, beta),
        FamilyKind::Multiway { k } => {
            if exact_sizes {
                binomial(t - 1, k - 1)
            } else {
                (2..=k).map(|j| binomial(t - 1, j - 1)).sum()
            }
        }
        FamilyKind::Multicut { k } => binomial(t + k, k),
    }
}

/// Counts the distinct demand graphs K_{A,B} over `t` vertices with
/// disjoint nonempty sides, |A| <= alpha, |B| <= beta, and vertex 0 in
/// A u B. Distinctness is up to swapping the sides, since K_{A,B} and
/// K_{B,A} are the same demand graph.
fn group_bound_by_enumeration(t: usize, alpha: usize, beta: usize) -> u64 {
    let verts: Vec<usize> = (0..t).collect();
    let mut seen: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    for a_size in 1..=alpha.min(t) {
        for b_size in 1..=beta.min(t - a_size) {
            for a in combinations_of(&verts, a_size) {
                let rest: Vec<usize> = verts.iter().copied().filter(|x| !a.contains(x)).collect();
                for b in combinations_of(&rest, b_size) {
                    if !a.contains(&0) && !b.contains(&0) {
                        continue;
                    }
                    let key = if a <= b {
                        (a.clone(), b.clone())
                    } else {
                        (b.clone(), a.clone())
                    };
                    seen.insert(key);
                }
            }
        }
    }
    seen.len() as u64
}

/// Distinct-value report for one family on one graph.
#[derive(Clone, Debug)]
pub struct RedundancyReport {
    pub family: InstanceFamily,
    pub instance_count: u64,
    /// Sorted distinct optimal values.
    pub distinct_values: Vec<Weight>,
    pub theoretical_bound: u64,
}

impl RedundancyReport {
    pub fn distinct_count(&self) -> usize {
        self.distinct_values.len()
    }

    /// instance_count / distinct_count as a reduced fraction.
    pub fn redundancy_factor(&self) -> (u64, u64) {
        let num = self.instance_count;
        let den = self.distinct_values.len() as u64;
        if den == 0 {
            return (num, den);
        }
        let g = gcd(num, den);
        (num / g, den / g)
    }

    /// The factor rendered for the CSV report: integers get a trailing
    /// `.0`, everything else uses the shortest exact decimal rendering
    /// of the quotient.
    pub fn redundancy_display(&self) -> String {
        let (num, den) = self.redundancy_factor();
        if den == 1 {
            format!("{num}.0")
        } else {
            format!("{}", num as f64 / den as f64)
        }
    }

    pub const CSV_HEADER: &'static str = "instances,distinct,redundancy_factor,theoretical_bound";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.instance_count,
            self.distinct_values.len(),
            self.redundancy_display(),
            self.theoretical_bound
        )
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Solves every instance of the family exactly and reports the distinct
/// optimal values. Group-cut instances go through the max-flow solver,
/// multiway through assignment enumeration, multicut through the
/// partition-enumeration oracle; solver guards propagate as refusals.
pub fn analyze(g: &WeightedGraph, family: &InstanceFamily) -> Result<RedundancyReport> {
    if g.is_directed() {
        return Err(Error::contract("analyze requires an undirected graph"));
    }
    if let Some(&bad) = family.terminals().iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::contract(format!(
            "terminal {bad} out of range for {} vertices",
            g.vertex_count()
        )));
    }
    let instances = family.enumerate();
    let values = try_map(&instances, |d| Ok(solver::solve(g, d)?.value))?;
    let distinct: BTreeSet<Weight> = values.into_iter().collect();
    Ok(RedundancyReport {
        family: family.clone(),
        instance_count: instances.len() as u64,
        distinct_values: distinct.into_iter().collect(),
        theoretical_bound: family.theoretical_upper_bound(),
    })
}
