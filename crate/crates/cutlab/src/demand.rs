//! Demand graphs: the vertex pairs a cut has to separate.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// How the demand set was specified. The tag is retained because some
/// solvers dispatch on it (a complete-bipartite demand reduces to a
/// single max-flow, a clique demand to a k-way assignment search).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DemandKind {
    /// Every vertex of the first side against every vertex of the second;
    /// for directed graphs the demands are oriented first -> second.
    Bipartite { a: Vec<usize>, b: Vec<usize> },
    /// Every pair inside the set.
    Clique { s: Vec<usize> },
    /// Explicit pair list.
    Explicit,
}

/// A set of demand pairs over vertex ids. Pairs are stored sorted and
/// deduplicated; for undirected use they are normalized to `(min, max)`,
/// while `directed` demands keep their source -> target orientation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DemandGraph {
    kind: DemandKind,
    pairs: Vec<(usize, usize)>,
    directed: bool,
}

impl DemandGraph {
    pub fn bipartite(a: &[usize], b: &[usize], directed: bool) -> Result<DemandGraph> {
        let a = sorted_dedup(a);
        let b = sorted_dedup(b);
        if a.iter().any(|x| b.contains(x)) {
            return Err(Error::contract("demand sides intersect"));
        }
        let mut pairs = BTreeSet::new();
        for &x in &a {
            for &y in &b {
                pairs.insert(orient(x, y, directed));
            }
        }
        Ok(DemandGraph {
            kind: DemandKind::Bipartite { a, b },
            pairs: pairs.into_iter().collect(),
            directed,
        })
    }

    pub fn clique(s: &[usize], directed: bool) -> Result<DemandGraph> {
        let s = sorted_dedup(s);
        let mut pairs = BTreeSet::new();
        for (i, &x) in s.iter().enumerate() {
            for &y in &s[i + 1..] {
                pairs.insert((x, y));
                if directed {
                    pairs.insert((y, x));
                }
            }
        }
        Ok(DemandGraph {
            kind: DemandKind::Clique { s },
            pairs: pairs.into_iter().collect(),
            directed,
        })
    }

    pub fn explicit(pairs: &[(usize, usize)], directed: bool) -> Result<DemandGraph> {
        let mut set = BTreeSet::new();
        for &(u, v) in pairs {
            if u == v {
                return Err(Error::contract(format!(
                    "self-pair ({u},{u}) in demand set"
                )));
            }
            set.insert(orient(u, v, directed));
        }
        Ok(DemandGraph {
            kind: DemandKind::Explicit,
            pairs: set.into_iter().collect(),
            directed,
        })
    }

    pub fn single(s: usize, t: usize, directed: bool) -> Result<DemandGraph> {
        DemandGraph::explicit(&[(s, t)], directed)
    }

    pub fn empty(directed: bool) -> DemandGraph {
        DemandGraph {
            kind: DemandKind::Explicit,
            pairs: Vec::new(),
            directed,
        }
    }

    pub fn kind(&self) -> &DemandKind {
        &self.kind
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.pairs.iter().map(|&(u, v)| u.max(v)).max()
    }

    /// All demand endpoints lie below `n`.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.max_vertex() {
            Some(m) if m >= n => Err(Error::contract(format!(
                "demand endpoint {m} out of range for {n} vertices"
            ))),
            _ => Ok(()),
        }
    }
}

fn orient(u: usize, v: usize, directed: bool) -> (usize, usize) {
    if directed || u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn sorted_dedup(xs: &[usize]) -> Vec<usize> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// A partition agrees with a demand graph when every demand pair lands
/// in different blocks. Vacuously true for the empty demand set.
pub fn agrees(partition: &Partition, demands: &DemandGraph) -> bool {
    demands
        .pairs
        .iter()
        .all(|&(u, v)| partition.separates(u, v))
}

impl fmt::Display for DemandGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            DemandKind::Bipartite { a, b } => {
                write!(f, "K:{{{}}},{{{}}}", join(a), join(b))
            }
            DemandKind::Clique { s } => write!(f, "S:{{{}}}", join(s)),
            DemandKind::Explicit => {
                write!(f, "P:")?;
                for (i, (u, v)) in self.pairs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "({u},{v})")?;
                }
                Ok(())
            }
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
