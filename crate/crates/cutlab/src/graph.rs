//! Weighted graphs with non-negative integer weights, the cut function,
//! contraction, and the deterministic weight perturbation that makes all
//! 2-partition cut values distinct.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::weight::Weight;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: Weight,
}

/// Simple graph: parallel edges are merged by summing weights when the
/// graph is built, self-loops are rejected. Edges are kept sorted by
/// endpoint pair (undirected edges normalized to `u < v`), which fixes
/// the edge indexing the perturbation refers to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    directed: bool,
}

impl WeightedGraph {
    pub fn new(
        n: usize,
        raw_edges: impl IntoIterator<Item = (usize, usize, Weight)>,
        directed: bool,
    ) -> Result<WeightedGraph> {
        let mut edges: Vec<Edge> = Vec::new();
        for (mut u, mut v, w) in raw_edges {
            if u == v {
                return Err(Error::contract(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::contract(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if !directed && u > v {
                std::mem::swap(&mut u, &mut v);
            }
            edges.push(Edge { u, v, w });
        }
        edges.sort_by_key(|e| (e.u, e.v));
        let mut merged: Vec<Edge> = Vec::with_capacity(edges.len());
        for e in edges {
            match merged.last_mut() {
                Some(last) if last.u == e.u && last.v == e.v => last.w += e.w,
                _ => merged.push(e),
            }
        }
        Ok(WeightedGraph {
            n,
            edges: merged,
            directed,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn total_weight(&self) -> Weight {
        self.edges.iter().map(|e| &e.w).sum()
    }

    /// Sum of weights of edges whose endpoints lie in different blocks.
    /// Edge direction is irrelevant to this sum.
    pub fn cut_value(&self, partition: &Partition) -> Result<Weight> {
        partition.check_len(self.n)?;
        Ok(self.cut_of_labels(partition.blocks()))
    }

    /// Unchecked fast path for enumeration loops; `labels` assigns a
    /// block to every vertex.
    pub(crate) fn cut_of_labels(&self, labels: &[usize]) -> Weight {
        debug_assert_eq!(labels.len(), self.n);
        let mut acc = Weight::ZERO;
        for e in &self.edges {
            if labels[e.u] != labels[e.v] {
                acc += &e.w;
            }
        }
        acc
    }

    /// Merges the vertex set `s` into one super-vertex. Returns the new
    /// graph and the old-to-new vertex map. Parallel edges produced by
    /// the merge are summed, self-loops dropped.
    pub fn contract(&self, s: &[usize]) -> Result<(WeightedGraph, Vec<usize>)> {
        if self.directed {
            return Err(Error::contract("contract requires an undirected graph"));
        }
        if s.is_empty() {
            return Err(Error::contract("contract of an empty vertex set"));
        }
        if let Some(&bad) = s.iter().find(|&&v| v >= self.n) {
            return Err(Error::contract(format!(
                "contract vertex {bad} out of range for {} vertices",
                self.n
            )));
        }
        let mut in_s = vec![false; self.n];
        for &v in s {
            in_s[v] = true;
        }
        // The super-vertex takes the id the smallest member would get,
        // keeping remaining ids in their original relative order.
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut super_id = None;
        for v in 0..self.n {
            if in_s[v] {
                let id = *super_id.get_or_insert_with(|| {
                    let id = next;
                    next += 1;
                    id
                });
                map[v] = id;
            } else {
                map[v] = next;
                next += 1;
            }
        }
        let g = self.quotient(&map, next);
        Ok((g, map))
    }

    /// Quotient by an arbitrary surjective relabeling onto `0..new_n`.
    pub(crate) fn quotient(&self, map: &[usize], new_n: usize) -> WeightedGraph {
        let edges = self.edges.iter().filter_map(|e| {
            let (u, v) = (map[e.u], map[e.v]);
            (u != v).then(|| (u, v, e.w.clone()))
        });
        WeightedGraph::new(new_n, edges, self.directed).expect("quotient of a valid graph")
    }

    /// Perturbed copy: with edges indexed `1..=m` in canonical order,
    /// `w'(e_i) = w(e_i) * 2^m + 2^(i-1)`. In a connected graph this
    /// makes all 2-partition cut values distinct (the low bits encode
    /// the crossing edge set), and `deperturb` recovers original values.
    pub fn perturbed(&self) -> Result<WeightedGraph> {
        if self.directed {
            return Err(Error::contract("perturbation requires an undirected graph"));
        }
        let m = self.edges.len();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.u, e.v, &(&e.w << m) + &Weight::pow2(i)));
        WeightedGraph::new(self.n, edges, false)
    }

    /// Connected components as a canonical partition.
    pub fn components(&self) -> Partition {
        self.components_avoiding(&|_| false)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().part_count() == 1
    }

    /// Components of the graph with the edges selected by `skip` removed
    /// (edge direction ignored; indices refer to `edges()`).
    pub fn components_avoiding(&self, skip: &dyn Fn(usize) -> bool) -> Partition {
        let mut adj = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            if !skip(i) {
                adj[e.u].push(e.v);
                adj[e.v].push(e.u);
            }
        }
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        Partition::from_canonical(label, next)
    }

    /// Refines a partition to the connected components left after its
    /// crossing edges are removed. The crossing edge set (and hence the
    /// cut value) is unchanged, every separated pair stays separated,
    /// and in a connected graph the result is uniquely determined by
    /// the crossing edge set alone.
    pub fn component_refinement(&self, partition: &Partition) -> Partition {
        debug_assert_eq!(partition.len(), self.n);
        let blocks = partition.blocks();
        let crossing: Vec<bool> = self
            .edges
            .iter()
            .map(|e| blocks[e.u] != blocks[e.v])
            .collect();
        self.components_avoiding(&|i| crossing[i])
    }
}

/// Inverse of the perturbation on cut values: recovers the original cut
/// value from a cut value of the graph perturbed with `m` edges.
pub fn deperturb(value: &Weight, m: usize) -> Weight {
    value >> m
}
