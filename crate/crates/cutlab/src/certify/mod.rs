//! Executable proof certificates.
//!
//! Two mechanisms underlie every distinct-value upper bound in this
//! crate, and both are checked here directly rather than trusted:
//!
//! * **Agreement matrices over GF(2)** (group-cut and multiway): rows
//!   are demand descriptors, columns are partitions, entries record
//!   agreement. The span check verifies constructively that every row
//!   lies in the span of the rows anchored at a fixed vertex `v0`, so
//!   the matrix rank — and with it the number of distinct optimal
//!   values — is bounded by the number of anchored rows.
//!
//! * **Polynomial evaluation matrices** (group-cut and multicut): each
//!   demand gets a product polynomial over per-vertex variables whose
//!   GF(2) evaluation at a partition is nonzero exactly when the
//!   partition is feasible for the demand. For demand sequences with
//!   strictly increasing optimal values the evaluation vectors must be
//!   linearly independent; `check_independence` verifies full row rank.

mod gf2;

pub use gf2::{BitRow, Gf2Matrix};

use std::collections::BTreeMap;

use crate::combin::{binomial, combinations, proper_subsets, stirling2};
use crate::demand::{DemandGraph, DemandKind};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::partition::{partitions_into, AllPartitions, Bipartitions, Partition};
use crate::solver::{self, ORACLE_MAX_N};
use crate::weight::Weight;

/// Column cap for the group matrix (2^(n-1) - 1 two-block partitions).
pub const GROUP_MATRIX_MAX_N: usize = 16;
/// Cell-count cap for the multiway matrix (C(n,k) x S(n,k)).
pub const MULTIWAY_MATRIX_MAX_CELLS: u64 = 10_000_000;

/// Agreement matrix for group-cut demands: one row per ordered disjoint
/// pair (A, B) with 1 <= |A| <= alpha and 1 <= |B| <= beta, one column
/// per unordered 2-partition of the vertex set.
pub struct GroupMatrix {
    pub matrix: Gf2Matrix,
    pub row_labels: Vec<(Vec<usize>, Vec<usize>)>,
    pub columns: Vec<Partition>,
    pub n: usize,
    pub alpha: usize,
    pub beta: usize,
    index: BTreeMap<(Vec<usize>, Vec<usize>), usize>,
}

pub fn build_group_matrix(n: usize, alpha: usize, beta: usize) -> Result<GroupMatrix> {
    if n < 2 {
        return Err(Error::contract("group matrix needs at least 2 vertices"));
    }
    if alpha == 0 || beta == 0 {
        return Err(Error::contract("side bounds must be at least 1"));
    }
    if n > GROUP_MATRIX_MAX_N {
        return Err(Error::guard(format!(
            "2-partition column enumeration refused for n = {n} > {GROUP_MATRIX_MAX_N}"
        )));
    }
    let columns: Vec<Partition> = Bipartitions::new(n).collect();
    let verts: Vec<usize> = (0..n).collect();
    let mut row_labels = Vec::new();
    for a_size in 1..=alpha.min(n - 1) {
        for a in combinations(n, a_size) {
            let rest: Vec<usize> = verts.iter().copied().filter(|v| !a.contains(v)).collect();
            for b_size in 1..=beta.min(rest.len()) {
                for b_idx in combinations(rest.len(), b_size) {
                    let b: Vec<usize> = b_idx.iter().map(|&i| rest[i]).collect();
                    row_labels.push((a.clone(), b));
                }
            }
        }
    }

    let mut matrix = Gf2Matrix::new(columns.len());
    for (a, b) in &row_labels {
        let mut row = BitRow::zeros(columns.len());
        for (ci, p) in columns.iter().enumerate() {
            if group_agrees(p, a, b) {
                row.set(ci, true);
            }
        }
        matrix.push_row(row);
    }
    let index = row_labels
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect();
    Ok(GroupMatrix {
        matrix,
        row_labels,
        columns,
        n,
        alpha,
        beta,
        index,
    })
}

fn group_agrees(p: &Partition, a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| p.separates(x, y)))
}

/// Outcome of a span check: either every non-anchored row decomposed,
/// or the first row that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanReport {
    pub ok: bool,
    pub failing_row: Option<String>,
}

impl GroupMatrix {
    /// Rows with `v0` inside A u B.
    pub fn anchored_rows(&self, v0: usize) -> Vec<usize> {
        self.row_labels
            .iter()
            .enumerate()
            .filter(|(_, (a, b))| a.contains(&v0) || b.contains(&v0))
            .map(|(i, _)| i)
            .collect()
    }

    /// Verifies row (A, B) with v0 outside A u B equals the GF(2) sum of
    /// rows (A' u {v0}, B) over proper subsets A' of A and (A, B' u {v0})
    /// over proper subsets B' of B.
    pub fn check_span(&self, v0: usize) -> SpanReport {
        for (i, (a, b)) in self.row_labels.iter().enumerate() {
            if a.contains(&v0) || b.contains(&v0) {
                continue;
            }
            let mut acc = BitRow::zeros(self.matrix.ncols());
            for mut a_sub in proper_subsets(a) {
                a_sub.push(v0);
                a_sub.sort_unstable();
                let idx = self.index[&(a_sub, b.clone())];
                acc.xor_assign(self.matrix.row(idx));
            }
            for mut b_sub in proper_subsets(b) {
                b_sub.push(v0);
                b_sub.sort_unstable();
                let idx = self.index[&(a.clone(), b_sub)];
                acc.xor_assign(self.matrix.row(idx));
            }
            acc.xor_assign(self.matrix.row(i));
            if !acc.is_zero() {
                return SpanReport {
                    ok: false,
                    failing_row: Some(format!("(A={a:?}, B={b:?})")),
                };
            }
        }
        SpanReport {
            ok: true,
            failing_row: None,
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Agreement matrix for multiway demands: one row per k-subset A, one
/// column per partition into exactly k parts.
pub struct MultiwayMatrix {
    pub matrix: Gf2Matrix,
    pub row_labels: Vec<Vec<usize>>,
    pub columns: Vec<Partition>,
    pub n: usize,
    pub k: usize,
    index: BTreeMap<Vec<usize>, usize>,
}

pub fn build_multiway_matrix(n: usize, k: usize) -> Result<MultiwayMatrix> {
    if k < 2 || k > n {
        return Err(Error::contract(format!(
            "need 2 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    let cells = binomial(n, k).saturating_mul(stirling2(n, k));
    if cells > MULTIWAY_MATRIX_MAX_CELLS {
        return Err(Error::guard(format!(
            "multiway matrix with {cells} cells exceeds {MULTIWAY_MATRIX_MAX_CELLS}"
        )));
    }
    let columns: Vec<Partition> = partitions_into(n, k).collect();
    let row_labels: Vec<Vec<usize>> = combinations(n, k).collect();
    let mut matrix = Gf2Matrix::new(columns.len());
    for a in &row_labels {
        let mut row = BitRow::zeros(columns.len());
        for (ci, p) in columns.iter().enumerate() {
            if clique_agrees(p, a) {
                row.set(ci, true);
            }
        }
        matrix.push_row(row);
    }
    let index = row_labels
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect();
    Ok(MultiwayMatrix {
        matrix,
        row_labels,
        columns,
        n,
        k,
        index,
    })
}

fn clique_agrees(p: &Partition, a: &[usize]) -> bool {
    for (i, &x) in a.iter().enumerate() {
        for &y in &a[i + 1..] {
            if !p.separates(x, y) {
                return false;
            }
        }
    }
    true
}

impl MultiwayMatrix {
    pub fn anchored_rows(&self, v0: usize) -> Vec<usize> {
        self.row_labels
            .iter()
            .enumerate()
            .filter(|(_, a)| a.contains(&v0))
            .map(|(i, _)| i)
            .collect()
    }

    /// Verifies row A with v0 outside A equals the GF(2) sum of rows
    /// ({v0} u A \ {a}) over a in A.
    pub fn check_span(&self, v0: usize) -> SpanReport {
        for (i, a) in self.row_labels.iter().enumerate() {
            if a.contains(&v0) {
                continue;
            }
            let mut acc = BitRow::zeros(self.matrix.ncols());
            for drop in a {
                let mut swapped: Vec<usize> = a.iter().copied().filter(|x| x != drop).collect();
                swapped.push(v0);
                swapped.sort_unstable();
                let idx = self.index[&swapped];
                acc.xor_assign(self.matrix.row(idx));
            }
            acc.xor_assign(self.matrix.row(i));
            if !acc.is_zero() {
                return SpanReport {
                    ok: false,
                    failing_row: Some(format!("A={a:?}")),
                };
            }
        }
        SpanReport {
            ok: true,
            failing_row: None,
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Which product polynomial family a [`PolyEvalMatrix`] evaluates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PolyKind {
    /// Anchored bipartite products over 2-partitions: with anchors
    /// a_j in A_j, b_j in B_j, the factors are (phi(a_j) - phi(b)) for
    /// b in B_j and (phi(a) - phi(b_j)) for a in A_j \ {a_j}.
    Group,
    /// Pair products over all partitions: one factor (phi(u) - phi(v))
    /// per demand pair.
    Multicut,
}

/// GF(2) evaluations of the demand polynomials over all relevant
/// partitions, row j belonging to the demand with the j-th smallest
/// optimal value.
pub struct PolyEvalMatrix {
    pub matrix: Gf2Matrix,
    pub demands: Vec<DemandGraph>,
    pub values: Vec<Weight>,
    pub columns: Vec<Partition>,
    pub kind: PolyKind,
}

/// Builds the evaluation matrix for demands whose minimum-cut values
/// are strictly increasing (verified here against the exact solvers).
pub fn build_poly_eval_matrix(
    g: &WeightedGraph,
    demands: &[DemandGraph],
    kind: PolyKind,
) -> Result<PolyEvalMatrix> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_N {
        return Err(Error::guard(format!(
            "partition column enumeration refused for n = {n} > {ORACLE_MAX_N}"
        )));
    }
    let mut values = Vec::with_capacity(demands.len());
    for d in demands {
        d.check_range(n)?;
        if kind == PolyKind::Group && !matches!(d.kind(), DemandKind::Bipartite { .. }) {
            return Err(Error::contract(
                "group polynomial rows need bipartite demands",
            ));
        }
        values.push(solver::solve(g, d)?.value);
    }
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::contract(
            "demand values must be strictly increasing; sort and deduplicate by value first",
        ));
    }

    let columns: Vec<Partition> = match kind {
        PolyKind::Group => Bipartitions::new(n).collect(),
        PolyKind::Multicut => AllPartitions::new(n).collect(),
    };
    let mut matrix = Gf2Matrix::new(columns.len());
    for d in demands {
        let mut row = BitRow::zeros(columns.len());
        for (ci, p) in columns.iter().enumerate() {
            if eval_poly(d, p, kind) {
                row.set(ci, true);
            }
        }
        matrix.push_row(row);
    }
    Ok(PolyEvalMatrix {
        matrix,
        demands: demands.to_vec(),
        values,
        columns,
        kind,
    })
}

/// Literal GF(2) evaluation of the demand's product polynomial at a
/// partition. Over GF(2) a difference (phi(u) - phi(v)) evaluates to 1
/// exactly when the blocks differ, so the product is the AND of its
/// factor indicators.
pub fn eval_poly(d: &DemandGraph, p: &Partition, kind: PolyKind) -> bool {
    match kind {
        PolyKind::Group => {
            let (a, b) = match d.kind() {
                DemandKind::Bipartite { a, b } => (a, b),
                _ => return false,
            };
            let (anchor_a, anchor_b) = (a[0], b[0]);
            b.iter().all(|&y| p.separates(anchor_a, y))
                && a[1..].iter().all(|&x| p.separates(x, anchor_b))
        }
        PolyKind::Multicut => d.pairs().iter().all(|&(u, v)| p.separates(u, v)),
    }
}

impl PolyEvalMatrix {
    /// Full row rank over GF(2): the executable form of the linear
    /// linear-independence guarantee for increasing value sequences.
    pub fn check_independence(&self) -> bool {
        self.matrix.rank() == self.matrix.nrows()
    }
}
