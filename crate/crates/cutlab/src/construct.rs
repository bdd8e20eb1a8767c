//! Generators for the tight lower-bound graph families, the seeded
//! random graphs used throughout the test suites, and the verification
//! sweep that checks a generated graph actually achieves its advertised
//! distinct-value count.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::demand::DemandGraph;
use crate::error::{Error, Result};
use crate::family::{analyze, InstanceFamily};
use crate::graph::WeightedGraph;
use crate::weight::Weight;

/// Parameters for one generated lower-bound instance. `Adversarial` is
/// the complete graph with the path/fork weight layout used by the
/// storage lower bound (see [`crate::attack`]).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConstructionSpec {
    GroupLb { n: usize, alpha: usize, beta: usize },
    PathLb { n: usize },
    MatchingLb { n: usize },
    DirectedBipartite { n: usize },
    Adversarial { n: usize, seed: u64 },
}

impl ConstructionSpec {
    pub fn generate(&self) -> Result<WeightedGraph> {
        match *self {
            ConstructionSpec::GroupLb { n, alpha, beta } => {
                Ok(GroupLbGraph::new(n, alpha, beta)?.into_graph())
            }
            ConstructionSpec::PathLb { n } => gen_path_lb(n),
            ConstructionSpec::MatchingLb { n } => gen_matching_lb(n),
            ConstructionSpec::DirectedBipartite { n } => gen_directed_bipartite(n),
            ConstructionSpec::Adversarial { n, seed } => {
                Ok(crate::attack::gen_adversarial(n, seed)?.to_graph())
            }
        }
    }

    /// The distinct-value count the construction is built to reach, when
    /// one is claimed (the adversarial graph is about weight recovery,
    /// not distinct counts).
    pub fn expected_distinct(&self) -> Option<u64> {
        match *self {
            ConstructionSpec::GroupLb { n, alpha, beta } => {
                let per_h = ((n - 3) / (2 * alpha)) as u64;
                let per_j = ((n - 3) / (2 * (beta - 1))) as u64;
                Some(per_h.pow(alpha as u32) * per_j.pow(beta as u32 - 1))
            }
            ConstructionSpec::PathLb { .. } | ConstructionSpec::MatchingLb { .. } => None,
            ConstructionSpec::DirectedBipartite { .. } => None,
            ConstructionSpec::Adversarial { .. } => None,
        }
    }
}

/// Two bundles of parallel paths sharing a middle vertex `t`: `alpha`
/// paths from `s` to `t` and `beta - 1` paths from `t` to `u`. Finite
/// edges carry distinct powers of two, strictly decreasing away from
/// `s` within each path and strictly smaller on the right bundle than
/// anywhere on the left; the final edge of every path (into `t`
/// respectively `u`) is a stand-in for an infinite weight: 1 plus the
/// total of all finite weights, so no minimum cut ever uses one.
#[derive(Clone, Debug)]
pub struct GroupLbGraph {
    graph: WeightedGraph,
    pub s: usize,
    pub t: usize,
    pub u: usize,
    /// Internal vertices of each s-t path, in order from s.
    pub h_paths: Vec<Vec<usize>>,
    /// Internal vertices of each t-u path, in order from t.
    pub j_paths: Vec<Vec<usize>>,
    pub big: Weight,
}

impl GroupLbGraph {
    pub fn new(n: usize, alpha: usize, beta: usize) -> Result<GroupLbGraph> {
        if alpha == 0 {
            return Err(Error::contract("alpha must be at least 1"));
        }
        if beta < 2 {
            return Err(Error::contract(
                "beta must be at least 2 (the construction is undefined for beta = 1)",
            ));
        }
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::contract(format!(
                "n = {n} must be odd and at least 3"
            )));
        }
        let half = (n - 3) / 2;
        if !half.is_multiple_of(alpha) {
            return Err(Error::contract(format!(
                "alpha = {alpha} must divide (n - 3) / 2 = {half}"
            )));
        }
        if !half.is_multiple_of(beta - 1) {
            return Err(Error::contract(format!(
                "beta - 1 = {} must divide (n - 3) / 2 = {half}",
                beta - 1
            )));
        }
        let h_len = half / alpha;
        let j_len = half / (beta - 1);

        // Vertex layout: s, then the internal vertices of each s-t path
        // in order, then t, then the internals of each t-u path, then u.
        let s = 0;
        let mut next = 1;
        let mut h_paths = Vec::with_capacity(alpha);
        for _ in 0..alpha {
            let verts: Vec<usize> = (next..next + h_len).collect();
            next += h_len;
            h_paths.push(verts);
        }
        let t = next;
        next += 1;
        let mut j_paths = Vec::with_capacity(beta - 1);
        for _ in 0..beta - 1 {
            let verts: Vec<usize> = (next..next + j_len).collect();
            next += j_len;
            j_paths.push(verts);
        }
        let u = next;
        debug_assert_eq!(next + 1, n);

        // Chains with the final (t- or u-side) edge marked infinite.
        let mut finite_runs: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut big_edges: Vec<(usize, usize)> = Vec::new();
        for path in &h_paths {
            let chain: Vec<usize> = std::iter::once(s)
                .chain(path.iter().copied())
                .chain(std::iter::once(t))
                .collect();
            let mut run: Vec<(usize, usize)> = chain.windows(2).map(|w| (w[0], w[1])).collect();
            big_edges.push(run.pop().expect("path has at least one edge"));
            finite_runs.push(run);
        }
        for path in &j_paths {
            let chain: Vec<usize> = std::iter::once(t)
                .chain(path.iter().copied())
                .chain(std::iter::once(u))
                .collect();
            let mut run: Vec<(usize, usize)> = chain.windows(2).map(|w| (w[0], w[1])).collect();
            big_edges.push(run.pop().expect("path has at least one edge"));
            finite_runs.push(run);
        }

        // Path-major exponent assignment, strictly decreasing: the first
        // finite edge of the first s-t path takes the highest power.
        let finite_count: usize = finite_runs.iter().map(|r| r.len()).sum();
        debug_assert_eq!(finite_count, n - 3);
        let mut exp = finite_count;
        let mut edges: Vec<(usize, usize, Weight)> = Vec::new();
        let mut finite_total = Weight::ZERO;
        for run in &finite_runs {
            for &(a, b) in run {
                let w = Weight::pow2(exp);
                finite_total += &w;
                edges.push((a, b, w));
                exp -= 1;
            }
        }
        let big = &finite_total + &Weight::ONE;
        for &(a, b) in &big_edges {
            edges.push((a, b, big.clone()));
        }

        Ok(GroupLbGraph {
            graph: WeightedGraph::new(n, edges, false)?,
            s,
            t,
            u,
            h_paths,
            j_paths,
            big,
        })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn into_graph(self) -> WeightedGraph {
        self.graph
    }

    pub fn alpha(&self) -> usize {
        self.h_paths.len()
    }

    pub fn beta(&self) -> usize {
        self.j_paths.len() + 1
    }

    /// The demand instances the distinct-count claim is about: one
    /// internal vertex from each s-t path forms A; B is `s` plus one
    /// internal vertex from each t-u path.
    pub fn pattern_instances(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut out = Vec::new();
        let mut a_choice = vec![0usize; self.h_paths.len()];
        loop {
            let a: Vec<usize> = self
                .h_paths
                .iter()
                .zip(&a_choice)
                .map(|(p, &i)| p[i])
                .collect();
            let mut b_choice = vec![0usize; self.j_paths.len()];
            loop {
                let mut b: Vec<usize> = self
                    .j_paths
                    .iter()
                    .zip(&b_choice)
                    .map(|(p, &i)| p[i])
                    .collect();
                b.push(self.s);
                b.sort_unstable();
                out.push((a.clone(), b));
                if !odometer(&mut b_choice, &self.j_paths) {
                    break;
                }
            }
            if !odometer(&mut a_choice, &self.h_paths) {
                break;
            }
        }
        out
    }
}

fn odometer(choice: &mut [usize], paths: &[Vec<usize>]) -> bool {
    for i in (0..choice.len()).rev() {
        choice[i] += 1;
        if choice[i] < paths[i].len() {
            return true;
        }
        choice[i] = 0;
    }
    false
}

pub fn gen_group_lb(n: usize, alpha: usize, beta: usize) -> Result<WeightedGraph> {
    Ok(GroupLbGraph::new(n, alpha, beta)?.into_graph())
}

/// Path on vertices 0..n-1 where the i-th edge (1-based) weighs 2^i, so
/// every edge subset has a distinct total weight.
pub fn gen_path_lb(n: usize) -> Result<WeightedGraph> {
    if n < 2 {
        return Err(Error::contract("path needs at least 2 vertices"));
    }
    WeightedGraph::new(n, (1..n).map(|i| (i - 1, i, Weight::pow2(i))), false)
}

/// Perfect matching on n (even) vertices: edge {2i-2, 2i-1} (1-based i)
/// weighs 2^i.
pub fn gen_matching_lb(n: usize) -> Result<WeightedGraph> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::contract(format!(
            "matching needs even n >= 2, got {n}"
        )));
    }
    WeightedGraph::new(
        n,
        (1..=n / 2).map(|i| (2 * i - 2, 2 * i - 1, Weight::pow2(i))),
        false,
    )
}

/// Complete bipartite digraph K_{X->Y} with |X| = |Y| = n: vertices
/// 0..n-1 form X, n..2n-1 form Y, and the n^2 edges x_i -> y_j carry
/// the weights 2^1, 2^2, ... in row-major order.
pub fn gen_directed_bipartite(n: usize) -> Result<WeightedGraph> {
    if n == 0 {
        return Err(Error::contract("bipartite sides must be nonempty"));
    }
    let mut exp = 0;
    let edges = (0..n).flat_map(|i| (0..n).map(move |j| (i, n + j)));
    WeightedGraph::new(
        2 * n,
        edges.map(|(u, v)| {
            exp += 1;
            (u, v, Weight::pow2(exp))
        }),
        true,
    )
}

/// Seeded connected random graph: a random spanning tree plus each
/// remaining pair independently with probability ~0.4, weights uniform
/// in 1..=max_weight. Used by the test and bench harnesses.
pub fn random_connected(n: usize, max_weight: u64, seed: u64) -> WeightedGraph {
    assert!(n >= 1 && max_weight >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize, Weight)> = Vec::new();
    let mut present = std::collections::BTreeSet::new();
    for v in 1..n {
        let parent = rng.random_range(0..v);
        present.insert((parent, v));
        edges.push((parent, v, Weight::from(rng.random_range(1..=max_weight))));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present.contains(&(u, v)) && rng.random_range(0..10) < 4 {
                edges.push((u, v, Weight::from(rng.random_range(1..=max_weight))));
            }
        }
    }
    WeightedGraph::new(n, edges, false).expect("generated edges are valid")
}

/// Outcome of a lower-bound verification sweep.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub passed: bool,
    pub distinct_count: usize,
    pub expected: u64,
    /// On failure: the values hit by more than one instance, with the
    /// instances that collide (witnesses that the family falls short).
    pub collisions: Vec<(Weight, Vec<DemandGraph>)>,
}

/// Runs the full family analysis and checks that at least `expected`
/// distinct values occur.
pub fn verify_lower_bound(
    g: &WeightedGraph,
    family: &InstanceFamily,
    expected: u64,
) -> Result<VerifyReport> {
    let report = analyze(g, family)?;
    let distinct = report.distinct_count();
    if distinct as u64 >= expected {
        return Ok(VerifyReport {
            passed: true,
            distinct_count: distinct,
            expected,
            collisions: Vec::new(),
        });
    }
    // Re-solve to attribute instances to values for the witness report.
    let mut by_value: std::collections::BTreeMap<Weight, Vec<DemandGraph>> =
        std::collections::BTreeMap::new();
    for d in family.enumerate() {
        let v = crate::solver::solve(g, &d)?.value;
        by_value.entry(v).or_default().push(d);
    }
    Ok(VerifyReport {
        passed: false,
        distinct_count: distinct,
        expected,
        collisions: by_value
            .into_iter()
            .filter(|(_, ds)| ds.len() > 1)
            .collect(),
    })
}
