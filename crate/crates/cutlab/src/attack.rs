//! The storage lower bound, made executable: any structure that answers
//! (2,1)-group-cut value queries on the adversarial graphs below can be
//! forced to reveal every edge weight, so it must store as many bits as
//! the weights carry.
//!
//! The adversarial instance is a complete graph on vertices 0..n-1 laid
//! out along a path. Path edges (v, v+1) get weights that strictly
//! decrease left to right with gaps of at least n^4; all remaining
//! (fork) edges get weights below n, totalling less than n^3. Cheap
//! forks and steep path gaps make every relevant minimum cut a
//! contiguous interval of the path, which yields a closed-form cut
//! value (`claim_cut_formula`) and, from there, an exact recovery of
//! the whole weight table out of at most 3 * C(n,2) value queries
//! (`recover_weights`).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::weight::Weight;

/// Complete graph on `n` vertices with the path/fork weight layout.
/// Weights are polynomial in n, so plain integers suffice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdversarialInstance {
    n: usize,
    seed: u64,
    /// Upper-triangular weights, indexed by (i, j) with i < j.
    w: Vec<Vec<u64>>,
}

/// A flow-evaluation query: the minimum-cut value of the demand graph
/// K_{{a, b}, {c}} (separate both `a` and `b` from `c`). Vertices are
/// 0-based path positions.
pub type GroupQuery = (usize, usize, usize);

/// Answers group-cut value queries; implemented by schemes, by exact
/// solvers in tests, or by anything else claiming to evaluate flows.
pub trait FlowOracle {
    fn group_cut(&mut self, a: usize, b: usize, c: usize) -> Result<Weight>;
}

impl<F> FlowOracle for F
where
    F: FnMut(usize, usize, usize) -> Result<Weight>,
{
    fn group_cut(&mut self, a: usize, b: usize, c: usize) -> Result<Weight> {
        self(a, b, c)
    }
}

pub fn gen_adversarial(n: usize, seed: u64) -> Result<AdversarialInstance> {
    if n < 3 {
        return Err(Error::contract("adversarial instance needs n >= 3"));
    }
    let n4 = (n as u64).pow(4);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w = vec![vec![0u64; n]; n];
    // Path edges first, in order: with j the 1-based position (edge
    // between vertices j-1 and j), the weight is uniform in
    // [2(n-j)n^4, (2(n-j)+1)n^4].
    for j in 1..n {
        let lo = 2 * (n - j) as u64 * n4;
        w[j - 1][j] = rng.random_range(lo..=lo + n4);
    }
    // Fork edges in lexicographic order, uniform in {0, ..., n-1}.
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in i + 2..n {
            w[i][j] = rng.random_range(0..n as u64);
        }
    }
    let inst = AdversarialInstance { n, seed, w };
    debug_assert!(inst.check_layout().is_ok());
    Ok(inst)
}

impl AdversarialInstance {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn weight(&self, i: usize, j: usize) -> u64 {
        assert!(i != j && i < self.n && j < self.n);
        self.w[i.min(j)][i.max(j)]
    }

    pub fn is_path_edge(&self, i: usize, j: usize) -> bool {
        i.abs_diff(j) == 1
    }

    /// The separation property the recovery relies on: fork weights are
    /// each below n, their total stays below n^4, and path weights
    /// decrease along the path with gaps of at least n^4.
    pub fn check_layout(&self) -> Result<()> {
        let n = self.n;
        let n4 = (n as u64).pow(4);
        let mut fork_total = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                if !self.is_path_edge(i, j) {
                    if self.w[i][j] >= n as u64 {
                        return Err(Error::Inconsistent(format!(
                            "fork edge ({i},{j}) weighs {} >= n",
                            self.w[i][j]
                        )));
                    }
                    fork_total += self.w[i][j];
                }
            }
        }
        if fork_total >= n4 {
            return Err(Error::Inconsistent(format!(
                "fork total {fork_total} reaches the path gap n^4 = {n4}"
            )));
        }
        for v in 1..n - 1 {
            if self.w[v - 1][v] < self.w[v][v + 1] + n4 {
                return Err(Error::Inconsistent(format!(
                    "path weights not separated at vertex {v}"
                )));
            }
        }
        Ok(())
    }

    pub fn to_graph(&self) -> WeightedGraph {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                edges.push((i, j, Weight::from(self.w[i][j])));
            }
        }
        WeightedGraph::new(self.n, edges, false).expect("complete graph is valid")
    }

    /// Cut value of the contiguous vertex interval `lo..=hi`, straight
    /// from the weight table (no graph, no solver).
    pub fn interval_cut(&self, lo: usize, hi: usize) -> u64 {
        let mut acc = 0;
        for k in lo..=hi {
            for m in 0..self.n {
                if m < lo || m > hi {
                    acc += self.weight(k, m);
                }
            }
        }
        acc
    }
}

/// Closed form for the minimum cut separating {0, j} from {i} when
/// 0 < i < j < n: the sum over edges with exactly one endpoint in the
/// interval {i, ..., j-1}. The steep path weights force the optimal cut
/// to carve out exactly that interval.
pub fn claim_cut_formula(inst: &AdversarialInstance, i: usize, j: usize) -> Result<Weight> {
    if i == 0 || i >= j || j >= inst.n {
        return Err(Error::contract(format!(
            "claim_cut_formula needs 0 < i < j < n, got ({i}, {j})"
        )));
    }
    Ok(Weight::from(inst.interval_cut(i, j - 1)))
}

/// Result of a successful recovery.
#[derive(Clone, Debug)]
pub struct RecoveredWeights {
    /// Upper-triangular table: `w[i][j]` for i < j.
    pub w: Vec<Vec<u64>>,
    /// Distinct oracle queries issued.
    pub queries: usize,
}

impl RecoveredWeights {
    pub fn weight(&self, i: usize, j: usize) -> u64 {
        self.w[i.min(j)][i.max(j)]
    }

    pub fn matches(&self, inst: &AdversarialInstance) -> bool {
        let n = inst.n();
        (0..n).all(|i| (i + 1..n).all(|j| self.weight(i, j) == inst.weight(i, j)))
    }

    /// Pairs (i, j, recovered, actual) where the recovery disagrees.
    pub fn diff(&self, inst: &AdversarialInstance) -> Vec<(usize, usize, u64, u64)> {
        let n = inst.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (got, want) = (self.weight(i, j), inst.weight(i, j));
                if got != want {
                    out.push((i, j, got, want));
                }
            }
        }
        out
    }
}

/// Recovers the full weight table of an adversarial instance from
/// (2,1)-group-cut value queries alone.
///
/// Every cut of a contiguous interval is available through one query:
/// interior intervals {i..j} via K_{{0, j+1}, {i}}, prefixes {0..m} via
/// K_{{m+1, m+2}, {0}} (the monotone path weights make {0..m} the
/// optimal prefix), and the cut at the last vertex via K_{{0, 1}, {n-1}}.
/// With S_v the cut of the single vertex v, edge weights then fall out
/// of inclusion-exclusion by induction on the distance j - i:
///
///   w(i,j) = (S_i + S_j - inner_i - inner_j - boundary(i,j)) / 2
///
/// where the inner sums range over already-recovered edges inside the
/// interval and boundary(i,j) subtracts, from the interval cut, the
/// outgoing weight of the interval's interior vertices. All divisions
/// must be exact and all intermediate values non-negative; anything
/// else reports the oracle as inconsistent.
pub fn recover_weights(oracle: &mut dyn FlowOracle, n: usize) -> Result<RecoveredWeights> {
    if n < 3 {
        return Err(Error::contract("recovery needs n >= 3"));
    }
    let mut memo: std::collections::BTreeMap<GroupQuery, i128> = std::collections::BTreeMap::new();
    let mut queries = 0usize;
    let mut ask = |a: usize, b: usize, c: usize, queries: &mut usize| -> Result<i128> {
        let key = (a.min(b), a.max(b), c);
        if let Some(&v) = memo.get(&key) {
            return Ok(v);
        }
        let raw = oracle.group_cut(key.0, key.1, key.2)?;
        let v = raw
            .to_u64()
            .ok_or_else(|| Error::Inconsistent("oracle value exceeds u64".into()))?
            as i128;
        memo.insert(key, v);
        *queries += 1;
        Ok(v)
    };

    // Cut of the interval lo..=hi, (lo, hi) != (0, n-1).
    let mut interval = |lo: usize, hi: usize, queries: &mut usize| -> Result<i128> {
        if lo == 0 && hi == n - 1 {
            return Ok(0);
        }
        if lo > 0 && hi < n - 1 {
            return ask(0, hi + 1, lo, queries);
        }
        if lo == 0 {
            // Prefix 0..=hi; complement when the two extra vertices
            // needed for the prefix query do not exist.
            if hi + 2 < n {
                return ask(hi + 1, hi + 2, 0, queries);
            }
            debug_assert_eq!(hi, n - 2);
            return ask(0, 1, n - 1, queries);
        }
        // hi == n - 1: complement is the prefix 0..=lo-1.
        if lo <= n - 2 {
            return ask(lo, lo + 1, 0, queries);
        }
        debug_assert_eq!(lo, n - 1);
        ask(0, 1, n - 1, queries)
    };

    let mut single = vec![0i128; n];
    for (v, slot) in single.iter_mut().enumerate() {
        *slot = interval(v, v, &mut queries)?;
    }

    let mut table = vec![vec![0i128; n]; n];
    for dist in 1..n {
        for i in 0..n - dist {
            let j = i + dist;
            let ic = interval(i, j, &mut queries)?;
            // Outgoing weight of the interval's interior vertices.
            let mut interior_out = 0i128;
            for k in i + 1..j {
                let inner: i128 = (i..=j)
                    .filter(|&m| m != k)
                    .map(|m| table[m.min(k)][m.max(k)])
                    .sum();
                interior_out += single[k] - inner;
            }
            let boundary = ic - interior_out;
            let inner_i: i128 = (i + 1..j).map(|m| table[i][m]).sum();
            let inner_j: i128 = (i + 1..j).map(|m| table[m][j]).sum();
            let twice = single[i] + single[j] - inner_i - inner_j - boundary;
            if twice < 0 || twice % 2 != 0 {
                return Err(Error::Inconsistent(format!(
                    "edge ({i},{j}) resolves to {twice}/2"
                )));
            }
            table[i][j] = twice / 2;
        }
    }

    let w: Vec<Vec<u64>> = table
        .iter()
        .map(|row| row.iter().map(|&x| x as u64).collect())
        .collect();
    Ok(RecoveredWeights { w, queries })
}

/// Query budget the recovery stays within.
pub fn query_budget(n: usize) -> usize {
    3 * n * (n - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demand::DemandGraph;
    use crate::solver::mincut_oracle;

    fn oracle_for(inst: &AdversarialInstance) -> impl FnMut(usize, usize, usize) -> Result<Weight> {
        let g = inst.to_graph();
        move |a, b, c| {
            let d = DemandGraph::bipartite(&[a, b], &[c], false)?;
            Ok(mincut_oracle(&g, &d)?.value)
        }
    }

    #[test]
    fn generation_ranges_and_determinism() {
        let inst = gen_adversarial(4, 7).unwrap();
        // First path edge lies in [1536, 1792] for n = 4.
        let w12 = inst.weight(0, 1);
        assert!((1536..=1792).contains(&w12), "w(0,1) = {w12}");
        // Fork weights all below n.
        assert!(inst.weight(0, 2) < 4 && inst.weight(0, 3) < 4 && inst.weight(1, 3) < 4);
        assert_eq!(inst, gen_adversarial(4, 7).unwrap());
        assert_ne!(inst, gen_adversarial(4, 8).unwrap());
        assert!(gen_adversarial(2, 0).is_err());
        inst.check_layout().unwrap();
    }

    #[test]
    fn cut_formula_edge_cases() {
        let inst = gen_adversarial(5, 3).unwrap();
        // i = j - 1: the cut around the single vertex i.
        let single: u64 = (0..5).filter(|&m| m != 2).map(|m| inst.weight(2, m)).sum();
        assert_eq!(
            claim_cut_formula(&inst, 2, 3).unwrap(),
            Weight::from(single)
        );
        // j = n - 1 with i = 1: interval {1, ..., n-2}.
        assert_eq!(
            claim_cut_formula(&inst, 1, 4).unwrap(),
            Weight::from(inst.interval_cut(1, 3))
        );
        assert!(claim_cut_formula(&inst, 0, 2).is_err());
        assert!(claim_cut_formula(&inst, 3, 3).is_err());
    }

    #[test]
    fn cut_formula_matches_oracle_n5() {
        let inst = gen_adversarial(5, 11).unwrap();
        let g = inst.to_graph();
        for i in 1..5 {
            for j in i + 1..5 {
                let d = DemandGraph::bipartite(&[0, j], &[i], false).unwrap();
                let exact = mincut_oracle(&g, &d).unwrap().value;
                assert_eq!(
                    claim_cut_formula(&inst, i, j).unwrap(),
                    exact,
                    "(i,j)=({i},{j})"
                );
            }
        }
    }

    #[test]
    fn boundary_query_forms_match_interval_cuts() {
        // The prefix and last-vertex query forms used by the recovery
        // are validated against the enumeration oracle.
        let inst = gen_adversarial(6, 5).unwrap();
        let g = inst.to_graph();
        let solve = |a: usize, b: usize, c: usize| {
            let d = DemandGraph::bipartite(&[a, b], &[c], false).unwrap();
            mincut_oracle(&g, &d).unwrap().value.to_u64().unwrap()
        };
        // K_{{m+1, m+2}, {0}} cuts the prefix 0..=m.
        for m in 0..4 {
            assert_eq!(
                solve(m + 1, m + 2, 0),
                inst.interval_cut(0, m),
                "prefix m={m}"
            );
        }
        // K_{{0, 1}, {n-1}} cuts the last vertex.
        assert_eq!(solve(0, 1, 5), inst.interval_cut(5, 5));
    }

    #[test]
    fn recovery_is_exact_small() {
        for n in 3..=6 {
            for seed in [1u64, 2, 3] {
                let inst = gen_adversarial(n, seed).unwrap();
                let mut oracle = oracle_for(&inst);
                let rec = recover_weights(&mut oracle, n).unwrap();
                assert!(
                    rec.matches(&inst),
                    "n={n} seed={seed}: {:?}",
                    rec.diff(&inst)
                );
                assert!(
                    rec.queries <= query_budget(n),
                    "n={n}: {} queries > {}",
                    rec.queries,
                    query_budget(n)
                );
            }
        }
    }

    #[test]
    fn recovery_flags_inconsistent_oracle() {
        let inst = gen_adversarial(5, 9).unwrap();
        let mut calls = 0usize;
        let mut lying = |a: usize, b: usize, c: usize| -> Result<Weight> {
            calls += 1;
            let d = DemandGraph::bipartite(&[a, b], &[c], false)?;
            let v = mincut_oracle(&inst.to_graph(), &d)?.value;
            // Corrupt one late answer by a non-even offset.
            if calls == 9 {
                return Ok(&v + &Weight::ONE);
            }
            Ok(v)
        };
        let res = recover_weights(&mut lying, 5);
        match res {
            Err(Error::Inconsistent(_)) => {}
            Ok(rec) => assert!(
                !rec.matches(&inst),
                "corrupted oracle must not recover exactly"
            ),
            Err(other) => panic!("unexpected error {other}"),
        }
    }
}
