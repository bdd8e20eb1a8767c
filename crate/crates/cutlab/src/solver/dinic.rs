//! Dinic max-flow over exact weights. Capacities are stored as residual
//! values, so pushing flow only ever subtracts what is available.

use std::collections::VecDeque;

use crate::weight::Weight;

#[derive(Clone)]
struct Arc {
    to: usize,
    residual: Weight,
    rev: usize,
}

pub struct FlowNetwork {
    n: usize,
    adj: Vec<Vec<Arc>>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> FlowNetwork {
        FlowNetwork {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Directed arc with capacity `cap` (companion reverse arc starts at 0).
    pub fn add_arc(&mut self, from: usize, to: usize, cap: Weight) {
        let rev_from = self.adj[to].len();
        let rev_to = self.adj[from].len();
        self.adj[from].push(Arc {
            to,
            residual: cap,
            rev: rev_from,
        });
        self.adj[to].push(Arc {
            to: from,
            residual: Weight::ZERO,
            rev: rev_to,
        });
    }

    /// Undirected edge: both arcs carry the full capacity and serve as
    /// each other's reverse, which models flow cancellation exactly.
    pub fn add_undirected(&mut self, a: usize, b: usize, cap: Weight) {
        let rev_a = self.adj[b].len();
        let rev_b = self.adj[a].len();
        self.adj[a].push(Arc {
            to: b,
            residual: cap.clone(),
            rev: rev_a,
        });
        self.adj[b].push(Arc {
            to: a,
            residual: cap,
            rev: rev_b,
        });
    }

    fn bfs_levels(&self, s: usize, t: usize) -> Option<Vec<u32>> {
        let mut level = vec![u32::MAX; self.n];
        level[s] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for arc in &self.adj[u] {
                if !arc.residual.is_zero() && level[arc.to] == u32::MAX {
                    level[arc.to] = level[u] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        (level[t] != u32::MAX).then_some(level)
    }

    fn dfs_push(
        &mut self,
        u: usize,
        t: usize,
        limit: Option<Weight>,
        level: &[u32],
        iter: &mut [usize],
    ) -> Weight {
        if u == t {
            return limit.expect("flow limit reaches the sink");
        }
        while iter[u] < self.adj[u].len() {
            let i = iter[u];
            let (to, residual) = {
                let arc = &self.adj[u][i];
                (arc.to, arc.residual.clone())
            };
            if !residual.is_zero() && level[to] == level[u] + 1 {
                let next_limit = match &limit {
                    Some(l) if *l <= residual => Some(l.clone()),
                    _ => Some(residual),
                };
                let pushed = self.dfs_push(to, t, next_limit, level, iter);
                if !pushed.is_zero() {
                    let rev = self.adj[u][i].rev;
                    self.adj[u][i].residual = &self.adj[u][i].residual - &pushed;
                    self.adj[to][rev].residual += &pushed;
                    return pushed;
                }
            }
            iter[u] += 1;
        }
        Weight::ZERO
    }

    /// Runs to completion and returns the max-flow value.
    pub fn max_flow(&mut self, s: usize, t: usize) -> Weight {
        let mut total = Weight::ZERO;
        while let Some(level) = self.bfs_levels(s, t) {
            let mut iter = vec![0usize; self.n];
            loop {
                let pushed = self.dfs_push(s, t, None, &level, &mut iter);
                if pushed.is_zero() {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    /// Vertices reachable from `s` in the residual graph; after
    /// `max_flow` this is the source side of a minimum cut.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for arc in &self.adj[u] {
                if !arc.residual.is_zero() && !seen[arc.to] {
                    seen[arc.to] = true;
                    stack.push(arc.to);
                }
            }
        }
        seen
    }
}
