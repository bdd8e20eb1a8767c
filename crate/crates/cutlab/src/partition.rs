//! Vertex partitions in canonical form, plus the enumeration iterators
//! the brute-force solvers and certificate builders are built on.
//!
//! A partition is stored as one block index per vertex. The canonical
//! form numbers blocks in order of first occurrence, so the index
//! sequence is a restricted growth string (RGS): `blocks[0] == 0` and
//! every entry exceeds the running maximum by at most one. Two equal
//! partitions therefore compare equal structurally, and lexicographic
//! order on the sequence gives the total "canonically smallest" order
//! used for deterministic tie-breaking everywhere downstream.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    blocks: Vec<usize>,
    part_count: usize,
}

impl Partition {
    /// Canonicalize an arbitrary block labeling.
    pub fn new(labels: &[usize]) -> Partition {
        let width = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
        let mut map: Vec<Option<usize>> = vec![None; width];
        let mut blocks = Vec::with_capacity(labels.len());
        let mut next = 0;
        for &l in labels {
            let b = *map[l].get_or_insert_with(|| {
                let b = next;
                next += 1;
                b
            });
            blocks.push(b);
        }
        Partition {
            blocks,
            part_count: next,
        }
    }

    /// `labels` must already be a restricted growth string.
    pub(crate) fn from_canonical(blocks: Vec<usize>, part_count: usize) -> Partition {
        debug_assert!(is_rgs(&blocks));
        debug_assert_eq!(part_count, blocks.iter().max().map_or(0, |m| m + 1));
        Partition { blocks, part_count }
    }

    pub fn single_block(n: usize) -> Partition {
        Partition {
            blocks: vec![0; n],
            part_count: if n == 0 { 0 } else { 1 },
        }
    }

    pub fn singletons(n: usize) -> Partition {
        Partition {
            blocks: (0..n).collect(),
            part_count: n,
        }
    }

    /// Two-block partition from the membership mask of the side that
    /// contains vertex 0 (bit v set means vertex v is with vertex 0).
    pub fn from_mask(n: usize, mask: u64) -> Partition {
        assert!(n <= 64 && mask & 1 == 1);
        let labels: Vec<usize> = (0..n).map(|v| (mask >> v & 1 == 0) as usize).collect();
        Partition::new(&labels)
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn part_count(&self) -> usize {
        self.part_count
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.blocks[v]
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn separates(&self, u: usize, v: usize) -> bool {
        self.blocks[u] != self.blocks[v]
    }

    /// Members of each block, in block order.
    pub fn groups(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.part_count];
        for (v, &b) in self.blocks.iter().enumerate() {
            out[b].push(v);
        }
        out
    }

    /// Restriction to a sorted vertex subset, re-canonicalized; position
    /// `i` of the result corresponds to `subset[i]`.
    pub fn restrict(&self, subset: &[usize]) -> Partition {
        let labels: Vec<usize> = subset.iter().map(|&v| self.blocks[v]).collect();
        Partition::new(&labels)
    }

    /// Checks that the labeling covers exactly `n` vertices.
    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.blocks.len() != n {
            return Err(Error::contract(format!(
                "partition covers {} vertices, graph has {n}",
                self.blocks.len()
            )));
        }
        Ok(())
    }
}

fn is_rgs(blocks: &[usize]) -> bool {
    let mut max_seen = None::<usize>;
    for &b in blocks {
        match max_seen {
            None if b != 0 => return false,
            Some(m) if b > m + 1 => return false,
            _ => {}
        }
        max_seen = Some(max_seen.map_or(0, |m| m.max(b)));
    }
    true
}

impl fmt::Display for Partition {
    /// `{0 2 | 1 3}`: blocks in canonical order, members ascending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, group) in self.groups().iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            for (j, v) in group.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "}}")
    }
}

/// All partitions of `0..n` in lexicographic RGS order (Bell(n) many),
/// starting from the single block. `max_parts` caps the number of blocks;
/// pass `n` for no cap.
pub struct AllPartitions {
    n: usize,
    max_parts: usize,
    rgs: Vec<usize>,
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl AllPartitions {
    pub fn new(n: usize) -> AllPartitions {
        AllPartitions::with_max_parts(n, n)
    }

    pub fn with_max_parts(n: usize, max_parts: usize) -> AllPartitions {
        AllPartitions {
            n,
            max_parts: max_parts.max(1),
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done: n == 0,
        }
    }

    fn emit(&self) -> Partition {
        let part_count = if self.n == 0 {
            0
        } else {
            self.prefix_max[self.n - 1] + 1
        };
        Partition::from_canonical(self.rgs.clone(), part_count)
    }
}

impl Iterator for AllPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.emit());
        }
        // Successor in lex order: bump the rightmost position that can
        // grow (bounded by prefix max + 1 and the part cap), reset tail.
        let mut i = self.n;
        loop {
            if i <= 1 {
                self.done = true;
                return None;
            }
            i -= 1;
            let cap = (self.prefix_max[i - 1] + 1).min(self.max_parts - 1);
            if self.rgs[i] < cap {
                break;
            }
        }
        self.rgs[i] += 1;
        self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
        for j in i + 1..self.n {
            self.rgs[j] = 0;
            self.prefix_max[j] = self.prefix_max[j - 1];
        }
        Some(self.emit())
    }
}

/// All unordered 2-partitions of `0..n` with both sides nonempty
/// (2^(n-1) - 1 of them), in ascending order of the mask of the side
/// containing vertex 0.
pub struct Bipartitions {
    n: usize,
    mask: u64,
    full: u64,
}

impl Bipartitions {
    pub fn new(n: usize) -> Bipartitions {
        assert!(n <= 63, "bipartition enumeration limited to n <= 63");
        Bipartitions {
            n,
            mask: 1,
            full: if n == 0 { 0 } else { (1u64 << n) - 1 },
        }
    }
}

impl Iterator for Bipartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.n < 2 {
            return None;
        }
        // Advance to the next odd mask that is not the full set.
        while self.mask < self.full {
            let m = self.mask;
            self.mask += 2;
            if m & 1 == 1 && m != self.full {
                return Some(Partition::from_mask(self.n, m));
            }
        }
        None
    }
}

/// Partitions of `0..n` into exactly `k` parts (Stirling S(n,k) many),
/// in lexicographic RGS order.
pub fn partitions_into(n: usize, k: usize) -> impl Iterator<Item = Partition> {
    AllPartitions::with_max_parts(n, k).filter(move |p| p.part_count() == k)
}
