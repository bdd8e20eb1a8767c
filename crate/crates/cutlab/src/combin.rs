//! Small combinatorial helpers: binomials, Stirling numbers, and
//! lexicographic k-subset enumeration.

/// C(n, k) with saturation at `u64::MAX`; the counts handled at desk
/// scale never get near that, so saturation doubles as an overflow trap
/// in the guards that compare against it.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Stirling number of the second kind S(n, k), saturating.
pub fn stirling2(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    if n == 0 {
        return 1; // S(0,0)
    }
    if k == 0 {
        return 0;
    }
    let mut row = vec![0u128; k + 1];
    row[0] = 1; // S(0,0)
    for _ in 1..=n {
        let mut next = vec![0u128; k + 1];
        for j in 1..=k {
            next[j] = (j as u128)
                .saturating_mul(row[j])
                .saturating_add(row[j - 1]);
        }
        row = next;
        row[0] = 0;
    }
    row[k].min(u64::MAX as u128) as u64
}

/// All k-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        n,
        k,
        state: None,
        done: k > n,
    }
}

/// All k-element sub-slices of `items` in lexicographic index order.
pub fn combinations_of<T: Clone>(items: &[T], k: usize) -> impl Iterator<Item = Vec<T>> + '_ {
    combinations(items.len(), k).map(move |idx| idx.iter().map(|&i| items[i].clone()).collect())
}

pub struct Combinations {
    n: usize,
    k: usize,
    state: Option<Vec<usize>>,
    done: bool,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        match &mut self.state {
            None => {
                let first: Vec<usize> = (0..self.k).collect();
                self.state = Some(first.clone());
                Some(first)
            }
            Some(cur) => {
                // Find the rightmost index that can still advance.
                let mut i = self.k;
                loop {
                    if i == 0 {
                        self.done = true;
                        return None;
                    }
                    i -= 1;
                    if cur[i] < self.n - self.k + i {
                        break;
                    }
                }
                cur[i] += 1;
                for j in i + 1..self.k {
                    cur[j] = cur[j - 1] + 1;
                }
                Some(cur.clone())
            }
        }
    }
}

/// All proper subsets (including the empty set, excluding the full set)
/// of `items`, as sorted vectors, in mask order.
pub fn proper_subsets<T: Clone>(items: &[T]) -> impl Iterator<Item = Vec<T>> + '_ {
    let full: u64 = (1u64 << items.len()) - 1;
    (0..full).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, x)| x.clone())
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_table() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(9, 2), 36);
        assert_eq!(binomial(12, 2), 66);
        assert_eq!(binomial(4, 7), 0);
    }

    #[test]
    fn stirling_table() {
        assert_eq!(stirling2(4, 2), 7);
        assert_eq!(stirling2(6, 3), 90);
        assert_eq!(stirling2(3, 3), 1);
        assert_eq!(stirling2(5, 1), 1);
        assert_eq!(stirling2(2, 5), 0);
    }

    #[test]
    fn combinations_lex_order_and_count() {
        let all: Vec<_> = combinations(5, 3).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all[9], vec![2, 3, 4]);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, all);

        assert_eq!(combinations(3, 0).count(), 1);
        assert_eq!(combinations(3, 4).count(), 0);
    }

    #[test]
    fn proper_subsets_of_pair() {
        let subs: Vec<Vec<u8>> = proper_subsets(&[7u8, 9]).collect();
        assert_eq!(subs, vec![vec![], vec![7], vec![9]]);
    }
}
