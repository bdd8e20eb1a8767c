//! Dense bit rows and GF(2) rank via Gaussian elimination.

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> BitRow {
        BitRow {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        debug_assert!(i < self.len);
        if bit {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}

/// Row-major matrix over GF(2).
#[derive(Clone, Debug)]
pub struct Gf2Matrix {
    rows: Vec<BitRow>,
    ncols: usize,
}

impl Gf2Matrix {
    pub fn new(ncols: usize) -> Gf2Matrix {
        Gf2Matrix {
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn push_row(&mut self, row: BitRow) {
        assert_eq!(row.len(), self.ncols);
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &BitRow {
        &self.rows[i]
    }

    /// Rank by forward elimination on a working copy.
    pub fn rank(&self) -> usize {
        let mut work: Vec<BitRow> = self.rows.clone();
        let mut pivots: Vec<(usize, BitRow)> = Vec::new();
        let mut rank = 0;
        for row in work.drain(..) {
            let mut row = row;
            for (col, pivot) in &pivots {
                if row.get(*col) {
                    row.xor_assign(pivot);
                }
            }
            if let Some(col) = row.first_one() {
                pivots.push((col, row));
                rank += 1;
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(bits: &[u8]) -> BitRow {
        let mut r = BitRow::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            r.set(i, b == 1);
        }
        r
    }

    #[test]
    fn xor_and_first_one() {
        let mut a = row(&[1, 0, 1, 0]);
        let b = row(&[1, 1, 0, 0]);
        a.xor_assign(&b);
        assert_eq!(a, row(&[0, 1, 1, 0]));
        assert_eq!(a.first_one(), Some(1));
        assert!(!a.is_zero());
        a.xor_assign(&row(&[0, 1, 1, 0]));
        assert!(a.is_zero());
    }

    #[test]
    fn rank_small_cases() {
        let mut m = Gf2Matrix::new(3);
        m.push_row(row(&[1, 0, 1]));
        m.push_row(row(&[0, 1, 1]));
        m.push_row(row(&[1, 1, 0])); // sum of the first two
        assert_eq!(m.rank(), 2);

        let mut id = Gf2Matrix::new(4);
        for i in 0..4 {
            let mut r = BitRow::zeros(4);
            r.set(i, true);
            id.push_row(r);
        }
        assert_eq!(id.rank(), 4);

        let empty = Gf2Matrix::new(5);
        assert_eq!(empty.rank(), 0);
    }

    #[test]
    fn rank_spans_word_boundary() {
        let n = 130;
        let mut m = Gf2Matrix::new(n);
        for i in 0..3 {
            let mut r = BitRow::zeros(n);
            r.set(i * 64, true);
            r.set(n - 1, true);
            m.push_row(r);
        }
        assert_eq!(m.rank(), 3);
    }
}
