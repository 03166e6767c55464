//! Binary relations over a fixed vertex set `0..n`, stored as a dense bit
//! matrix (one row of `u64` words per vertex).

use std::fmt;

const WORD: usize = u64::BITS as usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Relation {
    /// The empty relation over `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words_per_row = n.div_ceil(WORD);
        Relation {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
        }
    }

    /// Panics if a pair lies outside `0..n`.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Relation::empty(n);
        for (a, b) in pairs {
            r.insert(a, b);
        }
        r
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    pub fn insert(&mut self, a: usize, b: usize) -> bool {
        assert!(
            a < self.n && b < self.n,
            "pair ({a}, {b}) out of range {}",
            self.n
        );
        let word = &mut self.bits[a * self.words_per_row + b / WORD];
        let mask = 1u64 << (b % WORD);
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.row(a)[b / WORD] & (1u64 << (b % WORD)) != 0
    }

    /// Number of pairs, `|R|`.
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Number of pairs whose first element is `v`.
    pub fn out_degree(&self, v: usize) -> usize {
        if v >= self.n {
            return 0;
        }
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Second elements of the pairs starting at `v`, ascending.
    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row: &[u64] = if v < self.n { self.row(v) } else { &[] };
        row.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + bit)
            })
        })
    }

    /// All pairs in row-major (canonical) order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| self.successors(a).map(move |b| (a, b)))
    }

    /// `R⁺`, the smallest transitive relation containing `self`, by
    /// Warshall's algorithm: after step `k`, row `i` holds every vertex
    /// reachable from `i` through intermediates in `0..=k`.
    pub fn transitive_closure(&self) -> Relation {
        let mut closed = self.clone();
        let wpr = self.words_per_row;
        let mut pivot = vec![0u64; wpr];
        for k in 0..self.n {
            pivot.copy_from_slice(closed.row(k));
            if pivot.iter().all(|&w| w == 0) {
                continue;
            }
            let (kw, kb) = (k / WORD, 1u64 << (k % WORD));
            for i in 0..self.n {
                let row = &mut closed.bits[i * wpr..(i + 1) * wpr];
                if row[kw] & kb != 0 {
                    for (dst, src) in row.iter_mut().zip(&pivot) {
                        *dst |= src;
                    }
                }
            }
        }
        closed
    }

    /// `σ_[1]=v(R)`: the pairs of `self` whose first element is `v`.
    pub fn select_from(&self, v: usize) -> Relation {
        let mut out = Relation::empty(self.n);
        if v < self.n {
            let wpr = self.words_per_row;
            out.bits[v * wpr..(v + 1) * wpr].copy_from_slice(self.row(v));
        }
        out
    }

    /// Union over the same vertex set.
    pub fn union(&self, other: &Relation) -> Relation {
        assert_eq!(self.n, other.n, "relations over different vertex sets");
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
        out
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}
