//! Bit-packed binary linear codes: row reduction, standard form,
//! self-duality, membership, and exhaustive weight enumeration.
//!
//! Enumeration walks the `2^k` messages of a systematic generator in Gray-code
//! order, so each codeword costs one row XOR and two popcounts. Full weight
//! counts instead take the low message bits from a table of parities and walk
//! only the high bits. The message
//! space is cut into contiguous ranges that workers claim in any order; the
//! per-range results are merged by summation, so the outcome never depends on
//! the worker count.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::bits::{words_for, BitVector};
use crate::constructions::RingGenerator;
use crate::error::{Error, Result};
use crate::gray::to_binary;
use crate::rings::Ring;

/// Largest dimension enumerated without an explicit override.
pub const DEFAULT_BUDGET: usize = 34;

/// Hard ceiling: messages are held in one `u64`.
const MAX_ENUM_DIM: usize = 63;

/// A binary `[n, k]` code given by `k` independent packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackedBinaryCode {
    n: usize,
    rows: Vec<BitVector>,
    standard_form: bool,
    /// `permutation[new] = old` when the standard form moved columns.
    permutation: Option<Vec<usize>>,
}

/// Counts `A_0..A_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Code length the distribution was measured at.
    pub fn len(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `A_i`, zero beyond the length.
    pub fn get(&self, i: usize) -> u64 {
        self.counts.get(i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| u128::from(c)).sum()
    }

    /// Smallest positive weight that occurs.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| self.counts[i] > 0)
    }

    /// `[(i, A_i)]` for the nonzero entries.
    pub fn nonzero(&self) -> Vec<(usize, u64)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }

    pub fn from_nonzero(n: usize, pairs: &[(usize, u64)]) -> Result<Self> {
        let mut counts = vec![0; n + 1];
        for &(i, c) in pairs {
            *counts
                .get_mut(i)
                .ok_or_else(|| Error::BadShape(format!("weight {i} exceeds length {n}")))? = c;
        }
        Ok(Self { counts })
    }

    /// JSON array of `[i, A_i]` pairs for the nonzero entries.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.nonzero()).expect("pairs of integers serialize")
    }
}

/// Reduced row echelon form with leftmost pivots; zero rows dropped.
fn rref(n: usize, mut rows: Vec<BitVector>) -> (Vec<BitVector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

impl PackedBinaryCode {
    /// Code with the given generator rows, which must be independent.
    pub fn new(n: usize, rows: Vec<BitVector>) -> Result<Self> {
        Self::check_lengths(n, &rows)?;
        let (reduced, _) = rref(n, rows.clone());
        if reduced.len() != rows.len() {
            return Err(Error::BadShape(format!(
                "{} generator rows have rank {}",
                rows.len(),
                reduced.len()
            )));
        }
        Ok(Self {
            n,
            rows,
            standard_form: false,
            permutation: None,
        })
    }

    /// Code spanned by arbitrary rows, kept in reduced echelon form.
    pub fn span(n: usize, rows: Vec<BitVector>) -> Result<Self> {
        Self::check_lengths(n, &rows)?;
        let (rows, _) = rref(n, rows);
        Ok(Self {
            n,
            rows,
            standard_form: false,
            permutation: None,
        })
    }

    fn check_lengths(n: usize, rows: &[BitVector]) -> Result<()> {
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::BadShape(format!(
                "row of length {} in a code of length {n}",
                r.len()
            )));
        }
        Ok(())
    }

    /// Binary image of a ring code: each row `r` contributes the images of
    /// `s·r` for an F2-basis `s` of the ring.
    pub fn from_ring_generator<R: Ring>(g: &RingGenerator<R>) -> Result<Self> {
        let basis = R::f2_basis();
        let n = g.len() * R::ID.binary_width();
        let rows: Vec<BitVector> = g
            .rows()
            .flat_map(|r| {
                basis
                    .iter()
                    .map(move |&s| to_binary(&r.iter().map(|&x| s * x).collect::<Vec<_>>()))
            })
            .collect();
        let expected = rows.len();
        let code = Self::span(n, rows)?;
        if code.k() != expected {
            return Err(Error::InternalError(format!(
                "binary image has rank {} instead of {expected}",
                code.k()
            )));
        }
        Ok(code)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn is_standard_form(&self) -> bool {
        self.standard_form
    }

    /// `permutation[new] = old`, if the standard form had to move columns.
    pub fn permutation(&self) -> Option<&[usize]> {
        self.permutation.as_deref()
    }

    /// Generator `[I_k | P]`. Pivot columns are chosen leftmost first; when
    /// they are not `0..k` they are moved to the front (other columns keep
    /// their relative order) and the move is recorded.
    pub fn standard_form(&self) -> Self {
        let (rows, pivots) = rref(self.n, self.rows.clone());
        let identity = pivots.iter().enumerate().all(|(i, &p)| i == p);
        if identity {
            return Self {
                n: self.n,
                rows,
                standard_form: true,
                permutation: None,
            };
        }
        let mut perm = pivots.clone();
        let mut is_pivot = vec![false; self.n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        perm.extend((0..self.n).filter(|&c| !is_pivot[c]));
        let rows = rows.iter().map(|r| r.permuted(&perm)).collect();
        Self {
            n: self.n,
            rows,
            standard_form: true,
            permutation: Some(perm),
        }
    }

    /// Map a vector in this code's coordinates to the original coordinates
    /// before the standard-form permutation.
    pub fn to_original_coords(&self, x: &BitVector) -> BitVector {
        match &self.permutation {
            None => x.clone(),
            Some(perm) => {
                let mut out = BitVector::zeros(x.len());
                for (new, &old) in perm.iter().enumerate() {
                    out.set(old, x.get(new));
                }
                out
            }
        }
    }

    /// Map a vector in original coordinates into this code's coordinates.
    pub fn from_original_coords(&self, x: &BitVector) -> BitVector {
        match &self.permutation {
            None => x.clone(),
            Some(perm) => x.permuted(perm),
        }
    }

    /// Same code with coordinates relabelled: column `j` of the result is
    /// column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::BadShape(
                "permutation length differs from code length".into(),
            ));
        }
        let rows = self.rows.iter().map(|r| r.permuted(perm)).collect();
        Ok(Self {
            n: self.n,
            rows,
            standard_form: false,
            permutation: None,
        })
    }

    /// `n = 2k` and every pair of rows (including a row with itself) is orthogonal.
    pub fn is_self_dual(&self) -> bool {
        self.n == 2 * self.k() && self.is_self_orthogonal()
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, a)| self.rows[i..].iter().all(|b| !a.dot(b)))
    }

    pub fn contains(&self, x: &BitVector) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::BadShape(format!(
                "vector of length {} vs code length {}",
                x.len(),
                self.n
            )));
        }
        let (rows, pivots) = rref(self.n, self.rows.clone());
        let mut r = x.clone();
        for (row, &p) in rows.iter().zip(&pivots) {
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        Ok(r.is_zero())
    }

    /// Every codeword, in Gray-code order (small `k` only).
    pub fn codewords(&self) -> Vec<BitVector> {
        assert!(self.k() < 24, "codeword listing is for small codes");
        let mut acc = BitVector::zeros(self.n);
        let mut out = vec![acc.clone()];
        for i in 1u64..(1u64 << self.k()) {
            acc.xor_assign(&self.rows[i.trailing_zeros() as usize]);
            out.push(acc.clone());
        }
        out
    }

    /// Exact `A_0..A_n`; refuses `k > budget`.
    pub fn weight_distribution(&self, budget: usize, threads: usize) -> Result<WeightDistribution> {
        self.check_budget(budget)?;
        Ok(Enumerator::new(self).distribution(threads))
    }

    /// Minimum weight over nonzero codewords (`None` for the zero code).
    pub fn min_distance(&self, budget: usize, threads: usize) -> Result<Option<usize>> {
        self.check_budget(budget)?;
        // every weight is at least 1, and even when all rows are even
        let floor = if self.rows.iter().all(|r| r.weight() % 2 == 0) {
            2
        } else {
            1
        };
        Ok(Enumerator::new(self).min_weight(threads, floor + 1))
    }

    /// True if some nonzero codeword has weight below `d`; stops at the first one.
    pub fn has_word_below(&self, d: usize, budget: usize, threads: usize) -> Result<bool> {
        self.check_budget(budget)?;
        Ok(Enumerator::new(self)
            .min_weight(threads, d)
            .is_some_and(|w| w < d))
    }

    /// Exact `A_0..A_max_w` of a self-dual code without walking all `2^k`
    /// codewords.
    ///
    /// In standard form `[I | P]` the block `P` is orthogonal, so `[Pᵀ | I]`
    /// generates the same code and both halves are information sets. A word
    /// of weight at most `max_w` has at most `t = max_w / 2` ones on one half.
    /// It is counted from the left when its left weight is at most `t`, and
    /// from the right otherwise.
    pub fn low_weight_counts(&self, max_w: usize) -> Result<Vec<u64>> {
        if !self.is_self_dual() {
            return Err(Error::NotSelfDualCondition(
                "low-weight counting needs a self-dual code".into(),
            ));
        }
        let max_w = max_w.min(self.n);
        let k = self.k();
        let t = max_w / 2;
        let sf = self.standard_form();
        let width = words_for(k).max(1);
        let pack = |bits: &mut dyn Iterator<Item = bool>| {
            let mut w = BitVector::from_bits(bits).words().to_vec();
            w.resize(width, 0);
            w
        };
        let left: Vec<Vec<u64>> = sf
            .rows
            .iter()
            .map(|r| pack(&mut (k..2 * k).map(|j| r.get(j))))
            .collect();
        let right: Vec<Vec<u64>> = (k..2 * k)
            .map(|j| pack(&mut sf.rows.iter().map(|r| r.get(j))))
            .collect();
        let mut counts = vec![0u64; max_w + 1];
        subsets_up_to(&left, t, &mut |i, other| {
            if i + other <= max_w {
                counts[i + other] += 1;
            }
        });
        subsets_up_to(&right, t, &mut |i, other| {
            if other > t && i + other <= max_w {
                counts[i + other] += 1;
            }
        });
        Ok(counts)
    }

    fn check_budget(&self, budget: usize) -> Result<()> {
        let k = self.k();
        if k > budget || k > MAX_ENUM_DIM {
            return Err(Error::BudgetExceeded {
                k,
                budget: budget.min(MAX_ENUM_DIM),
            });
        }
        Ok(())
    }
}

/// Calls `visit(|S|, weight(Σ_{i∈S} rows[i]))` for every subset `S` with
/// `|S| <= t`, the empty set included.
fn subsets_up_to(rows: &[Vec<u64>], t: usize, visit: &mut dyn FnMut(usize, usize)) {
    fn rec(
        rows: &[Vec<u64>],
        from: usize,
        depth: usize,
        t: usize,
        stack: &mut [Vec<u64>],
        visit: &mut dyn FnMut(usize, usize),
    ) {
        let weight = stack[depth].iter().map(|x| x.count_ones() as usize).sum();
        visit(depth, weight);
        if depth == t {
            return;
        }
        for i in from..rows.len() {
            let (lo, hi) = stack.split_at_mut(depth + 1);
            for ((d, s), r) in hi[0].iter_mut().zip(&lo[depth]).zip(&rows[i]) {
                *d = s ^ r;
            }
            rec(rows, i + 1, depth + 1, t, stack, visit);
        }
    }
    let width = rows.first().map_or(1, Vec::len);
    let mut stack = vec![vec![0u64; width]; t + 1];
    rec(rows, 0, 0, t, &mut stack, visit);
}

/// Systematic view `(m | m·P)` of a code, with `P` packed row by row.
struct Enumerator {
    n: usize,
    k: usize,
    parity_words: usize,
    parity: Vec<u64>,
}

/// Messages per work unit.
const CHUNK_BITS: usize = 22;

/// Message bits resolved by table lookup in the distribution count; at most
/// `CHUNK_BITS` so that chunks split evenly.
const TABLE_BITS: usize = 16;

fn merge_hist(acc: &mut Vec<u64>, part: Vec<u64>) {
    for (a, p) in acc.iter_mut().zip(part) {
        *a += p;
    }
}

/// The low `TABLE_BITS` message bits come from a precomputed table of
/// parities; only the high bits are walked in Gray order.
struct SplitTable<const W: usize> {
    low: usize,
    rows: Vec<[u64; W]>,
    table: Vec<[u64; W]>,
    low_weight: Vec<u32>,
}

impl<const W: usize> SplitTable<W> {
    fn new(e: &Enumerator) -> Self {
        let low = TABLE_BITS.min(e.k);
        let rows: Vec<[u64; W]> = e
            .parity
            .chunks_exact(W)
            .map(|c| c.try_into().expect("chunk of W words"))
            .collect();
        let size = 1usize << low;
        let mut table = vec![[0u64; W]; size];
        let mut low_weight = vec![0u32; size];
        for l in 1..size {
            let mut t = table[l & (l - 1)];
            let row = &rows[l.trailing_zeros() as usize];
            for w in 0..W {
                t[w] ^= row[w];
            }
            table[l] = t;
            low_weight[l] = l.count_ones();
        }
        Self {
            low,
            rows,
            table,
            low_weight,
        }
    }

    /// Visit the weights of all codewords whose messages lie in `s..e`
    /// (a range aligned to the table size).
    #[inline(always)]
    fn chunk(&self, s: u64, e: u64, mut visit: impl FnMut(u32)) {
        let high = &self.rows[self.low..];
        let (hs, he) = (s >> self.low, e >> self.low);
        let mut g = hs ^ (hs >> 1);
        let mut ph = [0u64; W];
        for (i, row) in high.iter().enumerate() {
            if (g >> i) & 1 == 1 {
                for w in 0..W {
                    ph[w] ^= row[w];
                }
            }
        }
        for h in hs..he {
            if h != hs {
                let b = h.trailing_zeros() as usize;
                g ^= 1 << b;
                for w in 0..W {
                    ph[w] ^= high[b][w];
                }
            }
            let base = g.count_ones();
            for (t, &lw) in self.table.iter().zip(&self.low_weight) {
                let mut c = base + lw;
                for w in 0..W {
                    c += (ph[w] ^ t[w]).count_ones();
                }
                visit(c);
            }
        }
    }
}

impl Enumerator {
    fn new(code: &PackedBinaryCode) -> Self {
        let sf = code.standard_form();
        let (n, k) = (code.n, code.k());
        let r = n - k;
        let parity_words = words_for(r).max(1);
        let mut parity = Vec::with_capacity(k * parity_words);
        for row in &sf.rows {
            let tail = BitVector::from_bits((k..n).map(|j| row.get(j)));
            let mut w = tail.words().to_vec();
            w.resize(parity_words, 0);
            parity.extend(w);
        }
        Self {
            n,
            k,
            parity_words,
            parity,
        }
    }

    fn chunks(&self) -> (u64, u64) {
        let total = 1u64 << self.k;
        let size = 1u64 << CHUNK_BITS.min(self.k);
        (total / size, size)
    }

    /// Run `work(start, end)` over all chunks on `threads` workers.
    fn parallel<T: Send>(
        &self,
        threads: usize,
        work: impl Fn(u64, u64) -> T + Sync,
        merge: impl Fn(&mut T, T) + Sync,
        init: T,
    ) -> T {
        let (count, size) = self.chunks();
        let next = AtomicU64::new(0);
        let result = Mutex::new(init);
        let threads = threads.clamp(1, count as usize);
        std::thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(|| loop {
                    let c = next.fetch_add(1, Ordering::Relaxed);
                    if c >= count {
                        break;
                    }
                    let part = work(c * size, (c + 1) * size);
                    merge(&mut result.lock().unwrap(), part);
                });
            }
        });
        result.into_inner().unwrap()
    }

    fn distribution(&self, threads: usize) -> WeightDistribution {
        match self.parity_words {
            1 => self.distribution_split::<1>(threads),
            2 => self.distribution_split::<2>(threads),
            3 => self.distribution_split::<3>(threads),
            4 => self.distribution_split::<4>(threads),
            _ => self.distribution_walk(threads),
        }
    }

    fn distribution_walk(&self, threads: usize) -> WeightDistribution {
        let n = self.n;
        let counts = self.parallel(
            threads,
            |s, e| {
                let mut hist = vec![0u64; n + 1];
                self.walk(s, e, |w| {
                    hist[w as usize] += 1;
                    true
                });
                hist
            },
            merge_hist,
            vec![0u64; n + 1],
        );
        WeightDistribution::new(counts)
    }

    fn distribution_split<const W: usize>(&self, threads: usize) -> WeightDistribution {
        let n = self.n;
        let split = SplitTable::<W>::new(self);
        let counts = self.parallel(
            threads,
            |s, e| {
                let mut hist = vec![0u64; n + 1];
                split.chunk(s, e, |c| hist[c as usize] += 1);
                hist
            },
            merge_hist,
            vec![0u64; n + 1],
        );
        WeightDistribution::new(counts)
    }

    /// Minimum nonzero weight; with `stop_below > 0`, returns as soon as any
    /// weight below it is seen (the value returned is then only an upper bound
    /// on the minimum, but is itself below `stop_below`).
    fn min_weight(&self, threads: usize, stop_below: usize) -> Option<usize> {
        if self.k == 0 {
            return None;
        }
        match self.parity_words {
            1 => self.min_weight_split::<1>(threads, stop_below),
            2 => self.min_weight_split::<2>(threads, stop_below),
            3 => self.min_weight_split::<3>(threads, stop_below),
            4 => self.min_weight_split::<4>(threads, stop_below),
            _ => self.min_weight_walk(threads, stop_below),
        }
    }

    fn min_weight_split<const W: usize>(&self, threads: usize, stop_below: usize) -> Option<usize> {
        let split = SplitTable::<W>::new(self);
        let stop = AtomicBool::new(false);
        let best = self.parallel(
            threads,
            |s, e| {
                let mut best = u32::MAX;
                if stop.load(Ordering::Relaxed) {
                    return best;
                }
                // weight 0 is only the zero codeword
                split.chunk(s, e, |c| {
                    if c > 0 && c < best {
                        best = c;
                    }
                });
                if (best as usize) < stop_below {
                    stop.store(true, Ordering::Relaxed);
                }
                best
            },
            |acc, part| *acc = (*acc).min(part),
            u32::MAX,
        );
        (best != u32::MAX).then_some(best as usize)
    }

    fn min_weight_walk(&self, threads: usize, stop_below: usize) -> Option<usize> {
        let stop = AtomicBool::new(false);
        let best = self.parallel(
            threads,
            |s, e| {
                let mut best = u32::MAX;
                if stop.load(Ordering::Relaxed) {
                    return best;
                }
                let mut first = s == 0;
                self.walk(s, e, |w| {
                    if first {
                        // the zero codeword
                        first = false;
                        return true;
                    }
                    if w < best {
                        best = w;
                        if (w as usize) < stop_below {
                            stop.store(true, Ordering::Relaxed);
                            return false;
                        }
                    }
                    true
                });
                best
            },
            |acc, part| *acc = (*acc).min(part),
            u32::MAX,
        );
        (best != u32::MAX).then_some(best as usize)
    }

    /// Visit the weights of the codewords with Gray indices `start..end`.
    /// `visit` returns false to stop early.
    fn walk(&self, start: u64, end: u64, visit: impl FnMut(u32) -> bool) {
        match self.parity_words {
            1 => self.walk_fixed::<1>(start, end, visit),
            2 => self.walk_fixed::<2>(start, end, visit),
            3 => self.walk_fixed::<3>(start, end, visit),
            4 => self.walk_fixed::<4>(start, end, visit),
            _ => self.walk_dyn(start, end, visit),
        }
    }

    fn walk_fixed<const W: usize>(&self, start: u64, end: u64, mut visit: impl FnMut(u32) -> bool) {
        let rows: Vec<[u64; W]> = self
            .parity
            .chunks_exact(W)
            .map(|c| c.try_into().expect("chunk of W words"))
            .collect();
        let mut g = start ^ (start >> 1);
        let mut acc = [0u64; W];
        for (i, row) in rows.iter().enumerate() {
            if (g >> i) & 1 == 1 {
                for w in 0..W {
                    acc[w] ^= row[w];
                }
            }
        }
        let weight = |g: u64, acc: &[u64; W]| {
            g.count_ones() + acc.iter().map(|x| x.count_ones()).sum::<u32>()
        };
        if !visit(weight(g, &acc)) {
            return;
        }
        for i in start + 1..end {
            let b = i.trailing_zeros() as usize;
            g ^= 1 << b;
            let row = &rows[b];
            for w in 0..W {
                acc[w] ^= row[w];
            }
            if !visit(weight(g, &acc)) {
                return;
            }
        }
    }

    fn walk_dyn(&self, start: u64, end: u64, mut visit: impl FnMut(u32) -> bool) {
        let w = self.parity_words;
        let row = |i: usize| &self.parity[i * w..(i + 1) * w];
        let mut g = start ^ (start >> 1);
        let mut acc = vec![0u64; w];
        for i in 0..self.k {
            if (g >> i) & 1 == 1 {
                acc.iter_mut().zip(row(i)).for_each(|(a, r)| *a ^= r);
            }
        }
        let weight =
            |g: u64, acc: &[u64]| g.count_ones() + acc.iter().map(|x| x.count_ones()).sum::<u32>();
        if !visit(weight(g, &acc)) {
            return;
        }
        for i in start + 1..end {
            let b = i.trailing_zeros() as usize;
            g ^= 1 << b;
            acc.iter_mut().zip(row(b)).for_each(|(a, r)| *a ^= r);
            if !visit(weight(g, &acc)) {
                return;
            }
        }
    }
}
