//! Big-integer combinatorial counting: factorials, binomials, Eulerian
//! numbers, unsigned Stirling numbers of the first kind, and weighted Lah
//! numbers.
//!
//! A *linearly ordered block* is a nonempty sequence of distinct positive
//! integers. Its weight is the number of entries smaller than its first
//! entry (the head), and the weight of a partition into ordered blocks is
//! the sum of its block weights. [`weighted_lah`] counts the partitions of
//! `{1, …, n}` into exactly `m` ordered blocks of total weight `l`;
//! [`enumerate_ordered_partitions`] generates those partitions explicitly so
//! the recurrence can be cross-checked against direct enumeration.

use dashmap::DashMap;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::DomainError;

/// `n!` as an exact big integer.
pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Binomial coefficient `C(n, j)`, zero when `j > n`.
///
/// Computed by the multiplicative rule; every intermediate division is
/// exact because each prefix product is itself a binomial coefficient.
pub fn binomial(n: u64, j: u64) -> BigUint {
    if j > n {
        return BigUint::zero();
    }
    let j = j.min(n - j);
    let mut res = BigUint::one();
    for i in 0..j {
        res = res * (n - i) / (i + 1);
    }
    res
}

/// Eulerian number `A(m, j)`: permutations of `{1, …, m}` with exactly `j`
/// descents. Out-of-range `j` (negative, or `j ≥ m` for `m ≥ 1`) gives
/// zero; the empty permutation counts once, so `A(0, 0) = 1`.
pub fn eulerian(m: u64, j: i64) -> BigUint {
    if j < 0 {
        return BigUint::zero();
    }
    let j = j as u64;
    if m == 0 {
        return if j == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if j >= m {
        return BigUint::zero();
    }
    // Row r holds A(r, 0..r); A(r, i) = (i+1) A(r-1, i) + (r-i) A(r-1, i-1).
    let mut row = vec![BigUint::one()];
    for r in 2..=m {
        let mut next = Vec::with_capacity(r as usize);
        for i in 0..r {
            let mut entry = BigUint::zero();
            if (i as usize) < row.len() {
                entry += &row[i as usize] * (i + 1);
            }
            if i >= 1 {
                entry += &row[(i - 1) as usize] * (r - i);
            }
            next.push(entry);
        }
        row = next;
    }
    row[j as usize].clone()
}

/// Unsigned Stirling number of the first kind `c(n, m)`: permutations of
/// `{1, …, n}` with exactly `m` cycles. Zero when `m > n`; `c(0, 0) = 1`.
pub fn stirling_first_unsigned(n: u64, m: u64) -> BigUint {
    if m > n {
        return BigUint::zero();
    }
    // Row r holds c(r, 0..=r); c(r, j) = (r-1) c(r-1, j) + c(r-1, j-1).
    let mut row = vec![BigUint::one()];
    for r in 1..=n {
        let mut next = Vec::with_capacity(r as usize + 1);
        for jj in 0..=r {
            let mut entry = BigUint::zero();
            if (jj as usize) < row.len() {
                entry += &row[jj as usize] * (r - 1);
            }
            if jj >= 1 {
                entry += row[(jj - 1) as usize].clone();
            }
            next.push(entry);
        }
        row = next;
    }
    row[m as usize].clone()
}

/// A partition of `{1, …, n}` into nonempty linearly ordered blocks.
///
/// Order *within* a block is significant; order *among* blocks is not, and
/// the canonical form stores blocks sorted by their minimum element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    blocks: Vec<Vec<u64>>,
    n: u64,
}

impl OrderedPartition {
    /// Builds a partition from the given blocks, checking that they cover
    /// `{1, …, n}` exactly once each, and normalizing block order.
    pub fn new(blocks: Vec<Vec<u64>>, n: u64) -> Result<Self, DomainError> {
        let mut seen = vec![false; n as usize];
        for block in &blocks {
            if block.is_empty() {
                return Err(DomainError::new("ordered partition has an empty block"));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(DomainError::new(format!(
                        "element {x} outside ground set 1..={n}"
                    )));
                }
                if seen[(x - 1) as usize] {
                    return Err(DomainError::new(format!("element {x} appears twice")));
                }
                seen[(x - 1) as usize] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(DomainError::new("blocks do not cover the ground set"));
        }
        let mut blocks = blocks;
        blocks.sort_by_key(|b| *b.iter().min().expect("blocks are nonempty"));
        Ok(OrderedPartition { blocks, n })
    }

    /// The blocks, ordered by minimum element.
    pub fn blocks(&self) -> &[Vec<u64>] {
        &self.blocks
    }

    /// Size of the ground set `{1, …, n}`.
    pub fn ground_set_size(&self) -> u64 {
        self.n
    }
}

/// Total weight of a partition: for each block, the number of entries
/// strictly smaller than the block head, summed over blocks.
pub fn partition_weight(p: &OrderedPartition) -> u64 {
    p.blocks()
        .iter()
        .map(|b| b.iter().filter(|&&x| x < b[0]).count() as u64)
        .sum()
}

/// Generates every partition of `{1, …, n}` into exactly `m` linearly
/// ordered blocks, each exactly once, in canonical form.
///
/// Elements are placed in increasing order: each next element either opens
/// a new block or is inserted at one of the `len + 1` positions of an
/// existing block. Because a block is always opened by its minimum element,
/// the blocks come out already sorted by minimum. `(0, 0)` yields the
/// single empty partition; `m = 0` with `n > 0` or `m > n` yields nothing.
pub fn enumerate_ordered_partitions(n: u64, m: u64) -> impl Iterator<Item = OrderedPartition> {
    let mut out = Vec::new();
    if m <= n {
        let mut blocks: Vec<Vec<u64>> = Vec::new();
        place_next(n, m, 1, &mut blocks, &mut out);
    }
    out.into_iter()
}

fn place_next(
    n: u64,
    m: u64,
    next: u64,
    blocks: &mut Vec<Vec<u64>>,
    out: &mut Vec<OrderedPartition>,
) {
    let placed_blocks = blocks.len() as u64;
    let remaining = n + 1 - next;
    // Blocks are only ever added, so prune branches that already exceed `m`
    // or can no longer reach it.
    if placed_blocks > m || placed_blocks + remaining < m {
        return;
    }
    if next > n {
        out.push(OrderedPartition {
            blocks: blocks.clone(),
            n,
        });
        return;
    }
    blocks.push(vec![next]);
    place_next(n, m, next + 1, blocks, out);
    blocks.pop();
    for bi in 0..blocks.len() {
        for pos in 0..=blocks[bi].len() {
            blocks[bi].insert(pos, next);
            place_next(n, m, next + 1, blocks, out);
            blocks[bi].remove(pos);
        }
    }
}

/// Concurrent memo table for [`weighted_lah`] values, keyed by
/// `(l, n, m)`. Entries are write-once; sharing one table across calls and
/// threads is safe and avoids recomputation.
#[derive(Debug, Default)]
pub struct MemoTable {
    map: DashMap<(i64, u64, u64), BigUint>,
}

impl MemoTable {
    /// An empty table.
    pub fn new() -> Self {
        Self::default()
    }

    /// Looks up a previously computed value.
    pub fn get(&self, l: i64, n: u64, m: u64) -> Option<BigUint> {
        self.map.get(&(l, n, m)).map(|entry| entry.clone())
    }

    /// Number of cached entries.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    /// Whether the table holds no entries.
    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    fn insert(&self, l: i64, n: u64, m: u64, value: BigUint) {
        match self.map.entry((l, n, m)) {
            dashmap::mapref::entry::Entry::Occupied(existing) => {
                debug_assert_eq!(
                    existing.get(),
                    &value,
                    "memo table is write-once; conflicting value for ({l}, {n}, {m})"
                );
            }
            dashmap::mapref::entry::Entry::Vacant(slot) => {
                slot.insert(value);
            }
        }
    }
}

/// Weighted Lah number `W(l, n, m)`: the number of partitions of
/// `{1, …, n}` into exactly `m` linearly ordered blocks with total weight
/// `l` (see [`partition_weight`]).
///
/// Out-of-support arguments — `l < 0`, `l > n − m`, `m > n`, or `m = 0`
/// with `n > 0` — give zero; the empty partition gives `W(0, 0, 0) = 1`.
///
/// Computed by the recurrence obtained from the placement of element `n`:
/// either `n` sits strictly inside a block (`n − 1` insertion positions in
/// a partition of `{1, …, n−1}`), or `n` heads a block whose `j` other
/// entries are all smaller, contributing weight `j`:
///
/// ```text
/// W(l, n, m) = (n−1) W(l, n−1, m)
///            + Σ_{j=0}^{n−1} C(n−1, j) · j! · W(l−j, n−1−j, m−1)
/// ```
pub fn weighted_lah(l: i64, n: u64, m: u64, memo: &MemoTable) -> BigUint {
    if l < 0 || m > n {
        return BigUint::zero();
    }
    if m == 0 {
        // m = 0 and m <= n means n = 0 here is the only support.
        return if n == 0 && l == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if l as u64 > n - m {
        return BigUint::zero();
    }
    if let Some(cached) = memo.get(l, n, m) {
        return cached;
    }
    let mut acc = weighted_lah(l, n - 1, m, memo) * (n - 1);
    for j in 0..n {
        let sub = weighted_lah(l - j as i64, n - 1 - j, m - 1, memo);
        if !sub.is_zero() {
            acc += binomial(n - 1, j) * factorial(j) * sub;
        }
    }
    memo.insert(l, n, m, acc.clone());
    acc
}
