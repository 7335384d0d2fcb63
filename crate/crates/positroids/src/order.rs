//! Linear orders on ground sets: cyclic shifts, reversal, intervals and
//! cyclic intervals, the Gale and lexicographic orders on equal-size
//! subsets, Gale bases, base-sorting, and non-crossing partition tests.

use crate::error::{Error, Result};
use crate::mask::{self, bit, bits, count, Mask};
use crate::matroid::{Matroid, Partition};

/// A linear order written as the list of element labels, least first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOrder {
    seq: Vec<String>,
}

impl LinearOrder {
    pub fn new(seq: Vec<String>) -> Result<LinearOrder> {
        let mut sorted = seq.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != seq.len() {
            return Err(Error::Input("order repeats a label".into()));
        }
        Ok(LinearOrder { seq })
    }

    pub fn from_labels(labels: &[&str]) -> Result<LinearOrder> {
        LinearOrder::new(labels.iter().map(|s| s.to_string()).collect())
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    pub fn seq(&self) -> &[String] {
        &self.seq
    }

    /// The i-shift: the cyclic rotation in which the i-th element (1-based)
    /// becomes least. `shift(ord, 1)` is the order itself.
    pub fn shift(&self, i: usize) -> Result<LinearOrder> {
        if i < 1 || i > self.n() {
            return Err(Error::Input(format!(
                "shift index {i} out of range 1..={}",
                self.n()
            )));
        }
        let mut seq = self.seq.clone();
        seq.rotate_left(i - 1);
        Ok(LinearOrder { seq })
    }

    /// The order dual: greatest first.
    pub fn reverse(&self) -> LinearOrder {
        let mut seq = self.seq.clone();
        seq.reverse();
        LinearOrder { seq }
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.seq.iter().position(|l| l == label)
    }

    /// The induced order on a subset of the labels, in the same relative
    /// sequence.
    pub fn induced(&self, keep: &[String]) -> LinearOrder {
        LinearOrder {
            seq: self
                .seq
                .iter()
                .filter(|l| keep.contains(l))
                .cloned()
                .collect(),
        }
    }
}

/// A linear order bound to a matroid's element indexing.
///
/// `perm[p]` is the element index in position `p` (least first); `pos[e]`
/// is the position of element `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundOrder {
    perm: Vec<usize>,
    pos: Vec<usize>,
}

impl BoundOrder {
    /// Binds a label order to a matroid, checking it is a permutation of
    /// the ground set.
    pub fn bind(m: &Matroid, ord: &LinearOrder) -> Result<BoundOrder> {
        if ord.n() != m.n() {
            return Err(Error::Input(format!(
                "order has {} labels but the ground set has {}",
                ord.n(),
                m.n()
            )));
        }
        let mut perm = Vec::with_capacity(m.n());
        for l in ord.seq() {
            let i = m.index_of(l).ok_or_else(|| {
                Error::Input(format!("order label '{l}' is not a ground-set element"))
            })?;
            perm.push(i);
        }
        Ok(BoundOrder::from_perm(perm))
    }

    pub fn from_perm(perm: Vec<usize>) -> BoundOrder {
        let mut pos = vec![0usize; perm.len()];
        for (p, &e) in perm.iter().enumerate() {
            pos[e] = p;
        }
        BoundOrder { perm, pos }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn pos(&self, e: usize) -> usize {
        self.pos[e]
    }

    pub fn shift(&self, i: usize) -> Result<BoundOrder> {
        if i < 1 || i > self.n() {
            return Err(Error::Input(format!(
                "shift index {i} out of range 1..={}",
                self.n()
            )));
        }
        let mut perm = self.perm.clone();
        perm.rotate_left(i - 1);
        Ok(BoundOrder::from_perm(perm))
    }

    pub fn reverse(&self) -> BoundOrder {
        let mut perm = self.perm.clone();
        perm.reverse();
        BoundOrder::from_perm(perm)
    }

    pub fn to_linear_order(&self, m: &Matroid) -> LinearOrder {
        LinearOrder {
            seq: self.perm.iter().map(|&e| m.labels()[e].clone()).collect(),
        }
    }

    /// The positions occupied by a mask, as a mask over positions.
    pub fn position_mask(&self, a: Mask) -> Mask {
        bits(a).fold(0, |acc, e| acc | bit(self.pos[e]))
    }

    /// Whether A (or equivalently its complement) is an interval in some
    /// cyclic shift of the order. Empty sets and the full set qualify.
    pub fn is_cyclic_interval(&self, a: Mask) -> bool {
        let n = self.n();
        let pm = self.position_mask(a);
        let k = count(pm);
        if k == 0 || k == n {
            return true;
        }
        (0..n).any(|start| circular_arc(n, start, k) == pm)
    }

    /// Whether A is an interval (a run of consecutive positions).
    pub fn is_interval(&self, a: Mask) -> bool {
        let pm = self.position_mask(a);
        if pm == 0 {
            return true;
        }
        let lo = pm.trailing_zeros();
        let len = count(pm) as u32;
        pm == ((1u32 << len) - 1) << lo
    }

    /// Gale order on equal-size subsets: X <= Y when the i-th smallest of X
    /// is at most the i-th smallest of Y, for every i.
    pub fn gale_leq(&self, x: Mask, y: Mask) -> Result<bool> {
        if count(x) != count(y) {
            return Err(Error::Input(
                "Gale comparison requires equal-size subsets".into(),
            ));
        }
        let xs = self.sorted_positions(x);
        let ys = self.sorted_positions(y);
        Ok(xs.iter().zip(&ys).all(|(a, b)| a <= b))
    }

    /// Lexicographic order on equal-size subsets.
    pub fn lex_leq(&self, x: Mask, y: Mask) -> Result<bool> {
        if count(x) != count(y) {
            return Err(Error::Input(
                "lexicographic comparison requires equal-size subsets".into(),
            ));
        }
        let xs = self.sorted_positions(x);
        let ys = self.sorted_positions(y);
        for (a, b) in xs.iter().zip(&ys) {
            if a != b {
                return Ok(a < b);
            }
        }
        Ok(true)
    }

    fn sorted_positions(&self, x: Mask) -> Vec<usize> {
        let mut p: Vec<usize> = bits(x).map(|e| self.pos[e]).collect();
        p.sort_unstable();
        p
    }

    /// Merges the multiset union of B and B' in order and splits it by
    /// parity of position: returns (odd-position set, even-position set).
    /// The two copies of a shared element sit adjacently in the merge, so
    /// each shared element lands in both halves.
    pub fn sort_pair(&self, b1: Mask, b2: Mask) -> Result<(Mask, Mask)> {
        if count(b1) != count(b2) {
            return Err(Error::Input("sort_pair requires equal-size subsets".into()));
        }
        let mut merged: Vec<usize> = Vec::with_capacity(2 * count(b1));
        for &e in &self.perm {
            let copies = mask::contains(b1, e) as usize + mask::contains(b2, e) as usize;
            for _ in 0..copies {
                merged.push(e);
            }
        }
        let mut odd = 0;
        let mut even = 0;
        for (i, &e) in merged.iter().enumerate() {
            if i % 2 == 0 {
                odd |= bit(e); // positions 1, 3, 5, ... one-based
            } else {
                even |= bit(e);
            }
        }
        Ok((odd, even))
    }

    /// Four-point crossing test: the partition is non-crossing exactly when
    /// no two blocks alternate a < b < c < d with a,c in one block and b,d
    /// in the other.
    pub fn is_noncrossing(&self, p: &Partition) -> Result<bool> {
        let ground = mask::full(self.n());
        if p.ground() != ground {
            return Err(Error::Input(
                "partition does not cover the ordered ground set".into(),
            ));
        }
        let blocks = p.blocks();
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if self.blocks_cross(blocks[i], blocks[j]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn blocks_cross(&self, a: Mask, b: Mask) -> bool {
        // scan positions belonging to either block and count alternations
        let mut runs = 0;
        let mut last = 2u8;
        for &e in &self.perm {
            let tag = if mask::contains(a, e) {
                0
            } else if mask::contains(b, e) {
                1
            } else {
                continue;
            };
            if tag != last {
                runs += 1;
                last = tag;
            }
        }
        runs >= 4
    }
}

/// Positions {start, start+1, ..., start+len-1} modulo n, as a mask.
pub fn circular_arc(n: usize, start: usize, len: usize) -> Mask {
    debug_assert!(len <= n);
    if len == 0 {
        return 0;
    }
    let lo = start % n;
    if lo + len <= n {
        ((1u32 << len) - 1) << lo
    } else {
        let high = n - lo;
        let wrap = len - high;
        (((1u32 << high) - 1) << lo) | ((1u32 << wrap) - 1)
    }
}

/// The maximal circular runs of positions of `a`; each run is returned as a
/// mask of element indices (not positions). For `a` empty the list is
/// empty; for `a` the whole ground set there is one run.
pub fn maximal_cyclic_runs(ord: &BoundOrder, a: Mask) -> Vec<Mask> {
    let n = ord.n();
    let pm = ord.position_mask(a);
    if pm == 0 {
        return Vec::new();
    }
    if count(pm) == n {
        return vec![a];
    }
    // walk positions circularly, starting just after a gap
    let start = (0..n)
        .find(|&p| !mask::contains(pm, p))
        .expect("a gap exists");
    let mut runs = Vec::new();
    let mut current: Mask = 0;
    for k in 1..=n {
        let p = (start + k) % n;
        if mask::contains(pm, p) {
            current |= bit(ord.perm()[p]);
        } else if current != 0 {
            runs.push(current);
            current = 0;
        }
    }
    if current != 0 {
        runs.push(current);
    }
    runs.sort_by_key(|m| m.trailing_zeros());
    runs
}

/// Greedy minimum basis: scanning the elements from least to greatest,
/// pick each one that keeps the set independent. The result is the
/// lexicographically least basis, which is also the Gale minimum.
pub fn gale_basis(m: &Matroid, ord: &BoundOrder) -> Mask {
    let mut acc: Mask = 0;
    for &e in ord.perm() {
        let candidate = acc | bit(e);
        if m.is_independent(candidate) {
            acc = candidate;
        }
        if count(acc) == m.rank() {
            break;
        }
    }
    acc
}
