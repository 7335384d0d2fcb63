//! Subsets of a ground set with at most 16 elements, packed into machine
//! words. Bit `i` stands for the element with internal index `i`.

/// A subset of element indices.
pub type Mask = u32;

pub const MAX_ELEMENTS: usize = 16;

#[inline]
pub fn bit(i: usize) -> Mask {
    1 << i
}

/// The mask containing indices `0..n`.
#[inline]
pub fn full(n: usize) -> Mask {
    debug_assert!(n <= MAX_ELEMENTS);
    if n == 0 {
        0
    } else {
        (1u32 << n) - 1
    }
}

#[inline]
pub fn count(m: Mask) -> usize {
    m.count_ones() as usize
}

#[inline]
pub fn contains(m: Mask, i: usize) -> bool {
    m & bit(i) != 0
}

/// Iterates over the indices set in a mask, ascending.
#[derive(Clone, Copy)]
pub struct Bits(Mask);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

#[inline]
pub fn bits(m: Mask) -> Bits {
    Bits(m)
}

/// Iterates over all submasks of `m`, ascending by value (so `0` first and
/// `m` last).
pub struct Subsets {
    universe: Mask,
    next: Option<Mask>,
}

impl Iterator for Subsets {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        let cur = self.next?;
        self.next = if cur == self.universe {
            None
        } else {
            Some(cur.wrapping_sub(self.universe) & self.universe)
        };
        Some(cur)
    }
}

pub fn subsets(m: Mask) -> Subsets {
    Subsets {
        universe: m,
        next: Some(0),
    }
}

/// Iterates over the `k`-element submasks of `m` in ascending value order of
/// their packed representation (Gosper's hack over the packed domain).
pub struct KSubsets {
    positions: Vec<usize>,
    packed: Mask,
    done: bool,
}

impl Iterator for KSubsets {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        if self.done {
            return None;
        }
        let p = self.positions.len();
        let cur = self.packed;
        // scatter packed bits through the position table
        let mut out: Mask = 0;
        let mut rest = cur;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= bit(self.positions[i]);
        }
        // advance
        if cur == 0 {
            self.done = true;
        } else {
            let x = cur & cur.wrapping_neg();
            let y = cur + x;
            let nxt = (((cur & !y) / x) >> 1) | y;
            if nxt >= bit(p) {
                self.done = true;
            } else {
                self.packed = nxt;
            }
        }
        Some(out)
    }
}

pub fn ksubsets(m: Mask, k: usize) -> KSubsets {
    let positions: Vec<usize> = bits(m).collect();
    if k > positions.len() {
        return KSubsets {
            positions,
            packed: 0,
            done: true,
        };
    }
    let packed = full(k);
    KSubsets {
        positions,
        packed,
        done: false,
    }
}
