//! Bitmask-encoded subsets of a ground set `{0, .., n-1}`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Hard cap on ground-set size. Sweeps enumerate all `2^n` subsets, so the
/// library refuses anything larger at construction time.
pub const MAX_GROUND_SIZE: usize = 24;

/// A subset of `{0, .., n-1}` stored as an `n`-bit value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn full(n: usize) -> SubsetMask {
        debug_assert!(n <= MAX_GROUND_SIZE);
        if n == 0 {
            SubsetMask(0)
        } else {
            SubsetMask(((1u64 << n) - 1) as u32)
        }
    }

    pub fn singleton(e: usize) -> SubsetMask {
        SubsetMask(1 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> SubsetMask {
        let mut bits = 0u32;
        for e in elements {
            bits |= 1 << e;
        }
        SubsetMask(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 & (1 << e) != 0
    }

    pub fn with(self, e: usize) -> SubsetMask {
        SubsetMask(self.0 | (1 << e))
    }

    pub fn without(self, e: usize) -> SubsetMask {
        SubsetMask(self.0 & !(1 << e))
    }

    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    pub fn difference(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> SubsetMask {
        SubsetMask(!self.0 & SubsetMask::full(n).0)
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// All subsets of `self` in ascending mask order (carry-rippler walk).
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        let set = self.0;
        let mut subset = 0u32;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let current = subset;
            subset = subset.wrapping_sub(set) & set;
            done = subset == 0;
            Some(SubsetMask(current))
        })
    }
}

/// All subsets of `{0, .., n-1}` in ascending mask order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = SubsetMask> {
    debug_assert!(n <= MAX_GROUND_SIZE);
    (0..=SubsetMask::full(n).0).map(SubsetMask)
}

/// All `k`-element subsets of `{0, .., n-1}` in ascending mask order
/// (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = SubsetMask> {
    debug_assert!(n <= MAX_GROUND_SIZE);
    let limit = SubsetMask::full(n).0;
    let mut current: u64 = if k > n {
        // no such subsets; start past the limit
        u64::from(limit) + 1
    } else if k == 0 {
        0
    } else {
        (1u64 << k) - 1
    };
    let mut emitted_empty = false;
    std::iter::from_fn(move || {
        if k == 0 {
            if emitted_empty || n > MAX_GROUND_SIZE {
                return None;
            }
            emitted_empty = true;
            return Some(SubsetMask::EMPTY);
        }
        if current > u64::from(limit) {
            return None;
        }
        let out = SubsetMask(current as u32);
        // next k-subset in counting order
        let c = current & current.wrapping_neg();
        let r = current + c;
        current = match ((r ^ current) >> 2).checked_div(c) {
            Some(shifted) => shifted | r,
            None => u64::from(limit) + 1,
        };
        Some(out)
    })
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, e) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
