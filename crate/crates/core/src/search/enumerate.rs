//! Canonical enumeration of subsets of `[0, D]` up to affine equivalence.
//!
//! For each diameter `D` the candidates are the subsets containing `0` and
//! `D`, encoded as a `u64` mask with bit `i` for element `i`. A candidate is
//! canonical when the gcd of its elements is 1 and it is lexicographically
//! no larger than its reflection `D - A`. Interior elements `1..D` are
//! decided depth-first with "include" tried before "exclude", which visits
//! the sets in lexicographic order of their element lists.
//!
//! Work is split into partitions by diameter and by the include/exclude
//! pattern of the first few interior elements. Partitions are listed in
//! visiting order, so concatenating per-partition results in list order
//! reproduces the sequential order.

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::SearchConfig;
use crate::error::{Error, Result};
use crate::setcore::IntSet;

/// Number of leading interior elements fixed by a partition.
const PREFIX_BITS: u32 = 8;

/// Largest diameter the mask encoding supports.
pub const MAX_DIAMETER: u32 = 63;

/// A candidate set `A ⊆ [0, diameter]` with `0, diameter ∈ A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CandidateSet {
    pub mask: u64,
    pub diameter: u32,
}

impl CandidateSet {
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn to_intset(&self) -> IntSet {
        IntSet::from_mask(self.mask)
    }

    /// Mask of `diameter - A`.
    pub fn reflected_mask(&self) -> u64 {
        self.mask.reverse_bits() >> (63 - self.diameter)
    }

    pub fn is_symmetric(&self) -> bool {
        self.mask == self.reflected_mask()
    }

    /// Gap gcd 1 and lexicographically `<=` the reflection.
    pub fn is_canonical(&self) -> bool {
        if self.diameter == 0 {
            return self.mask == 1;
        }
        let mut g = self.diameter as u64;
        let mut m = self.mask & !1;
        while m != 0 && g != 1 {
            g = g.gcd(&(m.trailing_zeros() as u64));
            m &= m - 1;
        }
        if g != 1 {
            return false;
        }
        let diff = self.mask ^ self.reflected_mask();
        // the set owning the lowest differing element is lexicographically smaller
        diff == 0 || self.mask & diff & diff.wrapping_neg() != 0
    }

    pub fn elements(&self, buf: &mut [i64; 64]) -> usize {
        let mut m = self.mask;
        let mut n = 0;
        while m != 0 {
            buf[n] = m.trailing_zeros() as i64;
            n += 1;
            m &= m - 1;
        }
        n
    }
}

/// A unit of enumeration work: one diameter and one fixed pattern for the
/// first `prefix_len` interior elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    pub diameter: u32,
    pub prefix_len: u32,
    /// Bit `prefix_len - i` is set when interior element `i` is included.
    pub prefix: u64,
}

impl Partition {
    pub fn id(&self) -> u64 {
        (self.diameter as u64) << 32 | self.prefix
    }

    fn prefix_mask(&self) -> u64 {
        (1..=self.prefix_len).fold(0, |m, i| {
            if self.prefix >> (self.prefix_len - i) & 1 == 1 {
                m | 1 << i
            } else {
                m
            }
        })
    }
}

/// Interior-count bounds `[lo, hi]` for diameter `d`, or `None` when no size
/// in the configured range is possible.
fn interior_bounds(config: &SearchConfig, d: u32) -> Option<(u32, u32)> {
    let size_min = config.size_min.unwrap_or(1) as u32;
    let size_max = config.size_max.map_or(u32::MAX, |s| s as u32);
    if d == 0 {
        return (size_min <= 1 && size_max >= 1).then_some((0, 0));
    }
    let lo = size_min.saturating_sub(2);
    let hi = size_max.checked_sub(2)?.min(d - 1);
    (lo <= hi).then_some((lo, hi))
}

/// Every partition of the configured search space, in visiting order.
pub fn partitions(config: &SearchConfig) -> Vec<Partition> {
    let mut out = Vec::new();
    for d in config.diameter_min..=config.diameter_max {
        let Some((lo, hi)) = interior_bounds(config, d) else {
            continue;
        };
        let prefix_len = d.saturating_sub(1).min(PREFIX_BITS);
        let free = d.saturating_sub(1) - prefix_len;
        for prefix in (0..1u64 << prefix_len).rev() {
            let fixed = prefix.count_ones();
            if fixed <= hi && fixed + free >= lo {
                out.push(Partition {
                    diameter: d,
                    prefix_len,
                    prefix,
                });
            }
        }
    }
    out
}

/// Calls `f` on every raw candidate of `part` in lexicographic order and
/// returns how many there were. Canonicity is left to the caller.
pub fn for_each_raw<F: FnMut(CandidateSet)>(config: &SearchConfig, part: &Partition, mut f: F) -> u64 {
    let d = part.diameter;
    let Some((lo, hi)) = interior_bounds(config, d) else {
        return 0;
    };
    if d == 0 {
        f(CandidateSet { mask: 1, diameter: 0 });
        return 1;
    }
    let start = 1 | 1 << d | part.prefix_mask();
    let mut count = 0;
    walk(
        part.prefix_len + 1,
        d,
        start,
        part.prefix.count_ones(),
        lo,
        hi,
        &mut |mask| {
            count += 1;
            f(CandidateSet { mask, diameter: d });
        },
    );
    count
}

fn walk<F: FnMut(u64)>(pos: u32, d: u32, mask: u64, chosen: u32, lo: u32, hi: u32, f: &mut F) {
    if pos >= d {
        if chosen >= lo && chosen <= hi {
            f(mask);
        }
        return;
    }
    let remaining = d - pos;
    if chosen < hi {
        walk(pos + 1, d, mask | 1 << pos, chosen + 1, lo, hi, f);
    }
    if chosen + remaining > lo {
        walk(pos + 1, d, mask, chosen, lo, hi, f);
    }
}

/// Raw and canonical candidate counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumCounts {
    pub raw: u64,
    pub canonical: u64,
}

/// Visits each affine equivalence class in the configured range exactly
/// once, ordered by diameter and then lexicographically. Runs on the
/// calling thread.
pub fn enumerate_normalized<F: FnMut(CandidateSet)>(config: &SearchConfig, mut visitor: F) -> Result<EnumCounts> {
    config.validate()?;
    let mut counts = EnumCounts::default();
    for part in partitions(config) {
        counts.raw += for_each_raw(config, &part, |c| {
            if c.is_canonical() {
                counts.canonical += 1;
                visitor(c);
            }
        });
    }
    Ok(counts)
}

/// Runs `work` over the given partitions on `config.workers` threads and
/// returns the results in partition order. `on_done` fires as each
/// partition finishes, in completion order.
pub(crate) fn run_partitions<T, W, D>(config: &SearchConfig, parts: &[Partition], work: W, on_done: D) -> Result<Vec<T>>
where
    T: Send,
    W: Fn(&Partition) -> T + Sync,
    D: Fn(&Partition, &T) -> Result<()> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
    pool.install(|| {
        parts
            .par_iter()
            .map(|p| {
                let out = work(p);
                on_done(p, &out)?;
                Ok(out)
            })
            .collect()
    })
}
