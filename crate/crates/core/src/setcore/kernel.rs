//! Bit-parallel sumset and difference-set kernels.
//!
//! A set is laid out as a dense bitset over `[min, max]`. The sumset is the
//! OR of the base bitset shifted left by every element offset; the
//! nonnegative half of the difference set is the OR of the base shifted
//! right by every element offset. Diameters below 64 use a single `u64`
//! with `u128` sums. Very sparse sets fall back to sorting pairwise values.

/// `|A+A|` for the set whose bit `i` means element `i`.
#[inline]
pub fn mask_sum_size(mask: u64) -> u32 {
    let wide = mask as u128;
    let mut acc = 0u128;
    let mut m = mask;
    while m != 0 {
        acc |= wide << m.trailing_zeros();
        m &= m - 1;
    }
    acc.count_ones()
}

/// `|A-A|` for the set whose bit `i` means element `i`. Zero for an empty mask.
#[inline]
pub fn mask_diff_size(mask: u64) -> u32 {
    if mask == 0 {
        return 0;
    }
    let mut acc = 0u64;
    let mut m = mask;
    while m != 0 {
        acc |= mask >> m.trailing_zeros();
        m &= m - 1;
    }
    2 * acc.count_ones() - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Layout {
    Word,
    Dense,
    Sparse,
}

fn layout(elems: &[i64]) -> Layout {
    let n = elems.len() as u64;
    let d = (elems[elems.len() - 1] - elems[0]) as u64;
    if d < 64 {
        Layout::Word
    } else if d / 64 <= 8 * n.max(1) {
        Layout::Dense
    } else {
        Layout::Sparse
    }
}

/// Growable bitset backed by 64-bit words.
#[derive(Debug, Clone)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn zeros(nbits: usize) -> Self {
        Self {
            words: vec![0; nbits.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    /// `self |= src << shift`, truncated to `self`'s width.
    fn or_shl(&mut self, src: &Bits, shift: usize) {
        let (ws, bs) = (shift / 64, shift % 64);
        let len = self.words.len();
        for (i, &w) in src.words.iter().enumerate() {
            let j = i + ws;
            if j >= len {
                break;
            }
            self.words[j] |= w << bs;
            if bs > 0 && j + 1 < len {
                self.words[j + 1] |= w >> (64 - bs);
            }
        }
    }

    /// `self |= src >> shift`, truncated to `self`'s width.
    fn or_shr(&mut self, src: &Bits, shift: usize) {
        let (ws, bs) = (shift / 64, shift % 64);
        let len = self.words.len();
        for j in 0..len {
            let i = j + ws;
            if i >= src.words.len() {
                break;
            }
            let mut w = src.words[i] >> bs;
            if bs > 0 && i + 1 < src.words.len() {
                w |= src.words[i + 1] << (64 - bs);
            }
            self.words[j] |= w;
        }
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut m = w;
            std::iter::from_fn(move || {
                if m == 0 {
                    None
                } else {
                    let b = m.trailing_zeros() as usize;
                    m &= m - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

fn base_bits(elems: &[i64]) -> (Bits, usize) {
    let lo = elems[0];
    let d = (elems[elems.len() - 1] - lo) as usize;
    let mut base = Bits::zeros(d + 1);
    for &a in elems {
        base.set((a - lo) as usize);
    }
    (base, d)
}

fn dense_sums(elems: &[i64]) -> Bits {
    let lo = elems[0];
    let (base, d) = base_bits(elems);
    let mut acc = Bits::zeros(2 * d + 1);
    for &a in elems {
        acc.or_shl(&base, (a - lo) as usize);
    }
    acc
}

/// Nonnegative differences, bit `i` meaning difference `i`.
fn dense_diffs(elems: &[i64]) -> Bits {
    let lo = elems[0];
    let (base, d) = base_bits(elems);
    let mut acc = Bits::zeros(d + 1);
    for &a in elems {
        acc.or_shr(&base, (a - lo) as usize);
    }
    acc
}

fn word_mask(elems: &[i64]) -> u64 {
    let lo = elems[0];
    elems.iter().fold(0u64, |m, &a| m | 1 << (a - lo))
}

fn sparse_sums(elems: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(elems.len() * (elems.len() + 1) / 2);
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i..] {
            out.push(a + b);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn sparse_pos_diffs(elems: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(elems.len() * (elems.len() - 1) / 2);
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i + 1..] {
            out.push(b - a);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// `|A+A|` for a nonempty strictly increasing slice.
pub fn sum_size(elems: &[i64]) -> usize {
    match layout(elems) {
        Layout::Word => mask_sum_size(word_mask(elems)) as usize,
        Layout::Dense => dense_sums(elems).count(),
        Layout::Sparse => sparse_sums(elems).len(),
    }
}

/// `|A-A|` for a nonempty strictly increasing slice.
pub fn diff_size(elems: &[i64]) -> usize {
    match layout(elems) {
        Layout::Word => mask_diff_size(word_mask(elems)) as usize,
        Layout::Dense => 2 * dense_diffs(elems).count() - 1,
        Layout::Sparse => 2 * sparse_pos_diffs(elems).len() + 1,
    }
}

/// `A+A` as a sorted list, for a nonempty strictly increasing slice.
pub fn sumset(elems: &[i64]) -> Vec<i64> {
    let lo = elems[0];
    match layout(elems) {
        Layout::Word | Layout::Dense => dense_sums(elems).ones().map(|i| 2 * lo + i as i64).collect(),
        Layout::Sparse => sparse_sums(elems),
    }
}

/// `A-A` as a sorted list, for a nonempty strictly increasing slice.
pub fn diffset(elems: &[i64]) -> Vec<i64> {
    let nonneg: Vec<i64> = match layout(elems) {
        Layout::Word | Layout::Dense => dense_diffs(elems).ones().map(|i| i as i64).collect(),
        Layout::Sparse => {
            let mut v = vec![0];
            v.extend(sparse_pos_diffs(elems));
            v
        }
    };
    let mut out: Vec<i64> = nonneg.iter().rev().filter(|&&x| x > 0).map(|&x| -x).collect();
    out.extend(nonneg);
    out
}
