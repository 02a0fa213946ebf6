//! Values computed once by an independent brute-force script (plain Python
//! set comprehensions over every subset) and frozen here.

use mstd::search::{enumerate_normalized, find_min_mstd, SearchConfig};
use mstd::setcore::{kernel, naive};
use mstd::{classify, IntSet, SetClass};

/// Affine classes with diameter exactly `D`, for `D = 0..=16`.
const CLASSES_PER_DIAMETER: [u64; 17] = [
    1, 1, 1, 2, 4, 9, 16, 35, 66, 133, 261, 527, 1032, 2079, 4123, 8244, 16440,
];

/// Sum-dominant subsets of `[0, D]` containing `0` and `D`.
const SUM_DOMINANT_RAW: [u64; 17] = [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 2, 14];

#[test]
fn class_counts_per_diameter() {
    for d in 0..=16u32 {
        let config = SearchConfig::verification(d, d);
        let counts = enumerate_normalized(&config, |_| {}).unwrap();
        assert_eq!(counts.canonical, CLASSES_PER_DIAMETER[d as usize], "D = {d}");
    }
}

#[test]
fn raw_sum_dominant_counts() {
    for d in 1..=16u32 {
        let interior = (1u64 << (d - 1)) - 1;
        let mut count = 0;
        for bits in 0..=interior {
            let mask = 1 | (bits << 1) | (1u64 << d);
            if kernel::mask_sum_size(mask) > kernel::mask_diff_size(mask) {
                count += 1;
            }
        }
        assert_eq!(count, SUM_DOMINANT_RAW[d as usize], "D = {d}");
    }
}

#[test]
fn examined_count_matches_class_total() {
    let r = find_min_mstd(&SearchConfig::verification(0, 14)).unwrap();
    assert_eq!(r.sets_examined, CLASSES_PER_DIAMETER[..=14].iter().sum::<u64>());
    assert_eq!(r.sets_pruned, 0);
}

#[test]
fn frozen_sizes() {
    let cases: [(&[i64], usize, usize); 4] = [
        (&[0, 2, 3, 4, 7, 11, 12, 14], 26, 25),
        (&[0, 1, 3, 7], 10, 13),
        (&[0, 1, 4, 9, 11], 15, 21),
        (&[0, 1, 2, 4, 5, 9, 12, 13, 14, 16, 17, 21, 24, 25, 26, 28, 29], 59, 55),
    ];
    for (elems, s, d) in cases {
        assert_eq!(naive::sizes(elems), (s, d));
        assert_eq!((kernel::sum_size(elems), kernel::diff_size(elems)), (s, d));
        let expected = SetClass::from_sizes(s, d);
        assert_eq!(classify(&IntSet::new(elems.iter().copied())).unwrap(), expected);
    }
}
