use mstd::setcore::{
    affine_normalize, ap_plus_two_decomposition, canonical_form, detect_ap, diffset, is_ap_plus_at_most_two,
    is_symmetric, kernel, naive, sum_diff_sizes, sumset,
};
use mstd::verify::{random_sets, DEFAULT_SEED};
use mstd::{classify, IntSet, SetClass};
use proptest::collection::btree_set;
use proptest::prelude::*;

fn small_set() -> impl Strategy<Value = IntSet> {
    btree_set(-40i64..40, 1..12).prop_map(IntSet::new)
}

fn wide_set() -> impl Strategy<Value = IntSet> {
    btree_set(-5000i64..5000, 1..20).prop_map(IntSet::new)
}

proptest! {
    #[test]
    fn translation_keeps_sizes(a in small_set(), t in -1000i64..1000) {
        prop_assert_eq!(sum_diff_sizes(&a).unwrap(), sum_diff_sizes(&a.translate(t)).unwrap());
    }

    #[test]
    fn reflection_keeps_sizes(a in small_set(), x in -50i64..50) {
        prop_assert_eq!(sum_diff_sizes(&a).unwrap(), sum_diff_sizes(&a.reflect_about(x)).unwrap());
    }

    #[test]
    fn dilation_keeps_sizes(a in small_set(), c in prop_oneof![-7i64..=-1, 1i64..=7]) {
        prop_assert_eq!(sum_diff_sizes(&a).unwrap(), sum_diff_sizes(&a.dilate(c)).unwrap());
    }

    #[test]
    fn difference_set_is_symmetric(a in wide_set()) {
        let d = diffset(&a).unwrap();
        prop_assert_eq!(d.reflect_about(0), d.clone());
        prop_assert!(d.contains(0));
        prop_assert_eq!(d.len() % 2, 1);
    }

    #[test]
    fn sumset_extremes(a in wide_set()) {
        let s = sumset(&a).unwrap();
        prop_assert_eq!(s.min(), Some(2 * a.min().unwrap()));
        prop_assert_eq!(s.max(), Some(2 * a.max().unwrap()));
    }

    #[test]
    fn kernels_match_naive_on_wide_sets(a in wide_set()) {
        let e = a.elements();
        prop_assert_eq!(kernel::sumset(e), naive::sumset(e));
        prop_assert_eq!(kernel::diffset(e), naive::diffset(e));
    }

    #[test]
    fn symmetric_sets_are_balanced(half in btree_set(0i64..30, 1..10), c in 30i64..70) {
        let a = IntSet::new(half.iter().flat_map(|&x| [x, c - x]));
        prop_assert_eq!(is_symmetric(&a), Some(c));
        prop_assert_eq!(classify(&a).unwrap(), SetClass::Balanced);
    }

    #[test]
    fn progressions_are_symmetric(first in -100i64..100, step in 1u64..20, len in 1usize..15) {
        let a = IntSet::new((0..len as i64).map(|i| first + i * step as i64));
        prop_assert!(is_symmetric(&a).is_some());
        let ap = detect_ap(&a).unwrap();
        prop_assert_eq!(ap.to_set(), a);
    }

    #[test]
    fn fast_ap_plus_two_agrees(a in btree_set(0i64..24, 1..10).prop_map(IntSet::new)) {
        prop_assert_eq!(is_ap_plus_at_most_two(a.elements()), ap_plus_two_decomposition(&a).is_some());
    }

    #[test]
    fn ap_plus_two_never_sum_dominant(first in -20i64..20, step in 1u64..6, len in 1usize..10,
                                      x in -60i64..60, y in -60i64..60) {
        let a = IntSet::new((0..len as i64).map(|i| first + i * step as i64)).with(x).with(y);
        prop_assert_ne!(classify(&a).unwrap(), SetClass::SumDominant);
    }

    #[test]
    fn normal_form_is_affine_invariant(a in small_set(), t in -100i64..100, c in prop_oneof![-5i64..=-1, 1i64..=5]) {
        let b = a.dilate(c).translate(t);
        prop_assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        let (n, map) = affine_normalize(&a).unwrap();
        prop_assert_eq!(n.min(), Some(0));
        let back = IntSet::new(n.iter().map(|y| map.invert(y)));
        prop_assert_eq!(back, a);
    }

    #[test]
    fn literal_round_trip(a in wide_set()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<IntSet>().unwrap(), a);
    }
}

#[test]
fn kernels_match_naive_on_ten_thousand_random_sets() {
    for a in random_sets(10_000, DEFAULT_SEED, 12, 64) {
        let e = a.elements();
        assert_eq!((kernel::sum_size(e), kernel::diff_size(e)), naive::sizes(e), "{a}");
        if let Some(mask) = a.to_mask() {
            assert_eq!(
                (
                    kernel::mask_sum_size(mask) as usize,
                    kernel::mask_diff_size(mask) as usize
                ),
                naive::sizes(e)
            );
        }
    }
}
