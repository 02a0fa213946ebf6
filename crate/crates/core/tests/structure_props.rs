use mstd::setcore::{naive, sum_diff_sizes};
use mstd::structure::{cardinality_bounds, difference_table, equal_diff_pairs, equal_sum_pairs, gaps, insertion_delta};
use mstd::IntSet;
use proptest::collection::btree_set;
use proptest::prelude::*;

fn set(min_len: usize) -> impl Strategy<Value = IntSet> {
    btree_set(-60i64..60, min_len..14).prop_map(IntSet::new)
}

/// Unordered pairs `{a, b}` (with `a = b` allowed) grouped by their sum,
/// counted the slow way.
fn slow_equal_sum_pairs(a: &IntSet) -> u64 {
    let e = a.elements();
    let mut n = 0;
    let pairs: Vec<(usize, usize)> = (0..e.len()).flat_map(|i| (i..e.len()).map(move |j| (i, j))).collect();
    for (x, p) in pairs.iter().enumerate() {
        for q in &pairs[x + 1..] {
            if e[p.0] + e[p.1] == e[q.0] + e[q.1] {
                n += 1;
            }
        }
    }
    n
}

fn slow_equal_diff_pairs(a: &IntSet) -> u64 {
    let e = a.elements();
    let pairs: Vec<(usize, usize)> = (0..e.len())
        .flat_map(|i| (i + 1..e.len()).map(move |j| (i, j)))
        .collect();
    let mut n = 0;
    for (x, p) in pairs.iter().enumerate() {
        for q in &pairs[x + 1..] {
            if e[p.1] - e[p.0] == e[q.1] - e[q.0] {
                n += 1;
            }
        }
    }
    n
}

proptest! {
    #[test]
    fn gaps_sum_to_diameter(a in set(2)) {
        let g = gaps(&a).unwrap();
        prop_assert_eq!(g.gaps().len(), a.len() - 1);
        prop_assert_eq!(g.total(), a.diameter().unwrap());
    }

    #[test]
    fn table_holds_every_positive_difference(a in set(2)) {
        let t = difference_table(&a).unwrap();
        let n = a.len() as u64;
        prop_assert_eq!(t.entries().count() as u64, n * (n - 1) / 2);
        let mut distinct: Vec<u64> = t.entries().collect();
        distinct.sort_unstable();
        distinct.dedup();
        let (_, d) = naive::sizes(a.elements());
        prop_assert_eq!(2 * distinct.len() + 1, d);
    }

    #[test]
    fn pair_counts_match_slow_counts(a in set(1)) {
        prop_assert_eq!(equal_sum_pairs(&a), slow_equal_sum_pairs(&a));
        prop_assert_eq!(equal_diff_pairs(&a), slow_equal_diff_pairs(&a));
    }

    #[test]
    fn twice_sum_pairs_cover_diff_pairs(a in set(1)) {
        prop_assert!(2 * equal_sum_pairs(&a) >= equal_diff_pairs(&a));
    }

    #[test]
    fn sizes_within_bounds(a in set(1)) {
        let (max_sum, max_diff) = cardinality_bounds(a.len() as u64).unwrap();
        let (s, d) = sum_diff_sizes(&a).unwrap();
        prop_assert!(s as u64 <= max_sum && d as u64 <= max_diff);
        prop_assert!(s >= 2 * a.len() - 1 && d >= 2 * a.len() - 1);
    }

    #[test]
    fn insertion_delta_matches_recount(a in set(1), x in -80i64..80) {
        prop_assume!(!a.contains(x));
        let delta = insertion_delta(&a, x).unwrap();
        let (s0, d0) = naive::sizes(a.elements());
        let (s1, d1) = naive::sizes(a.with(x).elements());
        prop_assert_eq!(delta.new_sums, s1 - s0);
        prop_assert_eq!(2 * delta.new_pos_diffs, d1 - d0);
    }
}

#[test]
fn inserting_a_member_is_rejected() {
    assert!(insertion_delta(&IntSet::from([0, 1, 2]), 1).is_err());
}
