use rayon::prelude::*;

use super::{anchored_subsets, confirmed_violation, random_sets, ReportBuilder, VerificationReport, Violation};
use crate::setcore::{classify, is_symmetric, kernel, IntSet, SetClass};
use crate::structure::{cardinality_bounds, equal_diff_pairs, equal_sum_pairs, insertion_delta};

/// Diameter of the exhaustive part of the pair-count corpus.
const EXHAUSTIVE_DIAMETER: u32 = 12;
const RANDOM_MAX_SIZE: usize = 12;
const RANDOM_MAX_ELEM: i64 = 64;

fn corpus(trials: usize, seed: u64) -> Vec<IntSet> {
    anchored_subsets(EXHAUSTIVE_DIAMETER)
        .chain(random_sets(trials, seed, RANDOM_MAX_SIZE, RANDOM_MAX_ELEM))
        .collect()
}

fn corpus_grid(trials: usize) -> String {
    format!(
        "all subsets of [0,{EXHAUSTIVE_DIAMETER}] containing 0, plus {trials} random sets (|A| <= {RANDOM_MAX_SIZE}, elements in [0,{RANDOM_MAX_ELEM}])"
    )
}

/// Inserting `x = (n-1) + k` into `I_n` creates exactly `k+1` sums and `k`
/// positive differences, for `2 <= n <= n_max` and `1 <= k <= n-1`.
pub fn verify_proposition2(n_max: usize) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "insertion-deltas",
        format!("I_n ∪ {{(n-1)+k}}, 2 <= n <= {n_max}, 1 <= k <= n-1"),
    );
    for n in 2..=n_max {
        let base = IntSet::initial(n);
        for k in 1..n {
            report.cases += 1;
            let x = (n - 1 + k) as i64;
            let delta = insertion_delta(&base, x).expect("x lies outside I_n");
            if (delta.new_sums, delta.new_pos_diffs) != (k + 1, k) {
                report.violations.push(Violation {
                    set: base.with(x).to_string(),
                    detail: format!(
                        "n={n}, k={k}: {} new sums and {} new positive differences, expected {} and {k}",
                        delta.new_sums,
                        delta.new_pos_diffs,
                        k + 1
                    ),
                });
            }
        }
    }
    report.finish()
}

/// Equal-sum pairs are at least half the equal-difference pairs.
pub fn verify_observation6(trials: usize, seed: u64) -> VerificationReport {
    let mut report = ReportBuilder::new("pair-counts", corpus_grid(trials)).seed(seed);
    let sets = corpus(trials, seed);
    report.cases = sets.len() as u64;
    report.violations = sets
        .par_iter()
        .filter_map(|a| {
            let (esp, edp) = (equal_sum_pairs(a), equal_diff_pairs(a));
            (2 * esp < edp).then(|| Violation {
                set: a.to_string(),
                detail: format!("{esp} equal-sum pairs < {edp}/2 equal-difference pairs"),
            })
        })
        .collect();
    report.finish()
}

fn bounds_violation(a: &IntSet) -> Option<String> {
    let n = a.len() as u64;
    let (max_sum, max_diff) = cardinality_bounds(n).expect("corpus sets are nonempty");
    let (s, d) = (
        kernel::sum_size(a.elements()) as u64,
        kernel::diff_size(a.elements()) as u64,
    );
    let (esp, edp) = (equal_sum_pairs(a), equal_diff_pairs(a));
    if s > max_sum {
        return Some(format!("|A+A| = {s} exceeds {max_sum}"));
    }
    if d > max_diff {
        return Some(format!("|A-A| = {d} exceeds {max_diff}"));
    }
    if s + esp < max_sum {
        return Some(format!("|A+A| = {s} below {max_sum} - {esp} equal-sum pairs"));
    }
    if d + 2 * edp < max_diff {
        return Some(format!("|A-A| = {d} below {max_diff} - 2·{edp} equal-difference pairs"));
    }
    if esp == 0 && s != max_sum {
        return Some(format!("distinct sums but |A+A| = {s} != {max_sum}"));
    }
    if edp == 0 && d != max_diff {
        return Some(format!("distinct differences but |A-A| = {d} != {max_diff}"));
    }
    None
}

/// `|A+A| <= n(n+1)/2` and `|A-A| <= n(n-1)+1`, the matching lower bounds
/// after subtracting collisions, and equality for Sidon sets, on the
/// pair-count corpus plus Sidon fixtures.
pub fn verify_cardinality_bounds(trials: usize, seed: u64) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "cardinality-bounds",
        format!(
            "{}, plus Sidon fixtures {{0,1,3,7}}, {{0,1,4,9,11}}",
            corpus_grid(trials)
        ),
    )
    .seed(seed);
    let mut sets = corpus(trials, seed);
    sets.push(IntSet::from([0, 1, 3, 7]));
    sets.push(IntSet::from([0, 1, 4, 9, 11]));
    report.cases = sets.len() as u64;
    report.violations = sets
        .par_iter()
        .filter_map(|a| {
            bounds_violation(a).map(|detail| Violation {
                set: a.to_string(),
                detail,
            })
        })
        .collect();
    let sidon = IntSet::from([0, 1, 3, 7]);
    let (s, d) = (kernel::sum_size(sidon.elements()), kernel::diff_size(sidon.elements()));
    report.note(format!("{{0,1,3,7}}: {s} sums, {d} differences"));
    report.finish()
}

/// Every symmetric subset of `[0, D]` containing both ends, `D <= max_diameter`,
/// is recognized as symmetric and is balanced.
pub fn verify_symmetric_balanced(max_diameter: u32) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "symmetric-balanced",
        format!("all symmetric subsets of [0,D] containing 0 and D, D <= {max_diameter}"),
    );
    let per_d: Vec<(u64, Vec<Violation>)> = (0..=max_diameter.min(62))
        .into_par_iter()
        .map(|d| {
            // free choices: pairs {i, d-i} for 1 <= i < d/2, plus the centre when d is even
            let pairs: Vec<u32> = (1..d).take_while(|&i| 2 * i < d).collect();
            let centre = d >= 2 && d % 2 == 0;
            let choices = pairs.len() as u32 + u32::from(centre);
            let mut bad = Vec::new();
            for bits in 0..1u64 << choices {
                let mut mask = 1u64 | 1 << d;
                for (j, &i) in pairs.iter().enumerate() {
                    if bits >> j & 1 == 1 {
                        mask |= 1 << i | 1 << (d - i);
                    }
                }
                if centre && bits >> pairs.len() & 1 == 1 {
                    mask |= 1 << (d / 2);
                }
                let set = IntSet::from_mask(mask);
                if is_symmetric(&set) != Some(d as i64) {
                    bad.push(Violation {
                        set: set.to_string(),
                        detail: format!("not detected as symmetric about {d}"),
                    });
                } else if classify(&set).expect("nonempty") != SetClass::Balanced {
                    bad.push(confirmed_violation(&set, |s, d| s == d, "symmetric but not balanced"));
                }
            }
            (1u64 << choices, bad)
        })
        .collect();
    for (cases, bad) in per_d {
        report.cases += cases;
        report.violations.extend(bad);
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proposition2_small_cases() {
        let r = verify_proposition2(20);
        assert!(r.passed(), "{}", r.summary());
        assert_eq!(r.cases, 190);
        let d = insertion_delta(&IntSet::initial(2), 2).unwrap();
        assert_eq!((d.new_sums, d.new_pos_diffs), (2, 1));
        let d = insertion_delta(&IntSet::initial(5), 8).unwrap();
        assert_eq!((d.new_sums, d.new_pos_diffs), (5, 4));
    }

    #[test]
    fn observation6_examples() {
        for (xs, esp, edp) in [(&[0, 1, 2][..], 1, 1), (&[0, 1, 2, 3], 3, 4), (&[0, 1, 3, 7], 0, 0)] {
            let a = IntSet::new(xs.iter().copied());
            assert_eq!((equal_sum_pairs(&a), equal_diff_pairs(&a)), (esp, edp));
            assert!(2 * esp >= edp);
        }
        let r = verify_observation6(500, 1);
        assert!(r.passed(), "{}", r.summary());
        assert_eq!(r.cases, 4096 + 500);
        assert_eq!(r.seed, Some(1));
    }

    #[test]
    fn bounds_on_small_corpus() {
        let r = verify_cardinality_bounds(500, 2);
        assert!(r.passed(), "{}", r.summary());
    }

    #[test]
    fn symmetric_examples() {
        for xs in [&[0, 3][..], &[0, 2, 3, 7, 11, 12, 14], &[0, 1, 5, 9, 10]] {
            let a = IntSet::new(xs.iter().copied());
            assert!(is_symmetric(&a).is_some());
            assert_eq!(classify(&a).unwrap(), SetClass::Balanced);
        }
        let r = verify_symmetric_balanced(10);
        assert!(r.passed());
        // D = 0..=10: 1,1,2,2,4,4,8,8,16,16,32
        assert_eq!(r.cases, 94);
    }
}
