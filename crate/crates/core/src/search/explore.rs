//! Explorers for two open questions: whether a union of two arithmetic
//! progressions can be sum-dominant, and how many points must be added to an
//! arithmetic progression to make it sum-dominant.

use serde::{Deserialize, Serialize};

use crate::setcore::{is_symmetric, kernel, APSpec, IntSet};
use crate::verify::{confirmed_violation, for_each_combination, Interval, ReportBuilder, VerificationReport};

fn is_sum_dominant(set: &IntSet) -> bool {
    kernel::sum_size(set.elements()) > kernel::diff_size(set.elements())
}

/// Classifies every `AP(0, d1, n1) ∪ AP(a2, d2, n2)` with lengths up to
/// `max_len`, steps `d1 <= d2 <= max_step` and `|a2| <= max_shift`.
///
/// A sum-dominant union is recorded as a violation. A clean report only
/// speaks for the grid.
pub fn explore_two_ap_unions(max_len: usize, max_step: u64, max_shift: i64) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "two-ap-unions",
        format!(
            "AP(0,d1,n1) ∪ AP(a2,d2,n2), 1 <= n1,n2 <= {max_len}, 1 <= d1 <= d2 <= {max_step}, |a2| <= {max_shift}"
        ),
    );
    let (mut symmetric, mut singleton, mut nested) = (0u64, 0u64, 0u64);
    for n1 in 1..=max_len.max(1) {
        for n2 in 1..=max_len.max(1) {
            for d1 in 1..=max_step.max(1) {
                for d2 in d1..=max_step.max(1) {
                    let first = APSpec::new(0, d1, n1).to_set();
                    for a2 in -max_shift.abs()..=max_shift.abs() {
                        let second = APSpec::new(a2, d2, n2).to_set();
                        let union = first.union(&second);
                        report.cases += 1;
                        if n2 == 1 {
                            singleton += 1;
                        }
                        if union.len() == first.len().max(second.len()) {
                            nested += 1;
                        }
                        if is_symmetric(&union).is_some() {
                            symmetric += 1;
                        }
                        if is_sum_dominant(&union) {
                            report.violations.push(confirmed_violation(
                                &union,
                                |s, d| s <= d,
                                &format!("sum-dominant union of AP(0,{d1},{n1}) and AP({a2},{d2},{n2})"),
                            ));
                        }
                    }
                }
            }
        }
    }
    report.note(format!(
        "{symmetric} unions symmetric, {nested} with one progression inside the other"
    ));
    report.note(format!("{singleton} unions with a one-point second progression"));
    report.finish()
}

/// What the search found for one value of `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditionOutcome {
    pub k: usize,
    pub cases: u64,
    pub sum_dominant: u64,
    /// Lexicographically first sum-dominant choice of added points.
    pub first_extras: Option<IntSet>,
    pub first_union: Option<IntSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinAdditions {
    pub ap: APSpec,
    pub window: Interval,
    pub per_k: Vec<AdditionOutcome>,
    /// Smallest `k` with a sum-dominant superset, if any.
    pub min_k: Option<usize>,
    pub report: VerificationReport,
}

/// Adds every `k`-subset of `window \ ap` to the progression, for
/// `k = 1..=k_max`, and records which unions are sum-dominant.
///
/// A sum-dominant union with `k <= 2` would contradict the fact that a
/// progression plus two points is never sum-dominant, so those are the
/// report's violations.
pub fn explore_min_additions(ap: APSpec, k_max: usize, window: Interval) -> MinAdditions {
    let base = ap.to_set();
    let pool: Vec<i64> = window.values().filter(|x| !base.contains(*x)).collect();
    let mut report = ReportBuilder::new(
        "min-additions",
        format!("{ap} plus k points from {window}, 1 <= k <= {k_max}"),
    );
    let mut per_k = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let mut outcome = AdditionOutcome {
            k,
            cases: 0,
            sum_dominant: 0,
            first_extras: None,
            first_union: None,
        };
        for_each_combination(pool.len(), k, |idx| {
            let extras = IntSet::new(idx.iter().map(|&i| pool[i]));
            let union = base.union(&extras);
            outcome.cases += 1;
            if is_sum_dominant(&union) {
                outcome.sum_dominant += 1;
                if k <= 2 {
                    report.violations.push(confirmed_violation(
                        &union,
                        |s, d| s <= d,
                        &format!("sum-dominant after adding {k} points {{{extras}}}"),
                    ));
                }
                if outcome.first_extras.is_none() {
                    outcome.first_extras = Some(extras);
                    outcome.first_union = Some(union);
                }
            }
        });
        report.cases += outcome.cases;
        match &outcome.first_extras {
            Some(e) => report.note(format!(
                "k={k}: {} of {} sum-dominant, first {{{e}}}",
                outcome.sum_dominant, outcome.cases
            )),
            None => report.note(format!("k={k}: none of {}", outcome.cases)),
        }
        per_k.push(outcome);
    }
    let min_k = per_k.iter().find(|o| o.sum_dominant > 0).map(|o| o.k);
    MinAdditions {
        ap,
        window,
        per_k,
        min_k,
        report: report.finish(),
    }
}
