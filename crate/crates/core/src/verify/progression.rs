//! Progressions with one or two extra rational points.

use num_rational::Ratio;
use rayon::prelude::*;

use super::{confirmed_violation, rationals_in, Interval, NWindow, ReportBuilder, VerificationReport, Violation};
use crate::setcore::{kernel, scale_to_integers, APSpec, IntSet, RationalSet};

type Q = Ratio<i64>;

fn with_initial(n: usize, extra: &[Q]) -> IntSet {
    let items = (0..n as i64).map(Q::from_integer).chain(extra.iter().copied());
    scale_to_integers(&RationalSet::from_ratios(items)).0
}

/// `I_n ∪ {x, y}` scaled to integers, with `(|A+A|, |A-A|)`.
pub fn ap_plus_two_case(n: usize, x: Q, y: Q) -> (IntSet, usize, usize) {
    let set = with_initial(n, &[x, y]);
    let (s, d) = (kernel::sum_size(set.elements()), kernel::diff_size(set.elements()));
    (set, s, d)
}

/// `|A-A| - |A+A|` for `A = I_n ∪ {x}`.
pub fn remark_half_margin(n: usize, x: Q) -> i64 {
    let set = with_initial(n, &[x]);
    kernel::diff_size(set.elements()) as i64 - kernel::sum_size(set.elements()) as i64
}

#[derive(Debug, Default, Clone, Copy)]
struct PairKinds {
    single: u64,
    both_fractional: u64,
    both_integral: u64,
    mixed: u64,
}

impl PairKinds {
    fn record(&mut self, x: Q, y: Q) {
        let (sum_int, diff_int) = ((x + y).is_integer(), (x - y).is_integer());
        match (x == y, sum_int, diff_int) {
            (true, _, _) => self.single += 1,
            (false, true, true) => self.both_integral += 1,
            (false, false, false) => self.both_fractional += 1,
            _ => self.mixed += 1,
        }
    }

    fn add(&mut self, o: &PairKinds) {
        self.single += o.single;
        self.both_fractional += o.both_fractional;
        self.both_integral += o.both_integral;
        self.mixed += o.mixed;
    }
}

/// `I_n ∪ {x, y}` is never sum-dominant, for `1 <= n <= n_max` and every
/// pair `x <= y` of rationals with denominator at most `q_max` in the
/// window. `x = y` covers the single-insertion case.
pub fn verify_ap_plus_two(n_max: usize, window: NWindow, q_max: u32) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "ap-plus-two",
        format!("I_n ∪ {{x,y}}, 1 <= n <= {n_max}, x <= y rational with denominator <= {q_max} in {window}"),
    );
    let jobs: Vec<(usize, Vec<Q>)> = (1..=n_max)
        .map(|n| (n, rationals_in(window.resolve(n), q_max)))
        .collect();
    let per_row: Vec<(u64, PairKinds, Vec<Violation>)> = jobs
        .iter()
        .flat_map(|(n, pts)| (0..pts.len()).map(move |i| (*n, pts, i)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(n, pts, i)| {
            let x = pts[i];
            let mut kinds = PairKinds::default();
            let mut bad = Vec::new();
            for &y in &pts[i..] {
                kinds.record(x, y);
                let (set, s, d) = ap_plus_two_case(n, x, y);
                if s > d {
                    bad.push(confirmed_violation(
                        &set,
                        |s, d| s <= d,
                        &format!("sum-dominant with n={n}, x={x}, y={y}"),
                    ));
                }
            }
            ((pts.len() - i) as u64, kinds, bad)
        })
        .collect();
    let mut kinds = PairKinds::default();
    for (cases, k, bad) in per_row {
        report.cases += cases;
        kinds.add(&k);
        report.violations.extend(bad);
    }
    report.note(format!("single insertions (x = y): {}", kinds.single));
    report.note(format!("x±y both non-integral: {}", kinds.both_fractional));
    report.note(format!("x±y both integral: {}", kinds.both_integral));
    report.note(format!("exactly one of x+y, x-y integral: {}", kinds.mixed));
    report.finish()
}

/// For `n >= 2` and rational `x` with `x - 1/2` not an integer, `x` not in
/// `{-1, n}` and `x` not already in `I_n`, the set `I_n ∪ {x}` has at least
/// one more difference than sums.
pub fn verify_remark_half(n_max: usize, window: NWindow, q_max: u32) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "remark-half",
        format!("I_n ∪ {{x}}, 2 <= n <= {n_max}, x rational with denominator <= {q_max} in {window}, x-1/2 ∉ Z, x ∉ {{-1, n}} ∪ I_n"),
    );
    let half = Q::new(1, 2);
    let cases: Vec<(usize, Q)> = (2..=n_max)
        .flat_map(|n| {
            rationals_in(window.resolve(n), q_max)
                .into_iter()
                .filter(move |&x| {
                    let in_initial = x.is_integer() && (0..n as i64).contains(x.numer());
                    !(x - half).is_integer()
                        && x != Q::from_integer(-1)
                        && x != Q::from_integer(n as i64)
                        && !in_initial
                })
                .map(move |x| (n, x))
        })
        .collect();
    report.cases = cases.len() as u64;
    report.violations = cases
        .par_iter()
        .filter_map(|&(n, x)| {
            (remark_half_margin(n, x) < 1).then(|| {
                confirmed_violation(
                    &with_initial(n, &[x]),
                    |s, d| d > s,
                    &format!("difference surplus below 1 with n={n}, x={x}"),
                )
            })
        })
        .collect();
    report.finish()
}

/// `AP(a, d, len) ∪ {m}` is never sum-dominant, over `|a| <= shift_max`,
/// `1 <= d <= step_max`, `1 <= len <= len_max` and integer `m` in `window`.
pub fn verify_ap_plus_one(len_max: usize, step_max: u64, shift_max: i64, window: Interval) -> VerificationReport {
    let mut report = ReportBuilder::new(
        "ap-plus-one",
        format!("AP(a,d,len) ∪ {{m}}, |a| <= {shift_max}, d <= {step_max}, len <= {len_max}, m in {window}"),
    );
    let specs: Vec<APSpec> = (-shift_max..=shift_max)
        .flat_map(|a| (1..=step_max).flat_map(move |d| (1..=len_max).map(move |l| APSpec::new(a, d, l))))
        .collect();
    let rows: Vec<Vec<Violation>> = specs
        .par_iter()
        .map(|ap| {
            let base = ap.to_set();
            window
                .values()
                .filter_map(|m| {
                    let set = base.with(m);
                    let e = set.elements();
                    (kernel::sum_size(e) > kernel::diff_size(e))
                        .then(|| confirmed_violation(&set, |s, d| s <= d, &format!("sum-dominant: {ap} with m={m}")))
                })
                .collect()
        })
        .collect();
    report.cases = specs.len() as u64 * window.len();
    report.violations = rows.into_iter().flatten().collect();
    report.finish()
}
