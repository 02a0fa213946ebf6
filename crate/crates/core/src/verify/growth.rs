//! Sets drawn from fast-growing sequences, optionally with a few arbitrary
//! integers added.
//!
//! The claim checked here: if `a_k > a_{k-1} + a_{k-r}` for all `k >= r+1`
//! and no subset of size `<= 2r+n` is sum-dominant, then every subset `S` of
//! size `2r+n+l` has `|S-S| - |S+S| >= l(n+1)`, and `S ∪ {b_1..b_m}` stays
//! non-sum-dominant whenever `m|S| + m(m+1)/2 <= l(n+1)`.

use std::collections::HashSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{confirmed_violation, ReportBuilder, VerificationReport, Violation};
use crate::error::{Error, Result};
use crate::setcore::{kernel, IntSet};

/// `a_k > a_{k-1} + a_{k-r}` for every 1-indexed `k >= r+1`.
pub fn check_growth_condition(terms: &[i64], r: usize) -> bool {
    if r == 0 {
        return false;
    }
    (r..terms.len()).all(|k| terms[k] > terms[k - 1] + terms[k - r])
}

/// A strictly increasing nonnegative sequence satisfying the growth
/// condition for its `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthSequence {
    terms: Vec<i64>,
    r: usize,
}

impl GrowthSequence {
    pub fn new(terms: Vec<i64>, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidSequence("r must be positive".into()));
        }
        if terms.iter().any(|&t| t < 0) {
            return Err(Error::InvalidSequence("terms must be nonnegative".into()));
        }
        if let Some(w) = terms.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSequence(format!(
                "terms not strictly increasing at {} >= {}",
                w[0], w[1]
            )));
        }
        if let Some(k) = (r..terms.len()).find(|&k| terms[k] <= terms[k - 1] + terms[k - r]) {
            return Err(Error::InvalidSequence(format!(
                "growth condition fails at k={}: {} <= {} + {}",
                k + 1,
                terms[k],
                terms[k - 1],
                terms[k - r]
            )));
        }
        Ok(Self { terms, r })
    }

    /// `0, 1, 2, 3, 5, 8, ...` (Fibonacci numbers without the repeated 1),
    /// which grows with `r = 3`.
    pub fn fibonacci(count: usize) -> Self {
        let mut terms = vec![0i64, 1];
        while terms.len() < count.max(2) + 1 {
            let n = terms.len();
            terms.push(terms[n - 1] + terms[n - 2]);
        }
        terms.remove(1);
        terms.truncate(count);
        Self::new(terms, 3).expect("Fibonacci numbers satisfy the r = 3 condition")
    }

    /// `count` terms of the geometric sequence with ratio `num/den`,
    /// integerized as `num^k · den^(count-1-k)`.
    pub fn geometric(num: i64, den: i64, count: usize, r: usize) -> Result<Self> {
        let terms = (0..count as u32)
            .map(|k| num.pow(k) * den.pow(count as u32 - 1 - k))
            .collect();
        Self::new(terms, r)
    }

    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    pub fn r(&self) -> usize {
        self.r
    }
}

/// Which integers to try as the added points `b_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BValues {
    Interval {
        lo: i64,
        hi: i64,
    },
    /// The finite set of integers at which a single added point can create
    /// any coincidence among sums or differences, plus one generic point on
    /// each side. Away from it a new point adds `|S|+1` sums and `2|S|`
    /// differences, so covering it covers every integer when `m = 1`.
    Critical,
}

/// `S ∪ (S+S-S) ∪ {v/2 : v ∈ S+S even}` plus one generic point on each side.
pub fn critical_values(s: &IntSet) -> Vec<i64> {
    let e = s.elements();
    let mut out: Vec<i64> = e.to_vec();
    for (i, &a) in e.iter().enumerate() {
        for &b in &e[i..] {
            if (a + b) % 2 == 0 {
                out.push((a + b) / 2);
            }
            out.extend(e.iter().map(|&c| a + b - c));
        }
    }
    let (lo, hi) = (e[0], e[e.len() - 1]);
    out.push(2 * hi - lo + 1);
    out.push(2 * lo - hi - 1);
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theorem3Params {
    pub r: usize,
    pub n: usize,
    pub ell: usize,
    pub m: usize,
    pub window: BValues,
    /// Number of random `m`-tuples tried per set when `m >= 2`.
    pub samples: usize,
}

impl Theorem3Params {
    /// `|S| = 2r + n + l`.
    pub fn set_size(&self) -> usize {
        2 * self.r + self.n + self.ell
    }

    /// `l(n+1)`.
    pub fn deficit_target(&self) -> u64 {
        (self.ell * (self.n + 1)) as u64
    }

    /// `m|S| + m(m+1)/2`, the most sums `m` added points can create.
    pub fn added_sums_budget(&self) -> u64 {
        (self.m * self.set_size() + self.m * (self.m + 1) / 2) as u64
    }

    pub fn admissible(&self) -> bool {
        self.added_sums_budget() <= self.deficit_target()
    }

    pub fn strictly_admissible(&self) -> bool {
        self.added_sums_budget() < self.deficit_target()
    }
}

fn sizes(set: &IntSet) -> (usize, usize) {
    (kernel::sum_size(set.elements()), kernel::diff_size(set.elements()))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Calls `f` on every `k`-subset of `0..n` (as sorted indices), in
/// lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Checks both conclusions for the given sequence and parameters.
///
/// The subsets `S` tried are all `|S|`-subsets of the supplied terms when
/// there are at most `subset_budget + 1` of them, otherwise the prefix plus
/// `subset_budget` distinct random subsets. Added points are exhaustive over
/// the window for `m = 1` and a seeded random sample otherwise.
pub fn verify_growth_criterion(
    seq: &GrowthSequence,
    params: &Theorem3Params,
    subset_budget: usize,
    seed: u64,
) -> Result<VerificationReport> {
    if params.r != seq.r() {
        return Err(Error::Config(format!(
            "parameter r={} does not match the sequence's r={}",
            params.r,
            seq.r()
        )));
    }
    if !params.admissible() {
        return Err(Error::Inadmissible(format!(
            "m|S| + m(m+1)/2 = {} exceeds l(n+1) = {}",
            params.added_sums_budget(),
            params.deficit_target()
        )));
    }
    let terms = seq.terms();
    let size = params.set_size();
    if size > terms.len() {
        return Err(Error::Precondition(format!(
            "need {size} terms, sequence has {}",
            terms.len()
        )));
    }

    let window_desc = match params.window {
        BValues::Interval { lo, hi } => format!("b in [{lo}, {hi}]"),
        BValues::Critical => "b over the critical set".to_string(),
    };
    let mut report = ReportBuilder::new(
        "growth-criterion",
        format!(
            "{} terms (r={}), |S| = {size} (n={}, l={}), m={}, {window_desc}",
            terms.len(),
            params.r,
            params.n,
            params.ell,
            params.m
        ),
    )
    .seed(seed);

    // no sum-dominant subset of size <= 2r + n among the supplied terms
    let small = 2 * params.r + params.n;
    let mut small_checked = 0u64;
    for k in 1..=small.min(terms.len()) {
        let mut found = None;
        for_each_combination(terms.len(), k, |idx| {
            if found.is_none() {
                small_checked += 1;
                let sub = IntSet::new(idx.iter().map(|&i| terms[i]));
                let (s, d) = sizes(&sub);
                if s > d {
                    found = Some(sub);
                }
            }
        });
        if let Some(sub) = found {
            return Err(Error::Precondition(format!(
                "{{{sub}}} is a sum-dominant subset of size <= {small}"
            )));
        }
    }
    report.note(format!(
        "no sum-dominant subset of size <= {small}: {small_checked} subsets checked"
    ));
    report.note(format!(
        "admissibility: m|S| + m(m+1)/2 = {} vs l(n+1) = {}: <= {}, < {}",
        params.added_sums_budget(),
        params.deficit_target(),
        params.admissible(),
        params.strictly_admissible()
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let subsets: Vec<IntSet> = if binomial(terms.len(), size) <= subset_budget as u128 + 1 {
        let mut all = Vec::new();
        for_each_combination(terms.len(), size, |idx| {
            all.push(IntSet::new(idx.iter().map(|&i| terms[i])))
        });
        all
    } else {
        let prefix = IntSet::new(terms[..size].iter().copied());
        let mut seen = HashSet::from([prefix.clone()]);
        let mut all = vec![prefix];
        while all.len() < subset_budget + 1 {
            let sub = IntSet::new(sample(&mut rng, terms.len(), size).into_iter().map(|i| terms[i]));
            if seen.insert(sub.clone()) {
                all.push(sub);
            }
        }
        all
    };

    // per-subset random streams keep the sample independent of scheduling
    let stream_seeds: Vec<u64> = subsets.iter().map(|_| rng.gen()).collect();
    let target = params.deficit_target() as i64;
    let outcomes: Vec<(u64, i64, Vec<Violation>)> = subsets
        .par_iter()
        .zip(stream_seeds)
        .map(|(s, stream)| {
            let mut bad = Vec::new();
            let (ss, sd) = sizes(s);
            let deficit = sd as i64 - ss as i64;
            if deficit < target {
                bad.push(confirmed_violation(
                    s,
                    |a, b| b as i64 - a as i64 >= target,
                    &format!("deficit {deficit} below l(n+1) = {target}"),
                ));
            }
            let candidates: Vec<i64> = match params.window {
                BValues::Interval { lo, hi } => (lo..=hi).collect(),
                BValues::Critical => critical_values(s),
            };
            let mut tried = 0u64;
            let mut check = |extra: &[i64]| {
                tried += 1;
                let grown = s.union(&IntSet::new(extra.iter().copied()));
                let (gs, gd) = sizes(&grown);
                if gs > gd {
                    bad.push(confirmed_violation(
                        &grown,
                        |a, b| a <= b,
                        &format!("sum-dominant after adding {extra:?}"),
                    ));
                }
            };
            if params.m == 1 {
                for &b in &candidates {
                    check(&[b]);
                }
            } else if binomial(candidates.len(), params.m) <= params.samples as u128 {
                for_each_combination(candidates.len(), params.m, |idx| {
                    let extra: Vec<i64> = idx.iter().map(|&i| candidates[i]).collect();
                    check(&extra);
                });
            } else {
                let mut local = ChaCha8Rng::seed_from_u64(stream);
                for _ in 0..params.samples {
                    let extra: Vec<i64> = sample(&mut local, candidates.len(), params.m)
                        .into_iter()
                        .map(|i| candidates[i])
                        .collect();
                    check(&extra);
                }
            }
            (tried + 1, deficit, bad)
        })
        .collect();

    let mut at_target = 0;
    let mut min_deficit = i64::MAX;
    for (cases, deficit, bad) in outcomes {
        report.cases += cases;
        min_deficit = min_deficit.min(deficit);
        if deficit == target {
            at_target += 1;
        }
        report.violations.extend(bad);
    }
    report.note(format!(
        "{} sets S checked; smallest deficit |S-S| - |S+S| = {min_deficit}",
        subsets.len()
    ));
    report.note(format!(
        "deficit exactly l(n+1) = {target} for {at_target} of {} sets",
        subsets.len()
    ));
    Ok(report.finish())
}
