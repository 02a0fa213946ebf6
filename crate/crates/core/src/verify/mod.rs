//! Finite-grid checkers. Each one sweeps an explicit grid, re-checks any
//! offending set with the brute-force route before reporting it, and returns
//! a [`VerificationReport`].
//!
//! Checkers parallelize through the ambient rayon pool and always merge in
//! grid order, so reports do not depend on the number of threads. Use
//! [`with_workers`] to pin the pool size.

mod cardinality;
mod counting;
mod growth;
mod progression;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_integer::Integer;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::setcore::{naive, IntSet};

pub use cardinality::{verify_cardinality_slice, verify_section3_witnesses, verify_small_cardinality};
pub use counting::{verify_cardinality_bounds, verify_observation6, verify_proposition2, verify_symmetric_balanced};
pub(crate) use growth::for_each_combination;
pub use growth::{
    check_growth_condition, critical_values, verify_growth_criterion, BValues, GrowthSequence, Theorem3Params,
};
pub use progression::{
    ap_plus_two_case, remark_half_margin, verify_ap_plus_one, verify_ap_plus_two, verify_remark_half,
};

/// Seed used by the random-set generators unless one is supplied.
pub const DEFAULT_SEED: u64 = 0x5D5D;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// The offending set as a literal (already scaled to integers).
    pub set: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub grid: String,
    pub cases: u64,
    pub violations: Vec<Violation>,
    pub elapsed_ms: u64,
    pub seed: Option<u64>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// The same report with `elapsed_ms` zeroed, for byte-wise comparison.
    pub fn without_timing(&self) -> Self {
        Self {
            elapsed_ms: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn summary(&self) -> String {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        let mut s = format!(
            "{}: {verdict}, {} cases, {} violations [{}] in {} ms",
            self.check,
            self.cases,
            self.violations.len(),
            self.grid,
            self.elapsed_ms
        );
        if let Some(v) = self.violations.first() {
            s.push_str(&format!("; first: {{{}}} {}", v.set, v.detail));
        }
        s
    }
}

/// Collects a report while a check runs.
pub(crate) struct ReportBuilder {
    check: String,
    grid: String,
    started: Instant,
    seed: Option<u64>,
    pub cases: u64,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl ReportBuilder {
    pub fn new(check: &str, grid: impl Into<String>) -> Self {
        Self {
            check: check.to_string(),
            grid: grid.into(),
            started: Instant::now(),
            seed: None,
            cases: 0,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            check: self.check,
            grid: self.grid,
            cases: self.cases,
            violations: self.violations,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            seed: self.seed,
            notes: self.notes,
        }
    }
}

/// Re-derives `(|A+A|, |A-A|)` by brute force and builds a violation if the
/// claim `holds` still fails. If the brute-force sizes satisfy the claim the
/// fast path was wrong, which is reported as a kernel disagreement instead.
pub(crate) fn confirmed_violation(set: &IntSet, holds: impl Fn(usize, usize) -> bool, what: &str) -> Violation {
    let (s, d) = naive::sizes(set.elements());
    let detail = if holds(s, d) {
        format!("kernel disagreement: fast path flagged {what}, brute force gives {s} sums vs {d} differences")
    } else {
        format!("{what} ({s} sums vs {d} differences)")
    };
    Violation {
        set: set.to_string(),
        detail,
    }
}

/// Runs `f` inside a rayon pool with exactly `workers` threads.
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

/// Closed integer interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    pub fn len(&self) -> u64 {
        if self.hi < self.lo {
            0
        } else {
            (self.hi - self.lo) as u64 + 1
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn values(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl FromStr for Interval {
    type Err = Error;

    /// `lo:hi`, e.g. `-50:100`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            position: 0,
            message: format!("expected lo:hi, found {s:?}"),
        };
        let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
        Ok(Self {
            lo: lo.trim().parse().map_err(|_| bad())?,
            hi: hi.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// An interval endpoint that is either fixed or a multiple of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Endpoint {
    pub value: i64,
    pub per_n: bool,
}

impl Endpoint {
    pub fn resolve(&self, n: usize) -> i64 {
        if self.per_n {
            self.value * n as i64
        } else {
            self.value
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.per_n {
            write!(f, "{}n", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// A window for the inserted points that may scale with the progression
/// length, e.g. `[-2n, 3n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NWindow {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl NWindow {
    pub fn per_n(lo: i64, hi: i64) -> Self {
        Self {
            lo: Endpoint { value: lo, per_n: true },
            hi: Endpoint { value: hi, per_n: true },
        }
    }

    pub fn fixed(lo: i64, hi: i64) -> Self {
        Self {
            lo: Endpoint {
                value: lo,
                per_n: false,
            },
            hi: Endpoint {
                value: hi,
                per_n: false,
            },
        }
    }

    pub fn resolve(&self, n: usize) -> Interval {
        Interval::new(self.lo.resolve(n), self.hi.resolve(n))
    }
}

impl fmt::Display for NWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl FromStr for NWindow {
    type Err = Error;

    /// `lo:hi` where either end may carry an `n` suffix, e.g. `-2n:3n`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            position: 0,
            message: format!("expected lo:hi (e.g. -2n:3n), found {s:?}"),
        };
        let end = |t: &str| -> Result<Endpoint> {
            let t = t.trim();
            match t.strip_suffix('n') {
                Some(v) => Ok(Endpoint {
                    value: v.parse().map_err(|_| bad())?,
                    per_n: true,
                }),
                None => Ok(Endpoint {
                    value: t.parse().map_err(|_| bad())?,
                    per_n: false,
                }),
            }
        };
        let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
        Ok(Self {
            lo: end(lo)?,
            hi: end(hi)?,
        })
    }
}

/// All reduced rationals `p/q` with `1 <= q <= q_max` in `[lo, hi]`, sorted.
pub fn rationals_in(window: Interval, q_max: u32) -> Vec<Ratio<i64>> {
    let mut out = Vec::new();
    for q in 1..=q_max.max(1) as i64 {
        for p in window.lo * q..=window.hi * q {
            if p.gcd(&q) == 1 {
                out.push(Ratio::new(p, q));
            }
        }
    }
    out.sort();
    out
}

/// `count` random sets: a size uniform in `1..=max_size`, then that many
/// distinct elements uniform in `[0, max_elem]`.
pub fn random_sets(count: usize, seed: u64, max_size: usize, max_elem: i64) -> Vec<IntSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let universe = (max_elem + 1) as usize;
    (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_size.min(universe));
            IntSet::new(
                rand::seq::index::sample(&mut rng, universe, size)
                    .into_iter()
                    .map(|i| i as i64),
            )
        })
        .collect()
}

/// Every subset of `[0, d]` containing 0.
pub fn anchored_subsets(d: u32) -> impl Iterator<Item = IntSet> {
    (0..1u64 << d).map(|bits| IntSet::from_mask(1 | bits << 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_parsing() {
        let w: NWindow = "-2n:3n".parse().unwrap();
        assert_eq!(w, NWindow::per_n(-2, 3));
        assert_eq!(w.resolve(8), Interval::new(-16, 24));
        let w: NWindow = "-5:2n".parse().unwrap();
        assert_eq!(w.resolve(3), Interval::new(-5, 6));
        assert!("3n".parse::<NWindow>().is_err());
        assert_eq!("-50:100".parse::<Interval>().unwrap(), Interval::new(-50, 100));
    }

    #[test]
    fn rational_grid() {
        let pts = rationals_in(Interval::new(0, 1), 2);
        let shown: Vec<String> = pts.iter().map(|r| r.to_string()).collect();
        assert_eq!(shown, vec!["0", "1/2", "1"]);
        assert_eq!(rationals_in(Interval::new(-16, 24), 2).len(), 81);
        assert_eq!(rationals_in(Interval::new(0, 1), 3).len(), 5);
    }

    #[test]
    fn random_sets_are_reproducible() {
        let a = random_sets(50, DEFAULT_SEED, 12, 64);
        assert_eq!(a, random_sets(50, DEFAULT_SEED, 12, 64));
        assert_ne!(a, random_sets(50, DEFAULT_SEED + 1, 12, 64));
        assert!(a
            .iter()
            .all(|s| !s.is_empty() && s.len() <= 12 && s.max().unwrap() <= 64 && s.min().unwrap() >= 0));
    }

    #[test]
    fn report_json_round_trip() {
        let r = VerificationReport {
            check: "x".into(),
            grid: "g".into(),
            cases: 3,
            violations: vec![Violation {
                set: "0,1".into(),
                detail: "d".into(),
            }],
            elapsed_ms: 7,
            seed: None,
            notes: vec!["n".into()],
        };
        let json = r.to_json();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_json(), json);
        assert!(!back.passed());
        assert_eq!(r.without_timing().elapsed_ms, 0);
    }
}
