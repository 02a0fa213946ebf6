//! The `mstd` command-line front end.
//!
//! [`run`] parses arguments, dispatches to the library and prints either a
//! one-line summary or JSON. Exit status is 0 on success, 1 when a check
//! reports a violation and 2 on usage or parse errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::search::{explore_min_additions, explore_two_ap_unions, find_min_mstd, SearchConfig};
use crate::setcore::{ap_plus_two_decomposition, profile, scale_to_integers, APSpec, IntSet, RationalSet, SetClass};
use crate::structure::{difference_table, gaps};
use crate::verify::{
    self, verify_ap_plus_one, verify_ap_plus_two, verify_cardinality_bounds, verify_cardinality_slice,
    verify_growth_criterion, verify_observation6, verify_proposition2, verify_remark_half, verify_section3_witnesses,
    verify_symmetric_balanced, with_workers, BValues, GrowthSequence, Interval, NWindow, Theorem3Params,
    VerificationReport, Violation,
};

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "MSTD_WORKERS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mstd",
    version,
    about = "Sum-dominant set arithmetic, verification and search"
)]
struct Cli {
    /// Print JSON instead of a summary.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for search and verification.
    #[arg(long, global = true, env = WORKERS_ENV)]
    workers: Option<usize>,

    /// Seed for randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Checkpoint file for resumable searches.
    #[arg(long, global = true)]
    checkpoint: Option<PathBuf>,

    /// Report elapsed_ms as 0 so repeated runs compare byte for byte.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a set as sum-dominant, balanced or difference-dominant.
    Classify {
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Full profile: sizes, class, pair counts, symmetry and progression.
    Profile {
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Gap vector and difference table.
    Explain {
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Find the smallest sum-dominant sets up to a diameter.
    Search(SearchArgs),
    /// Run one of the finite-grid checks.
    Verify(Box<VerifyArgs>),
    /// Probe an open question over a grid.
    Explore {
        #[command(subcommand)]
        explorer: Explorer,
    },
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 0)]
    diameter_min: u32,
    #[arg(long, default_value_t = 24)]
    diameter_max: u32,
    #[arg(long)]
    size_min: Option<usize>,
    #[arg(long)]
    size_max: Option<usize>,
    /// Examine every canonical set, skipping nothing.
    #[arg(long)]
    no_prune: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    /// Sets of small cardinality are not sum-dominant.
    Thm1,
    /// A progression plus two points is not sum-dominant.
    Thm2,
    /// A progression plus one half-integer point has a difference surplus.
    Remark,
    /// Insertion deltas just past the end of an interval.
    Prop2,
    /// Twice the equal-sum pairs bound the equal-difference pairs.
    Obs6,
    /// Cardinality bounds and their equality cases.
    Bounds,
    /// Symmetric sets are balanced.
    Lemma3,
    /// Fast-growing sequences with added points.
    Thm3,
    /// The named five-element examples.
    Witnesses,
    /// A progression plus one point is not sum-dominant.
    Cor5,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqKind {
    Fibonacci,
    Geometric,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    check: Check,
    /// Smallest set size (thm1).
    #[arg(long)]
    min_size: Option<usize>,
    /// Largest set size (thm1).
    #[arg(long)]
    max_size: Option<usize>,
    /// Diameter bound (thm1, lemma3).
    #[arg(long)]
    max_diameter: Option<u32>,
    /// Largest progression length (thm2, remark, prop2, cor5).
    #[arg(long)]
    n_max: Option<usize>,
    /// Window for inserted points, e.g. -2n:3n (thm2, remark, cor5).
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
    /// Largest denominator of inserted points (thm2, remark).
    #[arg(long)]
    q_max: Option<u32>,
    /// Number of random sets (obs6, bounds).
    #[arg(long)]
    trials: Option<usize>,
    /// Largest step (cor5).
    #[arg(long)]
    max_step: Option<u64>,
    /// Largest |first element| (cor5).
    #[arg(long)]
    max_shift: Option<i64>,
    /// Check a single set, given with optional p/q elements (thm2, cor5).
    #[arg(long, allow_hyphen_values = true)]
    set: Option<String>,
    /// Sequence family (thm3).
    #[arg(long, value_enum, default_value_t = SeqKind::Fibonacci)]
    sequence: SeqKind,
    /// Number of sequence terms (thm3).
    #[arg(long)]
    terms: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    /// Number of added points (thm3).
    #[arg(long)]
    m: Option<usize>,
    /// Range of added points as lo:hi (thm3); the critical set when omitted
    /// for sequences too wide to scan.
    #[arg(long, allow_hyphen_values = true)]
    b_range: Option<String>,
    /// Scan the finite set of points that can create coincidences (thm3).
    #[arg(long)]
    critical: bool,
    /// Random subsets of the terms to test besides the prefix (thm3).
    #[arg(long, default_value_t = 200)]
    subset_budget: usize,
    /// Random added-point tuples per set when m >= 2 (thm3).
    #[arg(long, default_value_t = 2000)]
    samples: usize,
}

#[derive(Debug, Subcommand)]
enum Explorer {
    /// Unions of two arithmetic progressions.
    TwoAp {
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 5)]
        max_step: u64,
        #[arg(long, default_value_t = 40)]
        max_shift: i64,
    },
    /// Fewest points to add to a progression for a sum-dominant set.
    MinAdditions {
        /// Progression as first,step,length.
        #[arg(long, default_value = "3,4,3", allow_hyphen_values = true)]
        ap: String,
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        /// Candidate points as lo:hi.
        #[arg(long, default_value = "0:14", allow_hyphen_values = true)]
        window: String,
    },
}

/// What a subcommand produced.
enum Output {
    Text { text: String, json: String, failed: bool },
    Report(VerificationReport),
}

#[derive(Serialize)]
struct ClassifyOutput<'a> {
    set: &'a IntSet,
    class: SetClass,
    sum_size: usize,
    diff_size: usize,
}

#[derive(Serialize)]
struct ExplainOutput<'a> {
    set: &'a IntSet,
    gaps: Vec<u64>,
    difference_table: Vec<Vec<u64>>,
    class: SetClass,
    sum_size: usize,
    diff_size: usize,
}

/// Runs the command line and returns the exit status. Output goes to
/// stdout, diagnostics to stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(&cli) {
        Ok(out) => emit(&cli, out),
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(cli: &Cli, out: Output) -> i32 {
    match out {
        Output::Text { text, json, failed } => {
            println!("{}", if cli.json { json } else { text });
            if failed {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            }
        }
        Output::Report(report) => {
            let report = if cli.no_timing { report.without_timing() } else { report };
            if cli.json {
                println!("{}", report.to_json());
            } else {
                println!("{}", report.summary());
                for note in &report.notes {
                    println!("  {note}");
                }
            }
            if report.passed() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            }
        }
    }
}

fn workers(cli: &Cli) -> Result<usize> {
    match cli.workers {
        Some(0) => Err(Error::Config("--workers must be at least 1".into())),
        Some(n) => Ok(n),
        None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("outputs serialize")
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Classify { set } => {
            let a: IntSet = set.parse()?;
            let p = profile(&a)?;
            let text = format!("{} ({} sums vs {} differences)", p.class, p.sum_size, p.diff_size);
            let json = to_json(&ClassifyOutput {
                set: &a,
                class: p.class,
                sum_size: p.sum_size,
                diff_size: p.diff_size,
            });
            Ok(Output::Text {
                text,
                json,
                failed: false,
            })
        }
        Command::Profile { set } => {
            let a: IntSet = set.parse()?;
            let p = profile(&a)?;
            let mut text = format!(
                "{{{a}}}\n  class: {}\n  |A| = {}, |A+A| = {}, |A-A| = {}\n  equal-sum pairs: {}, equal-difference pairs: {}\n  diameter: {}",
                p.class, p.size, p.sum_size, p.diff_size, p.equal_sum_pairs, p.equal_diff_pairs, p.diameter
            );
            if let Some(c) = p.symmetry_center {
                text.push_str(&format!("\n  symmetric: A = {c} - A"));
            }
            if let Some(ap) = &p.ap {
                text.push_str(&format!("\n  progression: {ap}"));
            }
            Ok(Output::Text {
                text,
                json: to_json(&p),
                failed: false,
            })
        }
        Command::Explain { set } => {
            let a: IntSet = set.parse()?;
            let p = profile(&a)?;
            let (g, table) = if a.len() >= 2 {
                let g = gaps(&a)?;
                let t = difference_table(&a)?;
                (g.0.clone(), Some((g, t)))
            } else {
                (Vec::new(), None)
            };
            let mut text = format!(
                "{{{a}}}: {} ({} sums vs {} differences)\n",
                p.class, p.sum_size, p.diff_size
            );
            match &table {
                Some((g, t)) => text.push_str(&format!("gaps {g}\n{t}")),
                None => text.push_str("a single element has no gaps\n"),
            }
            let json = to_json(&ExplainOutput {
                set: &a,
                gaps: g,
                difference_table: table.map(|(_, t)| t.rows).unwrap_or_default(),
                class: p.class,
                sum_size: p.sum_size,
                diff_size: p.diff_size,
            });
            Ok(Output::Text {
                text: text.trim_end().to_string(),
                json,
                failed: false,
            })
        }
        Command::Search(args) => {
            let mut config = if args.no_prune {
                SearchConfig::verification(args.diameter_min, args.diameter_max)
            } else {
                SearchConfig::discovery(args.diameter_min, args.diameter_max)
            };
            config.size_min = args.size_min;
            config.size_max = args.size_max;
            config.workers = workers(cli)?;
            config.checkpoint_path = cli.checkpoint.clone();
            let result = find_min_mstd(&config)?;
            Ok(Output::Text {
                text: result.summary(),
                json: to_json(&result),
                failed: false,
            })
        }
        Command::Verify(args) => {
            let n = workers(cli)?;
            let report = with_workers(n, || run_check(cli, args))??;
            Ok(Output::Report(report))
        }
        Command::Explore { explorer } => {
            let n = workers(cli)?;
            match explorer {
                Explorer::TwoAp {
                    max_len,
                    max_step,
                    max_shift,
                } => {
                    let report = with_workers(n, || explore_two_ap_unions(*max_len, *max_step, *max_shift))?;
                    Ok(Output::Report(report))
                }
                Explorer::MinAdditions { ap, k_max, window } => {
                    let ap = parse_ap(ap)?;
                    let window: Interval = window.parse()?;
                    let found = with_workers(n, || explore_min_additions(ap, *k_max, window))?;
                    if cli.json {
                        let found = if cli.no_timing {
                            crate::search::MinAdditions {
                                report: found.report.without_timing(),
                                ..found
                            }
                        } else {
                            found
                        };
                        let failed = !found.report.passed();
                        Ok(Output::Text {
                            text: String::new(),
                            json: to_json(&found),
                            failed,
                        })
                    } else {
                        Ok(Output::Report(found.report))
                    }
                }
            }
        }
    }
}

fn parse_ap(s: &str) -> Result<APSpec> {
    let parts = crate::setcore::split_literal(s)?;
    let bad = |position: usize, message: &str| Error::Parse {
        position,
        message: message.to_string(),
    };
    if parts.len() != 3 {
        return Err(bad(0, "expected first,step,length"));
    }
    let first: i64 = parts[0]
        .1
        .parse()
        .map_err(|_| bad(parts[0].0, "first must be an integer"))?;
    let step: u64 = parts[1]
        .1
        .parse()
        .map_err(|_| bad(parts[1].0, "step must be a positive integer"))?;
    let length: usize = parts[2]
        .1
        .parse()
        .map_err(|_| bad(parts[2].0, "length must be a positive integer"))?;
    if step == 0 || length == 0 {
        return Err(bad(0, "step and length must be at least 1"));
    }
    Ok(APSpec::new(first, step, length))
}

fn n_window(args: &VerifyArgs, default: NWindow) -> Result<NWindow> {
    args.window.as_deref().map_or(Ok(default), str::parse)
}

/// A single user-supplied set, scaled to integers, that must be a
/// progression plus at most `max_extras` points.
fn single_set_check(check: &str, literal: &str, max_extras: usize) -> Result<VerificationReport> {
    let rational: RationalSet = literal.parse()?;
    let (set, scale) = scale_to_integers(&rational);
    let Some((ap, extras)) = ap_plus_two_decomposition(&set).filter(|(_, e)| e.len() <= max_extras) else {
        return Err(Error::Precondition(format!(
            "{{{rational}}} is not an arithmetic progression plus at most {max_extras} points"
        )));
    };
    let p = profile(&set)?;
    let mut violations = Vec::new();
    if p.class == SetClass::SumDominant {
        violations.push(Violation {
            set: set.to_string(),
            detail: format!("sum-dominant ({} sums vs {} differences)", p.sum_size, p.diff_size),
        });
    }
    let extras = if extras.is_empty() {
        "none".to_string()
    } else {
        format!("{{{extras}}}")
    };
    Ok(VerificationReport {
        check: check.to_string(),
        grid: format!("single set {{{rational}}}"),
        cases: 1,
        violations,
        elapsed_ms: 0,
        seed: None,
        notes: vec![
            format!("scaled by {} to {{{set}}}", scale.factor),
            format!("{ap} plus {extras}; {} sums vs {} differences", p.sum_size, p.diff_size),
        ],
    })
}

fn run_check(cli: &Cli, args: &VerifyArgs) -> Result<VerificationReport> {
    let seed = cli.seed.unwrap_or(verify::DEFAULT_SEED);
    let report = match args.check {
        Check::Thm1 => verify_cardinality_slice(
            args.min_size.unwrap_or(1),
            args.max_size.unwrap_or(5),
            args.max_diameter.unwrap_or(30),
        )?,
        Check::Thm2 => match &args.set {
            Some(s) => single_set_check("ap-plus-two", s, 2)?,
            None => verify_ap_plus_two(
                args.n_max.unwrap_or(8),
                n_window(args, NWindow::per_n(-2, 3))?,
                args.q_max.unwrap_or(2),
            ),
        },
        Check::Remark => verify_remark_half(
            args.n_max.unwrap_or(8),
            n_window(args, NWindow::per_n(-2, 3))?,
            args.q_max.unwrap_or(2),
        ),
        Check::Prop2 => verify_proposition2(args.n_max.unwrap_or(20)),
        Check::Obs6 => verify_observation6(args.trials.unwrap_or(100_000), seed),
        Check::Bounds => verify_cardinality_bounds(args.trials.unwrap_or(100_000), seed),
        Check::Lemma3 => verify_symmetric_balanced(args.max_diameter.unwrap_or(20)),
        Check::Witnesses => verify_section3_witnesses(),
        Check::Cor5 => match &args.set {
            Some(s) => single_set_check("ap-plus-one", s, 1)?,
            None => {
                let window: Interval = match &args.window {
                    Some(w) => w.parse()?,
                    None => Interval::new(-30, 30),
                };
                verify_ap_plus_one(
                    args.n_max.unwrap_or(8),
                    args.max_step.unwrap_or(5),
                    args.max_shift.unwrap_or(10),
                    window,
                )
            }
        },
        Check::Thm3 => {
            let (seq, n, ell) = match args.sequence {
                SeqKind::Fibonacci => (GrowthSequence::fibonacci(args.terms.unwrap_or(13)), 2, 5),
                SeqKind::Geometric => (GrowthSequence::geometric(5, 3, args.terms.unwrap_or(10), 2)?, 2, 4),
            };
            let window = match (&args.b_range, args.critical) {
                (Some(_), true) => return Err(Error::Config("--b-range and --critical are exclusive".into())),
                (Some(r), false) => {
                    let i: Interval = r.parse()?;
                    BValues::Interval { lo: i.lo, hi: i.hi }
                }
                (None, true) => BValues::Critical,
                (None, false) => match args.sequence {
                    SeqKind::Fibonacci => BValues::Interval { lo: -50, hi: 100 },
                    SeqKind::Geometric => BValues::Critical,
                },
            };
            let params = Theorem3Params {
                r: seq.r(),
                n: args.n.unwrap_or(n),
                ell: args.ell.unwrap_or(ell),
                m: args.m.unwrap_or(1),
                window,
                samples: args.samples,
            };
            verify_growth_criterion(&seq, &params, args.subset_budget, seed)?
        }
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setcore::is_symmetric;

    fn cli(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("mstd").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn parses_negative_literals() {
        let c = cli(&["classify", "-3,0,4"]);
        assert!(matches!(c.command, Command::Classify { ref set } if set == "-3,0,4"));
    }

    #[test]
    fn rejects_unknown_check() {
        let err = Cli::try_parse_from(["mstd", "verify", "thm9"]).unwrap_err();
        assert!(err.to_string().contains("thm1"));
    }

    #[test]
    fn ap_literal() {
        assert_eq!(parse_ap("3,4,3").unwrap(), APSpec::new(3, 4, 3));
        assert!(parse_ap("3,0,3").is_err());
        assert!(matches!(parse_ap("3,x,3"), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn single_rational_set() {
        let r = single_set_check("ap-plus-two", "0,1,2,3,7/2,-1/2", 2).unwrap();
        assert!(r.passed());
        assert!(single_set_check("ap-plus-two", "0,2,3,4,7,11,12,14", 2).is_err());
    }

    #[test]
    fn symmetric_union_example() {
        let a = IntSet::from([0, 1, 2, 10, 11, 12]);
        assert_eq!(is_symmetric(&a), Some(12));
    }
}
