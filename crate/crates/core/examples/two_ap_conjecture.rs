//! Look for a sum-dominant union of two arithmetic progressions.
//!
//! cargo run --release --example two_ap_conjecture -- 8 6 60

use mstd::search::explore_two_ap_unions;

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).map(|s| s.parse().expect("integer")).collect();
    let (len, step, shift) = match args[..] {
        [l, d, s] => (l as usize, d, s as i64),
        _ => (6, 5, 40),
    };
    let report = explore_two_ap_unions(len, step, shift);
    println!("{}", report.summary());
    report.notes.iter().for_each(|n| println!("  {n}"));
    for v in &report.violations {
        println!("  counterexample {{{}}}: {}", v.set, v.detail);
    }
}
