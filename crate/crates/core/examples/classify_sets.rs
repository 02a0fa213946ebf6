//! Classify a few sets and print their profiles.
//!
//! cargo run --example classify_sets -- 0,2,3,4,7,11,12,14 0,1,3,7

use mstd::setcore::{detect_ap, is_symmetric};
use mstd::{profile, IntSet};

fn main() -> mstd::Result<()> {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = [
            "0,2,3,4,7,11,12,14",
            "0,1,3,4,5",
            "0,1,3,7",
            "0,1,2,10,11,12",
            "0,3,6,9",
        ]
        .map(String::from)
        .to_vec();
    }
    for arg in args {
        let a: IntSet = arg.parse()?;
        let p = profile(&a)?;
        print!(
            "{{{a}}}: {} ({} sums vs {} differences)",
            p.class, p.sum_size, p.diff_size
        );
        if let Some(c) = is_symmetric(&a) {
            print!(", A = {c} - A");
        }
        if let Some(ap) = detect_ap(&a) {
            print!(", {ap}");
        }
        println!();
    }
    Ok(())
}
