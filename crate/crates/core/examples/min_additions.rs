//! How many points must be added to a progression to make it sum-dominant?

use mstd::search::explore_min_additions;
use mstd::setcore::APSpec;
use mstd::verify::Interval;

fn main() {
    for (ap, window) in [
        (APSpec::new(3, 4, 3), Interval::new(0, 14)),
        (APSpec::new(0, 1, 4), Interval::new(-8, 12)),
    ] {
        let found = explore_min_additions(ap, 5, window);
        println!("{ap} with points from {window}: smallest k = {:?}", found.min_k);
        for o in &found.per_k {
            match (&o.first_extras, &o.first_union) {
                (Some(e), Some(u)) => println!(
                    "  k={}: {} of {}, first {{{e}}} giving {{{u}}}",
                    o.k, o.sum_dominant, o.cases
                ),
                _ => println!("  k={}: none of {}", o.k, o.cases),
            }
        }
    }
}
