//! Gap vectors, difference tables and what inserting one point does.

use mstd::structure::{difference_table, equal_diff_pairs, equal_sum_pairs, gaps, insertion_delta};
use mstd::IntSet;

fn main() -> mstd::Result<()> {
    for a in [
        IntSet::from([0, 1, 3, 4, 5]),
        IntSet::from([0, 1, 2, 4, 5]),
        IntSet::from([0, 2, 3, 4, 7, 11, 12, 14]),
    ] {
        println!("{{{a}}} gaps {}", gaps(&a)?);
        print!("{}", difference_table(&a)?);
        println!(
            "equal-sum pairs {}, equal-difference pairs {}\n",
            equal_sum_pairs(&a),
            equal_diff_pairs(&a)
        );
    }

    // one past the end of I_n adds k+1 sums and k positive differences
    let interval = IntSet::initial(6);
    for k in 1..6 {
        let x = 5 + k;
        let d = insertion_delta(&interval, x)?;
        println!(
            "I_6 + {{{x}}}: {} new sums, {} new positive differences",
            d.new_sums, d.new_pos_diffs
        );
    }
    Ok(())
}
