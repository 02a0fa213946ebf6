//! Run every finite-grid check at its default size and print the summaries.

use mstd::verify::{
    verify_ap_plus_one, verify_ap_plus_two, verify_cardinality_bounds, verify_cardinality_slice, verify_observation6,
    verify_proposition2, verify_remark_half, verify_section3_witnesses, verify_symmetric_balanced, Interval, NWindow,
    DEFAULT_SEED,
};

fn main() -> mstd::Result<()> {
    let reports = vec![
        verify_cardinality_slice(1, 5, 30)?,
        verify_cardinality_slice(6, 7, 20)?,
        verify_ap_plus_two(8, NWindow::per_n(-2, 3), 2),
        verify_remark_half(8, NWindow::per_n(-2, 3), 2),
        verify_ap_plus_one(8, 5, 10, Interval::new(-30, 30)),
        verify_proposition2(20),
        verify_observation6(20_000, DEFAULT_SEED),
        verify_cardinality_bounds(20_000, DEFAULT_SEED),
        verify_symmetric_balanced(20),
        verify_section3_witnesses(),
    ];
    for r in &reports {
        println!("{}", r.summary());
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        eprintln!("{failed} checks reported violations");
        std::process::exit(1);
    }
    Ok(())
}
