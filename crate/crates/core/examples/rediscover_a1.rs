//! Exhaustive search for the smallest sum-dominant set.
//!
//! cargo run --release --example rediscover_a1 -- 18

use mstd::{find_min_mstd, SearchConfig};

fn main() -> mstd::Result<()> {
    let max: u32 = std::env::args().nth(1).map_or(14, |s| s.parse().expect("diameter"));
    let mut config = SearchConfig::discovery(0, max);
    config.workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let result = find_min_mstd(&config)?;
    println!("{}", result.summary());
    for d in &result.per_diameter {
        println!(
            "  D={:>2}: {:>7} classes, {:>7} pruned, {:>3} sum-dominant",
            d.diameter, d.examined, d.pruned, d.sum_dominant
        );
    }
    Ok(())
}
