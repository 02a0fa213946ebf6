//! Sets from fast-growing sequences stay far from sum-dominant, even with a
//! point added anywhere.

use mstd::verify::{
    check_growth_condition, verify_growth_criterion, BValues, GrowthSequence, Theorem3Params, DEFAULT_SEED,
};

fn main() -> mstd::Result<()> {
    let fib = GrowthSequence::fibonacci(13);
    println!("{:?}", fib.terms());
    println!(
        "r=3 holds: {}, r=2 holds: {}",
        check_growth_condition(fib.terms(), 3),
        check_growth_condition(fib.terms(), 2)
    );

    let params = Theorem3Params {
        r: 3,
        n: 2,
        ell: 5,
        m: 1,
        window: BValues::Interval { lo: -50, hi: 100 },
        samples: 0,
    };
    let r = verify_growth_criterion(&fib, &params, 0, DEFAULT_SEED)?;
    println!("{}", r.summary());
    r.notes.iter().for_each(|n| println!("  {n}"));

    // a longer sequence, random 13-subsets, every relevant added point
    let long = GrowthSequence::fibonacci(17);
    let wide = Theorem3Params {
        window: BValues::Critical,
        ..params
    };
    println!(
        "{}",
        verify_growth_criterion(&long, &wide, 300, DEFAULT_SEED)?.summary()
    );

    let geo = GrowthSequence::geometric(5, 3, 10, 2)?;
    let params = Theorem3Params {
        r: 2,
        n: 2,
        ell: 4,
        m: 1,
        window: BValues::Critical,
        samples: 0,
    };
    let r = verify_growth_criterion(&geo, &params, 0, DEFAULT_SEED)?;
    println!("{}", r.summary());
    r.notes.iter().for_each(|n| println!("  {n}"));
    Ok(())
}
