use super::{confirmed_violation, ReportBuilder, VerificationReport};
use crate::error::Result;
use crate::search::enumerate::{for_each_raw, partitions, run_partitions};
use crate::search::SearchConfig;
use crate::setcore::{kernel, profile, IntSet, SetClass};

/// No canonical set with `|A| <= max_size` and diameter `<= max_diameter` is
/// sum-dominant.
pub fn verify_small_cardinality(max_size: usize, max_diameter: u32) -> Result<VerificationReport> {
    verify_cardinality_slice(1, max_size, max_diameter)
}

/// No canonical set with `size_min <= |A| <= size_max` and diameter
/// `<= max_diameter` is sum-dominant. Exhaustive, with no pruning.
pub fn verify_cardinality_slice(size_min: usize, size_max: usize, max_diameter: u32) -> Result<VerificationReport> {
    let mut config = SearchConfig::verification(0, max_diameter);
    config.size_min = Some(size_min);
    config.size_max = Some(size_max);
    config.workers = rayon::current_num_threads();
    config.validate()?;

    let mut report = ReportBuilder::new(
        "small-cardinality",
        format!("canonical sets, {size_min} <= |A| <= {size_max}, diameter <= {max_diameter}"),
    );
    let parts = partitions(&config);
    let results = run_partitions(
        &config,
        &parts,
        |p| {
            let mut examined = 0u64;
            let mut hits = Vec::new();
            for_each_raw(&config, p, |c| {
                if c.is_canonical() {
                    examined += 1;
                    if kernel::mask_sum_size(c.mask) > kernel::mask_diff_size(c.mask) {
                        hits.push(c.to_intset());
                    }
                }
            });
            (examined, hits)
        },
        |_, _| Ok(()),
    )?;
    for (examined, hits) in results {
        report.cases += examined;
        report.violations.extend(
            hits.iter()
                .map(|s| confirmed_violation(s, |s, d| s <= d, "sum-dominant")),
        );
    }
    Ok(report.finish())
}

/// The two five-element sets singled out by the case analysis for size 5,
/// plus `I_5`, are balanced with 11 sums and 11 differences (9 and 9 for
/// `I_5`).
pub fn verify_section3_witnesses() -> VerificationReport {
    let mut report = ReportBuilder::new("named-witnesses", "{0,1,3,4,5}, {0,1,2,4,5}, I_5");
    let fixtures: [(IntSet, usize); 3] = [
        (IntSet::from([0, 1, 3, 4, 5]), 11),
        (IntSet::from([0, 1, 2, 4, 5]), 11),
        (IntSet::initial(5), 9),
    ];
    for (set, expected) in fixtures {
        report.cases += 1;
        let p = profile(&set).expect("fixtures are nonempty");
        report.note(format!(
            "{{{set}}}: {} ({} sums vs {} differences)",
            p.class, p.sum_size, p.diff_size
        ));
        if p.class != SetClass::Balanced || p.sum_size != expected || p.diff_size != expected {
            report.violations.push(confirmed_violation(
                &set,
                |s, d| s == expected && d == expected,
                &format!("expected balanced with {expected} = {expected}"),
            ));
        }
    }
    report.finish()
}
