use std::collections::{HashMap, HashSet};
use std::fs;

use mstd::search::checkpoint::{load, CheckpointRecord};
use mstd::search::{enumerate_normalized, find_min_mstd, CandidateSet, SearchConfig};
use mstd::setcore::canonical_form;
use mstd::IntSet;

fn visited(config: &SearchConfig) -> Vec<CandidateSet> {
    let mut out = Vec::new();
    enumerate_normalized(config, |c| out.push(c)).unwrap();
    out
}

#[test]
fn canonical_representatives_are_unique() {
    let sets = visited(&SearchConfig::verification(0, 13));
    let mut seen = HashSet::new();
    for c in &sets {
        let a = c.to_intset();
        assert_eq!(canonical_form(&a).unwrap(), a, "visited set is not its own normal form");
        assert!(seen.insert(a.clone()), "{a} visited twice");
        // a dilated, shifted, reflected copy lands on the same class
        let image = a.dilate(-3).translate(17);
        assert!(seen.contains(&canonical_form(&image).unwrap()));
    }
}

#[test]
fn orbit_sizes_reconstruct_all_subsets() {
    let sets = visited(&SearchConfig::verification(0, 16));
    let mut orbits: HashMap<u32, u64> = HashMap::new();
    for c in &sets {
        *orbits.entry(c.diameter).or_default() += if c.is_symmetric() { 1 } else { 2 };
    }
    for d in 1..=16u32 {
        // a subset of [0, D] holding 0 and D is a dilate by g | D of a class at D/g
        let total: u64 = (1..=d).filter(|g| d % g == 0).map(|g| orbits[&(d / g)]).sum();
        assert_eq!(total, 1u64 << (d - 1), "D = {d}");
    }
}

#[test]
fn prunes_do_not_change_the_answer() {
    let on = find_min_mstd(&SearchConfig::discovery(0, 14)).unwrap();
    let off = find_min_mstd(&SearchConfig::verification(0, 14)).unwrap();
    assert_eq!(on.min_mstd_size, off.min_mstd_size);
    assert_eq!(on.witnesses, off.witnesses);
    assert_eq!(on.sets_examined, off.sets_examined);
    assert!(on.sets_pruned > 0);
    assert_eq!(off.sets_pruned, 0);
    for (a, b) in on.per_diameter.iter().zip(&off.per_diameter) {
        assert_eq!(
            (a.diameter, a.examined, a.sum_dominant),
            (b.diameter, b.examined, b.sum_dominant)
        );
    }
}

#[test]
fn results_independent_of_worker_count() {
    let run = |workers| {
        let mut c = SearchConfig::discovery(0, 17);
        c.workers = workers;
        find_min_mstd(&c).unwrap()
    };
    let one = run(1);
    for w in [2, 8] {
        let other = run(w);
        assert_eq!(
            serde_json::to_string(&one).unwrap(),
            serde_json::to_string(&other).unwrap(),
            "workers = {w}"
        );
    }
    assert_eq!(one.min_mstd_size, Some(8));
    assert_eq!(one.witnesses, vec![IntSet::from([0, 2, 3, 4, 7, 11, 12, 14])]);
}

#[test]
fn size_window_excludes_smaller_sets() {
    let mut c = SearchConfig::verification(0, 15);
    c.size_min = Some(9);
    let r = find_min_mstd(&c).unwrap();
    assert_eq!(r.min_mstd_size, Some(9));
    assert!(r.witnesses.iter().all(|w| w.len() == 9));
}

#[test]
fn checkpoint_resume_matches_a_fresh_run() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("search.jsonl");
    let mut config = SearchConfig::discovery(0, 15);
    config.workers = 2;
    let fresh = find_min_mstd(&config).unwrap();

    config.checkpoint_path = Some(path.clone());
    let first = find_min_mstd(&config).unwrap();
    assert_eq!(first, fresh);
    let text = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let total = lines.len();
    assert_eq!(load(&path, &config.key()).unwrap().len(), total);

    // keep half the records, then a torn line and a record from another configuration
    let mut other: CheckpointRecord = serde_json::from_str(lines[0]).unwrap();
    other.config = SearchConfig::verification(0, 15).key();
    other.tallies.examined = 999_999;
    let mut kept: Vec<String> = lines[..total / 2].iter().map(|s| s.to_string()).collect();
    kept.push(serde_json::to_string(&other).unwrap());
    let mut body = kept.join("\n");
    body.push_str("\n{\"partition_id\": 12, \"diam");
    fs::write(&path, body).unwrap();
    assert_eq!(load(&path, &config.key()).unwrap().len(), total / 2);

    let resumed = find_min_mstd(&config).unwrap();
    assert_eq!(resumed, fresh);
    assert_eq!(load(&path, &config.key()).unwrap().len(), total);

    // a complete checkpoint answers without rescanning
    let again = find_min_mstd(&config).unwrap();
    assert_eq!(again, fresh);
}

#[test]
fn invalid_configurations_are_rejected() {
    assert!(find_min_mstd(&SearchConfig::discovery(10, 5)).is_err());
    assert!(find_min_mstd(&SearchConfig::discovery(0, 64)).is_err());
    let mut c = SearchConfig::discovery(0, 10);
    c.workers = 0;
    assert!(find_min_mstd(&c).is_err());
}
