//! Exhaustive search for sum-dominant sets over canonical representatives.

pub mod checkpoint;
pub mod enumerate;
mod explore;

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::setcore::{is_ap_plus_at_most_two, kernel, naive, profile, IntSet, SetProfile};

pub use enumerate::{enumerate_normalized, CandidateSet, EnumCounts, Partition, MAX_DIAMETER};
pub use explore::{explore_min_additions, explore_two_ap_unions, AdditionOutcome, MinAdditions};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub diameter_min: u32,
    pub diameter_max: u32,
    pub size_min: Option<usize>,
    pub size_max: Option<usize>,
    /// Skip sets that are an arithmetic progression plus at most two points.
    pub prune_ap_plus_two: bool,
    /// Skip symmetric sets.
    pub prune_symmetric: bool,
    pub workers: usize,
    pub checkpoint_path: Option<PathBuf>,
}

impl SearchConfig {
    /// Discovery mode: both prunes on.
    pub fn discovery(diameter_min: u32, diameter_max: u32) -> Self {
        Self {
            diameter_min,
            diameter_max,
            size_min: None,
            size_max: None,
            prune_ap_plus_two: true,
            prune_symmetric: true,
            workers: 1,
            checkpoint_path: None,
        }
    }

    /// Verification mode: no prunes, so nothing is assumed about which sets
    /// can be sum-dominant.
    pub fn verification(diameter_min: u32, diameter_max: u32) -> Self {
        Self {
            prune_ap_plus_two: false,
            prune_symmetric: false,
            ..Self::discovery(diameter_min, diameter_max)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.diameter_min > self.diameter_max {
            return Err(Error::Config(format!(
                "diameter_min {} exceeds diameter_max {}",
                self.diameter_min, self.diameter_max
            )));
        }
        if self.diameter_max > MAX_DIAMETER {
            return Err(Error::Config(format!("diameter_max is limited to {MAX_DIAMETER}")));
        }
        if let (Some(lo), Some(hi)) = (self.size_min, self.size_max) {
            if lo > hi {
                return Err(Error::Config(format!("size_min {lo} exceeds size_max {hi}")));
            }
        }
        if self.workers == 0 {
            return Err(Error::Config("workers must be at least 1".into()));
        }
        Ok(())
    }

    /// Identifies the parameters that affect results (not workers or paths).
    pub fn key(&self) -> String {
        format!(
            "d{}-{}:s{}-{}:ap{}:sym{}",
            self.diameter_min,
            self.diameter_max,
            self.size_min.map_or("*".into(), |s| s.to_string()),
            self.size_max.map_or("*".into(), |s| s.to_string()),
            u8::from(self.prune_ap_plus_two),
            u8::from(self.prune_symmetric),
        )
    }
}

/// Outcome of one partition.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionTally {
    pub examined: u64,
    pub pruned: u64,
    pub sum_dominant: u64,
    pub min_mstd_size: Option<usize>,
    /// Sum-dominant sets of size `min_mstd_size`, in visiting order.
    pub witnesses: Vec<IntSet>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterTally {
    pub diameter: u32,
    pub examined: u64,
    pub pruned: u64,
    pub sum_dominant: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub diameter_min: u32,
    pub diameter_max: u32,
    pub min_mstd_size: Option<usize>,
    pub witnesses: Vec<IntSet>,
    pub witness_profiles: Vec<SetProfile>,
    pub sets_examined: u64,
    pub sets_pruned: u64,
    pub per_diameter: Vec<DiameterTally>,
}

impl SearchResult {
    pub fn summary(&self) -> String {
        let range = format!("diameter {}..={}", self.diameter_min, self.diameter_max);
        match self.min_mstd_size {
            None => format!(
                "no sum-dominant set ({range}; {} canonical sets examined, {} pruned)",
                self.sets_examined, self.sets_pruned
            ),
            Some(size) => {
                let list: Vec<String> = self
                    .witnesses
                    .iter()
                    .zip(&self.witness_profiles)
                    .map(|(w, p)| format!("{{{w}}} ({} sums vs {} differences)", p.sum_size, p.diff_size))
                    .collect();
                format!(
                    "smallest sum-dominant size {size} ({range}; {} canonical sets examined, {} pruned): {}",
                    self.sets_examined,
                    self.sets_pruned,
                    list.join(", ")
                )
            }
        }
    }
}

fn scan_partition(config: &SearchConfig, part: &Partition) -> PartitionTally {
    let mut t = PartitionTally::default();
    let mut buf = [0i64; 64];
    enumerate::for_each_raw(config, part, |c| {
        if !c.is_canonical() {
            return;
        }
        t.examined += 1;
        if config.prune_symmetric && c.is_symmetric() {
            t.pruned += 1;
            return;
        }
        if config.prune_ap_plus_two {
            let n = c.elements(&mut buf);
            if is_ap_plus_at_most_two(&buf[..n]) {
                t.pruned += 1;
                return;
            }
        }
        if kernel::mask_sum_size(c.mask) > kernel::mask_diff_size(c.mask) {
            t.sum_dominant += 1;
            let size = c.len();
            match t.min_mstd_size {
                Some(m) if m < size => {}
                Some(m) if m == size => t.witnesses.push(c.to_intset()),
                _ => {
                    t.min_mstd_size = Some(size);
                    t.witnesses = vec![c.to_intset()];
                }
            }
        }
    });
    t
}

/// Finds the smallest cardinality of a sum-dominant set among canonical
/// sets in the configured range, with every canonical witness of that size.
///
/// With a checkpoint path, partitions already recorded under the same
/// configuration are skipped and every newly finished partition is appended.
pub fn find_min_mstd(config: &SearchConfig) -> Result<SearchResult> {
    config.validate()?;
    let key = config.key();
    let parts = enumerate::partitions(config);
    let done = match &config.checkpoint_path {
        Some(p) => checkpoint::load(p, &key)?,
        None => Default::default(),
    };
    let writer = match &config.checkpoint_path {
        Some(p) => Some(checkpoint::CheckpointWriter::open(p)?),
        None => None,
    };
    let todo: Vec<Partition> = parts.iter().filter(|p| !done.contains_key(&p.id())).copied().collect();
    let fresh = enumerate::run_partitions(
        config,
        &todo,
        |p| scan_partition(config, p),
        |p, t| match &writer {
            Some(w) => w.append(&checkpoint::CheckpointRecord {
                partition_id: p.id(),
                diameter: p.diameter,
                tallies: t.clone(),
                config: key.clone(),
            }),
            None => Ok(()),
        },
    )?;
    let mut fresh = todo
        .iter()
        .map(|p| p.id())
        .zip(fresh)
        .collect::<std::collections::HashMap<_, _>>();

    let mut per_diameter: Vec<DiameterTally> = Vec::new();
    let mut min_size: Option<usize> = None;
    let mut witnesses: Vec<IntSet> = Vec::new();
    for part in &parts {
        let t = fresh
            .remove(&part.id())
            .or_else(|| done.get(&part.id()).cloned())
            .expect("every partition accounted for");
        match per_diameter.last_mut() {
            Some(d) if d.diameter == part.diameter => {
                d.examined += t.examined;
                d.pruned += t.pruned;
                d.sum_dominant += t.sum_dominant;
            }
            _ => per_diameter.push(DiameterTally {
                diameter: part.diameter,
                examined: t.examined,
                pruned: t.pruned,
                sum_dominant: t.sum_dominant,
            }),
        }
        if let Some(size) = t.min_mstd_size {
            match min_size {
                Some(m) if m < size => {}
                Some(m) if m == size => witnesses.extend(t.witnesses),
                _ => {
                    min_size = Some(size);
                    witnesses = t.witnesses;
                }
            }
        }
    }
    witnesses.sort_by(|a, b| a.elements().cmp(b.elements()));
    let witness_profiles = witnesses
        .iter()
        .map(|w| {
            let p = profile(w).expect("witnesses are nonempty");
            let (s, d) = naive::sizes(w.elements());
            assert!(
                p.class.is_sum_dominant() && s > d,
                "witness {{{w}}} failed re-classification"
            );
            p
        })
        .collect();
    Ok(SearchResult {
        diameter_min: config.diameter_min,
        diameter_max: config.diameter_max,
        min_mstd_size: min_size,
        witnesses,
        witness_profiles,
        sets_examined: per_diameter.iter().map(|d| d.examined).sum(),
        sets_pruned: per_diameter.iter().map(|d| d.pruned).sum(),
        per_diameter,
    })
}
