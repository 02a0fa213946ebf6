//! Interrupt a search, then resume it from its checkpoint file.

use std::fs;

use mstd::{find_min_mstd, SearchConfig};

fn main() -> mstd::Result<()> {
    let path = std::env::temp_dir().join("mstd-resume-example.jsonl");
    let _ = fs::remove_file(&path);
    let mut config = SearchConfig::discovery(0, 18);
    config.checkpoint_path = Some(path.clone());
    config.workers = 2;

    let full = find_min_mstd(&config)?;
    let lines: Vec<String> = fs::read_to_string(&path)?.lines().map(String::from).collect();
    println!("{} partitions recorded", lines.len());

    // simulate a crash partway through a write
    let mut cut = lines[..lines.len() / 3].join("\n");
    cut.push_str("\n{\"partition_id\":");
    fs::write(&path, cut)?;

    let resumed = find_min_mstd(&config)?;
    println!("resumed: {}", resumed.summary());
    println!("identical to the uninterrupted run: {}", resumed == full);
    fs::remove_file(&path)?;
    Ok(())
}
