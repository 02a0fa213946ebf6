//! Line-delimited JSON checkpoints: one record per completed partition.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::PartitionTally;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckpointRecord {
    pub partition_id: u64,
    pub diameter: u32,
    pub tallies: PartitionTally,
    /// Search parameters the record was produced under; records from a
    /// different configuration are ignored on resume.
    pub config: String,
}

/// Reads completed partitions from `path`. A missing file is an empty
/// checkpoint, and a torn final line (interrupted write) is dropped.
pub fn load(path: &Path, config_key: &str) -> Result<HashMap<u64, PartitionTally>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(HashMap::new()),
        Err(e) => return Err(e.into()),
    };
    let lines: Vec<String> = BufReader::new(file).lines().collect::<std::io::Result<_>>()?;
    let mut done = HashMap::new();
    let last = lines.len().saturating_sub(1);
    for (i, line) in lines.iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<CheckpointRecord>(line) {
            Ok(rec) if rec.config == config_key => {
                done.insert(rec.partition_id, rec.tallies);
            }
            Ok(_) => {}
            Err(_) if i == last => {}
            Err(e) => {
                return Err(Error::Checkpoint {
                    path: path.to_path_buf(),
                    message: format!("line {}: {e}", i + 1),
                })
            }
        }
    }
    Ok(done)
}

/// Appends records, one flushed line each, from any number of threads.
pub struct CheckpointWriter {
    path: PathBuf,
    file: Mutex<File>,
}

impl CheckpointWriter {
    /// Opens `path` for appending, first cutting off a torn final line so
    /// new records start on a fresh line.
    pub fn open(path: &Path) -> Result<Self> {
        match std::fs::read(path) {
            Ok(bytes) if bytes.last().is_some_and(|&b| b != b'\n') => {
                let keep = bytes.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
                OpenOptions::new().write(true).open(path)?.set_len(keep as u64)?;
            }
            Ok(_) => {}
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(e.into()),
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(Self {
            path: path.to_path_buf(),
            file: Mutex::new(file),
        })
    }

    pub fn append(&self, record: &CheckpointRecord) -> Result<()> {
        let mut line = serde_json::to_string(record)?;
        line.push('\n');
        let mut file = self.file.lock().expect("checkpoint lock poisoned");
        file.write_all(line.as_bytes())
            .and_then(|_| file.flush())
            .map_err(|e| Error::Checkpoint {
                path: self.path.clone(),
                message: e.to_string(),
            })
    }
}
