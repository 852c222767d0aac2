//! Content-addressed factorization cache: one file per (ring, subject,
//! bounds) under a hash-named path, written via a temporary file and rename
//! so concurrent suite runs never observe torn writes.

use crate::error::Result;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

/// Serialized factorization result as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedFactorizations {
    pub ring: String,
    pub subject: String,
    pub deg_bound: usize,
    pub len_cap: usize,
    /// isomorphism classes: one factorization per class, factors in text form
    pub classes: Vec<Vec<String>>,
    pub cap_hit: bool,
}

pub struct FactorCache {
    dir: PathBuf,
}

impl FactorCache {
    pub fn new(dir: impl Into<PathBuf>) -> FactorCache {
        FactorCache { dir: dir.into() }
    }

    fn path(&self, ring: &str, subject: &str, deg_bound: usize, len_cap: usize) -> PathBuf {
        let mut h = Sha256::new();
        h.update(ring.as_bytes());
        h.update([0]);
        h.update(subject.as_bytes());
        h.update([0]);
        h.update(deg_bound.to_le_bytes());
        h.update(len_cap.to_le_bytes());
        let hex: String = h
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        self.dir.join(format!("{hex}.json"))
    }

    pub fn load(
        &self,
        ring: &str,
        subject: &str,
        deg_bound: usize,
        len_cap: usize,
    ) -> Option<CachedFactorizations> {
        let path = self.path(ring, subject, deg_bound, len_cap);
        let data = std::fs::read(path).ok()?;
        serde_json::from_slice(&data).ok()
    }

    pub fn store(&self, value: &CachedFactorizations) -> Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let path = self.path(&value.ring, &value.subject, value.deg_bound, value.len_cap);
        let tmp = tmp_sibling(&path);
        std::fs::write(&tmp, serde_json::to_vec_pretty(value)?)?;
        std::fs::rename(&tmp, &path)?;
        Ok(())
    }
}

fn tmp_sibling(path: &Path) -> PathBuf {
    let mut name = path.file_name().unwrap().to_os_string();
    name.push(format!(".tmp{}", std::process::id()));
    path.with_file_name(name)
}
