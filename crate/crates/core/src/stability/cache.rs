use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::PowerEntry;
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Bumped whenever the fingerprint or the slice engine changes meaning.
pub const CACHE_SCHEMA: &str = "plactic-fingerprint-v1";

static TMP_SEQ: AtomicU64 = AtomicU64::new(0);

#[derive(Serialize, Deserialize)]
struct Record {
    schema: String,
    base_word: Word,
    power: usize,
    max_len: usize,
    alphabet: Letter,
    entry: PowerEntry,
}

/// On-disk store of per-power fingerprints keyed by `(u, k, L, M)`.
#[derive(Clone, Debug)]
pub struct FingerprintCache {
    dir: PathBuf,
}

impl FingerprintCache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref().join(CACHE_SCHEMA);
        fs::create_dir_all(&dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
        Ok(FingerprintCache { dir })
    }

    fn path(&self, u: &Word, k: usize, max_len: usize, alphabet: Letter) -> PathBuf {
        let key = format!("{CACHE_SCHEMA}|{u}|{k}|{max_len}|{alphabet}");
        let digest = Sha256::digest(key.as_bytes());
        let name: String = digest.iter().take(16).map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{name}.json"))
    }

    /// Missing, unreadable or mismatched records are treated as misses.
    pub fn get(&self, u: &Word, k: usize, max_len: usize, alphabet: Letter) -> Option<PowerEntry> {
        let text = fs::read_to_string(self.path(u, k, max_len, alphabet)).ok()?;
        let rec: Record = serde_json::from_str(&text).ok()?;
        let matches = rec.schema == CACHE_SCHEMA
            && &rec.base_word == u
            && rec.power == k
            && rec.max_len == max_len
            && rec.alphabet == alphabet;
        matches.then_some(rec.entry)
    }

    pub fn put(&self, u: &Word, k: usize, max_len: usize, alphabet: Letter, entry: &PowerEntry) -> Result<()> {
        let rec = Record {
            schema: CACHE_SCHEMA.to_string(),
            base_word: u.clone(),
            power: k,
            max_len,
            alphabet,
            entry: entry.clone(),
        };
        let target = self.path(u, k, max_len, alphabet);
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", target.display()));
        let json = serde_json::to_vec(&rec).map_err(|e| Error::Cache(e.to_string()))?;
        let seq = TMP_SEQ.fetch_add(1, Ordering::Relaxed);
        let tmp = target.with_extension(format!("tmp{}-{seq}", std::process::id()));
        let mut file = fs::File::create(&tmp).map_err(io)?;
        file.write_all(&json).map_err(io)?;
        file.sync_all().map_err(io)?;
        fs::rename(&tmp, &target).map_err(io)?;
        Ok(())
    }
}
