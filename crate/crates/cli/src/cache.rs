//! On-disk report cache.
//!
//! Entries are keyed by the SHA-256 of (tool version, scenario name,
//! canonical params). Each entry file stores the SHA-256 of the report bytes
//! on its first line followed by the report itself; a mismatch on read
//! discards the entry. Writes go through a temporary file and an atomic
//! rename, and an existing entry is never overwritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::report::TOOL_VERSION;
use crate::{CliError, Scenario};

pub const CACHE_DIR_ENV: &str = "SPLINTER_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit(Vec<u8>),
    Miss,
    /// The stored entry failed its hash check and was removed.
    Corrupt,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

fn sha_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn cache_key(version: &str, scenario: &Scenario) -> String {
    let params = serde_json::to_string(&scenario.params.to_json()).expect("serializable");
    sha_hex(format!("{version}\n{}\n{params}", scenario.name).as_bytes())
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// Directory from the environment, else the per-user cache directory.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .or_else(|| dirs::cache_dir().map(|d| d.join("splinter")))
            .unwrap_or_else(|| std::env::temp_dir().join("splinter-cache"));
        Cache::new(dir)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.entry"))
    }

    pub fn key(&self, scenario: &Scenario) -> String {
        cache_key(TOOL_VERSION, scenario)
    }

    pub fn get(&self, key: &str) -> Result<CacheStatus, CliError> {
        let path = self.path(key);
        let raw = match fs::read(&path) {
            Ok(raw) => raw,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(CacheStatus::Miss),
            Err(e) => return Err(CliError::Io(e.to_string())),
        };
        let split = raw.iter().position(|&b| b == b'\n');
        let valid = split.and_then(|i| {
            let (head, body) = (&raw[..i], &raw[i + 1..]);
            (head == sha_hex(body).as_bytes()).then(|| body.to_vec())
        });
        match valid {
            Some(body) => Ok(CacheStatus::Hit(body)),
            None => {
                fs::remove_file(&path).map_err(|e| CliError::Io(e.to_string()))?;
                Ok(CacheStatus::Corrupt)
            }
        }
    }

    /// Stores `bytes` under `key` unless an entry already exists.
    pub fn put(&self, key: &str, bytes: &[u8]) -> Result<(), CliError> {
        let io = |e: std::io::Error| CliError::Io(e.to_string());
        fs::create_dir_all(&self.dir).map_err(io)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(io)?;
        tmp.write_all(sha_hex(bytes).as_bytes()).map_err(io)?;
        tmp.write_all(b"\n").map_err(io)?;
        tmp.write_all(bytes).map_err(io)?;
        match tmp.persist_noclobber(self.path(key)) {
            Ok(_) => Ok(()),
            Err(e) if e.error.kind() == std::io::ErrorKind::AlreadyExists => Ok(()),
            Err(e) => Err(io(e.error)),
        }
    }

    /// Removes every entry; returns how many were removed.
    pub fn clear(&self) -> Result<usize, CliError> {
        let io = |e: std::io::Error| CliError::Io(e.to_string());
        let entries = match fs::read_dir(&self.dir) {
            Ok(e) => e,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(io(e)),
        };
        let mut n = 0;
        for entry in entries {
            let path = entry.map_err(io)?.path();
            if path.extension().is_some_and(|x| x == "entry") {
                fs::remove_file(path).map_err(io)?;
                n += 1;
            }
        }
        Ok(n)
    }
}
