//! Result cache: one JSON object per line in `cache.jsonl`.
//!
//! Readers take a shared lock and writers an exclusive one, so concurrent
//! invocations never interleave partial lines.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

use crate::output::Output;

const FILE_NAME: &str = "cache.jsonl";
const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Search limits a result was computed under. `None` means unlimited.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Guards {
    pub node_limit: Option<u64>,
    pub time_limit: Option<f64>,
}

impl Guards {
    /// Whether a result computed under `self` may answer a query under
    /// `requested`: every limit must be at least as generous.
    pub fn dominates(&self, requested: &Guards) -> bool {
        fn at_least<T: PartialOrd>(stored: Option<T>, requested: Option<T>) -> bool {
            match (stored, requested) {
                (None, _) => true,
                (Some(_), None) => false,
                (Some(s), Some(r)) => s >= r,
            }
        }
        at_least(self.node_limit, requested.node_limit) && at_least(self.time_limit, requested.time_limit)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    key: String,
    guards: Guards,
    tool_version: String,
    value: Output,
}

pub struct Cache {
    path: PathBuf,
}

impl Cache {
    /// `$MAGICLAB_CACHE`, else `$XDG_CACHE_HOME/magiclab`, else
    /// `~/.cache/magiclab`.
    pub fn default_dir() -> Option<PathBuf> {
        if let Some(dir) = std::env::var_os("MAGICLAB_CACHE") {
            return Some(PathBuf::from(dir));
        }
        if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
            return Some(PathBuf::from(dir).join("magiclab"));
        }
        std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("magiclab"))
    }

    pub fn open(dir: &Path) -> Result<Cache> {
        fs::create_dir_all(dir).with_context(|| format!("creating cache directory {}", dir.display()))?;
        Ok(Cache {
            path: dir.join(FILE_NAME),
        })
    }

    pub fn lookup(&self, key: &str, requested: &Guards) -> Result<Option<Output>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e).context("opening cache"),
        };
        file.lock_shared().context("locking cache")?;
        let mut hit = None;
        for line in BufReader::new(&file).lines() {
            let line = line.context("reading cache")?;
            // a damaged line only costs a recomputation
            let Ok(entry) = serde_json::from_str::<Entry>(&line) else {
                continue;
            };
            if entry.key == key && entry.tool_version == TOOL_VERSION && entry.guards.dominates(requested) {
                hit = Some(entry.value);
            }
        }
        Ok(hit)
    }

    pub fn store(&self, key: &str, guards: Guards, value: &Output) -> Result<()> {
        let entry = Entry {
            key: key.to_string(),
            guards,
            tool_version: TOOL_VERSION.to_string(),
            value: value.clone(),
        };
        let mut line = serde_json::to_string(&entry)?;
        line.push('\n');
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .context("opening cache for append")?;
        file.lock().context("locking cache")?;
        file.write_all(line.as_bytes()).context("writing cache")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::output::Output;

    fn guards(node_limit: Option<u64>, time_limit: Option<f64>) -> Guards {
        Guards {
            node_limit,
            time_limit,
        }
    }

    #[test]
    fn domination() {
        let unlimited = guards(None, None);
        assert!(unlimited.dominates(&guards(Some(10), Some(1.0))));
        assert!(!guards(Some(10), None).dominates(&unlimited));
        assert!(guards(Some(10), None).dominates(&guards(Some(5), None)));
        assert!(!guards(Some(10), Some(1.0)).dominates(&guards(Some(5), Some(2.0))));
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let out = Output::new(serde_json::json!({"a": 1}), "a = 1".into());
        assert_eq!(cache.lookup("k", &guards(None, None)).unwrap(), None);
        cache.store("k", guards(Some(100), None), &out).unwrap();
        assert_eq!(cache.lookup("k", &guards(Some(50), None)).unwrap(), Some(out.clone()));
        assert_eq!(cache.lookup("k", &guards(None, None)).unwrap(), None);
        assert_eq!(cache.lookup("other", &guards(Some(1), None)).unwrap(), None);
    }
}
