//! Append-only regularity cache.
//!
//! Stores computed regularities (or the reason a computation was skipped)
//! keyed by graph content hash, power `s`, field characteristic, tool
//! version, and which power was resolved (`symbolic` or `ordinary`). The
//! backing file is JSON Lines: loading replays the log with last-entry-wins,
//! and every fresh result is appended by the single driver thread, so a
//! cache directory can be reused and even shared across sweeps.
//!
//! The cache location comes from an explicit directory (CLI `--cache-dir`)
//! or the `CWREG_CACHE_DIR` environment variable; with neither, caching is
//! disabled and every call recomputes.

use std::collections::HashMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

const CACHE_FILE: &str = "cache.jsonl";
pub const CACHE_ENV_VAR: &str = "CWREG_CACHE_DIR";

/// Which regularity a cache entry records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PowerKind {
    Symbolic,
    Ordinary,
}

/// A finished computation: either a regularity value or the sanitized reason
/// the row was skipped (caps are deterministic, so skips replay faithfully).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CachedValue {
    Reg(usize),
    Skip(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CacheLine {
    edge_hash: String,
    s: i64,
    field_char: u64,
    version: String,
    kind: PowerKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    reg: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    skip: Option<String>,
}

type Key = (String, i64, u64, PowerKind);

#[derive(Debug)]
pub struct Cache {
    path: Option<PathBuf>,
    map: HashMap<Key, CachedValue>,
    hits: u64,
    misses: u64,
}

impl Cache {
    /// A cache that never stores anything.
    pub fn disabled() -> Self {
        Cache { path: None, map: HashMap::new(), hits: 0, misses: 0 }
    }

    /// Opens (creating if needed) the cache under `dir`, falling back to the
    /// `CWREG_CACHE_DIR` environment variable; disabled if neither is set.
    /// Malformed lines and entries from other tool versions are ignored.
    pub fn open(dir: Option<&Path>) -> std::io::Result<Self> {
        let dir = match dir {
            Some(d) => d.to_path_buf(),
            None => match std::env::var_os(CACHE_ENV_VAR) {
                Some(v) if !v.is_empty() => PathBuf::from(v),
                _ => return Ok(Self::disabled()),
            },
        };
        fs::create_dir_all(&dir)?;
        let path = dir.join(CACHE_FILE);
        let mut map = HashMap::new();
        if path.exists() {
            let version = env!("CARGO_PKG_VERSION");
            for line in fs::read_to_string(&path)?.lines() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let Ok(entry) = serde_json::from_str::<CacheLine>(line) else { continue };
                if entry.version != version {
                    continue;
                }
                let value = match (entry.reg, entry.skip) {
                    (Some(r), _) => CachedValue::Reg(r),
                    (None, Some(reason)) => CachedValue::Skip(reason),
                    (None, None) => continue,
                };
                map.insert((entry.edge_hash, entry.s, entry.field_char, entry.kind), value);
            }
        }
        Ok(Cache { path: Some(path), map, hits: 0, misses: 0 })
    }

    pub fn is_enabled(&self) -> bool {
        self.path.is_some()
    }

    pub fn get(
        &mut self,
        edge_hash: &str,
        s: i64,
        field_char: u64,
        kind: PowerKind,
    ) -> Option<CachedValue> {
        if self.path.is_none() {
            return None;
        }
        let found = self.map.get(&(edge_hash.to_string(), s, field_char, kind)).cloned();
        if found.is_some() {
            self.hits += 1;
        } else {
            self.misses += 1;
        }
        found
    }

    /// Records a result, appending it to the backing file.
    pub fn put(
        &mut self,
        edge_hash: &str,
        s: i64,
        field_char: u64,
        kind: PowerKind,
        value: CachedValue,
    ) -> std::io::Result<()> {
        let Some(path) = &self.path else { return Ok(()) };
        let (reg, skip) = match &value {
            CachedValue::Reg(r) => (Some(*r), None),
            CachedValue::Skip(reason) => (None, Some(reason.clone())),
        };
        let line = CacheLine {
            edge_hash: edge_hash.to_string(),
            s,
            field_char,
            version: env!("CARGO_PKG_VERSION").to_string(),
            kind,
            reg,
            skip,
        };
        let mut file = fs::OpenOptions::new().create(true).append(true).open(path)?;
        writeln!(file, "{}", serde_json::to_string(&line).expect("cache line serializes"))?;
        self.map.insert((edge_hash.to_string(), s, field_char, kind), value);
        Ok(())
    }

    /// `(hits, misses)` counters for the current process.
    pub fn stats(&self) -> (u64, u64) {
        (self.hits, self.misses)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disabled_cache_stores_nothing() {
        let mut c = Cache::disabled();
        assert!(!c.is_enabled());
        c.put("abc", 1, 0, PowerKind::Symbolic, CachedValue::Reg(3)).unwrap();
        assert_eq!(c.get("abc", 1, 0, PowerKind::Symbolic), None);
    }

    #[test]
    fn put_then_reload_roundtrips_and_last_entry_wins() {
        let dir = tempfile::tempdir().unwrap();
        let mut c = Cache::open(Some(dir.path())).unwrap();
        assert!(c.is_enabled());
        c.put("h1", 2, 0, PowerKind::Symbolic, CachedValue::Reg(5)).unwrap();
        c.put("h1", 2, 0, PowerKind::Symbolic, CachedValue::Reg(6)).unwrap();
        c.put("h1", 2, 0, PowerKind::Ordinary, CachedValue::Reg(7)).unwrap();
        c.put("h2", 3, 2, PowerKind::Symbolic, CachedValue::Skip("cap".into())).unwrap();

        let mut reloaded = Cache::open(Some(dir.path())).unwrap();
        assert_eq!(
            reloaded.get("h1", 2, 0, PowerKind::Symbolic),
            Some(CachedValue::Reg(6)),
            "later append overrides earlier one"
        );
        assert_eq!(reloaded.get("h1", 2, 0, PowerKind::Ordinary), Some(CachedValue::Reg(7)));
        assert_eq!(
            reloaded.get("h2", 3, 2, PowerKind::Symbolic),
            Some(CachedValue::Skip("cap".into()))
        );
        assert_eq!(reloaded.get("h1", 3, 0, PowerKind::Symbolic), None);
        assert_eq!(reloaded.stats(), (3, 1));
    }

    #[test]
    fn entries_from_other_versions_and_junk_lines_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(CACHE_FILE);
        std::fs::write(
            &path,
            format!(
                "not json at all\n\
                 {{\"edge_hash\":\"h\",\"s\":1,\"field_char\":0,\"version\":\"0.0.0-other\",\"kind\":\"symbolic\",\"reg\":9}}\n\
                 {{\"edge_hash\":\"h\",\"s\":1,\"field_char\":0,\"version\":\"{}\",\"kind\":\"symbolic\",\"reg\":4}}\n",
                env!("CARGO_PKG_VERSION")
            ),
        )
        .unwrap();
        let mut c = Cache::open(Some(dir.path())).unwrap();
        assert_eq!(c.get("h", 1, 0, PowerKind::Symbolic), Some(CachedValue::Reg(4)));
    }

    #[test]
    fn environment_variable_supplies_the_directory() {
        let dir = tempfile::tempdir().unwrap();
        std::env::set_var(CACHE_ENV_VAR, dir.path());
        let mut c = Cache::open(None).unwrap();
        assert!(c.is_enabled());
        c.put("h", 1, 0, PowerKind::Symbolic, CachedValue::Reg(2)).unwrap();
        std::env::remove_var(CACHE_ENV_VAR);
        assert!(dir.path().join(CACHE_FILE).exists());
        let disabled = Cache::open(None).unwrap();
        assert!(!disabled.is_enabled());
    }
}
