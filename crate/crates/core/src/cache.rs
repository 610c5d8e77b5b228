//! On-disk cache of character tables, one JSON file per `n`:
//! `<dir>/chartable_v<schema>_<n>.json`.
//!
//! Character values are written as decimal strings. Files from another
//! schema version are rebuilt; any other malformed file is an error.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mn::{CharTable, MnEngine};
use crate::partition::Partition;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct TableFile {
    schema_version: u32,
    n: usize,
    order: Vec<Vec<usize>>,
    values: Vec<String>,
}

/// Serializes a table in the cache schema. Output is deterministic.
pub fn table_to_json(table: &CharTable) -> String {
    let file = TableFile {
        schema_version: SCHEMA_VERSION,
        n: table.n(),
        order: table.order().iter().map(|p| p.parts().to_vec()).collect(),
        values: table.values().iter().map(|v| v.to_string()).collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("table serializes");
    s.push('\n');
    s
}

/// Parses a table written by [`table_to_json`]. The error string describes
/// what is wrong.
pub fn table_from_json(text: &str) -> std::result::Result<CharTable, String> {
    let file: TableFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if file.schema_version != SCHEMA_VERSION {
        return Err(format!(
            "schema version {} (expected {SCHEMA_VERSION})",
            file.schema_version
        ));
    }
    let order = file
        .order
        .into_iter()
        .map(|parts| Partition::new(parts).map_err(|e| e.to_string()))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let values = file
        .values
        .iter()
        .map(|s| s.parse::<BigInt>().map_err(|e| format!("value {s:?}: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    CharTable::from_parts(file.n, order, values).map_err(|e| e.to_string())
}

fn schema_version_of(text: &str) -> Option<u64> {
    let v: serde_json::Value = serde_json::from_str(text).ok()?;
    v.get("schema_version")?.as_u64()
}

/// Directory of cached tables.
#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, n: usize) -> PathBuf {
        self.dir.join(format!("chartable_v{SCHEMA_VERSION}_{n}.json"))
    }

    /// `Ok(None)` when there is no usable entry (missing, or written with a
    /// different schema version).
    pub fn load(&self, n: usize) -> Result<Option<CharTable>> {
        let path = self.path(n);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let corrupt = |reason: String| Error::CorruptCache {
            path: path.display().to_string(),
            reason,
        };
        match schema_version_of(&text) {
            Some(v) if v == SCHEMA_VERSION as u64 => {}
            Some(_) => return Ok(None),
            None => return Err(corrupt("missing or unreadable schema_version".into())),
        }
        let table = table_from_json(&text).map_err(corrupt)?;
        if table.n() != n {
            return Err(corrupt(format!("file holds n = {}", table.n())));
        }
        Ok(Some(table))
    }

    pub fn store(&self, table: &CharTable) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(table.n());
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, table_to_json(table))?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Cached table for `n`, computing and storing it on a miss.
    pub fn load_or_build(&self, engine: &MnEngine, n: usize, workers: usize) -> Result<CharTable> {
        if let Some(t) = self.load(n)? {
            return Ok(t);
        }
        let table = engine.table(n, workers)?;
        self.store(&table)?;
        Ok(table)
    }
}
