//! Persistent cache of computed basis elements: one content-addressed file
//! per record, written by atomic rename; corrupt records are rejected whole.

use crate::CmdError;
use pkl_core::coxeter::CoxeterSystem;
use pkl_core::soergel::gram::Mode;
use pkl_core::soergel::pcan::PCanonicalEntry;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

#[derive(Serialize, Deserialize)]
struct CacheRecord {
    key: String,
    value: PCanonicalEntry,
    checksum: String,
}

fn key_string(sys: &CoxeterSystem, mode: Mode, word: &[u8]) -> String {
    let kind = match sys.kind {
        pkl_core::coxeter::CoxKind::Finite => "finite",
        pkl_core::coxeter::CoxKind::Affine => "affine",
    };
    let p = match mode {
        Mode::Rational => "rational".to_string(),
        Mode::Prime(p) => p.to_string(),
    };
    let w: Vec<String> = word.iter().map(|g| g.to_string()).collect();
    format!("{}:{}:{}:{}", kind, sys.rank, p, w.join("."))
}

fn record_path(dir: &str, key: &str) -> PathBuf {
    let hash = hex_digest(key.as_bytes());
    Path::new(dir).join(format!("{}.json", hash))
}

fn hex_digest(data: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(data);
    h.finalize().iter().map(|b| format!("{:02x}", b)).collect()
}

fn value_checksum(value: &PCanonicalEntry) -> String {
    hex_digest(serde_json::to_string(value).unwrap().as_bytes())
}

pub fn lookup(
    dir: &str,
    sys: &CoxeterSystem,
    mode: Mode,
    w: &pkl_core::coxeter::CoxeterElement,
) -> Result<Option<PCanonicalEntry>, CmdError> {
    let key = key_string(sys, mode, w.word());
    let path = record_path(dir, &key);
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(&path)
        .map_err(|e| CmdError::CacheCorrupt(format!("{}: {}", path.display(), e)))?;
    let rec: CacheRecord = serde_json::from_str(&text)
        .map_err(|e| CmdError::CacheCorrupt(format!("{}: {}", path.display(), e)))?;
    if rec.key != key {
        return Err(CmdError::CacheCorrupt(format!(
            "{}: key mismatch",
            path.display()
        )));
    }
    if value_checksum(&rec.value) != rec.checksum {
        return Err(CmdError::CacheCorrupt(format!(
            "{}: checksum mismatch",
            path.display()
        )));
    }
    Ok(Some(rec.value))
}

pub fn store(
    dir: &str,
    sys: &CoxeterSystem,
    mode: Mode,
    entry: &PCanonicalEntry,
) -> Result<(), CmdError> {
    std::fs::create_dir_all(dir)
        .map_err(|e| CmdError::CacheCorrupt(format!("create {}: {}", dir, e)))?;
    let key = key_string(sys, mode, &entry.word);
    let rec = CacheRecord {
        key: key.clone(),
        checksum: value_checksum(entry),
        value: entry.clone(),
    };
    let path = record_path(dir, &key);
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    std::fs::write(&tmp, serde_json::to_string(&rec).unwrap())
        .map_err(|e| CmdError::CacheCorrupt(format!("write {}: {}", tmp.display(), e)))?;
    std::fs::rename(&tmp, &path)
        .map_err(|e| CmdError::CacheCorrupt(format!("rename {}: {}", path.display(), e)))?;
    Ok(())
}
