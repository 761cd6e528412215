//! On-disk cache of structure constants, one JSON file per `(G, P)`.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::flag::FlagVariety;
use crate::json::JsonInt;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CacheEntry {
    pub u: String,
    pub v: String,
    pub w: String,
    pub c: JsonInt,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CacheFile {
    pub schema_version: u32,
    pub group: String,
    pub levi_simple: Vec<usize>,
    pub key: String,
    pub entries: Vec<CacheEntry>,
}

/// `FLAGCALC_CACHE_DIR`, else `$XDG_CACHE_HOME/flagcalc`, else
/// `$HOME/.cache/flagcalc`.
pub fn cache_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os("FLAGCALC_CACHE_DIR") {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(d).join("flagcalc"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("flagcalc"))
}

/// SHA-256 over the type, rank and `Δ(P)`.
pub fn content_key(fv: &FlagVariety) -> String {
    let g = fv.group_type();
    let levi: Vec<String> = fv.parabolic().levi_simple.iter().map(|i| i.to_string()).collect();
    let text = format!("type={};rank={};levi={}", g.letter, g.rank, levi.join(","));
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn cache_path(dir: &Path, fv: &FlagVariety) -> PathBuf {
    let key = content_key(fv);
    dir.join(format!("{}-{}.json", fv.group_type(), &key[..16]))
}

/// Serializes every cached product of `fv`.
pub fn snapshot(fv: &FlagVariety) -> CacheFile {
    let mut entries = Vec::new();
    for (u, v, terms) in fv.schubert().cached_products() {
        for (w, c) in terms {
            entries.push(CacheEntry {
                u: fv.word(u),
                v: fv.word(v),
                w: fv.word(w),
                c: JsonInt(c),
            });
        }
    }
    CacheFile {
        schema_version: SCHEMA_VERSION,
        group: fv.group_type().to_string(),
        levi_simple: fv.parabolic().levi_simple.clone(),
        key: content_key(fv),
        entries,
    }
}

/// Seeds `fv` from a cache file; returns the number of products loaded.
/// Files with a different schema or key, or that fail to parse, are ignored.
pub fn load(fv: &FlagVariety, dir: &Path) -> usize {
    let Ok(text) = fs::read_to_string(cache_path(dir, fv)) else {
        return 0;
    };
    let Ok(file) = serde_json::from_str::<CacheFile>(&text) else {
        return 0;
    };
    if file.schema_version != SCHEMA_VERSION
        || file.key != content_key(fv)
        || file.group != fv.group_type().to_string()
        || file.levi_simple != fv.parabolic().levi_simple
    {
        return 0;
    }
    let mut grouped: std::collections::BTreeMap<(usize, usize), Vec<(usize, BigInt)>> = Default::default();
    for e in &file.entries {
        let (Ok(u), Ok(v), Ok(w)) = (fv.find(&e.u), fv.find(&e.v), fv.find(&e.w)) else {
            return 0;
        };
        grouped.entry((u, v)).or_default().push((w, e.c.0.clone()));
    }
    let n = grouped.len();
    for ((u, v), terms) in grouped {
        fv.schubert().insert_structure_constants(u, v, terms);
    }
    n
}

/// Writes the cache file for `fv` (via a temporary file and rename).
pub fn save(fv: &FlagVariety, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, fv);
    let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
    fs::write(&tmp, serde_json::to_string(&snapshot(fv))?)?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_key_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let fv = FlagVariety::new("C3", &[2]).unwrap();
        let w1 = fv.find("1,3,2,1,3,2").unwrap();
        let w3 = fv.find("3,2").unwrap();
        let expect = fv.schubert().intersection_number(&[w1, w1, w3]).unwrap();
        save(&fv, dir.path()).unwrap();

        let warm = FlagVariety::new("C3", &[2]).unwrap();
        assert!(load(&warm, dir.path()) > 0);
        assert_eq!(snapshot(&warm), snapshot(&fv));
        assert_eq!(warm.schubert().intersection_number(&[w1, w1, w3]).unwrap(), expect);

        // a file for another parabolic is never picked up
        let other = FlagVariety::new("C3", &[1]).unwrap();
        assert_ne!(content_key(&other), content_key(&fv));
        assert_eq!(load(&other, dir.path()), 0);

        // tampered schema is ignored
        let path = cache_path(dir.path(), &fv);
        let text = fs::read_to_string(&path).unwrap().replace("\"schema_version\":1", "\"schema_version\":99");
        fs::write(&path, text).unwrap();
        let cold = FlagVariety::new("C3", &[2]).unwrap();
        assert_eq!(load(&cold, dir.path()), 0);
    }
}
