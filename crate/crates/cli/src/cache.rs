//! Content-addressed on-disk cache for computed series.
//!
//! An entry lives at `<dir>/<sha256 of key>.json` and records the engine
//! version, the key, a checksum of the payload and the payload itself as a
//! canonical JSON string. Any mismatch is treated as a miss.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use parking_lot::Mutex;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Bumped whenever the normal form or the series conventions change.
pub const ENGINE_VERSION: &str = concat!("superyangian-", env!("CARGO_PKG_VERSION"), "+nf1");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub m: usize,
    pub n: usize,
    pub p: u32,
    pub trunc: usize,
    pub name: String,
}

impl CacheKey {
    pub fn new(ctx: &superyangian::AlgebraContext, name: impl Into<String>) -> Self {
        CacheKey { m: ctx.m, n: ctx.n, p: ctx.p, trunc: ctx.trunc, name: name.into() }
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    version: String,
    key: CacheKey,
    checksum: String,
    payload: String,
}

fn sha_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub struct Cache {
    dir: PathBuf,
    version: String,
    writer: Mutex<()>,
}

impl Cache {
    pub fn open(dir: impl AsRef<Path>) -> io::Result<Self> {
        Self::with_version(dir, ENGINE_VERSION)
    }

    pub fn with_version(dir: impl AsRef<Path>, version: &str) -> io::Result<Self> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(Cache { dir: dir.as_ref().to_path_buf(), version: version.to_string(), writer: Mutex::new(()) })
    }

    /// File holding the entry for `key`.
    pub fn path(&self, key: &CacheKey) -> PathBuf {
        let id = format!("{}|{}|{}|{}|{}|{}", self.version, key.m, key.n, key.p, key.trunc, key.name);
        self.dir.join(format!("{}.json", sha_hex(id.as_bytes())))
    }

    /// The serialized payload stored for `key`, if present and intact.
    pub fn get_raw(&self, key: &CacheKey) -> Option<String> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let e: Entry = serde_json::from_str(&text).ok()?;
        if e.version != self.version || &e.key != key || e.checksum != sha_hex(e.payload.as_bytes()) {
            return None;
        }
        Some(e.payload)
    }

    pub fn get<T: DeserializeOwned>(&self, key: &CacheKey) -> Option<T> {
        serde_json::from_str(&self.get_raw(key)?).ok()
    }

    pub fn put<T: Serialize>(&self, key: &CacheKey, value: &T) -> io::Result<()> {
        let payload = serde_json::to_string(value)?;
        let entry = Entry { version: self.version.clone(), key: key.clone(), checksum: sha_hex(payload.as_bytes()), payload };
        let path = self.path(key);
        let tmp = path.with_extension("tmp");
        let _guard = self.writer.lock();
        fs::write(&tmp, serde_json::to_vec(&entry)?)?;
        fs::rename(tmp, path)
    }

    /// Cached value, or compute and store it.
    pub fn get_or_insert<T, E>(&self, key: &CacheKey, compute: impl FnOnce() -> Result<T, E>) -> Result<(T, bool), E>
    where
        T: Serialize + DeserializeOwned,
    {
        if let Some(v) = self.get(key) {
            return Ok((v, true));
        }
        let v = compute()?;
        // a failed write only costs a recompute next time
        let _ = self.put(key, &v);
        Ok((v, false))
    }
}
