//! On-disk memo of computed polynomials, one JSON file per entry.

use std::fs;
use std::path::{Path, PathBuf};

use eqkl::GradedSchur;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Bumped whenever a change could alter cached values.
const KERNEL_REVISION: &str = "1";

/// Short hash identifying the computation kernel.
pub fn kernel_version() -> String {
    let digest = Sha256::digest(format!("eqkl-core {} rev {KERNEL_REVISION}", env!("CARGO_PKG_VERSION")));
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// `$EQKL_CACHE`, else `$XDG_CACHE_HOME/eqkl`, else `~/.cache/eqkl`.
pub fn default_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os("EQKL_CACHE") {
        return Some(PathBuf::from(dir));
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(dir).join("eqkl"));
    }
    std::env::var_os("HOME").map(|home| PathBuf::from(home).join(".cache").join("eqkl"))
}

#[derive(Serialize, Deserialize)]
struct Entry {
    family: String,
    params: String,
    kernel: String,
    value: GradedSchur,
}

pub struct Cache {
    dir: Option<PathBuf>,
}

#[derive(Debug, PartialEq, Eq)]
pub struct Stats {
    pub entries: usize,
    pub bytes: u64,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Self { dir }
    }

    pub fn disabled() -> Self {
        Self { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path(&self, family: &str, params: &str) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        Some(dir.join(format!("{family}-{params}-{}.json", kernel_version())))
    }

    /// Cached value, if present and readable; anything else is a miss.
    pub fn get(&self, family: &str, params: &str) -> Option<GradedSchur> {
        let text = fs::read_to_string(self.path(family, params)?).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        (entry.family == family && entry.params == params && entry.kernel == kernel_version()).then_some(entry.value)
    }

    /// Best effort: failures to write only cost a recomputation later.
    pub fn put(&self, family: &str, params: &str, value: &GradedSchur) {
        let (Some(dir), Some(path)) = (self.dir.as_ref(), self.path(family, params)) else {
            return;
        };
        let entry = Entry {
            family: family.to_string(),
            params: params.to_string(),
            kernel: kernel_version(),
            value: value.clone(),
        };
        let Ok(text) = serde_json::to_string(&entry) else {
            return;
        };
        if fs::create_dir_all(dir).is_ok() {
            let tmp = path.with_extension("tmp");
            if fs::write(&tmp, text).is_ok() {
                let _ = fs::rename(&tmp, &path);
            }
        }
    }

    /// Look up `family/params`, computing and storing it on a miss.
    pub fn get_or_compute<E>(
        &self,
        family: &str,
        params: &str,
        compute: impl FnOnce() -> Result<GradedSchur, E>,
    ) -> Result<GradedSchur, E> {
        if let Some(hit) = self.get(family, params) {
            return Ok(hit);
        }
        let value = compute()?;
        self.put(family, params, &value);
        Ok(value)
    }

    fn entries(&self) -> Vec<PathBuf> {
        let Some(dir) = &self.dir else {
            return Vec::new();
        };
        let Ok(read) = fs::read_dir(dir) else {
            return Vec::new();
        };
        let mut out: Vec<PathBuf> = read
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        out.sort();
        out
    }

    pub fn stats(&self) -> Stats {
        let entries = self.entries();
        let bytes = entries
            .iter()
            .filter_map(|p| fs::metadata(p).ok())
            .map(|m| m.len())
            .sum();
        Stats {
            entries: entries.len(),
            bytes,
        }
    }

    /// Remove every entry; returns how many were removed.
    pub fn clear(&self) -> std::io::Result<usize> {
        let entries = self.entries();
        for p in &entries {
            fs::remove_file(p)?;
        }
        Ok(entries.len())
    }
}
