//! On-disk store of semistable series, one JSON file per recursion key.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::recursion::RecursionKey;
use crate::series::TruncatedSeries;

/// Bumped whenever the stored series would change meaning.
pub const CACHE_FORMAT_VERSION: u32 = 1;

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "REALBETTI_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub entries: usize,
    pub bytes: u64,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// Cache rooted at `$REALBETTI_CACHE_DIR`, if set and nonempty.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_DIR_ENV)
            .filter(|v| !v.is_empty())
            .map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &RecursionKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.canonical()))
    }

    /// Unreadable or corrupt entries count as misses.
    pub fn load(&self, key: &RecursionKey) -> Option<TruncatedSeries> {
        let text = fs::read_to_string(self.path_for(key)).ok()?;
        let series: TruncatedSeries = serde_json::from_str(&text).ok()?;
        (series.order() == key.order).then_some(series)
    }

    /// Writes through a temporary file and renames, so readers never see a
    /// partial entry.
    pub fn store(&self, key: &RecursionKey, series: &TruncatedSeries) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(key);
        let tmp = self
            .dir
            .join(format!(".{}.{}.tmp", key.canonical(), std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serde_json::to_string(series)?.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }

    fn entries(&self) -> Result<Vec<PathBuf>> {
        if !self.dir.exists() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for entry in fs::read_dir(&self.dir)? {
            let path = entry?.path();
            let is_entry = path
                .file_name()
                .and_then(|n| n.to_str())
                .is_some_and(|n| n.starts_with('g') && n.ends_with(".json"));
            if is_entry && path.is_file() {
                out.push(path);
            }
        }
        Ok(out)
    }

    pub fn stats(&self) -> Result<CacheStats> {
        let mut stats = CacheStats::default();
        for path in self.entries()? {
            stats.entries += 1;
            stats.bytes += fs::metadata(&path)?.len();
        }
        Ok(stats)
    }

    /// Removes cache entries only; other files in the directory are left alone.
    pub fn clear(&self) -> Result<usize> {
        let entries = self.entries()?;
        for path in &entries {
            fs::remove_file(path)?;
        }
        Ok(entries.len())
    }
}
