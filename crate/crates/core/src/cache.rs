//! On-disk cache of subgroup families: one hex bitset per line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::bitset::BitSet;
use crate::error::Result;
use crate::group::Subgroup;

#[derive(Clone, Debug)]
pub struct LatticeCache {
    dir: PathBuf,
}

impl LatticeCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        LatticeCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        let clean: String = key
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
            .collect();
        self.dir.join(format!("{clean}.txt"))
    }

    /// The cached family, or `None` when missing or unreadable.
    pub fn load(&self, key: &str, universe: usize) -> Option<Vec<Subgroup>> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let mut lines = text.lines();
        let header = lines.next()?;
        if header != format!("# universe={universe}") {
            return None;
        }
        lines
            .map(|l| BitSet::from_hex(universe, l.trim()).map(Subgroup::from_bits))
            .collect()
    }

    pub fn store(&self, key: &str, universe: usize, family: &[Subgroup]) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let target = self.path(key);
        let tmp = target.with_extension("tmp");
        let mut f = fs::File::create(&tmp)?;
        writeln!(f, "# universe={universe}")?;
        for s in family {
            writeln!(f, "{}", s.bits().to_hex())?;
        }
        f.sync_all()?;
        fs::rename(tmp, target)?;
        Ok(())
    }
}

/// Loads `key` from the cache if present, otherwise computes and stores it.
pub fn cached_family(
    cache: Option<&LatticeCache>,
    key: &str,
    universe: usize,
    compute: impl FnOnce() -> Result<Vec<Subgroup>>,
) -> Result<Vec<Subgroup>> {
    if let Some(c) = cache {
        if let Some(v) = c.load(key, universe) {
            return Ok(v);
        }
    }
    let v = compute()?;
    if let Some(c) = cache {
        c.store(key, universe, &v)?;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog_lookup;
    use crate::lattice::all_subgroups;

    #[test]
    fn round_trip_and_fallback() {
        let dir = tempfile::tempdir().unwrap();
        let cache = LatticeCache::new(dir.path());
        let g = catalog_lookup("D8").unwrap();
        let subs = all_subgroups(&g).unwrap();
        let got = cached_family(Some(&cache), "D8/all", 8, || Ok(subs.clone())).unwrap();
        assert_eq!(got, subs);
        let again = cached_family(Some(&cache), "D8/all", 8, || panic!("should hit the cache")).unwrap();
        assert_eq!(again, subs);
        // a different universe ignores the stale file
        let other = cached_family(Some(&cache), "D8/all", 16, || Ok(vec![])).unwrap();
        assert!(other.is_empty());
    }

    #[test]
    fn corrupt_file_is_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let cache = LatticeCache::new(dir.path());
        fs::write(dir.path().join("k.txt"), "# universe=4\nzz\n").unwrap();
        let s = Subgroup::whole(4);
        let got = cached_family(Some(&cache), "k", 4, || Ok(vec![s.clone()])).unwrap();
        assert_eq!(got, vec![s]);
    }
}
