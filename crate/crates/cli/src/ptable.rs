//! p(n) table cache: load a valid cache that covers the requested size, or
//! rebuild and rewrite it. A corrupt or truncated cache file is never
//! trusted; an unwritable path degrades to in-memory with a warning.

use std::fs::File;
use std::path::{Path, PathBuf};

use twocolor::partition::{p_table, CountTable};

/// Cache file resolution: the `--cache` flag wins, then the
/// `TWOCOLOR_CACHE_DIR` environment variable (file `ptable.txt` inside it),
/// else no cache at all.
fn resolve_path(flag: Option<&Path>) -> Option<PathBuf> {
    flag.map(PathBuf::from).or_else(|| {
        std::env::var_os("TWOCOLOR_CACHE_DIR")
            .map(|dir| PathBuf::from(dir).join("ptable.txt"))
    })
}

pub fn load_or_build(flag: Option<&Path>, needed: u64) -> Result<CountTable, String> {
    let Some(path) = resolve_path(flag) else {
        return Ok(p_table(needed));
    };
    if let Ok(file) = File::open(&path) {
        match CountTable::read_from(file) {
            Ok(table) if table.n_max() >= needed => return Ok(table),
            Ok(_) => {} // valid but too small: rebuild and rewrite
            Err(e) => {
                eprintln!("warning: ignoring corrupt cache {}: {e}", path.display());
            }
        }
    }
    let table = p_table(needed);
    if let Err(e) = write_cache(&path, &table) {
        eprintln!(
            "warning: cache {} is not writable ({e}); continuing in memory",
            path.display()
        );
    }
    Ok(table)
}

fn write_cache(path: &Path, table: &CountTable) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    let mut file = File::create(path)?;
    table.write_to(&mut file)
}
