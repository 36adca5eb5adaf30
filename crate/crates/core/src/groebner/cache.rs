//! Content-addressed memo of reduced Gröbner bases, in memory and optionally
//! on disk.
//!
//! Keys hash the field, variables, order and the sorted, deduplicated monic
//! generators. Disk entries hold the canonical text of the basis and a
//! checksum; an entry that fails to decode is ignored and recomputed.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use sha2::{Digest, Sha256};

use super::{buchberger, GroebnerBasis};
use crate::error::Result;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use crate::text;

/// Environment variable naming the on-disk cache directory.
pub const CACHE_DIR_ENV: &str = "SOCLE_LAB_CACHE_DIR";

const ENTRY_HEADER: &str = "socle-lab-gb/1";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CacheConfig {
    pub memory: bool,
    pub disk_dir: Option<PathBuf>,
}

fn config_cell() -> &'static RwLock<CacheConfig> {
    static CONFIG: OnceLock<RwLock<CacheConfig>> = OnceLock::new();
    CONFIG.get_or_init(|| RwLock::new(CacheConfig { memory: true, disk_dir: None }))
}

fn memo() -> &'static Mutex<HashMap<String, Arc<GroebnerBasis>>> {
    static MEMO: OnceLock<Mutex<HashMap<String, Arc<GroebnerBasis>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn configure(config: CacheConfig) {
    *config_cell().write().expect("cache config lock") = config;
}

pub fn config() -> CacheConfig {
    config_cell().read().expect("cache config lock").clone()
}

pub fn clear_memory() {
    memo().lock().expect("memo lock").clear();
}

/// `$SOCLE_LAB_CACHE_DIR`, else `$XDG_CACHE_HOME/socle-lab`, else `~/.cache/socle-lab`.
pub fn default_disk_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os(CACHE_DIR_ENV) {
        return Some(PathBuf::from(dir));
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(dir).join("socle-lab"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("socle-lab"))
}

/// Canonical problem text: ring id, then the sorted distinct monic generators.
pub fn canonical_problem(ring: &PolyRing, gens: &[Polynomial]) -> String {
    let mut rendered: Vec<String> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic().to_string())
        .collect();
    rendered.sort();
    rendered.dedup();
    format!("{}\n({})", ring.id(), rendered.join(", "))
}

pub fn problem_key(ring: &PolyRing, gens: &[Polynomial]) -> String {
    hex::encode(Sha256::digest(canonical_problem(ring, gens).as_bytes()))
}

/// Memoized [`buchberger`].
pub fn groebner_basis(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<Arc<GroebnerBasis>> {
    for g in gens {
        ring.check_same(g.ring())?;
    }
    let cfg = config();
    if !cfg.memory && cfg.disk_dir.is_none() {
        return Ok(Arc::new(buchberger(ring, gens)?));
    }
    let key = problem_key(ring, gens);
    if cfg.memory {
        if let Some(hit) = memo().lock().expect("memo lock").get(&key) {
            return Ok(hit.clone());
        }
    }
    let from_disk = cfg
        .disk_dir
        .as_deref()
        .and_then(|dir| read_entry(dir, &key, ring));
    let gb = match from_disk {
        Some(gb) => Arc::new(gb),
        None => {
            let gb = Arc::new(buchberger(ring, gens)?);
            if let Some(dir) = cfg.disk_dir.as_deref() {
                // a failed write only costs a recomputation later
                let _ = write_entry(dir, &key, &gb);
            }
            gb
        }
    };
    if cfg.memory {
        let mut map = memo().lock().expect("memo lock");
        return Ok(map.entry(key).or_insert(gb).clone());
    }
    Ok(gb)
}

/// Serialized cache entry for a basis.
pub fn encode_entry(key: &str, gb: &GroebnerBasis) -> String {
    let basis: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
    let body = format!(
        "{ENTRY_HEADER}\nkey {key}\nring {}\nbasis ({})\n",
        gb.ring().id(),
        basis.join(", ")
    );
    let check = hex::encode(Sha256::digest(body.as_bytes()));
    format!("{body}check {check}\n")
}

/// Parses an entry; `None` on any corruption, wrong key or wrong ring.
pub fn decode_entry(text: &str, key: &str, ring: &Arc<PolyRing>) -> Option<GroebnerBasis> {
    let (body, check_line) = text.strip_suffix('\n')?.rsplit_once('\n')?;
    let body = format!("{body}\n");
    let check = check_line.strip_prefix("check ")?;
    if hex::encode(Sha256::digest(body.as_bytes())) != check {
        return None;
    }
    let mut lines = body.lines();
    if lines.next()? != ENTRY_HEADER {
        return None;
    }
    if lines.next()?.strip_prefix("key ")? != key {
        return None;
    }
    if lines.next()?.strip_prefix("ring ")? != ring.id() {
        return None;
    }
    let basis_text = lines.next()?.strip_prefix("basis ")?;
    if lines.next().is_some() {
        return None;
    }
    let basis = text::parse_polynomial_list(ring, basis_text).ok()?;
    if basis.iter().any(|g| g.is_zero() || !ring.field().is_one(g.lc())) {
        return None;
    }
    let order = ring.order();
    if !basis.windows(2).all(|w| order.cmp(w[0].lm(), w[1].lm()).is_lt()) {
        return None;
    }
    Some(GroebnerBasis::from_reduced(ring, basis))
}

fn entry_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.gb"))
}

fn read_entry(dir: &Path, key: &str, ring: &Arc<PolyRing>) -> Option<GroebnerBasis> {
    let text = fs::read_to_string(entry_path(dir, key)).ok()?;
    decode_entry(&text, key, ring)
}

fn write_entry(dir: &Path, key: &str, gb: &GroebnerBasis) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(".{key}.{}.{}.tmp", std::process::id(), unique()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(encode_entry(key, gb).as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, entry_path(dir, key))
}

fn unique() -> u64 {
    use std::sync::atomic::{AtomicU64, Ordering};
    static COUNTER: AtomicU64 = AtomicU64::new(0);
    COUNTER.fetch_add(1, Ordering::Relaxed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;

    fn setup() -> (Arc<PolyRing>, Vec<Polynomial>) {
        let r = PolyRing::new(Field::Prime(101), &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        let gens = text::parse_polynomial_list(&r, "(x^2, x*y + y^2)").unwrap();
        (r, gens)
    }

    #[test]
    fn key_ignores_generator_order_and_scaling() {
        let (r, gens) = setup();
        let mut other: Vec<Polynomial> = gens.iter().rev().map(|g| g.scale(&r.field().from_i64(5))).collect();
        other.push(gens[0].clone());
        assert_eq!(problem_key(&r, &gens), problem_key(&r, &other));
    }

    #[test]
    fn entries_round_trip_and_reject_corruption() {
        let (r, gens) = setup();
        let gb = buchberger(&r, &gens).unwrap();
        let key = problem_key(&r, &gens);
        let text = encode_entry(&key, &gb);
        assert_eq!(decode_entry(&text, &key, &r), Some(gb));
        let corrupted = text.replacen("y^3", "y^4", 1);
        assert_eq!(decode_entry(&corrupted, &key, &r), None);
        assert_eq!(decode_entry(&text, "deadbeef", &r), None);
        assert_eq!(decode_entry("", &key, &r), None);
    }

    #[test]
    fn disk_entries_are_reused_and_corrupt_ones_recomputed() {
        let (r, gens) = setup();
        let dir = tempfile::tempdir().unwrap();
        let key = problem_key(&r, &gens);
        let gb = buchberger(&r, &gens).unwrap();
        write_entry(dir.path(), &key, &gb).unwrap();
        assert_eq!(read_entry(dir.path(), &key, &r), Some(gb));
        fs::write(entry_path(dir.path(), &key), "garbage").unwrap();
        assert_eq!(read_entry(dir.path(), &key, &r), None);
    }
}
