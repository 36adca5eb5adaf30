#![no_main]
use std::sync::{Arc, OnceLock};

use libfuzzer_sys::fuzz_target;
use sha2::{Digest, Sha256};
use socle_lab::groebner::cache::{decode_entry, encode_entry};
use socle_lab::text::parse_ring_spec;
use socle_lab::{Field, MonomialOrder, PolyRing};

fn fallback() -> &'static Arc<PolyRing> {
    static RING: OnceLock<Arc<PolyRing>> = OnceLock::new();
    RING.get_or_init(|| PolyRing::new(Field::Prime(101), &["x", "y"], MonomialOrder::DegRevLex).unwrap())
}

/// The ring named by the entry itself, so every seed reaches the basis
/// parser. Relations are refused: they would trigger a Gröbner computation.
fn ring_of(text: &str) -> Arc<PolyRing> {
    text.lines()
        .find_map(|l| l.strip_prefix("ring "))
        .filter(|spec| !spec.contains('/') && spec.len() < 200)
        .and_then(|spec| parse_ring_spec(spec).ok())
        .map(|pres| pres.poly_ring().clone())
        .unwrap_or_else(|| fallback().clone())
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // A leading `!` asks for a valid checksum line, so mutations reach the
    // body parser instead of dying at the integrity check.
    let text = match text.strip_prefix('!') {
        Some(body) => {
            let body = if body.ends_with('\n') { body.to_string() } else { format!("{body}\n") };
            let check = hex::encode(Sha256::digest(body.as_bytes()));
            format!("{body}check {check}\n")
        }
        None => text.to_string(),
    };
    let key = text.lines().find_map(|l| l.strip_prefix("key ")).unwrap_or("").to_string();
    let ring = ring_of(&text);
    if let Some(gb) = decode_entry(&text, &key, &ring) {
        let again = decode_entry(&encode_entry(&key, &gb), &key, &ring).expect("re-encoded entry decodes");
        assert_eq!(again.elements(), gb.elements());
    }
});
