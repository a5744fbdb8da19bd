//! Reports must match the frozen files under tests/golden byte for byte.
//! Set UPDATE_GOLDENS=1 to rewrite them.

mod common;

use common::{golden_path, report_bytes, CASES};

#[test]
fn reports_match_goldens() {
    let update = std::env::var_os("UPDATE_GOLDENS").is_some();
    let mut stale = Vec::new();
    for (stem, name, params) in CASES {
        let bytes = report_bytes(name, params);
        let path = golden_path(stem);
        if update {
            std::fs::write(&path, &bytes).unwrap();
            continue;
        }
        match std::fs::read(&path) {
            Ok(stored) if stored == bytes => {}
            _ => stale.push(*stem),
        }
    }
    assert!(stale.is_empty(), "reports differ from goldens: {stale:?}");
}
