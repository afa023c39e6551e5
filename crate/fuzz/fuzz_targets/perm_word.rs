#![no_main]

use libfuzzer_sys::fuzz_target;
use pgl6_core::hexagon::{parse_perm_word, perm_word, HexAut};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_perm_word(s) {
        assert_eq!(parse_perm_word(&perm_word(&p)).unwrap(), p);
        if let Some(h) = HexAut::from_perm(&p) {
            assert_eq!(h.to_perm(), p);
        }
    }
});
