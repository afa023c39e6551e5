#![no_main]

use libfuzzer_sys::fuzz_target;
use pgl6_core::dp6::surface_from_spec;

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else { return };
    if let Ok(s) = surface_from_spec(&v) {
        let _ = s.to_json();
    }
});
