#![no_main]

use libfuzzer_sys::fuzz_target;
use pgl6_core::brauer::{admits_unitary_involution, corestriction, InvariantVectorK};

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else { return };
    if let Ok(u) = InvariantVectorK::from_json(&v) {
        assert_eq!(InvariantVectorK::from_json(&u.to_json()).unwrap(), u);
        let _ = corestriction(&u);
        let _ = admits_unitary_involution(&u);
    }
});
