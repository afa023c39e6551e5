#![no_main]

use libfuzzer_sys::fuzz_target;
use pgl6_core::brauer::InvariantVector;
use pgl6_core::proofkit::parse_class;

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else { return };
    if let Ok(u) = InvariantVector::from_json(&v) {
        assert_eq!(InvariantVector::from_json(&u.to_json()).unwrap(), u);
        let _ = u.index();
    }
    if let Ok(u) = parse_class(&v) {
        assert_eq!(u.tensor(&u.inverse()), InvariantVector::split());
    }
});
