#![no_main]

use libfuzzer_sys::fuzz_target;
use pgl6_core::lattice::{smith_normal_form, IntMatrix};

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else { return };
    let Ok(m) = IntMatrix::from_json(&v) else { return };
    assert_eq!(IntMatrix::from_json(&m.to_json()).unwrap(), m);
    if m.rows() <= 8 && m.cols() <= 8 {
        let s = smith_normal_form(&m);
        assert_eq!(s.u.dot(&m).dot(&s.v), s.s);
    }
});
