#![no_main]

use libfuzzer_sys::fuzz_target;
use pgl6_core::field::{field_arith, FieldElement, FieldOp};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let mut parts = s.splitn(2, '|');
    let Ok(a) = parts.next().unwrap_or("").parse::<FieldElement>() else { return };
    let back: FieldElement = a.to_string().parse().expect("display output parses");
    assert_eq!(back, a);
    if let Some(Ok(b)) = parts.next().map(str::parse::<FieldElement>) {
        for op in [FieldOp::Add, FieldOp::Mul, FieldOp::Neg, FieldOp::Inv] {
            let _ = field_arith(&a, &b, op);
        }
    }
});
