#![no_main]

use libfuzzer_sys::fuzz_target;
use pgl6_core::algebra3::CubicType;
use pgl6_core::brauer::{Fraction1, Place, QuadField};
use pgl6_core::field::Rational;
use pgl6_core::hexagon::LineLabel;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = s.parse::<Rational>() {
        assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }
    if let Ok(x) = s.parse::<Fraction1>() {
        assert_eq!(x.to_string().parse::<Fraction1>().unwrap(), x);
    }
    if let Ok(p) = s.parse::<Place>() {
        assert_eq!(p.to_string().parse::<Place>().unwrap(), p);
    }
    if let Ok(k) = s.parse::<QuadField>() {
        assert_eq!(k.to_string().parse::<QuadField>().unwrap(), k);
    }
    if let Ok(l) = s.parse::<LineLabel>() {
        assert_eq!(l.to_string().parse::<LineLabel>().unwrap(), l);
    }
    let _ = CubicType::parse(s);
});
