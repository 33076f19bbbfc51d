#![no_main]

use libfuzzer_sys::fuzz_target;
use psl13::exact::{parse_rational, CyclotomicNumber};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = CyclotomicNumber::parse_text(text) {
        assert_eq!(CyclotomicNumber::parse_text(&c.to_text()).expect("reparses"), c);
    }
    let _ = parse_rational(text);
});
