#![no_main]

use libfuzzer_sys::fuzz_target;
use psl13::qseries::{dump_series, parse_dump};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = parse_dump(text) {
        let again = parse_dump(&dump_series(&s)).expect("dump parses");
        assert_eq!(again, s);
    }
});
