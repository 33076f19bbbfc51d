#![no_main]

use libfuzzer_sys::fuzz_target;
use psl13::forms::{export_catalog, parse_catalog};

// Anything that parses must survive a write and reparse unchanged.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(parsed) = parse_catalog(text) {
        let cat = parsed.clone().into_catalog();
        let again = parse_catalog(&export_catalog(&cat)).expect("exported catalog parses");
        assert_eq!(again.into_catalog(), cat);
    }
});
