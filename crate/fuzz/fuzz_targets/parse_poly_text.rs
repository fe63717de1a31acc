#![no_main]

use eulerline::polyid::MultiPoly;
use libfuzzer_sys::fuzz_target;

// Accepted input is canonical, so printing it back must reproduce it.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = MultiPoly::from_text(s) {
        assert_eq!(p.to_text(), s);
    }
});
