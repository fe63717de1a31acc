#![no_main]

use eulerline::io::read_locus_csv;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(rows) = read_locus_csv(s) {
        for r in rows {
            assert!(r.x.is_finite() && r.y.is_finite());
            assert!(r.branch == 1 || r.branch == -1);
        }
    }
});
