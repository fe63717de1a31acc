#![no_main]

use eulerline::io::parse_vertices;
use eulerline::triangle::{CenterSet, Triangle};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_vertices(s) {
        assert!(v.iter().all(|p| p.is_finite()));
        if let Ok(t) = Triangle::from_array(v) {
            let _ = CenterSet::compute(&t);
        }
    }
});
