#![no_main]

use eulerline::io::parse_config;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(cfg) = parse_config(s) {
        assert!((6..=17).contains(&cfg.precision()));
        cfg.geometry_tolerance().expect("validated tolerance");
        let _ = cfg.suite_config();
    }
});
