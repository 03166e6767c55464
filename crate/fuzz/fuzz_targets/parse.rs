#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // Any byte string must produce a model or a positioned error.
    if let Err(e) = adg_metrics::parse(data) {
        assert!(e.line >= 1 && e.column >= 1);
        assert!(!e.message.is_empty());
    }
});
