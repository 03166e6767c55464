#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(tokens) = adg_metrics::tokenize(data) {
        for t in tokens {
            assert!(!t.lexeme.is_empty());
        }
    }
});
