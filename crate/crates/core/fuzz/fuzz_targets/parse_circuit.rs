#![no_main]

use libfuzzer_sys::fuzz_target;

// Parsing never panics; whatever parses also evaluates or fails cleanly.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = qcpaul::parse(text) {
        if c.wires().len() <= 6 {
            let _ = qcpaul::evaluate(&c);
        }
    }
});
