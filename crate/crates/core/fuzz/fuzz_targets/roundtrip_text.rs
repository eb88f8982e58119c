#![no_main]

use libfuzzer_sys::fuzz_target;

// Printing a parsed circuit and parsing it again gives the same circuit.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(c) = qcpaul::parse(text) else { return };
    let printed = qcpaul::to_text(&c);
    let again = qcpaul::parse(&printed).expect("printed circuit parses");
    assert_eq!(again, c);
});
