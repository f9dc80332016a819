#![no_main]

use libfuzzer_sys::fuzz_target;
use qwonder::expr::{parse_presentation, presentation_to_text, same_rules};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_presentation(text) {
        let again = parse_presentation(&presentation_to_text(&p)).expect("printed presentation parses");
        assert!(same_rules(&p, &again));
    }
});
