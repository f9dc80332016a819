#![no_main]

use libfuzzer_sys::fuzz_target;
use qwonder::expr::parse;

const LEXICON: [&str; 6] = ["a", "b", "c", "d", "z", "bz"];

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let lexicon: Vec<String> = LEXICON.iter().map(|s| s.to_string()).collect();
    if let Ok(expr) = parse(text, &lexicon) {
        let printed = expr.to_string();
        let again = parse(&printed, &lexicon).expect("printed expression parses");
        assert_eq!(again, expr, "{printed}");
    }
});
