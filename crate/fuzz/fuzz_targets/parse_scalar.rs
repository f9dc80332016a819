#![no_main]

use libfuzzer_sys::fuzz_target;
use qwonder::expr::Context;
use qwonder::scalars::parse_rational;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = parse_rational(text);
    // keep exponents small enough to evaluate
    if text.len() > 64 {
        return;
    }
    let ctx = Context::named("scalar").expect("scalar context");
    if let Ok(v) = ctx.eval_str(text) {
        let shown = v.to_string();
        let again = ctx.eval_str(&shown).expect("displayed scalar parses");
        assert_eq!(again.to_string(), shown);
    }
});
