#![no_main]

use libfuzzer_sys::fuzz_target;
use qwonder::scalars::{QRational, QRationalJson};

fuzz_target!(|data: &[u8]| {
    let Ok(json) = serde_json::from_slice::<QRationalJson>(data) else { return };
    if let Ok(x) = QRational::from_json(&json) {
        let back = QRational::from_json(&x.to_json()).expect("serialized scalar reads back");
        assert_eq!(back, x);
    }
});
