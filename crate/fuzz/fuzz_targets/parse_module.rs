#![no_main]

use libfuzzer_sys::fuzz_target;
use qwonder::expr::{Context, Value};
use qwonder::lattice::Weight;
use qwonder::ncalg::algebras;
use qwonder::projcat::{GradedModulePresentation, ModuleJson};
use qwonder::Error;

fuzz_target!(|data: &[u8]| {
    let Ok(json) = serde_json::from_slice::<ModuleJson>(data) else { return };
    let p = algebras::vinberg();
    let ctx = Context::from_presentation(p.clone());
    let parse = |s: &str| match ctx.eval_str(s)? {
        Value::Alg(x) => Ok(x),
        other => Err(Error::Invalid(format!("not an element: {other}"))),
    };
    if let Ok(m) = GradedModulePresentation::from_json(p, &json, parse) {
        for n in 0..=2 {
            let _ = m.graded_piece(&Weight::scalar(n), 2);
        }
    }
});
