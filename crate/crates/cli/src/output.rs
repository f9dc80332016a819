use serde_json::{json, Value as Json};

use qwonder::expr::Value;
use qwonder::ncalg::{AlgebraElement, TensorElement};
use qwonder::scalars::{BigRational, QRational};
use qwonder::Result;

fn scalar_json(c: &QRational) -> Json {
    serde_json::to_value(c.to_json()).expect("scalar JSON")
}

fn tensor_terms(t: &TensorElement) -> Vec<Json> {
    t.terms()
        .iter()
        .map(|(ws, c)| {
            let words: Vec<String> = ws
                .iter()
                .zip(t.factors())
                .map(|(w, p)| p.word_to_json(w))
                .collect();
            json!({ "coeff": scalar_json(c), "words": words })
        })
        .collect()
}

pub fn element_json(x: &AlgebraElement, context: &str) -> Json {
    serde_json::to_value(x.to_json(context)).expect("element JSON")
}

pub fn tensor_json(t: &TensorElement, context: &str) -> Json {
    json!({ "context": context, "text": t.to_string(), "terms": tensor_terms(t) })
}

/// Flat `(word, coefficient)` view of a value, used for numeric display.
fn flat_terms(v: &Value) -> Vec<(String, QRational)> {
    let alg = |x: &AlgebraElement, suffix: &str| -> Vec<(String, QRational)> {
        x.sorted_terms()
            .into_iter()
            .map(|(w, c)| {
                let word = x.presentation().word_to_json(w);
                let word = match (word.is_empty(), suffix.is_empty()) {
                    (_, true) => word,
                    (true, false) => suffix.to_string(),
                    (false, false) => format!("{word} {suffix}"),
                };
                (word, c.clone())
            })
            .collect()
    };
    match v {
        Value::Scalar(c) => vec![(String::new(), c.clone())],
        Value::Alg(x) => alg(x, ""),
        Value::ZPoly(parts) => parts
            .iter()
            .flat_map(|(n, f)| alg(f, &format!("z^{n}")))
            .collect(),
        Value::Rees(x) => x
            .parts()
            .iter()
            .flat_map(|(n, f)| alg(f, &format!("z^{n}")))
            .collect(),
        Value::Loc(x) => alg(x.numerator(), &format!("D^-{}", x.power())),
        Value::Gr(x) => x.classes().values().flat_map(|f| alg(f, "")).collect(),
        Value::Uq(x) => x
            .terms()
            .iter()
            .map(|((a, b, c), k)| (format!("F^{a} K^{b} E^{c}"), k.clone()))
            .collect(),
        Value::Tensor(t) => t
            .terms()
            .iter()
            .map(|(ws, c)| {
                let words: Vec<String> = ws
                    .iter()
                    .zip(t.factors())
                    .map(|(w, p)| p.word_to_json(w))
                    .collect();
                (words.join(" | "), c.clone())
            })
            .collect(),
    }
}

/// Coefficients evaluated at `q = at`; display only.
pub fn evaluated(v: &Value, at: &BigRational) -> Result<Json> {
    let mut out = Vec::new();
    for (word, c) in flat_terms(v) {
        let x = c.eval(at)?;
        out.push(json!({ "coeff": x.to_string(), "word": word }));
    }
    Ok(Json::Array(out))
}

pub fn value_json(v: &Value, context: &str) -> Json {
    let text = v.to_string();
    match v {
        Value::Scalar(c) => json!({ "context": context, "text": text, "value": scalar_json(c) }),
        Value::Alg(x) => element_json(x, context),
        Value::ZPoly(parts) => json!({ "context": context, "text": text, "parts": parts_json(parts, context) }),
        Value::Rees(x) => json!({ "context": context, "text": text, "parts": parts_json(x.parts(), context) }),
        Value::Loc(x) => json!({
            "context": context,
            "text": text,
            "numerator": element_json(x.numerator(), context),
            "inverse_power": x.power(),
        }),
        Value::Gr(x) => json!({
            "context": context,
            "text": text,
            "subset": x.subset().members().collect::<Vec<_>>(),
            "classes": x.classes().iter().map(|(w, f)| json!({
                "class": w.coords(),
                "element": element_json(f, context),
            })).collect::<Vec<_>>(),
        }),
        Value::Uq(x) => json!({
            "context": context,
            "text": text,
            "terms": x.terms().iter().map(|((a, b, c), k)| json!({
                "coeff": scalar_json(k),
                "word": format!("F^{a} K^{b} E^{c}"),
            })).collect::<Vec<_>>(),
        }),
        Value::Tensor(t) => tensor_json(t, context),
    }
}

fn parts_json(parts: &std::collections::BTreeMap<u32, AlgebraElement>, context: &str) -> Vec<Json> {
    parts
        .iter()
        .map(|(n, f)| json!({ "z": n, "element": element_json(f, context) }))
        .collect()
}
