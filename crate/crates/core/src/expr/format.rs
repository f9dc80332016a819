//! Declarative presentation files.
//!
//! ```text
//! # the quantum plane
//! name: qplane
//! generators: x y
//! grading: x=1 y=1
//! rules:
//!   y x -> q*x*y
//! ```
//!
//! `order:` optionally lists the generators from smallest to largest in the
//! lexicographic tie-break. Right-hand sides use the element grammar.

use std::sync::Arc;

use crate::lattice::Weight;
use crate::ncalg::{AlgebraElement, Presentation, PresentationBuilder, Rule};
use crate::{Error, Result};

use super::eval::{Context, Value};

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column: 1,
        message: message.into(),
    }
}

fn parse_weight(text: &str, line: usize) -> Result<Weight> {
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(text);
    let coords = inner
        .split(',')
        .map(|c| c.trim().parse::<i64>().map_err(|_| bad(line, format!("bad degree `{text}`"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Weight::new(coords))
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut name = String::from("custom");
    let mut symbols: Option<Vec<String>> = None;
    let mut order: Option<(usize, Vec<String>)> = None;
    let mut grading: Option<(usize, Vec<(String, Weight)>)> = None;
    let mut rule_lines: Vec<(usize, String, String)> = Vec::new();
    let mut in_rules = false;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some((lhs, rhs)) = body.split_once("->") {
            if !in_rules {
                return Err(bad(line, "rule outside the `rules:` section"));
            }
            rule_lines.push((line, lhs.trim().to_string(), rhs.trim().to_string()));
            continue;
        }
        let Some((key, value)) = body.split_once(':') else {
            return Err(bad(line, format!("expected `key: value` or a rule, found `{body}`")));
        };
        let value = value.trim();
        in_rules = false;
        match key.trim() {
            "name" => name = value.to_string(),
            "generators" => {
                let syms: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                for s in &syms {
                    if s == "q" || !s.starts_with(|c: char| c.is_ascii_alphabetic()) {
                        return Err(bad(line, format!("generator name `{s}` is reserved or malformed")));
                    }
                }
                symbols = Some(syms);
            }
            "order" => order = Some((line, value.split_whitespace().map(str::to_string).collect())),
            "grading" => {
                let mut entries = Vec::new();
                for item in value.split_whitespace() {
                    let (s, w) = item
                        .split_once('=')
                        .ok_or_else(|| bad(line, format!("expected `generator=degree`, found `{item}`")))?;
                    entries.push((s.to_string(), parse_weight(w, line)?));
                }
                grading = Some((line, entries));
            }
            "rules" => {
                if !value.is_empty() {
                    return Err(bad(line, "rules go on the following lines"));
                }
                in_rules = true;
            }
            other => return Err(bad(line, format!("unknown key `{other}`"))),
        }
    }

    let symbols = symbols.ok_or_else(|| Error::InvalidPresentation("missing `generators:` line".into()))?;
    let free = Arc::new(PresentationBuilder::from_symbols(name.clone(), symbols.clone()).build()?);
    let index = |s: &str, line: usize| {
        free.symbol_index(s)
            .ok_or_else(|| bad(line, format!("unknown generator `{s}`")))
    };

    let mut builder = PresentationBuilder::from_symbols(name, symbols.clone());
    if let Some((line, names)) = order {
        if names.len() != symbols.len() {
            return Err(bad(line, "`order:` must list every generator once"));
        }
        let mut ranks = vec![u8::MAX; symbols.len()];
        for (rank, s) in names.iter().enumerate() {
            ranks[index(s, line)? as usize] = rank as u8;
        }
        builder = builder.lex_ranks(ranks);
    }
    if let Some((line, entries)) = grading {
        let mut degrees: Vec<Option<Weight>> = vec![None; symbols.len()];
        for (s, w) in entries {
            degrees[index(&s, line)? as usize] = Some(w);
        }
        let degrees = degrees
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| bad(line, "`grading:` must give every generator a degree"))?;
        builder = builder.grading(degrees);
    }

    let ctx = Context::from_presentation(free.clone());
    for (line, lhs, rhs) in rule_lines {
        let lhs = free.parse_word(&lhs.replace('*', " "))?;
        let rhs = match ctx.eval_str(&rhs).map_err(|e| shift_line(e, line))? {
            Value::Alg(x) => x,
            other => return Err(bad(line, format!("right-hand side {other} is not an element"))),
        };
        builder = builder.rule(lhs, rhs.into_terms().into_iter().collect());
    }
    builder.build()
}

fn shift_line(e: Error, line: usize) -> Error {
    match e {
        Error::Syntax { column, message, .. } => Error::Syntax { line, column, message },
        other => other,
    }
}

/// Text form accepted by [`parse_presentation`].
pub fn presentation_to_text(p: &Presentation) -> String {
    let mut out = format!("name: {}\ngenerators: {}\n", p.name(), p.symbols().join(" "));
    let mut by_rank: Vec<(u8, &String)> = p.lex_ranks().iter().copied().zip(p.symbols()).collect();
    by_rank.sort();
    let ordered: Vec<&str> = by_rank.iter().map(|(_, s)| s.as_str()).collect();
    out += &format!("order: {}\n", ordered.join(" "));
    if let Some(g) = p.grading() {
        let items: Vec<String> = p.symbols().iter().zip(g).map(|(s, w)| format!("{s}={w}")).collect();
        out += &format!("grading: {}\n", items.join(" "));
    }
    out += "rules:\n";
    let free = Arc::new(
        PresentationBuilder::from_symbols(p.name(), p.symbols().to_vec())
            .build()
            .expect("symbols of a built presentation are valid"),
    );
    for rule in p.rules() {
        let rhs = AlgebraElement::from_terms(&free, rule.rhs.iter().cloned())
            .expect("rule words use known generators");
        let lhs: Vec<&str> = rule.lhs.iter().map(|&g| p.symbols()[g as usize].as_str()).collect();
        out += &format!("  {} -> {}\n", lhs.join(" "), rhs);
    }
    out
}

/// Rules compared as sets of `(lhs, rhs)` pairs, for round-trip checks.
pub fn same_rules(p: &Presentation, other: &Presentation) -> bool {
    let key = |r: &Rule| {
        let mut rhs = r.rhs.clone();
        rhs.sort_by(|a, b| a.0.cmp(&b.0));
        (r.lhs.clone(), rhs.into_iter().map(|(w, c)| (w, c.to_string())).collect::<Vec<_>>())
    };
    let mut a: Vec<_> = p.rules().iter().map(key).collect();
    let mut b: Vec<_> = other.rules().iter().map(key).collect();
    a.sort();
    b.sort();
    a == b && p.symbols() == other.symbols() && p.lex_ranks() == other.lex_ranks() && p.grading() == other.grading()
}
