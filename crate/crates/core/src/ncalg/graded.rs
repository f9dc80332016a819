use std::sync::Arc;

use serde::Serialize;

use super::element::AlgebraElement;
use super::presentation::{Presentation, Word};
use crate::lattice::Weight;
use crate::{Error, Result};

/// All normal words of exactly the given length, in increasing monomial order.
pub fn normal_words_of_length(p: &Presentation, len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    extend_normal(p, &mut cur, len, &mut |w| {
        out.push(w.to_vec());
    }, &mut |_| true);
    out.sort_by(|a, b| p.word_cmp(a, b));
    out
}

/// All normal words of length at most `max_len`, in increasing monomial order.
pub fn normal_words_up_to_length(p: &Presentation, max_len: usize) -> Vec<Word> {
    (0..=max_len)
        .flat_map(|l| normal_words_of_length(p, l))
        .collect()
}

/// Depth-first growth of normal words: appending a letter can only create a
/// redex that ends at the new letter, so suffix checks suffice.
fn extend_normal(
    p: &Presentation,
    cur: &mut Word,
    len: usize,
    emit: &mut dyn FnMut(&[u8]),
    keep: &mut dyn FnMut(&[u8]) -> bool,
) {
    if cur.len() == len {
        emit(cur);
        return;
    }
    for g in 0..p.num_generators() as u8 {
        cur.push(g);
        if !p.has_suffix_redex(cur) && keep(cur) {
            extend_normal(p, cur, len, emit, keep);
        }
        cur.pop();
    }
}

/// Length bound for words of degree `lambda` when every generator degree is
/// nonzero with nonnegative coordinates.
fn length_bound(p: &Presentation, lambda: &Weight) -> Result<usize> {
    let g = p
        .grading()
        .ok_or_else(|| Error::Ungraded(p.name().to_string()))?;
    if g.iter().any(|d| d.is_zero() || d.coords().iter().any(|&c| c < 0)) {
        return Err(Error::UngeneratedDegree(format!(
            "`{}` has generators of zero or non-positive degree",
            p.name()
        )));
    }
    if lambda.rank() != g[0].rank() {
        return Err(Error::DimensionMismatch {
            expected: g[0].rank(),
            found: lambda.rank(),
        });
    }
    if lambda.coords().iter().any(|&c| c < 0) {
        return Ok(0);
    }
    Ok(lambda.coords().iter().sum::<i64>() as usize)
}

/// Normal words of degree `lambda`, in increasing monomial order.
pub fn normal_words_of_degree(p: &Presentation, lambda: &Weight, horizon: usize) -> Result<Vec<Word>> {
    let needed = length_bound(p, lambda)?;
    if needed > horizon {
        return Err(Error::HorizonExceeded { horizon, needed });
    }
    if lambda.coords().iter().any(|&c| c < 0) {
        return Ok(Vec::new());
    }
    let g = p.grading().expect("checked above");
    let mut out = Vec::new();
    for len in 0..=needed {
        let mut cur = Vec::new();
        extend_normal(
            p,
            &mut cur,
            len,
            &mut |w| {
                if p.word_degree(w).ok().as_ref() == Some(lambda) {
                    out.push(w.to_vec());
                }
            },
            &mut |w| {
                let d = w
                    .iter()
                    .fold(Weight::zero(lambda.rank()), |acc, &x| acc.add(&g[x as usize]));
                d.coords().iter().zip(lambda.coords()).all(|(a, b)| a <= b)
            },
        );
    }
    out.sort_by(|a, b| p.word_cmp(a, b));
    Ok(out)
}

/// Number of normal words of degree `lambda`.
pub fn dimension_of_graded_piece(p: &Presentation, lambda: &Weight, horizon: usize) -> Result<usize> {
    Ok(normal_words_of_degree(p, lambda, horizon)?.len())
}

/// Sum of the terms of `x` whose degree is `lambda`.
pub fn graded_component(x: &AlgebraElement, lambda: &Weight) -> Result<AlgebraElement> {
    let p = x.presentation();
    let mut kept = Vec::new();
    for (w, c) in x.terms() {
        if p.word_degree(w)? == *lambda {
            kept.push((w.clone(), c.clone()));
        }
    }
    Ok(AlgebraElement::from_normal_terms(p, kept))
}

/// Whether `x` commutes with every generator.
pub fn is_central(p: &Arc<Presentation>, x: &AlgebraElement) -> Result<bool> {
    for g in 0..p.num_generators() as u8 {
        let gen = AlgebraElement::generator(p, g);
        if !x.commutator(&gen)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One graded piece of a Veronese subalgebra.
#[derive(Clone, Debug, Serialize)]
pub struct VeroneseLevel {
    pub n: usize,
    pub degree: Weight,
    pub dimension: usize,
    pub basis: Vec<String>,
}

/// Bases and dimensions of `R_{nλ}` for `0 ≤ n ≤ max_n`.
pub fn veronese(p: &Presentation, lambda: &Weight, max_n: usize) -> Result<Vec<VeroneseLevel>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let degree = lambda.scale(n as i64);
        let horizon = length_bound(p, &degree)?;
        let words = normal_words_of_degree(p, &degree, horizon)?;
        out.push(VeroneseLevel {
            n,
            degree,
            dimension: words.len(),
            basis: words.iter().map(|w| p.word_to_string(w)).collect(),
        });
    }
    Ok(out)
}
