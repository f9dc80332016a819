use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::element::{format_sum, AlgebraElement};
use super::presentation::{accumulate, Presentation, Word};
use crate::scalars::QRational;
use crate::{Error, Result};

/// An element of a tensor product `A₁ ⊗ ⋯ ⊗ A_k` in the basis of normal-word tuples.
#[derive(Clone, Debug)]
pub struct TensorElement {
    factors: Vec<Arc<Presentation>>,
    terms: BTreeMap<Vec<Word>, QRational>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.factors.len() == other.factors.len()
            && self
                .factors
                .iter()
                .zip(&other.factors)
                .all(|(a, b)| a.same_as(b))
            && self.terms == other.terms
    }
}

impl TensorElement {
    pub fn zero(factors: Vec<Arc<Presentation>>) -> Self {
        TensorElement {
            factors,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(factors: Vec<Arc<Presentation>>) -> Self {
        let unit = vec![Vec::new(); factors.len()];
        let mut terms = BTreeMap::new();
        terms.insert(unit, QRational::one());
        TensorElement { factors, terms }
    }

    /// `x₁ ⊗ ⋯ ⊗ x_k`.
    pub fn pure(parts: &[AlgebraElement]) -> Self {
        let factors: Vec<_> = parts.iter().map(|x| x.presentation().clone()).collect();
        let mut terms: BTreeMap<Vec<Word>, QRational> = BTreeMap::new();
        terms.insert(Vec::new(), QRational::one());
        for x in parts {
            let mut next = BTreeMap::new();
            for (ws, c) in &terms {
                for (w, d) in x.terms() {
                    let mut nws = ws.clone();
                    nws.push(w.clone());
                    accumulate(&mut next, nws, c * d);
                }
            }
            terms = next;
        }
        TensorElement { factors, terms }
    }

    pub fn factors(&self) -> &[Arc<Presentation>] {
        &self.factors
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Word>, QRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &TensorElement) -> Result<()> {
        let same = self.factors.len() == other.factors.len()
            && self
                .factors
                .iter()
                .zip(&other.factors)
                .all(|(a, b)| a.same_as(b));
        if same {
            Ok(())
        } else {
            Err(Error::PresentationMismatch(self.describe(), other.describe()))
        }
    }

    fn describe(&self) -> String {
        self.factors
            .iter()
            .map(|p| p.name().to_string())
            .collect::<Vec<_>>()
            .join("⊗")
    }

    pub fn try_add(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            accumulate(&mut terms, w.clone(), c.clone());
        }
        Ok(TensorElement {
            factors: self.factors.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.try_add(&other.scale(&QRational::from_int(-1)))
    }

    pub fn scale(&self, c: &QRational) -> TensorElement {
        let mut terms = BTreeMap::new();
        for (w, x) in &self.terms {
            accumulate(&mut terms, w.clone(), x * c);
        }
        TensorElement {
            factors: self.factors.clone(),
            terms,
        }
    }

    /// Componentwise product.
    pub fn try_mul(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check_same(other)?;
        let mut out = TensorElement::zero(self.factors.clone());
        let mut cache: BTreeMap<(usize, Word, Word), AlgebraElement> = BTreeMap::new();
        for (us, a) in &self.terms {
            for (vs, b) in &other.terms {
                let mut slots = Vec::with_capacity(us.len());
                for (k, (u, v)) in us.iter().zip(vs).enumerate() {
                    let key = (k, u.clone(), v.clone());
                    let prod = match cache.get(&key) {
                        Some(p) => p.clone(),
                        None => {
                            let mut w = u.clone();
                            w.extend_from_slice(v);
                            let p = AlgebraElement::from_word(&self.factors[k], w)?;
                            cache.insert(key, p.clone());
                            p
                        }
                    };
                    slots.push(prod);
                }
                let t = TensorElement::pure(&slots).scale(&(a * b));
                for (w, c) in t.terms {
                    accumulate(&mut out.terms, w, c);
                }
            }
        }
        Ok(out)
    }

    /// Apply a linear map to one tensor slot, given on normal words.
    pub fn map_slot(
        &self,
        slot: usize,
        target: &Arc<Presentation>,
        mut f: impl FnMut(&Word) -> Result<AlgebraElement>,
    ) -> Result<TensorElement> {
        let mut factors = self.factors.clone();
        factors[slot] = target.clone();
        let mut out = TensorElement::zero(factors);
        for (ws, c) in &self.terms {
            let img = f(&ws[slot])?;
            for (w, d) in img.terms() {
                let mut nws = ws.clone();
                nws[slot] = w.clone();
                accumulate(&mut out.terms, nws, c * d);
            }
        }
        Ok(out)
    }

    /// Replace slot `slot` by the tensor factors of `f(word)`.
    pub fn expand_slot(
        &self,
        slot: usize,
        new_factors: &[Arc<Presentation>],
        mut f: impl FnMut(&Word) -> Result<TensorElement>,
    ) -> Result<TensorElement> {
        let mut factors = self.factors[..slot].to_vec();
        factors.extend_from_slice(new_factors);
        factors.extend_from_slice(&self.factors[slot + 1..]);
        let mut out = TensorElement::zero(factors);
        for (ws, c) in &self.terms {
            let img = f(&ws[slot])?;
            for (inner, d) in img.terms() {
                let mut nws = ws[..slot].to_vec();
                nws.extend(inner.iter().cloned());
                nws.extend_from_slice(&ws[slot + 1..]);
                accumulate(&mut out.terms, nws, c * d);
            }
        }
        Ok(out)
    }

    /// Multiply all slots together, requiring equal presentations.
    pub fn multiply_out(&self) -> Result<AlgebraElement> {
        let p = self
            .factors
            .first()
            .ok_or_else(|| Error::Invalid("empty tensor".into()))?;
        if self.factors.iter().any(|f| !f.same_as(p)) {
            return Err(Error::PresentationMismatch(self.describe(), p.name().to_string()));
        }
        let mut terms = Vec::new();
        for (ws, c) in &self.terms {
            terms.push((ws.concat(), c.clone()));
        }
        AlgebraElement::from_terms(p, terms)
    }
}

impl fmt::Display for TensorElement {
    /// `a*b ⊗ c` is written `(a*b)|(c)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_sum(
            f,
            self.terms.iter().map(|(ws, c)| {
                let body = ws
                    .iter()
                    .zip(&self.factors)
                    .map(|(w, p)| format!("({})", p.word_to_string(w)))
                    .collect::<Vec<_>>()
                    .join("|");
                (c, body)
            }),
        )
    }
}
