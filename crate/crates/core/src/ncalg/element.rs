use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::presentation::{accumulate, Presentation, Word};
use crate::lattice::Weight;
use crate::scalars::{QRational, QRationalJson};
use crate::{Error, Result};

/// A linear combination of normal words of a presentation.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    pres: Arc<Presentation>,
    terms: BTreeMap<Word, QRational>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.pres.same_as(&other.pres) && self.terms == other.terms
    }
}

impl AlgebraElement {
    pub fn zero(pres: &Arc<Presentation>) -> Self {
        AlgebraElement {
            pres: pres.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(pres: &Arc<Presentation>) -> Self {
        Self::scalar(pres, QRational::one())
    }

    pub fn scalar(pres: &Arc<Presentation>, c: QRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        AlgebraElement {
            pres: pres.clone(),
            terms,
        }
    }

    pub fn generator(pres: &Arc<Presentation>, index: u8) -> Self {
        assert!((index as usize) < pres.num_generators(), "generator index out of range");
        Self::from_normal_terms(pres, [(vec![index], QRational::one())])
    }

    /// The generator with the given name.
    pub fn symbol(pres: &Arc<Presentation>, name: &str) -> Result<Self> {
        let g = pres
            .symbol_index(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
        Ok(Self::generator(pres, g))
    }

    /// Normal form of a single word.
    pub fn from_word(pres: &Arc<Presentation>, word: Word) -> Result<Self> {
        Self::from_terms(pres, [(word, QRational::one())])
    }

    /// Normal form of an arbitrary linear combination of words.
    pub fn from_terms(
        pres: &Arc<Presentation>,
        terms: impl IntoIterator<Item = (Word, QRational)>,
    ) -> Result<Self> {
        let terms: Vec<_> = terms.into_iter().collect();
        if terms
            .iter()
            .any(|(w, _)| w.iter().any(|&g| g as usize >= pres.num_generators()))
        {
            return Err(Error::Invalid("generator index out of range".into()));
        }
        Ok(AlgebraElement {
            pres: pres.clone(),
            terms: pres.reduce(terms)?,
        })
    }

    /// Wrap terms that are already normal words; only checked in debug builds.
    pub(crate) fn from_normal_terms(
        pres: &Arc<Presentation>,
        terms: impl IntoIterator<Item = (Word, QRational)>,
    ) -> Self {
        let mut map = BTreeMap::new();
        for (w, c) in terms {
            debug_assert!(pres.is_normal(&w), "word is not normal");
            accumulate(&mut map, w, c);
        }
        AlgebraElement {
            pres: pres.clone(),
            terms: map,
        }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn terms(&self) -> &BTreeMap<Word, QRational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, QRational> {
        self.terms
    }

    pub fn coefficient(&self, w: &[u8]) -> QRational {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar value, if the element is a multiple of the unit.
    pub fn as_scalar(&self) -> Option<QRational> {
        match self.terms.len() {
            0 => Some(QRational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// Terms sorted ascending in the monomial order.
    pub fn sorted_terms(&self) -> Vec<(&Word, &QRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| self.pres.word_cmp(a.0, b.0));
        v
    }

    /// Largest word length occurring, `None` for zero.
    pub fn max_length(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    fn check_same(&self, other: &AlgebraElement) -> Result<()> {
        if self.pres.same_as(&other.pres) {
            Ok(())
        } else {
            Err(Error::PresentationMismatch(
                self.pres.name().to_string(),
                other.pres.name().to_string(),
            ))
        }
    }

    pub fn try_add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            accumulate(&mut terms, w.clone(), c.clone());
        }
        Ok(AlgebraElement {
            pres: self.pres.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.try_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> AlgebraElement {
        AlgebraElement {
            pres: self.pres.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &QRational) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero(&self.pres);
        }
        AlgebraElement {
            pres: self.pres.clone(),
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Product in normal form.
    pub fn try_mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same(other)?;
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = Vec::with_capacity(u.len() + v.len());
                w.extend_from_slice(u);
                w.extend_from_slice(v);
                products.push((w, a * b));
            }
        }
        Ok(AlgebraElement {
            pres: self.pres.clone(),
            terms: self.pres.reduce(products)?,
        })
    }

    pub fn pow(&self, n: u32) -> Result<AlgebraElement> {
        let mut acc = AlgebraElement::one(&self.pres);
        for _ in 0..n {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// `x·y − y·x`.
    pub fn commutator(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Apply `f` to every coefficient, dropping zeros.
    pub fn map_coefficients(
        &self,
        pres: &Arc<Presentation>,
        mut f: impl FnMut(&QRational) -> Result<QRational>,
    ) -> Result<AlgebraElement> {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            accumulate(&mut terms, w.clone(), f(c)?);
        }
        Ok(AlgebraElement {
            pres: pres.clone(),
            terms,
        })
    }

    /// Reinterpret the coefficients at `q = 1` in a presentation with the same
    /// generators and normal words.
    pub fn specialize_at_one(&self, target: &Arc<Presentation>) -> Result<AlgebraElement> {
        if target.symbols() != self.pres.symbols() {
            return Err(Error::PresentationMismatch(
                self.pres.name().to_string(),
                target.name().to_string(),
            ));
        }
        self.map_coefficients(target, |c| Ok(QRational::from_rational(c.eval_at_one()?)))
    }

    /// Degree if every term has the same degree; `Ok(None)` for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<Weight>> {
        let mut deg: Option<Weight> = None;
        for w in self.terms.keys() {
            let d = self.pres.word_degree(w)?;
            match &deg {
                None => deg = Some(d),
                Some(e) if *e == d => {}
                Some(e) => return Err(Error::NotHomogeneous(format!("degrees {e} and {d}"))),
            }
        }
        Ok(deg)
    }

    /// Evaluate the substitution `generator i ↦ images[i]` extended multiplicatively.
    pub fn substitute<T: Clone>(
        &self,
        zero: T,
        one: T,
        images: &[T],
        mut add: impl FnMut(&T, &T) -> Result<T>,
        mut mul: impl FnMut(&T, &T) -> Result<T>,
        mut scale: impl FnMut(&T, &QRational) -> Result<T>,
    ) -> Result<T> {
        let mut acc = zero;
        for (w, c) in &self.terms {
            let mut term = one.clone();
            for &g in w {
                term = mul(&term, &images[g as usize])?;
            }
            acc = add(&acc, &scale(&term, c)?)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self, context: &str) -> ElementJson {
        ElementJson {
            context: context.to_string(),
            text: self.to_string(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(w, c)| TermJson {
                    coeff: c.to_json(),
                    word: self.pres.word_to_json(w),
                })
                .collect(),
        }
    }

    pub fn from_json(pres: &Arc<Presentation>, json: &ElementJson) -> Result<Self> {
        let mut terms = Vec::new();
        for t in &json.terms {
            terms.push((pres.word_from_json(&t.word)?, QRational::from_json(&t.coeff)?));
        }
        Self::from_terms(pres, terms)
    }
}

/// JSON form of a single term.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: QRationalJson,
    pub word: String,
}

/// JSON form of an element: context name, display text and normal-form terms.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementJson {
    pub context: String,
    #[serde(default)]
    pub text: String,
    pub terms: Vec<TermJson>,
}

/// Render a scalar as a factor: returns whether it is negative and the text of its magnitude.
pub(crate) fn scalar_factor(c: &QRational) -> (bool, String) {
    if let Some(l) = c.as_laurent() {
        if let Some((e, k)) = l.as_monomial() {
            let neg = k.is_negative();
            let abs = QRational::from_laurent(crate::scalars::QLaurent::monomial(k.abs(), e));
            return (neg, abs.to_string());
        }
    }
    (false, format!("({c})"))
}

/// Render `Σ cᵢ·tᵢ` given already-formatted term bodies (`"1"` for the unit).
pub(crate) fn format_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (&'a QRational, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, body) in terms {
        let (neg, factor) = scalar_factor(c);
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        if body == "1" {
            write!(f, "{factor}")?;
        } else if factor == "1" {
            write!(f, "{body}")?;
        } else {
            write!(f, "{factor}*{body}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_sum(
            f,
            self.sorted_terms()
                .into_iter()
                .map(|(w, c)| (c, self.pres.word_to_string(w))),
        )
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    /// Panics on a presentation mismatch; use [`AlgebraElement::try_add`] to handle it.
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("presentation mismatch")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_sub(rhs).expect("presentation mismatch")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.neg_ref()
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    /// Panics on a presentation mismatch or an exhausted step budget.
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_mul(rhs).expect("multiplication failed")
    }
}

/// Product of two elements of the same presentation.
pub fn multiply(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    x.try_mul(y)
}

/// Normal form of a linear combination of words.
pub fn normal_form(
    pres: &Arc<Presentation>,
    terms: impl IntoIterator<Item = (Word, QRational)>,
) -> Result<AlgebraElement> {
    AlgebraElement::from_terms(pres, terms)
}
