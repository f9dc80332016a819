use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::element::AlgebraElement;
use super::graded::{is_central, normal_words_of_degree, normal_words_up_to_length};
use super::presentation::Presentation;
use crate::lattice::Weight;
use crate::linalg::Echelon;
use crate::scalars::QRational;
use crate::{Error, Result};

/// A presentation with one nonzero central element formally inverted.
#[derive(Clone, Debug)]
pub struct CentralLocalization {
    inverted: AlgebraElement,
}

impl CentralLocalization {
    pub fn new(inverted: AlgebraElement) -> Result<Self> {
        if inverted.is_zero() {
            return Err(Error::NotInvertible("zero".into()));
        }
        if !is_central(inverted.presentation(), &inverted)? {
            return Err(Error::NotCentral);
        }
        Ok(CentralLocalization { inverted })
    }

    pub fn base(&self) -> &Arc<Presentation> {
        self.inverted.presentation()
    }

    pub fn inverted(&self) -> &AlgebraElement {
        &self.inverted
    }

    pub fn element(&self, x: AlgebraElement) -> Result<LocalizedElement> {
        if !x.presentation().same_as(self.base()) {
            return Err(Error::PresentationMismatch(
                x.presentation().name().into(),
                self.base().name().into(),
            ));
        }
        Ok(LocalizedElement {
            loc: self.clone(),
            numerator: x,
            power: 0,
        })
    }

    /// `r⁻ᵏ`.
    pub fn inverse_power(&self, k: u32) -> LocalizedElement {
        LocalizedElement {
            loc: self.clone(),
            numerator: AlgebraElement::one(self.base()),
            power: k,
        }
    }
}

/// `numerator · r^(−power)` in a central localization.
#[derive(Clone, Debug)]
pub struct LocalizedElement {
    loc: CentralLocalization,
    numerator: AlgebraElement,
    power: u32,
}

impl PartialEq for LocalizedElement {
    /// Cross-multiplication; valid since the shipped bases have no zero divisors.
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = match self.common(other) {
            Ok(x) => x,
            Err(_) => return false,
        };
        a == b
    }
}

impl LocalizedElement {
    pub fn numerator(&self) -> &AlgebraElement {
        &self.numerator
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn localization(&self) -> &CentralLocalization {
        &self.loc
    }

    fn lift(&self, extra: u32) -> Result<AlgebraElement> {
        self.numerator.try_mul(&self.loc.inverted.pow(extra)?)
    }

    fn common(&self, other: &Self) -> Result<(AlgebraElement, AlgebraElement)> {
        let k = self.power.max(other.power);
        Ok((self.lift(k - self.power)?, other.lift(k - other.power)?))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.common(other)?;
        Ok(LocalizedElement {
            loc: self.loc.clone(),
            numerator: a.try_add(&b)?,
            power: self.power.max(other.power),
        }
        .simplified())
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&QRational::from_int(-1)))
    }

    pub fn scale(&self, c: &QRational) -> Self {
        LocalizedElement {
            loc: self.loc.clone(),
            numerator: self.numerator.scale(c),
            power: self.power,
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        Ok(LocalizedElement {
            loc: self.loc.clone(),
            numerator: self.numerator.try_mul(&other.numerator)?,
            power: self.power + other.power,
        }
        .simplified())
    }

    /// Integer powers; negative exponents need a numerator that is a scalar multiple of a power of `r`.
    pub fn pow(&self, n: i64) -> Result<Self> {
        if n >= 0 {
            let mut acc = self.loc.element(AlgebraElement::one(self.loc.base()))?;
            for _ in 0..n {
                acc = acc.try_mul(self)?;
            }
            return Ok(acc);
        }
        let inv = self.inverse()?;
        inv.pow(-n)
    }

    /// Inverse of `c·rᵏ·r⁻ʲ`; other elements are not invertible here.
    pub fn inverse(&self) -> Result<Self> {
        let r = &self.loc.inverted;
        let mut k = 0u32;
        let mut cur = AlgebraElement::one(self.loc.base());
        let limit = self.numerator.max_length().unwrap_or(0) as u32 + 1;
        while k <= limit {
            if let Some(c) = scalar_ratio(&self.numerator, &cur) {
                if c.is_zero() {
                    break;
                }
                return Ok(LocalizedElement {
                    loc: self.loc.clone(),
                    numerator: self
                        .loc
                        .inverted
                        .pow(self.power)?
                        .scale(&c.inverse()?),
                    power: k,
                }
                .simplified());
            }
            cur = cur.try_mul(r)?;
            k += 1;
        }
        Err(Error::NotInvertible(self.to_string()))
    }

    /// Cancel factors of `r` from the numerator where the division is exact.
    fn simplified(mut self) -> Self {
        while self.power > 0 {
            match exact_quotient_by(&self.numerator, &self.loc.inverted) {
                Some(x) => {
                    self.numerator = x;
                    self.power -= 1;
                }
                None => break,
            }
        }
        self
    }
}

/// `c` with `x = c·y`, if one exists.
fn scalar_ratio(x: &AlgebraElement, y: &AlgebraElement) -> Option<QRational> {
    if x.is_zero() {
        return Some(QRational::zero());
    }
    let (w, c) = x.terms().iter().next()?;
    let d = y.terms().get(w)?;
    let ratio = c.checked_div(d).ok()?;
    (y.scale(&ratio) == *x).then_some(ratio)
}

/// `x / r` when `r` is a scalar multiple of the unit or `x` is a scalar multiple of `r`.
fn exact_quotient_by(x: &AlgebraElement, r: &AlgebraElement) -> Option<AlgebraElement> {
    if x.is_zero() {
        return None;
    }
    if let Some(c) = r.as_scalar() {
        return c.inverse().ok().map(|ci| x.scale(&ci));
    }
    scalar_ratio(x, r).map(|c| AlgebraElement::scalar(x.presentation(), c))
}

impl fmt::Display for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({})*({})^-{}", self.numerator, self.loc.inverted, self.power)
        }
    }
}

/// New basis elements of the degree-zero part contributed at one word length.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeZeroStratum {
    /// Word length of the numerators.
    pub length: usize,
    /// Power of the inverted element in the denominators.
    pub power: usize,
    pub dimension: usize,
    /// Numerators `x` of the new elements `x·r⁻ᵏ`.
    pub basis: Vec<String>,
}

/// Description of the degree-zero part of a localization, one stratum per word length.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeZeroDescription {
    pub inverted: String,
    pub inverted_degree: Weight,
    pub strata: Vec<DegreeZeroStratum>,
}

/// Spanning elements of `(R[r⁻¹])₀ = ⋃ₖ R_{k·deg r}·r⁻ᵏ`, filtered by `k`: the
/// stratum at length `k·|r|` is a basis of `R_{k·deg r}` modulo `r·R_{(k−1)·deg r}`.
pub fn localize_and_degree_zero(
    loc: &CentralLocalization,
    horizon: usize,
) -> Result<DegreeZeroDescription> {
    let p = loc.base();
    let r = loc.inverted();
    let deg = r.homogeneous_degree()?.ok_or(Error::NotInvertible("zero".into()))?;
    let mut strata = Vec::new();
    if deg.is_zero() {
        let words: Vec<_> = normal_words_up_to_length(p, horizon)
            .into_iter()
            .filter(|w| p.word_degree(w).map(|d| d.is_zero()).unwrap_or(false))
            .collect();
        for len in 0..=horizon {
            let basis: Vec<String> = words
                .iter()
                .filter(|w| w.len() == len)
                .map(|w| p.word_to_string(w))
                .collect();
            strata.push(DegreeZeroStratum {
                length: len,
                power: 0,
                dimension: basis.len(),
                basis,
            });
        }
    } else {
        let step: usize = deg.coords().iter().map(|&c| c.max(0) as usize).sum();
        let mut prev_words: Vec<crate::ncalg::Word> = Vec::new();
        for len in 0..=horizon {
            if step == 0 || len % step != 0 {
                strata.push(DegreeZeroStratum {
                    length: len,
                    power: 0,
                    dimension: 0,
                    basis: Vec::new(),
                });
                continue;
            }
            let k = len / step;
            let words = normal_words_of_degree(p, &deg.scale(k as i64), len.max(1))?;
            let index = |w: &crate::ncalg::Word| words.iter().position(|x| x == w);
            let mut ech = Echelon::<QRational>::new(words.len());
            for w in &prev_words {
                let prod = AlgebraElement::from_normal_terms(p, [(w.clone(), QRational::one())])
                    .try_mul(r)?;
                let mut v = vec![QRational::zero(); words.len()];
                for (pw, c) in prod.terms() {
                    let i = index(pw).ok_or_else(|| {
                        Error::Invalid("product left the expected degree".into())
                    })?;
                    v[i] = c.clone();
                }
                ech.insert(v);
            }
            let mut basis = Vec::new();
            for (i, w) in words.iter().enumerate() {
                let mut v = vec![QRational::zero(); words.len()];
                v[i] = QRational::one();
                if ech.insert(v) {
                    basis.push(p.word_to_string(w));
                }
            }
            strata.push(DegreeZeroStratum {
                length: len,
                power: k,
                dimension: basis.len(),
                basis,
            });
            prev_words = words;
        }
    }
    Ok(DegreeZeroDescription {
        inverted: r.to_string(),
        inverted_degree: deg,
        strata,
    })
}
