use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::lattice::{RootSubset, Weight, WeightLattice};
use crate::linalg::{solve, Matrix};
use crate::ncalg::algebras::{self, is_classical, is_sl2_type, A, B, C, D, U, W, X, Y};
use crate::ncalg::{AlgebraElement, Presentation, Word};
use crate::qgroups::{pw_components, pw_degree, table_for, LevelDegree};
use crate::scalars::QRational;
use crate::{Error, Result};

/// O_q(SL₂) (or O(SL₂)) with its Peter–Weyl filtration by word length and parity.
#[derive(Clone, Debug)]
pub struct FilteredAlgebra {
    base: Arc<Presentation>,
}

impl FilteredAlgebra {
    pub fn new(base: Arc<Presentation>) -> Result<Self> {
        if !is_sl2_type(&base) {
            return Err(Error::PresentationMismatch(base.name().into(), "sl2".into()));
        }
        Ok(FilteredAlgebra { base })
    }

    pub fn base(&self) -> &Arc<Presentation> {
        &self.base
    }

    pub fn level(&self, x: &AlgebraElement) -> Vec<LevelDegree> {
        pw_degree(x)
    }

    /// Checks `level(xy) ≤ level(x) + level(y)` on the product's parity classes.
    pub fn multiplication_respects_levels(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<bool> {
        let prod = x.try_mul(y)?;
        let (Some(lx), Some(ly)) = (x.max_length(), y.max_length()) else {
            return Ok(true);
        };
        Ok(prod
            .terms()
            .keys()
            .all(|w| w.len() <= lx + ly))
    }
}

/// Canonical representative of `[n]_I` in `Λ/Λ_I` for SL₂.
pub(crate) fn class_of(n: i64, subset: &RootSubset) -> Result<Weight> {
    Ok(WeightLattice::sl2()
        .coset_class(&Weight::scalar(n), subset)?
        .representative)
}

fn check_subset(subset: &RootSubset) -> Result<()> {
    if subset.members().all(|i| i == 1) {
        Ok(())
    } else {
        Err(Error::UnsupportedSubset(format!("{subset} for SL2")))
    }
}

/// An element of `gr_I O_q(SL₂)`: for each class `[λ]_I`, a residue in
/// level `≤ [λ]_I` normalized to the Peter–Weyl components lying in that class.
#[derive(Clone, Debug)]
pub struct GrElement {
    subset: RootSubset,
    base: Arc<Presentation>,
    classes: BTreeMap<Weight, AlgebraElement>,
}

impl PartialEq for GrElement {
    fn eq(&self, other: &Self) -> bool {
        self.subset == other.subset && self.base.same_as(&other.base) && self.classes == other.classes
    }
}

impl GrElement {
    pub fn zero(subset: &RootSubset, base: &Arc<Presentation>) -> Result<Self> {
        check_subset(subset)?;
        if !is_sl2_type(base) {
            return Err(Error::PresentationMismatch(base.name().into(), "sl2".into()));
        }
        Ok(GrElement {
            subset: subset.clone(),
            base: base.clone(),
            classes: BTreeMap::new(),
        })
    }

    pub fn one(subset: &RootSubset, base: &Arc<Presentation>) -> Result<Self> {
        gr_symbol(subset, &AlgebraElement::one(base))
    }

    /// Image of `x` in the class `[λ]_I`, assuming `x` lies in level `≤ λ`.
    pub fn from_level(subset: &RootSubset, x: &AlgebraElement, lambda: u32) -> Result<Self> {
        let mut out = GrElement::zero(subset, x.presentation())?;
        let class = class_of(lambda as i64, subset)?;
        for (n, comp) in pw_components(x)? {
            if n > lambda || !(lambda - n).is_multiple_of(2) {
                return Err(Error::Membership(format!("{x} is not in level <= {lambda}")));
            }
            if class_of(n as i64, subset)? == class {
                out.insert(class.clone(), comp)?;
            }
        }
        Ok(out)
    }

    fn insert(&mut self, class: Weight, r: AlgebraElement) -> Result<()> {
        let slot = self
            .classes
            .entry(class)
            .or_insert_with(|| AlgebraElement::zero(&self.base));
        *slot = slot.try_add(&r)?;
        self.classes.retain(|_, v| !v.is_zero());
        Ok(())
    }

    pub fn subset(&self) -> &RootSubset {
        &self.subset
    }

    pub fn base(&self) -> &Arc<Presentation> {
        &self.base
    }

    pub fn classes(&self) -> &BTreeMap<Weight, AlgebraElement> {
        &self.classes
    }

    pub fn is_zero(&self) -> bool {
        self.classes.is_empty()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.subset != other.subset {
            return Err(Error::SubsetMismatch(format!("{} vs {}", self.subset, other.subset)));
        }
        if !self.base.same_as(&other.base) {
            return Err(Error::PresentationMismatch(
                self.base.name().into(),
                other.base.name().into(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, v) in &other.classes {
            out.insert(k.clone(), v.clone())?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&QRational::from_int(-1)))
    }

    pub fn scale(&self, c: &QRational) -> Self {
        let mut out = self.clone();
        out.classes = self
            .classes
            .iter()
            .map(|(k, v)| (k.clone(), v.scale(c)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        gr_multiply(&self.subset, self, other)
    }

    /// Sum of residues, as an element of the base algebra.
    pub fn representative(&self) -> AlgebraElement {
        self.classes
            .values()
            .fold(AlgebraElement::zero(&self.base), |acc, v| &acc + v)
    }
}

fn subset_label(s: &RootSubset) -> String {
    s.members().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for GrElement {
    /// One `gr[I]{…}` wrapper per class, e.g. `gr[]{a} + gr[]{q*b*c}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.classes.is_empty() {
            return write!(f, "0");
        }
        let label = subset_label(&self.subset);
        let parts: Vec<String> = self
            .classes
            .values()
            .map(|v| format!("gr[{label}]{{{v}}}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Principal symbol: for each parity, the image of `x` at its top filtration degree.
pub fn gr_symbol(subset: &RootSubset, x: &AlgebraElement) -> Result<GrElement> {
    let mut out = GrElement::zero(subset, x.presentation())?;
    let comps = pw_components(x)?;
    for LevelDegree { parity, degree } in pw_degree(x) {
        let class = class_of(degree as i64, subset)?;
        for (n, comp) in &comps {
            if n % 2 == parity && class_of(*n as i64, subset)? == class {
                out.insert(class.clone(), comp.clone())?;
            }
        }
    }
    Ok(out)
}

/// Product in `gr_I`: multiply residues, then keep the Peter–Weyl components
/// `c^{V_ν}` with `λ + μ − ν ∈ Λ_I`.
pub fn gr_multiply(subset: &RootSubset, x: &GrElement, y: &GrElement) -> Result<GrElement> {
    x.check_same(y)?;
    if &x.subset != subset {
        return Err(Error::SubsetMismatch(format!("{} vs {}", x.subset, subset)));
    }
    let mut out = GrElement::zero(subset, &x.base)?;
    for (k1, r1) in &x.classes {
        for (k2, r2) in &y.classes {
            let class = class_of(k1.as_scalar() + k2.as_scalar(), subset)?;
            let prod = r1.try_mul(r2)?;
            for (n, comp) in pw_components(&prod)? {
                if class_of(n as i64, subset)? == class {
                    out.insert(class.clone(), comp)?;
                }
            }
        }
    }
    Ok(out)
}

fn matching_p1p1(base: &Presentation) -> Arc<Presentation> {
    if is_classical(base) {
        algebras::p1p1_classical()
    } else {
        algebras::p1p1()
    }
}

fn require_empty(x: &GrElement) -> Result<()> {
    if x.subset.is_empty() {
        Ok(())
    } else {
        Err(Error::UnsupportedSubset(format!(
            "gr_to_p1p1 needs the empty subset, got {}",
            x.subset
        )))
    }
}

/// Image of a word of O_q(SL₂) under `a ↦ xu, b ↦ xw, c ↦ yu, d ↦ yw`.
fn word_image(p1: &Arc<Presentation>, w: &Word) -> Result<AlgebraElement> {
    let g = |s| AlgebraElement::generator(p1, s);
    let mut acc = AlgebraElement::one(p1);
    for &letter in w {
        let (l, r) = match letter {
            A => (X, U),
            B => (X, W),
            C => (Y, U),
            D => (Y, W),
            _ => return Err(Error::Invalid(format!("unexpected generator {letter}"))),
        };
        acc = acc.try_mul(&g(l).try_mul(&g(r))?)?;
    }
    Ok(acc)
}

/// The isomorphism `gr_∅ O_q(SL₂) → ⊕_k Sym_q^k ⊗ Sym_q^k`. In class `n` only
/// the length-`n` words survive, since `D_q` maps to zero.
pub fn gr_to_p1p1(x: &GrElement) -> Result<AlgebraElement> {
    require_empty(x)?;
    let p1 = matching_p1p1(&x.base);
    let mut acc = AlgebraElement::zero(&p1);
    for (class, r) in &x.classes {
        let n = class.as_scalar() as usize;
        for (w, c) in r.terms() {
            if w.len() == n {
                acc = acc.try_add(&word_image(&p1, w)?.scale(c))?;
            }
        }
    }
    Ok(acc)
}

/// Inverse of [`gr_to_p1p1`] on elements of bidegrees `(n, n)`.
pub fn p1p1_to_gr(y: &AlgebraElement) -> Result<GrElement> {
    let p1 = y.presentation();
    let base = match p1.name() {
        "p1p1" => algebras::sl2(),
        "p1p1-cl" => algebras::sl2_classical(),
        other => return Err(Error::PresentationMismatch(other.into(), "p1p1".into())),
    };
    let empty = RootSubset::empty();
    let mut by_n: BTreeMap<usize, Vec<(&Word, &QRational)>> = BTreeMap::new();
    for (w, c) in y.terms() {
        let first = w.iter().filter(|&&g| g == X || g == Y).count();
        let second = w.len() - first;
        if first != second {
            return Err(Error::NotHomogeneous(format!(
                "bidegree ({first},{second}) is off the diagonal"
            )));
        }
        by_n.entry(first).or_default().push((w, c));
    }
    let mut out = GrElement::zero(&empty, &base)?;
    for (n, terms) in by_n {
        let table = table_for(&base, n as u32)?;
        let mut basis = Vec::new();
        for row in table.iter() {
            for coeff in row {
                basis.push(gr_to_p1p1(&GrElement::from_level(&empty, coeff, n as u32)?)?);
            }
        }
        let mut words: Vec<Word> = basis
            .iter()
            .flat_map(|e| e.terms().keys().cloned())
            .chain(terms.iter().map(|(w, _)| (*w).clone()))
            .collect();
        words.sort();
        words.dedup();
        let a = Matrix::from_rows(
            words
                .iter()
                .map(|w| basis.iter().map(|e| e.coefficient(w)).collect())
                .collect(),
        );
        let b: Vec<QRational> = words
            .iter()
            .map(|w| {
                terms
                    .iter()
                    .find(|(tw, _)| *tw == w)
                    .map(|(_, c)| (*c).clone())
                    .unwrap_or_default()
            })
            .collect();
        let sol = solve(&a, &b)
            .ok_or_else(|| Error::Unsolvable(format!("bidegree ({n},{n}) not in the image")))?;
        let mut residue = AlgebraElement::zero(&base);
        let flat: Vec<&AlgebraElement> = table.iter().flatten().collect();
        for (coeff, s) in flat.into_iter().zip(sol) {
            if !s.is_zero() {
                residue = residue.try_add(&coeff.scale(&s))?;
            }
        }
        out.insert(Weight::scalar(n as i64), residue)?;
    }
    Ok(out)
}
