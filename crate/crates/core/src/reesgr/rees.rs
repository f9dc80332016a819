use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::ncalg::algebras::{self, is_classical, is_sl2_type};
use crate::ncalg::{format_sum, AlgebraElement, Presentation, TensorElement};
use crate::qgroups::{coproduct, counit};
use crate::scalars::QRational;
use crate::{Error, Result};

/// Whether every normal word of `x` has length at most `n` and of the same parity.
pub fn level_membership(x: &AlgebraElement, n: u32) -> bool {
    x.terms()
        .keys()
        .all(|w| w.len() as u32 <= n && (n - w.len() as u32).is_multiple_of(2))
}

/// An element `Σ f_n·zⁿ` of the Rees algebra of the Peter–Weyl filtration of
/// O_q(SL₂) (or of O(SL₂) at `q = 1`), with each `f_n` in level `≤ n`.
#[derive(Clone, Debug)]
pub struct ReesElement {
    base: Arc<Presentation>,
    parts: BTreeMap<u32, AlgebraElement>,
}

impl PartialEq for ReesElement {
    fn eq(&self, other: &Self) -> bool {
        self.base.same_as(&other.base) && self.parts == other.parts
    }
}

fn check_base(p: &Presentation) -> Result<()> {
    if is_sl2_type(p) {
        Ok(())
    } else {
        Err(Error::PresentationMismatch(p.name().into(), "sl2".into()))
    }
}

impl ReesElement {
    pub fn zero(base: &Arc<Presentation>) -> Self {
        ReesElement {
            base: base.clone(),
            parts: BTreeMap::new(),
        }
    }

    pub fn one(base: &Arc<Presentation>) -> Self {
        Self::homogeneous(AlgebraElement::one(base), 0).expect("unit is in level 0")
    }

    /// `f·zⁿ`, checking that `f` lies in level `≤ n`.
    pub fn homogeneous(f: AlgebraElement, n: u32) -> Result<Self> {
        let mut parts = BTreeMap::new();
        parts.insert(n, f);
        Self::from_parts(parts)
    }

    pub fn from_parts(parts: BTreeMap<u32, AlgebraElement>) -> Result<Self> {
        let base = parts
            .values()
            .next()
            .map(|x| x.presentation().clone())
            .unwrap_or_else(algebras::sl2);
        check_base(&base)?;
        let mut clean = BTreeMap::new();
        for (n, f) in parts {
            if !f.presentation().same_as(&base) {
                return Err(Error::PresentationMismatch(
                    f.presentation().name().into(),
                    base.name().into(),
                ));
            }
            if !level_membership(&f, n) {
                return Err(Error::Membership(format!("{f} is not in level <= {n}")));
            }
            if !f.is_zero() {
                clean.insert(n, f);
            }
        }
        Ok(ReesElement { base, parts: clean })
    }

    /// The generators `az, bz, cz, dz`.
    pub fn generator(base: &Arc<Presentation>, g: u8) -> Self {
        Self::homogeneous(AlgebraElement::generator(base, g), 1).expect("generators are in level 1")
    }

    /// `z²`, the image of the unit in degree two.
    pub fn z_squared(base: &Arc<Presentation>) -> Self {
        Self::homogeneous(AlgebraElement::one(base), 2).expect("unit is in level 2")
    }

    pub fn base(&self) -> &Arc<Presentation> {
        &self.base
    }

    pub fn parts(&self) -> &BTreeMap<u32, AlgebraElement> {
        &self.parts
    }

    pub fn part(&self, n: u32) -> AlgebraElement {
        self.parts
            .get(&n)
            .cloned()
            .unwrap_or_else(|| AlgebraElement::zero(&self.base))
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.base.same_as(&other.base) {
            Ok(())
        } else {
            Err(Error::PresentationMismatch(
                self.base.name().into(),
                other.base.name().into(),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut parts = self.parts.clone();
        for (n, f) in &other.parts {
            let e = parts.entry(*n).or_insert_with(|| AlgebraElement::zero(&self.base));
            *e = e.try_add(f)?;
        }
        parts.retain(|_, f| !f.is_zero());
        Ok(ReesElement {
            base: self.base.clone(),
            parts,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&QRational::from_int(-1)))
    }

    pub fn scale(&self, c: &QRational) -> Self {
        let mut parts = BTreeMap::new();
        for (n, f) in &self.parts {
            let g = f.scale(c);
            if !g.is_zero() {
                parts.insert(*n, g);
            }
        }
        ReesElement {
            base: self.base.clone(),
            parts,
        }
    }

    /// `(f zⁿ)(g zᵐ) = (fg) z^{n+m}`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut parts: BTreeMap<u32, AlgebraElement> = BTreeMap::new();
        for (n, f) in &self.parts {
            for (m, g) in &other.parts {
                let prod = f.try_mul(g)?;
                let e = parts
                    .entry(n + m)
                    .or_insert_with(|| AlgebraElement::zero(&self.base));
                *e = e.try_add(&prod)?;
            }
        }
        parts.retain(|_, f| !f.is_zero());
        for (n, f) in &parts {
            if !level_membership(f, *n) {
                return Err(Error::Membership(format!(
                    "product left level {n}; the filtration is not multiplicative"
                )));
            }
        }
        Ok(ReesElement {
            base: self.base.clone(),
            parts,
        })
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = ReesElement::one(&self.base);
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }
}

/// Product in the Rees algebra.
pub fn rees_multiply(x: &ReesElement, y: &ReesElement) -> Result<ReesElement> {
    x.try_mul(y)
}

impl fmt::Display for ReesElement {
    /// Terms are written `w*z^n`, e.g. `a*d*z^2 - q*b*c*z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items = Vec::new();
        for (n, part) in &self.parts {
            for (w, c) in part.sorted_terms() {
                let word = self.base.word_to_string(w);
                let z = match n {
                    0 => String::new(),
                    1 => "z".into(),
                    n => format!("z^{n}"),
                };
                let body = match (word.as_str(), z.is_empty()) {
                    (w, true) => w.to_string(),
                    ("1", false) => z,
                    (w, false) => format!("{w}*{z}"),
                };
                items.push((c, body));
            }
        }
        format_sum(f, items)
    }
}

/// `Δ(f zⁿ) = Δ(f)·(zⁿ ⊗ zⁿ)`, stored as `n ↦ Δ(f_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReesTensor {
    pub parts: BTreeMap<u32, TensorElement>,
}

impl fmt::Display for ReesTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items = Vec::new();
        for (n, t) in &self.parts {
            let z = match n {
                0 => String::new(),
                1 => "*z".into(),
                n => format!("*z^{n}"),
            };
            for (ws, c) in t.terms() {
                let body = ws
                    .iter()
                    .zip(t.factors())
                    .map(|(w, p)| {
                        let word = p.word_to_string(w);
                        if z.is_empty() {
                            format!("({word})")
                        } else if word == "1" {
                            format!("({})", &z[1..])
                        } else {
                            format!("({word}{z})")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("|");
                items.push((c, body));
            }
        }
        format_sum(f, items)
    }
}

/// The coproduct of the Rees algebra, componentwise in `n`.
pub fn rees_coproduct(x: &ReesElement) -> Result<ReesTensor> {
    let mut parts = BTreeMap::new();
    for (n, f) in &x.parts {
        parts.insert(*n, coproduct(f)?);
    }
    Ok(ReesTensor { parts })
}

/// `ε(f zⁿ) = ε(f)`.
pub fn rees_counit(x: &ReesElement) -> Result<QRational> {
    let mut acc = QRational::zero();
    for f in x.parts.values() {
        acc += &counit(f)?;
    }
    Ok(acc)
}

fn matching_mat2(base: &Presentation) -> Arc<Presentation> {
    if is_classical(base) {
        algebras::mat2_classical()
    } else {
        algebras::mat2()
    }
}

fn matching_vinberg(base: &Presentation) -> Arc<Presentation> {
    if is_classical(base) {
        algebras::vinberg_classical()
    } else {
        algebras::vinberg()
    }
}

/// The isomorphism onto O_q(Mat₂): `az ↦ a`, …, `z² ↦ D_q`. A normal word `w`
/// of length `k` in `f zⁿ` maps to `w·D_q^{(n−k)/2}`.
pub fn vinberg_to_matq(x: &ReesElement) -> Result<AlgebraElement> {
    let mat = matching_mat2(&x.base);
    let det = algebras::quantum_determinant(&mat);
    let mut det_pows = vec![AlgebraElement::one(&mat)];
    let mut acc = AlgebraElement::zero(&mat);
    for (n, f) in &x.parts {
        for (w, c) in f.terms() {
            let k = (n - w.len() as u32) / 2;
            while det_pows.len() <= k as usize {
                let next = det_pows.last().expect("nonempty").try_mul(&det)?;
                det_pows.push(next);
            }
            let lifted = AlgebraElement::from_word(&mat, w.clone())?.try_mul(&det_pows[k as usize])?;
            acc = acc.try_add(&lifted.scale(c))?;
        }
    }
    Ok(acc)
}

/// Inverse of [`vinberg_to_matq`]: the degree-`n` part of `y` maps to its image in O_q(SL₂) times `zⁿ`.
pub fn matq_to_vinberg(y: &AlgebraElement) -> Result<ReesElement> {
    let mat = y.presentation();
    if !["mat2", "mat2-cl"].contains(&mat.name()) {
        return Err(Error::PresentationMismatch(mat.name().into(), "mat2".into()));
    }
    let base = if is_classical(mat) {
        algebras::sl2_classical()
    } else {
        algebras::sl2()
    };
    let mut by_degree: BTreeMap<u32, Vec<(Vec<u8>, QRational)>> = BTreeMap::new();
    for (w, c) in y.terms() {
        by_degree
            .entry(w.len() as u32)
            .or_default()
            .push((w.clone(), c.clone()));
    }
    let mut parts = BTreeMap::new();
    for (n, terms) in by_degree {
        parts.insert(n, AlgebraElement::from_terms(&base, terms)?);
    }
    if parts.is_empty() {
        return Ok(ReesElement::zero(&base));
    }
    ReesElement::from_parts(parts)
}

/// The same isomorphism written in the Vinberg generators `az, bz, cz, dz`.
pub fn rees_to_vinberg_presentation(x: &ReesElement) -> Result<AlgebraElement> {
    let m = vinberg_to_matq(x)?;
    let target = matching_vinberg(&x.base);
    AlgebraElement::from_terms(&target, m.terms().iter().map(|(w, c)| (w.clone(), c.clone())))
}

/// Inverse of [`rees_to_vinberg_presentation`].
pub fn vinberg_presentation_to_rees(v: &AlgebraElement) -> Result<ReesElement> {
    let p = v.presentation();
    let mat = match p.name() {
        "vinberg" => algebras::mat2(),
        "vinberg-cl" => algebras::mat2_classical(),
        other => return Err(Error::PresentationMismatch(other.into(), "vinberg".into())),
    };
    let m = AlgebraElement::from_terms(&mat, v.terms().iter().map(|(w, c)| (w.clone(), c.clone())))?;
    matq_to_vinberg(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::algebras::{A, B, C, D};

    #[test]
    fn membership_examples() {
        let p = algebras::sl2();
        let a = AlgebraElement::generator(&p, A);
        assert!(level_membership(&a, 1));
        assert!(!level_membership(&a, 2));
        assert!(level_membership(&AlgebraElement::one(&p), 0));
        let bc = AlgebraElement::from_word(&p, vec![B, C]).unwrap();
        assert!(level_membership(&bc, 4));
    }

    #[test]
    fn determinant_relation() {
        let p = algebras::sl2();
        let g = |x| ReesElement::generator(&p, x);
        let lhs = g(A)
            .try_mul(&g(D))
            .unwrap()
            .try_sub(&g(B).try_mul(&g(C)).unwrap().scale(&QRational::q()))
            .unwrap();
        assert_eq!(lhs, ReesElement::z_squared(&p));
        assert_eq!(lhs.to_string(), "z^2");
    }

    #[test]
    fn z_alone_is_not_an_element() {
        let p = algebras::sl2();
        assert!(ReesElement::homogeneous(AlgebraElement::one(&p), 1).is_err());
    }

    #[test]
    fn matq_round_trip() {
        let p = algebras::sl2();
        let z2 = ReesElement::z_squared(&p);
        let m = vinberg_to_matq(&z2).unwrap();
        assert_eq!(m, algebras::quantum_determinant(&algebras::mat2()));
        assert_eq!(matq_to_vinberg(&m).unwrap(), z2);
        let az = ReesElement::generator(&p, A);
        assert_eq!(
            vinberg_to_matq(&az).unwrap(),
            AlgebraElement::generator(&algebras::mat2(), A)
        );
    }
}
