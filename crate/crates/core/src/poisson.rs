//! Classical Poisson brackets on O(SL₂), O(Mat₂) and the Vinberg algebra, and
//! their comparison with the first-order commutators of the quantum algebras.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::ncalg::algebras::{self, is_classical, A, B, C, D};
use crate::ncalg::{AlgebraElement, LocalizedElement, Presentation, Word};
use crate::reesgr::{level_membership, ReesElement};
use crate::scalars::QRational;
use crate::{Error, Result};

/// A commutative presentation with a bracket on generator pairs, extended by
/// bilinearity and the Leibniz rule.
#[derive(Debug)]
pub struct PoissonPresentation {
    base: Arc<Presentation>,
    table: BTreeMap<(u8, u8), AlgebraElement>,
}

impl PoissonPresentation {
    /// Builds the bracket from `{g_i, g_j}` for `i < j`; the rest follows by
    /// antisymmetry. Fails unless Jacobi holds on every generator triple.
    pub fn new(base: Arc<Presentation>, upper: Vec<((u8, u8), AlgebraElement)>) -> Result<Self> {
        if !is_classical(&base) {
            return Err(Error::InvalidPresentation(format!(
                "`{}` is not commutative",
                base.name()
            )));
        }
        let n = base.num_generators() as u8;
        let mut table = BTreeMap::new();
        for ((i, j), v) in upper {
            if i >= j || j >= n {
                return Err(Error::InvalidPresentation(format!("bad bracket index ({i},{j})")));
            }
            if !v.presentation().same_as(&base) {
                return Err(Error::PresentationMismatch(
                    v.presentation().name().into(),
                    base.name().into(),
                ));
            }
            table.insert((j, i), v.scale(&QRational::from_int(-1)));
            table.insert((i, j), v);
        }
        let pp = PoissonPresentation { base, table };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let [x, y, z] = [i, j, k].map(|g| AlgebraElement::generator(&pp.base, g));
                    if !pp.jacobiator(&x, &y, &z)?.is_zero() {
                        return Err(Error::InvalidPresentation(format!(
                            "Jacobi identity fails on generators ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(pp)
    }

    pub fn base(&self) -> &Arc<Presentation> {
        &self.base
    }

    fn generator_bracket(&self, i: u8, j: u8) -> AlgebraElement {
        self.table
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| AlgebraElement::zero(&self.base))
    }

    fn word_bracket(&self, u: &Word, v: &Word) -> Result<AlgebraElement> {
        let mut acc = AlgebraElement::zero(&self.base);
        for (i, &gi) in u.iter().enumerate() {
            for (j, &gj) in v.iter().enumerate() {
                let g = self.generator_bracket(gi, gj);
                if g.is_zero() {
                    continue;
                }
                let mut rest: Word = u[..i].iter().chain(&u[i + 1..]).copied().collect();
                rest.extend(v[..j].iter().chain(&v[j + 1..]));
                let rest = AlgebraElement::from_word(&self.base, rest)?;
                acc = acc.try_add(&rest.try_mul(&g)?)?;
            }
        }
        Ok(acc)
    }

    /// `{x, y}`.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        for e in [x, y] {
            if !e.presentation().same_as(&self.base) {
                return Err(Error::PresentationMismatch(
                    e.presentation().name().into(),
                    self.base.name().into(),
                ));
            }
        }
        let mut acc = AlgebraElement::zero(&self.base);
        for (u, cu) in x.terms() {
            for (v, cv) in y.terms() {
                acc = acc.try_add(&self.word_bracket(u, v)?.scale(&(cu * cv)))?;
            }
        }
        Ok(acc)
    }

    /// `{x,{y,z}} + {y,{z,x}} + {z,{x,y}}`.
    pub fn jacobiator(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
        z: &AlgebraElement,
    ) -> Result<AlgebraElement> {
        let t1 = self.bracket(x, &self.bracket(y, z)?)?;
        let t2 = self.bracket(y, &self.bracket(z, x)?)?;
        let t3 = self.bracket(z, &self.bracket(x, y)?)?;
        t1.try_add(&t2)?.try_add(&t3)
    }

    /// The bracket on the Rees algebra: `{f z^λ, g z^μ} = {f, g} z^{λ+μ}`.
    pub fn rees_bracket(&self, x: &ReesElement, y: &ReesElement) -> Result<ReesElement> {
        if !x.base().same_as(&self.base) || !y.base().same_as(&self.base) {
            return Err(Error::PresentationMismatch(
                x.base().name().into(),
                self.base.name().into(),
            ));
        }
        let mut parts: BTreeMap<u32, AlgebraElement> = BTreeMap::new();
        for (n, f) in x.parts() {
            for (m, g) in y.parts() {
                let b = self.bracket(f, g)?;
                if !level_membership(&b, n + m) {
                    return Err(Error::Membership(format!(
                        "{{{f}, {g}}} = {b} leaves level {}",
                        n + m
                    )));
                }
                let slot = parts
                    .entry(n + m)
                    .or_insert_with(|| AlgebraElement::zero(&self.base));
                *slot = slot.try_add(&b)?;
            }
        }
        parts.retain(|_, v| !v.is_zero());
        if parts.is_empty() {
            return Ok(ReesElement::zero(&self.base));
        }
        ReesElement::from_parts(parts)
    }

    /// Extension to a central localization:
    /// `{f r^{-k}, g r^{-l}} = ({f,g}·r − k·f{r,g} − l·g{f,r}) r^{-k-l-1}`.
    pub fn localized_bracket(&self, x: &LocalizedElement, y: &LocalizedElement) -> Result<LocalizedElement> {
        let loc = x.localization();
        if !loc.inverted().presentation().same_as(&self.base)
            || loc.inverted() != y.localization().inverted()
        {
            return Err(Error::PresentationMismatch(
                loc.base().name().into(),
                self.base.name().into(),
            ));
        }
        let r = loc.inverted();
        let (f, k) = (x.numerator(), x.power() as i64);
        let (g, l) = (y.numerator(), y.power() as i64);
        let num = self
            .bracket(f, g)?
            .try_mul(r)?
            .try_sub(&f.try_mul(&self.bracket(r, g)?)?.scale(&QRational::from_int(k)))?
            .try_sub(&g.try_mul(&self.bracket(f, r)?)?.scale(&QRational::from_int(l)))?;
        loc.element(num)?.try_mul(&loc.inverse_power((k + l + 1) as u32))
    }
}

fn matrix_table(p: &Arc<Presentation>) -> Vec<((u8, u8), AlgebraElement)> {
    let w = |letters: &[u8]| AlgebraElement::from_word(p, letters.to_vec()).expect("generators");
    vec![
        ((A, B), w(&[A, B])),
        ((A, C), w(&[A, C])),
        ((A, D), w(&[B, C]).scale(&QRational::from_int(2))),
        ((B, C), AlgebraElement::zero(p)),
        ((B, D), w(&[B, D])),
        ((C, D), w(&[C, D])),
    ]
}

fn cached(cell: &'static OnceLock<Arc<PoissonPresentation>>, base: fn() -> Arc<Presentation>) -> Arc<PoissonPresentation> {
    cell.get_or_init(|| {
        let p = base();
        Arc::new(PoissonPresentation::new(p.clone(), matrix_table(&p)).expect("standard bracket satisfies Jacobi"))
    })
    .clone()
}

/// The standard bracket on O(SL₂): `{a,b} = ab`, `{a,c} = ac`, `{b,c} = 0`,
/// `{b,d} = bd`, `{c,d} = cd`, `{a,d} = 2bc`.
pub fn sl2_bracket() -> Arc<PoissonPresentation> {
    static CELL: OnceLock<Arc<PoissonPresentation>> = OnceLock::new();
    cached(&CELL, algebras::sl2_classical)
}

/// The same table on O(Mat₂).
pub fn mat2_bracket() -> Arc<PoissonPresentation> {
    static CELL: OnceLock<Arc<PoissonPresentation>> = OnceLock::new();
    cached(&CELL, algebras::mat2_classical)
}

/// The bracket on the classical Vinberg algebra in the generators
/// `az, bz, cz, dz`: `{az,bz} = (az)(bz)`, …, `{az,dz} = 2(bz)(cz)`.
pub fn vinberg_bracket() -> Arc<PoissonPresentation> {
    static CELL: OnceLock<Arc<PoissonPresentation>> = OnceLock::new();
    cached(&CELL, algebras::vinberg_classical)
}

/// The bracket matching a classical presentation by name.
pub fn bracket_for(p: &Presentation) -> Result<Arc<PoissonPresentation>> {
    match p.name() {
        "sl2-cl" => Ok(sl2_bracket()),
        "mat2-cl" => Ok(mat2_bracket()),
        "vinberg-cl" => Ok(vinberg_bracket()),
        other => Err(Error::PresentationMismatch(other.into(), "sl2-cl".into())),
    }
}

/// Outcome of comparing `lim_{q→1} (xy − yx)/(q − 1)` with the classical bracket.
#[derive(Clone, Debug)]
pub struct SemiclassicalReport {
    pub commutator: AlgebraElement,
    pub limit: AlgebraElement,
    pub bracket: AlgebraElement,
    pub passed: bool,
}

/// Computes the commutator of `x` and `y` in a quantum algebra, takes its
/// first-order coefficient at `q = 1`, and compares with the classical bracket
/// of the specialized elements.
pub fn semiclassical_check(x: &AlgebraElement, y: &AlgebraElement) -> Result<SemiclassicalReport> {
    let p = x.presentation();
    let classical = algebras::classical_of(p)
        .ok_or_else(|| Error::PresentationMismatch(p.name().into(), "sl2".into()))?;
    let pp = bracket_for(&classical)?;
    let commutator = x.commutator(y)?;
    let limit_terms: Vec<(Word, QRational)> = commutator
        .terms()
        .iter()
        .map(|(w, c)| Ok((w.clone(), QRational::from_rational(c.semiclassical_coefficient()?))))
        .collect::<Result<_>>()?;
    let limit = AlgebraElement::from_terms(&classical, limit_terms)?;
    let bracket = pp.bracket(&x.specialize_at_one(&classical)?, &y.specialize_at_one(&classical)?)?;
    let passed = limit == bracket;
    Ok(SemiclassicalReport {
        commutator,
        limit,
        bracket,
        passed,
    })
}

/// The six generator pairs of the standard table, as index pairs.
pub const GENERATOR_PAIRS: [(u8, u8); 6] = [(A, B), (A, C), (A, D), (B, C), (B, D), (C, D)];
