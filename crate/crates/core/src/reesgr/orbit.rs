use std::collections::BTreeMap;
use std::fmt;

use crate::lattice::{RootSubset, Weight, WeightLattice};
use crate::scalars::QRational;
use crate::{Error, Result};

use super::gr::{gr_multiply, GrElement};

/// An element of `gr_I O_q(SL₂) ⊗ ℂ[Λ_I]`, stored as `μ ↦ g_μ` for `Σ g_μ ⊗ z^μ`
/// with `μ ∈ Λ_I`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitElement {
    subset: RootSubset,
    terms: BTreeMap<Weight, GrElement>,
}

impl OrbitElement {
    pub fn zero(subset: &RootSubset) -> Self {
        OrbitElement {
            subset: subset.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `g ⊗ z^μ`, rejecting `μ ∉ Λ_I`.
    pub fn pure(g: GrElement, mu: Weight) -> Result<Self> {
        if !WeightLattice::sl2().in_sublattice(&mu, g.subset())? {
            return Err(Error::Membership(format!(
                "z^{mu} is not in the root sublattice of {}",
                g.subset()
            )));
        }
        let mut terms = BTreeMap::new();
        let subset = g.subset().clone();
        if !g.is_zero() {
            terms.insert(mu, g);
        }
        Ok(OrbitElement { subset, terms })
    }

    pub fn subset(&self) -> &RootSubset {
        &self.subset
    }

    pub fn terms(&self) -> &BTreeMap<Weight, GrElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.subset == other.subset {
            Ok(())
        } else {
            Err(Error::SubsetMismatch(format!("{} vs {}", self.subset, other.subset)))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (mu, g) in &other.terms {
            let sum = match terms.get(mu) {
                Some(h) => h.try_add(g)?,
                None => g.clone(),
            };
            terms.insert(mu.clone(), sum);
        }
        terms.retain(|_, g| !g.is_zero());
        Ok(OrbitElement {
            subset: self.subset.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &QRational) -> Self {
        let mut terms: BTreeMap<Weight, GrElement> =
            self.terms.iter().map(|(k, g)| (k.clone(), g.scale(c))).collect();
        terms.retain(|_, g| !g.is_zero());
        OrbitElement {
            subset: self.subset.clone(),
            terms,
        }
    }
}

/// `gr_I` product on the first factor, group-algebra product on the second.
pub fn orbit_algebra_multiply(
    subset: &RootSubset,
    x: &OrbitElement,
    y: &OrbitElement,
) -> Result<OrbitElement> {
    x.check_same(y)?;
    if &x.subset != subset {
        return Err(Error::SubsetMismatch(format!("{} vs {subset}", x.subset)));
    }
    let mut out = OrbitElement::zero(subset);
    for (m1, g1) in &x.terms {
        for (m2, g2) in &y.terms {
            let prod = gr_multiply(subset, g1, g2)?;
            out = out.try_add(&OrbitElement::pure(prod, m1.add(m2))?)?;
        }
    }
    Ok(out)
}

impl fmt::Display for OrbitElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(mu, g)| format!("({g})|(z^{mu})"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::algebras::{self, A, B, C, D};
    use crate::ncalg::AlgebraElement;
    use crate::reesgr::gr::gr_symbol;

    #[test]
    fn full_subset_laurent_parts_cancel() {
        let p = algebras::sl2();
        let full = RootSubset::full(1);
        let a = gr_symbol(&full, &AlgebraElement::generator(&p, A)).unwrap();
        let d = gr_symbol(&full, &AlgebraElement::generator(&p, D)).unwrap();
        let x = OrbitElement::pure(a, Weight::scalar(2)).unwrap();
        let y = OrbitElement::pure(d, Weight::scalar(-2)).unwrap();
        let prod = orbit_algebra_multiply(&full, &x, &y).unwrap();
        let ad = AlgebraElement::generator(&p, A)
            .try_mul(&AlgebraElement::generator(&p, D))
            .unwrap();
        let expected = OrbitElement::pure(gr_symbol(&full, &ad).unwrap(), Weight::scalar(0)).unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn empty_subset_rejects_nonzero_shift() {
        let p = algebras::sl2();
        let e = RootSubset::empty();
        let b = gr_symbol(&e, &AlgebraElement::generator(&p, B)).unwrap();
        assert!(OrbitElement::pure(b.clone(), Weight::scalar(2)).is_err());
        let c = gr_symbol(&e, &AlgebraElement::generator(&p, C)).unwrap();
        let x = OrbitElement::pure(b, Weight::scalar(0)).unwrap();
        let y = OrbitElement::pure(c, Weight::scalar(0)).unwrap();
        assert_eq!(
            orbit_algebra_multiply(&e, &x, &y).unwrap(),
            orbit_algebra_multiply(&e, &y, &x).unwrap()
        );
    }
}
