use std::sync::Arc;

use crate::lattice::RootSubset;
use crate::linalg::{kernel, Echelon};
use crate::ncalg::{AlgebraElement, Presentation, TensorElement};
use crate::qgroups::{coefficient_product, table_for, IrrepVn, MatrixCoefficient};
use crate::scalars::QRational;
use crate::{Error, Result};

use super::gr::{class_of, gr_multiply, GrElement};

fn is_full(subset: &RootSubset) -> Result<bool> {
    if subset.is_empty() {
        Ok(false)
    } else if subset.is_full(1) {
        Ok(true)
    } else {
        Err(Error::UnsupportedSubset(format!("{subset} for SL2")))
    }
}

/// Indices of the basis of `(V_n)_I`: the highest-weight line for `I = ∅`,
/// all of `V_n` for `I = Δ`.
pub fn vi_basis(n: u32, subset: &RootSubset) -> Result<Vec<u32>> {
    Ok(if is_full(subset)? {
        (0..=n).collect()
    } else {
        vec![0]
    })
}

/// Checks that [`vi_basis`] spans the joint kernel of the generators of `u_I`
/// acting on `V_n` (`E` for `I = ∅`, nothing for `I = Δ`).
pub fn vi_basis_matches_invariants(n: u32, subset: &RootSubset) -> Result<bool> {
    let dim = n as usize + 1;
    let rep = IrrepVn::new(n);
    let ker: Vec<Vec<QRational>> = if is_full(subset)? {
        (0..dim)
            .map(|i| {
                let mut v = vec![QRational::zero(); dim];
                v[i] = QRational::one();
                v
            })
            .collect()
    } else {
        kernel(&rep.e_matrix())
    };
    let basis = vi_basis(n, subset)?;
    if ker.len() != basis.len() {
        return Ok(false);
    }
    let mut span = Echelon::new(dim);
    for v in ker {
        span.insert(v);
    }
    Ok(basis.iter().all(|&i| {
        let mut v = vec![QRational::zero(); dim];
        v[i as usize] = QRational::one();
        span.contains(v)
    }))
}

/// `Φ(c^{V_n}_{i,j}) = Σ_{k ∈ (V_n)_I} c^{V_n}_{i,k} ⊗ c^{V_n}_{k,j}` over `base`
/// (O_q(SL₂) or its classical limit).
pub fn phi(subset: &RootSubset, c: MatrixCoefficient, base: &Arc<Presentation>) -> Result<TensorElement> {
    let table = table_for(base, c.n)?;
    let mut acc = TensorElement::zero(vec![base.clone(), base.clone()]);
    for k in vi_basis(c.n, subset)? {
        let left = &table[c.row as usize][k as usize];
        let right = &table[k as usize][c.col as usize];
        acc = acc.try_add(&TensorElement::pure(&[left.clone(), right.clone()]))?;
    }
    Ok(acc)
}

fn specialize(c: &QRational, base: &Presentation) -> Result<QRational> {
    if crate::ncalg::algebras::is_classical(base) {
        Ok(QRational::from_rational(c.eval_at_one()?))
    } else {
        Ok(c.clone())
    }
}

/// Product `c1·c2` in `gr_I`, expanded through the Clebsch–Gordan decomposition
/// and truncated to the components with `n1 + n2 − ν ∈ Λ_I`.
pub fn gr_coefficient_product(
    subset: &RootSubset,
    c1: MatrixCoefficient,
    c2: MatrixCoefficient,
    base: &Presentation,
) -> Result<Vec<(MatrixCoefficient, QRational)>> {
    let class = class_of((c1.n + c2.n) as i64, subset)?;
    let mut out = Vec::new();
    for (c, s) in coefficient_product(c1, c2) {
        if class_of(c.n as i64, subset)? == class {
            let s = specialize(&s, base)?;
            if !s.is_zero() {
                out.push((c, s));
            }
        }
    }
    Ok(out)
}

/// Checks `Φ(c1 ·_I c2) = Φ(c1)·Φ(c2)` in `base ⊗ base`, and that the
/// Clebsch–Gordan expansion of `c1 ·_I c2` agrees with [`gr_multiply`].
pub fn phi_multiplicativity_check(
    subset: &RootSubset,
    c1: MatrixCoefficient,
    c2: MatrixCoefficient,
    base: &Arc<Presentation>,
) -> Result<bool> {
    let product = gr_coefficient_product(subset, c1, c2, base)?;
    let mut lhs = TensorElement::zero(vec![base.clone(), base.clone()]);
    let mut residue = AlgebraElement::zero(base);
    for (c, s) in &product {
        lhs = lhs.try_add(&phi(subset, *c, base)?.scale(s))?;
        let t = table_for(base, c.n)?;
        residue = residue.try_add(&t[c.row as usize][c.col as usize].scale(s))?;
    }
    let rhs = phi(subset, c1, base)?.try_mul(&phi(subset, c2, base)?)?;
    if lhs != rhs {
        return Ok(false);
    }
    let elem = |c: MatrixCoefficient| -> Result<GrElement> {
        let t = table_for(base, c.n)?;
        GrElement::from_level(subset, &t[c.row as usize][c.col as usize], c.n)
    };
    let via_gr = gr_multiply(subset, &elem(c1)?, &elem(c2)?)?;
    let class = class_of((c1.n + c2.n) as i64, subset)?;
    Ok(via_gr.representative() == residue && via_gr.classes().keys().all(|k| *k == class))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::algebras::{self, A};
    use crate::qgroups::coproduct;

    fn mc(n: u32, i: u32, j: u32) -> MatrixCoefficient {
        MatrixCoefficient::new(n, i, j).unwrap()
    }

    #[test]
    fn basis_and_invariants() {
        for n in 0..=6 {
            assert!(vi_basis_matches_invariants(n, &RootSubset::empty()).unwrap());
            assert!(vi_basis_matches_invariants(n, &RootSubset::full(1)).unwrap());
        }
        assert_eq!(vi_basis(3, &RootSubset::empty()).unwrap(), vec![0]);
        assert_eq!(vi_basis(3, &RootSubset::full(1)).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn phi_on_generators() {
        let p = algebras::sl2();
        let a = AlgebraElement::generator(&p, A);
        assert_eq!(phi(&RootSubset::full(1), mc(1, 0, 0), &p).unwrap(), coproduct(&a).unwrap());
        assert_eq!(
            phi(&RootSubset::empty(), mc(1, 0, 0), &p).unwrap(),
            TensorElement::pure(&[a.clone(), a])
        );
    }

    #[test]
    fn multiplicative_on_a_and_d() {
        let p = algebras::sl2();
        for s in [RootSubset::empty(), RootSubset::full(1)] {
            assert!(phi_multiplicativity_check(&s, mc(1, 0, 0), mc(1, 1, 1), &p).unwrap());
            assert!(phi_multiplicativity_check(&s, mc(1, 0, 0), mc(1, 0, 0), &p).unwrap());
        }
    }
}
