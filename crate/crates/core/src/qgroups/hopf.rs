use std::sync::Arc;

use crate::ncalg::algebras::{is_classical, is_matrix_type, is_sl2_type, A, B, C, D};
use crate::ncalg::{AlgebraElement, Presentation, TensorElement};
use crate::scalars::QRational;
use crate::{Error, Result};

fn q_of(p: &Presentation) -> QRational {
    if is_classical(p) {
        QRational::one()
    } else {
        QRational::q()
    }
}

fn require_matrix_type(p: &Presentation) -> Result<()> {
    if is_matrix_type(p) {
        Ok(())
    } else {
        Err(Error::PresentationMismatch(p.name().into(), "mat2".into()))
    }
}

/// `Δ(x_{ij}) = Σ_k x_{ik} ⊗ x_{kj}` on the generator matrix `[[a, b], [c, d]]`.
fn generator_coproduct(p: &Arc<Presentation>, g: u8) -> TensorElement {
    let gen = |x| AlgebraElement::generator(p, x);
    let m = [[A, B], [C, D]];
    let (i, j) = match g {
        A => (0, 0),
        B => (0, 1),
        C => (1, 0),
        _ => (1, 1),
    };
    let t1 = TensorElement::pure(&[gen(m[i][0]), gen(m[0][j])]);
    let t2 = TensorElement::pure(&[gen(m[i][1]), gen(m[1][j])]);
    t1.try_add(&t2).expect("same factors")
}

/// The coproduct, extended multiplicatively from the generators.
pub fn coproduct(x: &AlgebraElement) -> Result<TensorElement> {
    let p = x.presentation();
    require_matrix_type(p)?;
    let images: Vec<TensorElement> = (0..4).map(|g| generator_coproduct(p, g)).collect();
    let factors = vec![p.clone(), p.clone()];
    x.substitute(
        TensorElement::zero(factors.clone()),
        TensorElement::one(factors),
        &images,
        |a, b| a.try_add(b),
        |a, b| a.try_mul(b),
        |a, c| Ok(a.scale(c)),
    )
}

/// The counit: `ε(a) = ε(d) = 1`, `ε(b) = ε(c) = 0`.
pub fn counit(x: &AlgebraElement) -> Result<QRational> {
    require_matrix_type(x.presentation())?;
    let mut acc = QRational::zero();
    for (w, c) in x.terms() {
        if w.iter().all(|&g| g == A || g == D) {
            acc += c;
        }
    }
    Ok(acc)
}

/// The antipode of O_q(SL₂): `S(a) = d`, `S(b) = −q⁻¹b`, `S(c) = −qc`, `S(d) = a`,
/// extended anti-multiplicatively.
pub fn antipode(x: &AlgebraElement) -> Result<AlgebraElement> {
    let p = x.presentation();
    if !is_sl2_type(p) {
        return Err(Error::NoAntipode(p.name().into()));
    }
    let q = q_of(p);
    let qinv = q.inverse()?;
    let gen = |g| AlgebraElement::generator(p, g);
    let images = [
        gen(D),
        gen(B).scale(&-qinv),
        gen(C).scale(&-q),
        gen(A),
    ];
    let mut acc = AlgebraElement::zero(p);
    for (w, c) in x.terms() {
        let mut term = AlgebraElement::one(p);
        for &g in w.iter().rev() {
            term = term.try_mul(&images[g as usize])?;
        }
        acc = acc.try_add(&term.scale(c))?;
    }
    Ok(acc)
}

/// `(Δ ⊗ id)Δ(x)` and `(id ⊗ Δ)Δ(x)`.
pub fn coassociativity_sides(x: &AlgebraElement) -> Result<(TensorElement, TensorElement)> {
    let p = x.presentation();
    let d = coproduct(x)?;
    let pp = [p.clone(), p.clone()];
    let split = |w: &Vec<u8>| coproduct(&AlgebraElement::from_word(p, w.clone())?);
    let left = d.expand_slot(0, &pp, split)?;
    let right = d.expand_slot(1, &pp, split)?;
    Ok((left, right))
}

/// `(ε ⊗ id)Δ(x)` and `(id ⊗ ε)Δ(x)`, as elements of the algebra.
pub fn counit_sides(x: &AlgebraElement) -> Result<(AlgebraElement, AlgebraElement)> {
    let p = x.presentation();
    let d = coproduct(x)?;
    let mut left = AlgebraElement::zero(p);
    let mut right = AlgebraElement::zero(p);
    for (ws, c) in d.terms() {
        let e0 = counit(&AlgebraElement::from_word(p, ws[0].clone())?)?;
        let e1 = counit(&AlgebraElement::from_word(p, ws[1].clone())?)?;
        left = left.try_add(&AlgebraElement::from_word(p, ws[1].clone())?.scale(&(c * &e0)))?;
        right = right.try_add(&AlgebraElement::from_word(p, ws[0].clone())?.scale(&(c * &e1)))?;
    }
    Ok((left, right))
}

/// `m(S ⊗ id)Δ(x)` and `m(id ⊗ S)Δ(x)`.
pub fn antipode_sides(x: &AlgebraElement) -> Result<(AlgebraElement, AlgebraElement)> {
    let p = x.presentation();
    let d = coproduct(x)?;
    let mut left = AlgebraElement::zero(p);
    let mut right = AlgebraElement::zero(p);
    for (ws, c) in d.terms() {
        let u = AlgebraElement::from_word(p, ws[0].clone())?;
        let v = AlgebraElement::from_word(p, ws[1].clone())?;
        left = left.try_add(&antipode(&u)?.try_mul(&v)?.scale(c))?;
        right = right.try_add(&u.try_mul(&antipode(&v)?)?.scale(c))?;
    }
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::algebras;

    #[test]
    fn generator_tables() {
        let p = algebras::sl2();
        let a = AlgebraElement::generator(&p, A);
        let b = AlgebraElement::generator(&p, B);
        let c = AlgebraElement::generator(&p, C);
        let expected = TensorElement::pure(&[a.clone(), a.clone()])
            .try_add(&TensorElement::pure(&[b.clone(), c.clone()]))
            .unwrap();
        assert_eq!(coproduct(&a).unwrap(), expected);
        assert!(counit(&b).unwrap().is_zero());
        assert!(counit(&a).unwrap().is_one());
        let s2 = antipode(&antipode(&b).unwrap()).unwrap();
        assert_eq!(s2, b.scale(&QRational::q_pow(-2)));
    }

    #[test]
    fn no_antipode_on_mat2() {
        let p = algebras::mat2();
        let a = AlgebraElement::generator(&p, A);
        assert!(matches!(antipode(&a), Err(Error::NoAntipode(_))));
    }
}
