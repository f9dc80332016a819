//! Dense univariate polynomials over ℚ, used only to canonicalize rational functions.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients in ascending degree; no trailing zeros.
pub(crate) type Poly = Vec<BigRational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = a.clone();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b.last().unwrap().recip();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead_inv;
        for (i, bc) in b.iter().enumerate() {
            let delta = &c * bc;
            rem[shift + i] -= delta;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn monic(mut p: Poly) -> Poly {
    if let Some(lead) = p.last().cloned() {
        if !lead.is_one() {
            let inv = lead.recip();
            for c in p.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
    p
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::laurent::rat;

    fn p(cs: &[i64]) -> Poly {
        cs.iter().map(|&c| rat(c)).collect()
    }

    #[test]
    fn gcd_of_products() {
        // (q+1)(q-2) and (q+1)(q+3)
        let a = p(&[-2, -1, 1]);
        let b = p(&[3, 4, 1]);
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        assert_eq!(gcd(&a, &p(&[5])), p(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        let (q, r) = divrem(&a, &p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_empty());
    }
}
