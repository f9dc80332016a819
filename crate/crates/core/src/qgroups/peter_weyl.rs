use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::linalg::{solve, Matrix};
use crate::ncalg::algebras::{A, B, C, D};
use crate::ncalg::{AlgebraElement, Word};
use crate::scalars::QRational;
use crate::{Error, Result};

use super::coefficients::{table_for, MatrixCoefficient};

/// Left and right weights of a word: `a, b ↦ +1`, `c, d ↦ −1` on the left and
/// `a, c ↦ +1`, `b, d ↦ −1` on the right. Both are gradings of O_q(SL₂).
pub fn word_biweight(w: &[u8]) -> (i64, i64) {
    w.iter().fold((0, 0), |(l, r), &g| match g {
        A => (l + 1, r + 1),
        B => (l + 1, r - 1),
        C => (l - 1, r + 1),
        D => (l - 1, r - 1),
        _ => (l, r),
    })
}

/// Coset of the root lattice (word-length parity) with the minimal filtration degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelDegree {
    /// 0 for even, 1 for odd.
    pub parity: u32,
    pub degree: u32,
}

/// For each parity class present in `x`, the longest normal word length,
/// which is the least `n` with that part in level `≤ n`.
pub fn pw_degree(x: &AlgebraElement) -> Vec<LevelDegree> {
    let mut best: BTreeMap<u32, u32> = BTreeMap::new();
    for w in x.terms().keys() {
        let len = w.len() as u32;
        let e = best.entry(len % 2).or_insert(len);
        *e = (*e).max(len);
    }
    best.into_iter()
        .map(|(parity, degree)| LevelDegree { parity, degree })
        .collect()
}

/// Expansion of `x ∈ O_q(SL₂)` in the matrix-coefficient basis.
pub fn pw_decompose(x: &AlgebraElement) -> Result<BTreeMap<MatrixCoefficient, QRational>> {
    let p = x.presentation();
    // group terms by (parity, left weight, right weight)
    let mut blocks: BTreeMap<(u32, i64, i64), Vec<(&Word, &QRational)>> = BTreeMap::new();
    let mut top: BTreeMap<u32, u32> = BTreeMap::new();
    for (w, c) in x.terms() {
        let (l, r) = word_biweight(w);
        let parity = (w.len() % 2) as u32;
        blocks.entry((parity, l, r)).or_default().push((w, c));
        let t = top.entry(parity).or_insert(0);
        *t = (*t).max(w.len() as u32);
    }
    let mut out = BTreeMap::new();
    for ((parity, l, r), terms) in blocks {
        let max_n = top[&parity];
        let start = l.unsigned_abs().max(r.unsigned_abs()) as u32;
        let unknowns: Vec<MatrixCoefficient> = (start..=max_n)
            .filter(|n| n % 2 == parity)
            .map(|n| MatrixCoefficient {
                n,
                row: ((n as i64 - l) / 2) as u32,
                col: ((n as i64 - r) / 2) as u32,
            })
            .collect();
        let elements: Vec<AlgebraElement> = unknowns
            .iter()
            .map(|c| Ok(table_for(p, c.n)?[c.row as usize][c.col as usize].clone()))
            .collect::<Result<_>>()?;
        let words: BTreeSet<Word> = elements
            .iter()
            .flat_map(|e| e.terms().keys().cloned())
            .chain(terms.iter().map(|(w, _)| (*w).clone()))
            .collect();
        let words: Vec<Word> = words.into_iter().collect();
        let a = Matrix::from_rows(
            words
                .iter()
                .map(|w| elements.iter().map(|e| e.coefficient(w)).collect())
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
        let sol = solve(&a, &b).ok_or_else(|| {
            Error::Unsolvable(format!(
                "element is not in the span of matrix coefficients of level <= {max_n}"
            ))
        })?;
        for (c, v) in unknowns.into_iter().zip(sol) {
            if !v.is_zero() {
                out.insert(c, v);
            }
        }
    }
    Ok(out)
}

/// The component of `x` in the span of the `c^{V_n}_{i,j}`.
pub fn pw_component(x: &AlgebraElement, n: u32) -> Result<AlgebraElement> {
    let p = x.presentation();
    let table = table_for(p, n)?;
    let mut acc = AlgebraElement::zero(p);
    for (c, v) in pw_decompose(x)? {
        if c.n == n {
            acc = acc.try_add(&table[c.row as usize][c.col as usize].scale(&v))?;
        }
    }
    Ok(acc)
}

/// All nonzero Peter–Weyl components of `x`, keyed by highest weight.
pub fn pw_components(x: &AlgebraElement) -> Result<BTreeMap<u32, AlgebraElement>> {
    let p = x.presentation();
    let mut out: BTreeMap<u32, AlgebraElement> = BTreeMap::new();
    for (c, v) in pw_decompose(x)? {
        let table = table_for(p, c.n)?;
        let term = table[c.row as usize][c.col as usize].scale(&v);
        let slot = out.entry(c.n).or_insert_with(|| AlgebraElement::zero(p));
        *slot = slot.try_add(&term)?;
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::algebras;

    #[test]
    fn generator_is_pure() {
        let p = algebras::sl2();
        let a = AlgebraElement::generator(&p, A);
        assert_eq!(pw_component(&a, 1).unwrap(), a);
        assert!(pw_component(&a, 3).unwrap().is_zero());
        assert_eq!(
            pw_component(&AlgebraElement::one(&p), 0).unwrap(),
            AlgebraElement::one(&p)
        );
    }

    #[test]
    fn bc_splits_into_two_components() {
        let p = algebras::sl2();
        let bc = AlgebraElement::from_word(&p, vec![B, C]).unwrap();
        let c0 = pw_component(&bc, 0).unwrap();
        let c2 = pw_component(&bc, 2).unwrap();
        assert!(c0.as_scalar().is_some_and(|s| !s.is_zero()));
        assert_eq!(&c0 + &c2, bc);
    }

    #[test]
    fn degrees_by_parity() {
        let p = algebras::sl2();
        let a = AlgebraElement::generator(&p, A);
        let bc = AlgebraElement::from_word(&p, vec![B, C]).unwrap();
        assert_eq!(
            pw_degree(&(&a + &bc)),
            vec![
                LevelDegree { parity: 0, degree: 2 },
                LevelDegree { parity: 1, degree: 1 }
            ]
        );
        let abc = AlgebraElement::from_word(&p, vec![A, B, C]).unwrap();
        assert_eq!(pw_degree(&abc), vec![LevelDegree { parity: 1, degree: 3 }]);
    }
}
