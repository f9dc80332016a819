use std::sync::Arc;

use serde::Serialize;

use crate::linalg::{kernel, Matrix};
use crate::memo::Memo;
use crate::scalars::{qint, QRational, QRationalJson};
use crate::{Error, Result};

use super::irrep::{tensor_action, QMatrix};

/// One irreducible summand `V_k ⊂ V_n ⊗ V_m`.
#[derive(Clone, Debug)]
pub struct CGSummand {
    pub k: u32,
    /// `ι_k : V_k → V_n ⊗ V_m`, of shape `(n+1)(m+1) × (k+1)`.
    pub inclusion: QMatrix,
    /// `π_k : V_n ⊗ V_m → V_k`, of shape `(k+1) × (n+1)(m+1)`.
    pub projection: QMatrix,
}

/// Decomposition of `V_n ⊗ V_m` into irreducibles; tensor basis index `(i, j) ↦ i(m+1) + j`.
#[derive(Clone, Debug)]
pub struct CGDecomposition {
    pub n: u32,
    pub m: u32,
    /// Summands in decreasing order of highest weight.
    pub summands: Vec<CGSummand>,
}

impl CGDecomposition {
    pub fn summand(&self, k: u32) -> Option<&CGSummand> {
        self.summands.iter().find(|s| s.k == k)
    }

    pub fn dim(&self) -> usize {
        (self.n as usize + 1) * (self.m as usize + 1)
    }

    /// Check `π_k ι_l = δ_{kl}` and `Σ ι_k π_k = 1`.
    pub fn check_invariants(&self) -> bool {
        for s in &self.summands {
            if s.k > self.n + self.m || !(self.n + self.m - s.k).is_multiple_of(2) {
                return false;
            }
            for t in &self.summands {
                let prod = s.projection.mul(&t.inclusion);
                let expected = if s.k == t.k {
                    Matrix::identity(s.k as usize + 1)
                } else {
                    Matrix::zeros(s.k as usize + 1, t.k as usize + 1)
                };
                if prod != expected {
                    return false;
                }
            }
        }
        let total = self
            .summands
            .iter()
            .fold(Matrix::zeros(self.dim(), self.dim()), |acc, s| {
                acc.add(&s.inclusion.mul(&s.projection))
            });
        total == Matrix::identity(self.dim())
    }

    pub fn to_json(&self) -> CGJson {
        let dump = |m: &QMatrix| -> Vec<Vec<QRationalJson>> {
            (0..m.rows())
                .map(|i| m.row(i).iter().map(|x| x.to_json()).collect())
                .collect()
        };
        CGJson {
            n: self.n,
            m: self.m,
            summands: self
                .summands
                .iter()
                .map(|s| CGSummandJson {
                    k: s.k,
                    inclusion: dump(&s.inclusion),
                    projection: dump(&s.projection),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CGSummandJson {
    pub k: u32,
    pub inclusion: Vec<Vec<QRationalJson>>,
    pub projection: Vec<Vec<QRationalJson>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CGJson {
    pub n: u32,
    pub m: u32,
    pub summands: Vec<CGSummandJson>,
}

static CG_MEMO: Memo<(u32, u32), CGDecomposition> = Memo::new();

/// Clebsch–Gordan decomposition of `V_n ⊗ V_m`, memoized.
pub fn cg_decompose(n: u32, m: u32) -> Arc<CGDecomposition> {
    CG_MEMO
        .get_or_try_insert(&(n, m), || compute(n, m))
        .expect("Clebsch-Gordan data exists for all n, m")
}

fn compute(n: u32, m: u32) -> Result<CGDecomposition> {
    let (e, f, _, _) = tensor_action(n, m);
    let dim = (n as usize + 1) * (m as usize + 1);
    let index = |i: u32, j: u32| (i * (m + 1) + j) as usize;
    // indices of the weight space with i + j = s
    let level = |s: u32| -> Vec<usize> {
        (0..=n)
            .filter(|&i| s >= i && s - i <= m)
            .map(|i| index(i, s - i))
            .collect()
    };
    let top = n.min(m);
    let mut inclusions: Vec<(u32, QMatrix)> = Vec::new();
    for s in 0..=top {
        let k = n + m - 2 * s;
        let cols = level(s);
        // E restricted to this weight space
        let block = Matrix::from_rows(
            (0..dim)
                .map(|r| cols.iter().map(|&c| e.get(r, c).clone()).collect())
                .collect(),
        );
        let ker = kernel(&block);
        if ker.len() != 1 {
            return Err(Error::Unsolvable(format!(
                "highest-weight space of weight {k} in V_{n}⊗V_{m} has dimension {}",
                ker.len()
            )));
        }
        let coeffs = &ker[0];
        let lead = coeffs
            .iter()
            .find(|x| !x.is_zero())
            .expect("kernel vector is nonzero")
            .inverse()?;
        let mut h = vec![QRational::zero(); dim];
        for (c, &idx) in coeffs.iter().zip(&cols) {
            h[idx] = c * &lead;
        }
        let mut inc = Matrix::zeros(dim, k as usize + 1);
        let mut v = h;
        let mut fact = QRational::one();
        for l in 0..=k as usize {
            if l > 0 {
                v = f.apply(&v);
                fact = &fact * &qint(l as i64);
            }
            let scale = fact.inverse()?;
            for (r, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    inc.set(r, l, x * &scale);
                }
            }
        }
        inclusions.push((k, inc));
    }
    // invert weight space by weight space: the image vectors of weight w span that space
    let mut projections: Vec<QMatrix> = inclusions
        .iter()
        .map(|(k, _)| Matrix::zeros(*k as usize + 1, dim))
        .collect();
    for s in 0..=(n + m) {
        let rows = level(s);
        let weight = n as i64 + m as i64 - 2 * s as i64;
        // (summand index, l) with k − 2l = weight
        let cols: Vec<(usize, usize)> = inclusions
            .iter()
            .enumerate()
            .filter_map(|(si, (k, _))| {
                let k = *k as i64;
                let l2 = k - weight;
                (l2 >= 0 && l2 % 2 == 0 && l2 / 2 <= k).then_some((si, (l2 / 2) as usize))
            })
            .collect();
        let block = Matrix::from_rows(
            rows.iter()
                .map(|&r| {
                    cols.iter()
                        .map(|&(si, l)| inclusions[si].1.get(r, l).clone())
                        .collect()
                })
                .collect(),
        );
        let inv = block.inverse().ok_or_else(|| {
            Error::Unsolvable(format!("weight block {weight} of V_{n}⊗V_{m} is singular"))
        })?;
        for (ci, &(si, l)) in cols.iter().enumerate() {
            for (ri, &r) in rows.iter().enumerate() {
                projections[si].set(l, r, inv.get(ci, ri).clone());
            }
        }
    }
    let summands = inclusions
        .into_iter()
        .zip(projections)
        .map(|((k, inclusion), projection)| CGSummand {
            k,
            inclusion,
            projection,
        })
        .collect();
    Ok(CGDecomposition { n, m, summands })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summand_weights() {
        let ks = |n, m| -> Vec<u32> { cg_decompose(n, m).summands.iter().map(|s| s.k).collect() };
        assert_eq!(ks(1, 1), vec![2, 0]);
        assert_eq!(ks(2, 1), vec![3, 1]);
        assert_eq!(ks(3, 0), vec![3]);
    }

    #[test]
    fn trivial_factor_gives_identity() {
        let d = cg_decompose(3, 0);
        assert_eq!(d.summands[0].inclusion, Matrix::identity(4));
        assert_eq!(d.summands[0].projection, Matrix::identity(4));
    }

    #[test]
    fn invariants_small() {
        for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            assert!(cg_decompose(n, m).check_invariants(), "({n},{m})");
        }
    }
}
