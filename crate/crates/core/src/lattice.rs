//! Weight lattices in fundamental-weight coordinates, the dominance order,
//! quotient orders modulo root sublattices, and cone enumeration.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weight, stored in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    /// Rank-one weight `n`.
    pub fn scalar(n: i64) -> Self {
        Weight(vec![n])
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// Rank-one value; panics on higher rank.
    pub fn as_scalar(&self) -> i64 {
        assert_eq!(self.rank(), 1, "weight {self:?} is not rank one");
        self.0[0]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            write!(f, "(")?;
            for (i, c) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")
        }
    }
}

/// A subset `I` of the simple roots, with 1-based indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootSubset(BTreeSet<usize>);

impl RootSubset {
    pub fn empty() -> Self {
        RootSubset(BTreeSet::new())
    }

    pub fn full(rank: usize) -> Self {
        RootSubset((1..=rank).collect())
    }

    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        RootSubset(members.into_iter().collect())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_full(&self, rank: usize) -> bool {
        self.0.len() == rank && self.0.iter().all(|&i| (1..=rank).contains(&i))
    }
}

impl fmt::Display for RootSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// The class `[λ]_I` of a weight in `Λ/Λ_I`, held by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QuotientClass {
    pub representative: Weight,
    pub subset: RootSubset,
}

/// A weight lattice with a chosen basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightLattice {
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
}

impl WeightLattice {
    pub fn new(simple_roots: Vec<Vec<i64>>) -> Result<Self> {
        let rank = simple_roots.len();
        if rank == 0 {
            return Err(Error::InvalidLattice("rank must be positive".into()));
        }
        for root in &simple_roots {
            if root.len() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    found: root.len(),
                });
            }
        }
        let lattice = WeightLattice { rank, simple_roots };
        if lattice.root_matrix_inverse().is_none() {
            return Err(Error::InvalidLattice(
                "simple roots are linearly dependent".into(),
            ));
        }
        Ok(lattice)
    }

    /// The weight lattice of `SL₂`: rank one, `α₁ = 2`.
    pub fn sl2() -> Self {
        WeightLattice {
            rank: 1,
            simple_roots: vec![vec![2]],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.simple_roots[i - 1].clone())
    }

    fn check(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: w.rank(),
            });
        }
        Ok(())
    }

    fn check_subset(&self, subset: &RootSubset) -> Result<()> {
        if subset.members().any(|i| i == 0 || i > self.rank) {
            return Err(Error::InvalidLattice(format!(
                "subset {subset} is not contained in 1..={}",
                self.rank
            )));
        }
        Ok(())
    }

    /// Inverse of the matrix whose columns are the simple roots.
    fn root_matrix_inverse(&self) -> Option<Vec<Vec<BigRational>>> {
        let n = self.rank;
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|row| {
                let mut r: Vec<BigRational> = (0..n)
                    .map(|col| BigRational::from_integer(BigInt::from(self.simple_roots[col][row])))
                    .collect();
                r.extend((0..n).map(|j| {
                    if j == row {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                r
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, pivot);
            let inv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in 0..2 * n {
                        let delta = &factor * &m[col][c];
                        m[r][c] -= delta;
                    }
                }
            }
        }
        Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
    }

    /// Coordinates of `v` in the basis of simple roots, when `v ∈ Λ_R`.
    pub fn root_coordinates(&self, v: &Weight) -> Result<Option<Vec<i64>>> {
        self.check(v)?;
        let inv = self
            .root_matrix_inverse()
            .expect("simple roots checked independent at construction");
        let mut out = Vec::with_capacity(self.rank);
        for row in inv {
            let mut acc = BigRational::zero();
            for (c, x) in row.iter().zip(&v.0) {
                acc += c * BigRational::from_integer(BigInt::from(*x));
            }
            if !acc.is_integer() {
                return Ok(None);
            }
            let n: i64 = acc
                .to_integer()
                .try_into()
                .map_err(|_| Error::Invalid("root coordinate overflow".into()))?;
            out.push(n);
        }
        Ok(Some(out))
    }

    /// `μ ≤ λ` in the dominance order: `λ − μ` is a nonnegative integer
    /// combination of simple roots.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> Result<bool> {
        self.check(mu)?;
        self.check(lambda)?;
        Ok(match self.root_coordinates(&lambda.sub(mu))? {
            Some(n) => n.iter().all(|&c| c >= 0),
            None => false,
        })
    }

    /// The order on `Λ/Λ_I`: coefficients of roots in `I` are unconstrained.
    pub fn quotient_leq(&self, mu: &QuotientClass, lambda: &QuotientClass) -> Result<bool> {
        if mu.subset != lambda.subset {
            return Err(Error::SubsetMismatch(format!("{} vs {}", mu.subset, lambda.subset)));
        }
        self.check_subset(&mu.subset)?;
        let diff = lambda.representative.sub(&mu.representative);
        Ok(match self.root_coordinates(&diff)? {
            Some(n) => n
                .iter()
                .enumerate()
                .all(|(i, &c)| mu.subset.contains(i + 1) || c >= 0),
            None => false,
        })
    }

    /// All dominant `μ ≤ λ`. For rank one the enumeration is exact and
    /// `horizon` is ignored; otherwise the search box is `[0, horizon]^rank`.
    pub fn lower_set(&self, lambda: &Weight, horizon: u32) -> Result<BTreeSet<Weight>> {
        self.check(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.0.clone()));
        }
        let mut out = BTreeSet::new();
        if self.rank == 1 {
            let step = self.simple_roots[0][0];
            let mut m = lambda.0[0];
            while m >= 0 {
                out.insert(Weight::scalar(m));
                m -= step;
            }
            return Ok(out);
        }
        let bound = horizon as i64;
        let mut coords = vec![0i64; self.rank];
        loop {
            let mu = Weight(coords.clone());
            if self.dominance_leq(&mu, lambda)? {
                out.insert(mu);
            }
            let mut k = 0;
            loop {
                if k == self.rank {
                    return Ok(out);
                }
                coords[k] += 1;
                if coords[k] <= bound {
                    break;
                }
                coords[k] = 0;
                k += 1;
            }
        }
    }

    /// Canonical representative of `λ + Λ_I`, reduced against the Hermite
    /// normal form of the generators `{α_i : i ∈ I}`.
    pub fn coset_class(&self, lambda: &Weight, subset: &RootSubset) -> Result<QuotientClass> {
        self.check(lambda)?;
        self.check_subset(subset)?;
        let gens: Vec<Vec<i64>> = subset
            .members()
            .map(|i| self.simple_roots[i - 1].clone())
            .collect();
        let hnf = hermite_normal_form(gens);
        let mut rep = lambda.0.clone();
        for row in &hnf {
            let p = row.iter().position(|&x| x != 0).expect("HNF rows are nonzero");
            let d = row[p];
            let k = rep[p].div_euclid(d);
            if k != 0 {
                for (r, x) in rep.iter_mut().zip(row) {
                    *r -= k * x;
                }
            }
        }
        Ok(QuotientClass {
            representative: Weight(rep),
            subset: subset.clone(),
        })
    }

    /// Is `v` in the sublattice `Λ_I`?
    pub fn in_sublattice(&self, v: &Weight, subset: &RootSubset) -> Result<bool> {
        Ok(self.coset_class(v, subset)?.representative.is_zero())
    }
}

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_normal_form(mut rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    if rows.is_empty() {
        return rows;
    }
    let ncols = rows[0].len();
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row >= rows.len() {
            break;
        }
        // Euclid on column `col` among rows pivot_row..
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..rows.len() {
                if rows[r][col] != 0
                    && best.is_none_or(|b| rows[r][col].abs() < rows[b][col].abs())
                {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            rows.swap(pivot_row, b);
            let mut done = true;
            for r in pivot_row + 1..rows.len() {
                if rows[r][col] != 0 {
                    let q = rows[r][col].div_euclid(rows[pivot_row][col]);
                    let pr = rows[pivot_row].clone();
                    for (x, y) in rows[r].iter_mut().zip(&pr) {
                        *x -= q * y;
                    }
                    if rows[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if rows[pivot_row][col] == 0 {
            continue;
        }
        if rows[pivot_row][col] < 0 {
            for x in rows[pivot_row].iter_mut() {
                *x = -*x;
            }
        }
        let d = rows[pivot_row][col];
        for r in 0..pivot_row {
            let q = rows[r][col].div_euclid(d);
            if q != 0 {
                let pr = rows[pivot_row].clone();
                for (x, y) in rows[r].iter_mut().zip(&pr) {
                    *x -= q * y;
                }
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows.retain(|r| r.iter().any(|&x| x != 0));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: i64) -> Weight {
        Weight::scalar(n)
    }

    #[test]
    fn sl2_dominance() {
        let l = WeightLattice::sl2();
        assert!(l.dominance_leq(&w(1), &w(3)).unwrap());
        assert!(!l.dominance_leq(&w(1), &w(2)).unwrap());
        assert!(l.dominance_leq(&w(4), &w(4)).unwrap());
        assert!(!l.dominance_leq(&w(3), &w(1)).unwrap());
        assert!(l.dominance_leq(&Weight(vec![1, 2]), &w(3)).is_err());
    }

    #[test]
    fn quotient_order() {
        let l = WeightLattice::sl2();
        let empty = RootSubset::empty();
        let full = RootSubset::full(1);
        let c1 = l.coset_class(&w(1), &empty).unwrap();
        let c5 = l.coset_class(&w(5), &empty).unwrap();
        assert!(l.quotient_leq(&c1, &c5).unwrap());
        assert!(!l.quotient_leq(&c5, &c1).unwrap());
        let d1 = l.coset_class(&w(1), &full).unwrap();
        let d7 = l.coset_class(&w(7), &full).unwrap();
        assert!(l.quotient_leq(&d1, &d7).unwrap());
        assert!(l.quotient_leq(&d7, &d1).unwrap());
        assert!(matches!(l.quotient_leq(&c1, &d1), Err(Error::SubsetMismatch(_))));
    }

    #[test]
    fn lower_sets() {
        let l = WeightLattice::sl2();
        let set = |n| l.lower_set(&w(n), 0).unwrap().into_iter().map(|x| x.0[0]).collect::<Vec<_>>();
        assert_eq!(set(3), vec![1, 3]);
        assert_eq!(set(0), vec![0]);
        assert_eq!(set(4), vec![0, 2, 4]);
        assert!(matches!(l.lower_set(&w(-1), 0), Err(Error::NotDominant(_))));
    }

    #[test]
    fn coset_classes() {
        let l = WeightLattice::sl2();
        let full = RootSubset::full(1);
        assert_eq!(l.coset_class(&w(5), &full).unwrap().representative, w(1));
        assert_eq!(l.coset_class(&w(4), &full).unwrap().representative, w(0));
        assert_eq!(l.coset_class(&w(-3), &full).unwrap().representative, w(1));
        assert_eq!(
            l.coset_class(&w(5), &RootSubset::empty()).unwrap().representative,
            w(5)
        );
    }

    #[test]
    fn rank_two_a2() {
        // A₂: α₁ = (2,-1), α₂ = (-1,2)
        let l = WeightLattice::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let rho = Weight(vec![1, 1]);
        let zero = Weight(vec![0, 0]);
        assert!(l.dominance_leq(&zero, &rho).unwrap());
        assert!(!l.dominance_leq(&Weight(vec![1, 0]), &rho).unwrap());
        let lower = l.lower_set(&Weight(vec![2, 2]), 4).unwrap();
        assert!(lower.contains(&rho));
        assert!(lower.contains(&Weight(vec![3, 0])));
        assert!(lower.contains(&zero));
        // Λ/Λ_{1}: classes of (0,0) and (2,-1) coincide.
        let i1 = RootSubset::new([1]);
        assert_eq!(
            l.coset_class(&zero, &i1).unwrap(),
            l.coset_class(&Weight(vec![2, -1]), &i1).unwrap()
        );
        assert!(WeightLattice::new(vec![vec![1, 2], vec![2, 4]]).is_err());
    }

    #[test]
    fn hnf_reduces() {
        let h = hermite_normal_form(vec![vec![4, 6], vec![6, 9]]);
        assert_eq!(h, vec![vec![2, 3]]);
        let h = hermite_normal_form(vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(h, vec![vec![1, 1], vec![0, 3]]);
    }
}
