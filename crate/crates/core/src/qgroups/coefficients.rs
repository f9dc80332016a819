use std::fmt;
use std::sync::Arc;

use crate::memo::Memo;
use crate::ncalg::algebras::{self, A, B, C, D};
use crate::ncalg::{AlgebraElement, Presentation};
use crate::scalars::QRational;
use crate::{Error, Result};

use super::cg::cg_decompose;

/// The matrix coefficient `c^{V_n}_{i,j} : h ↦ f_i(h·v_j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixCoefficient {
    pub n: u32,
    pub row: u32,
    pub col: u32,
}

impl MatrixCoefficient {
    pub fn new(n: u32, row: u32, col: u32) -> Result<Self> {
        if row > n || col > n {
            return Err(Error::Invalid(format!(
                "index out of range in c[{n};{row},{col}]"
            )));
        }
        Ok(MatrixCoefficient { n, row, col })
    }

    /// Left and right weights `(n − 2i, n − 2j)`.
    pub fn biweight(&self) -> (i64, i64) {
        let n = self.n as i64;
        (n - 2 * self.row as i64, n - 2 * self.col as i64)
    }

    /// All coefficients of `V_n`, row-major.
    pub fn all(n: u32) -> impl Iterator<Item = MatrixCoefficient> {
        (0..=n).flat_map(move |i| (0..=n).map(move |j| MatrixCoefficient { n, row: i, col: j }))
    }
}

impl fmt::Display for MatrixCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c[{};{},{}]", self.n, self.row, self.col)
    }
}

type Table = Vec<Vec<AlgebraElement>>;

static QUANTUM_TABLES: Memo<u32, Table> = Memo::new();
static CLASSICAL_TABLES: Memo<u32, Table> = Memo::new();

/// All `c^{V_n}_{i,j}` as elements of O_q(SL₂), realised inside `V_{n−1} ⊗ V_1`.
pub fn coefficient_table(n: u32) -> Arc<Table> {
    QUANTUM_TABLES
        .get_or_try_insert(&n, || build_table(n))
        .expect("matrix coefficients reduce within budget")
}

/// The same table specialized at `q = 1`, in O(SL₂).
pub fn classical_coefficient_table(n: u32) -> Arc<Table> {
    CLASSICAL_TABLES
        .get_or_try_insert(&n, || {
            let target = algebras::sl2_classical();
            coefficient_table(n)
                .iter()
                .map(|row| row.iter().map(|x| x.specialize_at_one(&target)).collect())
                .collect()
        })
        .expect("matrix coefficients are regular at q = 1")
}

/// The table for O_q(SL₂) or its classical limit, according to `pres`.
pub fn table_for(pres: &Presentation, n: u32) -> Result<Arc<Table>> {
    match pres.name() {
        "sl2" => Ok(coefficient_table(n)),
        "sl2-cl" => Ok(classical_coefficient_table(n)),
        other => Err(Error::PresentationMismatch(other.into(), "sl2".into())),
    }
}

fn build_table(n: u32) -> Result<Table> {
    let p = algebras::sl2();
    match n {
        0 => Ok(vec![vec![AlgebraElement::one(&p)]]),
        1 => {
            let g = |x| AlgebraElement::generator(&p, x);
            Ok(vec![vec![g(A), g(B)], vec![g(C), g(D)]])
        }
        _ => {
            let prev = coefficient_table(n - 1);
            let one = coefficient_table(1);
            let cg = cg_decompose(n - 1, 1);
            let top = cg.summand(n).expect("top summand exists");
            let dim = n as usize + 1;
            // products c^{n−1}_{i'j'}·c^1_{st}, indexed by tensor indices
            let tdim = n as usize * 2;
            let mut products: Vec<Vec<Option<AlgebraElement>>> = vec![vec![None; tdim]; tdim];
            let mut table = Vec::with_capacity(dim);
            for i in 0..dim {
                let mut row = Vec::with_capacity(dim);
                for j in 0..dim {
                    let mut acc = AlgebraElement::zero(&p);
                    for alpha in 0..tdim {
                        let pi = top.projection.get(i, alpha);
                        if pi.is_zero() {
                            continue;
                        }
                        for beta in 0..tdim {
                            let io = top.inclusion.get(beta, j);
                            if io.is_zero() {
                                continue;
                            }
                            if products[alpha][beta].is_none() {
                                let (i1, s) = (alpha / 2, alpha % 2);
                                let (j1, t) = (beta / 2, beta % 2);
                                products[alpha][beta] =
                                    Some(prev[i1][j1].try_mul(&one[s][t])?);
                            }
                            let prod = products[alpha][beta].as_ref().expect("filled above");
                            acc = acc.try_add(&prod.scale(&(pi * io)))?;
                        }
                    }
                    row.push(acc);
                }
                table.push(row);
            }
            Ok(table)
        }
    }
}

/// The element of O_q(SL₂) realising a matrix coefficient.
pub fn coefficient_to_element(c: MatrixCoefficient) -> AlgebraElement {
    coefficient_table(c.n)[c.row as usize][c.col as usize].clone()
}

/// Expand the product `c^n_{ij}·c^m_{kl}` in matrix coefficients through the
/// Clebsch–Gordan decomposition of `V_n ⊗ V_m`.
pub fn coefficient_product(
    x: MatrixCoefficient,
    y: MatrixCoefficient,
) -> Vec<(MatrixCoefficient, QRational)> {
    let cg = cg_decompose(x.n, y.n);
    let m1 = y.n as usize + 1;
    let row = x.row as usize * m1 + y.row as usize;
    let col = x.col as usize * m1 + y.col as usize;
    let mut out = Vec::new();
    for s in &cg.summands {
        for a in 0..=s.k as usize {
            let left = s.inclusion.get(row, a);
            if left.is_zero() {
                continue;
            }
            for b in 0..=s.k as usize {
                let right = s.projection.get(b, col);
                if right.is_zero() {
                    continue;
                }
                out.push((
                    MatrixCoefficient {
                        n: s.k,
                        row: a as u32,
                        col: b as u32,
                    },
                    left * right,
                ));
            }
        }
    }
    out
}
