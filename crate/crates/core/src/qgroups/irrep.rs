use crate::linalg::Matrix;
use crate::scalars::{qint, QRational};
use crate::{Error, Result};

use super::uq::UqElement;

/// The irreducible U_q(sl₂)-module of highest weight `n`, basis `v_0..v_n`,
/// with `v_k` of weight `n − 2k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepVn {
    pub n: u32,
}

pub type QMatrix = Matrix<QRational>;

impl IrrepVn {
    pub fn new(n: u32) -> Self {
        IrrepVn { n }
    }

    pub fn dim(&self) -> usize {
        self.n as usize + 1
    }

    /// `E v_k = [n−k+1] v_{k−1}`.
    pub fn e_matrix(&self) -> QMatrix {
        let n = self.n as i64;
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for k in 1..=self.n as usize {
            m.set(k - 1, k, qint(n - k as i64 + 1));
        }
        m
    }

    /// `F v_k = [k+1] v_{k+1}`.
    pub fn f_matrix(&self) -> QMatrix {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for k in 0..self.n as usize {
            m.set(k + 1, k, qint(k as i64 + 1));
        }
        m
    }

    /// `K^s v_k = q^{s(n−2k)} v_k`.
    pub fn k_matrix(&self, s: i64) -> QMatrix {
        let n = self.n as i64;
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for k in 0..self.dim() {
            m.set(k, k, QRational::q_pow(s * (n - 2 * k as i64)));
        }
        m
    }

    /// Matrix of an arbitrary element.
    pub fn matrix_of(&self, x: &UqElement) -> QMatrix {
        action_matrix(x, &self.e_matrix(), &self.f_matrix(), |s| self.k_matrix(s))
    }
}

/// Matrix of `x` given the matrices of `E`, `F` and `K^s`.
pub(crate) fn action_matrix(
    x: &UqElement,
    e: &QMatrix,
    f: &QMatrix,
    k: impl Fn(i64) -> QMatrix,
) -> QMatrix {
    let dim = e.rows();
    let mut out = Matrix::zeros(dim, dim);
    for (&(fa, kb, ec), c) in x.terms() {
        let mut m = Matrix::identity(dim);
        for _ in 0..fa {
            m = m.mul(f);
        }
        m = m.mul(&k(kb));
        for _ in 0..ec {
            m = m.mul(e);
        }
        out = out.add(&m.scale(c));
    }
    out
}

/// Apply `x` to a coordinate vector of `V_n`.
pub fn act(x: &UqElement, rep: IrrepVn, vector: &[QRational]) -> Result<Vec<QRational>> {
    if vector.len() != rep.dim() {
        return Err(Error::DimensionMismatch {
            expected: rep.dim(),
            found: vector.len(),
        });
    }
    Ok(rep.matrix_of(x).apply(vector))
}

/// Matrices of `E`, `F` and `K^{±1}` on `V_n ⊗ V_m`, using
/// `Δ(E) = E⊗1 + K⊗E`, `Δ(F) = F⊗K⁻¹ + 1⊗F`, `Δ(K) = K⊗K`.
pub fn tensor_action(n: u32, m: u32) -> (QMatrix, QMatrix, QMatrix, QMatrix) {
    let (v, w) = (IrrepVn::new(n), IrrepVn::new(m));
    let iv = Matrix::identity(v.dim());
    let iw = Matrix::identity(w.dim());
    let e = v.e_matrix().kron(&iw).add(&v.k_matrix(1).kron(&w.e_matrix()));
    let f = v.f_matrix().kron(&w.k_matrix(-1)).add(&iv.kron(&w.f_matrix()));
    let k = v.k_matrix(1).kron(&w.k_matrix(1));
    let kinv = v.k_matrix(-1).kron(&w.k_matrix(-1));
    (e, f, k, kinv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn highest_vector_is_killed_by_e() {
        let v = IrrepVn::new(3);
        let v0 = vec![QRational::one(), QRational::zero(), QRational::zero(), QRational::zero()];
        assert!(act(&UqElement::e(), v, &v0).unwrap().iter().all(|x| x.is_zero()));
        let kv = act(&UqElement::k_pow(1), v, &v0).unwrap();
        assert_eq!(kv[0], QRational::q_pow(3));
    }

    #[test]
    fn wrong_length_is_rejected() {
        let err = act(&UqElement::e(), IrrepVn::new(2), &[QRational::one()]);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }
}
