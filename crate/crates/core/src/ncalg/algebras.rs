//! The shipped presentations: quantum 2×2 matrices, quantum SL₂, the
//! Vinberg algebra and the quantum P¹×P¹ coordinate ring, plus their `q = 1`
//! specializations.

use std::sync::{Arc, OnceLock};

use super::element::AlgebraElement;
use super::localization::CentralLocalization;
use super::presentation::{Presentation, PresentationBuilder, Rule};
use crate::lattice::Weight;
use crate::scalars::QRational;
use crate::Result;

pub const A: u8 = 0;
pub const B: u8 = 1;
pub const C: u8 = 2;
pub const D: u8 = 3;

fn q(e: i64) -> QRational {
    QRational::q_pow(e)
}

fn one() -> QRational {
    QRational::one()
}

/// Commutation relations of O_q(Mat₂), oriented toward `a < b < c < d`.
fn commutation_rules() -> Vec<Rule> {
    vec![
        Rule::new(vec![B, A], vec![(vec![A, B], q(-1))]),
        Rule::new(vec![C, A], vec![(vec![A, C], q(-1))]),
        Rule::new(vec![C, B], vec![(vec![B, C], one())]),
        Rule::new(vec![D, B], vec![(vec![B, D], q(-1))]),
        Rule::new(vec![D, C], vec![(vec![C, D], q(-1))]),
    ]
}

fn mat2_da_rule() -> Rule {
    // da = ad − (q − q⁻¹)bc
    Rule::new(
        vec![D, A],
        vec![
            (vec![A, D], one()),
            (vec![B, C], &q(-1) - &q(1)),
        ],
    )
}

fn mat2_rules() -> Vec<Rule> {
    let mut r = commutation_rules();
    r.push(mat2_da_rule());
    r
}

fn cached(
    cell: &'static OnceLock<Arc<Presentation>>,
    make: fn() -> Result<Presentation>,
) -> Arc<Presentation> {
    cell.get_or_init(|| Arc::new(make().expect("shipped presentation is valid")))
        .clone()
}

/// O_q(Mat₂), graded by total degree.
pub fn mat2() -> Arc<Presentation> {
    static P: OnceLock<Arc<Presentation>> = OnceLock::new();
    cached(&P, || {
        PresentationBuilder::new("mat2", &["a", "b", "c", "d"])
            .rules(mat2_rules())
            .grading(vec![Weight::scalar(1); 4])
            .build()
    })
}

/// O_q(SL₂) with the determinant relation solved for `ad` and `da`.
///
/// Words are ordered with `b < c < a < d`; the normal words are then
/// `b^j c^k a^i` and `b^j c^k d^l`, and the seven rules are confluent.
pub fn sl2() -> Arc<Presentation> {
    static P: OnceLock<Arc<Presentation>> = OnceLock::new();
    cached(&P, || {
        PresentationBuilder::new("sl2", &["a", "b", "c", "d"])
            .lex_ranks(vec![2, 0, 1, 3])
            .rule(vec![A, B], vec![(vec![B, A], q(1))])
            .rule(vec![A, C], vec![(vec![C, A], q(1))])
            .rule(vec![C, B], vec![(vec![B, C], one())])
            .rule(vec![D, B], vec![(vec![B, D], q(-1))])
            .rule(vec![D, C], vec![(vec![C, D], q(-1))])
            .rule(vec![A, D], vec![(vec![], one()), (vec![B, C], q(1))])
            .rule(vec![D, A], vec![(vec![], one()), (vec![B, C], q(-1))])
            .build()
    })
}

/// The Vinberg algebra on generators `az, bz, cz, dz` of degree one.
pub fn vinberg() -> Arc<Presentation> {
    static P: OnceLock<Arc<Presentation>> = OnceLock::new();
    cached(&P, || {
        PresentationBuilder::new("vinberg", &["az", "bz", "cz", "dz"])
            .rules(mat2_rules())
            .grading(vec![Weight::scalar(1); 4])
            .build()
    })
}

pub const X: u8 = 0;
pub const Y: u8 = 1;
pub const U: u8 = 2;
pub const W: u8 = 3;

/// Quantum P¹ × P¹: `xy = q·yx`, `uw = q·wu`, the two factors commute; bigraded.
pub fn p1p1() -> Arc<Presentation> {
    static P: OnceLock<Arc<Presentation>> = OnceLock::new();
    cached(&P, || {
        let left = Weight::new(vec![1, 0]);
        let right = Weight::new(vec![0, 1]);
        PresentationBuilder::new("p1p1", &["x", "y", "u", "w"])
            .rule(vec![Y, X], vec![(vec![X, Y], q(-1))])
            .rule(vec![W, U], vec![(vec![U, W], q(-1))])
            .rule(vec![U, X], vec![(vec![X, U], one())])
            .rule(vec![U, Y], vec![(vec![Y, U], one())])
            .rule(vec![W, X], vec![(vec![X, W], one())])
            .rule(vec![W, Y], vec![(vec![Y, W], one())])
            .grading(vec![left.clone(), left, right.clone(), right])
            .build()
    })
}

/// Commutative O(Mat₂).
pub fn mat2_classical() -> Arc<Presentation> {
    static P: OnceLock<Arc<Presentation>> = OnceLock::new();
    cached(&P, || mat2().specialize_at_one("mat2-cl"))
}

/// Commutative O(SL₂).
pub fn sl2_classical() -> Arc<Presentation> {
    static P: OnceLock<Arc<Presentation>> = OnceLock::new();
    cached(&P, || sl2().specialize_at_one("sl2-cl"))
}

/// Commutative Vinberg algebra.
pub fn vinberg_classical() -> Arc<Presentation> {
    static P: OnceLock<Arc<Presentation>> = OnceLock::new();
    cached(&P, || vinberg().specialize_at_one("vinberg-cl"))
}

/// Commutative P¹ × P¹ coordinate ring.
pub fn p1p1_classical() -> Arc<Presentation> {
    static P: OnceLock<Arc<Presentation>> = OnceLock::new();
    cached(&P, || p1p1().specialize_at_one("p1p1-cl"))
}

/// Whether `p` is one of the four-generator matrix presentations.
pub fn is_matrix_type(p: &Presentation) -> bool {
    ["mat2", "sl2", "vinberg", "mat2-cl", "sl2-cl", "vinberg-cl"].contains(&p.name())
}

/// Whether `p` is O_q(SL₂) or its classical limit.
pub fn is_sl2_type(p: &Presentation) -> bool {
    ["sl2", "sl2-cl"].contains(&p.name())
}

/// Whether `p` is commutative by construction, i.e. a `q = 1` specialization.
pub fn is_classical(p: &Presentation) -> bool {
    p.name().ends_with("-cl")
}

/// The matching quantum or classical presentation of the same shape.
pub fn classical_of(p: &Presentation) -> Option<Arc<Presentation>> {
    match p.name() {
        "mat2" | "mat2-cl" => Some(mat2_classical()),
        "sl2" | "sl2-cl" => Some(sl2_classical()),
        "vinberg" | "vinberg-cl" => Some(vinberg_classical()),
        "p1p1" | "p1p1-cl" => Some(p1p1_classical()),
        _ => None,
    }
}

/// The quantum determinant `ad − q·bc` in a matrix-type presentation.
pub fn quantum_determinant(p: &Arc<Presentation>) -> AlgebraElement {
    let qq = if is_classical(p) { one() } else { q(1) };
    AlgebraElement::from_terms(p, [(vec![A, D], one()), (vec![B, C], -qq)])
        .expect("determinant reduces")
}

/// O_q(GL₂) as the localization of O_q(Mat₂) at the quantum determinant.
pub fn gl2() -> CentralLocalization {
    CentralLocalization::new(quantum_determinant(&mat2())).expect("determinant is central")
}

/// O(GL₂) at `q = 1`.
pub fn gl2_classical() -> CentralLocalization {
    CentralLocalization::new(quantum_determinant(&mat2_classical()))
        .expect("determinant is central")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{check_local_confluence, dimension_of_graded_piece, is_central};

    fn el(p: &Arc<Presentation>, w: &[u8]) -> AlgebraElement {
        AlgebraElement::from_word(p, w.to_vec()).unwrap()
    }

    #[test]
    fn shipped_presentations_are_confluent() {
        for p in [
            mat2(),
            sl2(),
            vinberg(),
            p1p1(),
            mat2_classical(),
            sl2_classical(),
            vinberg_classical(),
            p1p1_classical(),
        ] {
            assert!(check_local_confluence(&p).unwrap().is_empty(), "{}", p.name());
        }
    }

    #[test]
    fn mat2_rewrites() {
        let p = mat2();
        assert_eq!(el(&p, &[B, A]).to_string(), "q^-1*a*b");
        assert_eq!(el(&p, &[D, A]).to_string(), "a*d + (-q + q^-1)*b*c");
        assert_eq!(el(&p, &[C, B]), el(&p, &[B, C]));
        assert_eq!(el(&p, &[]).to_string(), "1");
    }

    #[test]
    fn sl2_rewrites() {
        let p = sl2();
        assert_eq!(el(&p, &[A, D]).to_string(), "1 + q*b*c");
        assert_eq!(el(&p, &[D, A]).to_string(), "1 + q^-1*b*c");
    }

    #[test]
    fn determinant_is_central() {
        let p = mat2();
        assert!(is_central(&p, &quantum_determinant(&p)).unwrap());
        assert!(!is_central(&p, &AlgebraElement::generator(&p, A)).unwrap());
        assert!(is_central(&p, &AlgebraElement::one(&p)).unwrap());
    }

    #[test]
    fn small_graded_dimensions() {
        assert_eq!(dimension_of_graded_piece(&mat2(), &Weight::scalar(2), 10).unwrap(), 10);
        assert_eq!(dimension_of_graded_piece(&mat2(), &Weight::scalar(0), 10).unwrap(), 1);
        assert_eq!(
            dimension_of_graded_piece(&p1p1(), &Weight::new(vec![1, 1]), 10).unwrap(),
            4
        );
    }

    #[test]
    fn classical_mat2_is_commutative() {
        let p = mat2_classical();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(el(&p, &[x, y]), el(&p, &[y, x]));
            }
        }
    }
}
