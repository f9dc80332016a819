use std::sync::Arc;

use proptest::prelude::*;

use qwonder::lattice::RootSubset;
use qwonder::ncalg::algebras;
use qwonder::ncalg::{normal_words_up_to_length, AlgebraElement, Presentation, Word};
use qwonder::poisson::{bracket_for, mat2_bracket, sl2_bracket, vinberg_bracket};
use qwonder::qgroups::coproduct;
use qwonder::reesgr::{gr_multiply, gr_symbol, gr_to_p1p1, level_membership};
use qwonder::scalars::QRational;

fn element(p: &Arc<Presentation>, max_len: usize, picks: &[(usize, i64, i64)]) -> AlgebraElement {
    let words = normal_words_up_to_length(p, max_len);
    let classical = algebras::is_classical(p);
    let terms: Vec<(Word, QRational)> = picks
        .iter()
        .map(|&(i, c, e)| {
            let mut k = QRational::from_int(c);
            if !classical {
                k = k * QRational::q_pow(e);
            }
            (words[i % words.len()].clone(), k)
        })
        .collect();
    AlgebraElement::from_terms(p, terms).unwrap()
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64, i64)>> {
    prop::collection::vec((0usize..1000, -3i64..=3, -2i64..=2), 1..4)
}

fn quantum() -> impl Strategy<Value = Arc<Presentation>> {
    prop_oneof![
        Just(algebras::sl2()),
        Just(algebras::mat2()),
        Just(algebras::vinberg()),
        Just(algebras::p1p1()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multiplication_is_associative(p in quantum(), x in picks(), y in picks(), z in picks()) {
        let (x, y, z) = (element(&p, 2, &x), element(&p, 2, &y), element(&p, 2, &z));
        prop_assert_eq!(x.try_mul(&y)?.try_mul(&z)?, x.try_mul(&y.try_mul(&z)?)?);
    }

    #[test]
    fn multiplication_distributes(p in quantum(), x in picks(), y in picks(), z in picks()) {
        let (x, y, z) = (element(&p, 2, &x), element(&p, 2, &y), element(&p, 2, &z));
        prop_assert_eq!(x.try_mul(&y.try_add(&z)?)?, x.try_mul(&y)?.try_add(&x.try_mul(&z)?)?);
    }

    #[test]
    fn coproduct_is_multiplicative(x in picks(), y in picks()) {
        let p = algebras::sl2();
        let (x, y) = (element(&p, 2, &x), element(&p, 2, &y));
        prop_assert_eq!(coproduct(&x.try_mul(&y)?)?, coproduct(&x)?.try_mul(&coproduct(&y)?)?);
    }

    #[test]
    fn coproduct_respects_levels(x in picks()) {
        let p = algebras::sl2();
        let x = element(&p, 3, &x);
        for n in 0..=3u32 {
            if !level_membership(&x, n) {
                continue;
            }
            for ws in coproduct(&x)?.terms().keys() {
                for w in ws {
                    let f = AlgebraElement::from_word(&p, w.clone())?;
                    prop_assert!(level_membership(&f, n), "{} not in level {}", f, n);
                }
            }
        }
    }

    #[test]
    fn brackets_satisfy_jacobi(x in picks(), y in picks(), z in picks(), which in 0usize..3) {
        let br = [sl2_bracket(), mat2_bracket(), vinberg_bracket()][which].clone();
        let p = br.base().clone();
        let (x, y, z) = (element(&p, 2, &x), element(&p, 2, &y), element(&p, 2, &z));
        prop_assert!(br.jacobiator(&x, &y, &z)?.is_zero());
    }

    #[test]
    fn brackets_are_antisymmetric_derivations(x in picks(), y in picks(), z in picks(), which in 0usize..3) {
        let br = [sl2_bracket(), mat2_bracket(), vinberg_bracket()][which].clone();
        let p = br.base().clone();
        let (x, y, z) = (element(&p, 2, &x), element(&p, 2, &y), element(&p, 2, &z));
        prop_assert!(br.bracket(&x, &y)?.try_add(&br.bracket(&y, &x)?)?.is_zero());
        let lhs = br.bracket(&x, &y.try_mul(&z)?)?;
        let rhs = br.bracket(&x, &y)?.try_mul(&z)?.try_add(&y.try_mul(&br.bracket(&x, &z)?)?)?;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gr_product_matches_p1p1(x in picks(), y in picks()) {
        let p = algebras::sl2();
        let empty = RootSubset::empty();
        let (x, y) = (element(&p, 2, &x), element(&p, 2, &y));
        let (gx, gy) = (gr_symbol(&empty, &x)?, gr_symbol(&empty, &y)?);
        let lhs = gr_to_p1p1(&gr_multiply(&empty, &gx, &gy)?)?;
        let rhs = gr_to_p1p1(&gx)?.try_mul(&gr_to_p1p1(&gy)?)?;
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn bracket_lookup_follows_the_presentation() {
    assert!(bracket_for(&algebras::sl2_classical()).is_ok());
    assert!(bracket_for(&algebras::vinberg_classical()).is_ok());
    assert!(bracket_for(&algebras::sl2()).is_err());
}
