use std::collections::BTreeMap;
use std::sync::Arc;

use qwonder::lattice::Weight;
use qwonder::linalg::Matrix;
use qwonder::ncalg::algebras;
use qwonder::ncalg::{AlgebraElement, Presentation};
use qwonder::projcat::{is_torsion, proj_equiv_check, DegreewiseMap, GradedModulePresentation, TorsionVerdict};
use qwonder::scalars::QRational;

fn gens(p: &Arc<Presentation>) -> Vec<AlgebraElement> {
    (0..p.num_generators() as u8)
        .map(|g| AlgebraElement::generator(p, g))
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn dim(m: &GradedModulePresentation, n: i64) -> usize {
    m.graded_piece(&Weight::scalar(n), 8).unwrap().dimension
}

#[test]
fn short_exact_sequences_add_dimensions() {
    let v = algebras::vinberg();
    let free = GradedModulePresentation::free(v.clone(), &[Weight::scalar(0)]).unwrap();
    let z2 = GradedModulePresentation::cyclic_quotient(v.clone(), &[algebras::quantum_determinant(&v)]).unwrap();
    let by_a = GradedModulePresentation::cyclic_quotient(v.clone(), &gens(&v)[..1]).unwrap();
    let aug = GradedModulePresentation::cyclic_quotient(v.clone(), &gens(&v)).unwrap();
    for n in 0..=5i64 {
        let r = |k: i64| if k < 0 { 0 } else { dim(&free, k) };
        // 0 -> R(-2) -> R -> R/z²R -> 0
        assert_eq!(r(n), r(n - 2) + dim(&z2, n), "z2 at {n}");
        // 0 -> R(-1) -> R -> R/aR -> 0
        assert_eq!(r(n), r(n - 1) + dim(&by_a, n), "a at {n}");
        assert_eq!(dim(&by_a, n), binomial(n as usize + 2, 2));
        // 0 -> R_+ -> R -> k -> 0
        assert_eq!(dim(&aug, n), usize::from(n == 0));
    }
}

#[test]
fn bigraded_quotient_of_p1p1() {
    let p = algebras::p1p1();
    let x = AlgebraElement::symbol(&p, "x").unwrap();
    let m = GradedModulePresentation::cyclic_quotient(p, &[x]).unwrap();
    for i in 0..=3i64 {
        for j in 0..=3i64 {
            let d = m.graded_piece(&Weight::new(vec![i, j]), 8).unwrap().dimension;
            // (i+1)(j+1) − i(j+1): x is a nonzerodivisor
            assert_eq!(d, j as usize + 1, "degree ({i},{j})");
        }
    }
}

#[test]
fn torsion_vanishes_on_the_whole_cone() {
    let v = algebras::vinberg();
    let aug = GradedModulePresentation::cyclic_quotient(v.clone(), &gens(&v)).unwrap();
    let squares: Vec<AlgebraElement> = gens(&v).iter().map(|g| g.pow(2).unwrap()).collect();
    let artinian = GradedModulePresentation::cyclic_quotient(v.clone(), &squares).unwrap();
    for (m, base) in [(&aug, 0), (&artinian, 5)] {
        let cert = is_torsion(m, &Weight::scalar(base), 8).unwrap();
        assert_eq!(cert.verdict, TorsionVerdict::Torsion);
        for n in base + 1..=8 {
            assert_eq!(dim(m, n), 0, "degree {n}");
        }
    }
    let free = GradedModulePresentation::free(v.clone(), &[Weight::scalar(0)]).unwrap();
    let cert = is_torsion(&free, &Weight::scalar(2), 8).unwrap();
    assert_eq!(cert.verdict, TorsionVerdict::NotTorsion);
    assert!(cert.witness.unwrap().dimension > 0);
}

#[test]
fn pieces_do_not_depend_on_relation_order() {
    let v = algebras::vinberg();
    let g = gens(&v);
    let rels = [g[0].pow(2).unwrap(), g[1].try_mul(&g[2]).unwrap(), g[3].clone()];
    let forward = GradedModulePresentation::cyclic_quotient(v.clone(), &rels).unwrap();
    let mut reversed = rels.to_vec();
    reversed.reverse();
    let backward = GradedModulePresentation::cyclic_quotient(v.clone(), &reversed).unwrap();
    let doubled = GradedModulePresentation::cyclic_quotient(v.clone(), &[rels.to_vec(), rels.to_vec()].concat()).unwrap();
    for n in 0..=5 {
        assert_eq!(dim(&forward, n), dim(&backward, n));
        assert_eq!(dim(&forward, n), dim(&doubled, n));
    }
}

fn degrees(from: i64, to: i64) -> Vec<Weight> {
    (from..=to).map(Weight::scalar).collect()
}

#[test]
fn adding_torsion_is_invisible_in_proj() {
    let v = algebras::vinberg();
    let r = GradedModulePresentation::free(v.clone(), &[Weight::scalar(0)]).unwrap();
    let t = GradedModulePresentation::cyclic_quotient(v.clone(), &gens(&v)).unwrap();
    let sum = t.direct_sum(&r).unwrap();
    let one = AlgebraElement::one(&v);
    let map = DegreewiseMap::from_generator_images(&sum, &r, &[vec![], vec![("e0".into(), one)]], &degrees(0, 4), 4)
        .unwrap();
    assert!(proj_equiv_check(&sum, &r, &map, &Weight::scalar(1), 4).unwrap());
    assert!(!proj_equiv_check(&sum, &r, &map, &Weight::scalar(0), 4).unwrap());
}

#[test]
fn degreewise_isomorphisms_must_commute_with_the_action() {
    let v = algebras::vinberg();
    let r = GradedModulePresentation::free(v.clone(), &[Weight::scalar(0)]).unwrap();
    let mut matrices = BTreeMap::new();
    for n in 0..=3 {
        let d = dim(&r, n);
        let id = Matrix::<QRational>::identity(d);
        let m = if n == 1 { id.scale(&QRational::from_int(2)) } else { id };
        matrices.insert(Weight::scalar(n), m);
    }
    let map = DegreewiseMap { matrices };
    assert!(!proj_equiv_check(&r, &r, &map, &Weight::scalar(0), 3).unwrap());

    let shifted = r.shift(&Weight::scalar(-1));
    let a = gens(&v)[0].clone();
    let mult = DegreewiseMap::from_generator_images(&shifted, &r, &[vec![("e0".into(), a)]], &degrees(1, 3), 3)
        .unwrap();
    assert!(!proj_equiv_check(&shifted, &r, &mult, &Weight::scalar(1), 3).unwrap());
}
