use std::collections::BTreeMap;

use super::presentation::{Presentation, Word};
use crate::scalars::QRational;
use crate::Result;

/// Whether two rules overlap with a shared segment or one sits inside the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

/// A critical word whose two one-step reductions reach different normal forms.
#[derive(Clone, Debug, PartialEq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub word: Word,
    pub rules: (usize, usize),
    pub first: BTreeMap<Word, QRational>,
    pub second: BTreeMap<Word, QRational>,
}

/// Resolve every overlap and inclusion ambiguity between rule left-hand
/// sides and return those whose reductions disagree.
pub fn check_local_confluence(p: &Presentation) -> Result<Vec<Ambiguity>> {
    let rules = p.rules();
    let mut out = Vec::new();
    for (i, ri) in rules.iter().enumerate() {
        for (j, rj) in rules.iter().enumerate() {
            let (u, v) = (&ri.lhs, &rj.lhs);
            // suffix of u equal to prefix of v, proper on both sides
            for k in 1..u.len().min(v.len()) {
                if u[u.len() - k..] == v[..k] {
                    let mut word = u.clone();
                    word.extend_from_slice(&v[k..]);
                    let a = p.reduce(p.apply_rule(&word, 0, i))?;
                    let b = p.reduce(p.apply_rule(&word, u.len() - k, j))?;
                    if a != b {
                        out.push(Ambiguity {
                            kind: AmbiguityKind::Overlap,
                            word,
                            rules: (i, j),
                            first: a,
                            second: b,
                        });
                    }
                }
            }
            // v occurs inside u; identical sides are counted once
            if i != j && v.len() <= u.len() && !(u == v && j < i) {
                for pos in 0..=u.len() - v.len() {
                    if u[pos..pos + v.len()] == v[..] {
                        let a = p.reduce(p.apply_rule(u, 0, i))?;
                        let b = p.reduce(p.apply_rule(u, pos, j))?;
                        if a != b {
                            out.push(Ambiguity {
                                kind: AmbiguityKind::Inclusion,
                                word: u.clone(),
                                rules: (i, j),
                                first: a,
                                second: b,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::PresentationBuilder;

    #[test]
    fn conflicting_duplicate_rules() {
        let p = PresentationBuilder::new("contrived", &["a", "b"])
            .rule(vec![1, 0], vec![(vec![0, 1], QRational::one())])
            .rule(vec![1, 0], vec![(vec![0, 1], QRational::from_int(2))])
            .build()
            .unwrap();
        let amb = check_local_confluence(&p).unwrap();
        assert_eq!(amb.len(), 1);
        assert_eq!(amb[0].kind, AmbiguityKind::Inclusion);
        assert_eq!(amb[0].word, vec![1, 0]);
    }

    #[test]
    fn non_confluent_overlap_is_reported() {
        // xy → 0 and yz → x: the word xyz reduces to 0 and to x²
        let p = PresentationBuilder::new("toy", &["x", "y", "z"])
            .rule(vec![0, 1], vec![])
            .rule(vec![1, 2], vec![(vec![0], QRational::one())])
            .build()
            .unwrap();
        let amb = check_local_confluence(&p).unwrap();
        assert_eq!(amb.len(), 1);
        assert_eq!(amb[0].word, vec![0, 1, 2]);
    }
}
