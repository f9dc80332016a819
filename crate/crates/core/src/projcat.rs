//! Finitely presented graded right modules over graded algebras: graded pieces,
//! shifts, torsion certificates and degreewise equivalence witnesses.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::lattice::Weight;
use crate::linalg::{Echelon, Matrix};
use crate::ncalg::{normal_words_of_degree, AlgebraElement, Presentation, Word};
use crate::scalars::QRational;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleGenerator {
    pub label: String,
    pub degree: Weight,
}

/// `M = ⊕_i e_i R / (rows)·R`, where each row `Σ_i e_i r_i` is homogeneous.
#[derive(Clone, Debug)]
pub struct GradedModulePresentation {
    algebra: Arc<Presentation>,
    generators: Vec<ModuleGenerator>,
    relations: Vec<BTreeMap<usize, AlgebraElement>>,
}

fn generator_degrees(p: &Presentation) -> Result<Vec<Weight>> {
    let g = p
        .grading()
        .ok_or_else(|| Error::Ungraded(p.name().into()))?
        .to_vec();
    if g.iter().any(|d| d.is_zero() || d.coords().iter().any(|&c| c < 0)) {
        return Err(Error::UngeneratedDegree(format!(
            "`{}` has a generator outside the positive cone",
            p.name()
        )));
    }
    Ok(g)
}

fn total(w: &Weight) -> i64 {
    w.coords().iter().sum()
}

impl GradedModulePresentation {
    /// Relation rows are lists of `(generator label, coefficient)`.
    pub fn new(
        algebra: Arc<Presentation>,
        generators: Vec<ModuleGenerator>,
        relations: Vec<Vec<(String, AlgebraElement)>>,
    ) -> Result<Self> {
        let degrees = generator_degrees(&algebra)?;
        let rank = degrees[0].rank();
        let mut index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if g.degree.rank() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    found: g.degree.rank(),
                });
            }
            if index.insert(g.label.clone(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate generator label `{}`", g.label)));
            }
        }
        let mut rows = Vec::new();
        for row in relations {
            let mut map: BTreeMap<usize, AlgebraElement> = BTreeMap::new();
            let mut row_degree: Option<Weight> = None;
            for (label, x) in row {
                let &i = index
                    .get(&label)
                    .ok_or_else(|| Error::UnknownSymbol(label.clone()))?;
                if !x.presentation().same_as(&algebra) {
                    return Err(Error::PresentationMismatch(
                        x.presentation().name().into(),
                        algebra.name().into(),
                    ));
                }
                let slot = map.entry(i).or_insert_with(|| AlgebraElement::zero(&algebra));
                *slot = slot.try_add(&x)?;
            }
            map.retain(|_, x| !x.is_zero());
            for (i, x) in &map {
                let Some(d) = x.homogeneous_degree()? else { continue };
                let d = d.add(&generators[*i].degree);
                match &row_degree {
                    None => row_degree = Some(d),
                    Some(e) if *e == d => {}
                    Some(e) => {
                        return Err(Error::NotHomogeneous(format!(
                            "relation row mixes degrees {e} and {d}"
                        )))
                    }
                }
            }
            if !map.is_empty() {
                rows.push(map);
            }
        }
        Ok(GradedModulePresentation {
            algebra,
            generators,
            relations: rows,
        })
    }

    /// The free module on generators of the given degrees.
    pub fn free(algebra: Arc<Presentation>, degrees: &[Weight]) -> Result<Self> {
        let generators = degrees
            .iter()
            .enumerate()
            .map(|(i, d)| ModuleGenerator {
                label: format!("e{i}"),
                degree: d.clone(),
            })
            .collect();
        Self::new(algebra, generators, Vec::new())
    }

    /// `R / Σ x_k R` for homogeneous `x_k`, with one generator `e` in degree 0.
    pub fn cyclic_quotient(algebra: Arc<Presentation>, relations: &[AlgebraElement]) -> Result<Self> {
        let rank = generator_degrees(&algebra)?[0].rank();
        let generators = vec![ModuleGenerator {
            label: "e".into(),
            degree: Weight::zero(rank),
        }];
        let rows = relations
            .iter()
            .map(|x| vec![("e".to_string(), x.clone())])
            .collect();
        Self::new(algebra, generators, rows)
    }

    pub fn zero(algebra: Arc<Presentation>) -> Result<Self> {
        Self::new(algebra, Vec::new(), Vec::new())
    }

    pub fn algebra(&self) -> &Arc<Presentation> {
        &self.algebra
    }

    pub fn generators(&self) -> &[ModuleGenerator] {
        &self.generators
    }

    pub fn relations(&self) -> &[BTreeMap<usize, AlgebraElement>] {
        &self.relations
    }

    /// `M ⊕ N`; labels of `N` are suffixed with `'` on collision.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if !self.algebra.same_as(&other.algebra) {
            return Err(Error::PresentationMismatch(
                self.algebra.name().into(),
                other.algebra.name().into(),
            ));
        }
        let mut generators = self.generators.clone();
        let mut taken: BTreeSet<String> = generators.iter().map(|g| g.label.clone()).collect();
        let mut renamed = Vec::new();
        for g in &other.generators {
            let mut label = g.label.clone();
            while taken.contains(&label) {
                label.push('\'');
            }
            taken.insert(label.clone());
            renamed.push(label.clone());
            generators.push(ModuleGenerator {
                label,
                degree: g.degree.clone(),
            });
        }
        let mut rows: Vec<Vec<(String, AlgebraElement)>> = self
            .relations
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(i, x)| (self.generators[*i].label.clone(), x.clone()))
                    .collect()
            })
            .collect();
        rows.extend(other.relations.iter().map(|r| {
            r.iter()
                .map(|(i, x)| (renamed[*i].clone(), x.clone()))
                .collect()
        }));
        Self::new(self.algebra.clone(), generators, rows)
    }

    fn free_basis(&self, lambda: &Weight, horizon: usize) -> Result<Vec<(usize, Word)>> {
        let mut out = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            let rest = lambda.sub(&g.degree);
            for w in normal_words_of_degree(&self.algebra, &rest, horizon)? {
                out.push((i, w));
            }
        }
        Ok(out)
    }

    fn piece_data(&self, lambda: &Weight, horizon: usize) -> Result<PieceData> {
        let free = self.free_basis(lambda, horizon)?;
        let index: HashMap<(usize, Word), usize> =
            free.iter().cloned().enumerate().map(|(k, x)| (x, k)).collect();
        let mut relations = Echelon::new(free.len());
        for row in &self.relations {
            let Some(row_degree) = row_degree(self, row)? else { continue };
            let rest = lambda.sub(&row_degree);
            for m in normal_words_of_degree(&self.algebra, &rest, horizon)? {
                let m = AlgebraElement::from_word(&self.algebra, m)?;
                let mut v = vec![QRational::zero(); free.len()];
                for (i, r) in row {
                    for (w, c) in r.try_mul(&m)?.terms() {
                        let k = index[&(*i, w.clone())];
                        v[k] += c;
                    }
                }
                relations.insert(v);
            }
        }
        let pivots: BTreeSet<usize> = relations.pivots().into_iter().collect();
        let quotient_cols = (0..free.len()).filter(|k| !pivots.contains(k)).collect();
        Ok(PieceData {
            free,
            index,
            relations,
            quotient_cols,
        })
    }

    /// Exact basis of `M_λ`, as generator–word pairs.
    pub fn graded_piece(&self, lambda: &Weight, horizon: usize) -> Result<GradedPiece> {
        let data = self.piece_data(lambda, horizon)?;
        let basis = data
            .quotient_cols
            .iter()
            .map(|&k| {
                let (i, w) = &data.free[k];
                let word = self.algebra.word_to_string(w);
                if word == "1" {
                    self.generators[*i].label.clone()
                } else {
                    format!("{}*{}", self.generators[*i].label, word)
                }
            })
            .collect();
        Ok(GradedPiece {
            degree: lambda.clone(),
            dimension: data.quotient_cols.len(),
            basis,
        })
    }

    /// `M[λ]`, with `M[λ]_μ = M_{λ+μ}`: each generator degree moves by `−λ`.
    pub fn shift(&self, lambda: &Weight) -> Self {
        let mut out = self.clone();
        for g in &mut out.generators {
            g.degree = g.degree.sub(lambda);
        }
        out
    }

    /// Coordinates in the basis of `M_μ` of the images of that basis under right
    /// multiplication by generator `g`, as a matrix `M_μ → M_{μ+deg g}`.
    fn action_matrix(&self, g: u8, mu: &Weight, horizon: usize) -> Result<Matrix<QRational>> {
        let src = self.piece_data(mu, horizon)?;
        let deg = &self.algebra.grading().expect("graded")[g as usize];
        let dst = self.piece_data(&mu.add(deg), horizon)?;
        let gen = AlgebraElement::generator(&self.algebra, g);
        let mut m = Matrix::zeros(dst.quotient_cols.len(), src.quotient_cols.len());
        for (col, &k) in src.quotient_cols.iter().enumerate() {
            let (i, w) = &src.free[k];
            let prod = AlgebraElement::from_word(&self.algebra, w.clone())?.try_mul(&gen)?;
            let coords = dst.coordinates(&[(*i, prod)])?;
            for (row, c) in coords.into_iter().enumerate() {
                m.set(row, col, c);
            }
        }
        Ok(m)
    }

    pub fn to_json(&self, context: &str) -> ModuleJson {
        ModuleJson {
            algebra: context.to_string(),
            generators: self.generators.clone(),
            relations: self
                .relations
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|(i, x)| (self.generators[*i].label.clone(), x.to_string()))
                        .collect()
                })
                .collect(),
        }
    }

    /// Reads a module file; relation entries are parsed by `parse`.
    pub fn from_json(
        algebra: Arc<Presentation>,
        json: &ModuleJson,
        parse: impl Fn(&str) -> Result<AlgebraElement>,
    ) -> Result<Self> {
        let mut rows = Vec::new();
        for r in &json.relations {
            let mut row = Vec::new();
            for (label, text) in r {
                row.push((label.clone(), parse(text)?));
            }
            rows.push(row);
        }
        Self::new(algebra, json.generators.clone(), rows)
    }
}

fn row_degree(m: &GradedModulePresentation, row: &BTreeMap<usize, AlgebraElement>) -> Result<Option<Weight>> {
    for (i, x) in row {
        if let Some(d) = x.homogeneous_degree()? {
            return Ok(Some(d.add(&m.generators[*i].degree)));
        }
    }
    Ok(None)
}

/// On-disk form of a module presentation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleJson {
    pub algebra: String,
    pub generators: Vec<ModuleGenerator>,
    pub relations: Vec<BTreeMap<String, String>>,
}

struct PieceData {
    free: Vec<(usize, Word)>,
    index: HashMap<(usize, Word), usize>,
    relations: Echelon<QRational>,
    quotient_cols: Vec<usize>,
}

impl PieceData {
    /// Coordinates of `Σ e_i x_i` in the quotient basis.
    fn coordinates(&self, parts: &[(usize, AlgebraElement)]) -> Result<Vec<QRational>> {
        let mut v = vec![QRational::zero(); self.free.len()];
        for (i, x) in parts {
            for (w, c) in x.terms() {
                let k = self.index.get(&(*i, w.clone())).ok_or_else(|| {
                    Error::MapNotHomogeneous(format!("term of generator {i} outside this degree"))
                })?;
                v[*k] += c;
            }
        }
        let v = self.relations.reduce(v);
        Ok(self.quotient_cols.iter().map(|&k| v[k].clone()).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GradedPiece {
    pub degree: Weight,
    pub dimension: usize,
    pub basis: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TorsionVerdict {
    Torsion,
    NotTorsion,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TorsionCertificate {
    pub verdict: TorsionVerdict,
    pub band_base: Weight,
    /// Degrees whose vanishing was checked; all zero when the verdict is torsion.
    pub band: Vec<Weight>,
    /// For `not_torsion`, the farthest nonzero degree checked along the ray.
    pub witness: Option<GradedPiece>,
}

/// All sums of `len` algebra generator degrees.
fn layer_sums(degrees: &[Weight], len: usize) -> BTreeSet<Weight> {
    let mut cur: BTreeSet<Weight> = BTreeSet::from([Weight::zero(degrees[0].rank())]);
    for _ in 0..len {
        cur = cur
            .iter()
            .flat_map(|w| degrees.iter().map(move |d| w.add(d)))
            .collect();
    }
    cur
}

/// Decides torsion from a vanishing band. For each module generator `e_i`,
/// `L_i ≥ 1` is the least word length that puts every `deg e_i + σ`
/// (`σ` a sum of `L_i` generator degrees) strictly above `band_base` in total
/// degree. If `M` vanishes on all those degrees, then `e_i·R_{≥L_i} = 0` for
/// every `i` and only finitely many pieces of `M` are nonzero.
pub fn is_torsion(m: &GradedModulePresentation, band_base: &Weight, horizon: usize) -> Result<TorsionCertificate> {
    let degrees = generator_degrees(&m.algebra)?;
    let step = degrees.iter().map(total).min().expect("nonempty grading");
    let base_total = total(band_base);
    let mut band = BTreeSet::new();
    for g in &m.generators {
        let gap = base_total - total(&g.degree);
        let len = if gap < 0 { 1 } else { (gap / step + 1).max(1) } as usize;
        for s in layer_sums(&degrees, len) {
            band.insert(g.degree.add(&s));
        }
    }
    let band: Vec<Weight> = band.into_iter().collect();
    let fits = |w: &Weight| total(w) >= 0 && total(w) as usize <= horizon;
    if band.iter().all(fits) {
        let mut all_zero = true;
        for w in &band {
            if m.graded_piece(w, horizon)?.dimension != 0 {
                all_zero = false;
                break;
            }
        }
        if all_zero {
            return Ok(TorsionCertificate {
                verdict: TorsionVerdict::Torsion,
                band_base: band_base.clone(),
                band,
                witness: None,
            });
        }
    }
    // nonvanishing evidence along band_base + k·s up to the horizon
    let s = &degrees[0];
    let mut witness = None;
    let mut k = 1;
    loop {
        let mu = band_base.add(&s.scale(k));
        if !fits(&mu) {
            break;
        }
        let piece = m.graded_piece(&mu, horizon)?;
        if piece.dimension == 0 {
            witness = None;
            break;
        }
        witness = Some(piece);
        k += 1;
    }
    let verdict = if witness.is_some() {
        TorsionVerdict::NotTorsion
    } else {
        TorsionVerdict::Unknown
    };
    Ok(TorsionCertificate {
        verdict,
        band_base: band_base.clone(),
        band,
        witness,
    })
}

/// A candidate homomorphism `M → N`, as matrices `M_μ → N_μ` in the bases of
/// [`GradedModulePresentation::graded_piece`].
#[derive(Clone, Debug, Default)]
pub struct DegreewiseMap {
    pub matrices: BTreeMap<Weight, Matrix<QRational>>,
}

impl DegreewiseMap {
    /// The map determined by images of the generators of `M` in `N`
    /// (`image[i]` lists `(label in N, coefficient)`), on the given degrees.
    pub fn from_generator_images(
        m: &GradedModulePresentation,
        n: &GradedModulePresentation,
        images: &[Vec<(String, AlgebraElement)>],
        degrees: &[Weight],
        horizon: usize,
    ) -> Result<Self> {
        if images.len() != m.generators.len() {
            return Err(Error::DimensionMismatch {
                expected: m.generators.len(),
                found: images.len(),
            });
        }
        let labels: HashMap<&str, usize> = n
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.label.as_str(), i))
            .collect();
        let mut resolved = Vec::new();
        for (i, image) in images.iter().enumerate() {
            let mut parts = Vec::new();
            for (label, x) in image {
                let &j = labels
                    .get(label.as_str())
                    .ok_or_else(|| Error::UnknownSymbol(label.clone()))?;
                if let Some(d) = x.homogeneous_degree()? {
                    if d.add(&n.generators[j].degree) != m.generators[i].degree {
                        return Err(Error::MapNotHomogeneous(format!(
                            "image of `{}` has the wrong degree",
                            m.generators[i].label
                        )));
                    }
                }
                parts.push((j, x.clone()));
            }
            resolved.push(parts);
        }
        let mut matrices = BTreeMap::new();
        for mu in degrees {
            let src = m.piece_data(mu, horizon)?;
            let dst = n.piece_data(mu, horizon)?;
            let mut mat = Matrix::zeros(dst.quotient_cols.len(), src.quotient_cols.len());
            for (col, &k) in src.quotient_cols.iter().enumerate() {
                let (i, w) = &src.free[k];
                let wel = AlgebraElement::from_word(&m.algebra, w.clone())?;
                let parts: Vec<(usize, AlgebraElement)> = resolved[*i]
                    .iter()
                    .map(|(j, x)| Ok((*j, x.try_mul(&wel)?)))
                    .collect::<Result<_>>()?;
                for (row, c) in dst.coordinates(&parts)?.into_iter().enumerate() {
                    mat.set(row, col, c);
                }
            }
            matrices.insert(mu.clone(), mat);
        }
        Ok(DegreewiseMap { matrices })
    }
}

/// Degrees `μ ≥ λ` componentwise with total degree at most `horizon`.
fn band_degrees(lambda: &Weight, horizon: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    let rank = lambda.rank();
    let budget = horizon as i64 - total(lambda);
    if budget < 0 {
        return out;
    }
    let mut stack = vec![(0usize, lambda.coords().to_vec(), budget)];
    while let Some((i, coords, left)) = stack.pop() {
        if i == rank {
            out.push(Weight::new(coords));
            continue;
        }
        for extra in 0..=left {
            let mut c = coords.clone();
            c[i] += extra;
            stack.push((i + 1, c, left - extra));
        }
    }
    out.sort();
    out
}

/// True iff `map` is bijective on every degree `μ ≥ λ` within the horizon and
/// commutes with right multiplication by each algebra generator between such degrees.
pub fn proj_equiv_check(
    m: &GradedModulePresentation,
    n: &GradedModulePresentation,
    map: &DegreewiseMap,
    lambda: &Weight,
    horizon: usize,
) -> Result<bool> {
    if !m.algebra.same_as(&n.algebra) {
        return Err(Error::PresentationMismatch(
            m.algebra.name().into(),
            n.algebra.name().into(),
        ));
    }
    let degrees = band_degrees(lambda, horizon);
    let grading = generator_degrees(&m.algebra)?;
    for mu in &degrees {
        let f = map
            .matrices
            .get(mu)
            .ok_or_else(|| Error::MapNotHomogeneous(format!("no matrix given in degree {mu}")))?;
        let dm = m.graded_piece(mu, horizon)?.dimension;
        let dn = n.graded_piece(mu, horizon)?.dimension;
        if f.rows() != dn || f.cols() != dm {
            return Err(Error::DimensionMismatch {
                expected: dn * dm,
                found: f.rows() * f.cols(),
            });
        }
        if dm != dn || f.rank() != dm {
            return Ok(false);
        }
    }
    for mu in &degrees {
        for (g, d) in grading.iter().enumerate() {
            let target = mu.add(d);
            if total(&target) as usize > horizon {
                continue;
            }
            let am = m.action_matrix(g as u8, mu, horizon)?;
            let an = n.action_matrix(g as u8, mu, horizon)?;
            let lhs = map.matrices[&target].mul(&am);
            let rhs = an.mul(&map.matrices[mu]);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::algebras;

    fn vin_gens() -> Vec<AlgebraElement> {
        let p = algebras::vinberg();
        (0..4).map(|g| AlgebraElement::generator(&p, g)).collect()
    }

    #[test]
    fn free_and_quotient_pieces() {
        let p = algebras::vinberg();
        let r = GradedModulePresentation::free(p.clone(), &[Weight::scalar(0)]).unwrap();
        assert_eq!(r.graded_piece(&Weight::scalar(1), 4).unwrap().dimension, 4);
        let t = GradedModulePresentation::cyclic_quotient(p, &vin_gens()).unwrap();
        assert_eq!(t.graded_piece(&Weight::scalar(0), 4).unwrap().dimension, 1);
        assert_eq!(t.graded_piece(&Weight::scalar(2), 4).unwrap().dimension, 0);
    }

    #[test]
    fn shift_moves_pieces() {
        let p = algebras::vinberg();
        let r = GradedModulePresentation::free(p, &[Weight::scalar(0)]).unwrap();
        let s = r.shift(&Weight::scalar(1));
        assert_eq!(s.graded_piece(&Weight::scalar(0), 4).unwrap().dimension, 4);
    }

    #[test]
    fn torsion_verdicts() {
        let p = algebras::vinberg();
        let t = GradedModulePresentation::cyclic_quotient(p.clone(), &vin_gens()).unwrap();
        let c = is_torsion(&t, &Weight::scalar(0), 4).unwrap();
        assert_eq!(c.verdict, TorsionVerdict::Torsion);
        assert_eq!(c.band, vec![Weight::scalar(1)]);
        let r = GradedModulePresentation::free(p, &[Weight::scalar(0)]).unwrap();
        assert_eq!(is_torsion(&r, &Weight::scalar(0), 4).unwrap().verdict, TorsionVerdict::NotTorsion);
    }

    #[test]
    fn identity_is_an_equivalence() {
        let p = algebras::vinberg();
        let r = GradedModulePresentation::free(p, &[Weight::scalar(0)]).unwrap();
        let degrees = band_degrees(&Weight::scalar(0), 3);
        let id = DegreewiseMap::from_generator_images(
            &r,
            &r,
            &[vec![("e0".into(), AlgebraElement::one(r.algebra()))]],
            &degrees,
            3,
        )
        .unwrap();
        assert!(proj_equiv_check(&r, &r, &id, &Weight::scalar(0), 3).unwrap());
    }
}
