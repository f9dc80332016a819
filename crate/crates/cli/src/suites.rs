//! Named verification suites. Each suite recomputes a family of identities
//! from scratch and reports one line per check.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use qwonder::expr::{Context, Value};
use qwonder::lattice::{RootSubset, Weight};
use qwonder::ncalg::algebras::{self, A, B, C, D};
use qwonder::ncalg::{
    check_local_confluence, dimension_of_graded_piece, is_central, normal_words_up_to_length, veronese,
    AlgebraElement, Presentation, TensorElement,
};
use qwonder::poisson::semiclassical_check;
use qwonder::projcat::{is_torsion, GradedModulePresentation, TorsionVerdict};
use qwonder::qgroups::{
    act, antipode_sides, cg_decompose, coassociativity_sides, coproduct, counit_sides, table_for, IrrepVn,
    MatrixCoefficient, UqElement,
};
use qwonder::reesgr::{
    gr_multiply, gr_symbol, gr_to_p1p1, phi, phi_multiplicativity_check, vinberg_presentation_to_rees,
    vinberg_to_matq, ReesElement,
};
use qwonder::scalars::QRational;
use qwonder::Result;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

type SuiteFn = fn(&mut Vec<Check>) -> Result<()>;

/// Suite names in the order `verify all` runs them.
pub const SUITES: [(&str, SuiteFn); 12] = [
    ("confluence", confluence),
    ("centrality", centrality),
    ("pw-dims", pw_dims),
    ("vinberg-matq", vinberg_matq),
    ("gr-p1p1", gr_p1p1),
    ("semiclassical", semiclassical),
    ("hopf", hopf),
    ("phi-multiplicative", phi_multiplicative),
    ("torsion", torsion),
    ("classical", classical),
    ("veronese", veronese_dims),
    ("irreps", irreps),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs one suite; an error inside a suite is reported as a failed check.
pub fn run_suite(name: &str) -> Option<SuiteReport> {
    let (_, f) = SUITES.iter().find(|(n, _)| *n == name)?;
    let mut checks = Vec::new();
    if let Err(e) = f(&mut checks) {
        checks.push(Check {
            name: "completed".into(),
            passed: false,
            detail: e.to_string(),
        });
    }
    let passed = checks.iter().all(|c| c.passed);
    Some(SuiteReport {
        suite: name.to_string(),
        passed,
        checks,
    })
}

/// Runs the named suites on separate threads; results keep the input order.
pub fn run_suites(names: &[&str]) -> Vec<SuiteReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = names
            .iter()
            .map(|n| s.spawn(move || run_suite(n).expect("known suite")))
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread")).collect()
    })
}

fn check(out: &mut Vec<Check>, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
    out.push(Check {
        name: name.into(),
        passed,
        detail: if passed { String::new() } else { detail.into() },
    });
}

fn gens(p: &Arc<Presentation>) -> Vec<AlgebraElement> {
    (0..p.num_generators() as u8)
        .map(|g| AlgebraElement::generator(p, g))
        .collect()
}

fn eval_alg(ctx: &str, text: &str) -> Result<AlgebraElement> {
    alg_in(&Context::named(ctx)?, text)
}

fn confluence(out: &mut Vec<Check>) -> Result<()> {
    for p in [
        algebras::mat2(),
        algebras::sl2(),
        algebras::p1p1(),
        algebras::vinberg(),
        algebras::mat2_classical(),
        algebras::sl2_classical(),
        algebras::p1p1_classical(),
        algebras::vinberg_classical(),
    ] {
        let amb = check_local_confluence(&p)?;
        check(out, p.name(), amb.is_empty(), format!("{} unresolved overlaps", amb.len()));
    }
    Ok(())
}

fn centrality(out: &mut Vec<Check>) -> Result<()> {
    for p in [algebras::mat2(), algebras::mat2_classical(), algebras::vinberg()] {
        let det = algebras::quantum_determinant(&p);
        for (g, x) in gens(&p).iter().enumerate() {
            let comm = det.commutator(x)?;
            check(
                out,
                format!("{}: D*{} = {}*D", p.name(), p.symbols()[g], p.symbols()[g]),
                comm.is_zero(),
                comm.to_string(),
            );
        }
        check(out, format!("{}: is_central(D)", p.name()), is_central(&p, &det)?, "");
    }
    Ok(())
}

/// Number of normal words of length `≤ n` with the parity of `n`.
pub fn pw_level_dim_by_words(p: &Presentation, n: usize) -> usize {
    normal_words_up_to_length(p, n)
        .into_iter()
        .filter(|w| w.len() % 2 == n % 2)
        .count()
}

/// `Σ_{m ≤ n, m ≡ n (2)} #{c^{V_m}_{ij}}`.
pub fn pw_level_dim_by_coefficients(n: u32) -> usize {
    (0..=n)
        .filter(|m| (n - m).is_multiple_of(2))
        .map(|m| MatrixCoefficient::all(m).count())
        .sum()
}

fn pw_dims(out: &mut Vec<Check>) -> Result<()> {
    let expected = [1, 4, 10, 20, 35, 56, 84];
    let p = algebras::sl2();
    for (n, &e) in expected.iter().enumerate() {
        let by_words = pw_level_dim_by_words(&p, n);
        let by_coeffs = pw_level_dim_by_coefficients(n as u32);
        check(
            out,
            format!("dim level <= {n}"),
            by_words == e && by_coeffs == e,
            format!("words {by_words}, coefficients {by_coeffs}, expected {e}"),
        );
    }
    Ok(())
}

/// Image of a word of the Vinberg presentation under `az ↦ a, …`.
fn matq_image(word: &[u8]) -> Result<AlgebraElement> {
    let v = algebras::vinberg();
    let mut acc = AlgebraElement::one(&algebras::mat2());
    for &g in word {
        let r = vinberg_presentation_to_rees(&AlgebraElement::generator(&v, g))?;
        acc = acc.try_mul(&vinberg_to_matq(&r)?)?;
    }
    Ok(acc)
}

fn vinberg_matq(out: &mut Vec<Check>) -> Result<()> {
    let v = algebras::vinberg();
    let mat = algebras::mat2();
    for rule in v.rules() {
        let lhs = matq_image(&rule.lhs)?;
        let mut rhs = AlgebraElement::zero(&mat);
        for (w, c) in &rule.rhs {
            rhs = rhs.try_add(&matq_image(w)?.scale(c))?;
        }
        check(
            out,
            format!("relation {} -> ...", v.word_to_string(&rule.lhs)),
            lhs == rhs,
            format!("{lhs} vs {rhs}"),
        );
    }
    let z2 = vinberg_to_matq(&ReesElement::z_squared(&algebras::sl2()))?;
    check(out, "z^2 maps to D", z2 == algebras::quantum_determinant(&mat), z2.to_string());
    let expected = [1, 4, 10, 20, 35, 56, 84];
    for (n, &e) in expected.iter().enumerate() {
        let dv = dimension_of_graded_piece(&v, &Weight::scalar(n as i64), n)?;
        let dm = dimension_of_graded_piece(&mat, &Weight::scalar(n as i64), n)?;
        let dr = pw_level_dim_by_words(&algebras::sl2(), n);
        check(
            out,
            format!("degree {n} dimension"),
            dv == e && dm == e && dr == e,
            format!("vinberg {dv}, mat2 {dm}, rees {dr}"),
        );
    }
    let names = ["a", "b", "c", "d"];
    for g in [A, B, C, D] {
        let r = ReesElement::generator(&algebras::sl2(), g);
        let delta = qwonder::reesgr::rees_coproduct(&r)?;
        let mut mapped = TensorElement::zero(vec![mat.clone(), mat.clone()]);
        for (n, t) in &delta.parts {
            for (ws, c) in t.terms() {
                let part = |w: &Vec<u8>| -> Result<AlgebraElement> {
                    let f = AlgebraElement::from_word(&algebras::sl2(), w.clone())?;
                    vinberg_to_matq(&ReesElement::homogeneous(f, *n)?)
                };
                let pure = TensorElement::pure(&[part(&ws[0])?, part(&ws[1])?]);
                mapped = mapped.try_add(&pure.scale(c))?;
            }
        }
        let expected = coproduct(&AlgebraElement::generator(&mat, g))?;
        check(
            out,
            format!("coproduct of {}z", names[g as usize]),
            mapped == expected,
            format!("{mapped} vs {expected}"),
        );
    }
    Ok(())
}

fn gr_p1p1(out: &mut Vec<Check>) -> Result<()> {
    let sl2 = algebras::sl2();
    let empty = RootSubset::empty();
    let g = gens(&sl2);
    let names = ["a", "b", "c", "d"];
    for (i, x) in g.iter().enumerate() {
        for (j, y) in g.iter().enumerate() {
            let gx = gr_symbol(&empty, x)?;
            let gy = gr_symbol(&empty, y)?;
            let lhs = gr_to_p1p1(&gr_multiply(&empty, &gx, &gy)?)?;
            let rhs = gr_to_p1p1(&gx)?.try_mul(&gr_to_p1p1(&gy)?)?;
            check(
                out,
                format!("{}*{}", names[i], names[j]),
                lhs == rhs,
                format!("{lhs} vs {rhs}"),
            );
        }
    }
    let p1 = algebras::p1p1();
    for n in 0..=5usize {
        let e = (n + 1) * (n + 1);
        let top = pw_level_dim_by_words(&sl2, n);
        let below = if n >= 2 { pw_level_dim_by_words(&sl2, n - 2) } else { 0 };
        let bideg = dimension_of_graded_piece(&p1, &Weight::new(vec![n as i64, n as i64]), 2 * n)?;
        check(
            out,
            format!("gr degree {n} dimension"),
            top - below == e && bideg == e,
            format!("quotient {}, bidegree {bideg}, expected {e}", top - below),
        );
    }
    Ok(())
}

/// The six brackets on generator pairs, written out by hand.
pub const BRACKET_TABLE: [(&str, &str, &str); 6] = [
    ("a", "b", "a*b"),
    ("a", "c", "a*c"),
    ("a", "d", "2*b*c"),
    ("b", "c", "0"),
    ("b", "d", "b*d"),
    ("c", "d", "c*d"),
];

fn alg_in(ctx: &Context, text: &str) -> Result<AlgebraElement> {
    match ctx.eval_str(text)? {
        Value::Alg(x) => Ok(x),
        other => Err(qwonder::Error::Type(format!("{other} is not an algebra element"))),
    }
}

/// Appends `suffix` to every generator in a product such as `2*b*c`.
fn suffixed(text: &str, suffix: &str) -> String {
    text.split('*')
        .map(|t| {
            if t.chars().all(|c| c.is_ascii_digit()) {
                t.to_string()
            } else {
                format!("{t}{suffix}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn semiclassical(out: &mut Vec<Check>) -> Result<()> {
    let pairs = [
        (Context::named("sl2")?, Context::named("sl2-cl")?, ""),
        (
            Context::from_presentation(algebras::vinberg()),
            Context::from_presentation(algebras::vinberg_classical()),
            "z",
        ),
    ];
    for (quantum, classical, suffix) in &pairs {
        for (x, y, expected) in BRACKET_TABLE {
            let xq = alg_in(quantum, &suffixed(x, suffix))?;
            let yq = alg_in(quantum, &suffixed(y, suffix))?;
            let want = alg_in(classical, &suffixed(expected, suffix))?;
            let report = semiclassical_check(&xq, &yq)?;
            check(
                out,
                format!("{{{x}{suffix},{y}{suffix}}} in {}", quantum.name()),
                report.passed && report.limit == want,
                format!("limit {}, bracket {}, expected {want}", report.limit, report.bracket),
            );
        }
    }
    Ok(())
}

/// A random element of O_q(SL₂) supported on normal words of length `≤ 3`.
pub fn random_element(p: &Arc<Presentation>, rng: &mut ChaCha8Rng) -> Result<AlgebraElement> {
    let words = normal_words_up_to_length(p, 3);
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..=4) {
        let w = words[rng.gen_range(0..words.len())].clone();
        let c = QRational::from_int(rng.gen_range(-3..=3)) * QRational::q_pow(rng.gen_range(-1..=1));
        terms.push((w, c));
    }
    AlgebraElement::from_terms(p, terms)
}

fn hopf(out: &mut Vec<Check>) -> Result<()> {
    let p = algebras::sl2();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut inputs: Vec<(String, AlgebraElement)> =
        gens(&p).into_iter().map(|x| (x.to_string(), x)).collect();
    for k in 0..20 {
        let x = random_element(&p, &mut rng)?;
        inputs.push((format!("random #{k}"), x));
    }
    for (label, x) in inputs {
        let (l, r) = coassociativity_sides(&x)?;
        check(out, format!("coassociativity on {label}"), l == r, format!("{x}"));
        let (l, r) = counit_sides(&x)?;
        check(out, format!("counit on {label}"), l == x && r == x, format!("{x}"));
        let eps = qwonder::qgroups::counit(&x)?;
        let unit = AlgebraElement::scalar(&p, eps);
        let (l, r) = antipode_sides(&x)?;
        check(out, format!("antipode on {label}"), l == unit && r == unit, format!("{x}"));
    }
    Ok(())
}

fn phi_multiplicative(out: &mut Vec<Check>) -> Result<()> {
    let base = algebras::sl2();
    let coeffs: Vec<MatrixCoefficient> = (0..=2).flat_map(MatrixCoefficient::all).collect();
    for (label, subset) in [("empty", RootSubset::empty()), ("full", RootSubset::full(1))] {
        let mut failures = Vec::new();
        for &c1 in &coeffs {
            for &c2 in &coeffs {
                if !phi_multiplicativity_check(&subset, c1, c2, &base)? {
                    failures.push(format!("{c1}*{c2}"));
                }
            }
        }
        check(
            out,
            format!("Phi multiplicative, I = {label}, {} pairs", coeffs.len() * coeffs.len()),
            failures.is_empty(),
            failures.join(", "),
        );
    }
    let full = RootSubset::full(1);
    let mut failures = Vec::new();
    for &c in &coeffs {
        let t = table_for(&base, c.n)?;
        if phi(&full, c, &base)? != coproduct(&t[c.row as usize][c.col as usize])? {
            failures.push(c.to_string());
        }
    }
    check(out, "Phi equals the coproduct for I = full", failures.is_empty(), failures.join(", "));
    Ok(())
}

/// The three reference modules over the Vinberg algebra.
pub fn reference_modules() -> Result<Vec<(&'static str, GradedModulePresentation)>> {
    let v = algebras::vinberg();
    let g = gens(&v);
    Ok(vec![
        ("augmentation", GradedModulePresentation::cyclic_quotient(v.clone(), &g)?),
        ("free", GradedModulePresentation::free(v.clone(), &[Weight::scalar(0)])?),
        (
            "z2",
            GradedModulePresentation::cyclic_quotient(v.clone(), &[algebras::quantum_determinant(&v)])?,
        ),
    ])
}

fn torsion(out: &mut Vec<Check>) -> Result<()> {
    let expected = [
        ("augmentation", TorsionVerdict::Torsion),
        ("free", TorsionVerdict::NotTorsion),
        ("z2", TorsionVerdict::NotTorsion),
    ];
    for ((name, m), (_, want)) in reference_modules()?.into_iter().zip(expected) {
        let cert = is_torsion(&m, &Weight::scalar(0), 8)?;
        check(
            out,
            format!("{name} is {want:?}"),
            cert.verdict == want,
            format!("{:?}", cert.verdict),
        );
        if name == "z2" {
            for n in 0..=4usize {
                let d = m.graded_piece(&Weight::scalar(n as i64), n)?.dimension;
                check(
                    out,
                    format!("z2 degree {n} dimension"),
                    d == (n + 1) * (n + 1),
                    format!("{d}"),
                );
            }
        }
    }
    Ok(())
}

fn classical(out: &mut Vec<Check>) -> Result<()> {
    for p in [
        algebras::mat2_classical(),
        algebras::sl2_classical(),
        algebras::vinberg_classical(),
        algebras::p1p1_classical(),
    ] {
        let g = gens(&p);
        let mut bad = Vec::new();
        for x in &g {
            for y in &g {
                if !x.commutator(y)?.is_zero() {
                    bad.push(format!("[{x},{y}]"));
                }
            }
        }
        check(out, format!("{} commutative", p.name()), bad.is_empty(), bad.join(", "));
    }
    // Monomials a^i b^j c^k and b^j c^k d^l of degree <= n with n's parity span level <= n.
    let cl = algebras::sl2_classical();
    for n in 0..=6usize {
        let monomials = monomial_count(n);
        let words = pw_level_dim_by_words(&cl, n);
        let coeffs = pw_level_dim_by_coefficients(n as u32);
        check(
            out,
            format!("classical level <= {n} dimension"),
            monomials == words && words == coeffs,
            format!("monomials {monomials}, words {words}, coefficients {coeffs}"),
        );
    }
    for n in 0..=5usize {
        let d = pw_level_dim_by_words(&cl, n) - if n >= 2 { pw_level_dim_by_words(&cl, n - 2) } else { 0 };
        check(out, format!("classical gr degree {n} dimension"), d == (n + 1) * (n + 1), format!("{d}"));
    }
    let q = algebras::sl2();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc1a55);
    for k in 0..10 {
        let x = random_element(&q, &mut rng)?;
        let y = random_element(&q, &mut rng)?;
        let lhs = x.try_mul(&y)?.specialize_at_one(&cl)?;
        let rhs = x.specialize_at_one(&cl)?.try_mul(&y.specialize_at_one(&cl)?)?;
        check(out, format!("specialization is multiplicative #{k}"), lhs == rhs, format!("{lhs} vs {rhs}"));
    }
    for (x, y, expected) in BRACKET_TABLE {
        let cx = eval_alg("sl2", x)?.specialize_at_one(&cl)?;
        let cy = eval_alg("sl2", y)?.specialize_at_one(&cl)?;
        let b = qwonder::poisson::sl2_bracket().bracket(&cx, &cy)?;
        let want = eval_alg("sl2-cl", expected)?;
        check(out, format!("{{{x},{y}}} classical"), b == want, format!("{b}"));
    }
    Ok(())
}

/// Monomials `a^i b^j c^k` (`i ≥ 0`) and `b^j c^k d^l` (`l ≥ 1`) of total degree
/// `≤ n` and parity `n`, counted directly.
fn monomial_count(n: usize) -> usize {
    let mut count = 0;
    for total in (0..=n).filter(|t| t % 2 == n % 2) {
        for ad in 0..=total {
            let bc = total - ad;
            let with_a = bc + 1;
            let with_d = if ad >= 1 { bc + 1 } else { 0 };
            count += with_a + with_d;
        }
    }
    count
}

fn veronese_dims(out: &mut Vec<Check>) -> Result<()> {
    let levels = veronese(&algebras::vinberg(), &Weight::scalar(1), 3)?;
    for (n, lvl) in levels.iter().enumerate() {
        let e = (n + 1) * (n + 2) * (n + 3) / 6;
        check(out, format!("degree {n} dimension"), lvl.dimension == e, format!("{}", lvl.dimension));
    }
    Ok(())
}

fn irreps(out: &mut Vec<Check>) -> Result<()> {
    let q = QRational::q();
    let q2 = QRational::q_pow(2);
    let e = UqElement::e();
    let f = UqElement::f();
    let k = UqElement::k_pow(1);
    let kinv = UqElement::k_pow(-1);
    let bracket = UqElement::k_pow(1)
        .sub(&UqElement::k_pow(-1))
        .scale(&(&q - &QRational::q_pow(-1)).inverse()?);
    for n in 0..=6u32 {
        let rep = IrrepVn::new(n);
        let mut ok = true;
        for b in 0..rep.dim() {
            let mut v = vec![QRational::zero(); rep.dim()];
            v[b] = QRational::one();
            let ap = |x: &UqElement, v: &[QRational]| act(x, rep, v);
            let ke = ap(&k, &ap(&e, &v)?)?;
            let ek = ap(&e, &ap(&k, &v)?)?;
            ok &= ke == ek.iter().map(|x| x * &q2).collect::<Vec<_>>();
            let kf = ap(&k, &ap(&f, &v)?)?;
            let fk = ap(&f, &ap(&k, &v)?)?;
            ok &= kf.iter().map(|x| x * &q2).collect::<Vec<_>>() == fk;
            let ef = ap(&e, &ap(&f, &v)?)?;
            let fe = ap(&f, &ap(&e, &v)?)?;
            let comm: Vec<QRational> = ef.iter().zip(&fe).map(|(x, y)| x - y).collect();
            ok &= comm == ap(&bracket, &v)?;
            ok &= ap(&k, &ap(&kinv, &v)?)? == v;
        }
        check(out, format!("relations on V_{n}"), ok, "");
    }
    for n in 0..=6u32 {
        for m in 0..=(6 - n) {
            let cg = cg_decompose(n, m);
            check(out, format!("Clebsch-Gordan V_{n} x V_{m}"), cg.check_invariants(), "");
        }
    }
    Ok(())
}
