use std::collections::BTreeMap;
use std::fmt;

use crate::ncalg::format_sum;
use crate::scalars::{qint, QRational};

/// PBW exponents `(a, b, c)` of `F^a K^b E^c`.
pub type Pbw = (u32, i64, u32);

/// An element of U_q(sl₂) in the PBW basis `F^a K^b E^c`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct UqElement {
    terms: BTreeMap<Pbw, QRational>,
}

fn push(map: &mut BTreeMap<Pbw, QRational>, key: Pbw, c: QRational) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(key).or_default();
    *e += &c;
    if e.is_zero() {
        map.remove(&key);
    }
}

/// `q − q⁻¹`.
fn q_diff() -> QRational {
    &QRational::q() - &QRational::q_pow(-1)
}

impl UqElement {
    pub fn zero() -> Self {
        UqElement::default()
    }

    pub fn one() -> Self {
        Self::monomial((0, 0, 0), QRational::one())
    }

    pub fn scalar(c: QRational) -> Self {
        Self::monomial((0, 0, 0), c)
    }

    pub fn monomial(key: Pbw, c: QRational) -> Self {
        let mut terms = BTreeMap::new();
        push(&mut terms, key, c);
        UqElement { terms }
    }

    pub fn e() -> Self {
        Self::monomial((0, 0, 1), QRational::one())
    }

    pub fn f() -> Self {
        Self::monomial((1, 0, 0), QRational::one())
    }

    /// `K^k` for any integer `k`.
    pub fn k_pow(k: i64) -> Self {
        Self::monomial((0, k, 0), QRational::one())
    }

    pub fn terms(&self) -> &BTreeMap<Pbw, QRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &UqElement) -> UqElement {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            push(&mut terms, *k, c.clone());
        }
        UqElement { terms }
    }

    pub fn sub(&self, other: &UqElement) -> UqElement {
        self.add(&other.scale(&QRational::from_int(-1)))
    }

    pub fn scale(&self, c: &QRational) -> UqElement {
        let mut terms = BTreeMap::new();
        for (k, x) in &self.terms {
            push(&mut terms, *k, x * c);
        }
        UqElement { terms }
    }

    /// Right multiplication of a single PBW monomial by `E`.
    fn times_e(key: Pbw, c: &QRational, out: &mut BTreeMap<Pbw, QRational>) {
        push(out, (key.0, key.1, key.2 + 1), c.clone());
    }

    /// Right multiplication by `K^s`, using `E^c K^s = q^{−2cs} K^s E^c`.
    fn times_k(key: Pbw, s: i64, c: &QRational, out: &mut BTreeMap<Pbw, QRational>) {
        let factor = QRational::q_pow(-2 * key.2 as i64 * s);
        push(out, (key.0, key.1 + s, key.2), c * &factor);
    }

    /// Right multiplication by `F`, using `K^b F = q^{−2b} F K^b` and
    /// `E^c F = F E^c + [c]·(q^{1−c} K − q^{c−1} K⁻¹)·E^{c−1}/(q − q⁻¹)`.
    fn times_f(key: Pbw, c: &QRational, out: &mut BTreeMap<Pbw, QRational>) {
        let (a, b, e) = key;
        push(out, (a + 1, b, e), c * &QRational::q_pow(-2 * b));
        if e > 0 {
            let base = &(c * &qint(e as i64)) / &q_diff();
            let ei = e as i64;
            push(out, (a, b + 1, e - 1), &base * &QRational::q_pow(1 - ei));
            push(out, (a, b - 1, e - 1), -(&base * &QRational::q_pow(ei - 1)));
        }
    }

    /// Product in PBW normal form.
    pub fn mul(&self, other: &UqElement) -> UqElement {
        let mut out = BTreeMap::new();
        for (&(fa, kb, ec), y) in &other.terms {
            // multiply self by F^fa, then K^kb, then E^ec
            let mut cur: BTreeMap<Pbw, QRational> = self.terms.clone();
            for _ in 0..fa {
                let mut next = BTreeMap::new();
                for (k, c) in &cur {
                    Self::times_f(*k, c, &mut next);
                }
                cur = next;
            }
            if kb != 0 {
                let mut next = BTreeMap::new();
                for (k, c) in &cur {
                    Self::times_k(*k, kb, c, &mut next);
                }
                cur = next;
            }
            for _ in 0..ec {
                let mut next = BTreeMap::new();
                for (k, c) in &cur {
                    Self::times_e(*k, c, &mut next);
                }
                cur = next;
            }
            for (k, c) in cur {
                push(&mut out, k, &c * y);
            }
        }
        UqElement { terms: out }
    }

    pub fn pow(&self, n: u32) -> UqElement {
        (0..n).fold(UqElement::one(), |acc, _| acc.mul(self))
    }
}

/// Product in PBW normal form.
pub fn uq_multiply(x: &UqElement, y: &UqElement) -> UqElement {
    x.mul(y)
}

fn pbw_text(&(a, b, c): &Pbw) -> String {
    let mut parts = Vec::new();
    match a {
        0 => {}
        1 => parts.push("F".to_string()),
        n => parts.push(format!("F^{n}")),
    }
    match b {
        0 => {}
        1 => parts.push("K".to_string()),
        n => parts.push(format!("K^{n}")),
    }
    match c {
        0 => {}
        1 => parts.push("E".to_string()),
        n => parts.push(format!("E^{n}")),
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for UqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_sum(f, self.terms.iter().map(|(k, c)| (c, pbw_text(k))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_times_f() {
        let lhs = UqElement::e().mul(&UqElement::f());
        let h = UqElement::k_pow(1)
            .sub(&UqElement::k_pow(-1))
            .scale(&q_diff().inverse().unwrap());
        assert_eq!(lhs, UqElement::f().mul(&UqElement::e()).add(&h));
    }

    #[test]
    fn k_relations() {
        let k = UqElement::k_pow(1);
        let kinv = UqElement::k_pow(-1);
        assert_eq!(k.mul(&kinv), UqElement::one());
        assert_eq!(
            UqElement::e().mul(&k),
            k.mul(&UqElement::e()).scale(&QRational::q_pow(-2))
        );
        assert_eq!(
            k.mul(&UqElement::e()),
            UqElement::e().mul(&k).scale(&QRational::q_pow(2))
        );
        assert_eq!(
            k.mul(&UqElement::f()),
            UqElement::f().mul(&k).scale(&QRational::q_pow(-2))
        );
    }

    #[test]
    fn associativity_on_mixed_words() {
        let x = UqElement::e().pow(2).add(&UqElement::k_pow(-1));
        let y = UqElement::f().pow(2).mul(&UqElement::k_pow(1));
        let z = UqElement::e().add(&UqElement::f());
        assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }
}
