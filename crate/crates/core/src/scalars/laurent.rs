use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial in `q` with exact rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QLaurent {
    terms: BTreeMap<i64, BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        QLaurent { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut out = QLaurent::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Single term `c·q^e`, if that is what this is.
    pub fn as_monomial(&self) -> Option<(i64, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        match self.as_monomial() {
            Some((0, c)) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return QLaurent::zero();
        }
        QLaurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Value at `q = x`; `None` when a negative power meets `x = 0`.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            if x.is_zero() {
                match e.cmp(&0) {
                    std::cmp::Ordering::Less => return None,
                    std::cmp::Ordering::Equal => acc += c,
                    std::cmp::Ordering::Greater => {}
                }
                continue;
            }
            acc += c * pow(x, *e);
        }
        Some(acc)
    }

    /// Sum of coefficients, i.e. the value at `q = 1`.
    pub fn eval_at_one(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }
}

pub(crate) fn pow(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut n = e.unsigned_abs();
    let mut acc = BigRational::one();
    let mut b = base;
    while n > 0 {
        if n & 1 == 1 {
            acc = &acc * &b;
        }
        b = &b * &b;
        n >>= 1;
    }
    acc
}

/// The quantum integer `[n] = (qⁿ − q⁻ⁿ)/(q − q⁻¹)`.
pub fn quantum_integer(n: i64) -> QLaurent {
    let sign = if n < 0 { -1 } else { 1 };
    let m = n.abs();
    QLaurent::from_terms((0..m).map(|k| (m - 1 - 2 * k, rat(sign))))
}

/// The quantum factorial `[n]! = [1][2]⋯[n]`.
pub fn quantum_factorial(n: u32) -> QLaurent {
    (1..=n as i64).fold(QLaurent::one(), |acc, k| &acc * &quantum_integer(k))
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for QLaurent {
    /// Descending exponents: `3*q^2 - q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coef = fmt_rational(&abs);
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{coef}*q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{coef}*q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integers_small() {
        assert!(quantum_integer(0).is_zero());
        assert!(quantum_integer(1).is_one());
        assert_eq!(
            quantum_integer(2),
            QLaurent::from_terms([(1, rat(1)), (-1, rat(1))])
        );
        assert_eq!(quantum_integer(-2), -&quantum_integer(2));
    }

    #[test]
    fn quantum_integer_times_denominator() {
        // [n](q − q⁻¹) = qⁿ − q⁻ⁿ, checked directly
        let d = QLaurent::from_terms([(1, rat(1)), (-1, rat(-1))]);
        for n in -6..=6 {
            let lhs = &quantum_integer(n) * &d;
            let rhs = QLaurent::from_terms([(n, rat(1)), (-n, rat(-1))]);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn display() {
        let x = QLaurent::from_terms([(2, rat(3)), (-1, rat(-1))]);
        assert_eq!(x.to_string(), "3*q^2 - q^-1");
        assert_eq!(QLaurent::zero().to_string(), "0");
        assert_eq!(quantum_integer(2).to_string(), "q + q^-1");
    }
}
