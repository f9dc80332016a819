use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::{fmt_rational, rat, QLaurent};
use super::poly::{self, Poly};
use crate::error::{Error, Result};

/// An exact rational function of the formal parameter `q`.
///
/// Canonical form: the denominator is a polynomial in `q` with constant
/// term 1, coprime to the numerator. Two values are equal iff their stored
/// fields are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRational {
    num: QLaurent,
    den: QLaurent,
}

impl Hash for QRational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

fn to_poly(x: &QLaurent, offset: i64) -> Poly {
    let max = x.max_exp().unwrap_or(offset);
    let mut p = vec![BigRational::zero(); (max - offset + 1).max(0) as usize];
    for (e, c) in x.terms() {
        p[(e - offset) as usize] = c.clone();
    }
    poly::trim(&mut p);
    p
}

fn from_poly(p: &Poly, offset: i64) -> QLaurent {
    QLaurent::from_terms(
        p.iter()
            .enumerate()
            .map(|(i, c)| (i as i64 + offset, c.clone())),
    )
}

impl QRational {
    pub fn zero() -> Self {
        QRational {
            num: QLaurent::zero(),
            den: QLaurent::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(QLaurent::one())
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_laurent(QLaurent::q_pow(e))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(QLaurent::constant(rat(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_laurent(QLaurent::constant(c))
    }

    pub fn from_laurent(num: QLaurent) -> Self {
        QRational {
            num,
            den: QLaurent::one(),
        }
    }

    /// Build `num/den` and bring it to canonical form.
    pub fn new(num: QLaurent, den: QLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: QLaurent, den: QLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (de, dc) = match den.as_monomial() {
            Some((e, c)) => (e, c.clone()),
            None => {
                let nmin = num.min_exp().unwrap();
                let dmin = den.min_exp().unwrap();
                let np = to_poly(&num, nmin);
                let dp = to_poly(&den, dmin);
                let g = poly::gcd(&np, &dp);
                let (np, dp) = if g.len() > 1 {
                    (poly::divrem(&np, &g).0, poly::divrem(&dp, &g).0)
                } else {
                    (np, dp)
                };
                let c0 = dp[0].clone();
                let inv = c0.recip();
                let scale = |p: &Poly| -> Poly { p.iter().map(|c| c * &inv).collect() };
                let n = from_poly(&scale(&np), nmin - dmin);
                let d = from_poly(&scale(&dp), 0);
                return QRational { num: n, den: d };
            }
        };
        QRational {
            num: num.shift(-de).scale(&dc.recip()),
            den: QLaurent::one(),
        }
    }

    /// Re-canonicalize from raw parts (identity on canonical input).
    pub fn renormalize(&self) -> Self {
        Self::normalize(self.num.clone(), self.den.clone())
    }

    pub fn numerator(&self) -> &QLaurent {
        &self.num
    }

    pub fn denominator(&self) -> &QLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some` when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&QLaurent> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        self.as_laurent().and_then(|l| l.as_constant())
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QRational) -> Result<QRational> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = QRational::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Value at a rational point.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let n = self.num.eval(x).ok_or(Error::DivisionByZero)?;
        let d = self.den.eval(x).ok_or(Error::DivisionByZero)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(n / d)
    }

    /// Specialization `q = 1`.
    pub fn eval_at_one(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval_at_one() / d)
    }

    /// Value of `x/(q − 1)` at `q = 1`, for `x` vanishing at `q = 1`.
    pub fn semiclassical_coefficient(&self) -> Result<BigRational> {
        if !self.eval_at_one()?.is_zero() {
            return Err(Error::NonvanishingAtOne);
        }
        // x = N/D with N(1) = 0, D(1) ≠ 0: the limit is N'(1)/D(1).
        let nd: BigRational = self
            .num
            .terms()
            .fold(BigRational::zero(), |acc, (e, c)| acc + c * rat(e));
        Ok(nd / self.den.eval_at_one())
    }

    /// `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        Self::normalize(self.num.bar(), self.den.bar())
    }
}

/// `[n] = (qⁿ − q⁻ⁿ)/(q − q⁻¹)` as a scalar.
pub fn qint(n: i64) -> QRational {
    QRational::from_laurent(super::laurent::quantum_integer(n))
}

impl Default for QRational {
    fn default() -> Self {
        QRational::zero()
    }
}

impl From<i64> for QRational {
    fn from(n: i64) -> Self {
        QRational::from_int(n)
    }
}

impl From<QLaurent> for QRational {
    fn from(l: QLaurent) -> Self {
        QRational::from_laurent(l)
    }
}

impl From<BigRational> for QRational {
    fn from(c: BigRational) -> Self {
        QRational::from_rational(c)
    }
}

impl Add for &QRational {
    type Output = QRational;
    fn add(self, rhs: &QRational) -> QRational {
        if self.den.is_one() && rhs.den.is_one() {
            return QRational::from_laurent(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return QRational::normalize(&self.num + &rhs.num, self.den.clone());
        }
        QRational::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &QRational {
    type Output = QRational;
    fn sub(self, rhs: &QRational) -> QRational {
        self + &(-rhs)
    }
}

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        -&self
    }
}

impl Mul for &QRational {
    type Output = QRational;
    fn mul(self, rhs: &QRational) -> QRational {
        if self.is_zero() || rhs.is_zero() {
            return QRational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRational::from_laurent(&self.num * &rhs.num);
        }
        QRational::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &QRational {
    type Output = QRational;
    /// Panics on division by zero; use [`QRational::checked_div`] otherwise.
    fn div(self, rhs: &QRational) -> QRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QRational {
            type Output = QRational;
            fn $m(self, rhs: QRational) -> QRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QRational> for QRational {
            type Output = QRational;
            fn $m(self, rhs: &QRational) -> QRational {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&QRational> for QRational {
    fn add_assign(&mut self, rhs: &QRational) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |l: &QLaurent| {
            if l.len() > 1 || l.terms().any(|(e, c)| e != 0 && !c.is_one()) {
                format!("({l})")
            } else {
                l.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

/// JSON form: `{"num": [[exp, "rat"], ...], "den": [[exp, "rat"], ...]}`,
/// exponents ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QRationalJson {
    pub num: Vec<(i64, String)>,
    pub den: Vec<(i64, String)>,
}

impl QRational {
    pub fn to_json(&self) -> QRationalJson {
        let terms =
            |l: &QLaurent| l.terms().map(|(e, c)| (e, fmt_rational(c))).collect::<Vec<_>>();
        QRationalJson {
            num: terms(&self.num),
            den: terms(&self.den),
        }
    }

    pub fn from_json(j: &QRationalJson) -> Result<Self> {
        let parse = |v: &[(i64, String)]| -> Result<QLaurent> {
            let mut out = QLaurent::zero();
            for (e, s) in v {
                let c: BigRational = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad rational `{s}`")))?;
                out.add_term(*e, c);
            }
            Ok(out)
        };
        QRational::new(parse(&j.num)?, parse(&j.den)?)
    }
}

impl One for QRational {
    fn one() -> Self {
        QRational::one()
    }
}

impl Zero for QRational {
    fn zero() -> Self {
        QRational::zero()
    }
    fn is_zero(&self) -> bool {
        QRational::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QRational {
        QRational::q()
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(qint(3).eval_at_one().unwrap(), rat(3));
        assert_eq!(QRational::from_int(5).eval_at_one().unwrap(), rat(5));
        let x = (q() - q().inverse().unwrap()) / (q() - QRational::one());
        assert_eq!(x.eval_at_one().unwrap(), rat(2));
        let pole = QRational::one() / (q() - QRational::one());
        assert_eq!(pole.eval_at_one(), Err(Error::PoleAtOne));
    }

    #[test]
    fn semiclassical_examples() {
        let one = QRational::one();
        let qinv = q().inverse().unwrap();
        assert_eq!((&one - &qinv).semiclassical_coefficient().unwrap(), rat(1));
        assert_eq!(QRational::zero().semiclassical_coefficient().unwrap(), rat(0));
        assert_eq!((q() - qinv).semiclassical_coefficient().unwrap(), rat(2));
        assert_eq!(one.semiclassical_coefficient(), Err(Error::NonvanishingAtOne));
        // a quotient vanishing at 1: (q² − 1)/(q + 2) → 2/3
        let x = (q() * q() - QRational::one()) / (q() + QRational::from_int(2));
        assert_eq!(
            x.semiclassical_coefficient().unwrap(),
            BigRational::new(2.into(), 3.into())
        );
    }

    #[test]
    fn canonical_cancellation() {
        // (q² − 1)/(q − 1) = q + 1
        let x = (q() * q() - QRational::one()) / (q() - QRational::one());
        assert_eq!(x, q() + QRational::one());
        assert!(x.denominator().is_one());
        // [2]/(q + q⁻¹) = 1
        let y = qint(2) / (q() + q().inverse().unwrap());
        assert!(y.is_one());
        assert!(QRational::new(QLaurent::one(), QLaurent::zero()).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let x = (q() * QRational::from_int(3) - q().inverse().unwrap()) / qint(3);
        let j = x.to_json();
        assert_eq!(QRational::from_json(&j).unwrap(), x);
    }

    #[test]
    fn display_forms() {
        let x = q() * q() * QRational::from_int(3) - q().inverse().unwrap();
        assert_eq!(x.to_string(), "3*q^2 - q^-1");
        assert_eq!((QRational::one() / qint(2)).to_string(), "q/(q^2 + 1)");
    }
}
