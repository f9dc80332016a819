//! Exact scalars: Laurent polynomials and rational functions in a formal `q`.
//!
//! `q` never takes a numeric value inside the engine. Specializations happen
//! only through [`QRational::eval`], [`QRational::eval_at_one`] and
//! [`QRational::semiclassical_coefficient`].

mod laurent;
mod poly;
mod rational;

pub use laurent::{quantum_factorial, quantum_integer, QLaurent};
pub use rational::{qint, QRational, QRationalJson};

pub use num_rational::BigRational;

/// Parse a rational literal such as `3`, `-2/5`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    s.trim().parse().ok()
}

/// Shorthand for an integer-valued rational.
pub fn rational(n: i64) -> BigRational {
    laurent::rat(n)
}

/// Exact rational value at `q = 1`.
pub fn eval_at_one(x: &QRational) -> crate::Result<BigRational> {
    x.eval_at_one()
}

/// Value of `x/(q − 1)` at `q = 1`.
pub fn semiclassical_coefficient(x: &QRational) -> crate::Result<BigRational> {
    x.semiclassical_coefficient()
}
