use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::lattice::RootSubset;
use crate::ncalg::algebras::{self, is_matrix_type, is_sl2_type};
use crate::ncalg::{AlgebraElement, CentralLocalization, LocalizedElement, Presentation, TensorElement};
use crate::qgroups::{table_for, MatrixCoefficient, UqElement};
use crate::reesgr::{gr_multiply, gr_symbol, rees_multiply, GrElement, ReesElement};
use crate::scalars::{BigRational, QRational};
use crate::{Error, Result};

use super::ast::Expr;
use super::parser::parse;

/// What an expression is evaluated in.
#[derive(Clone, Debug)]
pub enum ContextKind {
    /// A finitely presented algebra; `D` denotes the quantum determinant in matrix-type presentations.
    Algebra(Arc<Presentation>),
    /// The Rees algebra `⊕ O_q(SL₂)_{≤n} zⁿ` over the given base.
    Rees(Arc<Presentation>),
    Localized(CentralLocalization),
    Graded(RootSubset, Arc<Presentation>),
    Uq,
    Scalar,
}

#[derive(Clone, Debug)]
pub struct Context {
    name: String,
    kind: ContextKind,
}

/// Largest `|k|` accepted in `x^k`.
pub const MAX_EXPONENT: u64 = 1000;

/// Names accepted by [`Context::named`].
pub const CONTEXT_NAMES: [&str; 16] = [
    "mat2", "mat2-cl", "sl2", "sl2-cl", "gl2", "gl2-cl", "vinberg", "vinberg-cl", "gr0", "gr0-cl",
    "grD", "grD-cl", "p1p1", "p1p1-cl", "uq", "scalar",
];

impl Context {
    pub fn named(name: &str) -> Result<Self> {
        let kind = match name {
            "mat2" => ContextKind::Algebra(algebras::mat2()),
            "mat2-cl" => ContextKind::Algebra(algebras::mat2_classical()),
            "sl2" => ContextKind::Algebra(algebras::sl2()),
            "sl2-cl" => ContextKind::Algebra(algebras::sl2_classical()),
            "p1p1" => ContextKind::Algebra(algebras::p1p1()),
            "p1p1-cl" => ContextKind::Algebra(algebras::p1p1_classical()),
            "gl2" => ContextKind::Localized(algebras::gl2()),
            "gl2-cl" => ContextKind::Localized(algebras::gl2_classical()),
            "vinberg" => ContextKind::Rees(algebras::sl2()),
            "vinberg-cl" => ContextKind::Rees(algebras::sl2_classical()),
            "gr0" => ContextKind::Graded(RootSubset::empty(), algebras::sl2()),
            "gr0-cl" => ContextKind::Graded(RootSubset::empty(), algebras::sl2_classical()),
            "grD" => ContextKind::Graded(RootSubset::full(1), algebras::sl2()),
            "grD-cl" => ContextKind::Graded(RootSubset::full(1), algebras::sl2_classical()),
            "uq" => ContextKind::Uq,
            "scalar" => ContextKind::Scalar,
            other => return Err(Error::UnknownSymbol(format!("context `{other}`"))),
        };
        Ok(Context {
            name: name.to_string(),
            kind,
        })
    }

    /// A context for a user-supplied presentation, named after it.
    pub fn from_presentation(p: Arc<Presentation>) -> Self {
        Context {
            name: p.name().to_string(),
            kind: ContextKind::Algebra(p),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &ContextKind {
        &self.kind
    }

    /// Symbols recognized by the lexer in this context (besides `q`).
    pub fn lexicon(&self) -> Vec<String> {
        let v = |s: &[&str]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        match &self.kind {
            ContextKind::Algebra(p) => {
                let mut out = p.symbols().to_vec();
                if is_matrix_type(p) && !out.iter().any(|s| s == "D") {
                    out.push("D".into());
                }
                out
            }
            ContextKind::Rees(_) => v(&["a", "b", "c", "d", "z", "az", "bz", "cz", "dz"]),
            ContextKind::Localized(_) => v(&["a", "b", "c", "d", "D"]),
            ContextKind::Graded(..) => v(&["a", "b", "c", "d"]),
            ContextKind::Uq => v(&["E", "F", "K"]),
            ContextKind::Scalar => Vec::new(),
        }
    }

    pub fn parse(&self, text: &str) -> Result<Expr> {
        parse(text, &self.lexicon())
    }

    /// Parses and evaluates `text`, then checks membership of the result.
    pub fn eval_str(&self, text: &str) -> Result<Value> {
        self.eval(&self.parse(text)?)
    }

    pub fn eval(&self, e: &Expr) -> Result<Value> {
        let v = self.eval_inner(e)?;
        self.finish(v)
    }

    fn finish(&self, v: Value) -> Result<Value> {
        let v = match v {
            Value::Scalar(c) => self.promote(&c)?,
            other => other,
        };
        match v {
            Value::ZPoly(parts) => {
                let base = match &self.kind {
                    ContextKind::Rees(b) => b.clone(),
                    _ => return Err(Error::Type("z-polynomial outside the Rees context".into())),
                };
                let parts: BTreeMap<u32, AlgebraElement> =
                    parts.into_iter().filter(|(_, f)| !f.is_zero()).collect();
                if parts.is_empty() {
                    return Ok(Value::Rees(ReesElement::zero(&base)));
                }
                ReesElement::from_parts(parts).map(Value::Rees).map_err(|e| match e {
                    Error::Membership(m) => Error::Membership(format!(
                        "{m}; z alone is not an element, only f*z^n with f of level <= n"
                    )),
                    other => other,
                })
            }
            other => Ok(other),
        }
    }

    fn promote(&self, c: &QRational) -> Result<Value> {
        Ok(match &self.kind {
            ContextKind::Algebra(p) => Value::Alg(AlgebraElement::scalar(p, c.clone())),
            ContextKind::Rees(p) => Value::ZPoly(BTreeMap::from([(0, AlgebraElement::scalar(p, c.clone()))])),
            ContextKind::Localized(l) => Value::Loc(l.element(AlgebraElement::scalar(l.base(), c.clone()))?),
            ContextKind::Graded(s, p) => Value::Gr(GrElement::one(s, p)?.scale(c)),
            ContextKind::Uq => Value::Uq(UqElement::scalar(c.clone())),
            ContextKind::Scalar => Value::Scalar(c.clone()),
        })
    }

    fn promote_like(&self, c: &QRational, like: &Value) -> Result<Value> {
        match like {
            Value::Tensor(t) => Ok(Value::Tensor(TensorElement::one(t.factors().to_vec()).scale(c))),
            _ => self.promote(c),
        }
    }

    fn symbol(&self, s: &str) -> Result<Value> {
        match &self.kind {
            ContextKind::Algebra(p) => match p.symbol_index(s) {
                Some(g) => Ok(Value::Alg(AlgebraElement::generator(p, g))),
                None if s == "D" && is_matrix_type(p) => Ok(Value::Alg(algebras::quantum_determinant(p))),
                None => Err(Error::UnknownSymbol(s.into())),
            },
            ContextKind::Rees(p) => {
                let (name, zpow) = match s.strip_suffix('z') {
                    Some("") => ("", 1),
                    Some(g) => (g, 1),
                    None => (s, 0),
                };
                let f = if name.is_empty() {
                    AlgebraElement::one(p)
                } else {
                    AlgebraElement::symbol(p, name)?
                };
                Ok(Value::ZPoly(BTreeMap::from([(zpow, f)])))
            }
            ContextKind::Localized(l) => {
                let x = if s == "D" {
                    l.inverted().clone()
                } else {
                    AlgebraElement::symbol(l.base(), s)?
                };
                Ok(Value::Loc(l.element(x)?))
            }
            ContextKind::Graded(sub, p) => Ok(Value::Gr(gr_symbol(sub, &AlgebraElement::symbol(p, s)?)?)),
            ContextKind::Uq => match s {
                "E" => Ok(Value::Uq(UqElement::e())),
                "F" => Ok(Value::Uq(UqElement::f())),
                "K" => Ok(Value::Uq(UqElement::k_pow(1))),
                _ => Err(Error::UnknownSymbol(s.into())),
            },
            ContextKind::Scalar => Err(Error::UnknownSymbol(s.into())),
        }
    }

    fn coefficient(&self, n: u32, i: u32, j: u32) -> Result<Value> {
        let c = MatrixCoefficient::new(n, i, j)?;
        let elem = |p: &Presentation| -> Result<AlgebraElement> {
            Ok(table_for(p, n)?[c.row as usize][c.col as usize].clone())
        };
        match &self.kind {
            ContextKind::Algebra(p) if is_sl2_type(p) => Ok(Value::Alg(elem(p)?)),
            ContextKind::Rees(p) => Ok(Value::ZPoly(BTreeMap::from([(n, elem(p)?)]))),
            ContextKind::Graded(s, p) => Ok(Value::Gr(GrElement::from_level(s, &elem(p)?, n)?)),
            _ => Err(Error::Type(format!(
                "matrix coefficients live in O_q(SL2), not in `{}`",
                self.name
            ))),
        }
    }

    fn eval_inner(&self, e: &Expr) -> Result<Value> {
        match e {
            Expr::Num(n) => Ok(Value::Scalar(QRational::from_rational(BigRational::from_integer(
                BigInt::from(n.clone()),
            )))),
            Expr::Q => Ok(Value::Scalar(QRational::q())),
            Expr::Sym(s) => self.symbol(s),
            Expr::Coeff(n, i, j) => self.coefficient(*n, *i, *j),
            Expr::Gr(sub, x) => {
                let ContextKind::Graded(own, p) = &self.kind else {
                    return Err(Error::Type(format!("gr[..] outside a graded context in `{}`", self.name)));
                };
                if sub != own {
                    return Err(Error::SubsetMismatch(format!("{sub} vs {own}")));
                }
                let inner = Context {
                    name: p.name().into(),
                    kind: ContextKind::Algebra(p.clone()),
                };
                match inner.eval(x)? {
                    Value::Alg(a) => Ok(Value::Gr(gr_symbol(sub, &a)?)),
                    other => Err(Error::Type(format!("cannot take the symbol of {other}"))),
                }
            }
            Expr::Neg(x) => Ok(self.eval_inner(x)?.scale(&QRational::from_int(-1))),
            Expr::Add(a, b) => self.add(self.eval_inner(a)?, self.eval_inner(b)?),
            Expr::Sub(a, b) => {
                let b = self.eval_inner(b)?.scale(&QRational::from_int(-1));
                self.add(self.eval_inner(a)?, b)
            }
            Expr::Mul(a, b) => self.mul(self.eval_inner(a)?, self.eval_inner(b)?),
            Expr::Div(a, b) => {
                let a = self.eval_inner(a)?;
                match self.eval_inner(b)? {
                    Value::Scalar(c) => Ok(a.scale(&c.inverse()?)),
                    Value::Loc(l) => self.mul(a, Value::Loc(l.inverse()?)),
                    other => Err(Error::Type(format!("cannot divide by {other}"))),
                }
            }
            Expr::Pow(x, k) => self.pow(self.eval_inner(x)?, *k),
            Expr::Tensor(parts) => {
                let ContextKind::Algebra(p) = &self.kind else {
                    return Err(Error::Type(format!("tensors need an algebra context, not `{}`", self.name)));
                };
                let mut slots = Vec::new();
                for x in parts {
                    match self.eval_inner(x)? {
                        Value::Alg(a) => slots.push(a),
                        Value::Scalar(c) => slots.push(AlgebraElement::scalar(p, c)),
                        other => return Err(Error::Type(format!("tensor slot {other} is not an algebra element"))),
                    }
                }
                Ok(Value::Tensor(TensorElement::pure(&slots)))
            }
        }
    }

    /// Product of two evaluated values, with the same membership checks as [`eval`](Self::eval).
    pub fn multiply(&self, a: &Value, b: &Value) -> Result<Value> {
        let v = self.mul(a.clone(), b.clone())?;
        self.finish(v)
    }

    fn add(&self, a: Value, b: Value) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x + &y),
            (Value::Scalar(x), other) => return self.add(self.promote_like(&x, &other)?, other),
            (other, Value::Scalar(y)) => {
                let y = self.promote_like(&y, &other)?;
                return self.add(other, y);
            }
            (Value::Alg(x), Value::Alg(y)) => Value::Alg(x.try_add(&y)?),
            (Value::ZPoly(mut x), Value::ZPoly(y)) => {
                for (n, f) in y {
                    let slot = x.entry(n).or_insert_with(|| AlgebraElement::zero(f.presentation()));
                    *slot = slot.try_add(&f)?;
                }
                Value::ZPoly(x)
            }
            (Value::Rees(x), Value::Rees(y)) => Value::Rees(x.try_add(&y)?),
            (Value::Loc(x), Value::Loc(y)) => Value::Loc(x.try_add(&y)?),
            (Value::Gr(x), Value::Gr(y)) => Value::Gr(x.try_add(&y)?),
            (Value::Uq(x), Value::Uq(y)) => Value::Uq(x.add(&y)),
            (Value::Tensor(x), Value::Tensor(y)) => Value::Tensor(x.try_add(&y)?),
            (x, y) => return Err(Error::Type(format!("cannot add {x} and {y}"))),
        })
    }

    fn mul(&self, a: Value, b: Value) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x * &y),
            (Value::Scalar(x), other) | (other, Value::Scalar(x)) => other.scale(&x),
            (Value::Alg(x), Value::Alg(y)) => Value::Alg(x.try_mul(&y)?),
            (Value::ZPoly(x), Value::ZPoly(y)) => {
                let mut out: BTreeMap<u32, AlgebraElement> = BTreeMap::new();
                for (n, f) in &x {
                    for (m, g) in &y {
                        let prod = f.try_mul(g)?;
                        let slot = out
                            .entry(n + m)
                            .or_insert_with(|| AlgebraElement::zero(f.presentation()));
                        *slot = slot.try_add(&prod)?;
                    }
                }
                Value::ZPoly(out)
            }
            (Value::Rees(x), Value::Rees(y)) => Value::Rees(rees_multiply(&x, &y)?),
            (Value::Loc(x), Value::Loc(y)) => Value::Loc(x.try_mul(&y)?),
            (Value::Gr(x), Value::Gr(y)) => Value::Gr(gr_multiply(x.subset(), &x, &y)?),
            (Value::Uq(x), Value::Uq(y)) => Value::Uq(x.mul(&y)),
            (Value::Tensor(x), Value::Tensor(y)) => Value::Tensor(x.try_mul(&y)?),
            (x, y) => return Err(Error::Type(format!("cannot multiply {x} and {y}"))),
        })
    }

    fn pow(&self, x: Value, k: i64) -> Result<Value> {
        if k.unsigned_abs() > MAX_EXPONENT {
            return Err(Error::Invalid(format!("exponent {k} exceeds {MAX_EXPONENT}")));
        }
        if let Value::Scalar(c) = &x {
            return Ok(Value::Scalar(c.pow(k)?));
        }
        if let Value::Loc(l) = &x {
            return Ok(Value::Loc(l.pow(k)?));
        }
        if k < 0 {
            if let Value::Uq(u) = &x {
                // c·K^b is the only invertible shape needed
                if let [((0, b, 0), c)] = u.terms().iter().collect::<Vec<_>>()[..] {
                    return Ok(Value::Uq(UqElement::monomial((0, b * k, 0), c.pow(k)?)));
                }
            }
            return Err(Error::NotInvertible(format!("{x}")));
        }
        let n = u32::try_from(k).map_err(|_| Error::Invalid(format!("exponent {k} too large")))?;
        let mut acc = self.promote_like(&QRational::one(), &x)?;
        for _ in 0..n {
            acc = self.mul(acc, x.clone())?;
        }
        Ok(acc)
    }
}

/// A value produced by evaluation.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(QRational),
    Alg(AlgebraElement),
    /// Intermediate `Σ f_n zⁿ` before the level check.
    ZPoly(BTreeMap<u32, AlgebraElement>),
    Rees(ReesElement),
    Loc(LocalizedElement),
    Gr(GrElement),
    Uq(UqElement),
    Tensor(TensorElement),
}

impl Value {
    pub fn scale(&self, c: &QRational) -> Value {
        match self {
            Value::Scalar(x) => Value::Scalar(x * c),
            Value::Alg(x) => Value::Alg(x.scale(c)),
            Value::ZPoly(x) => Value::ZPoly(x.iter().map(|(n, f)| (*n, f.scale(c))).collect()),
            Value::Rees(x) => Value::Rees(x.scale(c)),
            Value::Loc(x) => Value::Loc(x.scale(c)),
            Value::Gr(x) => Value::Gr(x.scale(c)),
            Value::Uq(x) => Value::Uq(x.scale(c)),
            Value::Tensor(x) => Value::Tensor(x.scale(c)),
        }
    }

    pub fn as_algebra(&self) -> Option<&AlgebraElement> {
        match self {
            Value::Alg(x) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(x) => write!(f, "{x}"),
            Value::Alg(x) => write!(f, "{x}"),
            Value::ZPoly(x) => {
                let parts: Vec<String> = x.iter().map(|(n, g)| format!("({g})*z^{n}")).collect();
                write!(f, "{}", parts.join(" + "))
            }
            Value::Rees(x) => write!(f, "{x}"),
            Value::Loc(x) => write!(f, "{x}"),
            Value::Gr(x) => write!(f, "{x}"),
            Value::Uq(x) => write!(f, "{x}"),
            Value::Tensor(x) => write!(f, "{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_exponents_are_rejected() {
        let ctx = Context::named("scalar").unwrap();
        assert!(matches!(ctx.eval_str("3^33333333333"), Err(Error::Invalid(_))));
        assert_eq!(ctx.eval_str("q^1000*q^-1000").unwrap().to_string(), "1");
    }

    #[test]
    fn sl2_normal_form_of_da() {
        let ctx = Context::named("sl2").unwrap();
        assert_eq!(ctx.eval_str("d*a").unwrap().to_string(), "1 + q^-1*b*c");
    }

    #[test]
    fn vinberg_membership() {
        let ctx = Context::named("vinberg").unwrap();
        assert_eq!(ctx.eval_str("z^2").unwrap().to_string(), "z^2");
        assert!(matches!(ctx.eval_str("z"), Err(Error::Membership(_))));
        assert_eq!(
            ctx.eval_str("az*dz - q*bz*cz").unwrap(),
            ctx.eval_str("z^2").unwrap()
        );
    }

    #[test]
    fn gl2_determinant_inverse() {
        let ctx = Context::named("gl2").unwrap();
        assert_eq!(ctx.eval_str("D*D^-1").unwrap(), ctx.eval_str("1").unwrap());
    }

    #[test]
    fn gr_contexts() {
        let g0 = Context::named("gr0").unwrap();
        assert_eq!(g0.eval_str("a*d").unwrap(), g0.eval_str("q*b*c").unwrap());
        assert_eq!(g0.eval_str("gr[]{a}*d").unwrap(), g0.eval_str("q*gr[]{b*c}").unwrap());
        let gd = Context::named("grD").unwrap();
        assert_eq!(gd.eval_str("a*d").unwrap(), gd.eval_str("gr[1]{1 + q*b*c}").unwrap());
    }

    #[test]
    fn uq_inverse_k() {
        let ctx = Context::named("uq").unwrap();
        assert_eq!(ctx.eval_str("K*K^-1").unwrap(), ctx.eval_str("1").unwrap());
    }

    #[test]
    fn tensors_and_coefficients() {
        let ctx = Context::named("sl2").unwrap();
        assert_eq!(ctx.eval_str("c[1;0,1]").unwrap(), ctx.eval_str("b").unwrap());
        let t = ctx.eval_str("(a)|(a) + (b)|(c)").unwrap();
        assert_eq!(t.to_string(), "(a)|(a) + (b)|(c)");
    }
}
