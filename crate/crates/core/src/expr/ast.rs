use std::fmt;

use num_bigint::BigUint;

use crate::lattice::RootSubset;

/// Parsed expression. Literals are nonnegative integers; signs are `Neg` nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigUint),
    Q,
    Sym(String),
    /// `c[n;i,j]`.
    Coeff(u32, u32, u32),
    /// `gr[I]{x}`.
    Gr(RootSubset, Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    /// `x | y | …`, at least two slots; binds tighter than `+` and looser than `*`.
    Tensor(Vec<Expr>),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Tensor(_) => 2,
            Expr::Mul(..) | Expr::Div(..) => 3,
            Expr::Neg(_) => 4,
            Expr::Pow(..) => 5,
            _ => 6,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::Q => write!(f, "q"),
            Expr::Sym(s) => write!(f, "{s}"),
            Expr::Coeff(n, i, j) => write!(f, "c[{n};{i},{j}]"),
            Expr::Gr(s, x) => {
                let label: Vec<String> = s.members().map(|i| i.to_string()).collect();
                write!(f, "gr[{}]{{", label.join(","))?;
                x.fmt_at(f, 0)?;
                write!(f, "}}")
            }
            Expr::Neg(x) => {
                write!(f, "-")?;
                x.fmt_at(f, 4)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.fmt_at(f, 1)?;
                write!(f, " {} ", if matches!(self, Expr::Add(..)) { "+" } else { "-" })?;
                b.fmt_at(f, 2)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.fmt_at(f, 3)?;
                write!(f, "{}", if matches!(self, Expr::Mul(..)) { "*" } else { "/" })?;
                b.fmt_at(f, 4)
            }
            Expr::Pow(x, e) => {
                x.fmt_at(f, 6)?;
                write!(f, "^{e}")
            }
            Expr::Tensor(parts) => {
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        write!(f, " | ")?;
                    }
                    p.fmt_at(f, 3)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}
