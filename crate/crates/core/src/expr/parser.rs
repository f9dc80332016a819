use num_bigint::BigUint;

use crate::lattice::RootSubset;
use crate::{Error, Result};

use super::ast::Expr;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigUint),
    Ident(String),
    Coeff,
    Gr,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Semi,
    Comma,
    Pipe,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Splits `text` into tokens; identifiers are matched longest-first against `lexicon`.
fn lex(text: &str, lexicon: &[String]) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    let starts_with = |i: usize, s: &str| {
        let mut k = i;
        for c in s.chars() {
            if chars.get(k) != Some(&c) {
                return false;
            }
            k += 1;
        }
        true
    };
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let (tok, len) = if c.is_ascii_digit() {
            let mut k = i;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[i..k].iter().collect();
            (Tok::Num(digits.parse().expect("digits")), k - i)
        } else if starts_with(i, "c[") && !lexicon.iter().any(|s| s.starts_with("c[")) {
            (Tok::Coeff, 2)
        } else if starts_with(i, "gr[") {
            (Tok::Gr, 3)
        } else if c.is_alphabetic() || c == '_' {
            let best = lexicon
                .iter()
                .filter(|s| starts_with(i, s))
                .max_by_key(|s| s.chars().count());
            match best {
                Some(s) => (Tok::Ident(s.clone()), s.chars().count()),
                None => {
                    let mut k = i;
                    while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                        k += 1;
                    }
                    let word: String = chars[i..k].iter().collect();
                    return Err(Error::UnknownSymbol(word));
                }
            }
        } else {
            let t = match c {
                '+' => Tok::Plus,
                '-' | '−' => Tok::Minus,
                '*' | '·' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                ';' => Tok::Semi,
                ',' => Tok::Comma,
                '|' | '⊗' => Tok::Pipe,
                other => return Err(syntax(line, col, format!("unexpected character `{other}`"))),
            };
            (t, 1)
        };
        out.push(Token {
            tok,
            line,
            column: col,
        });
        i += len;
        col += len;
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.column)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (l, c) = self.here();
        syntax(l, c, message)
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn small_int(&mut self) -> Result<u32> {
        match self.bump() {
            Tok::Num(n) => u32::try_from(&n).map_err(|_| self.error("integer too large")),
            _ => Err(self.error("expected an integer")),
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.tensor()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.tensor()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.tensor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn tensor(&mut self) -> Result<Expr> {
        let first = self.term()?;
        if *self.peek() != Tok::Pipe {
            return Ok(first);
        }
        let mut parts = vec![first];
        while *self.peek() == Tok::Pipe {
            self.bump();
            parts.push(self.term()?);
        }
        Ok(Expr::Tensor(parts))
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Tok::Num(_) | Tok::Ident(_) | Tok::Coeff | Tok::Gr | Tok::LParen
        )
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.bump();
                    acc = Expr::Div(Box::new(acc), Box::new(self.unary()?));
                }
                _ if self.starts_atom() => {
                    acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let e = match self.bump() {
            Tok::Num(n) => i64::try_from(&n).map_err(|_| self.error("exponent too large"))?,
            _ => return Err(self.error("expected an integer exponent")),
        };
        Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Tok::Num(n) => Ok(Expr::Num(n)),
            Tok::Ident(s) if s == "q" => Ok(Expr::Q),
            Tok::Ident(s) => Ok(Expr::Sym(s)),
            Tok::Coeff => {
                let n = self.small_int()?;
                self.expect(Tok::Semi, "`;`")?;
                let i = self.small_int()?;
                self.expect(Tok::Comma, "`,`")?;
                let j = self.small_int()?;
                self.expect(Tok::RBracket, "`]`")?;
                Ok(Expr::Coeff(n, i, j))
            }
            Tok::Gr => {
                let mut members = Vec::new();
                while *self.peek() != Tok::RBracket {
                    let m = self.small_int()?;
                    if m == 0 {
                        return Err(self.error("simple roots are numbered from 1"));
                    }
                    members.push(m as usize);
                    if *self.peek() == Tok::Comma {
                        self.bump();
                    } else {
                        break;
                    }
                }
                self.expect(Tok::RBracket, "`]`")?;
                self.expect(Tok::LBrace, "`{`")?;
                let inner = self.sum()?;
                self.expect(Tok::RBrace, "`}`")?;
                Ok(Expr::Gr(RootSubset::new(members), Box::new(inner)))
            }
            Tok::LParen => {
                let inner = self.sum()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::End => Err(self.error("unexpected end of input")),
            _ => {
                self.pos -= 1;
                Err(self.error("expected an operand"))
            }
        }
    }
}

/// Parses `text` against a lexicon of symbol names (`q` is always a symbol).
pub fn parse(text: &str, lexicon: &[String]) -> Result<Expr> {
    let mut lex_syms: Vec<String> = lexicon.to_vec();
    if !lex_syms.iter().any(|s| s == "q") {
        lex_syms.push("q".into());
    }
    let toks = lex(text, &lex_syms)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lexicon(s: &[&str]) -> Vec<String> {
        s.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn precedence_and_juxtaposition() {
        let l = lexicon(&["a", "b", "c", "d"]);
        let e = parse("a*b - (q - q^-1)*b*c", &l).unwrap();
        assert_eq!(e.to_string(), "a*b - (q - q^-1)*b*c");
        assert_eq!(parse("2ab", &l).unwrap().to_string(), "2*a*b");
        assert_eq!(parse("-a^2", &l).unwrap(), Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::Sym("a".into())), 2))));
    }

    #[test]
    fn coefficients_and_wrappers() {
        let l = lexicon(&["a", "b", "c", "d"]);
        assert_eq!(parse("c[2;0,0]", &l).unwrap(), Expr::Coeff(2, 0, 0));
        assert_eq!(parse("c", &l).unwrap(), Expr::Sym("c".into()));
        let g = parse("gr[]{a*d}", &l).unwrap();
        assert!(matches!(g, Expr::Gr(ref s, _) if s.is_empty()));
        assert_eq!(parse("(a)|(b)", &l).unwrap().to_string(), "a | b");
        assert_eq!(parse("2a|b + c|d", &l).unwrap().to_string(), "2*a | b + c | d");
        assert_eq!(parse("(a + b)|c", &l).unwrap().to_string(), "(a + b) | c");
    }

    #[test]
    fn longest_match() {
        let l = lexicon(&["a", "az", "z"]);
        assert_eq!(parse("aza", &l).unwrap().to_string(), "az*a");
    }

    #[test]
    fn errors_carry_positions() {
        let l = lexicon(&["a"]);
        match parse("a +\n  * a", &l) {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("x", &l), Err(Error::UnknownSymbol(_))));
        assert!(parse("(a", &l).is_err());
    }
}
