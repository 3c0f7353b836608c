//! A tiny expression language for transcribing printed formulas nearly verbatim.
//!
//! Grammar: `+ - * / ^` (integer exponents), parentheses, integer literals,
//! the identifiers `nu p theta n i pi`, and implicit multiplication by
//! juxtaposition (`2nu(n+1)p^2`). Implicit products bind like `*` and `/`,
//! left to right; `^` binds tighter than unary minus (`-p^2 = -(p^2)`).

use crate::error::{Error, Result};
use crate::scalar::{GaussRat, Mode, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Var {
    Nu,
    P,
    Theta,
    N,
    I,
    Pi,
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Expr {
    Num(i64),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> std::result::Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut v: i64 = 0;
            while let Some(&d) = chars.peek() {
                let Some(digit) = d.to_digit(10) else { break };
                v = v.checked_mul(10).and_then(|v| v.checked_add(digit as i64)).ok_or("literal overflow")?;
                chars.next();
            }
            out.push(Tok::Num(v));
        } else if c.is_ascii_alphabetic() {
            // Identifiers are matched greedily against the known names so that
            // `nup` is rejected rather than silently misread.
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_alphabetic() {
                    break;
                }
                s.push(d);
                chars.next();
            }
            out.push(Tok::Ident(s));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            chars.next();
        } else {
            return Err(format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> std::result::Result<Expr, String> {
        let mut lhs = self.term()?;
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == '+' { Expr::Add(lhs.into(), rhs.into()) } else { Expr::Sub(lhs.into(), rhs.into()) };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> std::result::Result<Expr, String> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek().cloned() {
                Some(Tok::Op(op @ ('*' | '/'))) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    lhs = if op == '*' { Expr::Mul(lhs.into(), rhs.into()) } else { Expr::Div(lhs.into(), rhs.into()) };
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('(')) => {
                    let rhs = self.power()?;
                    lhs = Expr::Mul(lhs.into(), rhs.into());
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> std::result::Result<Expr, String> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(Expr::Neg(self.unary()?.into()))
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> std::result::Result<Expr, String> {
        let base = self.primary()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(e)) => Ok(Expr::Pow(base.into(), u32::try_from(e).map_err(|_| "exponent too large")?)),
                other => Err(format!("expected integer exponent, found {other:?}")),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> std::result::Result<Expr, String> {
        match self.next() {
            Some(Tok::Num(v)) => Ok(Expr::Num(v)),
            Some(Tok::Ident(s)) => {
                let v = match s.as_str() {
                    "nu" => Var::Nu,
                    "p" => Var::P,
                    "theta" => Var::Theta,
                    "n" => Var::N,
                    "i" => Var::I,
                    "pi" => Var::Pi,
                    _ => return Err(format!("unknown identifier `{s}`")),
                };
                Ok(Expr::Var(v))
            }
            Some(Tok::Op('(')) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::Op(')')) => Ok(e),
                    other => Err(format!("expected `)`, found {other:?}")),
                }
            }
            other => Err(format!("unexpected token {other:?}")),
        }
    }
}

/// Parses a formula; errors describe the first problem found.
pub(crate) fn parse(src: &str) -> std::result::Result<Expr, String> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing input at token {}", p.pos));
    }
    Ok(e)
}

/// Values bound to the parameter identifiers.
pub(crate) struct Bindings<'a> {
    pub nu: &'a Scalar,
    pub p: &'a Scalar,
    pub theta: &'a Scalar,
    pub mode: Mode,
}

/// An expression with parameters substituted and `n`-free subtrees folded.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)] // constants are read on every step; keep them inline
pub(crate) enum Compiled {
    Const(Scalar),
    N,
    Neg(Box<Compiled>),
    Add(Box<Compiled>, Box<Compiled>),
    Sub(Box<Compiled>, Box<Compiled>),
    Mul(Box<Compiled>, Box<Compiled>),
    Div(Box<Compiled>, Box<Compiled>),
    Pow(Box<Compiled>, u32),
}

impl Compiled {
    pub(crate) fn compile(e: &Expr, b: &Bindings) -> Result<Compiled> {
        let c = match e {
            Expr::Num(v) => Compiled::Const(Scalar::int(*v).to_mode(b.mode)),
            Expr::Var(Var::N) => Compiled::N,
            Expr::Var(Var::Nu) => Compiled::Const(b.nu.clone()),
            Expr::Var(Var::P) => Compiled::Const(b.p.clone()),
            Expr::Var(Var::Theta) => Compiled::Const(b.theta.clone()),
            Expr::Var(Var::I) => Compiled::Const(Scalar::i().to_mode(b.mode)),
            Expr::Var(Var::Pi) => Compiled::Const(Scalar::pi_times(GaussRat::one(), b.mode)),
            Expr::Neg(a) => Compiled::Neg(Self::compile(a, b)?.into()),
            Expr::Add(x, y) => Compiled::Add(Self::compile(x, b)?.into(), Self::compile(y, b)?.into()),
            Expr::Sub(x, y) => Compiled::Sub(Self::compile(x, b)?.into(), Self::compile(y, b)?.into()),
            Expr::Mul(x, y) => Compiled::Mul(Self::compile(x, b)?.into(), Self::compile(y, b)?.into()),
            Expr::Div(x, y) => Compiled::Div(Self::compile(x, b)?.into(), Self::compile(y, b)?.into()),
            Expr::Pow(x, k) => Compiled::Pow(Self::compile(x, b)?.into(), *k),
        };
        c.fold()
    }

    fn fold(self) -> Result<Compiled> {
        let all_const = match &self {
            Compiled::Const(_) | Compiled::N => return Ok(self),
            Compiled::Neg(a) | Compiled::Pow(a, _) => a.is_const(),
            Compiled::Add(x, y) | Compiled::Sub(x, y) | Compiled::Mul(x, y) | Compiled::Div(x, y) => {
                x.is_const() && y.is_const()
            }
        };
        if all_const {
            // `n` is never read when every leaf is a constant.
            return Ok(Compiled::Const(self.eval(&Scalar::int(0))?));
        }
        Ok(self)
    }

    fn is_const(&self) -> bool {
        matches!(self, Compiled::Const(_))
    }

    /// Evaluates at the given `n`.
    pub(crate) fn eval(&self, n: &Scalar) -> Result<Scalar> {
        Ok(match self {
            Compiled::Const(c) => c.clone(),
            Compiled::N => n.clone(),
            Compiled::Neg(a) => -a.eval(n)?,
            Compiled::Add(x, y) => x.eval(n)? + y.eval(n)?,
            Compiled::Sub(x, y) => x.eval(n)? - y.eval(n)?,
            Compiled::Mul(x, y) => {
                let a = x.eval(n)?;
                if a.is_zero() {
                    return Ok(a);
                }
                a * y.eval(n)?
            }
            Compiled::Div(x, y) => {
                let num = x.eval(n)?;
                let den = y.eval(n)?;
                num.checked_div(&den).ok_or_else(|| Error::DivisionByZero { context: format!("formula at n = {n}") })?
            }
            Compiled::Pow(a, k) => a.eval(n)?.powi(*k),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval_at(src: &str, nu: i64, p: i64, n: i64) -> Scalar {
        let (nu, p, theta) = (Scalar::int(nu), Scalar::int(p), Scalar::int(0));
        let b = Bindings { nu: &nu, p: &p, theta: &theta, mode: Mode::Exact };
        Compiled::compile(&parse(src).unwrap(), &b).unwrap().eval(&Scalar::int(n)).unwrap()
    }

    #[test]
    fn implicit_multiplication_and_precedence() {
        assert_eq!(eval_at("2nu(n+1)", 3, 0, 4), Scalar::int(30));
        assert_eq!(eval_at("-p^2", 0, 3, 0), Scalar::int(-9));
        assert_eq!(eval_at("4p^2n", 0, 3, 2), Scalar::int(72));
        assert_eq!(eval_at("1/2 p", 0, 4, 0), Scalar::int(2));
        assert_eq!(eval_at("(n-1)^2p^2", 0, 2, 4), Scalar::int(36));
        assert_eq!(eval_at("(1-2nu)^2nu", 2, 0, 0), Scalar::int(18));
        assert_eq!(eval_at("-(2nu-1)(2nu+1)^2", 1, 0, 0), Scalar::int(-9));
        assert_eq!(eval_at("12nu*p^6", 1, 1, 0), Scalar::int(12));
        assert_eq!(eval_at("i*i", 0, 0, 0), Scalar::int(-1));
        assert_eq!(eval_at("3 - 2 - 1", 0, 0, 0), Scalar::int(0));
        assert_eq!(eval_at("12/3/2", 0, 0, 0), Scalar::int(2));
    }

    #[test]
    fn exp_family_beta_matches_hand_value() {
        // p(2ν+2n+1)/((n+1)(2ν+n+1)) at ν=0, p=1, n=2 is 5/9.
        assert_eq!(eval_at("p(2nu+2n+1)/((n+1)(2nu+n+1))", 0, 1, 2), Scalar::ratio(5, 9));
    }

    #[test]
    fn malformed_input_is_rejected() {
        for bad in ["nup", "(1+2", "1+", "p^x", "2 $ 3", "1)"] {
            assert!(parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let (z, p) = (Scalar::int(0), Scalar::int(1));
        let b = Bindings { nu: &z, p: &p, theta: &z, mode: Mode::Exact };
        let c = Compiled::compile(&parse("1/(n-2)").unwrap(), &b).unwrap();
        assert!(matches!(c.eval(&Scalar::int(2)), Err(Error::DivisionByZero { .. })));
    }

    #[test]
    fn constant_subtrees_fold() {
        let (nu, p, t) = (Scalar::int(2), Scalar::int(3), Scalar::int(0));
        let b = Bindings { nu: &nu, p: &p, theta: &t, mode: Mode::Exact };
        let c = Compiled::compile(&parse("(2nu+1)p").unwrap(), &b).unwrap();
        assert!(matches!(c, Compiled::Const(_)));
    }
}
