//! Small arithmetic expression language shared by the identity suite and the
//! representation templates.
//!
//! Grammar: integers, identifiers (`x12`, `eps`, `r`), `+ - * / ^`, parentheses
//! and implicit multiplication by juxtaposition (`3x2`, `(1/r)x2`, `c x13`).
//! Implicit products bind like `*`, so `1/r x2` means `(1/r)·x2`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactnum::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("unexpected character {ch:?} at offset {pos} in {input:?}")]
    UnexpectedChar { ch: char, pos: usize, input: String },
    #[error("unexpected end of expression {0:?}")]
    UnexpectedEnd(String),
    #[error("unexpected token {token} in {input:?}")]
    UnexpectedToken { token: String, input: String },
    #[error("exponent must be a small nonnegative integer in {0:?}")]
    BadExponent(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("cannot divide by {0}")]
    NonInvertible(String),
    #[error("{0}")]
    Domain(String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Name(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// Interpretation of expressions in some value domain.
pub trait Evaluator {
    type Value: Clone;

    fn number(&self, n: &Rational) -> Result<Self::Value, ExprError>;
    fn name(&self, name: &str) -> Result<Self::Value, ExprError>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, ExprError>;
    fn sub(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, ExprError>;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, ExprError>;
    fn div(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, ExprError>;
    fn neg(&self, a: Self::Value) -> Result<Self::Value, ExprError>;

    fn pow(&self, a: Self::Value, e: u32) -> Result<Self::Value, ExprError> {
        let mut acc = self.number(&Rational::from(1))?;
        for _ in 0..e {
            acc = self.mul(acc, a.clone())?;
        }
        Ok(acc)
    }
}

impl Expr {
    pub fn parse(input: &str) -> Result<Expr, ExprError> {
        let tokens = tokenize(input)?;
        let mut p = Parser {
            tokens,
            pos: 0,
            input,
        };
        let e = p.expr()?;
        match p.peek() {
            None => Ok(e),
            Some(t) => Err(p.unexpected(t)),
        }
    }

    pub fn eval<E: Evaluator>(&self, ev: &E) -> Result<E::Value, ExprError> {
        match self {
            Expr::Num(n) => ev.number(&Rational::from_integer(n.clone())),
            Expr::Name(s) => ev.name(s),
            Expr::Neg(a) => ev.neg(a.eval(ev)?),
            Expr::Add(a, b) => ev.add(a.eval(ev)?, b.eval(ev)?),
            Expr::Sub(a, b) => ev.sub(a.eval(ev)?, b.eval(ev)?),
            Expr::Mul(a, b) => ev.mul(a.eval(ev)?, b.eval(ev)?),
            Expr::Div(a, b) => ev.div(a.eval(ev)?, b.eval(ev)?),
            Expr::Pow(a, e) => ev.pow(a.eval(ev)?, *e),
        }
    }

    /// Every identifier occurring in the expression.
    pub fn names(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Name(s) => {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_names(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_names(out);
                b.collect_names(out);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Num(n) => write!(f, "{n}"),
            Token::Ident(s) => write!(f, "{s}"),
            Token::Op(c) => write!(f, "{c}"),
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<Token>, ExprError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut k = 0;
    while k < chars.len() {
        let (pos, ch) = chars[k];
        if ch.is_whitespace() {
            k += 1;
        } else if ch.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().map(|&(_, c)| c).collect();
            out.push(Token::Num(digits.parse().expect("ascii digits")));
        } else if ch.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && (chars[k].1.is_ascii_alphanumeric() || chars[k].1 == '_') {
                k += 1;
            }
            out.push(Token::Ident(
                chars[start..k].iter().map(|&(_, c)| c).collect(),
            ));
        } else if "+-*/^()".contains(ch) {
            out.push(Token::Op(ch));
            k += 1;
        } else {
            return Err(ExprError::UnexpectedChar {
                ch,
                pos,
                input: input.to_string(),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    input: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).cloned()
    }

    fn unexpected(&self, t: Token) -> ExprError {
        ExprError::UnexpectedToken {
            token: t.to_string(),
            input: self.input.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        while let Some(Token::Op(op @ ('+' | '-'))) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == '+' {
                Expr::Add(lhs.into(), rhs.into())
            } else {
                Expr::Sub(lhs.into(), rhs.into())
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Op(op @ ('*' | '/'))) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    lhs = if op == '*' {
                        Expr::Mul(lhs.into(), rhs.into())
                    } else {
                        Expr::Div(lhs.into(), rhs.into())
                    };
                }
                Some(Token::Num(_) | Token::Ident(_) | Token::Op('(')) => {
                    let rhs = self.power()?;
                    lhs = Expr::Mul(lhs.into(), rhs.into());
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(Expr::Neg(self.unary()?.into()))
            }
            Some(Token::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.primary()?;
        if let Some(Token::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek() {
                Some(Token::Num(n)) => {
                    self.pos += 1;
                    let e = u32::try_from(n)
                        .ok()
                        .filter(|&e| e <= 64)
                        .ok_or_else(|| ExprError::BadExponent(self.input.to_string()))?;
                    return Ok(Expr::Pow(base.into(), e));
                }
                _ => return Err(ExprError::BadExponent(self.input.to_string())),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        let t = self
            .peek()
            .ok_or_else(|| ExprError::UnexpectedEnd(self.input.to_string()))?;
        self.pos += 1;
        match t {
            Token::Num(n) => Ok(Expr::Num(n)),
            Token::Ident(s) => Ok(Expr::Name(s)),
            Token::Op('(') => {
                let e = self.expr()?;
                match self.peek() {
                    Some(Token::Op(')')) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    Some(t) => Err(self.unexpected(t)),
                    None => Err(ExprError::UnexpectedEnd(self.input.to_string())),
                }
            }
            t => Err(self.unexpected(t)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Ring;
    use std::collections::HashMap;

    struct Numeric(HashMap<&'static str, Rational>);

    impl Evaluator for Numeric {
        type Value = Rational;
        fn number(&self, n: &Rational) -> Result<Rational, ExprError> {
            Ok(n.clone())
        }
        fn name(&self, name: &str) -> Result<Rational, ExprError> {
            self.0
                .get(name)
                .cloned()
                .ok_or_else(|| ExprError::UnknownName(name.into()))
        }
        fn add(&self, a: Rational, b: Rational) -> Result<Rational, ExprError> {
            Ok(a + b)
        }
        fn sub(&self, a: Rational, b: Rational) -> Result<Rational, ExprError> {
            Ok(a - b)
        }
        fn mul(&self, a: Rational, b: Rational) -> Result<Rational, ExprError> {
            Ok(a * b)
        }
        fn div(&self, a: Rational, b: Rational) -> Result<Rational, ExprError> {
            if b.is_zero() {
                return Err(ExprError::NonInvertible(b.to_string()));
            }
            Ok(a / b)
        }
        fn neg(&self, a: Rational) -> Result<Rational, ExprError> {
            Ok(-a)
        }
    }

    fn eval(s: &str) -> Rational {
        let env = Numeric(HashMap::from([
            ("x2", Rational::from(5)),
            ("r", Rational::from(2)),
            ("e", Rational::from(4)),
        ]));
        Expr::parse(s).unwrap().eval(&env).unwrap()
    }

    #[test]
    fn precedence_and_implicit_products() {
        assert_eq!(eval("1 + 2*3"), Rational::from(7));
        assert_eq!(eval("3x2"), Rational::from(15));
        assert_eq!(eval("-(1/r)x2"), "-5/2".parse().unwrap());
        assert_eq!(eval("(e + 1)x2"), Rational::from(25));
        assert_eq!(eval("r x2 - 2^3"), Rational::from(2));
        assert_eq!(eval("-x2^2"), Rational::from(-25));
        assert_eq!(eval("1/r x2"), "5/2".parse().unwrap());
        assert_eq!(eval("- -x2"), Rational::from(5));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Expr::parse("x2 +"),
            Err(ExprError::UnexpectedEnd(_))
        ));
        assert!(matches!(
            Expr::parse("(x2"),
            Err(ExprError::UnexpectedEnd(_))
        ));
        assert!(matches!(
            Expr::parse("x2 $ 1"),
            Err(ExprError::UnexpectedChar { ch: '$', .. })
        ));
        assert!(matches!(
            Expr::parse("x2 )"),
            Err(ExprError::UnexpectedToken { .. })
        ));
        assert!(matches!(
            Expr::parse("x2^y"),
            Err(ExprError::BadExponent(_))
        ));
    }

    #[test]
    fn names_are_collected_once() {
        let e = Expr::parse("x2 + r x2 - (1/r)").unwrap();
        assert_eq!(e.names(), vec!["x2".to_string(), "r".to_string()]);
    }
}
