//! Closed-form generating-function expressions.
//!
//! Grammar (whitespace-insensitive, explicit `*` only, no juxtaposition):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | power
//! power  := atom ('^' '-'? integer)?
//! atom   := integer | 'x' | '(' expr ')' | 'sqrt' '(' expr ')' | 'c' '(' expr ')'
//! ```
//!
//! `c(u)` is the Catalan generating function (1 - sqrt(1 - 4u)) / (2u) with
//! the valuation cancellation performed exactly. Division cancels a common
//! power of x before inverting, which shortens the result; `eval` retries at
//! a deeper working order so the caller always receives the order it asked
//! for, or an error if that is impossible.

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::series::Series;
use num::BigInt;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    Int(BigInt),
    X,
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Neg(Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, i64),
    Sqrt(Box<ExprAst>),
    Catalan(Box<ExprAst>),
}

impl fmt::Display for ExprAst {
    /// Fully parenthesized form; re-parsing it reproduces the tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprAst::Int(k) => write!(f, "{k}"),
            ExprAst::X => write!(f, "x"),
            ExprAst::Add(a, b) => write!(f, "({a} + {b})"),
            ExprAst::Sub(a, b) => write!(f, "({a} - {b})"),
            ExprAst::Neg(a) => write!(f, "(-{a})"),
            ExprAst::Mul(a, b) => write!(f, "({a} * {b})"),
            ExprAst::Div(a, b) => write!(f, "({a} / {b})"),
            ExprAst::Pow(a, k) => write!(f, "{a}^{k}"),
            ExprAst::Sqrt(a) => write!(f, "sqrt({a})"),
            ExprAst::Catalan(a) => write!(f, "c({a})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    Sqrt,
    Catalan,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    tok: Tok,
    tok_at: usize,
}

fn err(msg: impl Into<String>, at: usize) -> Error {
    Error::Parse { msg: msg.into(), at }
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self> {
        let mut p = Parser { src: text.as_bytes(), pos: 0, tok: Tok::End, tok_at: 0 };
        p.advance()?;
        Ok(p)
    }

    fn advance(&mut self) -> Result<()> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.tok_at = self.pos;
        if self.pos >= self.src.len() {
            self.tok = Tok::End;
            return Ok(());
        }
        let b = self.src[self.pos];
        self.tok = match b {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                self.tok = Tok::Int(text.parse().unwrap());
                return Ok(());
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                self.tok = match name {
                    "x" => Tok::X,
                    "sqrt" => Tok::Sqrt,
                    "c" => Tok::Catalan,
                    _ => return Err(err(format!("unknown identifier `{name}`"), start)),
                };
                return Ok(());
            }
            _ => return Err(err(format!("unexpected character `{}`", b as char), self.pos)),
        };
        self.pos += 1;
        Ok(())
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.tok == want {
            self.advance()
        } else {
            Err(err(format!("expected {what}"), self.tok_at))
        }
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut node = self.term()?;
        loop {
            match self.tok {
                Tok::Plus => {
                    self.advance()?;
                    node = ExprAst::Add(Box::new(node), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.advance()?;
                    node = ExprAst::Sub(Box::new(node), Box::new(self.term()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut node = self.factor()?;
        loop {
            match self.tok {
                Tok::Star => {
                    self.advance()?;
                    node = ExprAst::Mul(Box::new(node), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    self.advance()?;
                    node = ExprAst::Div(Box::new(node), Box::new(self.factor()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn factor(&mut self) -> Result<ExprAst> {
        if self.tok == Tok::Minus {
            self.advance()?;
            Ok(ExprAst::Neg(Box::new(self.factor()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<ExprAst> {
        let base = self.atom()?;
        if self.tok != Tok::Caret {
            return Ok(base);
        }
        self.advance()?;
        let negate = if self.tok == Tok::Minus {
            self.advance()?;
            true
        } else {
            false
        };
        let at = self.tok_at;
        let Tok::Int(ref k) = self.tok else {
            return Err(err("expected an integer exponent", at));
        };
        let mut k: i64 =
            i64::try_from(k).map_err(|_| err("exponent out of range", at))?;
        if negate {
            k = -k;
        }
        self.advance()?;
        Ok(ExprAst::Pow(Box::new(base), k))
    }

    fn atom(&mut self) -> Result<ExprAst> {
        match self.tok.clone() {
            Tok::Int(k) => {
                self.advance()?;
                Ok(ExprAst::Int(k))
            }
            Tok::X => {
                self.advance()?;
                Ok(ExprAst::X)
            }
            Tok::LParen => {
                self.advance()?;
                let node = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(node)
            }
            Tok::Sqrt => {
                self.advance()?;
                self.expect(Tok::LParen, "`(` after sqrt")?;
                let node = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(ExprAst::Sqrt(Box::new(node)))
            }
            Tok::Catalan => {
                self.advance()?;
                self.expect(Tok::LParen, "`(` after c")?;
                let node = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(ExprAst::Catalan(Box::new(node)))
            }
            _ => Err(err("expected a value", self.tok_at)),
        }
    }
}

pub fn parse(text: &str) -> Result<ExprAst> {
    let mut p = Parser::new(text)?;
    let node = p.expr()?;
    if p.tok != Tok::End {
        return Err(err("unexpected trailing input", p.tok_at));
    }
    Ok(node)
}

/// Evaluate to a Series of exactly the requested order. Division and square
/// roots shorten their results; when that happens the whole expression is
/// re-evaluated once at a working order deepened by the observed deficit
/// (then once more with generous headroom before giving up).
pub fn eval(ast: &ExprAst, order: usize) -> Result<Series> {
    let base = order.max(1);
    let mut attempt = eval_at(ast, base)?;
    if attempt.order() < order {
        attempt = eval_at(ast, base + (order - attempt.order()))?;
    }
    if attempt.order() < order {
        attempt = eval_at(ast, 2 * base + 8)?;
    }
    if attempt.order() < order {
        return Err(Error::Precision { needed: order, available: attempt.order() });
    }
    Ok(attempt.truncated(order))
}

/// parse + eval in one step.
pub fn gf(text: &str, order: usize) -> Result<Series> {
    eval(&parse(text)?, order)
}

/// Binary operations inside the evaluator meet at the shorter order; only
/// the final result's order is promised to callers.
fn meet(a: Series, b: Series) -> (Series, Series) {
    let ord = a.order().min(b.order());
    (a.truncated(ord), b.truncated(ord))
}

fn div_cancel(num: Series, den: Series) -> Result<Series> {
    let (num, den) = meet(num, den);
    let v = den.valuation();
    if v == 0 {
        return Ok(num.mul(&den.mul_inv()?));
    }
    if den.is_zero() {
        return Err(Error::NotInvertible);
    }
    if num.valuation() < v {
        return Err(Error::DivisionUndefined { num: num.valuation(), den: v });
    }
    let shift = |s: &Series| Series::from_coeffs(s.coeffs()[v..].to_vec());
    Ok(shift(&num).mul(&shift(&den).mul_inv()?))
}

fn eval_at(ast: &ExprAst, ord: usize) -> Result<Series> {
    match ast {
        ExprAst::Int(k) => Ok(Series::monomial(Rational::from_integer(k.clone()), 0, ord)),
        ExprAst::X => Ok(Series::x(ord)),
        ExprAst::Add(a, b) => {
            let (a, b) = meet(eval_at(a, ord)?, eval_at(b, ord)?);
            Ok(a.add(&b))
        }
        ExprAst::Sub(a, b) => {
            let (a, b) = meet(eval_at(a, ord)?, eval_at(b, ord)?);
            Ok(a.sub(&b))
        }
        ExprAst::Neg(a) => Ok(eval_at(a, ord)?.neg()),
        ExprAst::Mul(a, b) => {
            let (a, b) = meet(eval_at(a, ord)?, eval_at(b, ord)?);
            Ok(a.mul(&b))
        }
        ExprAst::Div(a, b) => div_cancel(eval_at(a, ord)?, eval_at(b, ord)?),
        ExprAst::Pow(a, k) => {
            let base = eval_at(a, ord)?;
            let base = if *k < 0 { base.mul_inv()? } else { base };
            let mut acc = Series::one(base.order());
            for _ in 0..k.unsigned_abs() {
                acc = acc.mul(&base);
            }
            Ok(acc)
        }
        ExprAst::Sqrt(a) => eval_at(a, ord)?.sqrt(),
        ExprAst::Catalan(a) => {
            let u = eval_at(a, ord)?;
            let four_u = u.scale(&int(4));
            let root = Series::one(four_u.order()).sub(&four_u).sqrt()?;
            let numer = Series::one(root.order()).sub(&root);
            div_cancel(numer, u.scale(&int(2)))
        }
    }
}
