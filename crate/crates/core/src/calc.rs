//! A small expression language over ordered intervals.
//!
//! ```text
//! expr    := product (("(+)" | "(-)") product)*
//! product := unary ("(*)" unary)*
//! unary   := number "*" unary | "abs(" expr ")" | "(" expr ")" | interval
//! interval:= "[" number "," number "]" ["_o"]
//! ```
//!
//! Operators are left-associative; `(*)` binds tighter than `(+)` and `(-)`.

use std::fmt;

use crate::interval::{IntervalError, OrderedInterval};

#[derive(Debug, Clone, PartialEq)]
pub enum CalcError {
    /// `position` is a 0-based character offset into the input.
    Parse { position: usize, message: String },
    Eval(IntervalError),
}

impl fmt::Display for CalcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CalcError::Parse { position, message } => write!(f, "parse error at position {position}: {message}"),
            CalcError::Eval(e) => write!(f, "evaluation error: {e}"),
        }
    }
}

impl std::error::Error for CalcError {}

impl From<IntervalError> for CalcError {
    fn from(e: IntervalError) -> Self {
        CalcError::Eval(e)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Literal(f64, f64),
    Scale(f64, Box<Expr>),
    Abs(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn eval(&self) -> Result<OrderedInterval, IntervalError> {
        Ok(match self {
            Expr::Literal(a, b) => OrderedInterval::new(*a, *b)?,
            Expr::Scale(k, e) => e.eval()?.checked_scale(*k)?,
            Expr::Abs(e) => e.eval()?.abs(),
            Expr::Add(l, r) => l.eval()?.checked_add(r.eval()?)?,
            Expr::Sub(l, r) => l.eval()?.checked_sub(r.eval()?)?,
            Expr::Mul(l, r) => l.eval()?.checked_mul(r.eval()?)?,
        })
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, CalcError> {
        Err(CalcError::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn starts_with(&mut self, token: &str) -> bool {
        self.skip_ws();
        let t: Vec<char> = token.chars().collect();
        self.chars.get(self.pos..self.pos + t.len()) == Some(&t[..])
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.starts_with(token) {
            self.pos += token.chars().count();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), CalcError> {
        if self.eat(token) {
            Ok(())
        } else {
            match self.peek() {
                Some(c) => self.err(format!("expected `{token}`, found `{c}`")),
                None => self.err(format!("expected `{token}`, found end of input")),
            }
        }
    }

    fn expr(&mut self) -> Result<Expr, CalcError> {
        let mut left = self.product()?;
        loop {
            if self.eat("(+)") {
                left = Expr::Add(Box::new(left), Box::new(self.product()?));
            } else if self.eat("(-)") {
                left = Expr::Sub(Box::new(left), Box::new(self.product()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn product(&mut self) -> Result<Expr, CalcError> {
        let mut left = self.unary()?;
        while self.eat("(*)") {
            left = Expr::Mul(Box::new(left), Box::new(self.unary()?));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expr, CalcError> {
        match self.peek() {
            Some('[') => self.interval(),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            Some('a') => {
                if !self.eat("abs") {
                    return self.err("expected `abs(`");
                }
                self.expect("(")?;
                let e = self.expr()?;
                self.expect(")")?;
                Ok(Expr::Abs(Box::new(e)))
            }
            Some(c) if c.is_ascii_digit() || matches!(c, '-' | '+' | '.') => {
                let k = self.number()?;
                self.expect("*")?;
                Ok(Expr::Scale(k, Box::new(self.unary()?)))
            }
            Some(c) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }

    fn interval(&mut self) -> Result<Expr, CalcError> {
        self.expect("[")?;
        let a = self.number()?;
        self.expect(",")?;
        let b = self.number()?;
        self.expect("]")?;
        self.eat("_o");
        Ok(Expr::Literal(a, b))
    }

    fn number(&mut self) -> Result<f64, CalcError> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        let at = |i: usize| self.chars.get(i).copied();
        if matches!(at(end), Some('-' | '+')) {
            end += 1;
        }
        while at(end).is_some_and(|c| c.is_ascii_digit() || c == '.') {
            end += 1;
        }
        if matches!(at(end), Some('e' | 'E')) {
            let mut e = end + 1;
            if matches!(at(e), Some('-' | '+')) {
                e += 1;
            }
            if at(e).is_some_and(|c| c.is_ascii_digit()) {
                while at(e).is_some_and(|c| c.is_ascii_digit()) {
                    e += 1;
                }
                end = e;
            }
        }
        let text: String = self.chars[start..end].iter().collect();
        match text.parse::<f64>() {
            Ok(v) if v.is_finite() => {
                self.pos = end;
                Ok(v)
            }
            _ => self.err(if text.is_empty() {
                "expected a number".to_string()
            } else {
                format!("invalid number `{text}`")
            }),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, CalcError> {
    let mut p = Parser::new(src);
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return p.err(format!("unexpected `{c}` after expression"));
    }
    Ok(e)
}

pub fn evaluate(src: &str) -> Result<OrderedInterval, CalcError> {
    Ok(parse(src)?.eval()?)
}
