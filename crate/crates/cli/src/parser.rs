//! Expression frontend: lexer and recursive-descent parser producing an
//! `ExprAst`, then exact conversion to a canonical rational function.
//! Precedence is pow > unary minus > mul/div > add/sub, all left
//! associative, with parentheses. Implicit multiplication is not accepted
//! (write z^2*y, not z^2y) and pow exponents are non-negative integers.

use std::fmt;
use unirat_core::rat::{Int, Rat};
use unirat_core::ratfunc::RatFunc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Const(Rat),
    Var(String),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            c if c.is_whitespace() => {
                i += 1;
            }
            '+' => {
                out.push((start, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((start, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((start, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((start, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((start, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((start, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((start, Tok::RParen));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    s.push(bytes[i]);
                    i += 1;
                }
                out.push((start, Tok::Num(s)));
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut s = String::new();
                while i < bytes.len() && (bytes[i].is_alphanumeric() || bytes[i] == '_') {
                    s.push(bytes[i]);
                    i += 1;
                }
                out.push((start, Tok::Ident(s)));
            }
            other => {
                return Err(ParseError { pos: start, msg: format!("unexpected character '{other}'") })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    input_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.input_len)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = ExprAst::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = ExprAst::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = ExprAst::Mul(Box::new(acc), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    acc = ExprAst::Div(Box::new(acc), Box::new(self.unary()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<ExprAst, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(ExprAst::Sub(Box::new(ExprAst::Const(Rat::from_integer(0.into()))), Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let at = self.here();
            match self.bump() {
                Some(Tok::Num(s)) => {
                    let e: u32 = s.parse().map_err(|_| ParseError {
                        pos: at,
                        msg: format!("exponent '{s}' out of range"),
                    })?;
                    return Ok(ExprAst::Pow(Box::new(base), e));
                }
                _ => {
                    return Err(ParseError {
                        pos: at,
                        msg: "exponent must be a non-negative integer".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let at = self.here();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError { pos: at, msg: "expected ')'".into() }),
                }
            }
            Some(Tok::Num(s)) => {
                let n = Int::parse_bytes(s.as_bytes(), 10).ok_or_else(|| ParseError {
                    pos: at,
                    msg: format!("bad number '{s}'"),
                })?;
                Ok(ExprAst::Const(Rat::from_integer(n)))
            }
            Some(Tok::Ident(s)) => Ok(ExprAst::Var(s)),
            other => Err(ParseError {
                pos: at,
                msg: match other {
                    None => "unexpected end of input".into(),
                    Some(t) => format!("unexpected token {t:?}"),
                },
            }),
        }
    }
}

/// Parse the text into an AST.
pub fn parse_expr(text: &str) -> Result<ExprAst, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, input_len: text.len() };
    let ast = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ParseError { pos: p.here(), msg: "trailing input".into() });
    }
    Ok(ast)
}

/// Exact conversion of an AST into a canonical rational function over the
/// declared variables.
pub fn ast_to_ratfunc(ast: &ExprAst, vars: &[String]) -> Result<RatFunc, ParseError> {
    let n = vars.len();
    match ast {
        ExprAst::Const(c) => Ok(RatFunc::constant(n, c.clone())),
        ExprAst::Var(name) => {
            let idx = vars.iter().position(|v| v == name).ok_or_else(|| ParseError {
                pos: 0,
                msg: format!("unknown variable '{name}' (declared: {})", vars.join(",")),
            })?;
            Ok(RatFunc::var(idx, n))
        }
        ExprAst::Add(a, b) => ast_to_ratfunc(a, vars)?
            .add(&ast_to_ratfunc(b, vars)?)
            .map_err(engine_err),
        ExprAst::Sub(a, b) => ast_to_ratfunc(a, vars)?
            .sub(&ast_to_ratfunc(b, vars)?)
            .map_err(engine_err),
        ExprAst::Mul(a, b) => ast_to_ratfunc(a, vars)?
            .mul(&ast_to_ratfunc(b, vars)?)
            .map_err(engine_err),
        ExprAst::Div(a, b) => {
            let num = ast_to_ratfunc(a, vars)?;
            let den = ast_to_ratfunc(b, vars)?;
            if den.is_zero() {
                return Err(ParseError { pos: 0, msg: "division by the zero polynomial".into() });
            }
            num.div(&den).map_err(engine_err)
        }
        ExprAst::Pow(a, e) => {
            let base = ast_to_ratfunc(a, vars)?;
            let mut acc = RatFunc::constant(n, Rat::from_integer(1.into()));
            for _ in 0..*e {
                acc = acc.mul(&base).map_err(engine_err)?;
            }
            Ok(acc)
        }
    }
}

fn engine_err(e: unirat_core::Error) -> ParseError {
    ParseError { pos: 0, msg: e.to_string() }
}

/// One-step convenience: text to canonical rational function.
pub fn parse_ratfunc(text: &str, vars: &[String]) -> Result<RatFunc, ParseError> {
    ast_to_ratfunc(&parse_expr(text)?, vars)
}
