//! Text grammar for integer polynomials and the shared canonical printer.
//!
//! Grammar: variables `[a-z][a-z0-9]*`, non-negative integer literals, binary
//! `+ - * ^`, unary minus, parentheses. Exponents are integer literals. There
//! is no division.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::mpoly::{MPoly, MultiPolyRing};
use super::Ring;
use crate::error::{Error, Result};

/// A term prepared for printing: sign, coefficient magnitude (`None` = 1) and
/// monomial text (`None` = the constant monomial).
pub(crate) struct TermText {
    pub negative: bool,
    pub coeff: Option<String>,
    pub monomial: Option<String>,
}

pub(crate) fn join_terms(terms: &[TermText]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let body = match (&t.coeff, &t.monomial) {
            (Some(c), Some(m)) => format!("{c}*{m}"),
            (Some(c), None) => c.clone(),
            (None, Some(m)) => m.clone(),
            (None, None) => "1".to_string(),
        };
        match (i, t.negative) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

pub(crate) fn power_text(var: &str, e: usize) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

/// Renders `Σ coeffs[n] var^n` in increasing degree.
pub(crate) fn render_dense<R: Ring>(ring: &R, coeffs: &[R::Elem], var: &str) -> String {
    let terms: Vec<TermText> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !ring.is_zero(c))
        .map(|(n, c)| {
            let (negative, mut coeff) = ring.render_coeff(c);
            if n == 0 && coeff.is_none() {
                coeff = Some("1".to_string());
            }
            TermText {
                negative,
                coeff,
                monomial: power_text(var, n),
            }
        })
        .collect();
    join_terms(&terms)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Num(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            // accept the unicode minus sign too
            '-' | '\u{2212}' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token::Num(s.parse().expect("digits")));
            }
            'a'..='z' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_lowercase() || chars[i].is_ascii_digit())
                {
                    i += 1;
                }
                out.push(Token::Var(chars[start..i].iter().collect()));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "unexpected character {c:?} in {src:?}"
                )))
            }
        }
    }
    Ok(out)
}

/// Parsed syntax tree, evaluated once the variable set is known.
#[derive(Debug, Clone)]
enum Ast {
    Num(BigInt),
    Var(String),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(Ast::Neg(Box::new(self.unary()?)))
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Token::Num(n)) => {
                    let e = n
                        .to_u32()
                        .ok_or_else(|| Error::Parse(format!("exponent {n} too large")))?;
                    Ok(Ast::Pow(Box::new(base), e))
                }
                other => Err(Error::Parse(format!(
                    "expected integer exponent, found {other:?}"
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.next() {
            Some(Token::Num(n)) => Ok(Ast::Num(n)),
            Some(Token::Var(v)) => Ok(Ast::Var(v)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    other => Err(Error::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn collect_vars(ast: &Ast, out: &mut BTreeSet<String>) {
    match ast {
        Ast::Num(_) => {}
        Ast::Var(v) => {
            out.insert(v.clone());
        }
        Ast::Neg(a) | Ast::Pow(a, _) => collect_vars(a, out),
        Ast::Add(a, b) | Ast::Sub(a, b) | Ast::Mul(a, b) => {
            collect_vars(a, out);
            collect_vars(b, out);
        }
    }
}

fn eval(ast: &Ast, ring: &MultiPolyRing) -> Result<MPoly> {
    Ok(match ast {
        Ast::Num(n) => ring.from_bigint(n),
        Ast::Var(v) => ring
            .var(v)
            .ok_or_else(|| Error::Parse(format!("unknown variable {v}")))?,
        Ast::Neg(a) => ring.neg(&eval(a, ring)?),
        Ast::Add(a, b) => ring.add(&eval(a, ring)?, &eval(b, ring)?),
        Ast::Sub(a, b) => ring.sub(&eval(a, ring)?, &eval(b, ring)?),
        Ast::Mul(a, b) => ring.mul(&eval(a, ring)?, &eval(b, ring)?),
        Ast::Pow(a, e) => ring.pow(&eval(a, ring)?, u64::from(*e)),
    })
}

fn parse_ast(src: &str) -> Result<Ast> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser { tokens, pos: 0 };
    let ast = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input after position {} in {src:?}",
            parser.pos
        )));
    }
    Ok(ast)
}

/// Variable names occurring in `src`, sorted.
pub fn variables(src: &str) -> Result<BTreeSet<String>> {
    let ast = parse_ast(src)?;
    let mut vars = BTreeSet::new();
    collect_vars(&ast, &mut vars);
    Ok(vars)
}

/// Parses `src` into a polynomial over `ring`. Every variable must belong to
/// the ring.
pub fn parse_in(src: &str, ring: &MultiPolyRing) -> Result<MPoly> {
    eval(&parse_ast(src)?, ring)
}

/// Parses `src` into a polynomial over the ring generated by its own
/// variables (sorted by name).
pub fn parse(src: &str) -> Result<(MultiPolyRing, MPoly)> {
    let ast = parse_ast(src)?;
    let mut vars = BTreeSet::new();
    collect_vars(&ast, &mut vars);
    let ring = MultiPolyRing::new(vars.into_iter().collect());
    let p = eval(&ast, &ring)?;
    Ok((ring, p))
}

/// Parses an integer constant expression such as `-3` or `2^4 - 1`.
pub fn parse_integer(src: &str) -> Result<BigInt> {
    let (ring, p) = parse(src)?;
    if !ring.vars().is_empty() {
        return Err(Error::Parse(format!("expected an integer, got {src:?}")));
    }
    let value = p
        .terms()
        .next()
        .map(|(_, c)| c.clone())
        .unwrap_or_else(BigInt::zero);
    Ok(value)
}
