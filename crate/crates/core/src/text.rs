//! Polynomial expression parsing.
//!
//! Grammar (whitespace insignificant, `#` starts a comment):
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := base ["^" nat]
//! base   := ident | rational | "(" expr ")"
//! ```
//!
//! Identifiers resolve against the context's variables first, then against an
//! optional table of named subexpressions.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::context::VariableContext;
use crate::polynomial::Polynomial;
use crate::rational::{Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based column of the offending token.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(Integer),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer {
    tokens: Vec<(Tok, usize)>,
    end: usize,
}

fn lex(src: &str) -> Result<Lexer, ParseError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            '#' => break,
            c if c.is_whitespace() => i += 1,
            '+' => {
                tokens.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                tokens.push((Tok::Minus, col));
                i += 1;
            }
            '*' => {
                tokens.push((Tok::Star, col));
                i += 1;
            }
            '^' => {
                tokens.push((Tok::Caret, col));
                i += 1;
            }
            '/' => {
                tokens.push((Tok::Slash, col));
                i += 1;
            }
            '(' => {
                tokens.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                tokens.push((Tok::RParen, col));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let value = digits.parse::<Integer>().expect("digit run");
                tokens.push((Tok::Int(value), col));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            other => {
                return Err(ParseError { column: col, message: format!("unexpected character `{other}`") });
            }
        }
    }
    Ok(Lexer { tokens, end: src.chars().count() + 1 })
}

struct Parser<'a> {
    ctx: &'a Arc<VariableContext>,
    bindings: &'a HashMap<String, Polynomial>,
    tokens: Vec<(Tok, usize)>,
    end: usize,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.tokens.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { column: self.col(), message: message.into() }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.add(&rhs).expect("same context");
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs).expect("same context");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            let rhs = self.factor()?;
            acc = acc.mul(&rhs).map_err(|e| self.error(e.to_string()))?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let exp: u32 = n
                        .try_into()
                        .map_err(|_| ParseError { column: self.col(), message: "exponent too large".into() })?;
                    return base.pow(exp).map_err(|e| self.error(e.to_string()));
                }
                _ => {
                    self.pos -= 1;
                    return Err(self.error("expected a natural number after `^`"));
                }
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Ident(name)) => {
                if self.ctx.slot_of(&name).is_some() {
                    Ok(Polynomial::var(self.ctx, &name).expect("known variable"))
                } else if let Some(poly) = self.bindings.get(&name) {
                    Ok(poly.clone())
                } else {
                    Err(ParseError { column: col, message: format!("undeclared identifier `{name}`") })
                }
            }
            Some(Tok::Int(n)) => {
                // Optional `/ nat` forms a rational literal.
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            let value = Rational::new(n, d)
                                .map_err(|e| ParseError { column: col, message: e.to_string() })?;
                            Ok(Polynomial::constant(self.ctx, value))
                        }
                        _ => {
                            self.pos -= 1;
                            Err(self.error("expected an integer denominator after `/`"))
                        }
                    }
                } else {
                    Ok(Polynomial::constant(self.ctx, Rational::from_integer(n)))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => {
                        self.pos -= 1;
                        Err(self.error("expected `)`"))
                    }
                }
            }
            Some(other) => Err(ParseError { column: col, message: format!("unexpected token `{other:?}`") }),
            None => Err(ParseError { column: col, message: "unexpected end of input".into() }),
        }
    }
}

/// Parse an expression over the context's variables and the given named
/// subexpressions.
pub fn parse_polynomial_with(
    ctx: &Arc<VariableContext>,
    bindings: &HashMap<String, Polynomial>,
    src: &str,
) -> Result<Polynomial, ParseError> {
    let lexer = lex(src)?;
    let mut parser = Parser { ctx, bindings, tokens: lexer.tokens, end: lexer.end, pos: 0 };
    if parser.peek().is_none() {
        return Err(parser.error("unexpected end of input"));
    }
    let poly = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.error("trailing input after expression"));
    }
    Ok(poly)
}

/// Parse an expression over the context's variables alone.
pub fn parse_polynomial(ctx: &Arc<VariableContext>, src: &str) -> Result<Polynomial, ParseError> {
    parse_polynomial_with(ctx, &HashMap::new(), src)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Arc<VariableContext> {
        Arc::new(VariableContext::new(vec!["x1", "x2"], vec!["a"]).unwrap())
    }

    #[test]
    fn parses_products_and_powers() {
        let ctx = ctx();
        let f = parse_polynomial(&ctx, "(x1 - a) * (x1 - 1)").unwrap();
        assert_eq!(f, parse_polynomial(&ctx, "x1^2 - a*x1 - x1 + a").unwrap());
        let g = parse_polynomial(&ctx, "(x2 - 4)^2").unwrap();
        assert_eq!(g, parse_polynomial(&ctx, "x2^2 - 8*x2 + 16").unwrap());
    }

    #[test]
    fn rational_literals() {
        let ctx = ctx();
        let f = parse_polynomial(&ctx, "1/2*x1 - 3/4").unwrap();
        assert_eq!(f.to_string(), "1/2*x1 - 3/4");
        assert!(parse_polynomial(&ctx, "1/0").is_err());
    }

    #[test]
    fn errors_located() {
        let ctx = ctx();
        let err = parse_polynomial(&ctx, "x1 +").unwrap_err();
        assert_eq!(err.column, 5);
        assert!(err.message.contains("end of input"));

        let err = parse_polynomial(&ctx, "x1 + zz").unwrap_err();
        assert_eq!(err.column, 6);
        assert!(err.message.contains("undeclared identifier"));
    }

    #[test]
    fn bindings_substitute() {
        let ctx = ctx();
        let mut bindings = HashMap::new();
        bindings.insert("gamma".to_string(), parse_polynomial(&ctx, "x1^2 + x2^2 - 1").unwrap());
        let f = parse_polynomial_with(&ctx, &bindings, "(x1 - 1) * gamma").unwrap();
        assert_eq!(f, parse_polynomial(&ctx, "(x1 - 1) * (x1^2 + x2^2 - 1)").unwrap());
    }

    #[test]
    fn comments_and_unary_minus() {
        let ctx = ctx();
        let f = parse_polynomial(&ctx, "-x1 + 1 # trailing note").unwrap();
        assert_eq!(f, parse_polynomial(&ctx, "1 - x1").unwrap());
    }

    #[test]
    fn display_parse_round_trip() {
        let ctx = ctx();
        for src in ["x1^2 - a*x1 - x1 + a", "x2 - 3", "2*a*x1 + a^2", "0", "-5/6"] {
            let f = parse_polynomial(&ctx, src).unwrap();
            let reparsed = parse_polynomial(&ctx, &f.to_string()).unwrap();
            assert_eq!(f, reparsed);
        }
    }
}
