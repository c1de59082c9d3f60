//! Polynomial expression grammar:
//!
//! ```text
//! expr     := ("+" | "-")? term (("+" | "-") term)*
//! term     := factor ("*" factor)*
//! factor   := base ("^" uint)?
//! base     := rational | "i" | identifier | "(" expr ")"
//! rational := int ("/" uint)?
//! ```
//!
//! Whitespace is ignored between tokens. Multiplication is always explicit.

use std::fmt;

use thiserror::Error;
use weilcert_core::{GaussianRational, Polynomial, Rational, VariableRegistry};

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: expected {}, found {found}", .expected.join(" or "))]
    SyntaxError {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },

    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable { name: String, line: usize, column: usize },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolyExpression {
    Rational(Rational),
    ImaginaryUnit,
    Variable(String),
    Negation(Box<PolyExpression>),
    Sum(Box<PolyExpression>, Box<PolyExpression>),
    Difference(Box<PolyExpression>, Box<PolyExpression>),
    Product(Box<PolyExpression>, Box<PolyExpression>),
    Power(Box<PolyExpression>, u32),
    Group(Box<PolyExpression>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Number(n) => write!(f, "number `{n}`"),
            Token::Ident(n) => write!(f, "identifier `{n}`"),
            Token::Plus => write!(f, "`+`"),
            Token::Minus => write!(f, "`-`"),
            Token::Star => write!(f, "`*`"),
            Token::Slash => write!(f, "`/`"),
            Token::Caret => write!(f, "`^`"),
            Token::LParen => write!(f, "`(`"),
            Token::RParen => write!(f, "`)`"),
            Token::End => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    token: Token,
    line: usize,
    column: usize,
}

fn tokenize(input: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        let token = match c {
            c if c.is_whitespace() => {
                bump(&mut chars);
                continue;
            }
            '0'..='9' => {
                let mut s = String::new();
                while chars.peek().is_some_and(char::is_ascii_digit) {
                    s.push(bump(&mut chars).expect("peeked"));
                }
                Token::Number(s)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while chars.peek().is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
                    s.push(bump(&mut chars).expect("peeked"));
                }
                Token::Ident(s)
            }
            _ => {
                bump(&mut chars);
                match c {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '/' => Token::Slash,
                    '^' => Token::Caret,
                    '(' => Token::LParen,
                    ')' => Token::RParen,
                    other => {
                        return Err(ParseError::SyntaxError {
                            line: tl,
                            column: tc,
                            expected: vec!["a number, identifier, operator or parenthesis".into()],
                            found: format!("`{other}`"),
                        })
                    }
                }
            }
        };
        out.push(Spanned {
            token,
            line: tl,
            column: tc,
        });
    }
    out.push(Spanned {
        token: Token::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].token
    }

    fn advance(&mut self) -> Spanned {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let t = &self.tokens[self.pos];
        ParseError::SyntaxError {
            line: t.line,
            column: t.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.token.to_string(),
        }
    }

    fn expr(&mut self) -> Result<PolyExpression, ParseError> {
        let mut acc = match self.peek() {
            Token::Minus => {
                self.advance();
                PolyExpression::Negation(Box::new(self.term()?))
            }
            Token::Plus => {
                self.advance();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Token::Plus => {
                    self.advance();
                    acc = PolyExpression::Sum(Box::new(acc), Box::new(self.term()?));
                }
                Token::Minus => {
                    self.advance();
                    acc = PolyExpression::Difference(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpression, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Token::Star {
            self.advance();
            acc = PolyExpression::Product(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<PolyExpression, ParseError> {
        let base = self.base()?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        self.advance();
        match self.peek().clone() {
            Token::Number(n) => match n.parse::<u32>() {
                Ok(e) => {
                    self.advance();
                    Ok(PolyExpression::Power(Box::new(base), e))
                }
                Err(_) => Err(self.error(&["an exponent below 2^32"])),
            },
            _ => Err(self.error(&["an unsigned integer exponent"])),
        }
    }

    fn base(&mut self) -> Result<PolyExpression, ParseError> {
        match self.peek().clone() {
            Token::Number(n) => {
                self.advance();
                let numer: Rational = n.parse().expect("digits");
                if *self.peek() != Token::Slash {
                    return Ok(PolyExpression::Rational(numer));
                }
                self.advance();
                match self.peek().clone() {
                    Token::Number(d) if d.trim_start_matches('0').is_empty() => Err(self.error(&["a nonzero denominator"])),
                    Token::Number(d) => {
                        self.advance();
                        let denom: Rational = d.parse().expect("digits");
                        Ok(PolyExpression::Rational(numer / denom))
                    }
                    _ => Err(self.error(&["an unsigned integer denominator"])),
                }
            }
            Token::Ident(name) => {
                self.advance();
                Ok(if name == "i" {
                    PolyExpression::ImaginaryUnit
                } else {
                    PolyExpression::Variable(name)
                })
            }
            Token::LParen => {
                self.advance();
                let inner = self.expr()?;
                if *self.peek() != Token::RParen {
                    return Err(self.error(&["`)`", "an operator"]));
                }
                self.advance();
                Ok(PolyExpression::Group(Box::new(inner)))
            }
            _ => Err(self.error(&["a number", "`i`", "an identifier", "`(`"])),
        }
    }
}

/// Parses an expression into its syntax tree without resolving variables.
pub fn parse_expression(input: &str) -> Result<PolyExpression, ParseError> {
    let mut p = Parser {
        tokens: tokenize(input)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Token::End {
        return Err(p.error(&["an operator", "end of input"]));
    }
    Ok(e)
}

/// Parses and lowers an expression over the variables of `registry`.
pub fn parse_poly(input: &str, registry: &std::sync::Arc<VariableRegistry>) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(input)?;
    for t in &tokens {
        if let Token::Ident(name) = &t.token {
            if name != "i" && registry.index_of(name).is_none() {
                return Err(ParseError::UnknownVariable {
                    name: name.clone(),
                    line: t.line,
                    column: t.column,
                });
            }
        }
    }
    let expr = parse_expression(input)?;
    Ok(expr.lower(registry).expect("variables resolved above"))
}

impl PolyExpression {
    /// Evaluates the tree to a polynomial. Fails on variables missing from the registry.
    pub fn lower(&self, registry: &std::sync::Arc<VariableRegistry>) -> weilcert_core::Result<Polynomial> {
        Ok(match self {
            Self::Rational(r) => Polynomial::constant(registry, GaussianRational::from_rational(r.clone())),
            Self::ImaginaryUnit => Polynomial::constant(registry, GaussianRational::i()),
            Self::Variable(name) => Polynomial::var(registry, name)?,
            Self::Negation(e) => -&e.lower(registry)?,
            Self::Sum(a, b) => &a.lower(registry)? + &b.lower(registry)?,
            Self::Difference(a, b) => &a.lower(registry)? - &b.lower(registry)?,
            Self::Product(a, b) => &a.lower(registry)? * &b.lower(registry)?,
            Self::Power(e, k) => e.lower(registry)?.pow(*k),
            Self::Group(e) => e.lower(registry)?,
        })
    }
}
