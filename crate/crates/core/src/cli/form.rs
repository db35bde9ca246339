//! Parser for homogeneous quadratic forms such as `2*X0*X1 + X2^2 - 3/2 X3X4`.
//!
//! ```text
//! form  := term (('+'|'-') term)*
//! term  := coeff ('*'? monom)? | monom
//! monom := var ('^' exp)? ('*'? var ('^' exp)?)*
//! var   := 'X' digit
//! coeff := int | int '/' int
//! ```
//!
//! A leading sign is allowed. A cross term `c·XᵢXⱼ` is stored as
//! `M_ij = M_ji = c/2`, so that `q(X) = XᵀMX`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{format_rational, int, QMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("term {term:?} has degree {degree}, expected 2")]
    Degree { term: String, degree: u32 },
    #[error("the form is identically zero")]
    ZeroForm,
}

/// A quadratic form with its symmetric matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedForm {
    pub matrix: QMatrix,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str, nvars: usize) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        let syntax = |message: String| ParseError::Syntax { column, message };
        match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => out.push((column, Token::Plus)),
            '-' | '\u{2212}' => out.push((column, Token::Minus)),
            '*' => out.push((column, Token::Star)),
            '/' => out.push((column, Token::Slash)),
            '^' => out.push((column, Token::Caret)),
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push((column, Token::Int(digits.parse().expect("ascii digits"))));
            }
            'X' | 'x' => {
                let start = i + 1;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                let index: usize = digits
                    .parse()
                    .map_err(|_| syntax("expected a digit after X".into()))?;
                if index >= nvars {
                    return Err(syntax(format!(
                        "unknown variable X{index} (variables are X0..X{})",
                        nvars - 1
                    )));
                }
                out.push((column, Token::Var(index)));
            }
            other => return Err(syntax(format!("unexpected character {other:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    end_column: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_column, |(c, _)| *c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            column: self.column(),
            message: message.into(),
        }
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn coefficient(&mut self) -> Result<Option<Rational>, ParseError> {
        let Some(Token::Int(n)) = self.peek().cloned() else {
            return Ok(None);
        };
        self.pos += 1;
        if self.peek() != Some(&Token::Slash) {
            return Ok(Some(Rational::from_integer(n)));
        }
        self.pos += 1;
        match self.next() {
            Some(Token::Int(d)) if !d.is_zero() => Ok(Some(Rational::new(n, d))),
            Some(Token::Int(_)) => {
                self.pos -= 1;
                Err(self.error("zero denominator"))
            }
            _ => {
                self.pos -= 1;
                Err(self.error("expected a denominator"))
            }
        }
    }

    /// Variables of one term as a list of indices with repetition.
    fn monomial(&mut self) -> Result<Vec<usize>, ParseError> {
        let mut vars = Vec::new();
        loop {
            let save = self.pos;
            if !vars.is_empty() && self.peek() == Some(&Token::Star) {
                self.pos += 1;
            }
            let Some(Token::Var(v)) = self.peek().cloned() else {
                if !vars.is_empty() && self.pos != save {
                    return Err(self.error("expected a variable after '*'"));
                }
                return Ok(vars);
            };
            self.pos += 1;
            let mut exp = 1u32;
            if self.peek() == Some(&Token::Caret) {
                self.pos += 1;
                match self.next() {
                    Some(Token::Int(e)) => {
                        exp = u32::try_from(&e).map_err(|_| {
                            self.pos -= 1;
                            self.error("exponent too large")
                        })?;
                    }
                    _ => {
                        self.pos -= 1;
                        return Err(self.error("expected an exponent"));
                    }
                }
            }
            vars.extend(std::iter::repeat_n(v, exp as usize));
        }
    }
}

/// Parses a quadratic form in `X0..X{nvars-1}`.
pub fn parse_quadratic_form_in(text: &str, nvars: usize) -> Result<ParsedForm, ParseError> {
    let tokens = tokenize(text, nvars)?;
    let mut p = Parser {
        tokens: &tokens,
        pos: 0,
        end_column: text.chars().count() + 1,
    };
    let mut m = QMatrix::zeros(nvars, nvars);
    let mut first = true;
    while p.pos < tokens.len() || first {
        let start = p.pos;
        let mut sign = Rational::one();
        match p.peek() {
            Some(Token::Plus) => p.pos += 1,
            Some(Token::Minus) => {
                sign = -sign;
                p.pos += 1;
            }
            _ if !first => return Err(p.error("expected '+' or '-'")),
            _ => {}
        }
        first = false;
        let coeff = p.coefficient()?;
        if coeff.is_some() && p.peek() == Some(&Token::Star) {
            p.pos += 1;
            if !matches!(p.peek(), Some(Token::Var(_))) {
                return Err(p.error("expected a variable after '*'"));
            }
        }
        let vars = p.monomial()?;
        if coeff.is_none() && vars.is_empty() {
            return Err(p.error("expected a term"));
        }
        let term_text = || {
            let from = tokens[start].0 - 1;
            let to = tokens.get(p.pos).map_or(text.chars().count(), |(c, _)| c - 1);
            text.chars().skip(from).take(to - from).collect::<String>().trim().to_string()
        };
        if vars.len() != 2 {
            return Err(ParseError::Degree {
                term: term_text(),
                degree: vars.len() as u32,
            });
        }
        let c = sign * coeff.unwrap_or_else(Rational::one);
        let (i, j) = (vars[0], vars[1]);
        if i == j {
            m[(i, i)] += c;
        } else {
            let half = c / int(2);
            m[(i, j)] += half.clone();
            m[(j, i)] += half;
        }
    }
    if m.is_zero() {
        return Err(ParseError::ZeroForm);
    }
    Ok(ParsedForm {
        matrix: m,
        source: text.to_string(),
    })
}

/// Parses a quadratic form in `X0..X4`.
pub fn parse_quadratic_form(text: &str) -> Result<ParsedForm, ParseError> {
    parse_quadratic_form_in(text, 5)
}

/// Canonical text of `XᵀMX`, terms ordered by `(i, j)` with `i <= j`.
pub fn render_form(m: &QMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        for j in i..m.cols() {
            let c = if i == j { m[(i, i)].clone() } else { &m[(i, j)] * int(2) };
            if c.is_zero() {
                continue;
            }
            let monom = if i == j { format!("X{i}^2") } else { format!("X{i}*X{j}") };
            let negative = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                out.push_str(if negative { "-" } else { "" });
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if !abs.is_one() {
                let _ = write!(out, "{}*", format_rational(&abs));
            }
            out.push_str(&monom);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    #[test]
    fn standard_form() {
        let f = parse_quadratic_form("2*X0*X1 + X2^2 + X3^2 + X4^2").unwrap();
        let m = &f.matrix;
        assert_eq!(m[(0, 1)], int(1));
        assert_eq!(m[(1, 0)], int(1));
        for i in 2..5 {
            assert_eq!(m[(i, i)], int(1));
        }
        assert_eq!(m.entries().filter(|e| !e.is_zero()).count(), 5);
    }

    #[test]
    fn fractional_and_negative() {
        let f = parse_quadratic_form("3/2*X3^2 - X0*X4").unwrap();
        assert_eq!(f.matrix[(3, 3)], frac(3, 2));
        assert_eq!(f.matrix[(0, 4)], frac(-1, 2));
        assert_eq!(f.matrix[(4, 0)], frac(-1, 2));
    }

    #[test]
    fn juxtaposition_and_collection() {
        let a = parse_quadratic_form("2X0X1 - X1 X0 + X2X2").unwrap();
        let b = parse_quadratic_form("X0*X1 + X2^2").unwrap();
        assert_eq!(a.matrix, b.matrix);
        let c = parse_quadratic_form("-X0^2").unwrap();
        assert_eq!(c.matrix[(0, 0)], int(-1));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_quadratic_form("X0^3"),
            Err(ParseError::Degree { degree: 3, .. })
        ));
        assert!(matches!(parse_quadratic_form("X0 + X1"), Err(ParseError::Degree { degree: 1, .. })));
        assert!(matches!(parse_quadratic_form("5"), Err(ParseError::Degree { degree: 0, .. })));
        assert!(matches!(parse_quadratic_form("X5^2"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_quadratic_form("Y0^2"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_quadratic_form("X0*"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_quadratic_form("X0^2 X1^2 +"), Err(ParseError::Degree { .. })));
        assert!(matches!(parse_quadratic_form("X0^2 +"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_quadratic_form("1/0 X0^2"), Err(ParseError::Syntax { .. })));
        assert_eq!(parse_quadratic_form("X0*X1 - X1*X0"), Err(ParseError::ZeroForm));
        assert!(matches!(parse_quadratic_form(""), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn render_roundtrip() {
        for text in [
            "2*X0*X1 + X2^2 + X3^2 + X4^2",
            "-X0*X4 + 3/2*X3^2",
            "-7/3*X0*X2 + X1^2 - 2*X4^2",
        ] {
            let f = parse_quadratic_form(text).unwrap();
            let r = render_form(&f.matrix);
            assert_eq!(r, text);
            assert_eq!(parse_quadratic_form(&r).unwrap().matrix, f.matrix);
        }
    }
}
