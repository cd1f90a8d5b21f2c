//! Text grammar for polynomials, fields, one-forms and ratios.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/' | <juxtaposition>) unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' ['+' | '-'] integer)?
//! atom   := integer | decimal | 'i' | variable | 'dx' | 'dy' | 'dz' | '(' expr ')'
//! ```
//!
//! Variables are `x, y` in the plane, `x, y, z` in three-space and `z` for
//! one-variable series. Fields are comma-separated component lists. The
//! printer emits terms in ascending graded-lex order and re-parses to the
//! same value.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{OneFormJet, VectorFieldJet};
use crate::gaussian::GaussianRational;
use crate::monomial::Monomial;
use crate::series::PolySeries;

/// Default safety cap on the number of terms of any intermediate value.
pub const DEFAULT_TERM_CAP: usize = 1_000_000;

/// Syntax or vocabulary error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub token: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)?;
        if !self.token.is_empty() {
            write!(f, " (at `{}`)", self.token)?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

/// Parser settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseOptions {
    pub term_cap: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        Self { term_cap: DEFAULT_TERM_CAP }
    }
}

/// Variable names used for `n` variables.
pub fn default_names(n: usize) -> Vec<&'static str> {
    match n {
        1 => vec!["z"],
        2 => vec!["x", "y"],
        _ => vec!["x", "y", "z"],
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Decimal(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    text: String,
    line: usize,
    column: usize,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1usize, 1usize);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let (start_line, start_col) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            k += 1;
            continue;
        }
        let mut text = c.to_string();
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            d if d.is_ascii_digit() => {
                let mut j = k;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let int_part: String = chars[k..j].iter().collect();
                if j + 1 < chars.len() && chars[j] == '.' && chars[j + 1].is_ascii_digit() {
                    let mut e = j + 1;
                    while e < chars.len() && chars[e].is_ascii_digit() {
                        e += 1;
                    }
                    let frac: String = chars[j + 1..e].iter().collect();
                    text = chars[k..e].iter().collect();
                    let numer: BigInt = format!("{int_part}{frac}").parse().expect("digits");
                    let denom = num_traits::pow(BigInt::from(10), frac.len());
                    Tok::Decimal(BigRational::new(numer, denom))
                } else {
                    text = int_part.clone();
                    Tok::Int(int_part.parse().expect("digits"))
                }
            }
            a if a.is_alphabetic() || a == '_' => {
                let mut j = k;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                text = chars[k..j].iter().collect();
                Tok::Ident(text.clone())
            }
            other => {
                return Err(ParseError {
                    line: start_line,
                    column: start_col,
                    token: other.to_string(),
                    message: "unexpected character".into(),
                }
                .into())
            }
        };
        let width = text.chars().count();
        k += width;
        column += width;
        out.push(Token { tok, text, line: start_line, column: start_col });
    }
    out.push(Token { tok: Tok::End, text: String::new(), line, column });
    Ok(out)
}

/// Intermediate value: a ratio of polynomials or a one-form over a
/// polynomial denominator.
#[derive(Clone, Debug)]
enum Value {
    Scalar { num: PolySeries, den: PolySeries },
    Form { coeffs: Vec<PolySeries>, den: PolySeries },
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    names: Vec<&'a str>,
    nvars: usize,
    opts: ParseOptions,
}

impl<'a> Parser<'a> {
    fn new(src: &str, nvars: usize, opts: ParseOptions) -> Result<Self> {
        if !(1..=3).contains(&nvars) {
            return Err(Error::UnsupportedDimension(nvars));
        }
        Ok(Self { toks: tokenize(src)?, pos: 0, names: default_names(nvars), nvars, opts })
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, t: &Token, message: impl Into<String>) -> Error {
        ParseError {
            line: t.line,
            column: t.column,
            token: if t.tok == Tok::End { "end of input".into() } else { t.text.clone() },
            message: message.into(),
        }
        .into()
    }

    fn expect_end(&mut self) -> Result<()> {
        let t = self.peek().clone();
        if t.tok == Tok::End {
            Ok(())
        } else {
            Err(self.error_at(&t, "unexpected token"))
        }
    }

    fn scalar(&self, num: PolySeries) -> Value {
        Value::Scalar { num, den: PolySeries::one(self.nvars) }
    }

    fn check_cap(&self, v: Value) -> Result<Value> {
        let count = match &v {
            Value::Scalar { num, den } => num.len().max(den.len()),
            Value::Form { coeffs, den } => coeffs.iter().map(PolySeries::len).sum::<usize>().max(den.len()),
        };
        if count > self.opts.term_cap {
            return Err(Error::TermCapExceeded { count, cap: self.opts.term_cap });
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            let t = self.peek().clone();
            let negate = match t.tok {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(acc),
            };
            self.bump();
            let rhs = self.term()?;
            let rhs = if negate { neg(rhs) } else { rhs };
            acc = self.check_cap(add(acc, rhs).map_err(|m| self.error_at(&t, m))?)?;
        }
    }

    fn starts_atom(tok: &Tok) -> bool {
        matches!(tok, Tok::Int(_) | Tok::Decimal(_) | Tok::Ident(_) | Tok::LParen)
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        loop {
            let t = self.peek().clone();
            let divide = match t.tok {
                Tok::Star => {
                    self.bump();
                    false
                }
                Tok::Slash => {
                    self.bump();
                    true
                }
                ref other if Self::starts_atom(other) => false,
                _ => return Ok(acc),
            };
            let rhs = self.unary()?;
            let combined = if divide { div(acc, rhs) } else { mul(acc, rhs) };
            acc = self.check_cap(combined.map_err(|m| self.error_at(&t, m))?)?;
        }
    }

    fn unary(&mut self) -> Result<Value> {
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                Ok(neg(self.unary()?))
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let t = self.bump();
        match t.tok {
            Tok::Minus => Ok(-self.exponent()?),
            Tok::Plus => self.exponent(),
            Tok::LParen => {
                let e = self.exponent()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(self.error_at(&close, "expected `)`"));
                }
                Ok(e)
            }
            Tok::Int(ref n) => i64::try_from(n).ok().filter(|e| e.abs() <= 100_000).ok_or_else(|| self.error_at(&t, "exponent too large")),
            _ => Err(self.error_at(&t, "expected an integer exponent")),
        }
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        let t = self.peek().clone();
        if t.tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let e = self.exponent()?;
        let Value::Scalar { num, den } = base else {
            return Err(self.error_at(&t, "cannot raise a differential form to a power"));
        };
        let k = u32::try_from(e.unsigned_abs()).map_err(|_| self.error_at(&t, "exponent too large"))?;
        let (num, den) = if e >= 0 { (num, den) } else { (den, num) };
        if num.is_zero() && e < 0 {
            return Err(self.error_at(&t, "division by zero"));
        }
        self.check_cap(Value::Scalar { num: num.pow(k), den: den.pow(k) })
    }

    fn atom(&mut self) -> Result<Value> {
        let t = self.bump();
        match &t.tok {
            Tok::Int(n) => Ok(self.scalar(PolySeries::constant(
                self.nvars,
                GaussianRational::from_real(BigRational::from_integer(n.clone())),
            ))),
            Tok::Decimal(q) => Ok(self.scalar(PolySeries::constant(self.nvars, GaussianRational::from_real(q.clone())))),
            Tok::Ident(name) => {
                if name == "i" {
                    return Ok(self.scalar(PolySeries::constant(self.nvars, GaussianRational::i())));
                }
                if let Some(k) = self.names.iter().position(|v| v == name) {
                    return Ok(self.scalar(PolySeries::var(self.nvars, k)));
                }
                if let Some(rest) = name.strip_prefix('d') {
                    if self.nvars >= 2 {
                        if let Some(k) = self.names.iter().position(|v| *v == rest) {
                            let mut coeffs = vec![PolySeries::zero(self.nvars); self.nvars];
                            coeffs[k] = PolySeries::one(self.nvars);
                            return Ok(Value::Form { coeffs, den: PolySeries::one(self.nvars) });
                        }
                    }
                }
                Err(self.error_at(&t, format!("unknown variable (expected one of {})", self.names.join(", "))))
            }
            Tok::LParen => {
                let v = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(self.error_at(&close, "expected `)`"));
                }
                Ok(v)
            }
            Tok::End => Err(self.error_at(&t, "unexpected end of input")),
            _ => Err(self.error_at(&t, "unexpected token")),
        }
    }

    /// Parses one comma-free expression as a polynomial.
    fn polynomial(&mut self) -> Result<PolySeries> {
        let start = self.peek().clone();
        match self.expr()? {
            Value::Scalar { num, den } => to_polynomial(num, den).map_err(|m| self.error_at(&start, m)),
            Value::Form { .. } => Err(self.error_at(&start, "expected a function, found a differential form")),
        }
    }
}

fn neg(v: Value) -> Value {
    match v {
        Value::Scalar { num, den } => Value::Scalar { num: -&num, den },
        Value::Form { coeffs, den } => Value::Form { coeffs: coeffs.iter().map(|c| -c).collect(), den },
    }
}

fn add(a: Value, b: Value) -> std::result::Result<Value, &'static str> {
    match (a, b) {
        (Value::Scalar { num: n1, den: d1 }, Value::Scalar { num: n2, den: d2 }) => {
            if d1 == d2 {
                Ok(Value::Scalar { num: &n1 + &n2, den: d1 })
            } else {
                Ok(Value::Scalar { num: &(&n1 * &d2) + &(&n2 * &d1), den: &d1 * &d2 })
            }
        }
        (Value::Form { coeffs: c1, den: d1 }, Value::Form { coeffs: c2, den: d2 }) => {
            if d1 == d2 {
                Ok(Value::Form { coeffs: c1.iter().zip(&c2).map(|(a, b)| a + b).collect(), den: d1 })
            } else {
                Ok(Value::Form {
                    coeffs: c1.iter().zip(&c2).map(|(a, b)| &(a * &d2) + &(b * &d1)).collect(),
                    den: &d1 * &d2,
                })
            }
        }
        (Value::Scalar { num, .. }, f @ Value::Form { .. }) | (f @ Value::Form { .. }, Value::Scalar { num, .. })
            if num.is_zero() =>
        {
            Ok(f)
        }
        _ => Err("cannot add a function and a differential form"),
    }
}

fn mul(a: Value, b: Value) -> std::result::Result<Value, &'static str> {
    match (a, b) {
        (Value::Scalar { num: n1, den: d1 }, Value::Scalar { num: n2, den: d2 }) => {
            Ok(Value::Scalar { num: &n1 * &n2, den: &d1 * &d2 })
        }
        (Value::Scalar { num, den: d1 }, Value::Form { coeffs, den: d2 })
        | (Value::Form { coeffs, den: d2 }, Value::Scalar { num, den: d1 }) => Ok(Value::Form {
            coeffs: coeffs.iter().map(|c| &num * c).collect(),
            den: &d1 * &d2,
        }),
        _ => Err("the product of two differential forms is not supported"),
    }
}

fn div(a: Value, b: Value) -> std::result::Result<Value, &'static str> {
    let Value::Scalar { num: n2, den: d2 } = b else {
        return Err("cannot divide by a differential form");
    };
    if n2.is_zero() {
        return Err("division by zero");
    }
    mul(a, Value::Scalar { num: d2, den: n2 })
}

/// Clears a denominator: constants are inverted, other denominators must
/// divide the numerator exactly.
fn to_polynomial(num: PolySeries, den: PolySeries) -> std::result::Result<PolySeries, &'static str> {
    if den.degree() == Some(0) {
        let c = den.constant_term().inv().map_err(|_| "division by zero")?;
        return Ok(num.scale(&c));
    }
    match num.divide_by(&den) {
        Ok(Some(q)) => Ok(q),
        _ => Err("expression is not a polynomial"),
    }
}

fn split_components(src: &str) -> Vec<(usize, &str)> {
    // (byte offset, piece) at top-level commas
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, c) in src.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &src[start..k]));
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push((start, &src[start..]));
    out
}

/// Parses a polynomial in `nvars` variables.
pub fn parse_poly(src: &str, nvars: usize) -> Result<PolySeries> {
    parse_poly_with(src, nvars, ParseOptions::default())
}

pub fn parse_poly_with(src: &str, nvars: usize, opts: ParseOptions) -> Result<PolySeries> {
    let mut p = Parser::new(src, nvars, opts)?;
    let poly = p.polynomial()?;
    p.expect_end()?;
    Ok(poly)
}

/// Parses a comma-separated component list with exactly `nvars` entries.
pub fn parse_field(src: &str, nvars: usize) -> Result<VectorFieldJet> {
    parse_field_with(src, nvars, ParseOptions::default())
}

pub fn parse_field_with(src: &str, nvars: usize, opts: ParseOptions) -> Result<VectorFieldJet> {
    let mut p = Parser::new(src, nvars, opts)?;
    let mut comps = Vec::new();
    loop {
        comps.push(p.polynomial()?);
        let t = p.bump();
        match t.tok {
            Tok::Comma => continue,
            Tok::End => break,
            _ => return Err(p.error_at(&t, "expected `,` or end of input")),
        }
    }
    if comps.len() != nvars {
        let last = p.peek().clone();
        return Err(ParseError {
            line: last.line,
            column: last.column,
            token: String::new(),
            message: format!("expected {nvars} components, found {}", comps.len()),
        }
        .into());
    }
    VectorFieldJet::new(comps)
}

/// Parses `num / den` (or a bare polynomial) as a numerator-denominator pair.
/// The denominator is kept as written; no cancellation is attempted.
pub fn parse_ratio(src: &str, nvars: usize) -> Result<(PolySeries, PolySeries)> {
    parse_ratio_with(src, nvars, ParseOptions::default())
}

pub fn parse_ratio_with(src: &str, nvars: usize, opts: ParseOptions) -> Result<(PolySeries, PolySeries)> {
    let mut p = Parser::new(src, nvars, opts)?;
    let start = p.peek().clone();
    let v = p.expr()?;
    p.expect_end()?;
    match v {
        Value::Scalar { num, den } => Ok((num, den)),
        Value::Form { .. } => Err(p.error_at(&start, "expected a function, found a differential form")),
    }
}

/// Parses a one-form `P dx + Q dy`, possibly over a common denominator
/// (`(x*dy - y*dx)/(x*y)`). Returns the numerator form and the denominator.
pub fn parse_one_form(src: &str, nvars: usize) -> Result<(OneFormJet, PolySeries)> {
    parse_one_form_with(src, nvars, ParseOptions::default())
}

pub fn parse_one_form_with(src: &str, nvars: usize, opts: ParseOptions) -> Result<(OneFormJet, PolySeries)> {
    let mut p = Parser::new(src, nvars, opts)?;
    let start = p.peek().clone();
    let v = p.expr()?;
    p.expect_end()?;
    match v {
        Value::Form { coeffs, den } => Ok((OneFormJet::new(coeffs)?, den)),
        Value::Scalar { num, .. } if num.is_zero() => Ok((OneFormJet::zero(nvars), PolySeries::one(nvars))),
        Value::Scalar { .. } => Err(p.error_at(&start, "expected a differential form such as `P*dx + Q*dy`")),
    }
}

/// Parses a constant of `Q(i)`, e.g. `3/2`, `-i`, `1 + 2*i`.
pub fn parse_scalar(src: &str) -> Result<GaussianRational> {
    let poly = parse_poly(src, 2)?;
    if poly.degree().unwrap_or(0) > 0 {
        return Err(ParseError {
            line: 1,
            column: 1,
            token: src.trim().to_string(),
            message: "expected a constant".into(),
        }
        .into());
    }
    Ok(poly.constant_term())
}

/// Splits a component list at top-level commas and parses each piece as a
/// scalar.
pub fn parse_scalar_list(src: &str) -> Result<Vec<GaussianRational>> {
    split_components(src).into_iter().map(|(_, s)| parse_scalar(s)).collect()
}

fn format_monomial(m: &Monomial, names: &[&str]) -> String {
    let mut parts = Vec::new();
    for (k, name) in names.iter().enumerate() {
        match m.exp(k) {
            0 => {}
            1 => parts.push((*name).to_string()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

fn format_term(c: &GaussianRational, m: &Monomial, names: &[&str]) -> String {
    if m.is_one() {
        return c.to_string();
    }
    let mono = format_monomial(m, names);
    if c.is_one() {
        mono
    } else {
        format!("{c}*{mono}")
    }
}

/// Prints the stored terms of `f` in ascending graded-lex order, ignoring
/// precision.
pub fn format_poly(f: &PolySeries, names: &[&str]) -> String {
    let mut out = String::new();
    for (k, (m, c)) in f.terms().enumerate() {
        let negative = c.looks_negative();
        let abs = if negative { -c } else { c.clone() };
        let body = format_term(&abs, m, names);
        match (k, negative) {
            (0, true) => out.push_str(&format!("-{body}")),
            (0, false) => out.push_str(&body),
            (_, true) => out.push_str(&format!(" - {body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Prints `a_1*dx + a_2*dy`, parenthesizing multi-term coefficients.
pub fn format_one_form(w: &OneFormJet, names: &[&str]) -> String {
    let mut out = String::new();
    for (k, a) in w.coefficients().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let d = format!("d{}", names[k]);
        let (negative, body) = if a.len() == 1 {
            let (m, c) = a.terms().next().expect("one term");
            let negative = c.looks_negative();
            let abs = if negative { -c } else { c.clone() };
            let body = if m.is_one() && abs.is_one() {
                d
            } else {
                format!("{}*{d}", format_term(&abs, m, names))
            };
            (negative, body)
        } else {
            (false, format!("({})*{d}", format_poly(a, names)))
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push_str(&format!("-{body}")),
            (true, false) => out.push_str(&body),
            (false, true) => out.push_str(&format!(" - {body}")),
            (false, false) => out.push_str(&format!(" + {body}")),
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

    #[test]
    fn parses_basic_terms() {
        let f = parse_poly("3/2*x^2*y - y^3 + i*x", 2).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.coeff(&Monomial::new(&[2, 1])), GaussianRational::ratio(3, 2));
        assert_eq!(f.coeff(&Monomial::new(&[1, 0])), GaussianRational::i());
    }

    #[test]
    fn juxtaposition_and_decimals() {
        assert_eq!(parse_poly("2x y", 2).unwrap(), parse_poly("2*x*y", 2).unwrap());
        assert_eq!(parse_poly("0.5*x", 2).unwrap(), parse_poly("x/2", 2).unwrap());
        assert_eq!(parse_poly("(x^2 - y^2)/(x - y)", 2).unwrap(), parse_poly("x + y", 2).unwrap());
    }

    #[test]
    fn prints_in_ascending_order() {
        let f = parse_poly("y^2 - x^3 + 3*x*y + 1", 2).unwrap();
        assert_eq!(format_poly(&f, &["x", "y"]), "1 + 3*x*y + y^2 - x^3");
        let g = parse_poly("(1 - 2*i)*x - i*y", 2).unwrap();
        assert_eq!(format_poly(&g, &["x", "y"]), "(1 - 2*i)*x - i*y");
    }

    #[test]
    fn round_trip() {
        for s in ["x - 1/3*y^2 + (2 + i)*x*y^3", "-i*x^4", "0", "-(1 + i)*y"] {
            let f = parse_poly(s, 2).unwrap();
            let again = parse_poly(&format_poly(&f, &["x", "y"]), 2).unwrap();
            assert_eq!(f, again, "{s}");
        }
    }

    #[test]
    fn fields_and_errors() {
        let f = parse_field("x, -y", 2).unwrap();
        assert_eq!(f.to_string(), "x, -y");
        assert!(matches!(parse_field("x", 2), Err(Error::Parse(_))));
        let Err(Error::Parse(e)) = parse_poly("x + w", 2) else { panic!() };
        assert_eq!((e.line, e.column, e.token.as_str()), (1, 5, "w"));
        let Err(Error::Parse(e)) = parse_poly("x +\n  * y", 2) else { panic!() };
        assert_eq!((e.line, e.column), (2, 3));
        assert!(parse_poly("x/y", 2).is_err());
    }

    #[test]
    fn forms_and_ratios() {
        let (w, den) = parse_one_form("x dy - y dx", 2).unwrap();
        assert_eq!(w.coefficients(), &[parse_poly("-y", 2).unwrap(), parse_poly("x", 2).unwrap()]);
        assert_eq!(den, PolySeries::one(2));
        assert_eq!(w.to_string(), "-y*dx + x*dy");
        let (num, den) = parse_ratio("(y^2 + x^3)/x^2", 2).unwrap();
        assert_eq!(num, parse_poly("y^2 + x^3", 2).unwrap());
        assert_eq!(den, parse_poly("x^2", 2).unwrap());
        let (num, den) = parse_ratio("1/y^2 - 2/3*(x/y)^3", 2).unwrap();
        assert!(!num.is_zero());
        assert_eq!(den.degree(), Some(5));
    }

    #[test]
    fn negative_exponents() {
        let (num, den) = parse_ratio("x^-2*y", 2).unwrap();
        assert_eq!(num, parse_poly("y", 2).unwrap());
        assert_eq!(den, parse_poly("x^2", 2).unwrap());
    }

    #[test]
    fn term_cap() {
        let opts = ParseOptions { term_cap: 3 };
        assert!(matches!(
            parse_poly_with("(1 + x + y)^3", 2, opts),
            Err(Error::TermCapExceeded { cap: 3, .. })
        ));
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("1 + 2*i").unwrap(), GaussianRational::from_parts(1, 2));
        assert_eq!(parse_scalar_list("1, -1").unwrap().len(), 2);
        assert!(parse_scalar("x").is_err());
    }
}
