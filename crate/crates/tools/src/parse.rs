//! Plain-text polynomial system files.
//!
//! ```text
//! # comment
//! vars: x,y,z,t
//! char: 32003
//! order: degrevlex
//! y*z^3 - x^2*t^2
//! x*z^2 - y^2*t
//! ```
//!
//! `vars:` is required; `char:` defaults to 32003 and `order:` to
//! `degrevlex`. Header lines must precede the polynomials.

use std::fmt;

use sigbasis::bench::BenchmarkSystem;
use sigbasis::{Monomial, OrderKind, Polynomial, PrimeField, Ring, TermOrder, MAX_VARS};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),
    #[error("characteristic {0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("{0}")]
    Malformed(String),
    #[error("missing `vars:` header")]
    MissingVariables,
    #[error("unknown term order `{0}` (expected degrevlex or lex)")]
    UnknownOrder(String),
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("at most {MAX_VARS} variables are supported")]
    TooManyVariables,
    #[error("header `{0}` after the first polynomial")]
    LateHeader(String),
    #[error("no polynomials")]
    Empty,
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Int(&'a str),
    Ident(&'a str),
    Plus,
    Minus,
    Star,
    Caret,
}

impl fmt::Display for Tok<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) | Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
        }
    }
}

/// Splits `text` into tokens paired with their 1-based column.
fn tokenize(text: &str, line: usize, offset: usize) -> Result<Vec<(usize, Tok<'_>)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let col = offset + i + 1;
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                Tok::Int(&text[start..=i])
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_') {
                    i += 1;
                }
                Tok::Ident(&text[start..=i])
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(err(line, col, ParseErrorKind::Malformed(format!("unexpected character `{ch}`"))));
            }
        };
        out.push((col, tok));
        i += 1;
    }
    Ok(out)
}

struct Header {
    vars: Option<Vec<String>>,
    field: PrimeField,
    order: OrderKind,
}

fn parse_header(key: &str, value: &str, line: usize, col: usize, h: &mut Header) -> Result<(), ParseError> {
    let value = value.trim();
    match key {
        "vars" => {
            let mut vars: Vec<String> = Vec::new();
            for name in value.split(',').map(str::trim) {
                let ok = name
                    .chars()
                    .next()
                    .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                    && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                if !ok {
                    return Err(err(line, col, ParseErrorKind::Malformed(format!("bad variable name `{name}`"))));
                }
                if vars.iter().any(|v| v == name) {
                    return Err(err(line, col, ParseErrorKind::DuplicateVariable(name.into())));
                }
                vars.push(name.into());
            }
            if vars.len() > MAX_VARS {
                return Err(err(line, col, ParseErrorKind::TooManyVariables));
            }
            h.vars = Some(vars);
        }
        "char" => {
            let p: u64 = value
                .parse()
                .map_err(|_| err(line, col, ParseErrorKind::Malformed(format!("bad characteristic `{value}`"))))?;
            h.field = PrimeField::new(p).map_err(|_| err(line, col, ParseErrorKind::NotPrime(p)))?;
        }
        "order" => {
            h.order = match value {
                "degrevlex" | "grevlex" => OrderKind::DegRevLex,
                "lex" => OrderKind::Lex,
                other => return Err(err(line, col, ParseErrorKind::UnknownOrder(other.into()))),
            };
        }
        _ => unreachable!(),
    }
    Ok(())
}

/// Reduces a decimal literal modulo the field characteristic.
fn residue(field: &PrimeField, digits: &str) -> u32 {
    let p = u64::from(field.characteristic());
    let r = digits
        .bytes()
        .fold(0u64, |acc, d| (acc * 10 + u64::from(d - b'0')) % p);
    r as u32
}

fn parse_polynomial(
    ring: &Ring,
    vars: &[String],
    toks: &[(usize, Tok<'_>)],
    line: usize,
) -> Result<Polynomial, ParseError> {
    let field = &ring.field;
    let n = vars.len();
    let mut terms: Vec<(i64, Monomial)> = Vec::new();
    let mut pos = 0;
    let end_col = toks.last().map_or(1, |t| t.0 + 1);
    let expected = |pos: usize, what: &str| {
        let (col, found) = match toks.get(pos) {
            Some((c, t)) => (*c, format!("found {t}")),
            None => (end_col, "found end of line".into()),
        };
        err(line, col, ParseErrorKind::Malformed(format!("expected {what}, {found}")))
    };
    loop {
        let mut negative = false;
        match toks.get(pos) {
            Some((_, Tok::Plus)) => pos += 1,
            Some((_, Tok::Minus)) => {
                negative = true;
                pos += 1;
            }
            _ if pos > 0 => return Err(expected(pos, "`+` or `-`")),
            _ => {}
        }
        let mut coeff = 1u32;
        let mut exps = vec![0u32; n];
        loop {
            match toks.get(pos) {
                Some((_, Tok::Int(d))) => {
                    coeff = field.mul(coeff, residue(field, d));
                    pos += 1;
                }
                Some((col, Tok::Ident(name))) => {
                    let v = vars
                        .iter()
                        .position(|x| x == name)
                        .ok_or_else(|| err(line, *col, ParseErrorKind::UndeclaredVariable((*name).into())))?;
                    pos += 1;
                    let mut e = 1u32;
                    if let Some((_, Tok::Caret)) = toks.get(pos) {
                        pos += 1;
                        match toks.get(pos) {
                            Some((col, Tok::Int(d))) => {
                                e = d.parse().map_err(|_| {
                                    err(line, *col, ParseErrorKind::Malformed(format!("exponent `{d}` too large")))
                                })?;
                                pos += 1;
                            }
                            _ => return Err(expected(pos, "an exponent")),
                        }
                    }
                    exps[v] = exps[v].checked_add(e).ok_or_else(|| {
                        err(line, toks[pos - 1].0, ParseErrorKind::Malformed("exponent too large".into()))
                    })?;
                }
                _ => return Err(expected(pos, "a coefficient or variable")),
            }
            match toks.get(pos) {
                Some((_, Tok::Star)) => pos += 1,
                _ => break,
            }
        }
        if negative {
            coeff = field.neg(coeff);
        }
        let mon = Monomial::from_exponents(&exps)
            .map_err(|e| err(line, 1, ParseErrorKind::Malformed(e.to_string())))?;
        terms.push((i64::from(coeff), mon));
        if pos == toks.len() {
            break;
        }
    }
    ring.from_terms(terms)
        .map_err(|e| err(line, 1, ParseErrorKind::Malformed(e.to_string())))
}

/// Parses a system file. `name` becomes the system's name.
pub fn parse_system_file(text: &str, name: &str) -> Result<BenchmarkSystem, ParseError> {
    let mut header = Header {
        vars: None,
        field: PrimeField::default(),
        order: OrderKind::DegRevLex,
    };
    let mut ring: Option<Ring> = None;
    let mut polynomials = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        if let Some((key, value)) = trimmed.split_once(':') {
            let key = key.trim();
            if !matches!(key, "vars" | "char" | "order") {
                return Err(err(line, indent + 1, ParseErrorKind::Malformed(format!("unknown header `{key}`"))));
            }
            if ring.is_some() {
                return Err(err(line, indent + 1, ParseErrorKind::LateHeader(key.into())));
            }
            parse_header(key, value, line, indent + key.len() + 2, &mut header)?;
            continue;
        }
        let vars = header
            .vars
            .as_ref()
            .ok_or_else(|| err(line, indent + 1, ParseErrorKind::MissingVariables))?;
        let r = ring.get_or_insert_with(|| Ring::new(header.field, TermOrder::new(header.order, vars.len())));
        let toks = tokenize(content, line, 0)?;
        polynomials.push(parse_polynomial(r, vars, &toks, line)?);
    }
    let vars = header
        .vars
        .ok_or_else(|| err(last_line.max(1), 1, ParseErrorKind::MissingVariables))?;
    let ring = ring.ok_or_else(|| err(last_line.max(1), 1, ParseErrorKind::Empty))?;
    Ok(BenchmarkSystem {
        name: name.into(),
        variables: vars,
        ring,
        polynomials,
        homogenized: false,
        expected: None,
    })
}

/// Writes `polys` in the file format above: least non-negative residues,
/// terms in descending order.
pub fn format_system(ring: &Ring, variables: &[String], polys: &[Polynomial]) -> String {
    let names: Vec<&str> = variables.iter().map(String::as_str).collect();
    let mut out = format!(
        "vars: {}\nchar: {}\norder: {}\n",
        variables.join(","),
        ring.field.characteristic(),
        ring.order.name()
    );
    for f in polys {
        out.push_str(&ring.format(f, &names));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_polynomial_over_gf7() {
        let s = parse_system_file("vars: x\nchar: 7\norder: lex\nx^2 - 1", "t").unwrap();
        assert_eq!(s.ring.field.characteristic(), 7);
        assert_eq!(s.ring.format(&s.polynomials[0], &["x"]), "x^2 + 6");
    }

    #[test]
    fn mmt92_file() {
        let text = "# MMT92\nvars: x,y,z,t\nchar: 32003\norder: degrevlex\n\
                    y*z^3 - x^2*t^2\nx*z^2 - y^2*t\nx^2*y - z^2*t   # last\n";
        let s = parse_system_file(text, "mmt92").unwrap();
        assert_eq!(s.polynomials, sigbasis::bench::gen_mmt92().polynomials);
    }

    #[test]
    fn undeclared_variable_position() {
        let e = parse_system_file("vars: x\nx + q", "t").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        assert_eq!(e.kind, ParseErrorKind::UndeclaredVariable("q".into()));
    }

    #[test]
    fn bad_headers() {
        let e = parse_system_file("vars: x\nchar: 8\nx", "t").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NotPrime(8));
        assert_eq!(e.line, 2);
        let e = parse_system_file("x + 1", "t").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingVariables);
        let e = parse_system_file("vars: x\norder: elim\nx", "t").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnknownOrder(_)));
        let e = parse_system_file("vars: x\nx\nchar: 7", "t").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::LateHeader(_)));
    }

    #[test]
    fn malformed_tokens() {
        let e = parse_system_file("vars: x,y\nx + * y", "t").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = parse_system_file("vars: x,y\nx y", "t").unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_system_file("vars: x\nx^", "t").unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_system_file("vars: x\nx % 2", "t").unwrap_err();
        assert_eq!(e.column, 3);
    }

    #[test]
    fn coefficients_reduce_and_combine() {
        let s = parse_system_file("vars: x,y\nchar: 5\n12*x*3*y + x*y - 10 + y*x", "t").unwrap();
        // 36xy + xy + xy = 38xy ≡ 3xy, and −10 ≡ 0.
        assert_eq!(s.ring.format(&s.polynomials[0], &["x", "y"]), "3*x*y");
    }

    #[test]
    fn format_round_trip() {
        let s = sigbasis::bench::gen_cyclic(4).unwrap();
        let text = format_system(&s.ring, &s.variables, &s.polynomials);
        let back = parse_system_file(&text, "c4").unwrap();
        assert_eq!(back.polynomials, s.polynomials);
        assert_eq!(format_system(&back.ring, &back.variables, &back.polynomials), text);
    }
}
