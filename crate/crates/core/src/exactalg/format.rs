//! Text form of polynomials: `3*x0^2*x1 - 1/2*x2 + x3`.
//!
//! Printing is canonical (descending lex order, coefficient 1 omitted), so
//! `print(parse(print(f))) == print(f)` byte for byte. Parsing is lenient
//! about whitespace, line breaks, repeated factors and numeric factors.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::mpoly::MPoly;
use super::ring::Q;
use crate::error::{Error, Result};

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { format!("x{i}") } else { format!("x{i}^{a}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer { s: s.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: self.line, col: self.col, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(&b) = self.s.get(self.pos) {
            if b == b'\n' {
                self.line += 1;
                self.col = 1;
            } else if b.is_ascii_whitespace() {
                self.col += 1;
            } else {
                break;
            }
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
        self.col += 1;
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        Ok(txt.parse().expect("digits parse"))
    }
}

/// Parses the text form. With `nvars = None` the variable count is one more
/// than the largest index used.
pub fn parse_poly(text: &str, nvars: Option<usize>) -> Result<MPoly> {
    let mut lx = Lexer::new(text);
    let mut terms: Vec<(Vec<(usize, u32)>, Q)> = Vec::new();
    let mut maxvar = 0usize;
    let mut first = true;
    loop {
        let mut sign = Q::one();
        match lx.peek() {
            None if first => return lx.err("empty polynomial"),
            None => break,
            Some(b'+') => lx.bump(),
            Some(b'-') => {
                lx.bump();
                sign = -sign;
            }
            Some(_) if first => {}
            Some(c) => return lx.err(format!("expected '+' or '-', found '{}'", c as char)),
        }
        first = false;
        let mut coeff = sign;
        let mut mono = Vec::new();
        loop {
            match lx.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let n = lx.digits()?;
                    let mut c = Q::from_integer(n);
                    if lx.peek() == Some(b'/') {
                        lx.bump();
                        let d = lx.digits()?;
                        if d.is_zero() {
                            return lx.err("zero denominator");
                        }
                        c /= Q::from_integer(d);
                    }
                    coeff *= c;
                }
                Some(b'x') => {
                    lx.bump();
                    if !lx.s.get(lx.pos).is_some_and(|b| b.is_ascii_digit()) {
                        return lx.err("expected variable index after 'x'");
                    }
                    let i: usize = lx
                        .digits()?
                        .try_into()
                        .or_else(|_| lx.err("variable index too large"))?;
                    let mut a = 1u32;
                    if lx.peek() == Some(b'^') {
                        lx.bump();
                        a = lx.digits()?.try_into().or_else(|_| lx.err("exponent too large"))?;
                    }
                    if let Some(n) = nvars {
                        if i >= n {
                            return lx.err(format!("variable x{i} out of range for {n} variables"));
                        }
                    }
                    maxvar = maxvar.max(i + 1);
                    mono.push((i, a));
                }
                Some(c) => return lx.err(format!("unexpected character '{}'", c as char)),
                None => return lx.err("unexpected end of input"),
            }
            if lx.peek() == Some(b'*') {
                lx.bump();
            } else {
                break;
            }
        }
        terms.push((mono, coeff));
    }
    let n = nvars.unwrap_or(maxvar);
    Ok(MPoly::from_terms(
        n,
        terms.into_iter().map(|(mono, c)| {
            let mut e = vec![0u32; n];
            for (i, a) in mono {
                e[i] += a;
            }
            (e, c)
        }),
    ))
}
