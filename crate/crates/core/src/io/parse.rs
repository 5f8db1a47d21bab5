//! Text syntax for degree-two polynomials and linear forms.
//!
//! ```text
//! poly   := term ('+' term)*
//! term   := factor ('*' factor)*        one optional coefficient, degree 2
//! factor := coef | var ['^' int]
//! coef   := rational | '(' ['-'] rational ')' | '-inf' | '(' '-inf' ')'
//! ```
//!
//! `⊕` and `⊙` are accepted for `+` and `*`. Positions in errors are 1-based
//! character columns.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::factor::LinForm;
use crate::quadratic::{Monomial, QuadPoly};
use crate::semiring::{parse_rational, Rational, TropScalar};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    NegInf,
    Var(usize),
    Plus,
    Star,
    Caret,
    Minus,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(s) => write!(f, "number `{s}`"),
            Tok::NegInf => f.write_str("`-inf`"),
            Tok::Var(i) => write!(f, "variable `{}`", ["X", "Y", "Z"][*i]),
            Tok::Plus => f.write_str("`+`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
        }
    }
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' | '⊕' => Tok::Plus,
            '*' | '⊙' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'X' => Tok::Var(0),
            'Y' => Tok::Var(1),
            'Z' => Tok::Var(2),
            '-' => {
                let rest: String = chars[i + 1..].iter().take(3).collect();
                if rest == "inf" {
                    i += 3;
                    Tok::NegInf
                } else {
                    Tok::Minus
                }
            }
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && (chars[i + 1].is_ascii_digit() || chars[i + 1] == '/') {
                    i += 1;
                }
                Tok::Num(chars[start..=i].iter().collect())
            }
            _ => return Err(syntax(pos, format!("unexpected character `{c}`"))),
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser { toks: lex(text)?, at: 0, end: text.chars().count() + 1 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        let pos = self.pos();
        match self.next() {
            Some((_, t)) if t == want => Ok(()),
            Some((_, t)) => Err(syntax(pos, format!("expected {want}, found {t}"))),
            None => Err(syntax(pos, format!("expected {want}, found end of input"))),
        }
    }

    fn number(&self, pos: usize, text: &str) -> Result<Rational> {
        parse_rational(text).map_err(|e| syntax(pos, e.to_string()))
    }

    /// A product of factors: returns the coefficient and the exponent vector.
    fn term(&mut self) -> Result<(usize, TropScalar, [u32; 3])> {
        let start = self.pos();
        let mut coef: Option<TropScalar> = None;
        let mut exp = [0u32; 3];
        loop {
            let pos = self.pos();
            let set_coef = |coef: &mut Option<TropScalar>, c: TropScalar| {
                if coef.replace(c).is_some() {
                    return Err(syntax(pos, "term has more than one coefficient"));
                }
                Ok(())
            };
            match self.next() {
                Some((_, Tok::Num(n))) => {
                    let v = self.number(pos, &n)?;
                    set_coef(&mut coef, TropScalar::Finite(v))?;
                }
                Some((_, Tok::NegInf)) => set_coef(&mut coef, TropScalar::Bottom)?,
                Some((_, Tok::LParen)) => {
                    let c = match self.next() {
                        Some((_, Tok::NegInf)) => TropScalar::Bottom,
                        Some((p, Tok::Minus)) => match self.next() {
                            Some((_, Tok::Num(n))) => TropScalar::Finite(-self.number(p, &n)?),
                            _ => return Err(syntax(p, "expected a number after `-`")),
                        },
                        Some((p, Tok::Num(n))) => TropScalar::Finite(self.number(p, &n)?),
                        _ => return Err(syntax(pos, "expected a coefficient inside parentheses")),
                    };
                    self.expect(Tok::RParen)?;
                    set_coef(&mut coef, c)?;
                }
                Some((_, Tok::Var(v))) => {
                    let mut power = 1;
                    if self.peek() == Some(&Tok::Caret) {
                        self.next();
                        let p = self.pos();
                        match self.next() {
                            Some((_, Tok::Num(n))) => {
                                power = n.parse().map_err(|_| syntax(p, format!("bad exponent `{n}`")))?;
                            }
                            _ => return Err(syntax(p, "expected an exponent after `^`")),
                        }
                    }
                    exp[v] += power;
                }
                Some((_, Tok::Minus)) => {
                    return Err(syntax(pos, "negative coefficients must be parenthesized, e.g. (-4)*X^2"))
                }
                Some((_, t)) => return Err(syntax(pos, format!("unexpected {t}"))),
                None => return Err(syntax(pos, "unexpected end of input")),
            }
            if self.peek() == Some(&Tok::Star) {
                self.next();
            } else {
                break;
            }
        }
        Ok((start, coef.unwrap_or_else(TropScalar::unit), exp))
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(syntax(self.pos(), format!("unexpected {t}"))),
        }
    }
}

/// Parses a tropical polynomial of degree two.
///
/// Repeated monomials combine by `⊕`; absent mixed monomials are `-inf`.
pub fn parse_poly(text: &str) -> Result<QuadPoly> {
    let mut p = Parser::new(text)?;
    let mut coeffs = [(); 6].map(|_| TropScalar::Bottom);
    loop {
        let (pos, c, exp) = p.term()?;
        let degree: u32 = exp.iter().sum();
        if degree != 2 {
            return Err(syntax(pos, format!("term has degree {degree}, expected 2")));
        }
        let m = Monomial::from_exponent(exp.map(i64::from)).expect("degree-two exponent");
        coeffs[m.index()] = coeffs[m.index()].oplus(&c);
        if p.peek() == Some(&Tok::Plus) {
            p.next();
        } else {
            break;
        }
    }
    p.finish()?;
    QuadPoly::new(coeffs)
}

/// Parses a linear form such as `1*X + 6*Y + Z`.
pub fn parse_linform(text: &str) -> Result<LinForm> {
    let mut p = Parser::new(text)?;
    let mut coeffs = [(); 3].map(|_| TropScalar::Bottom);
    loop {
        let (pos, c, exp) = p.term()?;
        let Some(v) = (exp.iter().sum::<u32>() == 1).then(|| exp.iter().position(|&e| e == 1)).flatten() else {
            return Err(syntax(pos, "expected a degree-one term"));
        };
        coeffs[v] = coeffs[v].oplus(&c);
        if p.peek() == Some(&Tok::Plus) {
            p.next();
        } else {
            break;
        }
    }
    p.finish()?;
    LinForm::new(coeffs)
}

fn write_term(out: &mut impl fmt::Write, c: &Rational, var: &str) -> fmt::Result {
    if c.is_zero() {
        write!(out, "{var}")
    } else if c.is_negative() {
        write!(out, "({c})*{var}")
    } else {
        write!(out, "{c}*{var}")
    }
}

fn write_sum<'a>(
    out: &mut impl fmt::Write,
    terms: impl Iterator<Item = (&'a TropScalar, &'static str)>,
) -> fmt::Result {
    let mut first = true;
    for (c, var) in terms {
        let TropScalar::Finite(c) = c else { continue };
        if !first {
            out.write_str(" + ")?;
        }
        first = false;
        write_term(out, c, var)?;
    }
    if first {
        out.write_str("-inf")?;
    }
    Ok(())
}

/// Canonical text: monomials in the order `X^2, Y^2, Z^2, X*Y, Y*Z, X*Z`,
/// `-inf` terms dropped, zero coefficients omitted, negatives parenthesized.
pub fn format_poly(p: &QuadPoly) -> String {
    let mut out = String::new();
    write_sum(&mut out, Monomial::ALL.iter().map(|m| (p.coeff(*m), m.name()))).expect("writing to a String");
    out
}

pub fn format_linform(f: &LinForm, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    write_sum(out, f.coeffs().iter().zip(["X", "Y", "Z"]))
}

pub fn format_product(f: &LinForm, g: &LinForm) -> String {
    format!("({f}) * ({g})")
}
