use num_bigint::BigUint;

use super::Term;
use crate::error::{ParseError, ParseErrorKind};
use crate::poly::VarName;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigUint),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Eq,
    Amp,
    Arrow,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => n.to_string(),
            Tok::Ident(s) => s.clone(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Eq => "'='".into(),
            Tok::Amp => "'&'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'=' => Tok::Eq,
            b'&' => Tok::Amp,
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..=i];
                Tok::Int(digits.parse().expect("ascii digits"))
            }
            b if b.is_ascii_alphabetic() => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                Tok::Ident(text[start..=i].to_string())
            }
            _ => {
                let c = text[start..].chars().next().expect("in bounds");
                return Err(ParseError {
                    offset: start,
                    kind: ParseErrorKind::BadCharacter(c),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::Eof, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError {
            offset: self.offset(),
            kind: ParseErrorKind::Unexpected {
                found: self.peek().describe(),
                expected,
            },
        }
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn expr(&mut self) -> Result<Term, ParseError> {
        let mut acc = if *self.peek() == Tok::Minus {
            self.bump();
            Term::neg(self.prod()?)
        } else {
            self.prod()?
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Term::add(acc, self.prod()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = Term::sub(acc, self.prod()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn prod(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = Term::mul(acc, self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Term, ParseError> {
        let mut base = self.primary()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let offset = self.offset();
            let Tok::Int(n) = self.peek().clone() else {
                return Err(self.unexpected("an integer exponent"));
            };
            self.bump();
            let k: u32 = n.try_into().map_err(|_| ParseError {
                offset,
                kind: ParseErrorKind::ExponentTooLarge,
            })?;
            if k == 0 {
                return Err(ParseError {
                    offset,
                    kind: ParseErrorKind::ZeroExponent,
                });
            }
            base = Term::pow(base, k);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Term::int(n))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Term::Var(
                    VarName::new(name).expect("lexer yields valid identifiers"),
                ))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, variable or '('")),
        }
    }

    /// `expr ['=' expr]`, with a missing right side read as 0.
    fn equation(&mut self) -> Result<(Term, Term), ParseError> {
        let lhs = self.expr()?;
        if *self.peek() == Tok::Eq {
            self.bump();
            Ok((lhs, self.expr()?))
        } else {
            Ok((lhs, Term::Zero))
        }
    }

    fn strict_equation(&mut self) -> Result<(Term, Term), ParseError> {
        let lhs = self.expr()?;
        self.expect(Tok::Eq, "'='")?;
        Ok((lhs, self.expr()?))
    }

    fn end(&mut self) -> Result<(), ParseError> {
        self.expect(Tok::Eof, "end of input")
    }
}

/// Parses a single term.
pub fn parse(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(text)?;
    let t = p.expr()?;
    p.end()?;
    Ok(t)
}

/// Parses `s = t`, or a bare term `s` read as `s = 0`.
pub fn parse_equation(text: &str) -> Result<(Term, Term), ParseError> {
    let mut p = Parser::new(text)?;
    let eq = p.equation()?;
    p.end()?;
    Ok(eq)
}

/// An equational Horn sentence: `a1 = b1 & a2 = b2 -> c = d`, or a bare
/// equation `c = d` with no antecedents.
pub type SentenceSyntax = (Vec<(Term, Term)>, (Term, Term));

pub fn parse_sentence(text: &str) -> Result<SentenceSyntax, ParseError> {
    let mut p = Parser::new(text)?;
    let first = p.strict_equation()?;
    let mut eqs = vec![first];
    while *p.peek() == Tok::Amp {
        p.bump();
        eqs.push(p.strict_equation()?);
    }
    match p.peek() {
        Tok::Arrow => {
            p.bump();
            let consequent = p.strict_equation()?;
            p.end()?;
            Ok((eqs, consequent))
        }
        Tok::Eof if eqs.len() == 1 => {
            let consequent = eqs.pop().expect("one equation");
            Ok((eqs, consequent))
        }
        _ => Err(p.unexpected("'->'")),
    }
}
