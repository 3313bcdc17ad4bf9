use std::fmt::{self, Write};

use num_traits::{One, Signed};

use super::Term;
use crate::poly::Polynomial;

/// Renders a polynomial: constant first, then monomials by degree and
/// lexicographic order, unit coefficients elided, e.g. `-1 + x - 2*x*y`.
pub fn format_poly(p: &Polynomial) -> String {
    p.to_string()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            for (j, v) in m.vars().iter().enumerate() {
                if j > 0 {
                    f.write_char('*')?;
                }
                f.write_str(v.as_str())?;
            }
        }
        Ok(())
    }
}

/// Renders a term compactly with the fewest parentheses that parse back to
/// the same tree.
pub fn format_term(t: &Term) -> String {
    let mut out = String::new();
    expr(t, &mut out);
    out
}

fn expr(t: &Term, out: &mut String) {
    match t {
        Term::Add(a, b) | Term::Sub(a, b) => {
            expr(a, out);
            out.push(if matches!(t, Term::Add(..)) { '+' } else { '-' });
            prod(b, out);
        }
        Term::Neg(a) => {
            out.push('-');
            prod(a, out);
        }
        _ => prod(t, out),
    }
}

fn prod(t: &Term, out: &mut String) {
    match t {
        Term::Mul(a, b) => {
            prod(a, out);
            out.push('*');
            factor(b, out);
        }
        Term::Add(..) | Term::Sub(..) | Term::Neg(_) => parenthesized(t, out),
        _ => factor(t, out),
    }
}

fn factor(t: &Term, out: &mut String) {
    match t {
        Term::Var(v) => out.push_str(v.as_str()),
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::IntLit(n) => {
            let _ = write!(out, "{n}");
        }
        Term::Pow(a, k) => {
            factor(a, out);
            let _ = write!(out, "^{k}");
        }
        Term::Mul(..) | Term::Add(..) | Term::Sub(..) | Term::Neg(_) => parenthesized(t, out),
    }
}

fn parenthesized(t: &Term, out: &mut String) {
    out.push('(');
    expr(t, out);
    out.push(')');
}
