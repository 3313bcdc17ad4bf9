//! Term language: the syntax tree of Boole's terms, its concrete grammar,
//! rendering, and compilation to [`Polynomial`].
//!
//! Concrete syntax:
//!
//! ```text
//! expr   := ['-'] prod (('+' | '-') prod)*
//! prod   := factor ('*' factor)*
//! factor := INT | IDENT | '(' expr ')' | factor '^' INT
//! ```
//!
//! Multiplication must be written with `*`.

mod format;
mod parser;
mod setexpr;

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::poly::{Polynomial, VarName};

pub use format::{format_poly, format_term};
pub use parser::{parse, parse_equation, parse_sentence, SentenceSyntax};
pub use setexpr::{to_set_expression, SetExpr};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(VarName),
    Zero,
    One,
    /// Integer literal. The parser only produces this for values of 2 and up.
    IntLit(BigUint),
    Mul(Box<Term>, Box<Term>),
    Add(Box<Term>, Box<Term>),
    Sub(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    /// Exponent is at least 1.
    Pow(Box<Term>, u32),
}

#[allow(clippy::should_implement_trait)]
impl Term {
    pub fn var(v: VarName) -> Term {
        Term::Var(v)
    }

    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Term, b: Term) -> Term {
        Term::Sub(Box::new(a), Box::new(b))
    }

    pub fn neg(a: Term) -> Term {
        Term::Neg(Box::new(a))
    }

    /// Panics if `k == 0`.
    pub fn pow(a: Term, k: u32) -> Term {
        assert!(k >= 1, "exponent must be at least 1");
        Term::Pow(Box::new(a), k)
    }

    /// Integer literal, normalized so 0 and 1 become [`Term::Zero`] and [`Term::One`].
    pub fn int(n: impl Into<BigUint>) -> Term {
        let n = n.into();
        if n == BigUint::from(0u8) {
            Term::Zero
        } else if n == BigUint::from(1u8) {
            Term::One
        } else {
            Term::IntLit(n)
        }
    }

    pub fn variables(&self) -> BTreeSet<VarName> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<VarName>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Zero | Term::One | Term::IntLit(_) => {}
            Term::Mul(a, b) | Term::Add(a, b) | Term::Sub(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Neg(a) | Term::Pow(a, _) => a.collect_vars(out),
        }
    }
}

impl std::fmt::Display for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_term(self))
    }
}

impl std::fmt::Debug for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Term({})", format_term(self))
    }
}

/// Compiles a term to its canonical polynomial.
pub fn term_to_poly(t: &Term) -> Polynomial {
    match t {
        Term::Var(v) => Polynomial::var(v.clone()),
        Term::Zero => Polynomial::zero(),
        Term::One => Polynomial::one(),
        Term::IntLit(n) => Polynomial::constant(num_bigint::BigInt::from(n.clone())),
        Term::Mul(a, b) => term_to_poly(a) * term_to_poly(b),
        Term::Add(a, b) => term_to_poly(a) + term_to_poly(b),
        Term::Sub(a, b) => term_to_poly(a) - term_to_poly(b),
        Term::Neg(a) => -term_to_poly(a),
        Term::Pow(a, k) => term_to_poly(a).pow(*k),
    }
}

/// Whether the term is defined under the partial class semantics for every
/// assignment of classes: sums must be disjoint and differences contained,
/// identically.
pub fn is_totally_interpretable(t: &Term) -> bool {
    first_uninterpretable(t).is_none()
}

/// The innermost, leftmost subterm that breaks total interpretability.
pub(crate) fn first_uninterpretable(t: &Term) -> Option<&Term> {
    match t {
        Term::Var(_) | Term::Zero | Term::One => None,
        Term::IntLit(n) if *n <= BigUint::from(1u8) => None,
        Term::IntLit(_) | Term::Neg(_) => Some(t),
        Term::Pow(a, _) => first_uninterpretable(a),
        Term::Mul(a, b) => first_uninterpretable(a).or_else(|| first_uninterpretable(b)),
        Term::Add(a, b) => first_uninterpretable(a)
            .or_else(|| first_uninterpretable(b))
            .or_else(|| {
                let overlap = term_to_poly(a) * term_to_poly(b);
                (!overlap.is_zero()).then_some(t)
            }),
        Term::Sub(a, b) => first_uninterpretable(a)
            .or_else(|| first_uninterpretable(b))
            .or_else(|| {
                let escape = term_to_poly(b) * (Polynomial::one() - term_to_poly(a));
                (!escape.is_zero()).then_some(t)
            }),
    }
}
