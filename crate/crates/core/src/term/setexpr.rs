use std::fmt;

use super::{first_uninterpretable, Term};
use crate::error::{Error, Result};
use crate::poly::VarName;

/// A Boolean-algebra expression over classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SetExpr {
    Var(VarName),
    Universe,
    Empty,
    Union(Box<SetExpr>, Box<SetExpr>),
    Intersection(Box<SetExpr>, Box<SetExpr>),
    Complement(Box<SetExpr>),
}

impl SetExpr {
    fn union(a: SetExpr, b: SetExpr) -> SetExpr {
        match (a, b) {
            (SetExpr::Empty, e) | (e, SetExpr::Empty) => e,
            (a, b) => SetExpr::Union(Box::new(a), Box::new(b)),
        }
    }

    fn intersection(a: SetExpr, b: SetExpr) -> SetExpr {
        match (a, b) {
            (SetExpr::Universe, e) | (e, SetExpr::Universe) => e,
            (a, b) => SetExpr::Intersection(Box::new(a), Box::new(b)),
        }
    }

    /// Evaluates to a bitmask given the universe mask and each variable's subset.
    pub fn eval_with(
        &self,
        universe: u32,
        value: &impl Fn(&VarName) -> Option<u32>,
    ) -> Result<u32> {
        Ok(match self {
            SetExpr::Var(v) => value(v).ok_or_else(|| Error::Unassigned(v.clone()))?,
            SetExpr::Universe => universe,
            SetExpr::Empty => 0,
            SetExpr::Union(a, b) => a.eval_with(universe, value)? | b.eval_with(universe, value)?,
            SetExpr::Intersection(a, b) => {
                a.eval_with(universe, value)? & b.eval_with(universe, value)?
            }
            SetExpr::Complement(a) => universe & !a.eval_with(universe, value)?,
        })
    }

    fn fmt_child(
        &self,
        parent_is: fn(&SetExpr) -> bool,
        f: &mut fmt::Formatter<'_>,
    ) -> fmt::Result {
        match self {
            SetExpr::Union(..) | SetExpr::Intersection(..) if !parent_is(self) => {
                write!(f, "({self})")
            }
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for SetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetExpr::Var(v) => write!(f, "{v}"),
            SetExpr::Universe => f.write_str("U"),
            SetExpr::Empty => f.write_str("∅"),
            SetExpr::Union(a, b) => {
                a.fmt_child(|e| matches!(e, SetExpr::Union(..)), f)?;
                f.write_str(" ∪ ")?;
                b.fmt_child(|_| false, f)
            }
            SetExpr::Intersection(a, b) => {
                a.fmt_child(|e| matches!(e, SetExpr::Intersection(..)), f)?;
                f.write_str(" ∩ ")?;
                b.fmt_child(|_| false, f)
            }
            SetExpr::Complement(a) => {
                a.fmt_child(|_| false, f)?;
                f.write_str("′")
            }
        }
    }
}

/// Reads a totally interpretable term as a set expression: sums become
/// unions, products intersections, and `s - t` becomes `s ∩ t′`.
pub fn to_set_expression(t: &Term) -> Result<SetExpr> {
    if let Some(bad) = first_uninterpretable(t) {
        return Err(Error::NotTotallyInterpretable(Box::new(bad.clone())));
    }
    Ok(translate(t))
}

fn translate(t: &Term) -> SetExpr {
    match t {
        Term::Var(v) => SetExpr::Var(v.clone()),
        Term::Zero => SetExpr::Empty,
        Term::One => SetExpr::Universe,
        Term::IntLit(n) if *n == 0u8.into() => SetExpr::Empty,
        Term::IntLit(_) => SetExpr::Universe,
        Term::Add(a, b) => SetExpr::union(translate(a), translate(b)),
        Term::Mul(a, b) => SetExpr::intersection(translate(a), translate(b)),
        Term::Sub(a, b) => {
            SetExpr::intersection(translate(a), SetExpr::Complement(Box::new(translate(b))))
        }
        Term::Pow(a, _) => translate(a),
        Term::Neg(_) => unreachable!("negation is rejected before translation"),
    }
}
