//! Executable semantics over a finite universe `U = {0, …, n-1}`.
//!
//! * Boole's partial algebra of classes: `+` is union of disjoint classes,
//!   `-` is difference of a contained class, anything else is undefined.
//! * The ring `ℤ^U` of signed multisets, evaluated pointwise. Characteristic
//!   functions are exactly its idempotents.
//!
//! Subsets are bitmasks, element `i` at bit `i`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{check_cap, Polynomial, VarName, DEFAULT_MAX_VARS};
use crate::term::{format_term, Term};

pub const MAX_UNIVERSE: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Universe {
    size: usize,
}

impl Universe {
    pub fn new(size: usize) -> Result<Self> {
        if size > MAX_UNIVERSE {
            Err(Error::UniverseTooLarge(size))
        } else {
            Ok(Universe { size })
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Bitmask of the whole universe.
    pub fn mask(&self) -> u32 {
        ((1u64 << self.size) - 1) as u32
    }

    pub fn contains(&self, subset: u32) -> bool {
        subset & !self.mask() == 0
    }

    /// Every subset in increasing bitmask order.
    pub fn subsets(&self) -> impl Iterator<Item = u32> {
        0..=self.mask()
    }

    fn check(&self, subset: u32) -> Result<()> {
        if self.contains(subset) {
            Ok(())
        } else {
            Err(Error::SubsetOutOfUniverse {
                mask: subset,
                size: self.size,
            })
        }
    }
}

/// Renders a subset as `{0,2}`.
pub fn format_subset(subset: u32) -> String {
    let elems: Vec<String> = (0..32)
        .filter(|i| subset >> i & 1 == 1)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", elems.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassAssignment {
    universe: Universe,
    map: BTreeMap<VarName, u32>,
}

impl ClassAssignment {
    pub fn new(universe: Universe, map: BTreeMap<VarName, u32>) -> Result<Self> {
        for &s in map.values() {
            universe.check(s)?;
        }
        Ok(ClassAssignment { universe, map })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn get(&self, v: &VarName) -> Option<u32> {
        self.map.get(v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VarName, u32)> {
        self.map.iter().map(|(v, &s)| (v, s))
    }
}

impl fmt::Display for ClassAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U={}", self.universe.size)?;
        for (v, s) in self.iter() {
            write!(f, "; {v}={}", format_subset(s))?;
        }
        Ok(())
    }
}

/// An element of `ℤ^U`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multiset {
    values: Vec<BigInt>,
}

impl Multiset {
    pub fn new(values: Vec<BigInt>) -> Self {
        Multiset { values }
    }

    pub fn constant(universe: Universe, c: &BigInt) -> Self {
        Multiset {
            values: vec![c.clone(); universe.size],
        }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// The subset this is the characteristic function of, if it is one.
    pub fn as_subset(&self) -> Option<u32> {
        let mut mask = 0u32;
        for (i, v) in self.values.iter().enumerate() {
            if v.is_one() {
                mask |= 1 << i;
            } else if !v.is_zero() {
                return None;
            }
        }
        Some(mask)
    }

    fn zip(&self, other: &Multiset, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Multiset {
        Multiset {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Multiset) -> Multiset {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Multiset) -> Multiset {
        self.zip(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Multiset) -> Multiset {
        self.zip(other, |a, b| a * b)
    }

    pub fn neg(&self) -> Multiset {
        Multiset {
            values: self.values.iter().map(|a| -a).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Multiset {
        Multiset {
            values: self
                .values
                .iter()
                .map(|a| num_traits::pow(a.clone(), k as usize))
                .collect(),
        }
    }

    pub fn scale(&self, n: &BigInt) -> Multiset {
        Multiset {
            values: self.values.iter().map(|a| a * n).collect(),
        }
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", vals.join(","))
    }
}

/// The characteristic function of `subset`.
pub fn chi(subset: u32, universe: Universe) -> Result<Multiset> {
    universe.check(subset)?;
    Ok(Multiset {
        values: (0..universe.size)
            .map(|i| BigInt::from(subset >> i & 1))
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultisetAssignment {
    universe: Universe,
    map: BTreeMap<VarName, Multiset>,
}

impl MultisetAssignment {
    pub fn new(universe: Universe, map: BTreeMap<VarName, Multiset>) -> Result<Self> {
        for m in map.values() {
            if m.len() != universe.size {
                return Err(Error::UniverseMismatch {
                    expected: universe.size,
                    got: m.len(),
                });
            }
        }
        Ok(MultisetAssignment { universe, map })
    }

    /// `χ ∘ a`.
    pub fn from_classes(a: &ClassAssignment) -> Self {
        let map = a
            .iter()
            .map(|(v, s)| (v.clone(), chi(s, a.universe).expect("validated subset")))
            .collect();
        MultisetAssignment {
            universe: a.universe,
            map,
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn get(&self, v: &VarName) -> Option<&Multiset> {
        self.map.get(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UndefinedReason {
    /// `s + t` with overlapping operands.
    Overlap,
    /// `s - t` with `t` not contained in `s`.
    NotContained,
    UnaryMinus,
    /// Literal other than 0 or 1.
    Literal,
}

/// Why a term has no class value: the innermost offending subterm and the
/// condition it failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Undefined {
    pub subterm: Term,
    pub reason: UndefinedReason,
}

fn operand(t: &Term) -> String {
    match t {
        Term::Var(_) | Term::Zero | Term::One | Term::IntLit(_) | Term::Pow(..) => format_term(t),
        _ => format!("({})", format_term(t)),
    }
}

impl fmt::Display for Undefined {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = format_term(&self.subterm);
        match (&self.subterm, self.reason) {
            (Term::Add(a, b), UndefinedReason::Overlap) => {
                write!(f, "{whole} requires {}∩{}=∅", operand(a), operand(b))
            }
            (Term::Sub(a, b), UndefinedReason::NotContained) => {
                write!(f, "{whole} requires {}⊆{}", operand(b), operand(a))
            }
            (_, UndefinedReason::UnaryMinus) => write!(f, "{whole} uses unary minus"),
            (_, UndefinedReason::Literal) => write!(f, "{whole} is not 0 or 1"),
            (_, reason) => write!(f, "{whole}: {reason:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartialValue {
    Defined(u32),
    Undefined(Undefined),
}

impl PartialValue {
    pub fn defined(&self) -> Option<u32> {
        match self {
            PartialValue::Defined(s) => Some(*s),
            PartialValue::Undefined(_) => None,
        }
    }
}

/// Evaluates a term in Boole's partial algebra of classes. Both operands are
/// always evaluated and the leftmost innermost failure is reported.
pub fn eval_partial(t: &Term, a: &ClassAssignment) -> Result<PartialValue> {
    use PartialValue::*;
    let undefined = |reason| {
        Undefined(self::Undefined {
            subterm: t.clone(),
            reason,
        })
    };
    Ok(match t {
        Term::Var(v) => Defined(a.get(v).ok_or_else(|| Error::Unassigned(v.clone()))?),
        Term::Zero => Defined(0),
        Term::One => Defined(a.universe.mask()),
        Term::IntLit(n) if n.is_zero() => Defined(0),
        Term::IntLit(n) if n.is_one() => Defined(a.universe.mask()),
        Term::IntLit(_) => undefined(UndefinedReason::Literal),
        Term::Pow(s, _) => eval_partial(s, a)?,
        Term::Neg(s) => match eval_partial(s, a)? {
            u @ Undefined(_) => u,
            Defined(_) => undefined(UndefinedReason::UnaryMinus),
        },
        Term::Mul(l, r) | Term::Add(l, r) | Term::Sub(l, r) => {
            let (x, y) = match (eval_partial(l, a)?, eval_partial(r, a)?) {
                (u @ Undefined(_), _) | (_, u @ Undefined(_)) => return Ok(u),
                (Defined(x), Defined(y)) => (x, y),
            };
            match t {
                Term::Mul(..) => Defined(x & y),
                Term::Add(..) if x & y == 0 => Defined(x | y),
                Term::Add(..) => undefined(UndefinedReason::Overlap),
                _ if y & !x == 0 => Defined(x & !y),
                _ => undefined(UndefinedReason::NotContained),
            }
        }
    })
}

/// Pointwise evaluation in `ℤ^U`; powers are genuine integer powers.
pub fn eval_multiset(t: &Term, m: &MultisetAssignment) -> Result<Multiset> {
    Ok(match t {
        Term::Var(v) => m
            .get(v)
            .cloned()
            .ok_or_else(|| Error::Unassigned(v.clone()))?,
        Term::Zero => Multiset::constant(m.universe, &BigInt::zero()),
        Term::One => Multiset::constant(m.universe, &BigInt::one()),
        Term::IntLit(n) => Multiset::constant(m.universe, &BigInt::from(n.clone())),
        Term::Mul(a, b) => eval_multiset(a, m)?.mul(&eval_multiset(b, m)?),
        Term::Add(a, b) => eval_multiset(a, m)?.add(&eval_multiset(b, m)?),
        Term::Sub(a, b) => eval_multiset(a, m)?.sub(&eval_multiset(b, m)?),
        Term::Neg(a) => eval_multiset(a, m)?.neg(),
        Term::Pow(a, k) => eval_multiset(a, m)?.pow(*k),
    })
}

/// Pointwise evaluation of a polynomial in `ℤ^U`.
pub fn eval_poly_multiset(p: &Polynomial, m: &MultisetAssignment) -> Result<Multiset> {
    let values = (0..m.universe.size)
        .map(|i| p.eval_with(|v| m.get(v).map(|ms| ms.values[i].clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Multiset::new(values))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdempotentVerdict {
    Holds,
    Counterexample(ClassAssignment),
}

impl IdempotentVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, IdempotentVerdict::Holds)
    }
}

/// Visits every class assignment to `vars` in the fixed order: the first
/// variable varies slowest, subsets in increasing bitmask order. Stops at the
/// first assignment for which `visit` returns false and returns it.
fn first_failing_assignment(
    vars: &[VarName],
    universe: Universe,
    cap: usize,
    mut visit: impl FnMut(&ClassAssignment) -> Result<bool>,
) -> Result<Option<ClassAssignment>> {
    let n = vars.len();
    let width = universe.size;
    check_cap(n * width, cap)?;
    let mask = universe.mask() as u64;
    for k in 0..1u64 << (n * width) {
        let map = vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), ((k >> (width * (n - 1 - i))) & mask) as u32))
            .collect();
        let a = ClassAssignment { universe, map };
        if !visit(&a)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Whether `lhs = 0` holds when every variable ranges over the idempotents
/// (characteristic functions) of `ℤ^U`. The cap bounds `|U| · #vars`.
pub fn holds_in_idempotents(lhs: &Polynomial, universe: Universe) -> Result<IdempotentVerdict> {
    holds_in_idempotents_with_cap(lhs, universe, DEFAULT_MAX_VARS)
}

pub fn holds_in_idempotents_with_cap(
    lhs: &Polynomial,
    universe: Universe,
    cap: usize,
) -> Result<IdempotentVerdict> {
    let vars: Vec<VarName> = lhs.variables().into_iter().collect();
    let found = first_failing_assignment(&vars, universe, cap, |a| {
        Ok(eval_poly_multiset(lhs, &MultisetAssignment::from_classes(a))?.is_zero())
    })?;
    Ok(found.map_or(IdempotentVerdict::Holds, IdempotentVerdict::Counterexample))
}

/// Whether the quasi-equation `a1 = b1 ∧ … → c = d` holds in `ℤ^U` with
/// variables restricted to idempotents. Equations hold when both sides agree
/// at every element of `U`.
pub fn quasi_equation_holds_in_idempotents(
    antecedents: &[(Term, Term)],
    consequent: &(Term, Term),
    universe: Universe,
    cap: usize,
) -> Result<IdempotentVerdict> {
    let mut vars = consequent.0.variables();
    vars.extend(consequent.1.variables());
    for (l, r) in antecedents {
        vars.extend(l.variables());
        vars.extend(r.variables());
    }
    let vars: Vec<VarName> = vars.into_iter().collect();
    let satisfied = |(l, r): &(Term, Term), m: &MultisetAssignment| -> Result<bool> {
        Ok(eval_multiset(l, m)? == eval_multiset(r, m)?)
    };
    let found = first_failing_assignment(&vars, universe, cap, |a| {
        let m = MultisetAssignment::from_classes(a);
        for eq in antecedents {
            if !satisfied(eq, &m)? {
                return Ok(true);
            }
        }
        satisfied(consequent, &m)
    })?;
    Ok(found.map_or(IdempotentVerdict::Holds, IdempotentVerdict::Counterexample))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{parse, term_to_poly};

    fn var(s: &str) -> VarName {
        VarName::new(s).unwrap()
    }

    fn classes(size: usize, pairs: &[(&str, u32)]) -> ClassAssignment {
        let map = pairs.iter().map(|(v, s)| (var(v), *s)).collect();
        ClassAssignment::new(Universe::new(size).unwrap(), map).unwrap()
    }

    fn partial(t: &str, a: &ClassAssignment) -> PartialValue {
        eval_partial(&parse(t).unwrap(), a).unwrap()
    }

    fn ms(vals: &[i64]) -> Multiset {
        Multiset::new(vals.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn universe_bounds() {
        assert!(Universe::new(16).is_ok());
        assert_eq!(Universe::new(17), Err(Error::UniverseTooLarge(17)));
        assert_eq!(Universe::new(0).unwrap().mask(), 0);
        assert_eq!(Universe::new(16).unwrap().mask(), 0xffff);
        let u = Universe::new(2).unwrap();
        assert_eq!(
            ClassAssignment::new(u, [(var("x"), 0b100)].into_iter().collect()),
            Err(Error::SubsetOutOfUniverse { mask: 4, size: 2 })
        );
    }

    #[test]
    fn partial_examples() {
        let a = classes(2, &[("x", 0b01), ("y", 0b10)]);
        assert_eq!(partial("x + y", &a), PartialValue::Defined(0b11));
        let a = classes(2, &[("x", 0b01), ("y", 0b01)]);
        let PartialValue::Undefined(u) = partial("x + y", &a) else {
            panic!("expected undefined");
        };
        assert_eq!(u.reason, UndefinedReason::Overlap);
        assert_eq!(u.to_string(), "x+y requires x∩y=∅");
        let a = classes(2, &[("x", 0b11), ("y", 0b01)]);
        assert_eq!(partial("x - y", &a), PartialValue::Defined(0b10));
        let PartialValue::Undefined(u) = partial("y - x", &a) else {
            panic!("expected undefined");
        };
        assert_eq!(u.to_string(), "y-x requires x⊆y");
    }

    #[test]
    fn partial_strictness_and_extensions() {
        let a = classes(2, &[("x", 0b01), ("y", 0b01)]);
        // The undefined inner sum is reported even though 0 * anything is 0.
        let PartialValue::Undefined(u) = partial("0*(x + y)", &a) else {
            panic!("expected undefined");
        };
        assert_eq!(u.subterm, parse("x+y").unwrap());
        assert!(matches!(
            partial("-x", &a),
            PartialValue::Undefined(Undefined {
                reason: UndefinedReason::UnaryMinus,
                ..
            })
        ));
        assert!(matches!(
            partial("2*x", &a),
            PartialValue::Undefined(Undefined {
                reason: UndefinedReason::Literal,
                ..
            })
        ));
        assert_eq!(partial("x^3", &a), PartialValue::Defined(0b01));
        assert_eq!(partial("1 - x", &a), PartialValue::Defined(0b10));
        let a = classes(2, &[("x", 0b11), ("y", 0b01)]);
        let PartialValue::Undefined(u) = partial("(x + y)*x", &a) else {
            panic!("expected undefined");
        };
        assert_eq!(u.to_string(), "x+y requires x∩y=∅");
        let PartialValue::Undefined(u) = partial("x*y - x", &classes(2, &[("x", 1), ("y", 0)]))
        else {
            panic!("expected undefined");
        };
        assert_eq!(u.reason, UndefinedReason::NotContained);
        assert_eq!(
            eval_partial(&parse("z").unwrap(), &a),
            Err(Error::Unassigned(var("z")))
        );
    }

    #[test]
    fn characteristic_functions() {
        let u3 = Universe::new(3).unwrap();
        assert_eq!(chi(0, u3).unwrap(), ms(&[0, 0, 0]));
        assert_eq!(chi(0b111, u3).unwrap(), ms(&[1, 1, 1]));
        assert_eq!(chi(0b001, u3).unwrap(), ms(&[1, 0, 0]));
        assert!(chi(0b1000, u3).is_err());
        assert_eq!(ms(&[1, 0, 1]).as_subset(), Some(0b101));
        assert_eq!(ms(&[2, 0]).as_subset(), None);
    }

    fn multi(t: &str, a: &ClassAssignment) -> Multiset {
        eval_multiset(&parse(t).unwrap(), &MultisetAssignment::from_classes(a)).unwrap()
    }

    #[test]
    fn multiset_examples() {
        let a = classes(2, &[("A", 0b01), ("B", 0b11)]);
        assert_eq!(multi("A + B - A*B", &a), ms(&[1, 1]));
        let a = classes(2, &[("A", 0b01), ("B", 0b01)]);
        assert_eq!(multi("A + B", &a), ms(&[2, 0]));
        assert_eq!(multi("A + B", &a).as_subset(), None);
        assert_eq!(multi("1 - A", &a), ms(&[0, 1]));
        assert_eq!(multi("(A + B)^2", &a), ms(&[4, 0]));
        assert_eq!(multi("-A - 3", &a), ms(&[-4, -3]));
    }

    #[test]
    fn multiset_universe_mismatch() {
        let u = Universe::new(2).unwrap();
        let map = [(var("x"), ms(&[1, 0, 0]))].into_iter().collect();
        assert_eq!(
            MultisetAssignment::new(u, map),
            Err(Error::UniverseMismatch {
                expected: 2,
                got: 3
            })
        );
    }

    #[test]
    fn idempotent_equations() {
        let u = Universe::new(2).unwrap();
        let p = |s: &str| term_to_poly(&parse(s).unwrap());
        assert!(holds_in_idempotents(&(p("x*x") - p("x")), u)
            .unwrap()
            .holds());
        assert!(holds_in_idempotents(&Polynomial::zero(), u)
            .unwrap()
            .holds());
        let verdict = holds_in_idempotents(&(p("x + y - x*y") - p("x + y")), u).unwrap();
        assert_eq!(
            verdict,
            IdempotentVerdict::Counterexample(classes(2, &[("x", 0b01), ("y", 0b01)]))
        );
        let many: Polynomial = (0..7).map(|i| Polynomial::var(var(&format!("x{i}")))).sum();
        assert_eq!(
            holds_in_idempotents(&many, Universe::new(3).unwrap()),
            Err(Error::TooManyVariables { count: 21, cap: 20 })
        );
    }

    #[test]
    fn quasi_equations() {
        let u = Universe::new(2).unwrap();
        let eq = |s: &str| crate::term::parse_equation(s).unwrap();
        let v = quasi_equation_holds_in_idempotents(&[eq("x + y = z")], &eq("x*y*z = 0"), u, 20)
            .unwrap();
        assert!(v.holds());
        let v =
            quasi_equation_holds_in_idempotents(&[], &eq("x + y = x + y - x*y"), u, 20).unwrap();
        assert!(!v.holds());
        // Antecedents hold as whole multisets, not pointwise: x = 0 fails for
        // x = {0}, so the implication is vacuous there.
        let v = quasi_equation_holds_in_idempotents(&[eq("x = 0")], &eq("x = 0"), u, 20).unwrap();
        assert!(v.holds());
    }
}
