#![allow(dead_code)]

use std::collections::BTreeMap;

use boole_core::development::Sigma;
use boole_core::poly::{Monomial, Polynomial, VarName};
use boole_core::term::Term;
use num_bigint::BigInt;
use proptest::prelude::*;

pub const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

pub fn var(s: &str) -> VarName {
    VarName::new(s).unwrap()
}

pub fn vars(n: usize) -> Vec<VarName> {
    NAMES[..n].iter().map(|s| var(s)).collect()
}

/// Polynomial over the first `n` names with coefficients in [-10, 10].
pub fn poly_over(n: usize) -> impl Strategy<Value = Polynomial> {
    let masks = 1u32 << n;
    prop::collection::vec((0..masks, -10i64..=10), 0..8).prop_map(move |terms| {
        Polynomial::from_terms(terms.into_iter().map(|(mask, c)| {
            let mono =
                Monomial::from_vars((0..n).filter(|i| mask >> i & 1 == 1).map(|i| var(NAMES[i])));
            (mono, BigInt::from(c))
        }))
    })
}

pub fn poly5() -> impl Strategy<Value = Polynomial> {
    poly_over(5)
}

/// Terms over the first `n` names, optionally including the constructs the
/// partial semantics rejects (negation, literals ≥ 2).
pub fn term_over(n: usize, extended: bool) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        4 => (0..n).prop_map(|i| Term::Var(var(NAMES[i]))),
        1 => Just(Term::Zero),
        1 => Just(Term::One),
        1 => (2u32..5).prop_map(Term::int),
    ];
    let leaf = if extended {
        leaf.boxed()
    } else {
        leaf.prop_filter("no literals", |t| !matches!(t, Term::IntLit(_)))
            .boxed()
    };
    leaf.prop_recursive(4, 24, 2, move |inner| {
        let base = prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::mul(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::add(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::sub(a, b)),
            (inner.clone(), 1u32..4).prop_map(|(a, k)| Term::pow(a, k)),
        ];
        if extended {
            prop_oneof![4 => base, 1 => inner.prop_map(Term::neg)].boxed()
        } else {
            base.boxed()
        }
    })
}

/// Integer value of a term tree with genuine integer powers.
pub fn eval_term_int(t: &Term, a: &BTreeMap<VarName, BigInt>) -> BigInt {
    match t {
        Term::Var(v) => a[v].clone(),
        Term::Zero => BigInt::from(0),
        Term::One => BigInt::from(1),
        Term::IntLit(n) => BigInt::from(n.clone()),
        Term::Mul(x, y) => eval_term_int(x, a) * eval_term_int(y, a),
        Term::Add(x, y) => eval_term_int(x, a) + eval_term_int(y, a),
        Term::Sub(x, y) => eval_term_int(x, a) - eval_term_int(y, a),
        Term::Neg(x) => -eval_term_int(x, a),
        Term::Pow(x, k) => num_traits::pow(eval_term_int(x, a), *k as usize),
    }
}

/// All 0/1 points over `vs`.
pub fn points(vs: &[VarName]) -> impl Iterator<Item = (Sigma, BTreeMap<VarName, BigInt>)> + '_ {
    Sigma::all(vs.len()).map(move |s| (s, s.assignment(vs)))
}

pub fn eval(p: &Polynomial, a: &BTreeMap<VarName, BigInt>) -> BigInt {
    p.eval(a).unwrap()
}

/// Totally interpretable terms built from Boolean operations written in
/// Boole's notation: `a + (1-a)*b`, `a*b`, `1 - a`, `a - a*b`.
pub fn interpretable_term(n: usize) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        4 => (0..n).prop_map(|i| Term::Var(var(NAMES[i]))),
        1 => Just(Term::Zero),
        1 => Just(Term::One),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Term::add(a.clone(), Term::mul(Term::sub(Term::One, a), b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::mul(a, b)),
            inner.clone().prop_map(|a| Term::sub(Term::One, a)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::sub(a.clone(), Term::mul(a, b))),
            (inner, 2u32..4).prop_map(|(a, k)| Term::pow(a, k)),
        ]
    })
}
