//! The Rule of 0 and 1 for equational Horn sentences.
//!
//! A sentence `a1 = 0 ∧ … ∧ ak = 0 → c = 0`, universally quantified over its
//! variables, holds in Boole's algebra exactly when it holds in the integers
//! with every variable restricted to 0 and 1. The check enumerates all `2^n`
//! points; at each point the polynomials are evaluated over ℤ.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::development::Sigma;
use crate::error::Result;
use crate::poly::{check_cap, Polynomial, VarName, DEFAULT_MAX_VARS};

/// Antecedents and consequent stored as `lhs - rhs`, each read as `= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HornSentence {
    antecedents: Vec<Polynomial>,
    consequent: Polynomial,
    vars: Vec<VarName>,
}

impl HornSentence {
    pub fn new(antecedents: Vec<Polynomial>, consequent: Polynomial) -> Self {
        let mut vars: BTreeSet<VarName> = consequent.variables();
        for a in &antecedents {
            vars.extend(a.variables());
        }
        HornSentence {
            antecedents,
            consequent,
            vars: vars.into_iter().collect(),
        }
    }

    /// From equations `lhs = rhs`.
    pub fn from_equations(
        antecedents: Vec<(Polynomial, Polynomial)>,
        consequent: (Polynomial, Polynomial),
    ) -> Self {
        HornSentence::new(
            antecedents.into_iter().map(|(l, r)| l - r).collect(),
            consequent.0 - consequent.1,
        )
    }

    pub fn equation(lhs: Polynomial) -> Self {
        HornSentence::new(Vec::new(), lhs)
    }

    pub fn antecedents(&self) -> &[Polynomial] {
        &self.antecedents
    }

    pub fn consequent(&self) -> &Polynomial {
        &self.consequent
    }

    pub fn vars(&self) -> &[VarName] {
        &self.vars
    }
}

/// A 0/1 point satisfying every antecedent and violating the consequent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub vars: Vec<VarName>,
    pub sigma: Sigma,
    pub antecedent_values: Vec<BigInt>,
    pub consequent_value: BigInt,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, b)) in self.vars.iter().zip(self.sigma.bits()).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}={}", u8::from(b))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

/// Polynomial compiled against a fixed variable list: monomials become
/// bitmasks in `Sigma` index layout.
enum Compiled {
    Small(Vec<(u64, i128)>),
    Big(Vec<(u64, BigInt)>),
}

impl Compiled {
    fn new(p: &Polynomial, vars: &[VarName]) -> Compiled {
        let m = vars.len();
        let terms: Vec<(u64, BigInt)> = p
            .terms()
            .map(|(mono, c)| {
                let mask = mono.vars().iter().fold(0u64, |acc, v| {
                    let i = vars.binary_search(v).expect("variable in sentence");
                    acc | 1 << (m - 1 - i)
                });
                (mask, c.clone())
            })
            .collect();
        let bound: BigInt = terms.iter().map(|(_, c)| c.abs()).sum();
        if bound < BigInt::from(i128::MAX) {
            Compiled::Small(
                terms
                    .into_iter()
                    .map(|(mask, c)| (mask, c.to_i128().expect("bounded")))
                    .collect(),
            )
        } else {
            Compiled::Big(terms)
        }
    }

    fn is_zero_at(&self, sigma: u64) -> bool {
        match self {
            Compiled::Small(terms) => {
                terms
                    .iter()
                    .filter(|(mask, _)| mask & !sigma == 0)
                    .map(|(_, c)| c)
                    .sum::<i128>()
                    == 0
            }
            Compiled::Big(terms) => terms
                .iter()
                .filter(|(mask, _)| mask & !sigma == 0)
                .fold(BigInt::zero(), |acc, (_, c)| acc + c)
                .is_zero(),
        }
    }
}

pub fn check_r01(h: &HornSentence) -> Result<Verdict> {
    check_r01_with_cap(h, DEFAULT_MAX_VARS)
}

/// Decides the sentence over `{0,1}^n`. A failing verdict carries the least
/// violating `σ` in binary-counting order.
pub fn check_r01_with_cap(h: &HornSentence, cap: usize) -> Result<Verdict> {
    let n = h.vars.len();
    check_cap(n, cap)?;
    let antecedents: Vec<Compiled> = h
        .antecedents
        .iter()
        .map(|p| Compiled::new(p, &h.vars))
        .collect();
    let consequent = Compiled::new(&h.consequent, &h.vars);
    let violates =
        |s: &u64| antecedents.iter().all(|a| a.is_zero_at(*s)) && !consequent.is_zero_at(*s);
    let found = if n < 12 {
        (0..1u64 << n).find(violates)
    } else {
        (0..1u64 << n).into_par_iter().find_first(violates)
    };
    let Some(index) = found else {
        return Ok(Verdict::Holds);
    };
    let sigma = Sigma::new(n, index);
    let point = sigma.assignment(&h.vars);
    let value = |p: &Polynomial| p.eval(&point).expect("all variables assigned");
    Ok(Verdict::Fails(Witness {
        vars: h.vars.clone(),
        sigma,
        antecedent_values: h.antecedents.iter().map(value).collect(),
        consequent_value: value(&h.consequent),
    }))
}

/// `p = 0` as an antecedent-free sentence.
pub fn check_equation(p: &Polynomial) -> Result<Verdict> {
    check_r01(&HornSentence::equation(p.clone()))
}
