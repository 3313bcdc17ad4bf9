//! Reduction, elimination and solution of equations `p = 0`.

use std::collections::BTreeSet;

use crate::development::{develop_partial_with_cap, interpretable_core_with_cap, sorted_vars};
use crate::error::{Error, Result};
use crate::poly::{check_cap, Polynomial, VarName, DEFAULT_MAX_VARS};

/// A nonempty list of left-hand sides, each read as `= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSystem(Vec<Polynomial>);

impl EquationSystem {
    pub fn new(lhs: Vec<Polynomial>) -> Result<Self> {
        if lhs.is_empty() {
            Err(Error::EmptySystem)
        } else {
            Ok(EquationSystem(lhs))
        }
    }

    pub fn equations(&self) -> &[Polynomial] {
        &self.0
    }
}

/// `Σ pᵢ·pᵢ`, a single equation with the same 0/1 solutions as the system.
pub fn reduce_system(sys: &EquationSystem) -> Polynomial {
    sys.0.iter().map(|p| p * p).sum()
}

/// Convenience over a slice; fails on an empty slice.
pub fn reduce(lhs: &[Polynomial]) -> Result<Polynomial> {
    Ok(reduce_system(&EquationSystem::new(lhs.to_vec())?))
}

/// The product of every entry of the partial development over `elim_vars`.
/// At 0/1 points it vanishes exactly where some choice of the eliminated
/// variables solves `p = 0`.
pub fn eliminate(p: &Polynomial, elim_vars: &[VarName]) -> Result<Polynomial> {
    eliminate_with_cap(p, elim_vars, DEFAULT_MAX_VARS)
}

pub fn eliminate_with_cap(p: &Polynomial, elim_vars: &[VarName], cap: usize) -> Result<Polynomial> {
    let table = develop_partial_with_cap(p, elim_vars, cap)?;
    Ok(table.iter().map(|(_, c)| c).product())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Solved,
    /// The unknown does not occur in the equation.
    Vacuous,
}

/// `y = particular + parameter·freedom`, valid wherever `condition = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub unknown: VarName,
    pub condition: Polynomial,
    pub particular: Polynomial,
    pub freedom: Polynomial,
    pub parameter: VarName,
    pub status: SolveStatus,
}

impl Solution {
    /// `particular + parameter·freedom`.
    pub fn expression(&self) -> Polynomial {
        &self.particular + Polynomial::var(self.parameter.clone()) * &self.freedom
    }
}

/// First of `v, v1, v2, …` not in `taken`.
pub fn fresh_parameter(taken: &BTreeSet<VarName>) -> VarName {
    let mut i = 0u64;
    loop {
        let name = if i == 0 {
            "v".to_string()
        } else {
            format!("v{i}")
        };
        let v = VarName::new(name).expect("valid identifier");
        if !taken.contains(&v) {
            return v;
        }
        i += 1;
    }
}

/// Solves `p = 0` for `y`, treating every other variable as a parameter.
/// The free parameter is the first of `v, v1, …` not occurring in `p` and
/// distinct from `y`.
pub fn solve(p: &Polynomial, y: &VarName) -> Result<Solution> {
    let mut taken = p.variables();
    taken.insert(y.clone());
    solve_with_parameter(p, y, fresh_parameter(&taken), DEFAULT_MAX_VARS)
}

pub fn solve_with_parameter(
    p: &Polynomial,
    y: &VarName,
    parameter: VarName,
    cap: usize,
) -> Result<Solution> {
    let params = sorted_vars(p.variables().into_iter().filter(|v| v != y));
    check_cap(params.len(), cap)?;
    if !p.contains_var(y) {
        return Ok(Solution {
            unknown: y.clone(),
            condition: p * p,
            particular: Polynomial::zero(),
            freedom: Polynomial::one(),
            parameter,
            status: SolveStatus::Vacuous,
        });
    }
    let at0 = p.substitute(y, &Polynomial::zero());
    let at1 = p.substitute(y, &Polynomial::one());
    let star0 = interpretable_core_with_cap(&at0, &params, cap)?;
    let star1 = interpretable_core_with_cap(&at1, &params, cap)?;
    let freedom = (Polynomial::one() - &star0) * (Polynomial::one() - star1);
    Ok(Solution {
        unknown: y.clone(),
        condition: at0 * at1,
        particular: star0,
        freedom,
        parameter,
        status: SolveStatus::Solved,
    })
}
