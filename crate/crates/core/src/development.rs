//! Constituents and developments.
//!
//! For sorted variables `x1 < … < xm` and a 0/1 string `σ`, the constituent
//! `C_σ` is the product of `xi` where `σi = 1` and `1 - xi` where `σi = 0`.
//! Every polynomial equals `Σ_σ p(σ)·C_σ`; the family `{p(σ)}` is its
//! development. Tables are dense and indexed by `σ` read as a binary number
//! with `x1` as the most significant bit, so `00, 01, 10, 11` is the storage
//! and rendering order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{check_cap, Monomial, Polynomial, VarName, DEFAULT_MAX_VARS, HARD_MAX_VARS};

/// A 0/1 string positionally aligned with a variable list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sigma {
    len: usize,
    index: u64,
}

impl Sigma {
    /// Panics if `len > 63` or `index` has bits beyond `len`.
    pub fn new(len: usize, index: u64) -> Sigma {
        assert!(len <= HARD_MAX_VARS, "sigma too long");
        assert!(index >> len == 0, "sigma index out of range");
        Sigma { len, index }
    }

    pub fn from_bits(bits: &[bool]) -> Sigma {
        let index = bits.iter().fold(0u64, |acc, &b| (acc << 1) | u64::from(b));
        Sigma::new(bits.len(), index)
    }

    /// All strings of length `len` in binary-counting order.
    pub fn all(len: usize) -> impl Iterator<Item = Sigma> {
        assert!(len <= HARD_MAX_VARS, "sigma too long");
        (0..1u64 << len).map(move |index| Sigma { len, index })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// The bit for the `i`-th variable.
    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.index >> (self.len - 1 - i)) & 1 == 1
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.bit(i))
    }

    /// The integer assignment `vars[i] ↦ σi`.
    pub fn assignment(&self, vars: &[VarName]) -> BTreeMap<VarName, BigInt> {
        assert_eq!(vars.len(), self.len);
        vars.iter()
            .cloned()
            .zip(self.bits().map(|b| BigInt::from(u8::from(b))))
            .collect()
    }
}

impl fmt::Display for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sigma({self})")
    }
}

impl FromStr for Sigma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Sigma> {
        if s.len() > HARD_MAX_VARS || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::InvalidSigma(s.to_string()));
        }
        let bits: Vec<bool> = s.bytes().map(|b| b == b'1').collect();
        Ok(Sigma::from_bits(&bits))
    }
}

/// Sorts and deduplicates a variable list into the global order.
pub fn sorted_vars(vars: impl IntoIterator<Item = VarName>) -> Vec<VarName> {
    let mut v: Vec<VarName> = vars.into_iter().collect();
    v.sort();
    v.dedup();
    v
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Entries {
    Constant(Vec<BigInt>),
    Residual(Vec<Polynomial>),
}

/// The coefficient family `{t(σ)}` over `vars`. Entries are constants for a
/// complete development and polynomials in the remaining variables for a
/// partial one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DevelopmentTable {
    vars: Vec<VarName>,
    entries: Entries,
}

fn check_sorted(vars: &[VarName]) -> Result<()> {
    if vars.windows(2).all(|w| w[0] < w[1]) {
        Ok(())
    } else {
        Err(Error::UnsortedVariables)
    }
}

fn check_len(vars: &[VarName], got: usize) -> Result<()> {
    let expected = 1usize << vars.len();
    if got == expected {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, got })
    }
}

impl DevelopmentTable {
    pub fn from_constants(vars: Vec<VarName>, entries: Vec<BigInt>) -> Result<Self> {
        check_sorted(&vars)?;
        check_cap(vars.len(), HARD_MAX_VARS)?;
        check_len(&vars, entries.len())?;
        Ok(DevelopmentTable {
            vars,
            entries: Entries::Constant(entries),
        })
    }

    /// Builds a table of polynomial entries; stored as constants when every
    /// entry is constant.
    pub fn from_polynomials(vars: Vec<VarName>, entries: Vec<Polynomial>) -> Result<Self> {
        check_sorted(&vars)?;
        check_cap(vars.len(), HARD_MAX_VARS)?;
        check_len(&vars, entries.len())?;
        let constants: Option<Vec<BigInt>> = entries.iter().map(Polynomial::as_constant).collect();
        let entries = match constants {
            Some(c) => Entries::Constant(c),
            None => Entries::Residual(entries),
        };
        Ok(DevelopmentTable { vars, entries })
    }

    pub fn vars(&self) -> &[VarName] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        1 << self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True when every coefficient is a constant.
    pub fn is_complete(&self) -> bool {
        matches!(self.entries, Entries::Constant(_))
    }

    pub fn constants(&self) -> Option<&[BigInt]> {
        match &self.entries {
            Entries::Constant(c) => Some(c),
            Entries::Residual(_) => None,
        }
    }

    /// The constant at `σ`, for complete tables.
    pub fn constant(&self, sigma: Sigma) -> Option<&BigInt> {
        assert_eq!(sigma.len(), self.vars.len(), "sigma length");
        self.constants().map(|c| &c[sigma.index() as usize])
    }

    pub fn coefficient(&self, sigma: Sigma) -> Polynomial {
        assert_eq!(sigma.len(), self.vars.len(), "sigma length");
        let i = sigma.index() as usize;
        match &self.entries {
            Entries::Constant(c) => Polynomial::constant(c[i].clone()),
            Entries::Residual(p) => p[i].clone(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Sigma, Polynomial)> + '_ {
        Sigma::all(self.vars.len()).map(move |s| (s, self.coefficient(s)))
    }

    fn coefficients(&self) -> Vec<Polynomial> {
        match &self.entries {
            Entries::Constant(c) => c.iter().cloned().map(Polynomial::constant).collect(),
            Entries::Residual(p) => p.clone(),
        }
    }
}

/// `C_σ` over `vars`, positionally aligned.
pub fn constituent(sigma: Sigma, vars: &[VarName]) -> Result<Polynomial> {
    if sigma.len() != vars.len() {
        return Err(Error::LengthMismatch {
            expected: vars.len(),
            got: sigma.len(),
        });
    }
    Ok(vars
        .iter()
        .zip(sigma.bits())
        .map(|(v, b)| {
            let x = Polynomial::var(v.clone());
            if b {
                x
            } else {
                Polynomial::one() - x
            }
        })
        .product())
}

/// Bit position of each variable, `x1` most significant.
fn bit_of(vars: &[VarName]) -> BTreeMap<&VarName, u64> {
    let m = vars.len();
    vars.iter()
        .enumerate()
        .map(|(i, v)| (v, 1u64 << (m - 1 - i)))
        .collect()
}

/// Complete development over `vars` (a superset of the polynomial's variables,
/// in any order). Uses the default variable cap.
pub fn develop(p: &Polynomial, vars: &[VarName]) -> Result<DevelopmentTable> {
    develop_with_cap(p, vars, DEFAULT_MAX_VARS)
}

pub fn develop_with_cap(p: &Polynomial, vars: &[VarName], cap: usize) -> Result<DevelopmentTable> {
    let vars = sorted_vars(vars.iter().cloned());
    check_cap(vars.len(), cap)?;
    let bits = bit_of(&vars);
    let mut table = vec![BigInt::zero(); 1usize << vars.len()];
    for (m, c) in p.terms() {
        let mut mask = 0u64;
        for v in m.vars() {
            mask |= bits
                .get(v)
                .ok_or_else(|| Error::MissingVariable(v.clone()))?;
        }
        table[mask as usize] += c;
    }
    // p(σ) is the sum of the coefficients of monomials contained in σ.
    for b in 0..vars.len() {
        let bit = 1usize << b;
        for s in 0..table.len() {
            if s & bit != 0 {
                let lower = table[s ^ bit].clone();
                table[s] += lower;
            }
        }
    }
    DevelopmentTable::from_constants(vars, table)
}

/// Development with respect to `elim_vars` only: entry `σ` is `p` with each
/// listed variable replaced by its bit, a polynomial in the other variables.
pub fn develop_partial(p: &Polynomial, elim_vars: &[VarName]) -> Result<DevelopmentTable> {
    develop_partial_with_cap(p, elim_vars, DEFAULT_MAX_VARS)
}

pub fn develop_partial_with_cap(
    p: &Polynomial,
    elim_vars: &[VarName],
    cap: usize,
) -> Result<DevelopmentTable> {
    let vars = sorted_vars(elim_vars.iter().cloned());
    check_cap(vars.len(), cap)?;
    let bits = bit_of(&vars);
    let mut table = vec![Polynomial::zero(); 1usize << vars.len()];
    for (m, c) in p.terms() {
        let mut mask = 0u64;
        let mut rest = Vec::new();
        for v in m.vars() {
            match bits.get(v) {
                Some(b) => mask |= b,
                None => rest.push(v.clone()),
            }
        }
        let term = Polynomial::monomial(Monomial::from_vars(rest), c.clone());
        let slot = &mut table[mask as usize];
        *slot = &*slot + term;
    }
    for b in 0..vars.len() {
        let bit = 1usize << b;
        for s in 0..table.len() {
            if s & bit != 0 {
                let sum = &table[s] + &table[s ^ bit];
                table[s] = sum;
            }
        }
    }
    DevelopmentTable::from_polynomials(vars, table)
}

/// `Σ_σ tbl(σ)·C_σ`, the inverse of [`develop`] and [`develop_partial`].
pub fn from_table(tbl: &DevelopmentTable) -> Polynomial {
    let vars = tbl.vars();
    let m = vars.len();
    // Möbius inversion turns values at 0/1 points back into monomial
    // coefficients; each coefficient may itself be a polynomial.
    let mut coeffs = tbl.coefficients();
    for b in 0..m {
        let bit = 1usize << b;
        for s in 0..coeffs.len() {
            if s & bit != 0 {
                let diff = &coeffs[s] - &coeffs[s ^ bit];
                coeffs[s] = diff;
            }
        }
    }
    let mut out = Polynomial::zero();
    for (s, c) in coeffs.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mono = Monomial::from_vars(
            (0..m)
                .filter(|i| (s >> (m - 1 - i)) & 1 == 1)
                .map(|i| vars[i].clone()),
        );
        out = out + c * Polynomial::monomial(mono, 1);
    }
    out
}

/// Equality in Boole's sense: identical complete developments over `vars`.
pub fn poly_equal_by_development(p: &Polynomial, q: &Polynomial, vars: &[VarName]) -> Result<bool> {
    Ok(first_difference(p, q, vars, DEFAULT_MAX_VARS)?.is_none())
}

/// The least `σ` at which the developments differ, with both values.
pub fn first_difference(
    p: &Polynomial,
    q: &Polynomial,
    vars: &[VarName],
    cap: usize,
) -> Result<Option<(Sigma, BigInt, BigInt)>> {
    let dp = develop_with_cap(p, vars, cap)?;
    let dq = develop_with_cap(q, vars, cap)?;
    let (a, b) = (
        dp.constants().expect("complete"),
        dq.constants().expect("complete"),
    );
    let len = dp.vars().len();
    Ok(a.iter()
        .zip(b)
        .enumerate()
        .find(|(_, (x, y))| x != y)
        .map(|(i, (x, y))| (Sigma::new(len, i as u64), x.clone(), y.clone())))
}

/// `t⋆ = Σ {C_σ : t(σ) ≠ 0}`: an idempotent polynomial with the same zero set.
pub fn interpretable_core(p: &Polynomial, vars: &[VarName]) -> Result<Polynomial> {
    interpretable_core_with_cap(p, vars, DEFAULT_MAX_VARS)
}

pub fn interpretable_core_with_cap(
    p: &Polynomial,
    vars: &[VarName],
    cap: usize,
) -> Result<Polynomial> {
    let d = develop_with_cap(p, vars, cap)?;
    let indicator = d
        .constants()
        .expect("complete")
        .iter()
        .map(|c| {
            if c.is_zero() {
                BigInt::zero()
            } else {
                BigInt::one()
            }
        })
        .collect();
    let star = DevelopmentTable::from_constants(d.vars().to_vec(), indicator)?;
    Ok(from_table(&star))
}

/// The `σ` whose constituent equations `C_σ = 0` together say `p = 0`.
pub fn constituent_equations(p: &Polynomial, vars: &[VarName]) -> Result<Vec<Sigma>> {
    constituent_equations_with_cap(p, vars, DEFAULT_MAX_VARS)
}

pub fn constituent_equations_with_cap(
    p: &Polynomial,
    vars: &[VarName],
    cap: usize,
) -> Result<Vec<Sigma>> {
    let d = develop_with_cap(p, vars, cap)?;
    let len = d.vars().len();
    Ok(d.constants()
        .expect("complete")
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, _)| Sigma::new(len, i as u64))
        .collect())
}
