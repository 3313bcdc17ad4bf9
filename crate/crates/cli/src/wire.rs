//! Structured (json-lines) encoding of polynomials.

use boole_core::poly::{Monomial, Polynomial, VarName};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// One term: sorted variable list and a decimal coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireTerm {
    pub monomial: Vec<String>,
    pub coefficient: String,
}

pub fn to_wire(p: &Polynomial) -> Vec<WireTerm> {
    p.terms()
        .map(|(m, c)| WireTerm {
            monomial: m.vars().iter().map(|v| v.as_str().to_string()).collect(),
            coefficient: c.to_string(),
        })
        .collect()
}

#[derive(Debug, thiserror::Error)]
pub enum WireError {
    #[error("bad coefficient {0:?}")]
    Coefficient(String),
    #[error(transparent)]
    Name(#[from] boole_core::Error),
}

pub fn from_wire(terms: &[WireTerm]) -> Result<Polynomial, WireError> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let c: BigInt = t
            .coefficient
            .parse()
            .map_err(|_| WireError::Coefficient(t.coefficient.clone()))?;
        let vars = t
            .monomial
            .iter()
            .map(|s| VarName::new(s.as_str()))
            .collect::<Result<Vec<_>, _>>()?;
        out.push((Monomial::from_vars(vars), c));
    }
    Ok(Polynomial::from_terms(out))
}
