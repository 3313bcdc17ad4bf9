//! Boole's algebra of logic as a small computer-algebra system.
//!
//! Terms of Boole's language compile to canonical multilinear integer
//! polynomials ([`poly`]). On top of those sit the development of a term into
//! constituents ([`development`]), the reduction, elimination and solution of
//! equations ([`theorems`]), finite executable models ([`models`]) and the
//! Rule of 0 and 1 for Horn sentences ([`r01`]).
//!
//! ```
//! use boole_core::term::{parse, term_to_poly};
//!
//! let absorbed = term_to_poly(&parse("x*(x + y - x*y)").unwrap());
//! assert_eq!(absorbed.to_string(), "x");
//! ```

pub mod development;
pub mod error;
pub mod models;
pub mod poly;
pub mod r01;
pub mod term;
pub mod theorems;

pub use error::{Error, ParseError, Result};
pub use poly::{Monomial, Polynomial, VarName, DEFAULT_MAX_VARS};
