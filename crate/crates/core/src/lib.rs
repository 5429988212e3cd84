//! Exact arithmetic for principal quartic fields, octahedral embedding
//! problems and degree-2 Q-curves.
//!
//! Polynomial code is generic over the coefficient [`Field`]; the aliases
//! below fix the coefficient types used throughout.

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod brauer;
pub mod check;
pub mod embedding;
pub mod error;
pub mod field;
pub mod gl2f9;
pub mod qcurve;
pub mod quartic;

pub use arith::fixed::{Fixed, Real};
pub use arith::integer::{factor, squarefree_part, Cofactor, IntegerFactorization, DEFAULT_FACTOR_BOUND};
pub use arith::poly::UniPoly;
pub use arith::quad::QuadElement;
pub use arith::ratfunc::RatFunc;
pub use arith::roots::{complex_roots, ComplexApprox};
pub use arith::reconstruct::rational_reconstruct;
pub use error::{Error, Result};
pub use field::Field;
pub use num_rational::BigRational;

/// Polynomials over the rationals.
pub type QPoly = UniPoly<BigRational>;
/// Polynomials over the rational function field Q(s).
pub type QsPoly = UniPoly<RatFunc>;
/// Polynomials over a quadratic field Q(√t).
pub type QuadPoly = UniPoly<QuadElement>;
pub type F64Poly = UniPoly<f64>;

/// Tunable limits shared by the search and certification routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub factor_bound: u64,
    pub search_box: i64,
    pub precision_digits: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            factor_bound: DEFAULT_FACTOR_BOUND,
            search_box: 50,
            precision_digits: 50,
        }
    }
}
