//! Beta-adic and radix expansions of algebraic integers, canonical number
//! systems, p-adic interpolation of power sequences, and exact counting of
//! exponents `n` for which the expansion of `alpha^n` omits a digit.

pub mod arith;
pub mod cns;
pub mod counting;
pub mod decimal;
pub mod digits_extra;
pub mod error;
pub mod expansion;
pub mod irreducible;
pub mod linalg;
pub mod padic;
pub mod poly;
pub mod polymod;
pub mod residue;
pub mod ring;
pub mod serde_int;

pub use error::{Error, Result};
pub use ring::{AlgebraicInt, NumberRing};
