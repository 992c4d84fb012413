//! Verification workbench for graded down-up algebras and related
//! finitely presented graded algebras.
//!
//! The library builds normal forms for quotients of free algebras via
//! degree-bounded completion of rewrite systems, decomposes algebras
//! under finite-group gradings of their generators, computes fixed
//! subrings with minimal generating sets, and cross-checks dimension
//! counts against an independent linear-algebra oracle.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals
//! and all dimension/rank computations use exact row reduction.

pub mod algebra;
pub mod checks;
pub mod config;
pub mod error;
pub mod grading;
pub mod hilbert;
pub mod invariants;
pub mod linalg;
pub mod order;
pub mod poly;
pub mod rewrite;
pub mod scalar;
pub mod word;

pub use error::{Error, Result};
pub use order::MonomialOrder;
pub use poly::NcPoly;
pub use scalar::Scalar;
pub use word::{Alphabet, GeneratorSymbol, Word};
