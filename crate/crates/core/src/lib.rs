//! Exact combinatorics of the weak and strong Bruhat orders on `S_n`.
//!
//! For a 132-avoiding permutation `π` the weak order interval `[e, π]_R`
//! carries raising, lowering and weight operators `E`, `F`, `H` forming an
//! `sl2` representation. This crate builds those operators over exact
//! integers, verifies the commutation relations, certifies the strong Sperner
//! property through ranks of powers of `F`, and computes principal
//! specializations of Schubert polynomials by divided differences, reduced
//! words and weighted strong order chains.

pub mod antichain;
pub mod diagnostics;
pub mod error;
pub mod hasse;
pub mod interval;
pub mod operator;
pub mod padded;
pub mod perm;
pub mod poly;
pub mod rank;
pub mod schubert;
pub mod sl2;
pub mod sperner;

pub use error::{Error, Result};
pub use interval::{IntervalConfig, WeakInterval};
pub use operator::LinearOperator;
pub use perm::{InversionSet, Permutation};
pub use poly::MultiPolynomial;
pub use padded::PaddedPolynomial;
pub use sl2::{Sl2Operators, Sl2Report};
pub use sperner::{SpernerCertificate, Verdict};
