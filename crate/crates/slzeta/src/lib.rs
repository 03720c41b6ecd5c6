//! Exact computation of image zeta functions of traceless matrix algebras
//! over compact discrete valuation rings, together with the signed-permutation
//! combinatorics they are built from and a brute-force matrix-census oracle
//! that cross-checks every closed formula over the rings `Z/p^N`.
//!
//! Module map:
//! - [`polycore`]: exact Laurent polynomials, factored rational functions,
//!   truncated series;
//! - [`coxeter`]: signed permutation groups `B_n` with `S_n` embedded, their
//!   statistics, quotients and the bar-lift bijection;
//! - [`genfun`]: the named generating polynomials (`f`, `b`, `f_K`, Igusa,
//!   `B_n`-sums) with dual constructions and identity checkers;
//! - [`zeta`]: image zeta functions by three routes, functional equation,
//!   series coefficients, analytic invariants, topological zeta functions;
//! - [`localring`]: exhaustive matrix censuses over `F_p` and `Z/p^N`;
//! - [`cli`]: the `slzeta` command-line interface.

pub mod cli;
pub mod coxeter;
pub mod error;
pub mod genfun;
pub mod localring;
pub mod polycore;
pub mod zeta;

pub use error::{Error, Result};
