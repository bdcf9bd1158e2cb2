//! Exact characters, dimensions and decomposition matrices for the simple
//! modules `L(ω_r)` of `Sp(2m)` in characteristic `p`, together with the
//! matching SL(2) and two-row symmetric group statements.
//!
//! Every quantity is computed by at least two independent routes:
//!
//! * [`sp_characters`]: the alternating Weyl-character sum, a generating
//!   series coefficient, a periodic binomial sum and a trigonometric sum.
//! * [`decomp_matrices`]: the digit-relation definition of the matrices
//!   `A(n)`, `B(n)` and their recursive block constructions.
//! * [`weyl_simplicity`]: the digit criterion, two classical criteria and
//!   the closed-form count.
//!
//! The [`cli`] module exposes everything on the command line; the `spchar`
//! binary is a thin wrapper around [`cli::run`].

pub mod binomial;
pub mod cli;
pub mod decomp_matrices;
pub mod error;
pub mod padic;
pub mod poly;
pub mod selftest;
mod ser;
pub mod series;
pub mod sl2;
pub mod sp_characters;
pub mod symmetric_group;
pub mod weyl_simplicity;

pub use error::{Error, Result};
pub use padic::{PadicExpansion, Precedence, Prime};
pub use series::TruncatedSeries;
