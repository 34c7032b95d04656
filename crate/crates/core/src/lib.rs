//! Exact construction of the left quantum groups `SL~_q(n)` and `M~_q(n)`.
//!
//! Scalars live in `Z[q, q^-1]` ([`laurent`]). Elements of the free matrix
//! bialgebra are [`NcPoly`] values over words in the generators `X[i,j]`
//! ([`freealg`]); the quotients are presented by confluent reduction systems
//! ([`rewrite`]) whose rules come from the quantum determinants `D_I`
//! ([`qcomb`]). [`hopf`] builds the quantum-adjoint antipode and checks that
//! it is a left but not a right antipode; [`comodule`] checks the coaction on
//! the exterior-type algebra `Λ~_q(n)`.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod comodule;
pub mod error;
pub mod freealg;
pub mod hopf;
pub mod laurent;
pub mod lincomb;
pub mod qcomb;
pub mod report;
pub mod rewrite;

pub use error::{Error, Result};
pub use freealg::{Generator, NcPoly, TensorPoly, Word};
pub use laurent::LaurentPoly;
pub use lincomb::LinComb;
pub use report::{CheckItem, Report};
pub use rewrite::{Mode, RewriteSystem, Rule, Strategy};
