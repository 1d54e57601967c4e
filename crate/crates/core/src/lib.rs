//! Signature-based Gröbner basis computation over prime fields.
//!
//! The crate is `no_std` (it needs `alloc`). It provides:
//!
//! * exact arithmetic in `GF(p)`, exponent-vector monomials, `lex`/`degrevlex`
//!   term orders, sparse polynomials and monomial ideals ([`algebra`]);
//! * module terms `t·e_i`, position-over-term / term-over-position module
//!   orders and the set of known syzygy leading terms ([`signatures`]);
//! * the signature-based algorithm itself, with normal-pair selection,
//!   primitivity filtering and the rewritable criterion ([`siggb`]);
//! * classical Buchberger and the staggered linear basis algorithm, reduced
//!   bases and a Gröbner basis verifier ([`baselines`]);
//! * the benchmark systems MMT92, Cyclic-n and Katsura-n ([`bench`]).
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod baselines;
pub mod bench;
mod error;
pub mod signatures;
pub mod siggb;
mod stats;

pub use algebra::{
    Monomial, MonomialIdeal, OrderKind, Polynomial, PrimeField, Ring, Term, TermOrder, MAX_VARS,
};
pub use error::{Error, Result};
pub use signatures::{ModuleOrder, ModuleOrderKind, ModuleTerm, SyzygyLeadSet};
pub use stats::RunStats;
