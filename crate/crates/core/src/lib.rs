//! Exact combinatorial kernel: graphs and flag complexes, hyperplane and toric
//! intersection posets with characteristic/Poincaré polynomials, parametric
//! toric families with bifurcation data, and finite presentations of kernels
//! of right-angled Artin group characters.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there are no floating-point numbers anywhere in this crate. All container
//! orderings are canonical (BTree-based), so results are deterministic.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

use alloc::string::String;
use core::fmt;

pub mod exact;
pub mod flag;
pub mod graphs;
pub mod groups;
pub mod hyper;
pub mod poset;
pub mod toric;

/// Failure of a precondition (`Domain`) or of an internal invariant that
/// should be unreachable through the public API (`Internal`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Domain(String),
    Internal(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Internal(m) => write!(f, "internal invariant violation: {m}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
