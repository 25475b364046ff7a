//! Exact computations on Calogero–Moser spaces and their commuting-variety
//! limits: trace generators, Poisson brackets, relations, Gröbner bases and
//! Hilbert series.

pub mod catalogue;
pub mod error;
pub mod exactmat;
pub mod polyring;
pub mod presentation;
pub mod traceword;
pub mod varieties;

pub use error::{Error, Result};
