//! Exact symbolic engine for two-species open-boundary ASEP polynomials,
//! rhombic staircase tableaux and rank-one Koornwinder polynomials.

pub mod asep;
pub mod cli;
pub mod error;
pub mod exactalg;
pub mod hecke;
pub mod koornwinder;
pub mod tableaux;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
pub use report::Report;
