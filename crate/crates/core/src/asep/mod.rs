//! The two-species ASEP with open boundaries and its stationary distribution.

mod chain;
mod stationary;

pub use chain::{build_generator, AsepParams, ChainSector};
pub use stationary::{
    cross_validate, random_params, sample_trajectory, spaced, stationary_exact, tableaux_distribution, StationaryDist,
};
