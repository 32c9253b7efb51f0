//! Generators, tuple sampling and the stress harness.

pub mod generate;
pub mod stress;
pub mod tuples;

pub use generate::{generate, Family, GeneratorSpec};
pub use stress::{stress, StressConfig, StressSummary};
