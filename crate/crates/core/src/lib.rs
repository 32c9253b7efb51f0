//! Plane graphs as rotation systems, constructive Tutte paths with exact
//! bridge-count accounting, and a brute-force oracle to check them.
//!
//! All bound quantities are integers counting thirds, so every inequality
//! is decided exactly.

pub mod connectivity;
pub mod engine;
pub mod error;
pub mod measures;
pub mod oracle;
pub mod plane;
pub mod toolkit;

pub use engine::{Engine, TutteResult};
pub use error::{Error, Result};
pub use measures::{BoundReport, Instance, Measurer, Mutation};
pub use plane::{PlaneGraph, Vid};
