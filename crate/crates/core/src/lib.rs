//! Exact Lah and Lah-Bell combinatorics: numbers, index-set enumeration,
//! sparse polynomials, Bell-type polynomial families, truncated power series
//! and cross-checking of the identities that connect them.

pub mod bell;
pub mod cli;
pub mod error;
pub mod exact;
pub mod partitions;
pub mod poly;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
