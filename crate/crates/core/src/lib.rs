//! Spectral tools for distance-regular graphs given by their intersection arrays.
//!
//! Everything here works without `std`, including the graph oracle and the embedded
//! catalog. The command line lives in the `kneser` crate.
#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arrays;
pub mod catalog;
pub mod kneser;
pub mod linalg;
pub mod oracle;
mod error;
pub mod poly;
pub mod polybasis;
pub mod rational;
pub mod spectral;
mod tolerance;
pub mod verdict;

pub use error::Error;
pub use spectral::Analysis;
pub use tolerance::Tolerance;
