//! Command-line front end for `kneser-core`: analysis reports, catalog queries and the
//! verification suite.

pub mod commands;
pub mod report;
pub mod surd;
