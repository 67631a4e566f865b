//! File formats, family generation by name and the table-reproduction
//! harness behind the `rainbow` binary.

pub mod format;
pub mod generate;
pub mod reproduce;
