//! Library side of the `ctswap` binary: argument definitions, input parsing
//! and report types, shared with the integration tests.

pub mod commands;
pub mod input;
pub mod report;
