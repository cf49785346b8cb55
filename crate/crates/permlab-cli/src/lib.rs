//! Campaign orchestration, report persistence, and query plumbing for the
//! permlab verifier binary.

#![allow(clippy::manual_is_multiple_of)]

pub mod campaign;
pub mod config;
pub mod parse;
pub mod report;
