//! File formats, reports, and command implementations behind the
//! `fincat` binary, exposed as a library so the fixture generator and
//! the integration tests drive the same code paths.

pub mod bundle;
pub mod commands;
pub mod formats;
pub mod report;
