//! Library surface of the command-line harness, exposed for the
//! verification test suites.

pub mod corpus;
pub mod report;
pub mod spec;
pub mod suites;
