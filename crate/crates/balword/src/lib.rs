//! Command-line tools and JSON formats on top of `balword-core`.

pub mod cli;
pub mod input;
pub mod json;
pub mod parallel;
