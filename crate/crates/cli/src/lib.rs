//! Command-line front end: argument parsing, reports, SVG output and the
//! seeded self-test.

pub mod args;
pub mod commands;
pub mod report;
pub mod selftest;
pub mod svg;
