//! Command-line front end: fan-file parsing, commands and reports.

pub mod commands;
pub mod fanfile;
pub mod report;
