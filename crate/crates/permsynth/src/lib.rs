//! File formats and report text for the `permsynth` command-line compiler.

pub mod format;
pub mod report;
