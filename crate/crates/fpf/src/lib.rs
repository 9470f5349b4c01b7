//! File formats, fixtures, reports and the batch drivers behind the `fpf`
//! binary.

pub mod automatonfile;
pub mod braid_text;
pub mod fixtures;
pub mod parallel;
pub mod trackfile;
pub mod report;
pub mod manifest;
pub mod battery;
