//! File formats and reporting for the `roughfca` command-line driver.

pub mod cxt;
pub mod dot;
pub mod json;
pub mod report;
