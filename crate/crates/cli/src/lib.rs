//! Model files and the `homlie` command-line driver.

pub mod app;
pub mod format;
