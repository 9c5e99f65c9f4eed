//! File formats, SVG output and command drivers behind the `cornerpack`
//! binary.

pub mod commands;
pub mod format;
pub mod svg;
