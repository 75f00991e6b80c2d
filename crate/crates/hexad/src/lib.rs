//! File formats, report rendering and the command-line driver for
//! [`hexad_core`].

pub mod commands;
pub mod format;
pub mod report;
