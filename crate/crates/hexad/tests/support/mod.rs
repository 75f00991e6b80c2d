//! Test-only helpers shared by the integration targets.

#![allow(dead_code, clippy::needless_range_loop)]

pub mod oracle;
