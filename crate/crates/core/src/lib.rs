//! Exact cocycle-level differential cohomology on finite simplicial
//! complexes.
//!
//! Real coefficients are modeled by ℚ and smooth forms by Whitney
//! (piecewise-linear) forms, so every identity in the refined hexagon of
//! differential characters can be checked with exact arithmetic.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod exactalg;
pub mod simplicial;
pub mod plforms;
pub mod hscomplex;
pub mod cone;
pub mod report;
pub mod sample;
pub mod hexagon;
