//! Burnside-ring valued counts of the 27 lines on a cubic surface with
//! coordinate-permuting symmetry.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod burnside;
pub mod cli;
pub mod config;
pub mod equivariant;
pub mod export;
pub mod geometry;
pub mod group;
pub mod real;
