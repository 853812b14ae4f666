//! The guide's chapters as modules, so `cargo test` runs their examples.

#[doc = include_str!("../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../book/src/points.md")]
pub mod points {}
#[doc = include_str!("../../book/src/regions.md")]
pub mod regions {}
#[doc = include_str!("../../book/src/edges.md")]
pub mod edges {}
#[doc = include_str!("../../book/src/tuples.md")]
pub mod tuples {}
#[doc = include_str!("../../book/src/verification.md")]
pub mod verification {}
#[doc = include_str!("../../book/src/tightness.md")]
pub mod tightness {}
#[doc = include_str!("../../README.md")]
pub mod readme {}
#[doc = include_str!("../../book/src/cli.md")]
pub mod cli {}
