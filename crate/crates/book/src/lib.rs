//! The chapters of the guide in `book/`, one module each, so that
//! `cargo test --doc` runs every Rust listing.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-linear.md")]
pub mod exact_linear {}

#[doc = include_str!("../../../book/src/gl2z.md")]
pub mod gl2z {}

#[doc = include_str!("../../../book/src/extensions.md")]
pub mod extensions {}

#[doc = include_str!("../../../book/src/classifier.md")]
pub mod classifier {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
