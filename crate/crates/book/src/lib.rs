//! The chapters of `book/` compiled as rustdoc pages, so `cargo test --doc`
//! runs every snippet of the guide against the current library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/parameters.md")]
pub mod parameters {}
#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}
#[doc = include_str!("../../../book/src/crossings.md")]
pub mod crossings {}
#[doc = include_str!("../../../book/src/writhe.md")]
pub mod writhe {}
#[doc = include_str!("../../../book/src/lemmas.md")]
pub mod lemmas {}
#[doc = include_str!("../../../book/src/homfly.md")]
pub mod homfly {}
#[doc = include_str!("../../../book/src/geometry.md")]
pub mod geometry {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
