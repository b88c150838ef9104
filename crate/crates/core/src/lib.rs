//! Exact computation with group-graded Lie algebras and their graded modules.
// index loops read better than zipped iterators in the elimination code
#![allow(clippy::needless_range_loop)]

pub mod abgroup;
pub mod action;
pub mod catalog;
pub mod config;
pub mod error;
pub mod exactfield;
pub mod gradedmod;
pub mod io;
pub mod liecore;
pub mod loopalg;
pub mod report;

pub use config::Options;
pub use error::{Error, Result};

// The guide's code blocks run as doctests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/graded-algebras.md")]
    mod graded_algebras {}
    #[doc = include_str!("../../../book/src/loop-algebras.md")]
    mod loop_algebras {}
    #[doc = include_str!("../../../book/src/recognition.md")]
    mod recognition {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/loop-modules.md")]
    mod loop_modules {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
