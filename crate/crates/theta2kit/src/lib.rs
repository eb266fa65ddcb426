//! File formats, the object-spec grammar and the verification suites on
//! top of [`theta2kit_core`]. The `theta2kit` binary is a thin front end
//! over this crate.

mod error;
pub mod formats;
pub mod objects;
pub mod suites;

pub use error::{Error, Result};
pub use theta2kit_core as core;
