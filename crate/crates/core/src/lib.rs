//! Executable combinatorics of strict 2-categories and marked simplicial sets.
//!
//! The crate covers finite 2-categories and the cells of Joyal's category
//! `Θ₂`, marked simplicial sets stored by nondegenerate generators, the
//! Duskin nerve with its Roberts–Street and scaled markings, marked
//! suspension, and finitely presented `Θ₂`-sets together with the left Kan
//! extension `L` that sends `Θ₂[θ] ⊠ Δ[ℓ]` to `N^RS θ × Δ[ℓ]♯`.
//!
//! Everything is a pure function of immutable inputs; the crate is `no_std`
//! and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod msset;
pub mod nerves;
mod report;
pub mod suspension;
pub mod theta;
pub mod twocat;
mod unionfind;

pub use error::{Error, Result};
pub use report::{Report, Violation};

/// Default truncation bound for marked simplicial sets.
pub const DEFAULT_BOUND: usize = 5;
