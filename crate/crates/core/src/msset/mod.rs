//! Marked simplicial sets stored by nondegenerate generators with faces in
//! Eilenberg–Zilber normal form.

mod colimit;
mod maps;
mod product;
mod sset;
mod standard;
mod word;

pub use colimit::{colimit, Arrow, Colimit, Diagram};
pub use maps::{enumerate_maps, find_iso, inverse, is_iso, is_mono, validate_map, visit_maps, MSSetMap};
pub use product::{product, product_map, Product};
pub use sset::{validate_msset, GenId, Generator, MarkedSSet, SimplexRef, SimplexTable};
pub use standard::{delta_map, discrete, simplex_map, simplex_with_vertices, standard_simplex, SimplexVariant};
pub use word::{codegeneracy, coface, epi_mono, is_monotone, subsets, DegeneracyWord};
