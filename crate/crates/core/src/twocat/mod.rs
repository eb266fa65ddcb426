//! Finite strict 2-categories, the cells `[m|k₁,…,k_m]` of `Θ₂`, and
//! 2-functor enumeration.

mod category;
mod enumerate;
mod functor;
mod shapes;
mod table;
mod two;
mod validate;

pub use category::{free_iso, ordinal, validate_category, FinCategory, Morphism};
pub use enumerate::{count_two_functors, enumerate_two_functors, find_iso_2cat, visit_two_functors, SearchLimits};
pub use functor::{suspend_functor, validate_functor, validate_two_functor, Functor, TwoFunctor};
pub use shapes::{
    cell, suspend_category, suspension_cell1, suspension_cell2, theta2_object, Theta2Shape, SUSPENSION_BOT,
    SUSPENSION_TOP,
};
pub use two::{Cell1, Cell2, Fin2Builder, Fin2Category, Fin2Tables, Generators, MAX_CELLS2};
pub use validate::validate_2cat;
