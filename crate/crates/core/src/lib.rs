//! Exact computations with finite-dimensional nonassociative algebras:
//! dextral symmetry, ideal series, a catalog of examples, and monomial
//! calculus in Leavitt path algebras.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod dextral;
pub mod exactlin;
pub mod identities;
pub mod series;
pub mod catalog;
pub mod leavitt;
pub mod verify;
