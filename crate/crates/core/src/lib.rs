//! Checks for commutativity of operations: algebraic theories given by
//! presentations or by finite clones, finite monoids, symmetric operads,
//! and finite two-dimensional categorical structures.

pub mod cli;
pub mod clone;
pub mod model;
pub mod operad;
pub mod parallel;
pub mod structcat;
pub mod syntax;
pub mod tensor;
pub mod term;
