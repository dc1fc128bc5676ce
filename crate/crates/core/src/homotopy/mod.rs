//! Graded homotopy structures: A_∞ and Dend_∞ coalgebras, their shifted forms,
//! Rota-Baxter operators on A_∞ coalgebras, and the diassociative bar construction.

mod ainf;
mod dendinf;
mod diass;
mod graded;


pub use ainf::{
    check_ainf, check_rbo_inf, flip_entry, simplex_chains, tensor_operator, tensor_with_dg, AInfCoalgebra, RBOInf,
};
pub use dendinf::{
    check_dendinf, check_dendinf1, desuspend_map, induce_dendinf, induce_unchecked, shift_normalization,
    shift_to_dendinf1, split, split_unchecked, unshift_from_dendinf1, DendInf1Coalgebra, DendInfCoalgebra, LabeledOps,
};
pub use diass::{check_d_squared, diassociative_defects, pi_map, Derivation, DiassElement, DiassWord};
pub use graded::{pad_graded, pad_graded_then, GradedSpace};
