//! Weighted cobordism bookkeeping: Lagrangians, Maslov corrections, evenness
//! and signature defects.

mod cobordism;
mod parity;
mod symplectic;
#[cfg(test)]
mod tests;

pub use cobordism::{
    apply, bundle_beta1, closure_weight, closure_weight_with, compose, compose_with, det, mat_inv,
    mat_mul, mat_pow, MaslovConvention, Mat2, TorusCobordism, IDENTITY, S_GEN, T_GEN,
};
pub use parity::{
    defect, defect_parity, is_even, is_even_capped, is_targeted, CappedBetti, HomologyProfile,
};
pub use symplectic::{maslov, Lagrangian, Line, SymplecticSpace};
