//! The genus-one representation on the even-colored torus state space.

mod matrix;
mod rep;
mod word;

pub use matrix::{s_matrix, t_matrix, TorusSpace, TransferMatrix};
pub use rep::{
    bowen_franks, bowen_franks_entries, bowen_franks_localized, charpoly, restrict_scalars,
    TorusRep,
};
pub use word::{Gen, Word};
