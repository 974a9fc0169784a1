pub mod cobweight;
pub mod cyclotome;
pub mod error;
pub mod linalg;
pub mod skein;
pub mod torusrep;
pub mod veritas;

pub use error::{Error, Result};
