//! Exact arithmetic in `K_p = Z[zeta_n, 1/p]` and its ring of integers.

mod acc;
mod constants;
mod num;
mod quantum;
mod ring;

pub use acc::{Acc, Scalar};
pub use constants::{
    constants, constants_with, gauss_sum, omega_plus_unknot, sqrt_minus_p, Constants, EtaSign,
};
pub use num::{CycJson, CycNum};
pub use quantum::{delta, qint, quantum_dim, quantum_integer, twist};
pub use ring::{cyclotomic_polynomial, RingContext};
