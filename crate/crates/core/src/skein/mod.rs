//! Kauffman bracket evaluation of framed colored diagrams and the surgery formula.

mod bracket;
pub mod braid;
mod cable;
mod diagram;
pub mod sweep;
pub mod tl;

pub use bracket::{
    bracket, closed_invariant, colored_bracket, kappa_pow, linking_signature, normalized_bracket,
    omega_unknot, omega_vector, strand_cap, twist_pow, validate_omega, Evaluator,
    DEFAULT_STRAND_CAP,
};
pub use diagram::{Color, Component, Crossing, FramedColoredDiagram, Topology};

#[cfg(test)]
mod tests;
