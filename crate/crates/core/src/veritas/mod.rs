//! Verification harness: presets, checks, structured reports and the suite runner.

mod checks;
mod engine;
mod presets;
mod report;
mod suite;

pub use checks::{
    check_almost_integrality, check_betti_integrality, check_cover_congruence, check_cover_pair,
    check_parity_subring, check_parity_subring_at, divisibility_order, surgery_crosscheck,
};
pub use engine::Engine;
pub use presets::{
    borromean_bundle, default_corpus, find_preset, CoverFamily, ManifoldPreset, PresetKind,
};
pub use report::{parity_membership, CheckKind, VerificationReport};
pub use suite::{run_suite, Skipped, SuiteConfig, SuiteSummary};
