use std::path::Path;

use serde::{Deserialize, Serialize};

use super::checks::{
    check_almost_integrality, check_betti_integrality, check_cover_congruence,
    check_parity_subring_at, divisibility_order,
};
use super::engine::Engine;
use super::presets::{default_corpus, find_preset, CoverFamily, ManifoldPreset};
use super::report::{CheckKind, VerificationReport};
use crate::cobweight::MaslovConvention;
use crate::cyclotome::EtaSign;
use crate::error::{Error, Result};

fn default_primes() -> Vec<u64> {
    vec![5, 7]
}

fn default_degrees() -> Vec<u64> {
    vec![2, 3]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    /// Preset names; absent means the default corpus.
    #[serde(default)]
    pub presets: Option<Vec<String>>,
    #[serde(default = "default_primes")]
    pub primes: Vec<u64>,
    #[serde(default)]
    pub maslov_convention: MaslovConvention,
    #[serde(default)]
    pub eta_sign: EtaSign,
    /// Multiplies the surgery element; anything but 1 must abort the suite.
    #[serde(default)]
    pub omega_scale: Option<i64>,
    #[serde(default = "default_degrees")]
    pub cover_degrees: Vec<u64>,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            presets: None,
            primes: default_primes(),
            maslov_convention: MaslovConvention::default(),
            eta_sign: EtaSign::default(),
            omega_scale: None,
            cover_degrees: default_degrees(),
        }
    }
}

impl SuiteConfig {
    pub fn from_file(path: &Path) -> Result<SuiteConfig> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn corpus(&self) -> Result<Vec<ManifoldPreset>> {
        match &self.presets {
            None => Ok(default_corpus()),
            Some(names) => names.iter().map(|n| find_preset(n)).collect(),
        }
    }
}

/// A check that could not run, such as a strand-cap overflow.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Skipped {
    pub check: CheckKind,
    pub p: u64,
    pub manifold: String,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub reports: Vec<VerificationReport>,
    pub skipped: Vec<Skipped>,
    pub passed: usize,
    pub failed: usize,
    pub all_pass: bool,
}

impl SuiteSummary {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

fn record(
    out: &mut SuiteSummary,
    check: CheckKind,
    p: u64,
    m: &ManifoldPreset,
    r: Result<VerificationReport>,
) -> Result<()> {
    match r {
        Ok(rep) => out.reports.push(rep),
        Err(e @ Error::OmegaValidation(_)) => return Err(e),
        Err(e) => out.skipped.push(Skipped {
            check,
            p,
            manifold: m.name.clone(),
            reason: e.to_string(),
        }),
    }
    Ok(())
}

/// Run every applicable check over presets x primes. Reports are ordered by
/// check name, then prime, then preset.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteSummary> {
    let corpus = config.corpus()?;
    let mut out = SuiteSummary::default();
    if !corpus.is_empty() {
        for &p in &config.primes {
            let mut eng = Engine::with_options(
                p,
                config.maslov_convention,
                config.eta_sign,
                config.omega_scale,
            )?;
            for m in &corpus {
                let r = check_almost_integrality(&mut eng, m);
                record(&mut out, CheckKind::AlmostIntegrality, p, m, r)?;
                if m.beta1 > 0 {
                    let r = check_betti_integrality(&mut eng, m);
                    record(&mut out, CheckKind::BettiIntegrality, p, m, r)?;
                }
                if p % 4 == 1 {
                    match eng.invariant(m) {
                        Ok((_, w)) => {
                            for shift in [0, 1] {
                                let r = check_parity_subring_at(&mut eng, m, w + shift);
                                record(&mut out, CheckKind::ParitySubring, p, m, r)?;
                            }
                        }
                        Err(e) => record(&mut out, CheckKind::ParitySubring, p, m, Err(e))?,
                    }
                }
                let r = divisibility_order(&mut eng, m).map(|(_, rep)| rep);
                record(&mut out, CheckKind::Divisibility, p, m, r)?;
                if m.cover != CoverFamily::None {
                    for &d in &config.cover_degrees {
                        let r = check_cover_congruence(&mut eng, m, d);
                        record(&mut out, CheckKind::CoverCongruence, p, m, r)?;
                    }
                }
            }
        }
    }
    out.reports.sort_by_key(|a| (a.check, a.p));
    out.passed = out.reports.iter().filter(|r| r.verdict).count();
    out.failed = out.reports.len() - out.passed;
    out.all_pass = out.failed == 0;
    Ok(out)
}
