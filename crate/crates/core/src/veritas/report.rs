use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cobweight::MaslovConvention;
use crate::cyclotome::{CycJson, CycNum, EtaSign, RingContext};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    AlmostIntegrality,
    BettiIntegrality,
    ParitySubring,
    CoverCongruence,
    Divisibility,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckKind::AlmostIntegrality => "almost_integrality",
            CheckKind::BettiIntegrality => "betti_integrality",
            CheckKind::ParitySubring => "parity_subring",
            CheckKind::CoverCongruence => "cover_congruence",
            CheckKind::Divisibility => "divisibility",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: CheckKind,
    pub p: u64,
    pub manifold: String,
    pub inputs: BTreeMap<String, Value>,
    pub witnesses: BTreeMap<String, CycJson>,
    pub verdict: bool,
    pub eta_sign: EtaSign,
    pub maslov_convention: MaslovConvention,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub(crate) fn new(check: CheckKind, p: u64, manifold: &str) -> VerificationReport {
        VerificationReport {
            check,
            p,
            manifold: manifold.to_string(),
            inputs: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            verdict: false,
            eta_sign: EtaSign::default(),
            maslov_convention: MaslovConvention::default(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn input(&mut self, key: &str, v: impl Serialize) {
        self.inputs.insert(
            key.to_string(),
            serde_json::to_value(v).expect("serializable input"),
        );
    }

    pub(crate) fn witness(&mut self, key: &str, v: &CycNum) {
        self.witnesses.insert(key.to_string(), v.to_json());
    }

    fn get_witness(&self, ctx: &std::sync::Arc<RingContext>, key: &str) -> Result<CycNum> {
        let j = self
            .witnesses
            .get(key)
            .ok_or_else(|| Error::InvalidInput(format!("report lacks witness {key:?}")))?;
        CycNum::from_json(ctx, j)
    }

    fn get_input<T: serde::de::DeserializeOwned>(&self, key: &str) -> Result<T> {
        let v = self
            .inputs
            .get(key)
            .ok_or_else(|| Error::InvalidInput(format!("report lacks input {key:?}")))?;
        Ok(serde_json::from_value(v.clone())?)
    }

    /// Recompute the verdict from the serialized witnesses and inputs alone.
    pub fn recompute(&self) -> Result<bool> {
        let ctx = RingContext::new(self.p)?;
        match self.check {
            CheckKind::AlmostIntegrality => Ok(self.get_witness(&ctx, "scaled")?.is_integral()),
            CheckKind::BettiIntegrality => Ok(self.get_witness(&ctx, "invariant")?.is_integral()),
            CheckKind::ParitySubring => {
                let v = self.get_witness(&ctx, "invariant")?;
                let even: bool = self.get_input("even")?;
                Ok(parity_membership(&v, even)?)
            }
            CheckKind::CoverCongruence => {
                let diff = self.get_witness(&ctx, "difference")?;
                let r: u64 = self.get_input("r")?;
                Ok(diff.is_integral() && diff.divisible_by(r)?)
            }
            CheckKind::Divisibility => {
                let k: Option<u32> = self.get_input("k")?;
                let beta1: u64 = self.get_input("beta1")?;
                let Some(k) = k else {
                    return Ok(self.get_witness(&ctx, "invariant")?.is_zero());
                };
                let at_k = self.get_witness(&ctx, "quotient_k")?;
                let past = self.get_witness(&ctx, "quotient_k_plus_1")?;
                Ok(at_k.is_integral() && !past.is_integral() && (beta1 == 0 || k >= 1))
            }
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One-line human-readable summary.
    pub fn summary(&self) -> String {
        let mut extra = String::new();
        for (k, v) in &self.inputs {
            extra.push_str(&format!(" {k}={v}"));
        }
        format!(
            "[{}] {} p={} {}:{}",
            if self.verdict { "PASS" } else { "FAIL" },
            self.check,
            self.p,
            self.manifold,
            extra
        )
    }
}

/// `v` in `Z[A, 1/p]` when `even`, otherwise in `alpha Z[A, 1/p]`.
pub fn parity_membership(v: &CycNum, even: bool) -> Result<bool> {
    if even {
        Ok(v.in_a_subring())
    } else {
        let a = CycNum::alpha_pow(v.context(), -1)?;
        Ok((&a * v).in_a_subring())
    }
}
