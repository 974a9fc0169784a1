use std::sync::Arc;

use super::presets::{ManifoldPreset, PresetKind};
use crate::cobweight::MaslovConvention;
use crate::cyclotome::{Constants, CycNum, EtaSign, RingContext};
use crate::error::Result;
use crate::skein::{kappa_pow, Evaluator};
use crate::torusrep::{TorusRep, TorusSpace};

/// Per-prime evaluation state shared by all checks.
pub struct Engine {
    ctx: Arc<RingContext>,
    ev: Evaluator,
    rep: TorusRep,
    conv: MaslovConvention,
    sign: EtaSign,
}

impl Engine {
    pub fn new(p: u64) -> Result<Engine> {
        Engine::with_options(p, MaslovConvention::default(), EtaSign::default(), None)
    }

    pub fn with_options(
        p: u64,
        conv: MaslovConvention,
        sign: EtaSign,
        omega_scale: Option<i64>,
    ) -> Result<Engine> {
        let ctx = RingContext::new(p)?;
        let scale = omega_scale.map(|s| CycNum::from_int(&ctx, s));
        let ev = Evaluator::with_options(&ctx, sign, scale.as_ref())?;
        let space = TorusSpace::with_sign(&ctx, sign)?;
        Ok(Engine {
            rep: TorusRep::with_convention(&space, conv),
            ctx,
            ev,
            conv,
            sign,
        })
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn p(&self) -> u64 {
        self.ctx.p()
    }

    pub fn constants(&self) -> &Constants {
        self.ev.constants()
    }

    pub fn convention(&self) -> MaslovConvention {
        self.conv
    }

    pub fn eta_sign(&self) -> EtaSign {
        self.sign
    }

    pub fn evaluator(&mut self) -> &mut Evaluator {
        &mut self.ev
    }

    pub fn rep(&self) -> &TorusRep {
        &self.rep
    }

    /// The scalar by which raising the weight by `e` multiplies invariants.
    pub fn weight_factor(&self, e: i64) -> CycNum {
        kappa_pow(&self.constants().kappa, self.conv.orientation() * e)
    }

    /// Invariant at the preset's natural weight, with that weight.
    pub fn invariant(&mut self, m: &ManifoldPreset) -> Result<(CycNum, i64)> {
        match &m.kind {
            PresetKind::Surgery(d) => {
                let v = self.ev.closed_invariant(d)?;
                Ok((v, self.conv.orientation() * d.weight))
            }
            PresetKind::TorusBundle { cob, .. } => {
                let w = self.rep.closure_weight(cob)?;
                Ok((self.rep.mapping_torus_invariant(cob)?, w))
            }
        }
    }

    /// Invariant at weight `w`.
    pub fn invariant_at(&mut self, m: &ManifoldPreset, w: i64) -> Result<CycNum> {
        let (v, w0) = self.invariant(m)?;
        Ok(&v * &self.weight_factor(w - w0))
    }

    /// Weight-normalized invariant, i.e. the invariant at weight zero.
    pub fn normalized(&mut self, m: &ManifoldPreset) -> Result<CycNum> {
        self.invariant_at(m, 0)
    }
}
