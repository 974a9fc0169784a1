use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::num::CycNum;
use super::quantum::{qint, twist};
use super::ring::RingContext;
use crate::error::Result;

/// Which of the two square roots is taken for `eta`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EtaSign {
    /// `eta` has positive real part under `A -> exp(i pi / p)`.
    #[default]
    PositiveReal,
    NegativeReal,
}

/// The normalization constants of the theory at a fixed prime.
#[derive(Clone, Debug)]
pub struct Constants {
    pub kappa: CycNum,
    pub eta: CycNum,
    pub dscript: CycNum,
    pub eta_sign: EtaSign,
}

/// Quadratic Gauss sum `sum_{j mod p} A^{2 j^2}`; its square is `(-1)^{(p-1)/2} p`.
pub fn gauss_sum(ctx: &Arc<RingContext>) -> CycNum {
    let p = ctx.p() as i64;
    let mut g = CycNum::zero(ctx);
    for j in 0..p {
        g = &g + &CycNum::a_pow(ctx, 2 * j * j);
    }
    g
}

/// An exact square root of `-p`.
pub fn sqrt_minus_p(ctx: &Arc<RingContext>) -> CycNum {
    let g = gauss_sum(ctx);
    if ctx.has_alpha() {
        &CycNum::zeta_pow(ctx, ctx.p() as i64) * &g
    } else {
        g
    }
}

/// `<U_+(Omega)>`: sum over even colors of `[c+1]^2 mu_c`.
pub fn omega_plus_unknot(ctx: &Arc<RingContext>) -> CycNum {
    let mut s = CycNum::zero(ctx);
    for c in (0..=ctx.p() as i64 - 3).step_by(2) {
        let q = qint(ctx, c + 1);
        s = &s + &(&(&q * &q) * &twist(ctx, c));
    }
    s
}

pub fn constants(ctx: &Arc<RingContext>) -> Result<Constants> {
    constants_with(ctx, EtaSign::default())
}

pub fn constants_with(ctx: &Arc<RingContext>, sign: EtaSign) -> Result<Constants> {
    let denom = &CycNum::a_pow(ctx, 2) - &CycNum::a_pow(ctx, -2);
    let mut dscript = sqrt_minus_p(ctx).try_div(&denom)?;
    let mut eta = dscript.inverse()?;
    let positive = eta.to_complex().0 > 0.0;
    if positive != (sign == EtaSign::PositiveReal) {
        dscript = -dscript;
        eta = -eta;
    }
    let kappa = &eta * &omega_plus_unknot(ctx);
    Ok(Constants {
        kappa,
        eta,
        dscript,
        eta_sign: sign,
    })
}
