use std::collections::HashMap;
use std::sync::Arc;

use super::cable::cable;
use super::diagram::{Color, FramedColoredDiagram, Topology};
use super::sweep::{evaluate, Vertex};
use super::tl::{jones_wenzl, TLElement};
use crate::cyclotome::{
    constants_with, delta, qint, quantum_dim, Constants, CycNum, EtaSign, RingContext,
};
use crate::error::{Error, Result};
use crate::linalg::signature;

pub const DEFAULT_STRAND_CAP: usize = 14;

/// Boundary-point cap for Temperley-Lieb elements, overridable by `TQI_STRAND_CAP`.
pub fn strand_cap() -> usize {
    std::env::var("TQI_STRAND_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_STRAND_CAP)
}

/// Kauffman bracket of the underlying unoriented diagram (colors and framings are
/// ignored). The empty diagram is 1 and every loop, including a crossingless one,
/// contributes `delta`.
pub fn bracket(ctx: &Arc<RingContext>, d: &FramedColoredDiagram) -> Result<CycNum> {
    let topo = d.topology()?;
    let vertices: Vec<Vertex> = d
        .crossings
        .iter()
        .map(|x| Vertex::crossing(ctx, x.arcs))
        .collect();
    let free = topo
        .order
        .iter()
        .filter(|o| !topo.next.contains_key(&o[0]))
        .count();
    let v = evaluate(ctx, &vertices)?;
    Ok(&v * &delta(ctx).pow(free as i64)?)
}

/// Bracket divided by the loop value, so that the unknot evaluates to 1.
pub fn normalized_bracket(ctx: &Arc<RingContext>, d: &FramedColoredDiagram) -> Result<CycNum> {
    bracket(ctx, d)?.try_div(&delta(ctx))
}

/// `mu_c^k` for any integer `k`.
pub fn twist_pow(ctx: &Arc<RingContext>, c: i64, k: i64) -> CycNum {
    let m = CycNum::a_pow(ctx, (c * c + 2 * c) * k);
    if (c * k) % 2 != 0 {
        -m
    } else {
        m
    }
}

/// The surgery element as (even color, coefficient) pairs.
pub fn omega_vector(ctx: &Arc<RingContext>) -> Vec<(u32, CycNum)> {
    (0..=ctx.p() as i64 - 3)
        .step_by(2)
        .map(|c| (c as u32, qint(ctx, c + 1)))
        .collect()
}

/// `<U_f(Omega)>` for the crossingless unknot with framing `f`.
pub fn omega_unknot(ctx: &Arc<RingContext>, omega: &[(u32, CycNum)], f: i64) -> CycNum {
    let mut s = CycNum::zero(ctx);
    for (c, w) in omega {
        let c = *c as i64;
        s = &s + &(&(w * &quantum_dim(ctx, c)) * &twist_pow(ctx, c, f));
    }
    s
}

/// Check the two normalization identities the surgery element must satisfy.
pub fn validate_omega(
    ctx: &Arc<RingContext>,
    k: &Constants,
    omega: &[(u32, CycNum)],
) -> Result<()> {
    let target = (&k.dscript * &k.dscript).clone();
    let u0 = omega_unknot(ctx, omega, 0);
    if u0 != target {
        return Err(Error::OmegaValidation(format!(
            "<U_0(Omega)> = {u0} differs from eta^-2 = {target}"
        )));
    }
    let pm = &omega_unknot(ctx, omega, 1) * &omega_unknot(ctx, omega, -1);
    if pm != target {
        return Err(Error::OmegaValidation(format!(
            "<U_+(Omega)><U_-(Omega)> = {pm} differs from eta^-2"
        )));
    }
    if omega
        .iter()
        .any(|(c, _)| c % 2 != 0 || *c as u64 > ctx.p() - 3)
    {
        return Err(Error::OmegaValidation(
            "colors must be even and at most p-3".into(),
        ));
    }
    Ok(())
}

/// Signature of the linking matrix of the given components.
pub fn linking_signature(d: &FramedColoredDiagram) -> Result<i64> {
    let topo = d.topology()?;
    let lk = d.linking_matrix(&topo)?;
    Ok(signature(&lk))
}

/// Evaluation context: constants, a validated surgery element, and the
/// Jones-Wenzl memo.
pub struct Evaluator {
    ctx: Arc<RingContext>,
    consts: Constants,
    omega: Vec<(u32, CycNum)>,
    cap: usize,
    jw: HashMap<usize, TLElement>,
}

impl Evaluator {
    pub fn new(ctx: &Arc<RingContext>) -> Result<Evaluator> {
        Evaluator::with_options(ctx, EtaSign::default(), None)
    }

    /// `omega_scale` multiplies every surgery coefficient; anything but 1 must fail
    /// validation.
    pub fn with_options(
        ctx: &Arc<RingContext>,
        sign: EtaSign,
        omega_scale: Option<&CycNum>,
    ) -> Result<Evaluator> {
        let consts = constants_with(ctx, sign)?;
        let mut omega = omega_vector(ctx);
        if let Some(s) = omega_scale {
            for (_, w) in omega.iter_mut() {
                *w = &*w * s;
            }
        }
        validate_omega(ctx, &consts, &omega)?;
        Ok(Evaluator {
            ctx: ctx.clone(),
            consts,
            omega,
            cap: strand_cap(),
            jw: HashMap::new(),
        })
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn constants(&self) -> &Constants {
        &self.consts
    }

    pub fn omega(&self) -> &[(u32, CycNum)] {
        &self.omega
    }

    pub fn set_cap(&mut self, cap: usize) {
        self.cap = cap;
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn jones_wenzl(&mut self, c: usize) -> Result<TLElement> {
        if 2 * c > self.cap {
            return Err(Error::CapExceeded {
                color: c,
                needed: 2 * c,
                cap: self.cap,
            });
        }
        if let Some(f) = self.jw.get(&c) {
            return Ok(f.clone());
        }
        let f = jones_wenzl(&self.ctx, c)?;
        self.jw.insert(c, f.clone());
        Ok(f)
    }

    /// Colored bracket with the given color per component, framing-corrected.
    pub fn colored_with(
        &mut self,
        d: &FramedColoredDiagram,
        topo: &Topology,
        colors: &[u32],
    ) -> Result<CycNum> {
        let ctx = self.ctx.clone();
        let pmax = ctx.p() as u32 - 2;
        for &c in colors {
            if c > pmax {
                return Err(Error::OutOfRange {
                    what: "color must lie in 0..=p-2",
                    value: c as i64,
                });
            }
        }
        let writhes = d.writhes(topo);
        let mut factor = CycNum::one(&ctx);
        let mut any_crossing_comp = false;
        for (ci, comp) in d.components.iter().enumerate() {
            let c = colors[ci] as i64;
            let crossingless = !topo.next.contains_key(&topo.order[ci][0]);
            if crossingless {
                factor = &factor * &(&quantum_dim(&ctx, c) * &twist_pow(&ctx, c, comp.framing));
            } else {
                any_crossing_comp = true;
                factor = &factor * &twist_pow(&ctx, c, comp.framing - writhes[ci]);
            }
        }
        if !any_crossing_comp || factor.is_zero() {
            return Ok(factor);
        }
        let mut jw = |c: usize| self.jones_wenzl(c);
        let cabled = cable(&ctx, d, topo, colors, &mut jw)?;
        let v = evaluate(&ctx, &cabled.vertices)?;
        let loops = delta(&ctx).pow(cabled.free_loops as i64)?;
        Ok(&(&v * &loops) * &factor)
    }

    /// Colored bracket of a diagram whose colors are all explicit.
    pub fn colored_bracket(&mut self, d: &FramedColoredDiagram) -> Result<CycNum> {
        let topo = d.topology()?;
        let colors = d
            .components
            .iter()
            .map(|c| match c.color {
                Color::Explicit(k) => Ok(k),
                Color::Omega => Err(Error::InvalidInput(
                    "colored bracket needs explicit colors; use closed_invariant".into(),
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        self.colored_with(d, &topo, &colors)
    }

    /// Bracket with every surgery component colored by the surgery element.
    pub fn omega_bracket(&mut self, d: &FramedColoredDiagram) -> Result<CycNum> {
        let topo = d.topology()?;
        let omega_idx: Vec<usize> = d
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.color == Color::Omega)
            .map(|(i, _)| i)
            .collect();
        let mut colors: Vec<u32> = d
            .components
            .iter()
            .map(|c| match c.color {
                Color::Explicit(k) => k,
                Color::Omega => 0,
            })
            .collect();
        let omega = self.omega.clone();
        let mut total = CycNum::zero(&self.ctx);
        let mut pick = vec![0usize; omega_idx.len()];
        loop {
            let mut coef = CycNum::one(&self.ctx);
            for (slot, &ci) in omega_idx.iter().enumerate() {
                let (c, w) = &omega[pick[slot]];
                colors[ci] = *c;
                coef = &coef * w;
            }
            let v = self.colored_with(d, &topo, &colors)?;
            total = &total + &(&coef * &v);
            let mut i = 0;
            loop {
                if i == pick.len() {
                    return Ok(total);
                }
                pick[i] += 1;
                if pick[i] < omega.len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
        }
    }

    /// `kappa^{w - sigma} eta^{1 + n} <L(Omega), J>` for a surgery presentation.
    pub fn closed_invariant(&mut self, d: &FramedColoredDiagram) -> Result<CycNum> {
        let topo = d.topology()?;
        let omega_idx: Vec<usize> = d
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.color == Color::Omega)
            .map(|(i, _)| i)
            .collect();
        let lk = d.linking_matrix(&topo)?;
        let sub: Vec<Vec<i64>> = omega_idx
            .iter()
            .map(|&a| omega_idx.iter().map(|&b| lk[a][b]).collect())
            .collect();
        let sigma = signature(&sub);
        let n = omega_idx.len() as i64;
        let b = self.omega_bracket(d)?;
        let k = &self.consts;
        let pre = &kappa_pow(&k.kappa, d.weight - sigma) * &k.eta.pow(1 + n)?;
        Ok(&pre * &b)
    }
}

/// Power of a root of unity; negative exponents go through conjugation.
pub fn kappa_pow(kappa: &CycNum, e: i64) -> CycNum {
    let base = if e < 0 { kappa.conj() } else { kappa.clone() };
    base.pow(e.abs()).expect("nonnegative power")
}

/// Colored bracket using a fresh evaluator.
pub fn colored_bracket(ctx: &Arc<RingContext>, d: &FramedColoredDiagram) -> Result<CycNum> {
    Evaluator::new(ctx)?.colored_bracket(d)
}

/// Closed-manifold invariant using a fresh evaluator.
pub fn closed_invariant(ctx: &Arc<RingContext>, d: &FramedColoredDiagram) -> Result<CycNum> {
    Evaluator::new(ctx)?.closed_invariant(d)
}
