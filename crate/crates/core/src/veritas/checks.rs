use super::engine::Engine;
use super::presets::{CoverFamily, ManifoldPreset, PresetKind};
use super::report::{parity_membership, CheckKind, VerificationReport};
use crate::cobweight::{
    bundle_beta1, closure_weight_with, compose_with, defect, defect_parity, is_even,
    HomologyProfile, TorusCobordism,
};
use crate::cyclotome::CycNum;
use crate::error::{Error, Result};

fn start(eng: &Engine, check: CheckKind, m: &ManifoldPreset) -> VerificationReport {
    let mut r = VerificationReport::new(check, eng.p(), &m.name);
    r.eta_sign = eng.eta_sign();
    r.maslov_convention = eng.convention();
    r
}

fn require_connected(m: &ManifoldPreset) -> Result<()> {
    if !m.connected {
        return Err(Error::InvalidInput(format!("{} is not connected", m.name)));
    }
    Ok(())
}

/// `D_p <M>` is integral.
pub fn check_almost_integrality(
    eng: &mut Engine,
    m: &ManifoldPreset,
) -> Result<VerificationReport> {
    require_connected(m)?;
    let (v, w) = eng.invariant(m)?;
    let scaled = &eng.constants().dscript.clone() * &v;
    let mut r = start(eng, CheckKind::AlmostIntegrality, m);
    r.input("weight", w);
    r.witness("invariant", &v);
    r.witness("scaled", &scaled);
    r.verdict = scaled.is_integral();
    Ok(r)
}

/// `<M>` itself is integral when the first Betti number is positive.
pub fn check_betti_integrality(eng: &mut Engine, m: &ManifoldPreset) -> Result<VerificationReport> {
    require_connected(m)?;
    if m.beta1 == 0 {
        return Err(Error::InvalidInput(format!("{} has b1 = 0", m.name)));
    }
    let (v, w) = eng.invariant(m)?;
    let mut r = start(eng, CheckKind::BettiIntegrality, m);
    r.input("weight", w);
    r.input("beta1", m.beta1);
    r.witness("invariant", &v);
    r.verdict = v.is_integral();
    Ok(r)
}

/// Subring membership of `<M>` at the preset's natural weight.
pub fn check_parity_subring(eng: &mut Engine, m: &ManifoldPreset) -> Result<VerificationReport> {
    let (_, w) = eng.invariant(m)?;
    check_parity_subring_at(eng, m, w)
}

/// Even closed manifolds have invariants in `Z[A, 1/p]`, odd ones in `alpha Z[A, 1/p]`.
pub fn check_parity_subring_at(
    eng: &mut Engine,
    m: &ManifoldPreset,
    w: i64,
) -> Result<VerificationReport> {
    require_connected(m)?;
    if eng.p() % 4 != 1 {
        return Err(Error::InvalidInput(format!(
            "p = {} is 3 mod 4; the statement is vacuous",
            eng.p()
        )));
    }
    let v = eng.invariant_at(m, w)?;
    let even = is_even(&HomologyProfile::closed(1, m.beta1), w)?;
    let mut r = start(eng, CheckKind::ParitySubring, m);
    r.input("weight", w);
    r.input("beta1", m.beta1);
    r.input("even", even);
    r.witness("invariant", &v);
    r.verdict = parity_membership(&v, even)?;
    Ok(r)
}

fn prime_power_base(d: u64) -> Result<u64> {
    if d < 2 {
        return Err(Error::InvalidInput(format!(
            "cover degree {d} must be at least 2"
        )));
    }
    let r = (2..=d)
        .find(|q| d.is_multiple_of(*q))
        .expect("d >= 2 has a prime factor");
    let mut x = d;
    while x.is_multiple_of(r) {
        x /= r;
    }
    if x != 1 {
        return Err(Error::InvalidInput(format!(
            "cover degree {d} is not a prime power"
        )));
    }
    Ok(r)
}

/// The congruence between a simple cyclic cover and its base, for the supported
/// cover families.
pub fn check_cover_congruence(
    eng: &mut Engine,
    base: &ManifoldPreset,
    d: u64,
) -> Result<VerificationReport> {
    match (&base.cover, &base.kind) {
        (CoverFamily::Bundle, PresetKind::TorusBundle { cob, .. }) => {
            let conv = eng.convention();
            let mut cover = cob.clone();
            for _ in 1..d {
                cover = compose_with(cob, &cover, conv)?;
            }
            let wb = closure_weight_with(cob, conv)?;
            let wc = closure_weight_with(&cover, conv)?;
            let vb = eng.rep().mapping_torus_invariant(cob)?;
            let vc = eng.rep().mapping_torus_invariant(&cover)?;
            let b1c = bundle_beta1(&cover.monodromy);
            let def = defect(d as i64, wb, wc);
            check_cover_pair(eng, base, (vb, wb), (vc, wc), b1c, d, def)
        }
        (CoverFamily::Product, _) => {
            let (v, w) = eng.invariant(base)?;
            let (vc, wc) = (v.clone(), d as i64 * w);
            let def = defect(d as i64, w, wc);
            check_cover_pair(eng, base, (v, w), (vc, wc), base.beta1, d, def)
        }
        _ => Err(Error::UnsupportedCover(format!(
            "{} has no implemented cyclic cover family",
            base.name
        ))),
    }
}

/// Congruence for an explicit (base, cover, defect) triple given by invariants and weights.
pub fn check_cover_pair(
    eng: &mut Engine,
    base: &ManifoldPreset,
    (vb, wb): (CycNum, i64),
    (vc, wc): (CycNum, i64),
    beta1_cover: u64,
    d: u64,
    def: i64,
) -> Result<VerificationReport> {
    let r = prime_power_base(d)?;
    let nb = &vb * &eng.weight_factor(-wb);
    let nc = &vc * &eng.weight_factor(-wc);
    let predicted = &eng.weight_factor(def) * &nb.pow(d as i64)?;
    let diff = &nc - &predicted;
    let mut rep = start(eng, CheckKind::CoverCongruence, base);
    rep.input("d", d);
    rep.input("r", r);
    rep.input("weight_base", wb);
    rep.input("weight_cover", wc);
    rep.input("defect", def);
    rep.input("beta1_base", base.beta1);
    rep.input("beta1_cover", beta1_cover);
    rep.input(
        "defect_parity_ok",
        defect_parity(d as i64, base.beta1, beta1_cover, def),
    );
    rep.witness("normalized_base", &nb);
    rep.witness("normalized_cover", &nc);
    rep.witness("difference", &diff);
    rep.verdict = diff.is_integral() && diff.divisible_by(r)?;
    Ok(rep)
}

/// Largest `k` with `D_p^k` dividing `I_p(M) = D_p <<M>>`, `None` when the invariant vanishes.
pub fn divisibility_order(
    eng: &mut Engine,
    m: &ManifoldPreset,
) -> Result<(Option<u32>, VerificationReport)> {
    require_connected(m)?;
    let dscript = eng.constants().dscript.clone();
    let inv = &dscript * &eng.normalized(m)?;
    let mut rep = start(eng, CheckKind::Divisibility, m);
    rep.input("beta1", m.beta1);
    rep.input("cut_number", m.cut_number);
    rep.witness("invariant", &inv);
    if inv.is_zero() {
        rep.input("k", Option::<u32>::None);
        rep.notes
            .push("invariant vanishes; every power divides it".into());
        rep.verdict = true;
        return Ok((None, rep));
    }
    let mut k = 0u32;
    let mut cur = inv.clone();
    loop {
        let next = cur.try_div(&dscript)?;
        if !next.is_integral() {
            if !cur.is_integral() {
                rep.notes.push("invariant is not integral".into());
            }
            rep.witness("quotient_k", &cur);
            rep.witness("quotient_k_plus_1", &next);
            break;
        }
        cur = next;
        k += 1;
    }
    rep.input("k", Some(k));
    if let Some(c) = m.cut_number {
        rep.input("meets_cut_number", k >= c);
        if c >= 2 {
            rep.notes
                .push(format!("cut number {c}: comparison reported, not asserted"));
        }
    }
    rep.verdict = cur.is_integral() && (m.beta1 == 0 || k >= 1);
    Ok((Some(k), rep))
}

/// Mapping-torus invariant via the trace and via a surgery presentation, both at
/// the closure weight. Only `T^a` monodromies have a surgery presentation here.
pub fn surgery_crosscheck(eng: &mut Engine, cob: &TorusCobordism) -> Result<(CycNum, CycNum)> {
    let [[a, b], [c, d]] = cob.monodromy;
    if a != 1 || c != 0 || d != 1 || cob.source_lag != cob.target_lag {
        return Err(Error::UnsupportedCover(format!(
            "no surgery presentation for monodromy {:?}",
            cob.monodromy
        )));
    }
    let trace = eng.rep().mapping_torus_invariant(cob)?;
    let w = closure_weight_with(cob, eng.convention())?;
    let preset = super::presets::borromean_bundle(b)?;
    let surgery = eng.invariant_at(&preset, w)?;
    Ok((trace, surgery))
}
