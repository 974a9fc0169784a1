use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::{s_matrix, t_matrix, TorusSpace, TransferMatrix};
use super::word::{Gen, Word};
use crate::cobweight::{
    closure_weight_with, compose_with, MaslovConvention, TorusCobordism, IDENTITY,
};
use crate::cyclotome::CycNum;
use crate::error::{Error, Result};
use crate::linalg::{self, smith_normal_form};
use crate::skein::kappa_pow;

/// Weight of the composite of weight-zero generator cylinders, conjugated into
/// the requested end lines.
fn reference_weight(word: &Word, cob: &TorusCobordism, conv: MaslovConvention) -> Result<i64> {
    let meridian = crate::cobweight::Line::meridian();
    let mut n = TorusCobordism::new(IDENTITY, 0, cob.source_lag, meridian)?;
    for g in word.0.iter().rev() {
        let c = TorusCobordism::cylinder(g.matrix(), 0)?;
        n = compose_with(&c, &n, conv)?;
    }
    let end = TorusCobordism::new(IDENTITY, 0, meridian, cob.target_lag)?;
    Ok(compose_with(&end, &n, conv)?.weight)
}

/// Generator matrices for a fixed space.
#[derive(Clone, Debug)]
pub struct TorusRep {
    space: TorusSpace,
    s: TransferMatrix,
    t: TransferMatrix,
    t_inv: TransferMatrix,
    conv: MaslovConvention,
}

impl TorusRep {
    pub fn new(space: &TorusSpace) -> TorusRep {
        TorusRep::with_convention(space, MaslovConvention::default())
    }

    /// Under the Turaev convention weights enter with the opposite sign, so raising
    /// the weight by one multiplies by `kappa^-1`.
    pub fn with_convention(space: &TorusSpace, conv: MaslovConvention) -> TorusRep {
        let t = t_matrix(space);
        let mut t_inv = t.clone();
        for i in 0..t.dim() {
            t_inv.entries[i][i] = t.entries[i][i].conj();
        }
        TorusRep {
            space: space.clone(),
            s: s_matrix(space),
            t,
            t_inv,
            conv,
        }
    }

    pub fn space(&self) -> &TorusSpace {
        &self.space
    }

    pub fn convention(&self) -> MaslovConvention {
        self.conv
    }

    /// `kappa^e` under the Walker convention, `kappa^-e` under Turaev's.
    pub fn weight_factor(&self, e: i64) -> CycNum {
        kappa_pow(&self.space.constants().kappa, self.conv.orientation() * e)
    }

    /// Plain product of generator matrices.
    pub fn word_product(&self, word: &Word) -> TransferMatrix {
        let mut m = TransferMatrix::identity(&self.space);
        for g in &word.0 {
            m = m.mul(match g {
                Gen::S => &self.s,
                Gen::T => &self.t,
                Gen::TInv => &self.t_inv,
            });
        }
        m
    }

    /// `Z(cob)` computed along `word`.
    pub fn evaluate(&self, word: &Word, cob: &TorusCobordism) -> Result<TransferMatrix> {
        if word.matrix() != cob.monodromy {
            return Err(Error::WordMismatch(format!(
                "word {word} has matrix {:?}, cobordism has {:?}",
                word.matrix(),
                cob.monodromy
            )));
        }
        let w_ref = reference_weight(word, cob, self.conv)?;
        let k = self.weight_factor(cob.weight - w_ref);
        let mut m = self.word_product(word).scale(&k);
        m.weight = cob.weight;
        Ok(m)
    }

    /// `Z(cob)` along the Euclidean decomposition of its monodromy.
    pub fn evaluate_cobordism(&self, cob: &TorusCobordism) -> Result<TransferMatrix> {
        self.evaluate(&Word::decompose(&cob.monodromy)?, cob)
    }

    /// Invariant of the mapping torus, carrying the weight `closure_weight(cob)`.
    pub fn mapping_torus_invariant(&self, cob: &TorusCobordism) -> Result<CycNum> {
        if cob.source_lag != cob.target_lag {
            return Err(Error::GluingMismatch(
                "mapping torus needs equal source and target lines".into(),
            ));
        }
        Ok(self.evaluate_cobordism(cob)?.trace())
    }

    pub fn closure_weight(&self, cob: &TorusCobordism) -> Result<i64> {
        closure_weight_with(cob, self.conv)
    }
}

/// Characteristic polynomial `det(x I - m)`, lowest degree first.
pub fn charpoly(m: &TransferMatrix) -> Vec<CycNum> {
    linalg::charpoly(&m.entries)
}

/// Integer matrix of `m` acting on `D_p^dim` viewed as a free Z-module in the power basis.
pub fn restrict_scalars(m: &[Vec<CycNum>]) -> Result<Vec<Vec<BigInt>>> {
    let d = m.len();
    let Some(ctx) = m
        .first()
        .and_then(|r| r.first())
        .map(|x| x.context().clone())
    else {
        return Ok(Vec::new());
    };
    let f = ctx.phi();
    let mut out = vec![vec![BigInt::zero(); d * f]; d * f];
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_integral() {
                return Err(Error::NotIntegral(x.pexp()));
            }
            for b in 0..f {
                let y = x.mul_zeta_pow(b as i64);
                for (a, c) in y.coeffs().iter().enumerate() {
                    out[i * f + a][j * f + b] = c.clone();
                }
            }
        }
    }
    Ok(out)
}

/// Invariant factors of the cokernel of `m - 1` over Z.
pub fn bowen_franks(m: &TransferMatrix) -> Result<Vec<BigInt>> {
    bowen_franks_entries(&m.entries)
}

pub fn bowen_franks_entries(m: &[Vec<CycNum>]) -> Result<Vec<BigInt>> {
    let mut z = restrict_scalars(m)?;
    for (i, row) in z.iter_mut().enumerate() {
        row[i] -= 1;
    }
    Ok(smith_normal_form(z))
}

/// Invariant factors of the cokernel of `m - 1` over Z[1/p]. Entries may carry
/// p-power denominators; p-parts of the factors are units and are dropped.
pub fn bowen_franks_localized(m: &[Vec<CycNum>]) -> Result<Vec<BigInt>> {
    let Some(ctx) = m
        .first()
        .and_then(|r| r.first())
        .map(|x| x.context().clone())
    else {
        return Ok(Vec::new());
    };
    let one = CycNum::from_int(&ctx, 1);
    let shifted: Vec<Vec<CycNum>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| if i == j { x - &one } else { x.clone() })
                .collect()
        })
        .collect();
    let e = shifted
        .iter()
        .flatten()
        .map(CycNum::pexp)
        .max()
        .unwrap_or(0);
    let p = BigInt::from(ctx.p());
    let clear = num_traits::pow(p.clone(), e as usize);
    let cleared: Vec<Vec<CycNum>> = shifted
        .iter()
        .map(|row| row.iter().map(|x| x.scale(&clear)).collect())
        .collect();
    let mut factors = smith_normal_form(restrict_scalars(&cleared)?);
    for f in factors.iter_mut() {
        while !f.is_zero() && (&*f % &p).is_zero() {
            *f /= &p;
        }
    }
    factors.sort_by(|a, b| match (a.is_zero(), b.is_zero()) {
        (true, true) => std::cmp::Ordering::Equal,
        (true, false) => std::cmp::Ordering::Greater,
        (false, true) => std::cmp::Ordering::Less,
        _ => a.cmp(b),
    });
    Ok(factors)
}
