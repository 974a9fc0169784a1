use std::sync::Arc;

use crate::cyclotome::{constants_with, qint, Constants, CycNum, EtaSign, RingContext};
use crate::error::{Error, Result};
use crate::skein::twist_pow;

/// The even-colored state space of the torus.
#[derive(Clone, Debug)]
pub struct TorusSpace {
    ctx: Arc<RingContext>,
    colors: Vec<u32>,
    consts: Constants,
}

impl PartialEq for TorusSpace {
    fn eq(&self, other: &TorusSpace) -> bool {
        self.ctx == other.ctx && self.consts.eta == other.consts.eta
    }
}

impl TorusSpace {
    pub fn new(ctx: &Arc<RingContext>) -> Result<TorusSpace> {
        TorusSpace::with_sign(ctx, EtaSign::default())
    }

    pub fn with_sign(ctx: &Arc<RingContext>, sign: EtaSign) -> Result<TorusSpace> {
        let colors = (0..=ctx.p() as u32 - 3).step_by(2).collect();
        Ok(TorusSpace {
            ctx: ctx.clone(),
            colors,
            consts: constants_with(ctx, sign)?,
        })
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn constants(&self) -> &Constants {
        &self.consts
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn dim(&self) -> usize {
        self.colors.len()
    }
}

/// A linear endomorphism of the torus state space.
#[derive(Clone, Debug, PartialEq)]
pub struct TransferMatrix {
    pub space: TorusSpace,
    pub entries: Vec<Vec<CycNum>>,
    pub weight: i64,
}

impl TransferMatrix {
    pub fn new(space: &TorusSpace, entries: Vec<Vec<CycNum>>, weight: i64) -> Result<Self> {
        let d = space.dim();
        if entries.len() != d || entries.iter().any(|r| r.len() != d) {
            return Err(Error::DimensionMismatch(format!(
                "transfer matrix must be {d}x{d}"
            )));
        }
        Ok(TransferMatrix {
            space: space.clone(),
            entries,
            weight,
        })
    }

    pub fn identity(space: &TorusSpace) -> TransferMatrix {
        let d = space.dim();
        let ctx = space.context();
        let entries = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        if i == j {
                            CycNum::one(ctx)
                        } else {
                            CycNum::zero(ctx)
                        }
                    })
                    .collect()
            })
            .collect();
        TransferMatrix {
            space: space.clone(),
            entries,
            weight: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Matrix product `self * other`; weights add.
    pub fn mul(&self, other: &TransferMatrix) -> TransferMatrix {
        let d = self.dim();
        let ctx = self.space.context();
        let mut out = vec![vec![CycNum::zero(ctx); d]; d];
        for (i, row) in out.iter_mut().enumerate() {
            for (k, a) in self.entries[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell = &*cell + &(a * &other.entries[k][j]);
                }
            }
        }
        TransferMatrix {
            space: self.space.clone(),
            entries: out,
            weight: self.weight + other.weight,
        }
    }

    pub fn scale(&self, s: &CycNum) -> TransferMatrix {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x * s).collect())
            .collect();
        TransferMatrix {
            space: self.space.clone(),
            entries,
            weight: self.weight,
        }
    }

    pub fn trace(&self) -> CycNum {
        let mut t = CycNum::zero(self.space.context());
        for (i, r) in self.entries.iter().enumerate() {
            t = &t + &r[i];
        }
        t
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().flatten().all(CycNum::is_integral)
    }

    /// Entries equal, ignoring the recorded weight.
    pub fn same_entries(&self, other: &TransferMatrix) -> bool {
        self.entries == other.entries
    }
}

/// Twist matrix: diagonal with entries `mu_c`.
pub fn t_matrix(space: &TorusSpace) -> TransferMatrix {
    let ctx = space.context();
    let mut m = TransferMatrix::identity(space);
    for (i, &c) in space.colors().iter().enumerate() {
        m.entries[i][i] = twist_pow(ctx, c as i64, 1);
    }
    m
}

/// `eta` times the zero-framed colored Hopf brackets.
pub fn s_matrix(space: &TorusSpace) -> TransferMatrix {
    let ctx = space.context();
    let eta = &space.constants().eta;
    let entries = space
        .colors()
        .iter()
        .map(|&c| {
            space
                .colors()
                .iter()
                .map(|&d| {
                    let v = qint(ctx, ((c + 1) * (d + 1)) as i64);
                    let v = if (c + d) % 2 == 1 { -v } else { v };
                    &v * eta
                })
                .collect()
        })
        .collect();
    TransferMatrix {
        space: space.clone(),
        entries,
        weight: 0,
    }
}
