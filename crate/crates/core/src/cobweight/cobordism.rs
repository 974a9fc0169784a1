use serde::{Deserialize, Serialize};

use super::parity::HomologyProfile;
use super::symplectic::{maslov, Lagrangian, Line, SymplecticSpace};
use crate::error::{Error, Result};
use crate::linalg::rank;

/// Integer 2x2 matrix, row major.
pub type Mat2 = [[i64; 2]; 2];

pub const IDENTITY: Mat2 = [[1, 0], [0, 1]];
pub const S_GEN: Mat2 = [[0, -1], [1, 0]];
pub const T_GEN: Mat2 = [[1, 1], [0, 1]];

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut c = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

pub fn det(a: &Mat2) -> i64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

/// Inverse of a determinant-one matrix.
pub fn mat_inv(a: &Mat2) -> Mat2 {
    [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]
}

pub fn mat_pow(a: &Mat2, k: u32) -> Mat2 {
    (0..k).fold(IDENTITY, |acc, _| mat_mul(&acc, a))
}

pub fn apply(a: &Mat2, v: [i64; 2]) -> [i64; 2] {
    [
        a[0][0] * v[0] + a[0][1] * v[1],
        a[1][0] * v[0] + a[1][1] * v[1],
    ]
}

/// Sign placed in front of the Maslov term in gluing formulas.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MaslovConvention {
    #[default]
    Walker,
    Turaev,
}

impl MaslovConvention {
    pub fn sign(self) -> i64 {
        match self {
            MaslovConvention::Walker => WALKER_SIGN,
            MaslovConvention::Turaev => -WALKER_SIGN,
        }
    }

    /// `+1` for Walker, `-1` for Turaev: the sign with which weights enter `kappa` powers.
    pub fn orientation(self) -> i64 {
        match self {
            MaslovConvention::Walker => 1,
            MaslovConvention::Turaev => -1,
        }
    }
}

/// Sign of the Maslov term under Walker's convention.
const WALKER_SIGN: i64 = -1;

/// A genus-1 mapping cylinder with an integer weight and Lagrangian lines on both ends.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CobordismJson", into = "CobordismJson")]
pub struct TorusCobordism {
    pub monodromy: Mat2,
    pub weight: i64,
    pub source_lag: Line,
    pub target_lag: Line,
}

#[derive(Serialize, Deserialize)]
struct CobordismJson {
    monodromy: Mat2,
    weight: i64,
    source_lag: Line,
    target_lag: Line,
}

impl TryFrom<CobordismJson> for TorusCobordism {
    type Error = Error;
    fn try_from(j: CobordismJson) -> Result<TorusCobordism> {
        TorusCobordism::new(j.monodromy, j.weight, j.source_lag, j.target_lag)
    }
}

impl From<TorusCobordism> for CobordismJson {
    fn from(c: TorusCobordism) -> CobordismJson {
        CobordismJson {
            monodromy: c.monodromy,
            weight: c.weight,
            source_lag: c.source_lag,
            target_lag: c.target_lag,
        }
    }
}

fn lag(l: Line) -> Lagrangian {
    Lagrangian::line(l.0).expect("normalized line")
}

impl TorusCobordism {
    pub fn new(monodromy: Mat2, weight: i64, source_lag: Line, target_lag: Line) -> Result<Self> {
        if det(&monodromy) != 1 {
            return Err(Error::InvalidInput(format!(
                "monodromy {monodromy:?} has determinant {}",
                det(&monodromy)
            )));
        }
        Ok(TorusCobordism {
            monodromy,
            weight,
            source_lag: Line::new(source_lag.0)?,
            target_lag: Line::new(target_lag.0)?,
        })
    }

    /// Cylinder with monodromy `m` and the meridian line on both ends.
    pub fn cylinder(m: Mat2, weight: i64) -> Result<Self> {
        TorusCobordism::new(m, weight, Line::meridian(), Line::meridian())
    }

    pub fn identity(weight: i64, l: Line) -> TorusCobordism {
        TorusCobordism {
            monodromy: IDENTITY,
            weight,
            source_lag: l,
            target_lag: l,
        }
    }

    pub fn from_json_str(s: &str) -> Result<TorusCobordism> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("cobordism serializes")
    }

    /// Source line pushed to the target end.
    pub fn transported_source(&self) -> Line {
        Line::new(apply(&self.monodromy, self.source_lag.0)).expect("unimodular image")
    }

    /// Homological data of the mapping cylinder.
    pub fn profile(&self) -> HomologyProfile {
        let a = self.transported_source().0;
        let b = self.target_lag.0;
        HomologyProfile {
            beta0_n: 1,
            beta1_n: 2,
            dim_lag_sum: rank(&[a.to_vec(), b.to_vec()]) as u64,
            beta0_source: 1,
            beta1_target: 2,
            beta0_target: 1,
            epsilon: 0,
            component_incidence: vec![vec![0]],
        }
    }

    /// First Betti number of the closed manifold obtained by capping both ends
    /// with solid tori killing the two lines.
    pub fn capped_beta1(&self) -> u64 {
        u64::from(self.transported_source() == self.target_lag)
    }
}

/// `n2 . n1`: first `n1`, then `n2`.
pub fn compose(n2: &TorusCobordism, n1: &TorusCobordism) -> Result<TorusCobordism> {
    compose_with(n2, n1, MaslovConvention::default())
}

pub fn compose_with(
    n2: &TorusCobordism,
    n1: &TorusCobordism,
    conv: MaslovConvention,
) -> Result<TorusCobordism> {
    if n1.target_lag != n2.source_lag {
        return Err(Error::GluingMismatch(format!(
            "target line {:?} does not match source line {:?}",
            n1.target_lag.0, n2.source_lag.0
        )));
    }
    let l1 = lag(n1.transported_source());
    let l2 = lag(n1.target_lag);
    let l3 = lag(Line::new(apply(&mat_inv(&n2.monodromy), n2.target_lag.0))?);
    let tau = maslov(&l1, &l2, &l3)?;
    Ok(TorusCobordism {
        monodromy: mat_mul(&n2.monodromy, &n1.monodromy),
        weight: n1.weight + n2.weight + conv.sign() * tau,
        source_lag: n1.source_lag,
        target_lag: n2.target_lag,
    })
}

/// Weight of the mapping torus obtained by gluing the two ends of `n`.
pub fn closure_weight(n: &TorusCobordism) -> Result<i64> {
    closure_weight_with(n, MaslovConvention::default())
}

pub fn closure_weight_with(n: &TorusCobordism, conv: MaslovConvention) -> Result<i64> {
    let t = SymplecticSpace::standard(1);
    let space = t.neg_sum(&t);
    let m = &n.monodromy;
    let graph = Lagrangian::new(
        &space,
        vec![vec![1, 0, m[0][0], m[1][0]], vec![0, 1, m[0][1], m[1][1]]],
    )?;
    let [sx, sy] = n.source_lag.0;
    let [tx, ty] = n.target_lag.0;
    let ends = Lagrangian::new(&space, vec![vec![sx, sy, 0, 0], vec![0, 0, tx, ty]])?;
    let diag = Lagrangian::new(&space, vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]])?;
    Ok(n.weight + conv.sign() * maslov(&graph, &ends, &diag)?)
}

/// First Betti number of the torus bundle with monodromy `m`.
pub fn bundle_beta1(m: &Mat2) -> u64 {
    let d = [vec![m[0][0] - 1, m[0][1]], vec![m[1][0], m[1][1] - 1]];
    1 + (2 - rank(&d)) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(x: i64, y: i64) -> Line {
        Line::new([x, y]).unwrap()
    }

    #[test]
    fn identity_is_neutral_and_shifts_weight() {
        let n = TorusCobordism::new([[2, 1], [1, 1]], 3, l(1, 0), l(1, 2)).unwrap();
        let id0 = TorusCobordism::identity(0, l(1, 2));
        assert_eq!(compose(&id0, &n).unwrap(), n);
        let id1 = TorusCobordism::identity(1, l(1, 2));
        assert_eq!(compose(&id1, &n).unwrap().weight, n.weight + 1);
        let id_src = TorusCobordism::identity(0, l(1, 0));
        assert_eq!(compose(&n, &id_src).unwrap(), n);
    }

    #[test]
    fn gluing_mismatch() {
        let a = TorusCobordism::cylinder(T_GEN, 0).unwrap();
        let b = TorusCobordism::new(S_GEN, 0, l(0, 1), l(1, 0)).unwrap();
        assert!(matches!(compose(&b, &a), Err(Error::GluingMismatch(_))));
        assert!(TorusCobordism::new([[1, 1], [1, 1]], 0, l(1, 0), l(1, 0)).is_err());
    }

    #[test]
    fn closure_weights() {
        let id = TorusCobordism::identity(0, l(1, 0));
        assert_eq!(closure_weight(&id).unwrap(), 0);
        let t = TorusCobordism::cylinder(T_GEN, 0).unwrap();
        let wt = closure_weight(&t).unwrap();
        let tt = compose(&t, &id).unwrap();
        assert_eq!(closure_weight(&tt).unwrap(), wt);
        for conv in [MaslovConvention::Walker, MaslovConvention::Turaev] {
            let s = TorusCobordism::cylinder(S_GEN, 2).unwrap();
            let a = closure_weight_with(&s, conv).unwrap();
            let b = closure_weight_with(
                &s,
                match conv {
                    MaslovConvention::Walker => MaslovConvention::Turaev,
                    MaslovConvention::Turaev => MaslovConvention::Walker,
                },
            )
            .unwrap();
            assert_eq!(a + b, 4);
        }
    }

    #[test]
    fn json_round_trip() {
        let text =
            r#"{"monodromy":[[0,-1],[1,0]],"weight":2,"source_lag":[-1,0],"target_lag":[2,4]}"#;
        let c = TorusCobordism::from_json_str(text).unwrap();
        assert_eq!(c.source_lag, l(1, 0));
        assert_eq!(c.target_lag, l(1, 2));
        assert_eq!(
            TorusCobordism::from_json_str(&c.to_json_string()).unwrap(),
            c
        );
        assert!(TorusCobordism::from_json_str(
            r#"{"monodromy":[[2,0],[0,1]],"weight":0,"source_lag":[1,0],"target_lag":[1,0]}"#
        )
        .is_err());
    }

    #[test]
    fn bundle_betti_numbers() {
        assert_eq!(bundle_beta1(&IDENTITY), 3);
        assert_eq!(bundle_beta1(&T_GEN), 2);
        assert_eq!(bundle_beta1(&S_GEN), 1);
        assert_eq!(bundle_beta1(&[[-1, 0], [0, -1]]), 1);
    }
}
