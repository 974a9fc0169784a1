use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rank, signature};

/// `Q^{2g}` with an integral nondegenerate antisymmetric form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticSpace {
    form: Vec<Vec<i64>>,
}

impl SymplecticSpace {
    /// Standard form on basis `(a_1, b_1, ..., a_g, b_g)` with `a_i . b_i = 1`.
    pub fn standard(genus: usize) -> SymplecticSpace {
        let n = 2 * genus;
        let mut form = vec![vec![0; n]; n];
        for i in 0..genus {
            form[2 * i][2 * i + 1] = 1;
            form[2 * i + 1][2 * i] = -1;
        }
        SymplecticSpace { form }
    }

    pub fn from_form(form: Vec<Vec<i64>>) -> Result<SymplecticSpace> {
        let n = form.len();
        if !n.is_multiple_of(2) || form.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(
                "form must be square of even size".into(),
            ));
        }
        for i in 0..n {
            for j in 0..n {
                if form[i][j] != -form[j][i] {
                    return Err(Error::InvalidInput("form is not antisymmetric".into()));
                }
            }
        }
        if rank(&form) != n {
            return Err(Error::InvalidInput("form is degenerate".into()));
        }
        Ok(SymplecticSpace { form })
    }

    /// `(-self) (+) other`, the homology of `-S (+) S'`.
    pub fn neg_sum(&self, other: &SymplecticSpace) -> SymplecticSpace {
        let (a, b) = (self.dim(), other.dim());
        let mut form = vec![vec![0; a + b]; a + b];
        for i in 0..a {
            for j in 0..a {
                form[i][j] = -self.form[i][j];
            }
        }
        for i in 0..b {
            for j in 0..b {
                form[a + i][a + j] = other.form[i][j];
            }
        }
        SymplecticSpace { form }
    }

    pub fn dim(&self) -> usize {
        self.form.len()
    }

    pub fn genus(&self) -> usize {
        self.form.len() / 2
    }

    pub fn omega(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                s += ui * self.form[i][j] * vj;
            }
        }
        s
    }
}

/// A Lagrangian subspace given by an integral basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lagrangian {
    space: SymplecticSpace,
    basis: Vec<Vec<i64>>,
}

impl Lagrangian {
    pub fn new(space: &SymplecticSpace, basis: Vec<Vec<i64>>) -> Result<Lagrangian> {
        let g = space.genus();
        if basis.len() != g || basis.iter().any(|v| v.len() != space.dim()) {
            return Err(Error::InvalidLagrangian(format!(
                "need {g} vectors of length {}",
                space.dim()
            )));
        }
        if rank(&basis) != g {
            return Err(Error::InvalidLagrangian(
                "basis vectors are dependent".into(),
            ));
        }
        for u in &basis {
            for v in &basis {
                if space.omega(u, v) != 0 {
                    return Err(Error::InvalidLagrangian("subspace is not isotropic".into()));
                }
            }
        }
        Ok(Lagrangian {
            space: space.clone(),
            basis,
        })
    }

    /// The line spanned by `(x, y)` in the standard genus-1 space.
    pub fn line(v: [i64; 2]) -> Result<Lagrangian> {
        let l = Line::new(v)?;
        Lagrangian::new(&SymplecticSpace::standard(1), vec![l.0.to_vec()])
    }

    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Same subspace, as a rank test.
    pub fn same_subspace(&self, other: &Lagrangian) -> bool {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        self.space == other.space && rank(&all) == self.basis.len()
    }
}

/// A primitive integer direction in `Z^2`, normalized so its first nonzero
/// coordinate is positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[i64; 2]", into = "[i64; 2]")]
pub struct Line(pub [i64; 2]);

impl Line {
    pub fn new(v: [i64; 2]) -> Result<Line> {
        let g = v[0].gcd(&v[1]);
        if g == 0 {
            return Err(Error::InvalidLagrangian("zero vector spans no line".into()));
        }
        let mut w = [v[0] / g, v[1] / g];
        if w[0] < 0 || (w[0] == 0 && w[1] < 0) {
            w = [-w[0], -w[1]];
        }
        Ok(Line(w))
    }

    pub fn meridian() -> Line {
        Line([1, 0])
    }
}

impl TryFrom<[i64; 2]> for Line {
    type Error = Error;
    fn try_from(v: [i64; 2]) -> Result<Line> {
        Line::new(v)
    }
}

impl From<Line> for [i64; 2] {
    fn from(l: Line) -> [i64; 2] {
        l.0
    }
}

/// Kashiwara's Maslov index: the signature of `(x, y, z) -> w(x,y) + w(y,z) + w(z,x)`
/// on `l1 (+) l2 (+) l3`.
pub fn maslov(l1: &Lagrangian, l2: &Lagrangian, l3: &Lagrangian) -> Result<i64> {
    if l1.space != l2.space || l2.space != l3.space {
        return Err(Error::DimensionMismatch(
            "Lagrangians live in different symplectic spaces".into(),
        ));
    }
    let s = &l1.space;
    let g = s.genus();
    let mut m = vec![vec![0i64; 3 * g]; 3 * g];
    let blocks = [(0usize, 1usize, l1, l2), (1, 2, l2, l3), (2, 0, l3, l1)];
    for (bi, bj, a, b) in blocks {
        for (i, u) in a.basis.iter().enumerate() {
            for (j, v) in b.basis.iter().enumerate() {
                let w = s.omega(u, v);
                m[bi * g + i][bj * g + j] += w;
                m[bj * g + j][bi * g + i] += w;
            }
        }
    }
    Ok(signature(&m))
}
