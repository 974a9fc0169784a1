//! Small exact linear algebra shared by the modules: division-free characteristic
//! polynomials, signatures of integer symmetric forms and Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cyclotome::CycNum;

/// The commutative-ring operations the Berkowitz algorithm needs.
pub trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Ring for CycNum {
    fn zero_like(&self) -> Self {
        CycNum::zero(self.context())
    }
    fn one_like(&self) -> Self {
        CycNum::one(self.context())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

/// Coefficients of `det(x I - m)`, lowest degree first. `m` must be square and
/// nonempty (an empty matrix has no element to borrow the ring from).
pub fn charpoly<R: Ring>(m: &[Vec<R>]) -> Vec<R> {
    let n = m.len();
    assert!(
        n > 0 && m.iter().all(|r| r.len() == n),
        "square nonempty matrix"
    );
    let zero = m[0][0].zero_like();
    let one = m[0][0].one_like();
    // high-degree-first while building
    let mut p = vec![one.clone()];
    for k in 0..n {
        let mut q = Vec::with_capacity(k + 2);
        q.push(one.clone());
        q.push(zero.sub(&m[k][k]));
        // v = C, then A v, A^2 v, ...
        let mut v: Vec<R> = (0..k).map(|i| m[i][k].clone()).collect();
        for _ in 0..k {
            let mut rc = zero.clone();
            for (j, vj) in v.iter().enumerate() {
                rc = rc.add(&m[k][j].mul(vj));
            }
            q.push(zero.sub(&rc));
            let mut nv = vec![zero.clone(); k];
            for (i, nvi) in nv.iter_mut().enumerate() {
                for (j, vj) in v.iter().enumerate() {
                    *nvi = nvi.add(&m[i][j].mul(vj));
                }
            }
            v = nv;
        }
        let mut np = vec![zero.clone(); k + 2];
        for (i, npi) in np.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate() {
                if j <= i {
                    *npi = npi.add(&q[i - j].mul(pj));
                }
            }
        }
        p = np;
    }
    p.reverse();
    p
}

fn sign_changes(seq: impl Iterator<Item = BigInt>) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for c in seq {
        let s = match c.sign() {
            num_bigint::Sign::Plus => 1,
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Signature of a symmetric integer matrix. Every root of its characteristic
/// polynomial is real, so Descartes' rule counts positive and negative
/// eigenvalues exactly.
pub fn signature(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 0;
    }
    let big: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let cp = charpoly(&big);
    let pos = sign_changes(cp.iter().cloned());
    let neg = sign_changes(
        cp.iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }),
    );
    pos as i64 - neg as i64
}

/// Rank of an integer matrix over `Q`.
pub fn rank(m: &[Vec<i64>]) -> usize {
    let big: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    smith_normal_form(big)
        .iter()
        .filter(|d| !d.is_zero())
        .count()
}

/// Invariant factors `d_1 | d_2 | ...` (nonnegative, `min(rows, cols)` of them,
/// zeros last) of an integer matrix.
pub fn smith_normal_form(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let k = rows.min(cols);
    let mut diag = Vec::with_capacity(k);
    for t in 0..k {
        loop {
            // smallest nonzero entry of the remaining block as pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                diag.extend(std::iter::repeat_n(BigInt::zero(), k - t));
                return diag;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&a[i][t], &a[t][t]);
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&a[t][j], &a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the remaining block
            let bad =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

/// Quotient rounded to the nearest integer.
fn nearest_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let q = a.div_floor(b);
    let r: BigInt = a - &q * b;
    if (&r * 2u32).abs() > b.abs() {
        q + 1
    } else {
        q
    }
}
