//! The ambient cyclotomic ring for a fixed odd prime.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Data of `Z[zeta_n, 1/p]` where `n = 2p` for `p = 3 (mod 4)` and `n = 4p` for
/// `p = 1 (mod 4)`.
///
/// The generator `x = zeta_n` is embedded as `exp(2 pi i / n)`, so `A = x` when
/// `n = 2p` and `A = x^2` (with `alpha = x`) when `n = 4p`.
#[derive(Clone)]
pub struct RingContext {
    p: u64,
    n: u64,
    phi: usize,
    modulus: Vec<i64>,
    units: Vec<u64>,
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingContext(p={}, n={})", self.p, self.n)
    }
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
    }
}
impl Eq for RingContext {}

pub(crate) fn is_prime(k: u64) -> bool {
    if k < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= k {
        if k.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Integer coefficients (lowest degree first) of the cyclotomic polynomial `Phi_n`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_polynomial(d);
            num = div_monic(&num, &den);
        }
    }
    num
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (j, &b) in den.iter().enumerate() {
                rem[k + j] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

impl RingContext {
    pub fn new(p: u64) -> Result<Arc<RingContext>> {
        if p < 3 || p.is_multiple_of(2) || !is_prime(p) {
            return Err(Error::UnsupportedPrime(p));
        }
        let n = if p % 4 == 3 { 2 * p } else { 4 * p };
        let modulus = cyclotomic_polynomial(n);
        let phi = modulus.len() - 1;
        let units = (1..n).filter(|&k| gcd(k, n) == 1).collect::<Vec<_>>();
        debug_assert_eq!(units.len(), phi);
        Ok(Arc::new(RingContext {
            p,
            n,
            phi,
            modulus,
            units,
        }))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Conductor of the cyclotomic field.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Degree `phi(n)` of the field.
    pub fn phi(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// Exponent `e` with `A = x^e`.
    pub fn a_exp(&self) -> u64 {
        if self.n == 2 * self.p {
            1
        } else {
            2
        }
    }

    /// True when `alpha` (a primitive `4p`-th root) lives in the ring.
    pub fn has_alpha(&self) -> bool {
        self.n == 4 * self.p
    }

    pub(crate) fn units(&self) -> &[u64] {
        &self.units
    }

    /// Reduce `x^k` to an exponent in `0..n`.
    pub(crate) fn wrap(&self, k: i64) -> usize {
        k.rem_euclid(self.n as i64) as usize
    }
}
