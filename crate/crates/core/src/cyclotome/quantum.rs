use std::sync::Arc;

use super::num::CycNum;
use super::ring::RingContext;
use crate::error::{Error, Result};

/// `[k] = (A^{2k} - A^{-2k}) / (A^2 - A^{-2})` for `0 <= k <= p - 1`.
pub fn quantum_integer(ctx: &Arc<RingContext>, k: i64) -> Result<CycNum> {
    if k < 0 || k > ctx.p() as i64 - 1 {
        return Err(Error::OutOfRange {
            what: "quantum integer index must lie in 0..=p-1",
            value: k,
        });
    }
    Ok(qint(ctx, k))
}

/// `[k]` for any integer `k`, as the Laurent polynomial `sum_j A^{2k-2-4j}`.
pub fn qint(ctx: &Arc<RingContext>, k: i64) -> CycNum {
    if k < 0 {
        return -qint(ctx, -k);
    }
    let mut acc = CycNum::zero(ctx);
    for j in 0..k {
        acc = &acc + &CycNum::a_pow(ctx, 2 * k - 2 - 4 * j);
    }
    acc
}

/// Loop value `delta = -A^2 - A^{-2}`.
pub fn delta(ctx: &Arc<RingContext>) -> CycNum {
    -(&CycNum::a_pow(ctx, 2) + &CycNum::a_pow(ctx, -2))
}

/// Quantum dimension `Delta_c = (-1)^c [c+1]` of the color-`c` unknot.
pub fn quantum_dim(ctx: &Arc<RingContext>, c: i64) -> CycNum {
    let q = qint(ctx, c + 1);
    if c % 2 == 0 {
        q
    } else {
        -q
    }
}

/// Twist eigenvalue `mu_c = (-1)^c A^{c^2 + 2c}`.
pub fn twist(ctx: &Arc<RingContext>, c: i64) -> CycNum {
    let m = CycNum::a_pow(ctx, c * c + 2 * c);
    if c % 2 == 0 {
        m
    } else {
        -m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let c = RingContext::new(7).unwrap();
        assert!(quantum_integer(&c, 0).unwrap().is_zero());
        assert!(quantum_integer(&c, 1).unwrap().is_one());
        assert_eq!(
            quantum_integer(&c, 2).unwrap(),
            &CycNum::a_pow(&c, 2) + &CycNum::a_pow(&c, -2)
        );
        assert!(quantum_integer(&c, 3).unwrap().is_integral());
        assert!(quantum_integer(&c, 7).is_err());
        assert!(quantum_integer(&c, -1).is_err());
    }

    #[test]
    fn defining_identity_at_p_minus_one() {
        for p in [5i64, 7, 11, 13] {
            let c = RingContext::new(p as u64).unwrap();
            let d = &CycNum::a_pow(&c, 2) - &CycNum::a_pow(&c, -2);
            let lhs = &quantum_integer(&c, p - 1).unwrap() * &d;
            let rhs = &CycNum::a_pow(&c, 2 * (p - 1)) - &CycNum::a_pow(&c, -2 * (p - 1));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn symmetric_under_conj() {
        let c = RingContext::new(11).unwrap();
        for k in 0..11 {
            let q = quantum_integer(&c, k).unwrap();
            assert_eq!(q.conj(), q);
        }
    }

    #[test]
    fn qint_vanishes_at_p() {
        let c = RingContext::new(5).unwrap();
        assert!(qint(&c, 5).is_zero());
        assert_eq!(qint(&c, 2), -delta(&c));
    }
}
