//! Fixed-width accumulator in `Z[x]/(x^n - 1)` for hot loops.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::num::CycNum;
use super::ring::RingContext;
use crate::error::{Error, Result};

/// Integer scalar for [`Acc`]: machine words with overflow detection, or bignums.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    /// Rough size in bits, used to decide when to reduce.
    fn bits(&self) -> u64;
}

impl Scalar for i128 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn bits(&self) -> u64 {
        128 - self.unsigned_abs().leading_zeros() as u64
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn bits(&self) -> u64 {
        BigInt::bits(self)
    }
}

/// Coefficients over `x^0 .. x^{n-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Acc<T: Scalar = i128> {
    c: Vec<T>,
}

impl<T: Scalar> Acc<T> {
    pub fn zero(n: usize) -> Self {
        Acc {
            c: vec![T::zero(); n],
        }
    }

    pub fn monomial(n: usize, coef: i64, exp: i64) -> Self {
        let mut a = Acc::zero(n);
        a.c[exp.rem_euclid(n as i64) as usize] = T::from_i64(coef);
        a
    }

    /// Lift an integral element through its power-basis coefficients.
    pub fn from_cyc(v: &CycNum) -> Result<Self> {
        if !v.is_integral() {
            return Err(Error::NotIntegral(v.pexp()));
        }
        let n = v.context().n() as usize;
        let mut a = Acc::zero(n);
        for (i, x) in v.coeffs().iter().enumerate() {
            a.c[i] = T::from_big(x).ok_or(Error::Overflow)?;
        }
        Ok(a)
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|v| v.is_zero())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn bits(&self) -> u64 {
        self.c.iter().map(|v| v.bits()).max().unwrap_or(0)
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        for (a, b) in self.c.iter_mut().zip(&other.c) {
            if !b.is_zero() {
                *a = a.add(b).ok_or(Error::Overflow)?;
            }
        }
        Ok(())
    }

    /// `self += coef * x^shift * other`.
    pub fn add_shifted(&mut self, other: &Self, coef: i64, shift: i64) -> Result<()> {
        let n = self.c.len();
        let s = shift.rem_euclid(n as i64) as usize;
        let k = T::from_i64(coef);
        for (i, b) in other.c.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let t = b.mul(&k).ok_or(Error::Overflow)?;
            let j = (i + s) % n;
            self.c[j] = self.c[j].add(&t).ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.c.len();
        let mut out: Acc<T> = Acc::zero(n);
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a.mul(b).ok_or(Error::Overflow)?;
                let k = (i + j) % n;
                out.c[k] = out.c[k].add(&t).ok_or(Error::Overflow)?;
            }
        }
        Ok(out)
    }

    /// Reduce in place modulo the cyclotomic polynomial (value unchanged in `K_p`).
    pub fn reduce(&mut self, ctx: &RingContext) -> Result<()> {
        let phi = ctx.phi();
        let m = ctx.modulus();
        for e in (phi..self.c.len()).rev() {
            if self.c[e].is_zero() {
                continue;
            }
            let t = std::mem::replace(&mut self.c[e], T::zero());
            for (j, &mj) in m[..phi].iter().enumerate() {
                if mj != 0 {
                    let v = t.mul(&T::from_i64(-mj)).ok_or(Error::Overflow)?;
                    let k = e - phi + j;
                    self.c[k] = self.c[k].add(&v).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(())
    }

    pub fn to_cyc(&self, ctx: &Arc<RingContext>) -> CycNum {
        let big: Vec<BigInt> = self.c.iter().map(|v| v.to_big()).collect();
        CycNum::from_cyclic(ctx, &big)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials_rotate() {
        let ctx = RingContext::new(7).unwrap();
        let n = ctx.n() as usize;
        let x: Acc = Acc::monomial(n, 1, 3);
        let y = Acc::monomial(n, 2, n as i64 - 1);
        assert_eq!(x.mul(&y).unwrap(), Acc::monomial(n, 2, 2));
        assert_eq!(x.to_cyc(&ctx), CycNum::zeta_pow(&ctx, 3));
    }

    #[test]
    fn reduction_preserves_value() {
        let ctx = RingContext::new(5).unwrap();
        let n = ctx.n() as usize;
        let mut a: Acc<BigInt> = Acc::zero(n);
        for e in 0..n as i64 {
            a.add_shifted(&Acc::monomial(n, 1, 0), e * e - 7, e)
                .unwrap();
        }
        let before = a.to_cyc(&ctx);
        a.reduce(&ctx).unwrap();
        assert!(a.coeffs()[ctx.phi()..].iter().all(Scalar::is_zero));
        assert_eq!(a.to_cyc(&ctx), before);
    }

    #[test]
    fn overflow_is_reported() {
        let mut a: Acc = Acc::zero(4);
        a.add_shifted(&Acc::monomial(4, i64::MAX, 0), i64::MAX, 0)
            .unwrap();
        let b = a.clone();
        a.add_assign(&b).unwrap();
        assert!(a.add_assign(&b).is_err());
    }
}
