use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::ring::RingContext;
use crate::error::{Error, Result};

/// An exact element `(sum c_i x^i) / p^pexp` of `K_p = Z[zeta_n, 1/p]`.
///
/// Always canonical: `deg < phi(n)`, and either `pexp == 0` or some coefficient is
/// not divisible by `p`.
#[derive(Clone)]
pub struct CycNum {
    ctx: Arc<RingContext>,
    coeffs: Vec<BigInt>,
    pexp: u32,
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n() == other.ctx.n() && self.pexp == other.pexp && self.coeffs == other.coeffs
    }
}
impl Eq for CycNum {}

impl std::hash::Hash for CycNum {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.n().hash(state);
        self.pexp.hash(state);
        self.coeffs.hash(state);
    }
}

fn reduce_mod(ctx: &RingContext, mut poly: Vec<BigInt>) -> Vec<BigInt> {
    let phi = ctx.phi();
    let m = ctx.modulus();
    while poly.len() > phi {
        let top = poly.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = poly.len() - phi;
        // x^phi = -(m_0 + ... + m_{phi-1} x^{phi-1})
        for (j, &mj) in m[..phi].iter().enumerate() {
            if mj != 0 {
                poly[shift + j] -= &top * mj;
            }
        }
    }
    poly.resize(phi, BigInt::zero());
    poly
}

impl CycNum {
    fn build(ctx: &Arc<RingContext>, coeffs: Vec<BigInt>, pexp: u32) -> CycNum {
        let mut c = CycNum {
            ctx: ctx.clone(),
            coeffs: reduce_mod(ctx, coeffs),
            pexp,
        };
        c.canonicalize();
        c
    }

    fn canonicalize(&mut self) {
        if self.coeffs.iter().all(|c| c.is_zero()) {
            self.pexp = 0;
            return;
        }
        let p = BigInt::from(self.ctx.p());
        while self.pexp > 0 && self.coeffs.iter().all(|c| c.is_multiple_of(&p)) {
            for c in self.coeffs.iter_mut() {
                *c /= &p;
            }
            self.pexp -= 1;
        }
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    /// Power-basis coefficients of the numerator.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn pexp(&self) -> u32 {
        self.pexp
    }

    pub fn zero(ctx: &Arc<RingContext>) -> CycNum {
        CycNum {
            ctx: ctx.clone(),
            coeffs: vec![BigInt::zero(); ctx.phi()],
            pexp: 0,
        }
    }

    pub fn one(ctx: &Arc<RingContext>) -> CycNum {
        CycNum::from_int(ctx, 1)
    }

    pub fn from_int(ctx: &Arc<RingContext>, k: i64) -> CycNum {
        CycNum::from_bigint(ctx, BigInt::from(k))
    }

    pub fn from_bigint(ctx: &Arc<RingContext>, k: BigInt) -> CycNum {
        let mut coeffs = vec![BigInt::zero(); ctx.phi()];
        coeffs[0] = k;
        let mut c = CycNum {
            ctx: ctx.clone(),
            coeffs,
            pexp: 0,
        };
        c.canonicalize();
        c
    }

    /// `1 / p^k`.
    pub fn p_inverse_pow(ctx: &Arc<RingContext>, k: u32) -> CycNum {
        let mut c = CycNum::one(ctx);
        c.pexp = k;
        c
    }

    /// Build from raw numerator coefficients (any length) and a p-exponent.
    pub fn from_parts(ctx: &Arc<RingContext>, coeffs: Vec<BigInt>, pexp: u32) -> CycNum {
        CycNum::build(ctx, coeffs, pexp)
    }

    /// Element from coefficients over `x^0 .. x^{n-1}` (exponents taken mod `n`).
    pub fn from_cyclic(ctx: &Arc<RingContext>, cyc: &[BigInt]) -> CycNum {
        CycNum::build(ctx, cyc.to_vec(), 0)
    }

    /// `x^k` for any integer `k`.
    pub fn zeta_pow(ctx: &Arc<RingContext>, k: i64) -> CycNum {
        let e = ctx.wrap(k);
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::one();
        CycNum::build(ctx, v, 0)
    }

    /// `A^k` for any integer `k`.
    pub fn a_pow(ctx: &Arc<RingContext>, k: i64) -> CycNum {
        CycNum::zeta_pow(ctx, k * ctx.a_exp() as i64)
    }

    /// `alpha^k`; only available when the conductor is `4p`.
    pub fn alpha_pow(ctx: &Arc<RingContext>, k: i64) -> Result<CycNum> {
        if !ctx.has_alpha() {
            return Err(Error::InvalidInput(format!(
                "alpha is not in K_{} (p = 3 mod 4)",
                ctx.p()
            )));
        }
        Ok(CycNum::zeta_pow(ctx, k))
    }

    fn check_ctx(&self, other: &CycNum) -> Result<()> {
        if self.ctx.n() != other.ctx.n() {
            return Err(Error::ContextMismatch {
                left: self.ctx.n(),
                right: other.ctx.n(),
            });
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.pexp == 0 && self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Rational integer value, if the element lies in `Z`.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.pexp == 0 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn try_add(&self, other: &CycNum) -> Result<CycNum> {
        self.check_ctx(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn try_sub(&self, other: &CycNum) -> Result<CycNum> {
        self.check_ctx(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn try_mul(&self, other: &CycNum) -> Result<CycNum> {
        self.check_ctx(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &CycNum, subtract: bool) -> CycNum {
        let pexp = self.pexp.max(other.pexp);
        let p = BigInt::from(self.ctx.p());
        let ls = num_traits::pow(p.clone(), (pexp - self.pexp) as usize);
        let rs = num_traits::pow(p, (pexp - other.pexp) as usize);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| {
                let (a, b) = (a * &ls, b * &rs);
                if subtract {
                    a - b
                } else {
                    a + b
                }
            })
            .collect();
        let mut c = CycNum {
            ctx: self.ctx.clone(),
            coeffs,
            pexp,
        };
        c.canonicalize();
        c
    }

    fn mul_unchecked(&self, other: &CycNum) -> CycNum {
        let phi = self.ctx.phi();
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CycNum::build(&self.ctx, prod, self.pexp + other.pexp)
    }

    pub fn scale(&self, k: &BigInt) -> CycNum {
        let coeffs = self.coeffs.iter().map(|c| c * k).collect();
        let mut c = CycNum {
            ctx: self.ctx.clone(),
            coeffs,
            pexp: self.pexp,
        };
        c.canonicalize();
        c
    }

    /// Multiply by `x^k`.
    pub fn mul_zeta_pow(&self, k: i64) -> CycNum {
        self.mul_unchecked(&CycNum::zeta_pow(&self.ctx, k))
    }

    /// Apply the Galois automorphism `x -> x^k` (`k` coprime to `n`).
    pub fn galois(&self, k: u64) -> CycNum {
        let n = self.ctx.n() as usize;
        let mut cyc = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                cyc[(i * k as usize) % n] += c;
            }
        }
        CycNum::build(&self.ctx, cyc, self.pexp)
    }

    /// Complex conjugation `x -> x^{-1}`.
    pub fn conj(&self) -> CycNum {
        self.galois(self.ctx.n() - 1)
    }

    /// Field norm down to `Q`, as an exact rational `num / p^k` with `num` returned
    /// alongside the product of the non-trivial conjugates.
    fn norm_parts(&self) -> (CycNum, BigInt, u32) {
        let mut others = CycNum::one(&self.ctx);
        for &k in self.ctx.units() {
            if k != 1 {
                others = others.mul_unchecked(&self.galois(k));
            }
        }
        let full = self.mul_unchecked(&others);
        let num = full
            .as_integer_numerator()
            .expect("norm of a cyclotomic element is rational");
        (others, num, full.pexp)
    }

    fn as_integer_numerator(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Multiplicative inverse in `K_p`; fails unless the norm is `+-p^k`.
    pub fn inverse(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        let (others, norm, norm_pexp) = self.norm_parts();
        // a^{-1} = others / (norm / p^norm_pexp) = others * p^norm_pexp / norm
        let scaled = others.mul_unchecked(&CycNum::from_bigint(
            &self.ctx,
            num_traits::pow(BigInt::from(self.ctx.p()), norm_pexp as usize),
        ));
        scaled.div_integer(&norm).map_err(|_| Error::NotInvertible)
    }

    /// Exact division by a nonzero rational integer, provided the quotient is in `K_p`.
    pub fn div_integer(&self, d: &BigInt) -> Result<CycNum> {
        if d.is_zero() {
            return Err(Error::NotInvertible);
        }
        let p = BigInt::from(self.ctx.p());
        let mut rest = d.clone();
        let mut extra = 0u32;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            extra += 1;
        }
        if self.coeffs.iter().any(|c| !c.is_multiple_of(&rest)) {
            return Err(Error::NotInvertible);
        }
        let coeffs = self.coeffs.iter().map(|c| c / &rest).collect();
        let mut c = CycNum {
            ctx: self.ctx.clone(),
            coeffs,
            pexp: self.pexp + extra,
        };
        c.canonicalize();
        Ok(c)
    }

    /// Exact quotient `self / other` in `K_p`.
    pub fn try_div(&self, other: &CycNum) -> Result<CycNum> {
        self.check_ctx(other)?;
        if other.is_zero() {
            return Err(Error::NotInvertible);
        }
        let (others, norm, norm_pexp) = other.norm_parts();
        let num = self
            .mul_unchecked(&others)
            .mul_unchecked(&CycNum::from_bigint(
                &self.ctx,
                num_traits::pow(BigInt::from(self.ctx.p()), norm_pexp as usize),
            ));
        num.div_integer(&norm)
    }

    /// `self^k`; negative `k` requires invertibility.
    pub fn pow(&self, k: i64) -> Result<CycNum> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = CycNum::one(&self.ctx);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        Ok(acc)
    }

    /// Membership in the ring of integers `D_p`.
    pub fn is_integral(&self) -> bool {
        self.pexp == 0
    }

    /// Whether `self` lies in `r D_p`; `self` must be integral.
    pub fn divisible_by(&self, r: u64) -> Result<bool> {
        if !self.is_integral() {
            return Err(Error::NotIntegral(self.pexp));
        }
        if r == 0 {
            return Err(Error::OutOfRange {
                what: "divisor must be nonzero",
                value: 0,
            });
        }
        let r = BigInt::from(r);
        Ok(self.coeffs.iter().all(|c| c.is_multiple_of(&r)))
    }

    /// Membership in `Z[A, 1/p]`: only even powers of `alpha` when the conductor is `4p`.
    pub fn in_a_subring(&self) -> bool {
        if !self.ctx.has_alpha() {
            return true;
        }
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    /// Image under `x -> exp(2 pi i / n)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.ctx.n() as f64;
        let scale = (self.ctx.p() as f64).powi(self.pexp as i32);
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * i as f64 / n;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re / scale, im / scale)
    }

    pub fn to_json(&self) -> CycJson {
        CycJson {
            p: self.ctx.p(),
            n: self.ctx.n(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
            pexp: self.pexp,
        }
    }

    /// Decode a JSON value; the stored form must already be canonical.
    pub fn from_json(ctx: &Arc<RingContext>, j: &CycJson) -> Result<CycNum> {
        if j.p != ctx.p() || j.n != ctx.n() {
            return Err(Error::ContextMismatch {
                left: ctx.n(),
                right: j.n,
            });
        }
        if j.coeffs.len() != ctx.phi() {
            return Err(Error::InvalidInput(format!(
                "expected {} coefficients, got {}",
                ctx.phi(),
                j.coeffs.len()
            )));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|e| Error::InvalidInput(format!("bad coefficient {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let c = CycNum::build(ctx, coeffs.clone(), j.pexp);
        if c.coeffs != coeffs || c.pexp != j.pexp {
            return Err(Error::InvalidInput("value is not in canonical form".into()));
        }
        Ok(c)
    }

    /// Largest absolute coefficient; handy for diagnostics.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Wire form of a [`CycNum`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycJson {
    pub p: u64,
    pub n: u64,
    pub coeffs: Vec<String>,
    pub pexp: u32,
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = if self.ctx.has_alpha() { "a" } else { "A" };
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => format!("{c}"),
                1 => format!("{c}*{var}"),
                _ => format!("{c}*{var}^{i}"),
            });
        }
        let body = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        if self.pexp > 0 {
            write!(f, "({body})/{}^{}", self.ctx.p(), self.pexp)
        } else {
            write!(f, "{body}")
        }
    }
}

// Operator sugar. Mixing contexts is a programming error here; use the `try_*`
// methods for untrusted input.
impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &'a CycNum) -> CycNum {
        self.try_add(rhs).expect("ring context mismatch")
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &'a CycNum) -> CycNum {
        self.try_sub(rhs).expect("ring context mismatch")
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &'a CycNum) -> CycNum {
        self.try_mul(rhs).expect("ring context mismatch")
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            pexp: self.pexp,
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64) -> Arc<RingContext> {
        RingContext::new(p).unwrap()
    }

    #[test]
    fn additive_cancellation() {
        let c = ctx(7);
        let a = CycNum::a_pow(&c, 1);
        let a3 = CycNum::a_pow(&c, 3);
        let s = &(&a + &a3) + &(-&a);
        assert_eq!(s, a3);
    }

    #[test]
    fn a_to_the_p_is_minus_one() {
        let c = ctx(7);
        let prod = &CycNum::a_pow(&c, 3) * &CycNum::a_pow(&c, 4);
        assert_eq!(prod, CycNum::from_int(&c, -1));
    }

    #[test]
    fn alpha_has_order_4p() {
        let c = ctx(5);
        let alpha = CycNum::alpha_pow(&c, 1).unwrap();
        assert_eq!(alpha.pow(20).unwrap(), CycNum::one(&c));
        assert_ne!(alpha.pow(10).unwrap(), CycNum::one(&c));
        assert!(CycNum::alpha_pow(&ctx(7), 1).is_err());
    }

    #[test]
    fn conj_of_a_is_inverse() {
        for p in [5, 7, 11] {
            let c = ctx(p);
            let a = CycNum::a_pow(&c, 1);
            assert_eq!(a.conj(), CycNum::a_pow(&c, -1));
            assert_eq!(&a.conj() * &a, CycNum::one(&c));
        }
    }

    #[test]
    fn inverse_and_p_denominators() {
        let c = ctx(5);
        // 1 - A^2 has norm +-p^k, so its inverse carries a p-denominator.
        let x = &CycNum::one(&c) - &CycNum::a_pow(&c, 2);
        let inv = x.inverse().unwrap();
        assert!(!inv.is_integral());
        assert!((&inv * &x).is_one());
        // 2 is not invertible in K_p.
        assert!(CycNum::from_int(&c, 2).inverse().is_err());
        assert_eq!(
            CycNum::from_int(&c, 5).inverse().unwrap(),
            CycNum::p_inverse_pow(&c, 1)
        );
    }

    #[test]
    fn canonical_form_strips_p() {
        let c = ctx(5);
        let x = CycNum::from_parts(&c, vec![BigInt::from(25), BigInt::from(5)], 2);
        assert_eq!(x.pexp(), 1);
        assert_eq!(x.coeffs()[0], BigInt::from(5));
        let z = CycNum::from_parts(&c, vec![BigInt::zero()], 3);
        assert_eq!(z.pexp(), 0);
    }

    #[test]
    fn divisibility() {
        let c = ctx(7);
        assert!(CycNum::zero(&c).divisible_by(2).unwrap());
        let q2 = &CycNum::a_pow(&c, 2) + &CycNum::a_pow(&c, -2);
        assert!(!q2.divisible_by(2).unwrap());
        assert!(q2.scale(&BigInt::from(6)).divisible_by(3).unwrap());
        assert!(CycNum::p_inverse_pow(&c, 1).divisible_by(2).is_err());
    }

    #[test]
    fn one_plus_a_generates_the_prime_over_p() {
        // (p) = (1 + A)^{p-1}: p / (1+A)^{p-1} is an integral unit.
        for p in [5u64, 7, 11] {
            let c = ctx(p);
            let x = &CycNum::one(&c) + &CycNum::a_pow(&c, 1);
            let xp = x.pow(p as i64 - 1).unwrap();
            let q = CycNum::from_int(&c, p as i64).try_div(&xp).unwrap();
            assert!(q.is_integral());
            assert!(q.inverse().unwrap().is_integral());
            // and (1+A)^{p-1} / p is integral too
            let r = xp.div_integer(&BigInt::from(p)).unwrap();
            assert!(r.is_integral());
            assert!(r.scale(&BigInt::from(p)).divisible_by(p).unwrap());
        }
    }

    #[test]
    fn a_subring_membership() {
        let c = ctx(5);
        assert!(CycNum::a_pow(&c, 1).in_a_subring());
        assert!(!CycNum::alpha_pow(&c, 1).unwrap().in_a_subring());
        assert!(CycNum::a_pow(&ctx(7), 1).in_a_subring());
    }

    #[test]
    fn json_is_bit_exact() {
        let c = ctx(13);
        let x = &CycNum::a_pow(&c, 5).scale(&BigInt::from(-123456789i64))
            + &CycNum::p_inverse_pow(&c, 3);
        let j = x.to_json();
        let text = serde_json::to_string(&j).unwrap();
        let back: CycJson = serde_json::from_str(&text).unwrap();
        assert_eq!(CycNum::from_json(&c, &back).unwrap(), x);
    }

    #[test]
    fn complex_embedding_of_a() {
        let c = ctx(7);
        let (re, im) = CycNum::a_pow(&c, 1).to_complex();
        let t = std::f64::consts::PI / 7.0;
        assert!((re - t.cos()).abs() < 1e-12 && (im - t.sin()).abs() < 1e-12);
        let c5 = ctx(5);
        let (re, im) = CycNum::a_pow(&c5, 1).to_complex();
        let t = std::f64::consts::PI / 5.0;
        assert!((re - t.cos()).abs() < 1e-12 && (im - t.sin()).abs() < 1e-12);
    }

    mod props {
        use proptest::prelude::*;

        use super::*;

        fn elem(max_pexp: u32) -> impl Strategy<Value = CycNum> {
            (
                prop::sample::select(vec![5u64, 7, 11, 13]),
                prop::collection::vec(-3i64..=3, 24),
                0..=max_pexp,
            )
                .prop_map(|(p, v, e)| {
                    let c = ctx(p);
                    let coeffs = v[..c.phi()].iter().map(|&x| BigInt::from(x)).collect();
                    CycNum::from_parts(&c, coeffs, e)
                })
        }

        fn triple(max_pexp: u32) -> impl Strategy<Value = (CycNum, CycNum, CycNum)> {
            (
                elem(max_pexp),
                prop::collection::vec(-3i64..=3, 48),
                0..=max_pexp,
            )
                .prop_map(|(x, v, e)| {
                    let c = x.context().clone();
                    let f = c.phi();
                    let mk = |w: &[i64]| w.iter().map(|&k| BigInt::from(k)).collect();
                    let y = CycNum::from_parts(&c, mk(&v[..f]), e);
                    let z = CycNum::from_parts(&c, mk(&v[24..24 + f]), 0);
                    (x, y, z)
                })
        }

        fn close(a: (f64, f64), b: (f64, f64)) -> bool {
            (a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]

            #[test]
            fn ring_axioms((x, y, z) in triple(2)) {
                prop_assert_eq!(&x + &y, &y + &x);
                prop_assert_eq!(&x * &y, &y * &x);
                prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
                prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
                prop_assert_eq!(&(&x - &y) + &y, x.clone());
                prop_assert_eq!(&x * &CycNum::one(x.context()), x.clone());
            }

            #[test]
            fn embedding_is_a_ring_map((x, y, _) in triple(1)) {
                let (a, b) = (x.to_complex(), y.to_complex());
                let prod = (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
                prop_assert!(close((&x * &y).to_complex(), prod));
                prop_assert!(close((&x + &y).to_complex(), (a.0 + b.0, a.1 + b.1)));
                prop_assert!(close(x.conj().to_complex(), (a.0, -a.1)));
            }

            #[test]
            fn conj_and_galois_are_automorphisms((x, y, _) in triple(2), k in 1u64..60) {
                prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
                prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
                prop_assert_eq!(x.conj().conj(), x.clone());
                let n = x.context().n();
                let k = (1..).map(|j| k + j).find(|j| num_integer::gcd(*j, n) == 1).unwrap();
                prop_assert_eq!((&x * &y).galois(k), &x.galois(k) * &y.galois(k));
                prop_assert_eq!(x.galois(n - 1), x.conj());
            }

            #[test]
            fn integers_are_closed((x, y, z) in triple(0)) {
                prop_assert!((&x * &y).is_integral());
                prop_assert!((&(&x + &y) - &z).is_integral());
                let q = CycNum::p_inverse_pow(x.context(), 1);
                prop_assert!(!q.is_integral());
            }

            #[test]
            fn divisibility_is_additive((x, y, z) in triple(0), r in 2u64..=6) {
                let rb = BigInt::from(r);
                let (rx, ry) = (x.scale(&rb), y.scale(&rb));
                prop_assert!(rx.divisible_by(r).unwrap());
                prop_assert!((&rx + &ry).divisible_by(r).unwrap());
                prop_assert!((&rx * &z).divisible_by(r).unwrap());
                if x.divisible_by(r).unwrap() && y.divisible_by(r).unwrap() {
                    prop_assert!((&x - &y).divisible_by(r).unwrap());
                }
            }

            #[test]
            fn a_subring_is_closed((x, y, _) in triple(1)) {
                let c = x.context().clone();
                if c.has_alpha() {
                    let al = CycNum::alpha_pow(&c, 1).unwrap();
                    let ax = &x * &al;
                    if x.in_a_subring() && y.in_a_subring() {
                        prop_assert!((&x * &y).in_a_subring());
                        prop_assert!(!ax.in_a_subring() || ax.is_zero());
                    }
                    if x.in_a_subring() {
                        prop_assert!((&ax * &al).in_a_subring());
                    }
                }
            }

            #[test]
            fn json_round_trip(x in elem(3)) {
                let back = CycNum::from_json(x.context(), &x.to_json()).unwrap();
                prop_assert_eq!(back, x);
            }
        }
    }
}
