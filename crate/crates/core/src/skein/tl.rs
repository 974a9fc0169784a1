//! Temperley-Lieb algebra on `m` strands and the Jones-Wenzl idempotents.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cyclotome::{delta, quantum_dim, CycNum, RingContext};
use crate::error::Result;

/// A crossingless matching of `2m` points as a partner array: bottom points are
/// `0..m`, top points `m..2m`, both read left to right.
pub type Matching = Vec<u8>;

#[derive(Clone, Debug, PartialEq)]
pub struct TLElement {
    pub strands: usize,
    pub terms: BTreeMap<Matching, CycNum>,
}

fn identity_matching(m: usize) -> Matching {
    (0..2 * m).map(|q| ((q + m) % (2 * m)) as u8).collect()
}

/// Stack `a` on top of `b`; returns the matching and the number of closed loops.
pub fn compose_matchings(a: &Matching, b: &Matching, m: usize) -> (Matching, usize) {
    let mut out = vec![0u8; 2 * m];
    let mut seen_mid = vec![false; m];
    // endpoints: result bottom q -> b bottom q; result top q -> a top q
    // walking state: (in_a, point)
    let walk = |start_in_a: bool, start: usize, seen_mid: &mut Vec<bool>| -> usize {
        let (mut in_a, mut pt) = (start_in_a, start);
        loop {
            let partner = if in_a { a[pt] } else { b[pt] } as usize;
            if in_a {
                if partner >= m {
                    return partner; // a top = result top
                }
                seen_mid[partner] = true;
                in_a = false;
                pt = partner + m; // b top
            } else {
                if partner < m {
                    return partner; // b bottom = result bottom
                }
                seen_mid[partner - m] = true;
                in_a = true;
                pt = partner - m; // a bottom
            }
        }
    };
    for q in 0..m {
        let e = walk(false, q, &mut seen_mid);
        out[q] = e as u8;
        let e2 = walk(true, q + m, &mut seen_mid);
        out[q + m] = e2 as u8;
    }
    let mut loops = 0;
    for s in 0..m {
        if seen_mid[s] {
            continue;
        }
        loops += 1;
        // trace the loop through middle points: a bottom s -> ...
        let mut pt = s;
        loop {
            seen_mid[pt] = true;
            let x = a[pt] as usize; // a bottom partner, also in a bottom
            seen_mid[x] = true;
            let y = b[x + m] as usize - m; // b top partner
            if y == s {
                break;
            }
            pt = y;
        }
    }
    (out, loops)
}

impl TLElement {
    pub fn zero(m: usize) -> TLElement {
        TLElement {
            strands: m,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(ctx: &Arc<RingContext>, m: usize) -> TLElement {
        let mut t = TLElement::zero(m);
        t.terms.insert(identity_matching(m), CycNum::one(ctx));
        t
    }

    /// The generator `e_i` (`1 <= i < m`).
    pub fn generator(ctx: &Arc<RingContext>, m: usize, i: usize) -> TLElement {
        let mut mt = identity_matching(m);
        let (x, y) = (i - 1, i);
        mt[x] = y as u8;
        mt[y] = x as u8;
        mt[x + m] = (y + m) as u8;
        mt[y + m] = (x + m) as u8;
        let mut t = TLElement::zero(m);
        t.terms.insert(mt, CycNum::one(ctx));
        t
    }

    fn add_term(&mut self, mt: Matching, c: CycNum) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(mt) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &TLElement) -> TLElement {
        let mut out = self.clone();
        for (mt, c) in &other.terms {
            out.add_term(mt.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &CycNum) -> TLElement {
        let mut out = TLElement::zero(self.strands);
        for (mt, c) in &self.terms {
            out.add_term(mt.clone(), c * k);
        }
        out
    }

    /// `self` stacked on top of `other`.
    pub fn compose(&self, other: &TLElement, ctx: &Arc<RingContext>) -> TLElement {
        let m = self.strands;
        let d = delta(ctx);
        let mut dpow = vec![CycNum::one(ctx)];
        let mut out = TLElement::zero(m);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let (mt, loops) = compose_matchings(ma, mb, m);
                while dpow.len() <= loops {
                    let next = dpow.last().unwrap() * &d;
                    dpow.push(next);
                }
                out.add_term(mt, &(ca * cb) * &dpow[loops]);
            }
        }
        out
    }

    /// Add one straight strand on the right.
    pub fn tensor_id(&self) -> TLElement {
        let m = self.strands;
        let mut out = TLElement::zero(m + 1);
        let lift = |q: u8| -> u8 {
            if (q as usize) < m {
                q
            } else {
                q + 1
            }
        };
        for (mt, c) in &self.terms {
            let mut nm = vec![0u8; 2 * m + 2];
            for (q, &r) in mt.iter().enumerate() {
                nm[lift(q as u8) as usize] = lift(r);
            }
            nm[m] = (2 * m + 1) as u8;
            nm[2 * m + 1] = m as u8;
            out.terms.insert(nm, c.clone());
        }
        out
    }
}

/// The Jones-Wenzl idempotent `f_c` (`f_0` is the empty diagram).
pub fn jones_wenzl(ctx: &Arc<RingContext>, c: usize) -> Result<TLElement> {
    let mut f = TLElement::identity(ctx, c.min(1));
    for n in 1..c {
        let g = f.tensor_id();
        let e = TLElement::generator(ctx, n + 1, n);
        let ratio = quantum_dim(ctx, n as i64 - 1).try_div(&quantum_dim(ctx, n as i64))?;
        let mid = g.compose(&e, ctx).compose(&g, ctx);
        f = g.add(&mid.scale(&-ratio));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_satisfy_tl_relations() {
        let ctx = RingContext::new(7).unwrap();
        let e1 = TLElement::generator(&ctx, 3, 1);
        let e2 = TLElement::generator(&ctx, 3, 2);
        assert_eq!(e1.compose(&e1, &ctx), e1.scale(&delta(&ctx)));
        assert_eq!(e1.compose(&e2, &ctx).compose(&e1, &ctx), e1);
        assert_eq!(e2.compose(&e1, &ctx).compose(&e2, &ctx), e2);
    }

    #[test]
    fn jones_wenzl_is_an_integral_idempotent_killing_turnbacks() {
        for p in [5u64, 7] {
            let ctx = RingContext::new(p).unwrap();
            for c in 1..=4.min(p as usize - 2) {
                let f = jones_wenzl(&ctx, c).unwrap();
                assert_eq!(f.compose(&f, &ctx), f, "p={p} c={c}");
                assert!(f.terms.values().all(|v| v.is_integral()));
                for i in 1..c {
                    let e = TLElement::generator(&ctx, c, i);
                    assert!(e.compose(&f, &ctx).terms.is_empty());
                    assert!(f.compose(&e, &ctx).terms.is_empty());
                }
            }
        }
    }

    #[test]
    fn jones_wenzl_term_count_is_catalan() {
        let ctx = RingContext::new(11).unwrap();
        let f = jones_wenzl(&ctx, 5).unwrap();
        assert_eq!(f.terms.len(), 42);
    }
}
