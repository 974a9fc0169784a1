//! Planar-cut contraction of a network of skein vertices.
//!
//! Each vertex is a linear combination of crossingless pairings of its ports. The
//! sweep absorbs vertices one at a time, keeping for every connectivity pattern of
//! the open edges a coefficient in `Z[x]/(x^n - 1)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::cyclotome::{delta, Acc, CycNum, RingContext, Scalar};
use crate::error::{Error, Result};

/// Sparse coefficient `sum c_i x^{e_i}`.
pub type Sparse = Vec<(i64, i64)>;

#[derive(Clone, Debug)]
pub struct Vertex {
    pub ports: Vec<u32>,
    /// (coefficient, pairs of port indices)
    pub terms: Vec<(Sparse, Vec<(u8, u8)>)>,
}

impl Vertex {
    /// Kauffman resolution of `X[i, j, k, l]`.
    pub fn crossing(ctx: &RingContext, arcs: [u32; 4]) -> Vertex {
        let a = ctx.a_exp() as i64;
        Vertex {
            ports: arcs.to_vec(),
            terms: vec![
                (vec![(1, a)], vec![(0, 1), (2, 3)]),
                (vec![(1, -a)], vec![(0, 3), (1, 2)]),
            ],
        }
    }
}

pub fn sparse_of(v: &CycNum) -> Result<Sparse> {
    if !v.is_integral() {
        return Err(Error::NotIntegral(v.pexp()));
    }
    v.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(i, c)| c.to_i64().map(|c| (c, i as i64)).ok_or(Error::Overflow))
        .collect()
}

fn greedy_order(vertices: &[Vertex]) -> Vec<usize> {
    let nv = vertices.len();
    let mut used = vec![false; nv];
    let mut open: HashMap<u32, u32> = HashMap::new();
    let mut order = Vec::with_capacity(nv);
    // label -> vertices touching it
    let mut touch: HashMap<u32, Vec<usize>> = HashMap::new();
    for (vi, v) in vertices.iter().enumerate() {
        for &l in &v.ports {
            touch.entry(l).or_default().push(vi);
        }
    }
    let score = |v: &Vertex, open: &HashMap<u32, u32>| -> i64 {
        let mut s = 0;
        for &l in &v.ports {
            if open.contains_key(&l) {
                s += 1;
            } else if v.ports.iter().filter(|&&m| m == l).count() == 1 {
                s -= 1;
            }
        }
        s
    };
    while order.len() < nv {
        // candidates: vertices adjacent to the open set, or all if it is empty
        let mut best: Option<(i64, usize)> = None;
        let consider = |vi: usize, best: &mut Option<(i64, usize)>| {
            if used[vi] {
                return;
            }
            let s = score(&vertices[vi], &open);
            if best.is_none_or(|(bs, bi)| s > bs || (s == bs && vi < bi)) {
                *best = Some((s, vi));
            }
        };
        for l in open.keys() {
            for &vi in &touch[l] {
                consider(vi, &mut best);
            }
        }
        if best.is_none() {
            for vi in 0..nv {
                consider(vi, &mut best);
            }
        }
        let (_, vi) = best.unwrap();
        used[vi] = true;
        order.push(vi);
        for &l in &vertices[vi].ports {
            let e = open.entry(l).or_insert(0);
            *e += 1;
            if *e == 2 {
                open.remove(&l);
            }
        }
    }
    order
}

fn check_labels(vertices: &[Vertex]) -> Result<()> {
    let mut count: HashMap<u32, u32> = HashMap::new();
    for v in vertices {
        for &l in &v.ports {
            *count.entry(l).or_insert(0) += 1;
        }
        for (_, pairs) in &v.terms {
            let mut hit = vec![0u8; v.ports.len()];
            for &(a, b) in pairs {
                hit[a as usize] += 1;
                hit[b as usize] += 1;
            }
            if hit.iter().any(|&h| h != 1) {
                return Err(Error::MalformedDiagram(
                    "vertex term is not a perfect pairing of its ports".into(),
                ));
            }
        }
    }
    if let Some((l, c)) = count.iter().find(|(_, &c)| c != 2) {
        return Err(Error::MalformedDiagram(format!(
            "edge {l} has {c} endpoints instead of 2"
        )));
    }
    Ok(())
}

const NONE: usize = usize::MAX;

struct Graph {
    nb: Vec<[usize; 2]>,
}

impl Graph {
    fn new(n: usize) -> Graph {
        Graph {
            nb: vec![[NONE, NONE]; n],
        }
    }
    fn link(&mut self, a: usize, b: usize) {
        let put = |slot: &mut [usize; 2], x: usize| {
            if slot[0] == NONE {
                slot[0] = x;
            } else {
                slot[1] = x;
            }
        };
        put(&mut self.nb[a], b);
        put(&mut self.nb[b], a);
    }
}

/// Contract the network; labels must each occur on exactly two ports.
pub fn contract<T: Scalar>(ctx: &Arc<RingContext>, vertices: &[Vertex]) -> Result<Acc<T>> {
    check_labels(vertices)?;
    let n = ctx.n() as usize;
    let order = greedy_order(vertices);
    let d = delta(ctx);
    let mut dpow_cache: Vec<CycNum> = vec![CycNum::one(ctx)];

    let mut frontier: Vec<u32> = Vec::new();
    let mut states: HashMap<Vec<u8>, Acc<T>> = HashMap::new();
    states.insert(Vec::new(), Acc::monomial(n, 1, 0));

    for &vi in &order {
        let v = &vertices[vi];
        let np = v.ports.len();
        let f = frontier.len();
        let fpos: HashMap<u32, usize> = frontier.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut closing = vec![false; f];
        let mut opening: Vec<u32> = Vec::new();
        // port -> (Some(frontier idx) | Some(other port) | opening)
        let mut port_link: Vec<Option<usize>> = vec![None; np];
        for (pi, &l) in v.ports.iter().enumerate() {
            if let Some(&fi) = fpos.get(&l) {
                closing[fi] = true;
                port_link[pi] = Some(fi);
            } else if let Some(pj) = v
                .ports
                .iter()
                .enumerate()
                .position(|(pj, &m)| pj != pi && m == l)
            {
                port_link[pi] = Some(f + pj);
            } else {
                opening.push(l);
            }
        }
        let mut new_frontier: Vec<u32> = frontier
            .iter()
            .zip(&closing)
            .filter(|(_, &c)| !c)
            .map(|(&l, _)| l)
            .chain(opening.iter().copied())
            .collect();
        new_frontier.sort_unstable();
        let npos: HashMap<u32, usize> = new_frontier
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i))
            .collect();
        // node id -> new frontier index for endpoints
        let mut endpoint = vec![NONE; f + np];
        for (fi, &l) in frontier.iter().enumerate() {
            if !closing[fi] {
                endpoint[fi] = npos[&l];
            }
        }
        for (pi, &l) in v.ports.iter().enumerate() {
            if port_link[pi].is_none() {
                endpoint[f + pi] = npos[&l];
            }
        }

        let mut term_coef: HashMap<(usize, usize), Sparse> = HashMap::new();
        let mut next_states: HashMap<Vec<u8>, Acc<T>> = HashMap::with_capacity(states.len() * 2);
        for (key, coef) in &states {
            for (ti, (_, pairs)) in v.terms.iter().enumerate() {
                let mut g = Graph::new(f + np);
                for (a, &b) in key.iter().enumerate() {
                    if a < b as usize {
                        g.link(a, b as usize);
                    }
                }
                for &(a, b) in pairs {
                    g.link(f + a as usize, f + b as usize);
                }
                for (pi, link) in port_link.iter().enumerate() {
                    if let Some(t) = *link {
                        if t < f || t > f + pi {
                            g.link(f + pi, t);
                        }
                    }
                }
                let mut seen = vec![false; f + np];
                let mut new_key = vec![0u8; new_frontier.len()];
                for start in 0..f + np {
                    if endpoint[start] == NONE || seen[start] {
                        continue;
                    }
                    let (mut prev, mut cur) = (NONE, start);
                    seen[start] = true;
                    loop {
                        let [x, y] = g.nb[cur];
                        let nx = if x != prev { x } else { y };
                        prev = cur;
                        cur = nx;
                        seen[cur] = true;
                        if endpoint[cur] != NONE {
                            break;
                        }
                    }
                    new_key[endpoint[start]] = endpoint[cur] as u8;
                    new_key[endpoint[cur]] = endpoint[start] as u8;
                }
                let mut loops = 0usize;
                for start in 0..f + np {
                    if seen[start] || g.nb[start][0] == NONE {
                        continue;
                    }
                    loops += 1;
                    let (mut prev, mut cur) = (NONE, start);
                    loop {
                        seen[cur] = true;
                        let [x, y] = g.nb[cur];
                        let nx = if x != prev { x } else { y };
                        prev = cur;
                        cur = nx;
                        if cur == start {
                            break;
                        }
                    }
                }
                let tc = match term_coef.get(&(ti, loops)) {
                    Some(tc) => tc,
                    None => {
                        while dpow_cache.len() <= loops {
                            let nxt = dpow_cache.last().unwrap() * &d;
                            dpow_cache.push(nxt);
                        }
                        let mut acc: Acc<BigInt> = Acc::zero(n);
                        for &(c, e) in &v.terms[ti].0 {
                            acc.add_shifted(&Acc::monomial(n, 1, 0), c, e)?;
                        }
                        let val = &acc.to_cyc(ctx) * &dpow_cache[loops];
                        term_coef.insert((ti, loops), sparse_of(&val)?);
                        &term_coef[&(ti, loops)]
                    }
                };
                if tc.is_empty() {
                    continue;
                }
                let slot = next_states.entry(new_key).or_insert_with(|| Acc::zero(n));
                for &(c, e) in tc {
                    slot.add_shifted(coef, c, e)?;
                }
            }
        }
        for acc in next_states.values_mut() {
            if acc.bits() > 60 {
                acc.reduce(ctx)?;
            }
        }
        next_states.retain(|_, a| {
            if a.is_zero() {
                return false;
            }
            true
        });
        states = next_states;
        frontier = new_frontier;
    }
    debug_assert!(frontier.is_empty());
    Ok(states.remove(&Vec::new()).unwrap_or_else(|| Acc::zero(n)))
}

/// Contract with machine integers, falling back to bignums on overflow.
pub fn evaluate(ctx: &Arc<RingContext>, vertices: &[Vertex]) -> Result<CycNum> {
    match contract::<i128>(ctx, vertices) {
        Ok(a) => Ok(a.to_cyc(ctx)),
        Err(Error::Overflow) => Ok(contract::<BigInt>(ctx, vertices)?.to_cyc(ctx)),
        Err(e) => Err(e),
    }
}

/// Reference evaluation by enumerating every term choice (exponential; tests only).
pub fn brute_force(ctx: &Arc<RingContext>, vertices: &[Vertex]) -> Result<CycNum> {
    check_labels(vertices)?;
    let d = delta(ctx);
    let mut total = CycNum::zero(ctx);
    let sizes: Vec<usize> = vertices.iter().map(|v| v.terms.len()).collect();
    let mut choice = vec![0usize; vertices.len()];
    loop {
        // union-find over (vertex, port)
        let mut ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (vi, v) in vertices.iter().enumerate() {
            for pi in 0..v.ports.len() {
                let k = ids.len();
                ids.insert((vi, pi), k);
            }
        }
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra] = rb;
            }
        };
        let mut by_label: HashMap<u32, Vec<usize>> = HashMap::new();
        let mut coef = CycNum::one(ctx);
        for (vi, v) in vertices.iter().enumerate() {
            for (pi, &l) in v.ports.iter().enumerate() {
                by_label.entry(l).or_default().push(ids[&(vi, pi)]);
            }
            let (sp, pairs) = &v.terms[choice[vi]];
            for &(a, b) in pairs {
                union(&mut parent, ids[&(vi, a as usize)], ids[&(vi, b as usize)]);
            }
            let mut t = CycNum::zero(ctx);
            for &(c, e) in sp {
                t = &t + &CycNum::zeta_pow(ctx, e).scale(&BigInt::from(c));
            }
            coef = &coef * &t;
        }
        for ends in by_label.values() {
            union(&mut parent, ends[0], ends[1]);
        }
        let mut roots = std::collections::BTreeSet::new();
        for x in 0..parent.len() {
            let r = find(&mut parent, x);
            roots.insert(r);
        }
        total = &total + &(&coef * &d.pow(roots.len() as i64)?);
        // next choice
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(total);
            }
            choice[i] += 1;
            if choice[i] < sizes[i] {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curl_gives_minus_a_cubed_delta() {
        let ctx = RingContext::new(7).unwrap();
        let v = vec![Vertex::crossing(&ctx, [1, 1, 2, 2])];
        let got = evaluate(&ctx, &v).unwrap();
        let want = &(-CycNum::a_pow(&ctx, 3)) * &delta(&ctx);
        assert_eq!(got, want);
        assert_eq!(brute_force(&ctx, &v).unwrap(), want);
    }

    #[test]
    fn empty_network_is_one() {
        let ctx = RingContext::new(5).unwrap();
        assert!(evaluate(&ctx, &[]).unwrap().is_one());
    }

    #[test]
    fn unpaired_label_is_rejected() {
        let ctx = RingContext::new(5).unwrap();
        let v = vec![Vertex::crossing(&ctx, [1, 2, 3, 4])];
        assert!(evaluate(&ctx, &v).is_err());
    }
}
