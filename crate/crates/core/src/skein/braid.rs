use rand::Rng;

use super::diagram::{Color, Component, Crossing, FramedColoredDiagram};
use crate::error::{Error, Result};

/// A braid word on `strands` strands; letter `i > 0` is `sigma_i`, `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Braid {
    pub strands: usize,
    pub word: Vec<i32>,
}

impl Braid {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Braid> {
        if strands == 0 {
            return Err(Error::InvalidInput(
                "a braid needs at least one strand".into(),
            ));
        }
        for &g in &word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidInput(format!(
                    "generator {g} is not in B_{strands}"
                )));
            }
        }
        Ok(Braid { strands, word })
    }

    /// Underlying permutation: bottom position -> top position.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect(); // position -> strand
        for &g in &self.word {
            let i = g.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &s) in at.iter().enumerate() {
            perm[s] = pos;
        }
        perm
    }

    /// Planar code of the braid closure. Components are ordered by their lowest
    /// bottom position; framings equal the blackboard framings; all colors are 1.
    pub fn closure(&self) -> FramedColoredDiagram {
        let m = self.strands;
        let initial: Vec<u32> = (1..=m as u32).collect();
        let mut cur = initial.clone();
        let mut fresh = m as u32 + 1;
        let mut crossings = Vec::with_capacity(self.word.len());
        for &g in &self.word {
            let i = g.unsigned_abs() as usize;
            let (a, b) = (cur[i - 1], cur[i]);
            let (c, d) = (fresh, fresh + 1);
            fresh += 2;
            if g > 0 {
                crossings.push(Crossing::new([b, d, c, a], 1));
            } else {
                crossings.push(Crossing::new([a, b, d, c], -1));
            }
            cur[i - 1] = c;
            cur[i] = d;
        }
        let rename = |x: u32| -> u32 {
            match cur.iter().position(|&f| f == x) {
                Some(q) if x > m as u32 => initial[q],
                _ => x,
            }
        };
        for x in crossings.iter_mut() {
            x.arcs = x.arcs.map(rename);
        }
        let perm = self.permutation();
        let mut seen = vec![false; m];
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for q in 0..m {
            if seen[q] {
                continue;
            }
            let mut cyc = vec![];
            let mut r = q;
            while !seen[r] {
                seen[r] = true;
                cyc.push(r);
                r = perm[r];
            }
            cycles.push(cyc);
        }
        let mut d = FramedColoredDiagram {
            crossings,
            components: vec![],
            weight: 0,
        };
        let mut next = std::collections::BTreeMap::new();
        for x in &d.crossings {
            next.insert(x.arcs[0], x.arcs[2]);
            let (oi, oo) = x.over_flow();
            next.insert(oi, oo);
        }
        for cyc in cycles {
            let start = initial[cyc[0]];
            let mut arcs = vec![start];
            if let Some(&n0) = next.get(&start) {
                let mut a = n0;
                while a != start {
                    arcs.push(a);
                    a = next[&a];
                }
            }
            d.components.push(Component {
                arcs,
                framing: 0,
                color: Color::Explicit(1),
            });
        }
        let topo = d.topology().expect("braid closures are valid diagrams");
        let w = d.writhes(&topo);
        for (c, wi) in d.components.iter_mut().zip(w) {
            c.framing = wi;
        }
        d
    }

    /// Markov stabilization by `sigma_m^{sign}`.
    pub fn stabilize(&self, sign: i32) -> Braid {
        let mut word = self.word.clone();
        word.push(sign.signum() * self.strands as i32);
        Braid {
            strands: self.strands + 1,
            word,
        }
    }

    pub fn random<R: Rng>(rng: &mut R, strands: usize, len: usize) -> Braid {
        let word = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        Braid { strands, word }
    }

    /// Random braid of length `len` followed by a random-signed sorting word, so
    /// every strand closes up on itself.
    pub fn random_pure<R: Rng>(rng: &mut R, strands: usize, len: usize) -> Braid {
        let mut b = Braid::random(rng, strands, len);
        let mut at: Vec<usize> = (0..strands).collect();
        for &g in &b.word {
            let i = g.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        for pass in 0..strands {
            for i in 1..strands - pass {
                if at[i - 1] > at[i] {
                    at.swap(i - 1, i);
                    b.word.push(if rng.gen_bool(0.5) {
                        i as i32
                    } else {
                        -(i as i32)
                    });
                }
            }
        }
        b
    }

    /// Insert a cancelling pair `sigma_i^{e} sigma_i^{-e}` at a random position.
    pub fn random_r2<R: Rng>(&self, rng: &mut R) -> Braid {
        let i = rng.gen_range(1..self.strands as i32);
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        let at = rng.gen_range(0..=self.word.len());
        let mut word = self.word.clone();
        word.splice(at..at, [e * i, -e * i]);
        Braid {
            strands: self.strands,
            word,
        }
    }

    /// Insert `s_i s_j s_i` and replace it by `s_j s_i s_j` (`|i - j| = 1`), returning
    /// the pair of braids that differ by one third Reidemeister move.
    pub fn random_r3_pair<R: Rng>(&self, rng: &mut R) -> (Braid, Braid) {
        assert!(self.strands >= 3);
        let i = rng.gen_range(1..self.strands as i32 - 1);
        let (a, b) = if rng.gen_bool(0.5) {
            (i, i + 1)
        } else {
            (i + 1, i)
        };
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        // s_a^e s_b^f s_a^f' forms valid for R3: (e, e, e) or mixed (e, f, -e)
        let (x, y, z, x2, y2, z2) = match rng.gen_range(0..3) {
            0 => (e * a, e * b, e * a, e * b, e * a, e * b),
            // s_a s_b s_a^{-1} = s_b^{-1} s_a s_b
            1 => (e * a, e * b, -e * a, -e * b, e * a, e * b),
            // s_a^{-1} s_b s_a = s_b s_a s_b^{-1}
            _ => (-e * a, e * b, e * a, e * b, e * a, -e * b),
        };
        let at = rng.gen_range(0..=self.word.len());
        let mut w1 = self.word.clone();
        w1.splice(at..at, [x, y, z]);
        let mut w2 = self.word.clone();
        w2.splice(at..at, [x2, y2, z2]);
        (
            Braid {
                strands: self.strands,
                word: w1,
            },
            Braid {
                strands: self.strands,
                word: w2,
            },
        )
    }
}

pub fn trefoil() -> Braid {
    Braid::new(2, vec![1, 1, 1]).unwrap()
}

pub fn figure_eight() -> Braid {
    Braid::new(3, vec![1, -2, 1, -2]).unwrap()
}

pub fn borromean() -> Braid {
    Braid::new(3, vec![1, -2, 1, -2, 1, -2]).unwrap()
}

pub fn hopf() -> Braid {
    Braid::new(2, vec![1, 1]).unwrap()
}

/// Crossingless unknot with the given framing and color.
pub fn unknot(framing: i64, color: Color) -> FramedColoredDiagram {
    FramedColoredDiagram {
        crossings: vec![],
        components: vec![Component {
            arcs: vec![1],
            framing,
            color,
        }],
        weight: 0,
    }
}

/// A pure-braid framed link and the result of sliding strand `from` over the
/// adjacent strand `over`, both with every component colored by `Omega`.
///
/// The slid-over strand is blackboard-cabled, the copy gets `framings[over]` full
/// twists against it, and `from` is joined to the copy by a `sigma^{half_twist}`.
pub fn handle_slide(
    b: &Braid,
    framings: &[i64],
    from: usize,
    over: usize,
    half_twist: i32,
) -> Result<(FramedColoredDiagram, FramedColoredDiagram)> {
    let n = b.strands;
    if b.permutation().iter().enumerate().any(|(i, &q)| i != q) {
        return Err(Error::InvalidInput(
            "handle slides need a pure braid".into(),
        ));
    }
    if framings.len() != n || from.abs_diff(over) != 1 || over >= n || from >= n {
        return Err(Error::InvalidInput(
            "handle slide between non-adjacent strands".into(),
        ));
    }
    let e = half_twist.signum();
    if e == 0 {
        return Err(Error::InvalidInput("half twist must be nonzero".into()));
    }
    let mut before = b.closure();
    for (c, &f) in before.components.iter_mut().zip(framings) {
        c.framing = f;
        c.color = Color::Omega;
    }
    let lk = before.linking_matrix(&before.topology()?)?[from][over];

    let mut at: Vec<usize> = (0..n).collect();
    let mut word = Vec::new();
    for &g in &b.word {
        let i = g.unsigned_abs() as usize;
        let s = g.signum();
        let band = at.iter().position(|&x| x == over).unwrap();
        let q = |k: usize| (k + usize::from(band < k)) as i32;
        let (l, r) = (at[i - 1], at[i]);
        let left = q(i - 1);
        if l == over {
            word.extend([s * (left + 2), s * (left + 1)]);
        } else if r == over {
            word.extend([s * (left + 1), s * (left + 2)]);
        } else {
            word.push(s * (left + 1));
        }
        at.swap(i - 1, i);
    }
    let pos = over as i32;
    let f2 = framings[over];
    for _ in 0..2 * f2.abs() {
        word.push(f2.signum() as i32 * (pos + 1));
    }
    word.push(e * if from < over { pos } else { pos + 2 });
    let slid = Braid::new(n + 1, word)?;

    let old_strand = |x: usize| {
        if x <= over {
            x
        } else if x == over + 1 {
            over
        } else {
            x - 1
        }
    };
    let copy = if from < over { over } else { over + 1 };
    let mut after = slid.closure();
    let perm = slid.permutation();
    let mut seen = vec![false; n + 1];
    let mut comp = 0;
    for start in 0..=n {
        if seen[start] {
            continue;
        }
        let mut strands = vec![];
        let mut r = start;
        while !seen[r] {
            seen[r] = true;
            strands.push(r);
            r = perm[r];
        }
        let c = &mut after.components[comp];
        c.color = Color::Omega;
        c.framing = if strands.contains(&copy) {
            framings[from] + f2 + 2 * lk
        } else {
            framings[old_strand(strands[0])]
        };
        comp += 1;
    }
    Ok((before, after))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_closure() {
        let d = trefoil().closure();
        assert_eq!(d.crossings.len(), 3);
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].framing, 3);
    }

    #[test]
    fn borromean_has_three_unlinked_components() {
        let d = borromean().closure();
        assert_eq!(d.components.len(), 3);
        let t = d.topology().unwrap();
        let lk = d.linking_matrix(&t).unwrap();
        for (a, row) in lk.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                assert_eq!(v, 0, "lk({a},{b})");
            }
        }
    }

    #[test]
    fn hopf_linking_number() {
        let d = hopf().closure();
        let t = d.topology().unwrap();
        assert_eq!(d.linking_matrix(&t).unwrap(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn untouched_strands_are_free_loops() {
        let d = Braid::new(3, vec![1]).unwrap().closure();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.components[1].arcs, vec![3]);
        d.topology().unwrap();
    }
}
