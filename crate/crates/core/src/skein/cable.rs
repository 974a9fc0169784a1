//! Blackboard cabling of a colored diagram with Jones-Wenzl boxes.

use std::collections::HashMap;
use std::sync::Arc;

use super::diagram::{FramedColoredDiagram, Topology};
use super::sweep::{sparse_of, Vertex};
use super::tl::TLElement;
use crate::cyclotome::RingContext;
use crate::error::Result;

#[derive(Default)]
struct Labels {
    id: HashMap<(u32, u32), u32>,
    parent: Vec<u32>,
}

impl Labels {
    fn fresh(&mut self) -> u32 {
        let k = self.parent.len() as u32;
        self.parent.push(k);
        k
    }
    fn cab(&mut self, arc: u32, s: u32) -> u32 {
        if let Some(&k) = self.id.get(&(arc, s)) {
            return k;
        }
        let k = self.fresh();
        self.id.insert((arc, s), k);
        k
    }
    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        self.parent[x as usize] = r;
        r
    }
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra as usize] = rb;
        }
    }
}

/// Result of cabling: the vertex network and the number of closed cable loops
/// that touch no vertex.
pub struct Cabled {
    pub vertices: Vec<Vertex>,
    pub free_loops: usize,
}

/// Cable every component that has crossings. `jw` supplies `f_c` for `c >= 2`.
pub fn cable(
    ctx: &Arc<RingContext>,
    d: &FramedColoredDiagram,
    topo: &Topology,
    colors: &[u32],
    jw: &mut dyn FnMut(usize) -> Result<TLElement>,
) -> Result<Cabled> {
    let mut crossings = d.crossings.clone();
    let mut boxes: Vec<(u32, u32, u32)> = Vec::new(); // (arc, split arc, color)
    let mut next_arc = d.max_label() + 1;
    for (ci, order) in topo.order.iter().enumerate() {
        let c = colors[ci];
        let first = order[0];
        if c < 2 || !topo.next.contains_key(&first) {
            continue;
        }
        let split = next_arc;
        next_arc += 1;
        // the crossing where `first` ends
        'find: for x in crossings.iter_mut() {
            if x.arcs[0] == first {
                x.arcs[0] = split;
                break 'find;
            }
            let slot = if x.sign > 0 { 3 } else { 1 };
            if x.arcs[slot] == first {
                x.arcs[slot] = split;
                break 'find;
            }
        }
        boxes.push((first, split, c));
    }
    let color_of = |arc: u32| -> u32 {
        let a = boxes
            .iter()
            .find(|b| b.1 == arc)
            .map(|b| b.0)
            .unwrap_or(arc);
        colors[topo.comp_of[&a]]
    };

    let mut lab = Labels::default();
    let mut raw: Vec<(Vec<u32>, usize)> = Vec::new(); // (ports, template) template 0 = crossing
    let mut templates: Vec<Vec<(super::sweep::Sparse, Vec<(u8, u8)>)>> =
        vec![Vertex::crossing(ctx, [0, 0, 0, 0]).terms];
    for x in &crossings {
        let [i, j, k, l] = x.arcs;
        let cu = color_of(i);
        let co = color_of(j);
        if cu == 0 && co == 0 {
            continue;
        }
        if cu == 0 {
            for s in 0..co {
                let (a, b) = (lab.cab(l, s), lab.cab(j, s));
                lab.union(a, b);
            }
            continue;
        }
        if co == 0 {
            for s in 0..cu {
                let (a, b) = (lab.cab(i, s), lab.cab(k, s));
                lab.union(a, b);
            }
            continue;
        }
        let strand_of_row = |y: u32| if x.sign > 0 { co - 1 - y } else { y };
        // vertical pieces V(x, y), y = 0..=co; horizontal pieces H(y, x), x = 0..=cu
        let mut v = vec![vec![0u32; co as usize + 1]; cu as usize];
        let mut h = vec![vec![0u32; cu as usize + 1]; co as usize];
        for xi in 0..cu {
            v[xi as usize][0] = lab.cab(i, xi);
            v[xi as usize][co as usize] = lab.cab(k, xi);
            for y in 1..co {
                v[xi as usize][y as usize] = lab.fresh();
            }
        }
        for y in 0..co {
            let s = strand_of_row(y);
            h[y as usize][0] = lab.cab(l, s);
            h[y as usize][cu as usize] = lab.cab(j, s);
            for xi in 1..cu {
                h[y as usize][xi as usize] = lab.fresh();
            }
        }
        for xi in 0..cu as usize {
            for y in 0..co as usize {
                raw.push((vec![v[xi][y], h[y][xi + 1], v[xi][y + 1], h[y][xi]], 0));
            }
        }
    }
    for &(first, split, c) in &boxes {
        let f = jw(c as usize)?;
        let mut terms = Vec::with_capacity(f.terms.len());
        for (mt, coef) in &f.terms {
            let pairs = mt
                .iter()
                .enumerate()
                .filter(|(q, &r)| (*q as u8) < r)
                .map(|(q, &r)| (q as u8, r))
                .collect();
            terms.push((sparse_of(coef)?, pairs));
        }
        templates.push(terms);
        let mut ports: Vec<u32> = (0..c).map(|s| lab.cab(first, s)).collect();
        ports.extend((0..c).map(|s| lab.cab(split, s)));
        raw.push((ports, templates.len() - 1));
    }
    let mut used = std::collections::HashSet::new();
    let mut vertices = Vec::with_capacity(raw.len());
    for (ports, t) in raw {
        let ports: Vec<u32> = ports.into_iter().map(|p| lab.find(p)).collect();
        used.extend(ports.iter().copied());
        vertices.push(Vertex {
            ports,
            terms: templates[t].clone(),
        });
    }
    let mut roots = std::collections::HashSet::new();
    let all: Vec<u32> = lab.id.values().copied().collect();
    for k in all {
        let r = lab.find(k);
        roots.insert(r);
    }
    let free_loops = roots.iter().filter(|r| !used.contains(r)).count();
    Ok(Cabled {
        vertices,
        free_loops,
    })
}
