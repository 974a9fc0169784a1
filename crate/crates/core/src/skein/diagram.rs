use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A crossing `X[i, j, k, l]`: arc labels counterclockwise starting at the incoming
/// under-arc, so the under strand runs `i -> k`. For `sign = +1` the over strand runs
/// `l -> j`; for `sign = -1` it runs `j -> l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub arcs: [u32; 4],
    pub sign: i8,
}

impl Crossing {
    pub fn new(arcs: [u32; 4], sign: i8) -> Crossing {
        Crossing { arcs, sign }
    }

    /// (incoming, outgoing) arcs of the over strand.
    pub fn over_flow(&self) -> (u32, u32) {
        let [_, j, _, l] = self.arcs;
        if self.sign > 0 {
            (l, j)
        } else {
            (j, l)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Explicit(u32),
    Omega,
}

impl Serialize for Color {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Color::Explicit(c) => s.serialize_u32(*c),
            Color::Omega => s.serialize_str("omega"),
        }
    }
}

impl<'de> Deserialize<'de> for Color {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Color, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(u32),
            Name(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(c) => Ok(Color::Explicit(c)),
            Repr::Name(s) if s.eq_ignore_ascii_case("omega") => Ok(Color::Omega),
            Repr::Name(s) => Err(serde::de::Error::custom(format!("unknown color {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    pub arcs: Vec<u32>,
    pub framing: i64,
    pub color: Color,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FramedColoredDiagram {
    pub crossings: Vec<Crossing>,
    pub components: Vec<Component>,
    #[serde(default)]
    pub weight: i64,
}

/// Derived incidence data of a valid diagram.
#[derive(Clone, Debug)]
pub struct Topology {
    /// Component index of every arc label.
    pub comp_of: BTreeMap<u32, usize>,
    /// Arc label following each arc along its orientation.
    pub next: BTreeMap<u32, u32>,
    /// Per crossing: (under component, over component).
    pub strands: Vec<(usize, usize)>,
    /// Arcs of each component in traversal order.
    pub order: Vec<Vec<u32>>,
}

impl FramedColoredDiagram {
    pub fn from_json_str(s: &str) -> Result<FramedColoredDiagram> {
        let d: FramedColoredDiagram = serde_json::from_str(s)?;
        d.topology()?;
        Ok(d)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("diagram serializes")
    }

    /// Validate the code and derive component structure.
    pub fn topology(&self) -> Result<Topology> {
        let bad = |m: String| Error::MalformedDiagram(m);
        let mut head: BTreeMap<u32, usize> = BTreeMap::new();
        let mut tail: BTreeMap<u32, usize> = BTreeMap::new();
        let mut next = BTreeMap::new();
        for (ci, x) in self.crossings.iter().enumerate() {
            if x.sign != 1 && x.sign != -1 {
                return Err(bad(format!("crossing {ci} has sign {}", x.sign)));
            }
            let [i, _, k, _] = x.arcs;
            let (oi, oo) = x.over_flow();
            for (arc, is_head) in [(i, true), (oi, true), (k, false), (oo, false)] {
                let map = if is_head { &mut head } else { &mut tail };
                if map.insert(arc, ci).is_some() {
                    return Err(bad(format!("arc {arc} has two heads or two tails")));
                }
            }
            next.insert(i, k);
            next.insert(oi, oo);
        }
        let keys: BTreeSet<u32> = head.keys().copied().collect();
        let tkeys: BTreeSet<u32> = tail.keys().copied().collect();
        if keys != tkeys {
            return Err(bad(
                "orientation is inconsistent: some arc lacks a head or a tail".into(),
            ));
        }
        let mut comp_of = BTreeMap::new();
        for (idx, c) in self.components.iter().enumerate() {
            if c.arcs.is_empty() {
                return Err(bad(format!("component {idx} has no arcs")));
            }
            for &a in &c.arcs {
                if comp_of.insert(a, idx).is_some() {
                    return Err(bad(format!("arc {a} listed in two components")));
                }
            }
        }
        for a in &keys {
            if !comp_of.contains_key(a) {
                return Err(bad(format!("arc {a} belongs to no component")));
            }
        }
        let mut order = Vec::with_capacity(self.components.len());
        for (idx, c) in self.components.iter().enumerate() {
            let start = c.arcs[0];
            if !keys.contains(&start) {
                if c.arcs.len() != 1 {
                    return Err(bad(format!(
                        "crossingless component {idx} must consist of a single arc"
                    )));
                }
                order.push(vec![start]);
                continue;
            }
            let mut cycle = vec![start];
            let mut a = next[&start];
            while a != start {
                if cycle.len() > keys.len() {
                    return Err(bad("arc cycle does not close".into()));
                }
                cycle.push(a);
                a = next[&a];
            }
            let declared: BTreeSet<u32> = c.arcs.iter().copied().collect();
            let traced: BTreeSet<u32> = cycle.iter().copied().collect();
            if declared != traced || declared.len() != c.arcs.len() {
                return Err(bad(format!(
                    "component {idx} arcs {:?} do not form the closed cycle {:?}",
                    c.arcs, cycle
                )));
            }
            order.push(cycle);
        }
        let strands = self
            .crossings
            .iter()
            .map(|x| (comp_of[&x.arcs[0]], comp_of[&x.arcs[1]]))
            .collect();
        Ok(Topology {
            comp_of,
            next,
            strands,
            order,
        })
    }

    /// Blackboard framing (self-crossing sign sum) of each component.
    pub fn writhes(&self, topo: &Topology) -> Vec<i64> {
        let mut w = vec![0; self.components.len()];
        for (x, &(u, o)) in self.crossings.iter().zip(&topo.strands) {
            if u == o {
                w[u] += x.sign as i64;
            }
        }
        w
    }

    /// Symmetric matrix of linking numbers with the declared framings on the diagonal.
    pub fn linking_matrix(&self, topo: &Topology) -> Result<Vec<Vec<i64>>> {
        let m = self.components.len();
        let mut twice = vec![vec![0i64; m]; m];
        for (x, &(u, o)) in self.crossings.iter().zip(&topo.strands) {
            if u != o {
                twice[u][o] += x.sign as i64;
                twice[o][u] += x.sign as i64;
            }
        }
        let mut lk = vec![vec![0i64; m]; m];
        for a in 0..m {
            for b in 0..m {
                if a == b {
                    lk[a][b] = self.components[a].framing;
                } else if twice[a][b] % 2 != 0 {
                    return Err(Error::MalformedDiagram(format!(
                        "components {a} and {b} have half-integral linking number"
                    )));
                } else {
                    lk[a][b] = twice[a][b] / 2;
                }
            }
        }
        Ok(lk)
    }

    /// Largest arc label in use.
    pub fn max_label(&self) -> u32 {
        let a = self
            .crossings
            .iter()
            .flat_map(|x| x.arcs)
            .max()
            .unwrap_or(0);
        let b = self
            .components
            .iter()
            .flat_map(|c| c.arcs.iter().copied())
            .max()
            .unwrap_or(0);
        a.max(b)
    }

    /// Disjoint union, relabelling `other` past the labels of `self`.
    pub fn disjoint_union(&self, other: &FramedColoredDiagram) -> FramedColoredDiagram {
        let off = self.max_label() + 1;
        let mut out = self.clone();
        out.crossings
            .extend(other.crossings.iter().map(|x| Crossing {
                arcs: x.arcs.map(|a| a + off),
                sign: x.sign,
            }));
        out.components
            .extend(other.components.iter().map(|c| Component {
                arcs: c.arcs.iter().map(|a| a + off).collect(),
                framing: c.framing,
                color: c.color,
            }));
        out.weight += other.weight;
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curl() -> FramedColoredDiagram {
        FramedColoredDiagram {
            crossings: vec![Crossing::new([1, 1, 2, 2], 1)],
            components: vec![Component {
                arcs: vec![1, 2],
                framing: 1,
                color: Color::Explicit(1),
            }],
            weight: 0,
        }
    }

    #[test]
    fn curl_is_valid_with_writhe_one() {
        let d = curl();
        let t = d.topology().unwrap();
        assert_eq!(d.writhes(&t), vec![1]);
        let mut bad = d.clone();
        bad.crossings[0].sign = -1;
        assert!(bad.topology().is_err());
    }

    #[test]
    fn json_round_trip_and_colors() {
        let text = r#"{"crossings":[{"arcs":[1,1,2,2],"sign":1}],
            "components":[{"arcs":[1,2],"framing":1,"color":"omega"},
                          {"arcs":[7],"framing":0,"color":3}],"weight":2}"#;
        let d = FramedColoredDiagram::from_json_str(text).unwrap();
        assert_eq!(d.components[0].color, Color::Omega);
        assert_eq!(d.components[1].color, Color::Explicit(3));
        let back = FramedColoredDiagram::from_json_str(&d.to_json_string()).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn malformed_codes_are_rejected() {
        let mut d = curl();
        d.components[0].arcs = vec![1];
        assert!(d.topology().is_err());
        let e = FramedColoredDiagram::from_json_str(
            r#"{"crossings":[{"arcs":[1,2,3,4],"sign":1}],"components":[]}"#,
        );
        assert!(e.is_err());
    }
}
