use crate::cobweight::{bundle_beta1, TorusCobordism};
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::skein::{braid, linking_signature, Color, FramedColoredDiagram};
use crate::torusrep::Word;

#[derive(Clone, Debug, PartialEq)]
pub enum PresetKind {
    /// Surgery on the `Omega`-colored components; the diagram weight is the
    /// signature of the linking matrix.
    Surgery(FramedColoredDiagram),
    /// Mapping torus of a genus-one cylinder with meridian lines on both ends.
    TorusBundle { word: Word, cob: TorusCobordism },
}

/// How simple cyclic covers of a preset are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverFamily {
    None,
    /// Mapping torus of `phi` is covered by the mapping torus of `phi^d`.
    Bundle,
    /// `S^1 x S^2` covers itself with zero defect.
    Product,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ManifoldPreset {
    pub name: String,
    pub kind: PresetKind,
    pub beta1: u64,
    pub connected: bool,
    /// Known cut number; metadata only.
    pub cut_number: Option<u32>,
    pub cover: CoverFamily,
}

impl ManifoldPreset {
    /// Surgery preset with weight set to the linking signature. Checks that the
    /// component count, weight and first Betti number have consistent parity.
    pub fn surgery(name: &str, mut d: FramedColoredDiagram, cut: Option<u32>) -> Result<Self> {
        for c in d.components.iter_mut() {
            c.color = Color::Omega;
        }
        let topo = d.topology()?;
        let lk = d.linking_matrix(&topo)?;
        let n = d.components.len();
        let beta1 = (n - rank(&lk)) as u64;
        d.weight = linking_signature(&d)?;
        if (n as i64 - d.weight - beta1 as i64).rem_euclid(2) != 0 {
            return Err(Error::InvalidInput(format!(
                "{name}: component count {n} disagrees with weight {} and b1 {beta1} mod 2",
                d.weight
            )));
        }
        Ok(ManifoldPreset {
            name: name.to_string(),
            kind: PresetKind::Surgery(d),
            beta1,
            connected: true,
            cut_number: cut,
            cover: CoverFamily::None,
        })
    }

    pub fn bundle(word: &str) -> Result<Self> {
        let w = Word::parse(word)?;
        let cob = TorusCobordism::cylinder(w.matrix(), 0)?;
        let label = if w.is_empty() {
            "id".to_string()
        } else {
            w.to_string()
        };
        Ok(ManifoldPreset {
            name: format!("bundle({label})"),
            beta1: bundle_beta1(&cob.monodromy),
            kind: PresetKind::TorusBundle { word: w, cob },
            connected: true,
            cut_number: Some(1),
            cover: CoverFamily::Bundle,
        })
    }

    pub fn lens(n: i64) -> Result<Self> {
        let cut = if n == 0 { 1 } else { 0 };
        ManifoldPreset::surgery(
            &format!("L({n},1)"),
            braid::unknot(n, Color::Omega),
            Some(cut),
        )
    }

    /// Surgery diagram, if the preset has one.
    pub fn diagram(&self) -> Option<&FramedColoredDiagram> {
        match &self.kind {
            PresetKind::Surgery(d) => Some(d),
            PresetKind::TorusBundle { .. } => None,
        }
    }
}

fn knot_surgery(name: &str, knot: &braid::Braid, framing: i64) -> Result<ManifoldPreset> {
    let mut d = knot.closure();
    d.components[0].framing = framing;
    let cut = if framing == 0 { Some(1) } else { Some(0) };
    ManifoldPreset::surgery(&format!("{name}({framing:+})").replace("+0", "0"), d, cut)
}

/// Torus bundle with monodromy `T^a` presented by surgery on the Borromean rings
/// with framings `0, 0, a`.
pub fn borromean_bundle(a: i64) -> Result<ManifoldPreset> {
    let mut d = braid::borromean().closure();
    for (i, c) in d.components.iter_mut().enumerate() {
        c.framing = if i == 2 { a } else { 0 };
    }
    ManifoldPreset::surgery(&format!("borromean(0,0,{a})"), d, Some(1))
}

/// The default corpus of closed connected manifolds.
pub fn default_corpus() -> Vec<ManifoldPreset> {
    let mut out = vec![
        ManifoldPreset::surgery("S3", FramedColoredDiagram::default(), Some(0)).expect("S3"),
        s1xs2(),
    ];
    for n in 2..=8 {
        out.push(ManifoldPreset::lens(n).expect("lens space"));
    }
    for f in [1, -1, 0] {
        out.push(knot_surgery("trefoil", &braid::trefoil(), f).expect("trefoil"));
        out.push(knot_surgery("figure8", &braid::figure_eight(), f).expect("figure eight"));
    }
    let two = braid::unknot(0, Color::Omega).disjoint_union(&braid::unknot(0, Color::Omega));
    out.push(ManifoldPreset::surgery("S1xS2#S1xS2", two, Some(2)).expect("connected sum"));
    for w in ["", "T", "TS", "TTS", "TTTS", "SS"] {
        out.push(ManifoldPreset::bundle(w).expect("bundle"));
    }
    out
}

fn s1xs2() -> ManifoldPreset {
    let mut m =
        ManifoldPreset::surgery("S1xS2", braid::unknot(0, Color::Omega), Some(1)).expect("S1xS2");
    m.cover = CoverFamily::Product;
    m
}

/// Look up a preset by name. Besides the default corpus this accepts
/// `L(n,1)`, `bundle(WORD)` and `borromean(0,0,a)` for any parameters.
pub fn find_preset(name: &str) -> Result<ManifoldPreset> {
    if let Some(p) = default_corpus().into_iter().find(|p| p.name == name) {
        return Ok(p);
    }
    let inner = |prefix: &str, suffix: &str| {
        name.strip_prefix(prefix)
            .and_then(|r| r.strip_suffix(suffix))
            .map(str::to_string)
    };
    if let Some(n) = inner("L(", ",1)") {
        let n: i64 = n
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad lens parameter in {name}")))?;
        return ManifoldPreset::lens(n);
    }
    if let Some(w) = inner("bundle(", ")") {
        return ManifoldPreset::bundle(if w == "id" { "" } else { &w });
    }
    if let Some(a) = inner("borromean(0,0,", ")") {
        let a: i64 = a
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad framing in {name}")))?;
        return borromean_bundle(a);
    }
    Err(Error::InvalidInput(format!("unknown preset {name:?}")))
}
