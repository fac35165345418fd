//! Bundle decomposition data and the quiver it induces.
//!
//! A polystable bundle with a pairing splits into pairwise non-isomorphic
//! stable summands, each either self-dual (carrying a symmetric or
//! antisymmetric form), a dual pair `F + F^*`, or a plain stable factor with
//! no self-duality. The local model at such a point is a quiver
//! representation space: one vertex per summand (two for a dual pair),
//! arrow counts given by first cohomology of the relevant Hom sheaves.
//!
//! Cohomology dimensions follow from Riemann-Roch for degree-zero sheaves on
//! a genus-g curve: h1 = h0 + (sheaf rank)(g - 1). The h0 inputs default to
//! the generic values for a stable summand (the form itself for self-dual
//! kinds, nothing otherwise) and can be overridden for special bundles.

use crate::groups::GroupSpec;
use crate::quiver::{ArrowId, DimensionVector, Quiver, Vertex, VertexKind};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SummandKind {
    Orthogonal,
    Symplectic,
    DualPair,
    Plain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub kind: SummandKind,
    pub rank: u32,
    pub multiplicity: usize,
    /// dim H0 of the symmetric square of the dual summand
    pub h0_sym: u32,
    /// dim H0 of the alternating square of the dual summand
    pub h0_alt: u32,
}

#[derive(Deserialize)]
struct RawSummand {
    kind: SummandKind,
    rank: u32,
    multiplicity: usize,
    h0_sym: Option<u32>,
    h0_alt: Option<u32>,
}

impl<'de> Deserialize<'de> for Summand {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSummand::deserialize(d)?;
        let (ds, da) = default_h0(raw.kind);
        Ok(Summand {
            kind: raw.kind,
            rank: raw.rank,
            multiplicity: raw.multiplicity,
            h0_sym: raw.h0_sym.unwrap_or(ds),
            h0_alt: raw.h0_alt.unwrap_or(da),
        })
    }
}

/// Generic h0 of (S^2 F^*, Lambda^2 F^*) for a stable summand: a symmetric
/// form contributes to the first slot, an antisymmetric one to the second.
fn default_h0(kind: SummandKind) -> (u32, u32) {
    match kind {
        SummandKind::Orthogonal => (1, 0),
        SummandKind::Symplectic => (0, 1),
        SummandKind::DualPair | SummandKind::Plain => (0, 0),
    }
}

impl Summand {
    fn with_defaults(kind: SummandKind, rank: u32, multiplicity: usize) -> Summand {
        let (h0_sym, h0_alt) = default_h0(kind);
        Summand { kind, rank, multiplicity, h0_sym, h0_alt }
    }

    pub fn orthogonal(rank: u32, multiplicity: usize) -> Summand {
        Summand::with_defaults(SummandKind::Orthogonal, rank, multiplicity)
    }

    pub fn symplectic(rank: u32, multiplicity: usize) -> Summand {
        Summand::with_defaults(SummandKind::Symplectic, rank, multiplicity)
    }

    pub fn dual_pair(rank: u32, multiplicity: usize) -> Summand {
        Summand::with_defaults(SummandKind::DualPair, rank, multiplicity)
    }

    pub fn plain(rank: u32, multiplicity: usize) -> Summand {
        Summand::with_defaults(SummandKind::Plain, rank, multiplicity)
    }

    /// h1 of the symmetric square of the dual, rank r(r+1)/2 and degree 0.
    pub fn h1_sym(&self, genus: u32) -> usize {
        let r = self.rank as usize;
        self.h0_sym as usize + r * (r + 1) / 2 * (genus as usize - 1)
    }

    /// h1 of the alternating square of the dual, rank r(r-1)/2 and degree 0.
    pub fn h1_alt(&self, genus: u32) -> usize {
        let r = self.rank as usize;
        self.h0_alt as usize + r * (r - 1) / 2 * (genus as usize - 1)
    }

    /// Rank contributed to the ambient bundle (a dual pair counts twice).
    pub fn total_rank(&self) -> usize {
        let per = self.rank as usize * self.multiplicity;
        match self.kind {
            SummandKind::DualPair => 2 * per,
            _ => per,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionData {
    pub genus: u32,
    pub summands: Vec<Summand>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub orientation_label: Option<i8>,
}

impl DecompositionData {
    pub fn new(genus: u32, summands: Vec<Summand>) -> DecompositionData {
        DecompositionData { genus, summands, orientation_label: None }
    }

    pub fn validate(&self) -> Result<()> {
        if self.genus < 1 {
            return Err(Error::InvalidDecomposition("genus must be at least 1".into()));
        }
        if self.summands.is_empty() {
            return Err(Error::InvalidDecomposition("no summands".into()));
        }
        for (i, s) in self.summands.iter().enumerate() {
            if s.rank == 0 {
                return Err(Error::InvalidDecomposition(format!("summand {i} has rank 0")));
            }
            if s.multiplicity == 0 {
                return Err(Error::InvalidDecomposition(format!("summand {i} has multiplicity 0")));
            }
            if s.kind == SummandKind::Symplectic && s.rank % 2 != 0 {
                return Err(Error::InvalidDecomposition(format!(
                    "summand {i} carries an antisymmetric form but has odd rank {}",
                    s.rank
                )));
            }
        }
        if let Some(l) = self.orientation_label {
            if l != 1 && l != -1 {
                return Err(Error::InvalidDecomposition(format!("orientation label {l} not in {{-1, 1}}")));
            }
        }
        Ok(())
    }

    pub fn total_rank(&self) -> usize {
        self.summands.iter().map(Summand::total_rank).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("decomposition serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<DecompositionData> {
        let d: DecompositionData = serde_json::from_value(v.clone())
            .map_err(|e| Error::InvalidDecomposition(e.to_string()))?;
        d.validate()?;
        Ok(d)
    }
}

#[derive(Clone, Debug)]
pub struct LayoutVertex {
    pub name: String,
    pub summand: usize,
    pub kind: VertexKind,
    pub rank: u32,
    pub multiplicity: usize,
}

/// All arrows from `src` to `dst`, in id order. A sector is self-paired when
/// the duality involution maps it to itself; its first `neg_count` arrows are
/// the ones whose adjoint constraint carries a minus sign in the
/// antisymmetric extension model.
#[derive(Clone, Debug)]
pub struct Sector {
    pub src: usize,
    pub dst: usize,
    pub arrows: Vec<ArrowId>,
    pub self_paired: bool,
    pub neg_count: usize,
}

#[derive(Clone, Debug)]
pub struct LocalLayout {
    pub genus: u32,
    pub vertices: Vec<LayoutVertex>,
    pub quiver: Quiver,
    pub alpha: DimensionVector,
    pub group: GroupSpec,
    pub sectors: Vec<Sector>,
}

impl LocalLayout {
    pub fn sector(&self, src: usize, dst: usize) -> Option<&Sector> {
        self.sectors.iter().find(|s| s.src == src && s.dst == dst)
    }
}

/// Vertex-level arrow count and minus-sign split for an ordered vertex pair.
fn sector_shape(
    genus: u32,
    verts: &[LayoutVertex],
    summands: &[Summand],
    v: usize,
    w: usize,
) -> (usize, usize) {
    let g1 = genus as usize - 1;
    let (sv, sw) = (&verts[v], &verts[w]);
    if sv.summand == sw.summand {
        let s = &summands[sv.summand];
        if v == w {
            match s.kind {
                // h1 of F tensor F^* split into symmetric and alternating parts
                SummandKind::Orthogonal => (s.h1_sym(genus) + s.h1_alt(genus), s.h1_sym(genus)),
                SummandKind::Symplectic => (s.h1_sym(genus) + s.h1_alt(genus), s.h1_alt(genus)),
                // h1(F tensor F^*) = r^2 (g-1) + 1 for stable F
                SummandKind::DualPair | SummandKind::Plain => {
                    let r = s.rank as usize;
                    (r * r * g1 + 1, 0)
                }
            }
        } else {
            // the two halves of a dual pair: h1 of the symmetric and
            // alternating squares, minus signs on the symmetric-square part
            (s.h1_sym(genus) + s.h1_alt(genus), s.h1_sym(genus))
        }
    } else {
        (sv.rank as usize * sw.rank as usize * g1, 0)
    }
}

/// Build the local quiver, dimension vector, symmetry group and sector table
/// for a decomposition. Positive-genus moduli of the kind modeled here need
/// genus at least 2; genus-1 data belongs to the elliptic module.
pub fn from_decomposition(d: &DecompositionData) -> Result<LocalLayout> {
    d.validate()?;
    if d.genus < 2 {
        return Err(Error::GenusTooSmall(d.genus as i64));
    }

    let mut verts: Vec<LayoutVertex> = Vec::new();
    for (i, s) in d.summands.iter().enumerate() {
        match s.kind {
            SummandKind::Orthogonal => verts.push(LayoutVertex {
                name: format!("s{i}"),
                summand: i,
                kind: VertexKind::Orthogonal,
                rank: s.rank,
                multiplicity: s.multiplicity,
            }),
            SummandKind::Symplectic => verts.push(LayoutVertex {
                name: format!("t{i}"),
                summand: i,
                kind: VertexKind::Symplectic,
                rank: s.rank,
                multiplicity: s.multiplicity,
            }),
            SummandKind::DualPair => {
                verts.push(LayoutVertex {
                    name: format!("u{i}"),
                    summand: i,
                    kind: VertexKind::DualPairLeft,
                    rank: s.rank,
                    multiplicity: s.multiplicity,
                });
                verts.push(LayoutVertex {
                    name: format!("u{i}*"),
                    summand: i,
                    kind: VertexKind::DualPairRight,
                    rank: s.rank,
                    multiplicity: s.multiplicity,
                });
            }
            SummandKind::Plain => verts.push(LayoutVertex {
                name: format!("e{i}"),
                summand: i,
                kind: VertexKind::Plain,
                rank: s.rank,
                multiplicity: s.multiplicity,
            }),
        }
    }

    let vertex_list: Vec<Vertex> =
        verts.iter().map(|v| Vertex { id: v.name.clone(), kind: v.kind }).collect();

    let n = verts.len();
    let mut arrows: Vec<(u32, String, String)> = Vec::new();
    let mut sectors: Vec<Sector> = Vec::new();
    let mut next_id: u32 = 0;
    for v in 0..n {
        for w in 0..n {
            let (count, neg_count) = sector_shape(d.genus, &verts, &d.summands, v, w);
            if count == 0 {
                continue;
            }
            let mut ids = Vec::with_capacity(count);
            for _ in 0..count {
                arrows.push((next_id, verts[v].name.clone(), verts[w].name.clone()));
                ids.push(ArrowId(next_id));
                next_id += 1;
            }
            // the involution sends the (v, w) sector to (sigma(w), sigma(v))
            let sigma = |x: usize| -> usize {
                match verts[x].kind {
                    VertexKind::DualPairLeft => x + 1,
                    VertexKind::DualPairRight => x - 1,
                    _ => x,
                }
            };
            let self_paired = sigma(w) == v
                && sigma(v) == w
                && verts[v].kind != VertexKind::Plain
                && verts[w].kind != VertexKind::Plain;
            sectors.push(Sector { src: v, dst: w, arrows: ids, self_paired, neg_count });
        }
    }

    let quiver = Quiver::build(vertex_list, arrows)?;
    let alpha = DimensionVector(verts.iter().map(|v| v.multiplicity).collect());
    let group = GroupSpec::for_quiver(&quiver, &alpha)?;
    Ok(LocalLayout { genus: d.genus, vertices: verts, quiver, alpha, group, sectors })
}
