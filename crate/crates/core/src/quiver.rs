//! Quivers, dimension vectors, the doubling construction and cycle
//! enumeration.
//!
//! Vertices carry a kind describing the self-duality of the summand they
//! stand for. The duality involution fixes orthogonal and symplectic
//! vertices and swaps the two halves of a dual pair; doubling a quiver adds,
//! for every arrow `a: v -> w`, a star arrow `a*: sigma(w) -> sigma(v)`.
//! Plain vertices (full GL symmetry, no form) get a fresh starred partner
//! vertex during doubling so that star arrows carry the transposed blocks of
//! a GL action rather than fake form-adjoints.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    Plain,
    Orthogonal,
    Symplectic,
    DualPairLeft,
    DualPairRight,
}

impl VertexKind {
    pub fn is_dual_pair(self) -> bool {
        matches!(self, VertexKind::DualPairLeft | VertexKind::DualPairRight)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub kind: VertexKind,
}

/// Arrow ids are stable integers; cycle words are sequences of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: ArrowId,
    /// Vertex indices into the owning quiver.
    pub src: usize,
    pub dst: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Quiver {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    /// Dual-pair partner per vertex, when there is one.
    partner: Vec<Option<usize>>,
}

impl Quiver {
    /// Build and validate. Arrows are (id, source vertex id, target vertex id).
    /// Dual-pair partners are matched in order of appearance: the k-th left
    /// vertex pairs with the k-th right vertex.
    pub fn build(vertices: Vec<Vertex>, arrows: Vec<(u32, String, String)>) -> Result<Quiver> {
        let mut index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate vertex id `{}`", v.id)));
            }
        }

        let lefts: Vec<usize> = (0..vertices.len())
            .filter(|&i| vertices[i].kind == VertexKind::DualPairLeft)
            .collect();
        let rights: Vec<usize> = (0..vertices.len())
            .filter(|&i| vertices[i].kind == VertexKind::DualPairRight)
            .collect();
        if lefts.len() != rights.len() {
            let odd = if lefts.len() > rights.len() { lefts.last() } else { rights.last() };
            let id = odd.map(|&i| vertices[i].id.clone()).unwrap_or_default();
            return Err(Error::UnpairedDualVertex(id));
        }
        let mut partner = vec![None; vertices.len()];
        for (&l, &r) in lefts.iter().zip(rights.iter()) {
            partner[l] = Some(r);
            partner[r] = Some(l);
        }

        let mut seen = BTreeSet::new();
        let mut built = Vec::with_capacity(arrows.len());
        for (id, src, dst) in arrows {
            if !seen.insert(id) {
                return Err(Error::DuplicateArrowId(id));
            }
            let s = *index.get(&src).ok_or_else(|| Error::UnknownVertex(src.clone()))?;
            let d = *index.get(&dst).ok_or_else(|| Error::UnknownVertex(dst.clone()))?;
            built.push(Arrow { id: ArrowId(id), src: s, dst: d });
        }
        built.sort_by_key(|a| a.id);

        Ok(Quiver { vertices, arrows: built, partner })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn partner(&self, vertex: usize) -> Option<usize> {
        self.partner[vertex]
    }

    pub fn arrow(&self, id: ArrowId) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.id == id)
    }

    /// Duality involution on base vertices: identity on plain, orthogonal and
    /// symplectic vertices, the partner swap on dual pairs. (Doubling extends
    /// this over starred copies of plain vertices.)
    pub fn base_sigma(&self, vertex: usize) -> usize {
        self.partner[vertex].unwrap_or(vertex)
    }

    /// Cycles of the quiver itself, canonical and deterministic.
    pub fn cycles(&self, max_len: usize) -> Vec<Cycle> {
        enumerate_cycles(self.vertices.len(), &self.arrows, max_len)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<_> = self
            .vertices
            .iter()
            .map(|v| serde_json::json!({ "id": v.id, "kind": kind_str(v.kind) }))
            .collect();
        let arrows: Vec<_> = self
            .arrows
            .iter()
            .map(|a| {
                serde_json::json!({
                    "id": a.id.0,
                    "src": self.vertices[a.src].id,
                    "dst": self.vertices[a.dst].id,
                })
            })
            .collect();
        serde_json::json!({ "vertices": vertices, "arrows": arrows })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Quiver> {
        #[derive(Deserialize)]
        struct V {
            id: String,
            kind: VertexKind,
        }
        #[derive(Deserialize)]
        struct A {
            id: u32,
            src: String,
            dst: String,
        }
        #[derive(Deserialize)]
        struct Q {
            vertices: Vec<V>,
            arrows: Vec<A>,
        }
        let q: Q = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidInput(format!("quiver json: {e}")))?;
        Quiver::build(
            q.vertices.into_iter().map(|v| Vertex { id: v.id, kind: v.kind }).collect(),
            q.arrows.into_iter().map(|a| (a.id, a.src, a.dst)).collect(),
        )
    }
}

fn kind_str(k: VertexKind) -> &'static str {
    match k {
        VertexKind::Plain => "plain",
        VertexKind::Orthogonal => "orthogonal",
        VertexKind::Symplectic => "symplectic",
        VertexKind::DualPairLeft => "dual_pair_left",
        VertexKind::DualPairRight => "dual_pair_right",
    }
}

/// Entries indexed by vertex, in quiver vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionVector(pub Vec<usize>);

impl DimensionVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Admissible: symplectic entries even, dual-pair partners equal.
    pub fn check_admissible(&self, quiver: &Quiver) -> Result<()> {
        if self.0.len() != quiver.vertices().len() {
            return Err(Error::InvalidDimensionVector(format!(
                "length {} vs {} vertices",
                self.0.len(),
                quiver.vertices().len()
            )));
        }
        for (i, v) in quiver.vertices().iter().enumerate() {
            if v.kind == VertexKind::Symplectic && self.0[i] % 2 != 0 {
                return Err(Error::InvalidDimensionVector(format!(
                    "symplectic vertex `{}` has odd entry {}",
                    v.id, self.0[i]
                )));
            }
            if let Some(p) = quiver.partner(i) {
                if self.0[i] != self.0[p] {
                    return Err(Error::InvalidDimensionVector(format!(
                        "dual pair `{}`/`{}` has entries {} != {}",
                        v.id,
                        quiver.vertices()[p].id,
                        self.0[i],
                        self.0[p]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Oriented cycle up to rotation; the stored word is the lexicographically
/// minimal rotation, so equality of necklaces is plain equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    word: Vec<ArrowId>,
}

impl Cycle {
    /// Canonicalize a closed composable word. Validity is the caller's charge.
    pub fn from_word(word: Vec<ArrowId>) -> Cycle {
        Cycle { word: min_rotation(&word) }
    }

    pub fn word(&self) -> &[ArrowId] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

fn min_rotation(word: &[ArrowId]) -> Vec<ArrowId> {
    let n = word.len();
    if n <= 1 {
        return word.to_vec();
    }
    let mut best = 0usize;
    for start in 1..n {
        for k in 0..n {
            let a = word[(start + k) % n];
            let b = word[(best + k) % n];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    best = start;
                    break;
                }
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    (0..n).map(|k| word[(best + k) % n]).collect()
}

/// All oriented cycles of length 1..=max_len up to rotation, for an arbitrary
/// arrow multiset. Deterministic: ordered by (length, word). Only words that
/// already are their own minimal rotation are emitted, so no dedup set is
/// needed.
pub fn enumerate_cycles(num_vertices: usize, arrows: &[Arrow], max_len: usize) -> Vec<Cycle> {
    let mut out_by: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, a) in arrows.iter().enumerate() {
        out_by.entry(a.src).or_default().push(i);
    }
    let _ = num_vertices;
    let mut result = Vec::new();
    let mut stack: Vec<usize> = Vec::new();

    fn dfs(
        arrows: &[Arrow],
        out_by: &BTreeMap<usize, Vec<usize>>,
        stack: &mut Vec<usize>,
        len: usize,
        result: &mut Vec<Cycle>,
    ) {
        if stack.len() == len {
            let first = arrows[stack[0]];
            let last = arrows[*stack.last().unwrap()];
            if last.dst == first.src {
                let word: Vec<ArrowId> = stack.iter().map(|&i| arrows[i].id).collect();
                if word == min_rotation(&word) {
                    result.push(Cycle { word });
                }
            }
            return;
        }
        let at = if stack.is_empty() { None } else { Some(arrows[*stack.last().unwrap()].dst) };
        match at {
            None => {
                for (_, outs) in out_by.iter() {
                    for &i in outs {
                        stack.push(i);
                        dfs(arrows, out_by, stack, len, result);
                        stack.pop();
                    }
                }
            }
            Some(v) => {
                if let Some(outs) = out_by.get(&v) {
                    for &i in outs {
                        stack.push(i);
                        dfs(arrows, out_by, stack, len, result);
                        stack.pop();
                    }
                }
            }
        }
    }

    for len in 1..=max_len {
        let mut batch = Vec::new();
        dfs(arrows, &out_by, &mut stack, len, &mut batch);
        batch.sort();
        result.extend(batch);
    }
    result
}

/// Star arrow bookkeeping inside a doubled quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubledArrow {
    pub id: ArrowId,
    pub src: usize,
    pub dst: usize,
    /// Base arrow this one descends from.
    pub base: ArrowId,
    pub is_star: bool,
}

/// The doubled quiver: base vertices plus starred copies of plain vertices,
/// base arrows plus one star arrow per base arrow. `sigma` is the duality
/// involution on the full vertex set; the arrow pairing swaps `a` and `a*`
/// (never fixing an arrow) with signs +1 on base arrows and -1 on stars.
#[derive(Clone, Debug)]
pub struct DoubledQuiver {
    base: Quiver,
    vertices: Vec<Vertex>,
    kinds: Vec<VertexKind>,
    sigma: Vec<usize>,
    arrows: Vec<DoubledArrow>,
    star_offset: u32,
}

impl DoubledQuiver {
    pub fn base(&self) -> &Quiver {
        &self.base
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Vertex kinds in the doubled quiver; plain vertices and their starred
    /// copies show up as a dual pair here.
    pub fn kind(&self, vertex: usize) -> VertexKind {
        self.kinds[vertex]
    }

    pub fn sigma(&self, vertex: usize) -> usize {
        self.sigma[vertex]
    }

    pub fn arrows(&self) -> &[DoubledArrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: ArrowId) -> Option<&DoubledArrow> {
        self.arrows.iter().find(|a| a.id == id)
    }

    /// The pairing involution a <-> a*.
    pub fn paired(&self, id: ArrowId) -> ArrowId {
        if id.0 >= self.star_offset {
            ArrowId(id.0 - self.star_offset)
        } else {
            ArrowId(id.0 + self.star_offset)
        }
    }

    pub fn sign(&self, id: ArrowId) -> i8 {
        if id.0 >= self.star_offset {
            -1
        } else {
            1
        }
    }

    pub fn is_star(&self, id: ArrowId) -> bool {
        id.0 >= self.star_offset
    }

    /// Dimension vector on the doubled quiver: starred plain copies inherit
    /// the entry of their base vertex.
    pub fn extend_alpha(&self, alpha: &DimensionVector) -> DimensionVector {
        let base_n = self.base.vertices().len();
        let mut out = alpha.0.clone();
        for v in base_n..self.vertices.len() {
            out.push(alpha.0[self.sigma[v]]);
        }
        DimensionVector(out)
    }

    pub fn cycles(&self, max_len: usize) -> Vec<Cycle> {
        let arrows: Vec<Arrow> =
            self.arrows.iter().map(|a| Arrow { id: a.id, src: a.src, dst: a.dst }).collect();
        enumerate_cycles(self.vertices.len(), &arrows, max_len)
    }

    /// Cycles using base arrows only, i.e. cycles of the base quiver.
    pub fn base_cycles(&self, max_len: usize) -> Vec<Cycle> {
        self.base.cycles(max_len)
    }
}

/// Double a quiver. Star ids live at `base_max_id + 1 + base_id`, so base
/// arrows keep their ids. Sigma is the identity when the base has neither
/// dual-pair nor plain vertices.
pub fn double(base: &Quiver) -> DoubledQuiver {
    let mut vertices = base.vertices().to_vec();
    let mut kinds: Vec<VertexKind> = base.vertices().iter().map(|v| v.kind).collect();
    let n = vertices.len();
    let mut sigma: Vec<usize> = (0..n).map(|i| base.base_sigma(i)).collect();

    // starred partners for plain vertices
    for i in 0..n {
        if base.vertices()[i].kind == VertexKind::Plain {
            let star = vertices.len();
            vertices.push(Vertex {
                id: format!("{}*", base.vertices()[i].id),
                kind: VertexKind::DualPairRight,
            });
            kinds[i] = VertexKind::DualPairLeft;
            kinds.push(VertexKind::DualPairRight);
            sigma[i] = star;
            sigma.push(i);
        }
    }

    let star_offset = base.arrows().iter().map(|a| a.id.0).max().map_or(0, |m| m + 1);
    let mut arrows: Vec<DoubledArrow> = base
        .arrows()
        .iter()
        .map(|a| DoubledArrow { id: a.id, src: a.src, dst: a.dst, base: a.id, is_star: false })
        .collect();
    for a in base.arrows() {
        arrows.push(DoubledArrow {
            id: ArrowId(star_offset + a.id.0),
            src: sigma[a.dst],
            dst: sigma[a.src],
            base: a.id,
            is_star: true,
        });
    }

    DoubledQuiver { base: base.clone(), vertices, kinds, sigma, arrows, star_offset }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn loop_quiver(kind: VertexKind, loops: u32) -> Quiver {
        let v = vec![Vertex { id: "v0".into(), kind }];
        let arrows = (0..loops).map(|i| (i, "v0".to_string(), "v0".to_string())).collect();
        Quiver::build(v, arrows).unwrap()
    }

    #[test]
    fn build_validates() {
        let v = vec![Vertex { id: "s1".into(), kind: VertexKind::Plain }];
        let q = Quiver::build(v.clone(), vec![]).unwrap();
        assert_eq!(q.arrows().len(), 0);

        let err = Quiver::build(
            v.clone(),
            vec![(0, "s1".into(), "s1".into()), (0, "s1".into(), "s1".into())],
        )
        .unwrap_err();
        assert!(matches!(err, Error::DuplicateArrowId(0)));

        let err = Quiver::build(v.clone(), vec![(0, "s1".into(), "nope".into())]).unwrap_err();
        assert!(matches!(err, Error::UnknownVertex(_)));

        let err = Quiver::build(
            vec![Vertex { id: "u".into(), kind: VertexKind::DualPairLeft }],
            vec![],
        )
        .unwrap_err();
        assert!(matches!(err, Error::UnpairedDualVertex(_)));
    }

    #[test]
    fn admissibility() {
        let q = Quiver::build(
            vec![
                Vertex { id: "t".into(), kind: VertexKind::Symplectic },
                Vertex { id: "u".into(), kind: VertexKind::DualPairLeft },
                Vertex { id: "u*".into(), kind: VertexKind::DualPairRight },
            ],
            vec![],
        )
        .unwrap();
        assert!(DimensionVector(vec![2, 3, 3]).check_admissible(&q).is_ok());
        assert!(DimensionVector(vec![1, 3, 3]).check_admissible(&q).is_err());
        assert!(DimensionVector(vec![2, 3, 4]).check_admissible(&q).is_err());
        assert!(DimensionVector(vec![2, 3]).check_admissible(&q).is_err());
    }

    #[test]
    fn min_rotation_canonicalizes() {
        let w = vec![ArrowId(2), ArrowId(0), ArrowId(1)];
        assert_eq!(
            min_rotation(&w),
            vec![ArrowId(0), ArrowId(1), ArrowId(2)]
        );
        let w = vec![ArrowId(1), ArrowId(0), ArrowId(1), ArrowId(0)];
        assert_eq!(
            min_rotation(&w),
            vec![ArrowId(0), ArrowId(1), ArrowId(0), ArrowId(1)]
        );
    }

    #[test]
    fn two_loops_max_two_gives_five() {
        let q = loop_quiver(VertexKind::Orthogonal, 2);
        let cycles = q.cycles(2);
        let words: Vec<Vec<u32>> =
            cycles.iter().map(|c| c.word().iter().map(|a| a.0).collect()).collect();
        assert_eq!(words, vec![vec![0], vec![1], vec![0, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn two_cycle_between_vertices() {
        let q = Quiver::build(
            vec![
                Vertex { id: "x".into(), kind: VertexKind::Orthogonal },
                Vertex { id: "y".into(), kind: VertexKind::Orthogonal },
            ],
            vec![(0, "x".into(), "y".into()), (1, "y".into(), "x".into())],
        )
        .unwrap();
        let cycles = q.cycles(2);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].word(), &[ArrowId(0), ArrowId(1)]);
    }

    #[test]
    fn doubling_orthogonal_loop() {
        let q = loop_quiver(VertexKind::Orthogonal, 1);
        let dq = double(&q);
        assert_eq!(dq.vertices().len(), 1);
        assert_eq!(dq.sigma(0), 0);
        assert_eq!(dq.arrows().len(), 2);
        assert_eq!(dq.paired(ArrowId(0)), ArrowId(1));
        assert_eq!(dq.paired(ArrowId(1)), ArrowId(0));
        assert_eq!(dq.sign(ArrowId(0)), 1);
        assert_eq!(dq.sign(ArrowId(1)), -1);
    }

    #[test]
    fn doubling_dual_pair_swaps_endpoints() {
        let q = Quiver::build(
            vec![
                Vertex { id: "u".into(), kind: VertexKind::DualPairLeft },
                Vertex { id: "u*".into(), kind: VertexKind::DualPairRight },
            ],
            vec![(0, "u".into(), "u*".into())],
        )
        .unwrap();
        let dq = double(&q);
        assert_eq!(dq.sigma(0), 1);
        let star = dq.arrow(ArrowId(1)).unwrap();
        // a: u -> u*, so a*: sigma(u*) -> sigma(u) = u -> u*
        assert_eq!((star.src, star.dst), (0, 1));
        assert!(star.is_star);
    }

    #[test]
    fn doubling_plain_vertex_adds_starred_copy() {
        let q = loop_quiver(VertexKind::Plain, 1);
        let dq = double(&q);
        assert_eq!(dq.vertices().len(), 2);
        assert_eq!(dq.sigma(0), 1);
        assert_eq!(dq.kind(0), VertexKind::DualPairLeft);
        assert_eq!(dq.kind(1), VertexKind::DualPairRight);
        let star = dq.arrow(ArrowId(1)).unwrap();
        assert_eq!((star.src, star.dst), (1, 1));
        let alpha = dq.extend_alpha(&DimensionVector(vec![3]));
        assert_eq!(alpha.0, vec![3, 3]);
    }

    #[test]
    fn json_roundtrip() {
        let q = Quiver::build(
            vec![
                Vertex { id: "s1".into(), kind: VertexKind::Orthogonal },
                Vertex { id: "u".into(), kind: VertexKind::DualPairLeft },
                Vertex { id: "u*".into(), kind: VertexKind::DualPairRight },
            ],
            vec![(0, "s1".into(), "u".into()), (1, "u*".into(), "s1".into())],
        )
        .unwrap();
        let js = q.to_json();
        assert_eq!(js["vertices"][0]["kind"], "orthogonal");
        assert_eq!(js["arrows"][1]["src"], "u*");
        let back = Quiver::from_json(&js).unwrap();
        assert_eq!(back, q);
    }
}
