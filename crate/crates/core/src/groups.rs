//! Group blocks acting on quiver representations.
//!
//! A representation assigns to each arrow a matrix over the scalar backend.
//! The acting group is a product of GL, O and Sp blocks attached to vertices;
//! a GL block attached to a dual pair acts by `g` on the left half and by
//! transpose-inverse on the right half. Orthogonal and symplectic elements
//! are produced exactly by the Cayley transform, so group relations hold on
//! the nose over the rationals.

use crate::matrix::Matrix;
use crate::quiver::{Arrow, DimensionVector, DoubledQuiver, Quiver, VertexKind};
use crate::scalar::{sample_rat, Rat, SampleBounds, Scalar};
use crate::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Matrices per arrow id, plus the dimension vector giving vertex dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<S> {
    pub alpha: DimensionVector,
    pub matrices: BTreeMap<u32, Matrix<S>>,
}

impl<S: Scalar> Representation<S> {
    pub fn matrix(&self, id: crate::quiver::ArrowId) -> Option<&Matrix<S>> {
        self.matrices.get(&id.0)
    }
}

impl Representation<Rat> {
    pub fn convert<S: Scalar>(&self) -> Representation<S> {
        Representation {
            alpha: self.alpha.clone(),
            matrices: self.matrices.iter().map(|(k, m)| (*k, m.convert())).collect(),
        }
    }
}

/// Free random representation of the given arrow set.
pub fn random_representation<R: Rng>(
    arrows: &[Arrow],
    alpha: &DimensionVector,
    rng: &mut R,
    bounds: &SampleBounds,
) -> Representation<Rat> {
    let mut matrices = BTreeMap::new();
    for a in arrows {
        let m = Matrix::from_fn(alpha.0[a.dst], alpha.0[a.src], |_, _| sample_rat(rng, bounds));
        matrices.insert(a.id.0, m);
    }
    Representation { alpha: alpha.clone(), matrices }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockKind {
    GL,
    O,
    Sp,
}

/// Where a block acts. `Pair` lists (left, right) base-vertex indices of a
/// dual pair; plain vertices use `Single` and pick up their starred copy
/// only inside a doubled quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Attachment {
    Single(usize),
    Pair(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupBlock {
    pub kind: BlockKind,
    pub size: usize,
    pub attach: Attachment,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupSpec {
    pub blocks: Vec<GroupBlock>,
}

impl GroupSpec {
    /// One block per vertex kind: O and Sp vertices get their isometry block,
    /// plain vertices a full GL block, dual pairs a GL block on the pair.
    pub fn for_quiver(quiver: &Quiver, alpha: &DimensionVector) -> Result<GroupSpec> {
        alpha.check_admissible(quiver)?;
        let mut blocks = Vec::new();
        for (i, v) in quiver.vertices().iter().enumerate() {
            let size = alpha.0[i];
            match v.kind {
                VertexKind::Orthogonal => {
                    blocks.push(GroupBlock { kind: BlockKind::O, size, attach: Attachment::Single(i) })
                }
                VertexKind::Symplectic => {
                    blocks.push(GroupBlock { kind: BlockKind::Sp, size, attach: Attachment::Single(i) })
                }
                VertexKind::Plain => {
                    blocks.push(GroupBlock { kind: BlockKind::GL, size, attach: Attachment::Single(i) })
                }
                VertexKind::DualPairLeft => {
                    let p = quiver
                        .partner(i)
                        .ok_or_else(|| Error::UnpairedDualVertex(v.id.clone()))?;
                    blocks.push(GroupBlock { kind: BlockKind::GL, size, attach: Attachment::Pair(i, p) })
                }
                VertexKind::DualPairRight => {}
            }
        }
        Ok(GroupSpec { blocks })
    }

    pub fn summary(&self) -> Vec<(BlockKind, usize)> {
        self.blocks.iter().map(|b| (b.kind, b.size)).collect()
    }
}

/// One matrix per block, in block order.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement<S> {
    pub blocks: Vec<Matrix<S>>,
}

impl GroupElement<Rat> {
    pub fn identity(spec: &GroupSpec) -> Self {
        GroupElement { blocks: spec.blocks.iter().map(|b| Matrix::identity(b.size)).collect() }
    }

    pub fn convert<S: Scalar>(&self) -> GroupElement<S> {
        GroupElement { blocks: self.blocks.iter().map(|m| m.convert()).collect() }
    }
}

/// Standard symplectic form [[0, I], [-I, 0]].
pub fn symplectic_form<S: Scalar>(n: usize) -> Result<Matrix<S>> {
    if n % 2 != 0 {
        return Err(Error::MissingForm(format!("symplectic form needs even dimension, got {n}")));
    }
    let h = n / 2;
    Ok(Matrix::from_fn(n, n, |i, j| {
        if i < h && j == i + h {
            S::one()
        } else if i >= h && j + h == i {
            -S::one()
        } else {
            S::zero()
        }
    }))
}

pub(crate) fn antisymmetric_random<R: Rng>(
    n: usize,
    rng: &mut R,
    bounds: &SampleBounds,
) -> Matrix<Rat> {
    let mut m = Matrix::zero(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let x = sample_rat(rng, bounds);
            *m.at_mut(i, j) = x.clone();
            *m.at_mut(j, i) = -x;
        }
    }
    m
}

pub(crate) fn symmetric_random<R: Rng>(
    n: usize,
    rng: &mut R,
    bounds: &SampleBounds,
) -> Matrix<Rat> {
    let mut m = Matrix::zero(n, n);
    for i in 0..n {
        for j in i..n {
            let x = sample_rat(rng, bounds);
            *m.at_mut(i, j) = x.clone();
            if j != i {
                *m.at_mut(j, i) = x;
            }
        }
    }
    m
}

const CAYLEY_RETRIES: usize = 64;

/// Cayley transform (I - A)^-1 (I + A). For antisymmetric A this never hits a
/// singular matrix over the rationals; for Hamiltonian A it can, and the
/// caller retries with fresh randomness.
fn cayley(a: &Matrix<Rat>) -> Option<Matrix<Rat>> {
    let n = a.rows();
    let id = Matrix::identity(n);
    let inv = id.sub(a).ok()?.inverse()?;
    Some(inv.mul(&id.add(a).ok()?).ok())?
}

/// O(n) element: Cayley of an antisymmetric matrix lands in SO(n); a
/// determinant flip diag(-1, 1, ..., 1) is applied with probability 1/2 so
/// both components are reached.
pub fn sample_orthogonal<R: Rng>(n: usize, rng: &mut R, bounds: &SampleBounds) -> Result<Matrix<Rat>> {
    let a = antisymmetric_random(n, rng, bounds);
    let g = cayley(&a).ok_or(Error::SingularCayley(1))?;
    if n > 0 && rng.gen_bool(0.5) {
        let mut flip = Matrix::identity(n);
        *flip.at_mut(0, 0) = crate::scalar::rat_int(-1);
        return Ok(flip.mul(&g).expect("square"));
    }
    Ok(g)
}

/// Sp(n) element: Cayley of a Hamiltonian matrix H = J^-1 S with S symmetric.
pub fn sample_symplectic<R: Rng>(n: usize, rng: &mut R, bounds: &SampleBounds) -> Result<Matrix<Rat>> {
    let j: Matrix<Rat> = symplectic_form(n)?;
    let j_inv = j.neg(); // J^2 = -I
    for _ in 0..CAYLEY_RETRIES {
        let s = symmetric_random(n, rng, bounds);
        let h = j_inv.mul(&s).expect("square");
        if let Some(g) = cayley(&h) {
            return Ok(g);
        }
    }
    Err(Error::SingularCayley(CAYLEY_RETRIES))
}

/// GL(n) element: rejection-sampled invertible matrix.
pub fn sample_general_linear<R: Rng>(
    n: usize,
    rng: &mut R,
    bounds: &SampleBounds,
) -> Result<Matrix<Rat>> {
    for _ in 0..CAYLEY_RETRIES {
        let m = Matrix::from_fn(n, n, |_, _| sample_rat(rng, bounds));
        if m.inverse().is_some() {
            return Ok(m);
        }
    }
    Err(Error::SingularCayley(CAYLEY_RETRIES))
}

pub fn sample_group_element<R: Rng>(
    spec: &GroupSpec,
    rng: &mut R,
    bounds: &SampleBounds,
) -> Result<GroupElement<Rat>> {
    let mut blocks = Vec::with_capacity(spec.blocks.len());
    for b in &spec.blocks {
        let m = match b.kind {
            BlockKind::O => sample_orthogonal(b.size, rng, bounds)?,
            BlockKind::Sp => sample_symplectic(b.size, rng, bounds)?,
            BlockKind::GL => sample_general_linear(b.size, rng, bounds)?,
        };
        blocks.push(m);
    }
    Ok(GroupElement { blocks })
}

/// Per-vertex action matrices on the base quiver.
fn vertex_matrices_base<S: Scalar>(
    spec: &GroupSpec,
    g: &GroupElement<S>,
    num_vertices: usize,
) -> Result<Vec<Option<Matrix<S>>>> {
    if g.blocks.len() != spec.blocks.len() {
        return Err(Error::ShapeMismatch(format!(
            "group element has {} blocks, spec has {}",
            g.blocks.len(),
            spec.blocks.len()
        )));
    }
    let mut per_vertex: Vec<Option<Matrix<S>>> = vec![None; num_vertices];
    for (b, m) in spec.blocks.iter().zip(&g.blocks) {
        if m.rows() != b.size || m.cols() != b.size {
            return Err(Error::ShapeMismatch(format!(
                "block matrix is {}x{}, expected {}",
                m.rows(),
                m.cols(),
                b.size
            )));
        }
        match b.attach {
            Attachment::Single(v) => per_vertex[v] = Some(m.clone()),
            Attachment::Pair(u, ustar) => {
                per_vertex[u] = Some(m.clone());
                let tinv = m
                    .transpose_inverse()
                    .ok_or_else(|| Error::ShapeMismatch("singular block matrix".into()))?;
                per_vertex[ustar] = Some(tinv);
            }
        }
    }
    Ok(per_vertex)
}

/// Per-vertex action matrices on a doubled quiver; starred copies of plain
/// vertices act by transpose-inverse of their base block.
fn vertex_matrices_doubled<S: Scalar>(
    spec: &GroupSpec,
    g: &GroupElement<S>,
    dq: &DoubledQuiver,
) -> Result<Vec<Option<Matrix<S>>>> {
    let base_n = dq.base().vertices().len();
    let mut per_vertex = vertex_matrices_base(spec, g, dq.vertices().len())?;
    for v in 0..base_n {
        if dq.base().vertices()[v].kind == VertexKind::Plain {
            let star = dq.sigma(v);
            if star != v {
                let tinv = per_vertex[v]
                    .as_ref()
                    .and_then(|m| m.transpose_inverse())
                    .ok_or_else(|| Error::ShapeMismatch("singular block matrix".into()))?;
                per_vertex[star] = Some(tinv);
            }
        }
    }
    Ok(per_vertex)
}

fn act_on_arrows<S: Scalar>(
    arrows: &[Arrow],
    per_vertex: &[Option<Matrix<S>>],
    r: &Representation<S>,
) -> Result<Representation<S>> {
    let mut matrices = BTreeMap::new();
    for a in arrows {
        let m = r
            .matrices
            .get(&a.id.0)
            .ok_or_else(|| Error::ShapeMismatch(format!("missing matrix for arrow {}", a.id.0)))?;
        if m.rows() != r.alpha.0[a.dst] || m.cols() != r.alpha.0[a.src] {
            return Err(Error::ShapeMismatch(format!(
                "arrow {} matrix is {}x{}, expected {}x{}",
                a.id.0,
                m.rows(),
                m.cols(),
                r.alpha.0[a.dst],
                r.alpha.0[a.src]
            )));
        }
        let gd = per_vertex[a.dst]
            .as_ref()
            .ok_or_else(|| Error::ShapeMismatch(format!("no block acts at vertex {}", a.dst)))?;
        let gs = per_vertex[a.src]
            .as_ref()
            .ok_or_else(|| Error::ShapeMismatch(format!("no block acts at vertex {}", a.src)))?;
        let gs_inv = gs
            .inverse()
            .ok_or_else(|| Error::ShapeMismatch("singular block matrix".into()))?;
        matrices.insert(a.id.0, gd.mul(m)?.mul(&gs_inv)?);
    }
    Ok(Representation { alpha: r.alpha.clone(), matrices })
}

/// g . (f_a) = (g_dst f_a g_src^-1) on a base-quiver representation.
pub fn act<S: Scalar>(
    spec: &GroupSpec,
    g: &GroupElement<S>,
    quiver: &Quiver,
    r: &Representation<S>,
) -> Result<Representation<S>> {
    let per_vertex = vertex_matrices_base(spec, g, quiver.vertices().len())?;
    act_on_arrows(quiver.arrows(), &per_vertex, r)
}

/// Same action on a representation of the doubled quiver.
pub fn act_doubled<S: Scalar>(
    spec: &GroupSpec,
    g: &GroupElement<S>,
    dq: &DoubledQuiver,
    r: &Representation<S>,
) -> Result<Representation<S>> {
    let per_vertex = vertex_matrices_doubled(spec, g, dq)?;
    let arrows: Vec<Arrow> =
        dq.arrows().iter().map(|a| Arrow { id: a.id, src: a.src, dst: a.dst }).collect();
    act_on_arrows(&arrows, &per_vertex, r)
}

/// The identification P_v of the vertex dual V_v^* with V_{sigma(v)}:
/// identity at orthogonal, dual-pair and starred-plain vertices, the standard
/// symplectic form at symplectic vertices.
pub fn vertex_forms<S: Scalar>(dq: &DoubledQuiver, alpha_ext: &DimensionVector) -> Result<Vec<Matrix<S>>> {
    let mut forms = Vec::with_capacity(dq.vertices().len());
    for (i, v) in dq.vertices().iter().enumerate() {
        let n = alpha_ext.0[i];
        let p = match dq.kind(i) {
            VertexKind::Symplectic => symplectic_form(n).map_err(|_| Error::MissingForm(v.id.clone()))?,
            _ => Matrix::identity(n),
        };
        forms.push(p);
    }
    Ok(forms)
}

/// Adjoint of an arrow matrix with respect to the vertex forms:
/// for `a: v -> w` with matrix M, the star arrow `a*: sigma(w) -> sigma(v)`
/// carries P_v^-1 M^T P_w. Applying the construction twice gives M back.
pub fn adjoint_matrix<S: Scalar>(
    m: &Matrix<S>,
    p_src: &Matrix<S>,
    p_dst: &Matrix<S>,
) -> Result<Matrix<S>> {
    let p_src_inv = p_src
        .inverse()
        .ok_or_else(|| Error::MissingForm("degenerate vertex form".into()))?;
    p_src_inv.mul(&m.transpose())?.mul(p_dst)
}

/// Extend a base-quiver representation to the doubled quiver by adjoints.
pub fn adjoint_extend<S: Scalar>(
    dq: &DoubledQuiver,
    r: &Representation<S>,
) -> Result<Representation<S>> {
    let alpha_ext = dq.extend_alpha(&r.alpha);
    let forms: Vec<Matrix<S>> = vertex_forms(dq, &alpha_ext)?;
    let mut matrices = r.matrices.clone();
    for a in dq.arrows() {
        if !a.is_star {
            continue;
        }
        let base = dq
            .arrow(a.base)
            .ok_or_else(|| Error::ShapeMismatch(format!("missing base arrow {}", a.base.0)))?;
        let m = r
            .matrices
            .get(&a.base.0)
            .ok_or_else(|| Error::ShapeMismatch(format!("missing matrix for arrow {}", a.base.0)))?;
        let adj = adjoint_matrix(m, &forms[base.src], &forms[base.dst])?;
        matrices.insert(a.id.0, adj);
    }
    Ok(Representation { alpha: alpha_ext, matrices })
}

/// All sign-pattern elements of a group whose blocks are all O(1); used by
/// the finite-group averaging oracle.
pub fn sign_group_elements(spec: &GroupSpec) -> Option<Vec<GroupElement<Rat>>> {
    if !spec.blocks.iter().all(|b| b.kind == BlockKind::O && b.size == 1) {
        return None;
    }
    let n = spec.blocks.len();
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0..(1u64 << n) {
        let blocks: Vec<Matrix<Rat>> = (0..n)
            .map(|i| {
                let sign = crate::scalar::rat_int(if (mask >> i) & 1 == 1 { -1 } else { 1 });
                Matrix::from_fn(1, 1, |_, _| sign.clone())
            })
            .collect();
        out.push(GroupElement { blocks });
    }
    Some(out)
}
