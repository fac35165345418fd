//! The antisymmetric-extension subspace of a local representation space.
//!
//! Deformations of a bundle with a pairing sit inside the full deformation
//! space of the underlying bundle as the points fixed by minus the duality
//! involution. On the quiver side that involution sends the arrow sector
//! (v, w) to (sigma(w), sigma(v)) and acts on matrices by the form-twisted
//! adjoint. The model splits arrows into three classes:
//!
//! * free: one side of a swapped sector pair, and every sector touching a
//!   plain vertex (its partner data lives on the starred copies only);
//! * self-adjoint: arrows in sectors fixed by the involution, constrained to
//!   f^sharp = -f or f^sharp = +f depending on which cohomology block the
//!   arrow indexes;
//! * determined: the other side of a swapped pair, forced to minus the
//!   adjoint of its partner.

use crate::decomposition::{from_decomposition, DecompositionData, LocalLayout};
use crate::groups::{
    adjoint_matrix, antisymmetric_random, symmetric_random, vertex_forms, Representation,
};
use crate::matrix::Matrix;
use crate::quiver::{double, DoubledQuiver, VertexKind};
use crate::scalar::{Rat, SampleBounds};
use crate::{Error, Result};
use rand::Rng;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Constraint {
    Free,
    /// f^sharp = sign * f
    SelfAdjoint { sign: i8 },
    /// f = -(f_source)^sharp
    Determined { source: u32 },
}

pub struct AsymModel {
    layout: LocalLayout,
    dq: DoubledQuiver,
    /// base-vertex forms, indexed like doubled-quiver vertices
    forms: Vec<Matrix<Rat>>,
    constraints: Vec<(u32, Constraint)>,
    dim: usize,
}

/// Parameter matrix type for a self-adjoint arrow: the constraint
/// f^sharp = sign * f is solved by f = P^-1 S with S symmetric exactly when
/// the sign matches the symmetry of the vertex form.
fn wants_symmetric_parameter(sign: i8, form_is_antisymmetric: bool) -> bool {
    (sign < 0) == form_is_antisymmetric
}

impl AsymModel {
    pub fn new(d: &DecompositionData) -> Result<AsymModel> {
        let layout = from_decomposition(d)?;
        let dq = double(&layout.quiver);
        let alpha_ext = dq.extend_alpha(&layout.alpha);
        let forms = vertex_forms(&dq, &alpha_ext)?;

        let sigma = |x: usize| -> usize {
            match layout.vertices[x].kind {
                VertexKind::DualPairLeft => x + 1,
                VertexKind::DualPairRight => x - 1,
                _ => x,
            }
        };

        let mut constraints: Vec<(u32, Constraint)> = Vec::new();
        let mut dim = 0usize;
        for sec in &layout.sectors {
            let plain = layout.vertices[sec.src].kind == VertexKind::Plain
                || layout.vertices[sec.dst].kind == VertexKind::Plain;
            let m_src = layout.alpha.0[sec.src];
            let m_dst = layout.alpha.0[sec.dst];
            if plain {
                for a in &sec.arrows {
                    constraints.push((a.0, Constraint::Free));
                    dim += m_src * m_dst;
                }
                continue;
            }
            if sec.self_paired {
                debug_assert_eq!(m_src, m_dst);
                let anti = layout.vertices[sec.src].kind == VertexKind::Symplectic;
                for (k, a) in sec.arrows.iter().enumerate() {
                    let sign: i8 = if k < sec.neg_count { -1 } else { 1 };
                    constraints.push((a.0, Constraint::SelfAdjoint { sign }));
                    dim += if wants_symmetric_parameter(sign, anti) {
                        m_src * (m_src + 1) / 2
                    } else {
                        m_src * (m_src - 1) / 2
                    };
                }
                continue;
            }
            let image = (sigma(sec.dst), sigma(sec.src));
            let partner = layout
                .sector(image.0, image.1)
                .ok_or_else(|| Error::InvalidDecomposition("missing partner sector".into()))?;
            if partner.arrows.len() != sec.arrows.len() {
                return Err(Error::InvalidDecomposition("mismatched partner sector sizes".into()));
            }
            if (sec.src, sec.dst) < image {
                for a in &sec.arrows {
                    constraints.push((a.0, Constraint::Free));
                    dim += m_src * m_dst;
                }
            } else {
                for (a, b) in sec.arrows.iter().zip(&partner.arrows) {
                    constraints.push((a.0, Constraint::Determined { source: b.0 }));
                }
            }
        }
        constraints.sort_by_key(|(id, _)| *id);
        Ok(AsymModel { layout, dq, forms, constraints, dim })
    }

    pub fn layout(&self) -> &LocalLayout {
        &self.layout
    }

    pub fn doubled(&self) -> &DoubledQuiver {
        &self.dq
    }

    /// Number of free parameters, i.e. the dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.dim
    }

    fn form_at(&self, vertex: usize) -> &Matrix<Rat> {
        &self.forms[vertex]
    }

    /// Random point of the subspace, as a base-quiver representation.
    pub fn sample<R: Rng>(&self, rng: &mut R, bounds: &SampleBounds) -> Result<Representation<Rat>> {
        let q = &self.layout.quiver;
        let alpha = &self.layout.alpha;
        let mut matrices: BTreeMap<u32, Matrix<Rat>> = BTreeMap::new();
        // free and self-adjoint arrows first, sources before determined ones
        for (id, c) in &self.constraints {
            let arrow = q.arrow(crate::quiver::ArrowId(*id)).expect("constraint covers arrow");
            let (rows, cols) = (alpha.0[arrow.dst], alpha.0[arrow.src]);
            match c {
                Constraint::Free => {
                    matrices.insert(
                        *id,
                        Matrix::from_fn(rows, cols, |_, _| crate::scalar::sample_rat(rng, bounds)),
                    );
                }
                Constraint::SelfAdjoint { sign } => {
                    let anti = self.layout.vertices[arrow.src].kind == VertexKind::Symplectic;
                    let s = if wants_symmetric_parameter(*sign, anti) {
                        symmetric_random(rows, rng, bounds)
                    } else {
                        antisymmetric_random(rows, rng, bounds)
                    };
                    let p_inv = self
                        .form_at(arrow.src)
                        .inverse()
                        .ok_or_else(|| Error::MissingForm("degenerate vertex form".into()))?;
                    matrices.insert(*id, p_inv.mul(&s)?);
                }
                Constraint::Determined { .. } => {}
            }
        }
        for (id, c) in &self.constraints {
            if let Constraint::Determined { source } = c {
                let src_arrow = q.arrow(crate::quiver::ArrowId(*source)).expect("source arrow");
                let f = matrices.get(source).expect("source sampled first").clone();
                let adj = adjoint_matrix(
                    &f,
                    self.form_at(src_arrow.src),
                    self.form_at(src_arrow.dst),
                )?;
                matrices.insert(*id, adj.neg());
            }
        }
        Ok(Representation { alpha: alpha.clone(), matrices })
    }

    /// Exact membership test for a base-quiver representation.
    pub fn satisfies(&self, r: &Representation<Rat>) -> Result<bool> {
        let q = &self.layout.quiver;
        for (id, c) in &self.constraints {
            let arrow = q.arrow(crate::quiver::ArrowId(*id)).expect("constraint covers arrow");
            let f = r
                .matrices
                .get(id)
                .ok_or_else(|| Error::ShapeMismatch(format!("missing matrix for arrow {id}")))?;
            match c {
                Constraint::Free => {}
                Constraint::SelfAdjoint { sign } => {
                    let adj = adjoint_matrix(f, self.form_at(arrow.src), self.form_at(arrow.dst))?;
                    let rhs = if *sign < 0 { f.neg() } else { f.clone() };
                    if adj != rhs {
                        return Ok(false);
                    }
                }
                Constraint::Determined { source } => {
                    let src_arrow = q.arrow(crate::quiver::ArrowId(*source)).expect("source arrow");
                    let g = r.matrices.get(source).ok_or_else(|| {
                        Error::ShapeMismatch(format!("missing matrix for arrow {source}"))
                    })?;
                    let adj = adjoint_matrix(
                        g,
                        self.form_at(src_arrow.src),
                        self.form_at(src_arrow.dst),
                    )?;
                    if *f != adj.neg() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::Summand;
    use crate::groups::random_representation;
    use crate::seeding::{stream_rng, Stream};

    fn model(genus: u32, summands: Vec<Summand>) -> AsymModel {
        AsymModel::new(&DecompositionData::new(genus, summands)).unwrap()
    }

    #[test]
    fn orthogonal_double_line_dimensions() {
        // h1_sym = 2, h1_alt = 0: two loops at the O(2) vertex, both
        // so(2)-valued, and so(2) is one-dimensional
        let m = model(2, vec![Summand::orthogonal(1, 2)]);
        assert_eq!(m.dim(), 2);
    }

    #[test]
    fn dual_pair_line_dimensions() {
        let m = model(2, vec![Summand::dual_pair(1, 1)]);
        // loops at u free (2), loops at u* determined, cross arrows 1x1
        // antisymmetric hence zero
        assert_eq!(m.dim(), 2);
    }

    #[test]
    fn symplectic_double_dimensions() {
        let m = model(2, vec![Summand::symplectic(2, 2)]);
        // h1_alt = 2 loops valued in sp(2) (dim 3), h1_sym = 3 loops valued in
        // the alternating square (dim 1)
        assert_eq!(m.dim(), 2 * 3 + 3 * 1);
    }

    #[test]
    fn mixed_fixture_dimension_matches_hand_count() {
        let m = model(2, vec![Summand::orthogonal(1, 1), Summand::dual_pair(1, 1)]);
        assert_eq!(m.dim(), 4);
    }

    #[test]
    fn plain_summand_is_unconstrained() {
        let m = model(3, vec![Summand::plain(2, 1)]);
        // single vertex, 4*2+1 = 9 loops, all free on a 1-dim space
        assert_eq!(m.dim(), 9);
        let mut rng = stream_rng(0, Stream::AsymPoints);
        let r = m.sample(&mut rng, &SampleBounds::default()).unwrap();
        assert!(m.satisfies(&r).unwrap());
    }

    #[test]
    fn samples_satisfy_their_own_constraints() {
        let bounds = SampleBounds::default();
        let cases = vec![
            model(2, vec![Summand::orthogonal(1, 2)]),
            model(2, vec![Summand::orthogonal(1, 3)]),
            model(2, vec![Summand::symplectic(2, 2)]),
            model(2, vec![Summand::dual_pair(1, 1)]),
            model(3, vec![Summand::dual_pair(2, 1)]),
            model(2, vec![Summand::orthogonal(1, 1), Summand::dual_pair(1, 1)]),
            model(3, vec![Summand::orthogonal(1, 1), Summand::orthogonal(2, 1)]),
        ];
        for (i, m) in cases.iter().enumerate() {
            for seed in 0..3 {
                let mut rng = stream_rng(seed, Stream::AsymPoints);
                let r = m.sample(&mut rng, &bounds).unwrap();
                assert!(m.satisfies(&r).unwrap(), "case {i} seed {seed}");
            }
        }
    }

    #[test]
    fn generic_representation_is_rejected() {
        let m = model(2, vec![Summand::orthogonal(1, 2)]);
        let mut rng = stream_rng(7, Stream::Representations);
        let r = random_representation(
            m.layout().quiver.arrows(),
            &m.layout().alpha,
            &mut rng,
            &SampleBounds::default(),
        );
        // a random 2x2 loop matrix is almost surely not antisymmetric
        assert!(!m.satisfies(&r).unwrap());
    }

    #[test]
    fn sample_count_of_free_entries_matches_dim() {
        // dimension counts free parameters, cross-checked by perturbing a
        // sample: two samples from different seeds differ somewhere
        let m = model(2, vec![Summand::dual_pair(1, 1)]);
        let bounds = SampleBounds::default();
        let mut r0 = stream_rng(0, Stream::AsymPoints);
        let mut r1 = stream_rng(1, Stream::AsymPoints);
        let a = m.sample(&mut r0, &bounds).unwrap();
        let b = m.sample(&mut r1, &bounds).unwrap();
        assert_ne!(a, b);
    }
}
