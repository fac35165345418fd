//! Local structure of moduli at a polystable point with a pairing.
//!
//! Everything here is exact arithmetic in the decomposition data: dimension
//! tables for the full deformation space and its antisymmetric part, the
//! automorphism group, the orientation-cover fiber, cone multiplicities at
//! hyperbolic points, and a smoothness classifier for the shapes whose
//! quotient geometry is settled. Configurations outside that list come back
//! as `NotClassified` rather than guesses.

use crate::decomposition::{DecompositionData, Summand, SummandKind};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassicalGroup {
    SO,
    O,
    Sp,
}

impl std::str::FromStr for ClassicalGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<ClassicalGroup> {
        match s {
            "SO" => Ok(ClassicalGroup::SO),
            "O" => Ok(ClassicalGroup::O),
            "Sp" => Ok(ClassicalGroup::Sp),
            other => Err(Error::InvalidInput(format!(
                "unknown group {other:?}, expected SO, O or Sp"
            ))),
        }
    }
}

impl std::fmt::Display for ClassicalGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ClassicalGroup::SO => "SO",
            ClassicalGroup::O => "O",
            ClassicalGroup::Sp => "Sp",
        })
    }
}

fn reject_plain(d: &DecompositionData) -> Result<()> {
    if d.summands.iter().any(|s| s.kind == SummandKind::Plain) {
        return Err(Error::InvalidDecomposition(
            "plain summands carry no pairing; the bundle cannot be self-dual".into(),
        ));
    }
    Ok(())
}

fn require_genus(d: &DecompositionData) -> Result<()> {
    d.validate()?;
    if d.genus < 2 {
        return Err(Error::GenusTooSmall(d.genus as i64));
    }
    Ok(())
}

/// Deformation dimensions of one summand block or one unordered pair.
#[derive(Clone, Debug, Serialize)]
pub struct ExtBlock {
    pub summands: Vec<usize>,
    pub ext1: usize,
    pub asym: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtDims {
    pub ext1: usize,
    pub asym: usize,
    pub blocks: Vec<ExtBlock>,
}

fn vertex_count(s: &Summand) -> usize {
    if s.kind == SummandKind::DualPair {
        2
    } else {
        1
    }
}

fn sym_dim(m: usize) -> usize {
    m * (m + 1) / 2
}

fn alt_dim(m: usize) -> usize {
    m * (m - 1) / 2
}

/// Full and antisymmetric deformation dimensions, blockwise by summand.
pub fn ext_dims(d: &DecompositionData) -> Result<ExtDims> {
    require_genus(d)?;
    let g1 = d.genus as usize - 1;
    let mut blocks = Vec::new();
    for (i, s) in d.summands.iter().enumerate() {
        let m = s.multiplicity;
        let r = s.rank as usize;
        let (h1s, h1a) = (s.h1_sym(d.genus), s.h1_alt(d.genus));
        let (ext1, asym) = match s.kind {
            SummandKind::Orthogonal => {
                ((h1s + h1a) * m * m, h1s * alt_dim(m) + h1a * sym_dim(m))
            }
            SummandKind::Symplectic => {
                ((h1s + h1a) * m * m, h1a * sym_dim(m) + h1s * alt_dim(m))
            }
            SummandKind::DualPair => {
                let loops = r * r * g1 + 1;
                (
                    2 * loops * m * m + 2 * (h1s + h1a) * m * m,
                    loops * m * m + 2 * (h1s * alt_dim(m) + h1a * sym_dim(m)),
                )
            }
            SummandKind::Plain => {
                let loops = r * r * g1 + 1;
                (loops * m * m, loops * m * m)
            }
        };
        blocks.push(ExtBlock { summands: vec![i], ext1, asym });
    }
    for i in 0..d.summands.len() {
        for j in (i + 1)..d.summands.len() {
            let (a, b) = (&d.summands[i], &d.summands[j]);
            let pairs = vertex_count(a) * vertex_count(b);
            let per = a.rank as usize * b.rank as usize * g1 * a.multiplicity * b.multiplicity;
            let ext1 = 2 * pairs * per;
            let free = a.kind == SummandKind::Plain || b.kind == SummandKind::Plain;
            let asym = if free { ext1 } else { pairs * per };
            blocks.push(ExtBlock { summands: vec![i, j], ext1, asym });
        }
    }
    Ok(ExtDims {
        ext1: blocks.iter().map(|b| b.ext1).sum(),
        asym: blocks.iter().map(|b| b.asym).sum(),
        blocks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutBlock {
    pub group: String,
    pub size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AutGroup {
    pub blocks: Vec<AutBlock>,
    /// whether some automorphism acts with determinant -1 on the bundle;
    /// only meaningful (Some) for oriented data
    pub det_minus_reachable: Option<bool>,
}

/// Automorphism group of the polystable bundle: one factor per summand,
/// acting on its multiplicity space. An isometry block of a dual pair or the
/// determinant of a symplectic factor never reaches determinant -1 on the
/// bundle, so the flag reduces to odd-rank orthogonal summands.
pub fn aut_group(d: &DecompositionData, oriented: bool) -> Result<AutGroup> {
    d.validate()?;
    reject_plain(d)?;
    let blocks = d
        .summands
        .iter()
        .map(|s| AutBlock {
            group: match s.kind {
                SummandKind::Orthogonal => "O",
                SummandKind::Symplectic => "Sp",
                SummandKind::DualPair => "GL",
                SummandKind::Plain => unreachable!("rejected above"),
            }
            .to_string(),
            size: s.multiplicity,
        })
        .collect();
    let det_minus = oriented.then(|| {
        d.summands
            .iter()
            .any(|s| s.kind == SummandKind::Orthogonal && s.rank % 2 == 1)
    });
    Ok(AutGroup { blocks, det_minus_reachable: det_minus })
}

/// Fiber size of the orientation cover over this point: 2 when every
/// orthogonal summand has even rank (vacuously so), else the two
/// orientations are exchanged by an automorphism and the fiber is 1.
pub fn orientation_fibers(d: &DecompositionData) -> Result<u8> {
    d.validate()?;
    reject_plain(d)?;
    let all_even = d
        .summands
        .iter()
        .filter(|s| s.kind == SummandKind::Orthogonal)
        .all(|s| s.rank % 2 == 0);
    Ok(if all_even { 2 } else { 1 })
}

/// Multiplicity of the cone over the Segre embedding of P^(d-1) x P^(d-1),
/// the local model transverse to a hyperbolic point with d deformation
/// parameters of each weight: the central binomial coefficient C(2(d-1), d-1).
pub fn hyperbolic_multiplicity(d: usize) -> Result<u128> {
    if d == 0 {
        return Err(Error::InvalidInput(
            "cone multiplicity needs at least one weight coordinate".into(),
        ));
    }
    let k = (d - 1) as u128;
    let mut result: u128 = 1;
    for i in 1..=k {
        result = result
            .checked_mul(k + i)
            .ok_or_else(|| Error::NumericOverflow(format!("C({}, {})", 2 * k, k)))?
            / i;
    }
    Ok(result)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Smoothness {
    SmoothRegularlyStable,
    SmoothExceptional,
    Singular,
    NotClassified,
}

#[derive(Clone, Debug, Serialize)]
pub struct SmoothnessReport {
    pub group: ClassicalGroup,
    pub verdict: Smoothness,
    pub reason: String,
}

fn parity_check(d: &DecompositionData, group: ClassicalGroup) -> Result<()> {
    for (i, s) in d.summands.iter().enumerate() {
        let bad = match group {
            // a symplectic summand inside an orthogonal bundle needs a
            // symplectic multiplicity space, hence even multiplicity
            ClassicalGroup::SO | ClassicalGroup::O => {
                s.kind == SummandKind::Symplectic && s.multiplicity % 2 != 0
            }
            // and vice versa for an orthogonal summand inside a symplectic one
            ClassicalGroup::Sp => {
                s.kind == SummandKind::Orthogonal && s.multiplicity % 2 != 0
            }
        };
        if bad {
            return Err(Error::InvalidDecomposition(format!(
                "summand {i}: multiplicity {} has the wrong parity for a {group} bundle",
                s.multiplicity
            )));
        }
    }
    Ok(())
}

/// Hyperbolic weight-space dimension for a single dual-pair summand: the h1
/// controlling the off-diagonal constrained block, which is the alternating
/// square on the orthogonal side and the symmetric square on the symplectic
/// side.
fn hyperbolic_weight_dim(s: &Summand, genus: u32, group: ClassicalGroup) -> usize {
    match group {
        ClassicalGroup::SO | ClassicalGroup::O => s.h1_alt(genus),
        ClassicalGroup::Sp => s.h1_sym(genus),
    }
}

pub fn classify_smoothness(d: &DecompositionData, group: ClassicalGroup) -> Result<SmoothnessReport> {
    require_genus(d)?;
    reject_plain(d)?;
    parity_check(d, group)?;
    let g = d.genus;
    let s = &d.summands;
    let report = |verdict, reason: String| SmoothnessReport { group, verdict, reason };

    let verdict = match group {
        ClassicalGroup::SO | ClassicalGroup::O => {
            if s.len() == 1 && s[0].kind == SummandKind::Orthogonal && s[0].multiplicity == 1 {
                report(
                    Smoothness::SmoothRegularlyStable,
                    "stable summand with central automorphisms only".into(),
                )
            } else if s.len() == 2
                && s.iter().all(|x| x.kind == SummandKind::Orthogonal && x.multiplicity == 1)
            {
                let both_odd = s.iter().all(|x| x.rank % 2 == 1);
                if group == ClassicalGroup::SO && both_odd {
                    report(
                        Smoothness::SmoothRegularlyStable,
                        "sum of two odd-rank stable summands: every sign automorphism \
                         either is central or has determinant -1, so the oriented \
                         stabilizer is central"
                            .into(),
                    )
                } else {
                    let cross = s[0].rank as usize * s[1].rank as usize * (g as usize - 1);
                    if cross >= 2 {
                        report(
                            Smoothness::Singular,
                            format!(
                                "sign involution negates the {cross}-dimensional cross \
                                 block; the quotient of a space of dimension >= 2 by the \
                                 sign action is singular"
                            ),
                        )
                    } else {
                        report(
                            Smoothness::SmoothExceptional,
                            "sign involution negates a single cross coordinate; its \
                             square is a smooth chart"
                                .into(),
                        )
                    }
                }
            } else if s.len() == 1
                && s[0].kind == SummandKind::Symplectic
                && s[0].multiplicity == 2
            {
                let b = s[0].h1_alt(g);
                if b <= 2 {
                    report(
                        Smoothness::SmoothExceptional,
                        format!(
                            "symplectic summand doubled: {b} antisymmetric-square \
                             classes under the rank-2 symplectic stabilizer stay coregular"
                        ),
                    )
                } else {
                    report(
                        Smoothness::Singular,
                        format!(
                            "symplectic summand doubled: {b} antisymmetric-square classes \
                             exceed the coregular range of the rank-2 symplectic stabilizer"
                        ),
                    )
                }
            } else if s.len() == 1 && s[0].kind == SummandKind::DualPair && s[0].multiplicity == 1 {
                let w = hyperbolic_weight_dim(&s[0], g, group);
                if w >= 2 {
                    report(
                        Smoothness::Singular,
                        format!(
                            "hyperbolic point: scaling acts with weights on {w} + {w} \
                             coordinates; the invariants cut out a cone over a Segre product"
                        ),
                    )
                } else {
                    report(
                        Smoothness::SmoothExceptional,
                        format!(
                            "hyperbolic point with {w} weight coordinates per side: the \
                             scaling quotient is a smooth chart"
                        ),
                    )
                }
            } else if s.len() == 2
                && s.iter().any(|x| {
                    x.kind == SummandKind::Orthogonal && x.rank == 1 && x.multiplicity == 1
                })
                && s.iter().any(|x| {
                    x.kind == SummandKind::DualPair && x.rank == 1 && x.multiplicity == 1
                })
            {
                if g == 2 {
                    report(
                        Smoothness::SmoothExceptional,
                        "rank-3 sum of a line with a hyperbolic plane at genus 2: the \
                         stabilizer action is coregular"
                            .into(),
                    )
                } else {
                    report(
                        Smoothness::Singular,
                        "rank-3 sum of a line with a hyperbolic plane: beyond genus 2 \
                         the invariants of the stabilizer action no longer form a free \
                         algebra on a smooth chart"
                            .into(),
                    )
                }
            } else if s.len() == 1
                && s[0].kind == SummandKind::Orthogonal
                && s[0].rank == 1
                && s[0].multiplicity == 3
                && g == 2
            {
                report(
                    Smoothness::SmoothExceptional,
                    "triple of a line summand at genus 2: the rank-3 sign-isometry \
                     action on pairs of symmetric forms is coregular"
                        .into(),
                )
            } else {
                report(
                    Smoothness::NotClassified,
                    "configuration outside the classified shape list".into(),
                )
            }
        }
        ClassicalGroup::Sp => {
            let total = d.total_rank();
            if s.len() == 1 && s[0].kind == SummandKind::Symplectic && s[0].multiplicity == 1 {
                report(
                    Smoothness::SmoothRegularlyStable,
                    "stable summand with central automorphisms only".into(),
                )
            } else if s.len() == 1 && s[0].kind == SummandKind::DualPair && s[0].multiplicity == 1
            {
                let w = hyperbolic_weight_dim(&s[0], g, group);
                if w >= 2 {
                    report(
                        Smoothness::Singular,
                        format!(
                            "hyperbolic point: scaling acts with weights on {w} + {w} \
                             coordinates; the invariants cut out a cone over a Segre product"
                        ),
                    )
                } else {
                    report(
                        Smoothness::SmoothExceptional,
                        format!(
                            "hyperbolic point with {w} weight coordinates per side: the \
                             scaling quotient is a smooth chart"
                        ),
                    )
                }
            } else if s.len() == 2
                && s.iter().all(|x| x.kind == SummandKind::Symplectic && x.multiplicity == 1)
            {
                let cross = s[0].rank as usize * s[1].rank as usize * (g as usize - 1);
                if cross >= 2 {
                    report(
                        Smoothness::Singular,
                        format!(
                            "sign involution negates the {cross}-dimensional cross block; \
                             the quotient is singular"
                        ),
                    )
                } else {
                    report(
                        Smoothness::SmoothExceptional,
                        "sign involution negates a single cross coordinate".into(),
                    )
                }
            } else if s.len() == 1
                && s[0].kind == SummandKind::Orthogonal
                && s[0].multiplicity == 2
                && total >= 4
            {
                let b = s[0].h1_sym(g);
                if b >= 2 {
                    report(
                        Smoothness::Singular,
                        format!(
                            "orthogonal summand doubled inside a symplectic bundle: {b} \
                             symmetric-square classes under the rank-2 quadratic stabilizer"
                        ),
                    )
                } else {
                    report(
                        Smoothness::NotClassified,
                        "configuration outside the classified shape list".into(),
                    )
                }
            } else if total < 4 {
                report(
                    Smoothness::NotClassified,
                    "symplectic bundles below rank 4 are outside the classified range".into(),
                )
            } else {
                report(
                    Smoothness::NotClassified,
                    "configuration outside the classified shape list".into(),
                )
            }
        }
    };
    Ok(verdict)
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalModelReport {
    pub group: ClassicalGroup,
    pub genus: u32,
    pub total_rank: usize,
    pub ext1_dim: usize,
    pub ext1_asym_dim: usize,
    pub aut_group: AutGroup,
    pub orientation_fibers: u8,
    pub smoothness: Smoothness,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<u64>,
    pub notes: Vec<String>,
}

/// Everything the local model knows about one decomposition under one group.
pub fn local_model_report(
    d: &DecompositionData,
    group: ClassicalGroup,
) -> Result<LocalModelReport> {
    let dims = ext_dims(d)?;
    let aut = aut_group(d, group == ClassicalGroup::SO)?;
    let fibers = orientation_fibers(d)?;
    let smooth = classify_smoothness(d, group)?;

    let mut multiplicity = None;
    let mut notes = Vec::new();
    if d.summands.len() == 1
        && d.summands[0].kind == SummandKind::DualPair
        && d.summands[0].multiplicity == 1
    {
        let w = hyperbolic_weight_dim(&d.summands[0], d.genus, group);
        if w >= 1 {
            let m = hyperbolic_multiplicity(w)?;
            multiplicity = Some(u64::try_from(m).map_err(|_| {
                Error::NumericOverflow(format!("cone multiplicity {m} exceeds 64 bits"))
            })?);
        } else {
            notes.push(
                "hyperbolic point with no weight coordinates: multiplicity not defined".into(),
            );
        }
    }
    if group == ClassicalGroup::SO && fibers == 2 {
        notes.push(
            "all orthogonal summands have even rank: the two orientations stay distinct, \
             so oriented invariants can be finer than unoriented ones"
                .into(),
        );
    }
    if group == ClassicalGroup::Sp {
        notes.push(
            "multiplicity spaces are described in the orthogonal-side convention; for a \
             symplectic bundle the forms on the multiplicity spaces are exchanged"
                .into(),
        );
    }

    Ok(LocalModelReport {
        group,
        genus: d.genus,
        total_rank: d.total_rank(),
        ext1_dim: dims.ext1,
        ext1_asym_dim: dims.asym,
        aut_group: aut,
        orientation_fibers: fibers,
        smoothness: smooth.verdict,
        reason: smooth.reason,
        multiplicity,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asym::AsymModel;

    fn data(genus: u32, summands: Vec<Summand>) -> DecompositionData {
        DecompositionData::new(genus, summands)
    }

    #[test]
    fn ext_dims_match_asym_model_dimension() {
        let cases = vec![
            data(2, vec![Summand::orthogonal(1, 2)]),
            data(2, vec![Summand::orthogonal(1, 3)]),
            data(3, vec![Summand::orthogonal(2, 1)]),
            data(2, vec![Summand::symplectic(2, 2)]),
            data(3, vec![Summand::symplectic(2, 2)]),
            data(2, vec![Summand::dual_pair(1, 1)]),
            data(3, vec![Summand::dual_pair(2, 1)]),
            data(2, vec![Summand::orthogonal(1, 1), Summand::dual_pair(1, 1)]),
            data(3, vec![Summand::orthogonal(1, 1), Summand::orthogonal(2, 1)]),
            data(3, vec![Summand::plain(2, 1)]),
            data(2, vec![Summand::plain(1, 2), Summand::orthogonal(1, 1)]),
        ];
        for (i, d) in cases.iter().enumerate() {
            let dims = ext_dims(d).unwrap();
            let model = AsymModel::new(d).unwrap();
            assert_eq!(dims.asym, model.dim(), "case {i}");
            let layout = model.layout();
            let ext1_from_layout: usize = layout
                .sectors
                .iter()
                .map(|s| s.arrows.len() * layout.alpha.0[s.src] * layout.alpha.0[s.dst])
                .sum();
            assert_eq!(dims.ext1, ext1_from_layout, "case {i}");
        }
    }

    #[test]
    fn hyperbolic_multiplicities_are_central_binomials() {
        assert_eq!(hyperbolic_multiplicity(1).unwrap(), 1);
        assert_eq!(hyperbolic_multiplicity(2).unwrap(), 2);
        assert_eq!(hyperbolic_multiplicity(3).unwrap(), 6);
        assert_eq!(hyperbolic_multiplicity(4).unwrap(), 20);
        assert_eq!(hyperbolic_multiplicity(5).unwrap(), 70);
        assert!(hyperbolic_multiplicity(0).is_err());
    }

    #[test]
    fn orientation_fiber_cases() {
        assert_eq!(orientation_fibers(&data(2, vec![Summand::orthogonal(2, 1)])).unwrap(), 2);
        assert_eq!(orientation_fibers(&data(2, vec![Summand::orthogonal(1, 2)])).unwrap(), 1);
        assert_eq!(orientation_fibers(&data(2, vec![Summand::dual_pair(1, 1)])).unwrap(), 2);
        assert_eq!(
            orientation_fibers(&data(2, vec![Summand::orthogonal(2, 1), Summand::orthogonal(1, 1)]))
                .unwrap(),
            1
        );
    }

    #[test]
    fn aut_group_blocks_and_determinant_flag() {
        let d = data(2, vec![Summand::orthogonal(3, 2), Summand::dual_pair(1, 1)]);
        let aut = aut_group(&d, true).unwrap();
        assert_eq!(
            aut.blocks,
            vec![
                AutBlock { group: "O".into(), size: 2 },
                AutBlock { group: "GL".into(), size: 1 }
            ]
        );
        assert_eq!(aut.det_minus_reachable, Some(true));
        let d = data(2, vec![Summand::orthogonal(2, 1)]);
        assert_eq!(aut_group(&d, true).unwrap().det_minus_reachable, Some(false));
        assert_eq!(aut_group(&d, false).unwrap().det_minus_reachable, None);
    }

    #[test]
    fn regularly_stable_points_are_smooth() {
        let r = classify_smoothness(&data(2, vec![Summand::orthogonal(3, 1)]), ClassicalGroup::SO)
            .unwrap();
        assert_eq!(r.verdict, Smoothness::SmoothRegularlyStable);
        let r = classify_smoothness(&data(2, vec![Summand::symplectic(2, 1)]), ClassicalGroup::Sp)
            .unwrap();
        assert_eq!(r.verdict, Smoothness::SmoothRegularlyStable);
    }

    #[test]
    fn symplectic_double_flips_at_genus_three() {
        let d2 = data(2, vec![Summand::symplectic(2, 2)]);
        let d3 = data(3, vec![Summand::symplectic(2, 2)]);
        assert_eq!(
            classify_smoothness(&d2, ClassicalGroup::SO).unwrap().verdict,
            Smoothness::SmoothExceptional
        );
        assert_eq!(
            classify_smoothness(&d3, ClassicalGroup::SO).unwrap().verdict,
            Smoothness::Singular
        );
    }

    #[test]
    fn hyperbolic_verdicts_follow_the_weight_dimension() {
        // rank 2 dual pair, genus 3: two weight coordinates per side
        let d = data(3, vec![Summand::dual_pair(2, 1)]);
        let r = classify_smoothness(&d, ClassicalGroup::SO).unwrap();
        assert_eq!(r.verdict, Smoothness::Singular);
        let report = local_model_report(&d, ClassicalGroup::SO).unwrap();
        assert_eq!(report.multiplicity, Some(2));
        // line dual pair at genus 2: no weight coordinates on the orthogonal
        // side, one on the symplectic side
        let d = data(2, vec![Summand::dual_pair(1, 1)]);
        assert_eq!(
            classify_smoothness(&d, ClassicalGroup::SO).unwrap().verdict,
            Smoothness::SmoothExceptional
        );
        assert_eq!(
            classify_smoothness(&d, ClassicalGroup::Sp).unwrap().verdict,
            Smoothness::SmoothExceptional
        );
    }

    #[test]
    fn parity_mismatches_are_rejected() {
        let d = data(2, vec![Summand::symplectic(2, 1)]);
        assert!(classify_smoothness(&d, ClassicalGroup::SO).is_err());
        assert!(classify_smoothness(&d, ClassicalGroup::Sp).is_ok());
        let d = data(2, vec![Summand::orthogonal(2, 1)]);
        assert!(classify_smoothness(&d, ClassicalGroup::Sp).is_err());
    }

    #[test]
    fn plain_summands_have_no_pairing_side() {
        let d = data(2, vec![Summand::plain(1, 1)]);
        assert!(classify_smoothness(&d, ClassicalGroup::SO).is_err());
        assert!(orientation_fibers(&d).is_err());
        assert!(ext_dims(&d).is_ok());
    }

    #[test]
    fn genus_gate() {
        let d = data(1, vec![Summand::orthogonal(2, 1)]);
        assert!(matches!(ext_dims(&d), Err(Error::GenusTooSmall(1))));
        assert!(matches!(
            classify_smoothness(&d, ClassicalGroup::SO),
            Err(Error::GenusTooSmall(1))
        ));
    }
}
