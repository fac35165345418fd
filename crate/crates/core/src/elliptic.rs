//! Genus-one classification: bundles over an elliptic curve reduce to tuples
//! of degree-zero line bundles, i.e. points of the curve itself, up to a
//! finite reflection group. Points live on R^2/Z^2 with exact rational
//! coordinates, so all comparisons are decidable.

use crate::local_models::ClassicalGroup;
use crate::scalar::{pair_to_rat, rat, rat_to_pair, Rat};
use crate::{Error, Result};
use num::Zero;
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A point of the square torus, coordinates normalized into [0, 1).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EllipticPoint {
    x: Rat,
    y: Rat,
}

fn mod_one(v: Rat) -> Rat {
    let f = v.floor();
    v - f
}

impl EllipticPoint {
    pub fn new(x: Rat, y: Rat) -> Self {
        EllipticPoint { x: mod_one(x), y: mod_one(y) }
    }

    pub fn zero() -> Self {
        EllipticPoint { x: Rat::zero(), y: Rat::zero() }
    }

    pub fn from_pairs(x: (i64, i64), y: (i64, i64)) -> Result<Self> {
        Ok(EllipticPoint::new(pair_to_rat(x.0, x.1)?, pair_to_rat(y.0, y.1)?))
    }

    pub fn neg(&self) -> Self {
        EllipticPoint::new(-self.x.clone(), -self.y.clone())
    }

    pub fn is_two_torsion(&self) -> bool {
        *self == self.neg()
    }

    /// The four points killed by doubling: coordinates in {0, 1/2}.
    pub fn two_torsion_points() -> [Self; 4] {
        let h = || rat(1, 2);
        [
            EllipticPoint::zero(),
            EllipticPoint::new(h(), Rat::zero()),
            EllipticPoint::new(Rat::zero(), h()),
            EllipticPoint::new(h(), h()),
        ]
    }

    pub fn coords(&self) -> (&Rat, &Rat) {
        (&self.x, &self.y)
    }
}

impl Serialize for EllipticPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let x = rat_to_pair(&self.x).map_err(S::Error::custom)?;
        let y = rat_to_pair(&self.y).map_err(S::Error::custom)?;
        [[x.0, x.1], [y.0, y.1]].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EllipticPoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = <[[i64; 2]; 2]>::deserialize(deserializer)?;
        EllipticPoint::from_pairs((raw[0][0], raw[0][1]), (raw[1][0], raw[1][1]))
            .map_err(D::Error::custom)
    }
}

/// Shape of the coarse moduli space for one group and rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ModuliSpace {
    /// weighted projective space of the given dimension
    ProjectiveSpace { dim: usize },
    /// quotient of the l-fold product of the curve by even sign flips and
    /// permutations
    WeylQuotient { rank: usize },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EllipticBundleSpec {
    pub group: ClassicalGroup,
    pub rank: u32,
    /// second Stiefel-Whitney class of the underlying bundle, +1 or -1;
    /// only meaningful for SO
    #[serde(default = "default_w2")]
    pub w2: i8,
    pub points: Vec<EllipticPoint>,
}

fn default_w2() -> i8 {
    1
}

fn validate_type(group: ClassicalGroup, rank: u32, w2: i8) -> Result<()> {
    if w2 != 1 && w2 != -1 {
        return Err(Error::InvalidInput(format!("w2 must be +1 or -1, got {w2}")));
    }
    if group != ClassicalGroup::SO && w2 == -1 {
        return Err(Error::InvalidInput(
            "the second invariant only distinguishes oriented bundles; use w2 = 1".into(),
        ));
    }
    match group {
        ClassicalGroup::SO => {
            if rank < 3 {
                return Err(Error::UnsupportedRank { group: "SO".into(), rank });
            }
        }
        ClassicalGroup::O => {
            if rank < 2 || rank % 2 != 0 {
                return Err(Error::UnsupportedRank { group: "O".into(), rank });
            }
        }
        ClassicalGroup::Sp => {
            if rank < 2 || rank % 2 != 0 {
                return Err(Error::UnsupportedRank { group: "Sp".into(), rank });
            }
        }
    }
    Ok(())
}

/// Number of line-bundle parameters for the given group, rank and (for SO)
/// topological type.
pub fn expected_points(group: ClassicalGroup, rank: u32, w2: i8) -> Result<usize> {
    validate_type(group, rank, w2)?;
    let l = (rank / 2) as usize;
    Ok(match group {
        ClassicalGroup::SO => {
            if rank % 2 == 1 {
                if w2 == 1 {
                    l
                } else {
                    l - 1
                }
            } else if w2 == 1 {
                l
            } else {
                l - 2
            }
        }
        ClassicalGroup::O => l,
        ClassicalGroup::Sp => l,
    })
}

pub fn moduli_description(group: ClassicalGroup, rank: u32, w2: i8) -> Result<ModuliSpace> {
    let n = expected_points(group, rank, w2)?;
    Ok(if group == ClassicalGroup::SO && rank % 2 == 0 && w2 == 1 {
        ModuliSpace::WeylQuotient { rank: n }
    } else {
        ModuliSpace::ProjectiveSpace { dim: n }
    })
}

fn uses_even_flips(spec: &EllipticBundleSpec) -> bool {
    spec.group == ClassicalGroup::SO && spec.rank % 2 == 0 && spec.w2 == 1
}

fn validate_spec(spec: &EllipticBundleSpec) -> Result<()> {
    let n = expected_points(spec.group, spec.rank, spec.w2)?;
    if spec.points.len() != n {
        return Err(Error::InvalidInput(format!(
            "{} rank {} with w2 = {} takes {} point(s), got {}",
            spec.group,
            spec.rank,
            spec.w2,
            n,
            spec.points.len()
        )));
    }
    if uses_even_flips(spec) && spec.points.len() > 16 {
        return Err(Error::InvalidInput(
            "even-flip canonicalization is limited to 16 points".into(),
        ));
    }
    Ok(())
}

fn sorted(mut points: Vec<EllipticPoint>) -> Vec<EllipticPoint> {
    points.sort();
    points
}

/// Smallest representative of the points under the allowed flips and
/// permutations. For every case except oriented even rank with trivial type,
/// each point may be negated independently, so the form is
/// sort(min(p, -p)). In the remaining case only an even number of sign
/// flips is allowed and the minimum runs over those patterns.
pub fn canonical_form(spec: &EllipticBundleSpec) -> Result<Vec<EllipticPoint>> {
    validate_spec(spec)?;
    if !uses_even_flips(spec) {
        return Ok(sorted(
            spec.points
                .iter()
                .map(|p| {
                    let n = p.neg();
                    if n < *p {
                        n
                    } else {
                        p.clone()
                    }
                })
                .collect(),
        ));
    }
    let l = spec.points.len();
    if l == 0 {
        return Ok(Vec::new());
    }
    let mut best: Option<Vec<EllipticPoint>> = None;
    for mask in 0u32..(1 << l) {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let candidate = sorted(
            spec.points
                .iter()
                .enumerate()
                .map(|(i, p)| if mask >> i & 1 == 1 { p.neg() } else { p.clone() })
                .collect(),
        );
        if best.as_ref().map_or(true, |b| candidate < *b) {
            best = Some(candidate);
        }
    }
    Ok(best.expect("l >= 1"))
}

/// Decide whether two specs define the same bundle. Comparing across
/// different groups, ranks or topological types is a type error, not `false`.
pub fn equivalent(a: &EllipticBundleSpec, b: &EllipticBundleSpec) -> Result<bool> {
    if a.group != b.group || a.rank != b.rank || a.w2 != b.w2 {
        return Err(Error::TypeMismatch(format!(
            "cannot compare {} rank {} (w2 = {}) with {} rank {} (w2 = {})",
            a.group, a.rank, a.w2, b.group, b.rank, b.w2
        )));
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Fiber size of the orientation-forgetting map at this bundle: 2 exactly
/// when the even-flip class and its odd-flip partner are distinct, which can
/// only happen for oriented even rank with trivial type.
pub fn forgetful_fiber_elliptic(spec: &EllipticBundleSpec) -> Result<u8> {
    validate_spec(spec)?;
    if !uses_even_flips(spec) || spec.points.is_empty() {
        return Ok(1);
    }
    let even = canonical_form(spec)?;
    let mut flipped = spec.clone();
    flipped.points[0] = flipped.points[0].neg();
    let odd = canonical_form(&flipped)?;
    Ok(if even == odd { 1 } else { 2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(xn: i64, xd: i64, yn: i64, yd: i64) -> EllipticPoint {
        EllipticPoint::new(rat(xn, xd), rat(yn, yd))
    }

    fn so_spec(rank: u32, w2: i8, points: Vec<EllipticPoint>) -> EllipticBundleSpec {
        EllipticBundleSpec { group: ClassicalGroup::SO, rank, w2, points }
    }

    #[test]
    fn coordinates_are_reduced_mod_one() {
        let p = pt(5, 2, -1, 3);
        let (x, y) = p.coords();
        assert_eq!(*x, rat(1, 2));
        assert_eq!(*y, rat(2, 3));
        assert_eq!(pt(1, 1, 0, 1), EllipticPoint::zero());
    }

    #[test]
    fn two_torsion_is_fixed_by_negation() {
        for p in EllipticPoint::two_torsion_points() {
            assert!(p.is_two_torsion());
            assert_eq!(p.neg(), p);
        }
        assert!(!pt(1, 3, 0, 1).is_two_torsion());
    }

    #[test]
    fn point_counts_by_group_and_type() {
        assert_eq!(expected_points(ClassicalGroup::SO, 7, 1).unwrap(), 3);
        assert_eq!(expected_points(ClassicalGroup::SO, 7, -1).unwrap(), 2);
        assert_eq!(expected_points(ClassicalGroup::SO, 8, 1).unwrap(), 4);
        assert_eq!(expected_points(ClassicalGroup::SO, 8, -1).unwrap(), 2);
        assert_eq!(expected_points(ClassicalGroup::Sp, 6, 1).unwrap(), 3);
        assert_eq!(expected_points(ClassicalGroup::O, 4, 1).unwrap(), 2);
        assert!(expected_points(ClassicalGroup::SO, 2, 1).is_err());
        assert!(expected_points(ClassicalGroup::Sp, 5, 1).is_err());
        assert!(expected_points(ClassicalGroup::Sp, 4, -1).is_err());
    }

    #[test]
    fn moduli_shapes() {
        assert_eq!(
            moduli_description(ClassicalGroup::SO, 7, 1).unwrap(),
            ModuliSpace::ProjectiveSpace { dim: 3 }
        );
        assert_eq!(
            moduli_description(ClassicalGroup::SO, 8, 1).unwrap(),
            ModuliSpace::WeylQuotient { rank: 4 }
        );
        assert_eq!(
            moduli_description(ClassicalGroup::SO, 8, -1).unwrap(),
            ModuliSpace::ProjectiveSpace { dim: 2 }
        );
        assert_eq!(
            moduli_description(ClassicalGroup::Sp, 4, 1).unwrap(),
            ModuliSpace::ProjectiveSpace { dim: 2 }
        );
    }

    #[test]
    fn canonical_form_is_flip_and_permutation_invariant() {
        let a = so_spec(7, 1, vec![pt(1, 3, 0, 1), pt(1, 5, 2, 5), pt(3, 4, 1, 2)]);
        let b = so_spec(
            7,
            1,
            vec![pt(-3, 4, -1, 2), pt(1, 3, 0, 1), pt(-1, 5, -2, 5)],
        );
        assert!(equivalent(&a, &b).unwrap());
        let c = so_spec(7, 1, vec![pt(1, 3, 0, 1), pt(1, 5, 2, 5), pt(3, 4, 1, 3)]);
        assert!(!equivalent(&a, &c).unwrap());
    }

    #[test]
    fn even_flip_classes_are_finer() {
        // generic points: a single flip changes the even-flip class but not
        // the everything-flips class
        let a = so_spec(4, 1, vec![pt(1, 5, 0, 1), pt(1, 3, 0, 1)]);
        let mut b = a.clone();
        b.points[0] = b.points[0].neg();
        assert!(!equivalent(&a, &b).unwrap());
        let mut both = a.clone();
        both.points[0] = both.points[0].neg();
        both.points[1] = both.points[1].neg();
        assert!(equivalent(&a, &both).unwrap());
        assert_eq!(forgetful_fiber_elliptic(&a).unwrap(), 2);
        // at two-torsion the flip acts trivially and the fiber collapses
        let t = so_spec(4, 1, vec![pt(1, 2, 0, 1), pt(0, 1, 1, 2)]);
        assert_eq!(forgetful_fiber_elliptic(&t).unwrap(), 1);
        // odd rank never sees the distinction
        let o = so_spec(7, 1, vec![pt(1, 5, 0, 1), pt(1, 3, 0, 1), pt(1, 7, 0, 1)]);
        assert_eq!(forgetful_fiber_elliptic(&o).unwrap(), 1);
    }

    #[test]
    fn type_mismatch_is_an_error() {
        let a = so_spec(7, 1, vec![pt(1, 3, 0, 1), pt(1, 5, 0, 1), pt(1, 7, 0, 1)]);
        let b = so_spec(7, -1, vec![pt(1, 3, 0, 1), pt(1, 5, 0, 1)]);
        assert!(matches!(equivalent(&a, &b), Err(Error::TypeMismatch(_))));
    }

    #[test]
    fn wrong_point_count_is_rejected() {
        let a = so_spec(7, 1, vec![pt(1, 3, 0, 1)]);
        assert!(canonical_form(&a).is_err());
    }

    #[test]
    fn spec_round_trips_through_json() {
        let a = so_spec(8, 1, vec![pt(1, 3, 0, 1), pt(1, 5, 2, 5), pt(0, 1, 0, 1), pt(1, 2, 1, 2)]);
        let text = serde_json::to_string(&a).unwrap();
        let back: EllipticBundleSpec = serde_json::from_str(&text).unwrap();
        assert!(equivalent(&a, &back).unwrap());
        // w2 defaults to +1 when missing
        let raw = r#"{"group":"Sp","rank":4,"points":[[[1,3],[0,1]],[[1,5],[0,1]]]}"#;
        let s: EllipticBundleSpec = serde_json::from_str(raw).unwrap();
        assert_eq!(s.w2, 1);
    }
}
