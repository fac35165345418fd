//! Orbit-counting oracle for the genus-one canonical form: on tuples of
//! two-torsion points the full transformation group (permutations composed
//! with allowed sign-flip patterns) is enumerated explicitly, orbits are
//! counted by minimal representatives, and the count must match the number
//! of distinct canonical forms.

use quiver_invariants::elliptic::{canonical_form, equivalent, EllipticBundleSpec, EllipticPoint};
use quiver_invariants::local_models::ClassicalGroup;
use quiver_invariants::scalar::rat;
use std::collections::BTreeSet;

fn permutations(l: usize) -> Vec<Vec<usize>> {
    if l == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for p in permutations(l - 1) {
        for slot in 0..l {
            let mut q: Vec<usize> = p.iter().map(|&x| if x >= slot { x + 1 } else { x }).collect();
            q.insert(0, slot);
            out.push(q);
        }
    }
    out
}

/// Orbit count of (permutations x even sign flips) acting on l-tuples of
/// two-torsion points, by brute-force minimal orbit representative.
fn orbit_count_on_two_torsion(l: usize) -> usize {
    let torsion = EllipticPoint::two_torsion_points();
    let perms = permutations(l);
    let masks: Vec<u32> = (0..1u32 << l).filter(|m| m.count_ones() % 2 == 0).collect();

    let mut tuples: Vec<Vec<EllipticPoint>> = vec![Vec::new()];
    for _ in 0..l {
        tuples = tuples
            .iter()
            .flat_map(|t| {
                torsion.iter().map(move |p| {
                    let mut next = t.clone();
                    next.push(p.clone());
                    next
                })
            })
            .collect();
    }

    let mut reps = BTreeSet::new();
    for tuple in &tuples {
        let mut best: Option<Vec<EllipticPoint>> = None;
        for perm in &perms {
            for mask in &masks {
                let image: Vec<EllipticPoint> = (0..l)
                    .map(|i| {
                        let p = &tuple[perm[i]];
                        if mask >> i & 1 == 1 {
                            p.neg()
                        } else {
                            p.clone()
                        }
                    })
                    .collect();
                if best.as_ref().map_or(true, |b| image < *b) {
                    best = Some(image);
                }
            }
        }
        reps.insert(best.unwrap());
    }
    reps.len()
}

fn canonical_count_on_two_torsion(l: usize) -> usize {
    let torsion = EllipticPoint::two_torsion_points();
    let mut tuples: Vec<Vec<EllipticPoint>> = vec![Vec::new()];
    for _ in 0..l {
        tuples = tuples
            .iter()
            .flat_map(|t| {
                torsion.iter().map(move |p| {
                    let mut next = t.clone();
                    next.push(p.clone());
                    next
                })
            })
            .collect();
    }
    let forms: BTreeSet<Vec<String>> = tuples
        .iter()
        .map(|points| {
            let spec = EllipticBundleSpec {
                group: ClassicalGroup::SO,
                rank: 2 * l as u32,
                w2: 1,
                points: points.clone(),
            };
            canonical_form(&spec)
                .unwrap()
                .iter()
                .map(|p| format!("{:?}", p.coords()))
                .collect()
        })
        .collect();
    forms.len()
}

#[test]
fn burnside_counts_for_two_and_three_points() {
    assert_eq!(orbit_count_on_two_torsion(2), 10);
    assert_eq!(orbit_count_on_two_torsion(3), 20);
    assert_eq!(canonical_count_on_two_torsion(2), 10);
    assert_eq!(canonical_count_on_two_torsion(3), 20);
}

#[test]
fn canonical_form_is_idempotent() {
    let spec = EllipticBundleSpec {
        group: ClassicalGroup::SO,
        rank: 8,
        w2: 1,
        points: vec![
            EllipticPoint::new(rat(2, 3), rat(1, 7)),
            EllipticPoint::new(rat(4, 5), rat(0, 1)),
            EllipticPoint::new(rat(1, 2), rat(1, 2)),
            EllipticPoint::new(rat(5, 6), rat(3, 4)),
        ],
    };
    let once = canonical_form(&spec).unwrap();
    let again = canonical_form(&EllipticBundleSpec { points: once.clone(), ..spec }).unwrap();
    assert_eq!(once, again);
    let round = EllipticBundleSpec {
        group: ClassicalGroup::SO,
        rank: 8,
        w2: 1,
        points: again,
    };
    assert!(equivalent(&spec, &round).unwrap());
}
