//! Named example decompositions used by the test suite and the CLI.
//!
//! These are kept deliberately small: cycle enumeration grows fast with loop
//! counts, and the whole corpus is run through exact invariance checks.

use crate::decomposition::{DecompositionData, Summand, SummandKind};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub data: DecompositionData,
}

fn fixture(
    name: &'static str,
    description: &'static str,
    genus: u32,
    summands: Vec<Summand>,
) -> Fixture {
    Fixture { name, description, data: DecompositionData::new(genus, summands) }
}

pub fn all() -> Vec<Fixture> {
    vec![
        fixture(
            "trivial-O2-g2",
            "rank-2 trivial-type bundle at genus 2: one line summand with multiplicity 2",
            2,
            vec![Summand::orthogonal(1, 2)],
        ),
        fixture(
            "trivial-O3-g2",
            "rank-3 trivial-type bundle at genus 2: one line summand with multiplicity 3",
            2,
            vec![Summand::orthogonal(1, 3)],
        ),
        fixture(
            "trivial-O2-g3",
            "rank-2 trivial-type bundle at genus 3",
            3,
            vec![Summand::orthogonal(1, 2)],
        ),
        fixture(
            "two-orthogonal-g2",
            "two distinct stable line summands at genus 2",
            2,
            vec![Summand::orthogonal(1, 1), Summand::orthogonal(1, 1)],
        ),
        fixture(
            "orth-pair-g2",
            "stable orthogonal summands of ranks 1 and 2 at genus 2",
            2,
            vec![Summand::orthogonal(1, 1), Summand::orthogonal(2, 1)],
        ),
        fixture(
            "sympl-double-g2",
            "a rank-2 symplectic summand with multiplicity 2 at genus 2",
            2,
            vec![Summand::symplectic(2, 2)],
        ),
        fixture(
            "hyperbolic-sl2-g2",
            "a stable rank-2 summand with trivial determinant paired against its dual \
             at genus 2; two weight coordinates per side",
            2,
            vec![Summand {
                kind: SummandKind::DualPair,
                rank: 2,
                multiplicity: 1,
                h0_sym: 0,
                h0_alt: 1,
            }],
        ),
        fixture(
            "dual-pair-r1-g2",
            "a degree-zero line paired against its inverse at genus 2",
            2,
            vec![Summand::dual_pair(1, 1)],
        ),
        fixture(
            "so3-mixed-g2",
            "rank 3 at genus 2: a line summand plus a hyperbolic plane",
            2,
            vec![Summand::orthogonal(1, 1), Summand::dual_pair(1, 1)],
        ),
        fixture(
            "plain-stable-g3",
            "a single stable rank-2 summand with no self-duality at genus 3",
            3,
            vec![Summand::plain(2, 1)],
        ),
    ]
}

pub fn by_name(name: &str) -> Result<Fixture> {
    all().into_iter().find(|f| f.name.eq_ignore_ascii_case(name)).ok_or_else(|| {
        let names: Vec<&str> = all().iter().map(|f| f.name).collect();
        Error::InvalidInput(format!("unknown fixture {name:?}; available: {}", names.join(", ")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::from_decomposition;
    use std::collections::BTreeSet;

    #[test]
    fn corpus_is_valid_and_buildable() {
        let fixtures = all();
        assert!(fixtures.len() >= 8);
        let names: BTreeSet<&str> = fixtures.iter().map(|f| f.name).collect();
        assert_eq!(names.len(), fixtures.len(), "duplicate fixture names");
        for f in &fixtures {
            f.data.validate().unwrap_or_else(|e| panic!("{}: {e}", f.name));
            from_decomposition(&f.data).unwrap_or_else(|e| panic!("{}: {e}", f.name));
        }
    }

    #[test]
    fn corpus_covers_all_summand_kinds() {
        let kinds: BTreeSet<SummandKind> =
            all().iter().flat_map(|f| f.data.summands.iter().map(|s| s.kind)).collect();
        assert!(kinds.contains(&SummandKind::Orthogonal));
        assert!(kinds.contains(&SummandKind::Symplectic));
        assert!(kinds.contains(&SummandKind::DualPair));
        assert!(kinds.contains(&SummandKind::Plain));
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(by_name("sympl-double-g2").unwrap().data.genus, 2);
        assert_eq!(by_name("trivial-o2-g2").unwrap().name, "trivial-O2-g2");
        assert!(by_name("nonexistent").is_err());
    }
}
