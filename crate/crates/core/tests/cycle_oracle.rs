//! Independent check of the cycle enumerator: brute-force all arrow words up
//! to the length bound, keep the ones that close up, and canonicalize by
//! taking the minimum over rotations by hand.

use quiver_invariants::quiver::{Quiver, Vertex, VertexKind};
use std::collections::BTreeSet;

fn quiver(vertices: &[&str], arrows: &[(u32, &str, &str)]) -> Quiver {
    Quiver::build(
        vertices
            .iter()
            .map(|n| Vertex { id: n.to_string(), kind: VertexKind::Plain })
            .collect(),
        arrows.iter().map(|(i, s, d)| (*i, s.to_string(), d.to_string())).collect(),
    )
    .unwrap()
}

/// Every word over the arrow alphabet, kept when consecutive arrows compose
/// and the word returns to its starting vertex; reduced by min-rotation.
fn brute_force_cycles(q: &Quiver, max_len: usize) -> BTreeSet<Vec<u32>> {
    let arrows = q.arrows();
    let mut found = BTreeSet::new();
    let mut stack: Vec<Vec<usize>> = (0..arrows.len()).map(|i| vec![i]).collect();
    while let Some(word) = stack.pop() {
        let first = &arrows[word[0]];
        let last = &arrows[*word.last().unwrap()];
        if last.dst == first.src {
            let ids: Vec<u32> = word.iter().map(|&i| arrows[i].id.0).collect();
            let min_rotation = (0..ids.len())
                .map(|r| {
                    let mut w = ids.clone();
                    w.rotate_left(r);
                    w
                })
                .min()
                .unwrap();
            found.insert(min_rotation);
        }
        if word.len() < max_len {
            for (i, a) in arrows.iter().enumerate() {
                if a.src == last.dst {
                    let mut next = word.clone();
                    next.push(i);
                    stack.push(next);
                }
            }
        }
    }
    found
}

fn enumerated(q: &Quiver, max_len: usize) -> BTreeSet<Vec<u32>> {
    q.cycles(max_len)
        .iter()
        .map(|c| c.word().iter().map(|id| id.0).collect())
        .collect()
}

#[test]
fn two_loops_match_brute_force() {
    let q = quiver(&["v"], &[(0, "v", "v"), (1, "v", "v")]);
    for max_len in 1..=5 {
        assert_eq!(enumerated(&q, max_len), brute_force_cycles(&q, max_len), "len {max_len}");
    }
}

#[test]
fn two_vertex_cycle_matches_brute_force() {
    let q = quiver(&["v", "w"], &[(0, "v", "w"), (1, "w", "v"), (2, "v", "v")]);
    for max_len in 1..=6 {
        assert_eq!(enumerated(&q, max_len), brute_force_cycles(&q, max_len), "len {max_len}");
    }
}

#[test]
fn three_vertex_multigraph_matches_brute_force() {
    let q = quiver(
        &["a", "b", "c"],
        &[
            (0, "a", "b"),
            (1, "b", "c"),
            (2, "c", "a"),
            (3, "b", "a"),
            (4, "a", "a"),
            (7, "c", "b"),
        ],
    );
    for max_len in 1..=5 {
        assert_eq!(enumerated(&q, max_len), brute_force_cycles(&q, max_len), "len {max_len}");
    }
}

#[test]
fn acyclic_quiver_has_no_cycles() {
    let q = quiver(&["s1", "s2"], &[(0, "s1", "s2")]);
    for max_len in 1..=8 {
        assert!(q.cycles(max_len).is_empty());
    }
}

#[test]
fn enumeration_is_sorted_by_length_then_word() {
    let q = quiver(&["v", "w"], &[(0, "v", "w"), (1, "w", "v"), (2, "v", "v")]);
    let cycles = q.cycles(5);
    let keys: Vec<(usize, Vec<u32>)> = cycles
        .iter()
        .map(|c| (c.len(), c.word().iter().map(|id| id.0).collect()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}
