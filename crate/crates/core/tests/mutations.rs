mod common;

use common::grid;
use crossing_core::{first_failure, generate_zero, ColoredDigraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every single-edge deletion of `g` must fail some check.
fn assert_deletions_detected(g: &ColoredDigraph, label: &str) {
    for e in 0..g.edges().len() {
        assert!(first_failure(&g.without_edge(e), false).is_some(), "{label}: deleting edge {:?}", g.edges()[e]);
    }
}

/// Insertions that keep every color class a union of paths: a line end to
/// a line start of the same color.
fn path_preserving_insertions(g: &ColoredDigraph) -> Vec<(usize, usize, usize)> {
    let n = g.colors();
    let len = g.vertex_count();
    let mut has_out = vec![false; len * n];
    let mut has_in = vec![false; len * n];
    for &(u, v, i) in g.edges() {
        has_out[u * n + i - 1] = true;
        has_in[v * n + i - 1] = true;
    }
    let mut out = Vec::new();
    for i in 1..=n {
        for u in (0..len).filter(|&u| !has_out[u * n + i - 1]) {
            for v in (0..len).filter(|&v| v != u && !has_in[v * n + i - 1]) {
                out.push((u, v, i));
            }
        }
    }
    out
}

#[test]
fn every_deletion_is_detected() {
    for n in 1..=3 {
        for c in grid(n, 2) {
            let g = generate_zero(&c).unwrap().to_digraph();
            assert_deletions_detected(&g, &format!("{c:?}"));
        }
    }
}

#[test]
fn every_insertion_is_detected_on_small_crystals() {
    let mut params = grid(3, 1);
    params.extend(grid(2, 2));
    params.push(vec![2, 1, 0]);
    params.push(vec![0, 2, 1]);
    for c in params {
        let g = generate_zero(&c).unwrap().to_digraph();
        let len = g.vertex_count();
        for u in 0..len {
            for v in 0..len {
                for i in 1..=g.colors() {
                    let mutant = g.with_edge((u, v, i));
                    assert!(first_failure(&mutant, false).is_some(), "{c:?}: inserting {u}->{v} color {i}");
                }
            }
        }
    }
}

#[test]
fn sampled_insertions_are_detected_on_larger_crystals() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for c in grid(3, 2) {
        let g = generate_zero(&c).unwrap().to_digraph();
        let mut candidates = path_preserving_insertions(&g);
        if candidates.len() > 400 {
            for p in 0..400 {
                let q = rng.gen_range(p..candidates.len());
                candidates.swap(p, q);
            }
            candidates.truncate(400);
        }
        for e in candidates {
            assert!(first_failure(&g.with_edge(e), false).is_some(), "{c:?}: inserting {e:?}");
        }
        for _ in 0..50 {
            let len = g.vertex_count();
            let e = (rng.gen_range(0..len), rng.gen_range(0..len), rng.gen_range(1..=3));
            assert!(first_failure(&g.with_edge(e), false).is_some(), "{c:?}: inserting {e:?}");
        }
    }
}

#[test]
fn color_permutations() {
    let k = generate_zero(&[1, 2, 1]).unwrap();
    // 1 <-> 2 breaks the adjacency pattern of the colors
    let swapped = k.recolor(|i| match i {
        1 => 2,
        2 => 1,
        i => i,
    });
    assert!(first_failure(&swapped.to_digraph(), false).is_some());
    // reversing all colors is a symmetry: the result is the crystal with reversed parameter
    let k = generate_zero(&[1, 2, 0]).unwrap();
    let reversed = k.recolor(|i| 4 - i);
    assert_eq!(first_failure(&reversed.to_digraph(), true), None);
    assert!(crossing_core::isomorphic(&reversed, &generate_zero(&[0, 2, 1]).unwrap()).unwrap());
}
