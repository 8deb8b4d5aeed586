//! Cross-validation of the difference-subset clique kernels against the
//! explicit-graph oracle, exhaustively on small graphs and sampled beyond.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ramsey_core::{clique, DifferenceColoring, DifferenceSet};

/// Every 2-coloring of every complete graph on up to 9 vertices: the subset
/// kernel and the vertex-enumeration oracle must agree for k = 3 and 4.
#[test]
fn exhaustive_equivalence_up_to_nine_vertices() {
    for n in 2u32..=9 {
        let diffs = n - 1;
        for mask in 0u32..(1 << diffs) {
            let class1: Vec<u32> = (1..=diffs).filter(|d| (mask >> (d - 1)) & 1 == 1).collect();
            let class2: Vec<u32> = (1..=diffs).filter(|d| (mask >> (d - 1)) & 1 == 0).collect();
            let coloring = DifferenceColoring::new(n, &[class1, class2]).unwrap();
            let graph = coloring.materialize();
            for k in [3usize, 4] {
                for color in 1..=2 {
                    let fast = clique::has_clique(&coloring.class(color), k);
                    let slow = graph.has_mono_clique(k, color);
                    assert_eq!(
                        fast, slow,
                        "n={n} mask={mask:b} color={color} k={k}: subset={fast} oracle={slow}"
                    );
                }
            }
        }
    }
}

/// Random colorings up to 20 vertices and 3 colors, clique sizes up to 5.
#[test]
fn sampled_equivalence_larger_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let n: u32 = rng.gen_range(2..=20);
        let colors: usize = rng.gen_range(1..=3);
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); colors];
        for d in 1..n {
            lists[rng.gen_range(0..colors)].push(d);
        }
        let coloring = DifferenceColoring::new(n, &lists).unwrap();
        let graph = coloring.materialize();
        let k: usize = rng.gen_range(2..=5);
        for color in 1..=colors {
            assert_eq!(
                clique::has_clique(&coloring.class(color), k),
                graph.has_mono_clique(k, color),
                "n={n} colors={colors} k={k} color={color} classes={lists:?}",
            );
        }
    }
}

/// On every subset of {1..12} that is still clique-free, adding the next
/// larger difference must flip the incremental test exactly when the full
/// test flips.
#[test]
fn incremental_matches_full_recheck() {
    for k in [3usize, 4, 5] {
        for mask in 0u32..(1 << 12) {
            let members: Vec<u32> = (1..=12).filter(|d| (mask >> (d - 1)) & 1 == 1).collect();
            let max = members.last().copied().unwrap_or(0);
            let d_set = DifferenceSet::from_members(13, members.iter().copied()).unwrap();
            if clique::has_clique(&d_set, k) {
                continue;
            }
            for new_diff in (max + 1)..=13 {
                let incremental = clique::creates_clique_with(&d_set, new_diff, k).unwrap();
                let mut extended = members.clone();
                extended.push(new_diff);
                let full = clique::has_clique(
                    &DifferenceSet::from_members(13, extended.iter().copied()).unwrap(),
                    k,
                );
                assert_eq!(
                    incremental, full,
                    "D={members:?} new={new_diff} k={k}: incremental={incremental} full={full}"
                );
            }
        }
    }
}

/// The canonical witness really is a difference-closed subset, and its
/// vertex form really is a monochromatic clique.
#[test]
fn witnesses_are_valid_cliques() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc11e);
    let mut found = 0usize;
    for _ in 0..500 {
        let n: u32 = rng.gen_range(4..=24);
        let members: Vec<u32> = (1..n).filter(|_| rng.gen_bool(0.5)).collect();
        let d_set = DifferenceSet::from_members(n - 1, members.iter().copied()).unwrap();
        let k: usize = rng.gen_range(3..=5);
        if let Some(witness) = clique::find_clique_witness(&d_set, k) {
            found += 1;
            assert_eq!(witness.len(), k - 1);
            for (i, &a) in witness.iter().enumerate() {
                assert!(d_set.contains(a));
                for &b in &witness[i + 1..] {
                    assert!(
                        d_set.contains(b - a),
                        "witness {witness:?} not closed: {} missing",
                        b - a
                    );
                }
            }
            let vertices = clique::witness_vertices(&witness);
            assert_eq!(vertices.len(), k);
            let class2: Vec<u32> = (1..n).filter(|d| !d_set.contains(*d)).collect();
            let coloring = DifferenceColoring::new(n, &[members.clone(), class2]).unwrap();
            for (i, &u) in vertices.iter().enumerate() {
                for &v in &vertices[i + 1..] {
                    assert_eq!(coloring.edge_color(u, v), 1);
                }
            }
        }
    }
    assert!(
        found > 50,
        "fuzz produced too few cliques ({found}) to be meaningful"
    );
}
