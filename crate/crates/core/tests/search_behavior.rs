//! End-to-end behavior of the Ramsey level search: determinism, checkpoint
//! round-trips, soundness of reported witnesses, and the maximality
//! certificate.

use ramsey_core::{
    checkpoint, clique, search, CliqueTargets, DifferenceSet, SearchOptions, SearchStatus,
};

fn targets(sizes: &[usize]) -> CliqueTargets {
    CliqueTargets::new(sizes.to_vec()).unwrap()
}

/// Identical output regardless of the worker-thread hint.
#[test]
fn deterministic_across_jobs() {
    let t = targets(&[3, 5]);
    let base = search::search(&t, &SearchOptions::default()).unwrap();
    for jobs in [1usize, 2, 4] {
        let opts = SearchOptions {
            jobs: Some(jobs),
            ..Default::default()
        };
        let out = search::search(&t, &opts).unwrap();
        assert_eq!(out.value, base.value);
        assert_eq!(out.status, base.status);
        assert_eq!(out.orbit_count, base.orbit_count);
        assert_eq!(
            out.maximal.assignment_strings(),
            base.maximal.assignment_strings(),
            "jobs={jobs} changed the maximal set"
        );
    }
}

/// Stopping mid-run, checkpointing, rereading, and resuming changes nothing.
#[test]
fn checkpoint_round_trip_mid_run() {
    let t = targets(&[3, 5]);
    let opts = SearchOptions::default();
    let direct = search::search(&t, &opts).unwrap();

    let mut level = search::initial_level(&t).unwrap();
    for _ in 0..6 {
        level = search::extend_level(&level, &t, &opts).unwrap().level;
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mid.ck");
    checkpoint::write_ramsey(&path, &t, &level).unwrap();
    let (read_targets, read_level) = checkpoint::read_ramsey(&path).unwrap();
    assert_eq!(read_targets, t);
    assert_eq!(read_level, level);

    let resumed = search::resume(read_level, &t, &opts).unwrap();
    assert_eq!(resumed.value, direct.value);
    assert_eq!(
        resumed.maximal.assignment_strings(),
        direct.maximal.assignment_strings()
    );
    assert_eq!(resumed.orbit_count, direct.orbit_count);
}

/// A search run with a checkpoint path resumes to the same outcome from
/// whatever the file last held.
#[test]
fn checkpoint_file_written_during_search() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("live.ck");
    let t = targets(&[3, 4]);
    let opts = SearchOptions {
        checkpoint_path: Some(path.clone()),
        ..Default::default()
    };
    let direct = search::search(&t, &opts).unwrap();

    // the file holds the final nonempty level (written just before the
    // extension that emptied)
    let (read_targets, level) = checkpoint::read_ramsey(&path).unwrap();
    assert_eq!(read_targets, t);
    let resumed = search::resume(level, &t, &SearchOptions::default()).unwrap();
    assert_eq!(resumed.value, direct.value);
    assert_eq!(
        resumed.maximal.assignment_strings(),
        direct.maximal.assignment_strings()
    );
}

/// Every reported maximal coloring passes the full clique check in every
/// color, and a sample passes the explicit-graph oracle too.
#[test]
fn maximal_colorings_are_sound() {
    for sizes in [vec![3usize, 4], vec![3, 5], vec![4, 4], vec![3, 3, 3]] {
        let t = targets(&sizes);
        let out = search::search(&t, &SearchOptions::default()).unwrap();
        assert_eq!(out.maximal.vertex_count(), out.value - 1);
        for coloring in out.maximal.colorings() {
            for color in 1..=t.color_count() {
                assert!(
                    !clique::has_clique(&coloring.class(color), t.size_for(color)),
                    "targets {sizes:?}: maximal coloring has a K_{} in color {color}",
                    t.size_for(color),
                );
            }
        }
        // oracle spot-check on the canonical first and last members
        for idx in [0, out.maximal.len() - 1] {
            let coloring = out.maximal.coloring(idx);
            let graph = coloring.materialize();
            for color in 1..=t.color_count() {
                assert!(!graph.has_mono_clique(t.size_for(color), color));
            }
        }
    }
}

/// Exactness certificate: no maximal coloring extends by one difference in
/// any color, re-checked with the full (non-incremental) clique test.
#[test]
fn maximal_colorings_cannot_extend() {
    for sizes in [vec![3usize, 4], vec![3, 6], vec![4, 4]] {
        let t = targets(&sizes);
        let out = search::search(&t, &SearchOptions::default()).unwrap();
        assert_eq!(out.status, SearchStatus::Exact);
        let new_diff = out.maximal.vertex_count();
        for coloring in out.maximal.colorings() {
            for color in 1..=t.color_count() {
                let mut extended = coloring.class(color).to_vec();
                extended.push(new_diff);
                let grown = DifferenceSet::from_members(new_diff, extended).unwrap();
                assert!(
                    clique::has_clique(&grown, t.size_for(color)),
                    "targets {sizes:?}: coloring extends by {new_diff} in color {color}"
                );
            }
        }
    }
}

/// The computed table is monotone when a single target grows.
#[test]
fn computed_values_are_monotone() {
    let opts = SearchOptions::default();
    let value = |sizes: &[usize]| search::search(&targets(sizes), &opts).unwrap().value;

    let row3: Vec<u32> = [3usize, 4, 5, 6, 7]
        .iter()
        .map(|&l| value(&[3, l]))
        .collect();
    assert!(
        row3.windows(2).all(|w| w[0] <= w[1]),
        "row 3 not monotone: {row3:?}"
    );

    assert!(value(&[3, 4]) <= value(&[4, 4]));
    assert!(value(&[4, 4]) <= value(&[4, 5]));
    assert!(value(&[3, 5]) <= value(&[4, 5]));
    assert!(value(&[3, 3, 3]) <= value(&[3, 3, 4]));
}

/// Once any level is truncated the outcome stays a lower bound, the bound
/// never exceeds the exact value, and no orbit count is reported.
#[test]
fn capped_runs_report_lower_bounds_only() {
    let t = targets(&[3, 6]);
    let exact = search::search(&t, &SearchOptions::default()).unwrap();
    let opts = SearchOptions {
        beam_cap: Some(2),
        ..Default::default()
    };
    let capped = search::search(&t, &opts).unwrap();
    assert_eq!(capped.status, SearchStatus::LowerBound);
    assert_eq!(capped.orbit_count, None);
    assert!(capped.value <= exact.value);
    // the capped witnesses are still genuine colorings
    for coloring in capped.maximal.colorings() {
        for color in 1..=2 {
            assert!(!clique::has_clique(
                &coloring.class(color),
                t.size_for(color)
            ));
        }
    }
}
