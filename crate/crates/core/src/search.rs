//! Level-synchronous enumeration of clique-avoiding difference colorings.
//!
//! The level for `j` vertices holds every difference coloring of `1..j-1`
//! whose color-`i` class avoids a monochromatic `K_{k_i}`, in canonical
//! (assignment-string) order. Extending all members by the new difference
//! `j` in every color, and keeping the children that stay clique-free,
//! either grows the level or empties it; the difference Ramsey number is one
//! more than the vertex count of the last nonempty level.

use std::path::PathBuf;

use crate::clique;
use crate::coloring::{CliqueTargets, DifferenceColoring};
use crate::error::Result;
use crate::level;

/// Default cap on the footprint of a single materialized level (2 GiB).
pub const DEFAULT_MAX_LEVEL_BYTES: u64 = 2 * 1024 * 1024 * 1024;

/// Tuning knobs shared by the Ramsey and Issai searches.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Truncate any level larger than this many colorings; the result is
    /// then only a certified lower bound.
    pub beam_cap: Option<usize>,
    /// Rewrite this file with the current level before every extension step.
    pub checkpoint_path: Option<PathBuf>,
    /// Worker-thread hint; `None` uses the global pool, `Some(1)` is serial.
    pub jobs: Option<usize>,
    /// Hard memory budget per level when no beam cap is set.
    pub max_level_bytes: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            beam_cap: None,
            checkpoint_path: None,
            jobs: None,
            max_level_bytes: DEFAULT_MAX_LEVEL_BYTES,
        }
    }
}

/// All surviving colorings on a fixed vertex count, canonically ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLevel {
    n: u32,
    colors: usize,
    data: Vec<u128>,
}

impl SearchLevel {
    pub(crate) fn from_raw(n: u32, colors: usize, data: Vec<u128>) -> Self {
        debug_assert_eq!(data.len() % colors, 0);
        Self { n, colors, data }
    }

    /// Assembles a level from explicit colorings, restoring canonical order.
    /// All members must share one vertex count and color count.
    pub fn from_colorings(colorings: &[DifferenceColoring]) -> crate::error::Result<Self> {
        let first = colorings.first().ok_or(crate::error::Error::NoTargets)?;
        let n = first.vertex_count();
        let colors = first.color_count();
        let mut members: Vec<&DifferenceColoring> = colorings.iter().collect();
        for c in &members {
            if c.vertex_count() != n {
                return Err(crate::error::Error::CapacityExceeded {
                    n: c.vertex_count(),
                    max: n,
                });
            }
            if c.color_count() != colors {
                return Err(crate::error::Error::ColorCountMismatch {
                    colors: c.color_count(),
                    targets: colors,
                });
            }
        }
        members.sort_by_key(|c| c.assignment_string());
        members.dedup_by_key(|c| c.assignment_string());
        let mut data = Vec::with_capacity(members.len() * colors);
        for c in members {
            data.extend_from_slice(c.raw_classes());
        }
        Ok(Self { n, colors, data })
    }

    /// Vertex count `j` of every member.
    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn color_count(&self) -> usize {
        self.colors
    }

    /// Number of colorings in the level.
    pub fn len(&self) -> usize {
        self.data.len() / self.colors
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Materializes member `idx` as a full coloring.
    pub fn coloring(&self, idx: usize) -> DifferenceColoring {
        let member = &self.data[idx * self.colors..(idx + 1) * self.colors];
        DifferenceColoring::from_raw(self.n, member.to_vec())
    }

    pub fn colorings(&self) -> impl Iterator<Item = DifferenceColoring> + '_ {
        (0..self.len()).map(|i| self.coloring(i))
    }

    /// Assignment strings of all members, in stored order.
    pub fn assignment_strings(&self) -> Vec<String> {
        self.colorings().map(|c| c.assignment_string()).collect()
    }

    pub(crate) fn raw(&self) -> &[u128] {
        &self.data
    }
}

/// Whether a search ran to exhaustion or was truncated along the way.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Exact,
    LowerBound,
}

/// Final result of a difference Ramsey search.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// `D(k_1,...,k_r)` when exact, else a certified lower bound for it.
    pub value: u32,
    /// The last nonempty level: every maximal witness coloring.
    pub maximal: SearchLevel,
    /// Maximal colorings up to target-preserving color permutation;
    /// populated only for exact, un-capped searches.
    pub orbit_count: Option<u64>,
    pub targets: CliqueTargets,
}

impl SearchOutcome {
    pub fn is_exact(&self) -> bool {
        self.status == SearchStatus::Exact
    }
}

/// Result of one extension step.
pub struct Extension {
    pub level: SearchLevel,
    /// True when the beam cap truncated the child level.
    pub truncated: bool,
}

/// The starting level: with `m` the smallest target, every coloring of the
/// differences `1..=m-2` survives trivially on `m - 1` vertices.
pub fn initial_level(targets: &CliqueTargets) -> Result<SearchLevel> {
    let m = targets.min_size() as u32;
    let colors = targets.color_count();
    let data = level::all_colorings(m - 2, colors)?;
    Ok(SearchLevel::from_raw(m - 1, colors, data))
}

/// Extends every coloring by the next difference in every color, keeping the
/// children whose classes stay clique-free.
pub fn extend_level(
    current: &SearchLevel,
    targets: &CliqueTargets,
    options: &SearchOptions,
) -> Result<Extension> {
    let new_diff = current.n;
    let (data, truncated) = level::extend_members(
        &current.data,
        current.colors,
        new_diff,
        targets.sizes(),
        |bits, d, k| !clique::creates_clique_raw(bits, d, k),
        options.beam_cap,
        options.max_level_bytes,
    )?;
    Ok(Extension {
        level: SearchLevel::from_raw(current.n + 1, current.colors, data),
        truncated,
    })
}

/// Runs the full search from the trivial starting level.
pub fn search(targets: &CliqueTargets, options: &SearchOptions) -> Result<SearchOutcome> {
    let start = initial_level(targets)?;
    resume(start, targets, options)
}

/// Runs the search from an existing level (typically a checkpoint).
pub fn resume(
    start: SearchLevel,
    targets: &CliqueTargets,
    options: &SearchOptions,
) -> Result<SearchOutcome> {
    level::run_with_jobs(options.jobs, || resume_inner(start, targets, options))
}

fn resume_inner(
    start: SearchLevel,
    targets: &CliqueTargets,
    options: &SearchOptions,
) -> Result<SearchOutcome> {
    let mut current = start;
    let mut capped = false;
    loop {
        if let Some(path) = &options.checkpoint_path {
            crate::checkpoint::write_ramsey(path, targets, &current)?;
        }
        let step = extend_level(&current, targets, options)?;
        if step.level.is_empty() {
            break;
        }
        capped |= step.truncated;
        current = step.level;
    }
    let status = if capped {
        SearchStatus::LowerBound
    } else {
        SearchStatus::Exact
    };
    let orbit_count = match status {
        SearchStatus::Exact => Some(count_orbits(&current, targets)),
        SearchStatus::LowerBound => None,
    };
    Ok(SearchOutcome {
        status,
        value: current.vertex_count() + 1,
        maximal: current,
        orbit_count,
        targets: targets.clone(),
    })
}

/// Number of distinct colorings up to color permutations that preserve the
/// target tuple (color reversal for diagonal targets, identity otherwise).
pub fn count_orbits(level: &SearchLevel, targets: &CliqueTargets) -> u64 {
    let perms = targets.symmetry_permutations();
    level::orbit_count(&level.data, level.colors, level.n - 1, &perms)
}
