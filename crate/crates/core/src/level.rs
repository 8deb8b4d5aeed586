//! Shared breadth-first level machinery.
//!
//! A level is a flat buffer of members, each member being `colors`
//! consecutive `u128` class masks. Members are kept in canonical order:
//! ascending lexicographic order of their assignment strings (the colors of
//! elements `1, 2, ...` in sequence). Extension preserves that order for
//! free — children inherit the parent prefix and are emitted color-ascending
//! — so beam truncation can simply keep the first `beam_cap` members, and
//! parallel workers only ever concatenate block results in block order.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Parents per parallel work block.
const BLOCK_PARENTS: usize = 2048;

/// One extension step over a flat member buffer.
///
/// `admit(class_bits, new_point, k)` decides whether assigning `new_point`
/// the corresponding color keeps the child alive. Returns the child buffer
/// and whether a beam truncation occurred.
pub(crate) fn extend_members<F>(
    data: &[u128],
    colors: usize,
    new_point: u32,
    sizes: &[usize],
    admit: F,
    beam_cap: Option<usize>,
    max_level_bytes: u64,
) -> Result<(Vec<u128>, bool)>
where
    F: Fn(u128, u32, usize) -> bool + Sync,
{
    debug_assert_eq!(data.len() % colors, 0);
    if new_point > crate::coloring::MAX_ELEMENT {
        return Err(Error::CapacityExceeded {
            n: new_point + 1,
            max: crate::coloring::MAX_VERTICES,
        });
    }

    let extend_block = |block: &[u128]| -> Vec<u128> {
        let mut out = Vec::with_capacity(block.len() * 2);
        for parent in block.chunks_exact(colors) {
            for (c, &k) in sizes.iter().enumerate() {
                if admit(parent[c], new_point, k) {
                    let base = out.len();
                    out.extend_from_slice(parent);
                    out[base + c] |= 1u128 << new_point;
                }
            }
        }
        out
    };

    let block_len = BLOCK_PARENTS * colors;

    let (children, truncated) = match beam_cap {
        Some(cap) => {
            // Children arrive in canonical order, so once more than `cap`
            // have accumulated the rest can only be truncated anyway.
            let blocks: Vec<&[u128]> = data.chunks(block_len).collect();
            let batch = rayon::current_num_threads().max(1) * 4;
            let mut out: Vec<u128> = Vec::new();
            let mut truncated = false;
            let mut next = 0;
            while next < blocks.len() {
                let hi = (next + batch).min(blocks.len());
                let produced: Vec<Vec<u128>> = blocks[next..hi]
                    .par_iter()
                    .map(|b| extend_block(b))
                    .collect();
                for part in produced {
                    out.extend_from_slice(&part);
                }
                next = hi;
                if out.len() / colors > cap {
                    truncated = true;
                    break;
                }
            }
            if truncated {
                out.truncate(cap * colors);
            }
            (out, truncated)
        }
        None => {
            let parents = data.len() / colors;
            let worst_bytes = member_bytes(parents * colors, colors);
            if worst_bytes > max_level_bytes {
                let exact: usize = data
                    .par_chunks(block_len)
                    .map(|block| {
                        let mut survivors = 0usize;
                        for parent in block.chunks_exact(colors) {
                            for (c, &k) in sizes.iter().enumerate() {
                                if admit(parent[c], new_point, k) {
                                    survivors += 1;
                                }
                            }
                        }
                        survivors
                    })
                    .sum();
                let exact_bytes = member_bytes(exact, colors);
                if exact_bytes > max_level_bytes {
                    return Err(Error::LevelBudgetExceeded {
                        point: new_point,
                        members: exact,
                        bytes: exact_bytes,
                        budget: max_level_bytes,
                    });
                }
            }
            let produced: Vec<Vec<u128>> = data
                .par_chunks(block_len)
                .map(extend_block)
                .collect();
            let total: usize = produced.iter().map(Vec::len).sum();
            let mut out = Vec::with_capacity(total);
            for part in produced {
                out.extend_from_slice(&part);
            }
            (out, false)
        }
    };

    debug_assert!(
        children.len() / colors > 50_000 || is_canonically_sorted(&children, colors, new_point),
        "child level lost canonical order"
    );
    Ok((children, truncated))
}

/// Approximate peak footprint of a materialized level: the flat buffer plus
/// the transient per-block copies made while merging.
fn member_bytes(members: usize, colors: usize) -> u64 {
    2 * (members as u64) * (colors as u64) * 16
}

/// All `colors^points` colorings of the elements `1..=points`, in canonical
/// order. The starting buffer for both search recursions.
pub(crate) fn all_colorings(points: u32, colors: usize) -> Result<Vec<u128>> {
    const CAP: u128 = 1 << 28;
    let wanted = (colors as u128).checked_pow(points).unwrap_or(u128::MAX);
    if wanted > CAP {
        return Err(Error::LevelBudgetExceeded {
            point: points,
            members: wanted.min(usize::MAX as u128) as usize,
            bytes: wanted
                .saturating_mul(colors as u128 * 32)
                .min(u64::MAX as u128) as u64,
            budget: member_bytes(CAP as usize, colors),
        });
    }
    let members = wanted as usize;
    let mut data = Vec::with_capacity(members * colors);
    let mut assignment = vec![0usize; points as usize]; // 0-based colors
    loop {
        let base = data.len();
        data.resize(base + colors, 0u128);
        for (i, &c) in assignment.iter().enumerate() {
            data[base + c] |= 1u128 << (i as u32 + 1);
        }
        // odometer: rightmost element is least significant
        let mut pos = points as usize;
        loop {
            if pos == 0 {
                return Ok(data);
            }
            pos -= 1;
            assignment[pos] += 1;
            if assignment[pos] < colors {
                break;
            }
            assignment[pos] = 0;
        }
    }
}

/// Colors (1-based digits) of elements `1..=len` for one flat member.
pub(crate) fn assignment_digits(member: &[u128], len: u32) -> Vec<u8> {
    let mut digits = vec![0u8; len as usize];
    for (c, &bits) in member.iter().enumerate() {
        let mut rest = bits;
        while rest != 0 {
            let d = rest.trailing_zeros();
            rest &= rest - 1;
            digits[d as usize - 1] = c as u8 + 1;
        }
    }
    debug_assert!(digits.iter().all(|&d| d != 0));
    digits
}

/// Number of members distinct up to the given color permutations.
///
/// `perms[p][c-1]` is the new 1-based color for old color `c`; members whose
/// assignment strings map onto each other are counted once, represented by
/// the lexicographically least image.
pub(crate) fn orbit_count(data: &[u128], colors: usize, len: u32, perms: &[Vec<usize>]) -> u64 {
    let mut canon: std::collections::HashSet<Vec<u8>> = std::collections::HashSet::new();
    for member in data.chunks_exact(colors.max(1)) {
        let digits = assignment_digits(member, len);
        let least = perms
            .iter()
            .map(|perm| {
                digits
                    .iter()
                    .map(|&d| perm[d as usize - 1] as u8)
                    .collect::<Vec<u8>>()
            })
            .min()
            .unwrap_or(digits);
        canon.insert(least);
    }
    canon.len() as u64
}

pub(crate) fn is_canonically_sorted(data: &[u128], colors: usize, new_point: u32) -> bool {
    let members: Vec<&[u128]> = data.chunks_exact(colors).collect();
    members
        .windows(2)
        .all(|w| assignment_digits(w[0], new_point) < assignment_digits(w[1], new_point))
}

/// Runs `f` inside a dedicated pool of `jobs` threads when a hint is given.
pub(crate) fn run_with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) if n >= 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("worker pool")
            .install(f),
        _ => f(),
    }
}
