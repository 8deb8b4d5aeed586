//! Issai numbers: generalized Schur numbers over integer colorings.
//!
//! A Schur `k`-tuple is `(x_1,...,x_k)` with `x_1 + ... + x_{k-1} = x_k`,
//! repetition allowed among the summands. `S(k_1,...,k_r)` is the least `S`
//! such that every `r`-coloring of `1..=S` has a monochromatic Schur
//! `k_i`-tuple in some color `i`. The search mirrors the Ramsey level
//! recursion: when the range grows from `n` to `n+1`, any new tuple must
//! have the fresh integer as its sum, so admissibility is a subset-sum test
//! against the extended color's class.

use crate::coloring::{BitIter, CliqueTargets, DifferenceColoring, MAX_COLORS, MAX_ELEMENT};
use crate::error::{Error, Result};
use crate::level;
use crate::search::{SearchOptions, SearchOutcome, SearchStatus};

/// An assignment of every integer in `1..=n` to one of `r` colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerColoring {
    n: u32,
    classes: Vec<u128>,
}

impl IntegerColoring {
    /// Builds a coloring from one integer list per color, validating that
    /// the lists partition `1..=n` exactly.
    pub fn new(n: u32, class_lists: &[Vec<u32>]) -> Result<Self> {
        if n == 0 || n > MAX_ELEMENT {
            return Err(Error::CapacityExceeded {
                n,
                max: MAX_ELEMENT,
            });
        }
        if class_lists.is_empty() {
            return Err(Error::NoTargets);
        }
        if class_lists.len() > MAX_COLORS {
            return Err(Error::TooManyColors {
                colors: class_lists.len(),
                max: MAX_COLORS,
            });
        }
        let mut classes = vec![0u128; class_lists.len()];
        let mut seen: u128 = 0;
        for (ci, list) in class_lists.iter().enumerate() {
            for &x in list {
                if x == 0 || x > n {
                    return Err(Error::OutOfRangeElement {
                        what: "integer",
                        value: x,
                        max: n,
                    });
                }
                let bit = 1u128 << x;
                if seen & bit != 0 {
                    return Err(Error::DuplicateElement {
                        what: "integer",
                        value: x,
                    });
                }
                seen |= bit;
                classes[ci] |= bit;
            }
        }
        let missing = !seen & crate::coloring::domain_mask(n);
        if missing != 0 {
            return Err(Error::MissingElement {
                what: "integer",
                value: missing.trailing_zeros(),
            });
        }
        Ok(Self { n, classes })
    }

    pub(crate) fn from_raw(n: u32, classes: Vec<u128>) -> Self {
        Self { n, classes }
    }

    /// Top of the colored range.
    pub fn range_top(&self) -> u32 {
        self.n
    }

    pub fn color_count(&self) -> usize {
        self.classes.len()
    }

    /// Members of a 1-based color, increasing.
    pub fn class_members(&self, color: usize) -> Vec<u32> {
        BitIter(self.classes[color - 1]).collect()
    }

    pub fn contains(&self, color: usize, x: u32) -> bool {
        x >= 1 && x <= self.n && (self.classes[color - 1] >> x) & 1 == 1
    }

    /// 1-based color of integer `x`.
    pub fn color_of(&self, x: u32) -> usize {
        debug_assert!(x >= 1 && x <= self.n);
        for (ci, &bits) in self.classes.iter().enumerate() {
            if (bits >> x) & 1 == 1 {
                return ci + 1;
            }
        }
        unreachable!("integer {x} is uncolored");
    }

    /// Colors of `1..=n` as digit characters.
    pub fn assignment_string(&self) -> String {
        (1..=self.n)
            .map(|x| char::from_digit(self.color_of(x) as u32, 10).unwrap())
            .collect()
    }
}

/// A monochromatic Schur tuple: the summands (nondecreasing), then their sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurWitness {
    entries: Vec<u32>,
    color: usize,
}

impl SchurWitness {
    /// Validates the sum identity and summand ordering.
    pub fn new(entries: Vec<u32>, color: usize) -> Result<Self> {
        if !is_schur_tuple(&entries) {
            return Err(Error::BadCliqueVertices {
                reason: format!("{entries:?} is not a Schur tuple"),
            });
        }
        if entries[..entries.len() - 1].windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::BadCliqueVertices {
                reason: format!("summands of {entries:?} are not nondecreasing"),
            });
        }
        Ok(Self { entries, color })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn color(&self) -> usize {
        self.color
    }

    /// `(x1,x2,...,xk)` rendering for reports and error messages.
    pub fn to_tuple_string(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// True iff the first `len - 1` entries sum to the last.
pub fn is_schur_tuple(entries: &[u32]) -> bool {
    if entries.len() < 2 || entries.contains(&0) {
        return false;
    }
    let (last, summands) = entries.split_last().expect("len >= 2");
    summands.iter().map(|&x| x as u64).sum::<u64>() == *last as u64
}

/// Finds the least monochromatic Schur tuple of the coloring, scanning every
/// color against its target size. Ties between colors are broken by entry
/// order, then color index.
pub fn find_mono_schur_tuple(
    c: &IntegerColoring,
    targets: &CliqueTargets,
) -> Result<Option<SchurWitness>> {
    if targets.color_count() != c.color_count() {
        return Err(Error::ColorCountMismatch {
            colors: c.color_count(),
            targets: targets.color_count(),
        });
    }
    let mut best: Option<SchurWitness> = None;
    for color in 1..=c.color_count() {
        let k = targets.size_for(color);
        if let Some(candidate) = find_schur_tuple_in_color(c, color, k) {
            let better = match &best {
                None => true,
                Some(b) => candidate.entries < b.entries,
            };
            if better {
                best = Some(candidate);
            }
        }
    }
    Ok(best)
}

/// Least Schur `k`-tuple lying entirely in one color class, if any.
pub fn find_schur_tuple_in_color(
    c: &IntegerColoring,
    color: usize,
    k: usize,
) -> Option<SchurWitness> {
    smallest_tuple_in_class(c.classes[color - 1], c.n, k)
        .map(|entries| SchurWitness { entries, color })
}

/// Lexicographically least `k`-tuple with all entries in `bits`: nondecreasing
/// summands chosen ascending, first complete tuple wins.
fn smallest_tuple_in_class(bits: u128, n: u32, k: usize) -> Option<Vec<u32>> {
    let mut stack = Vec::with_capacity(k);
    if tuple_search(bits, n, k - 1, 1, 0, &mut stack) {
        let sum = stack.iter().sum::<u32>();
        stack.push(sum);
        Some(stack)
    } else {
        None
    }
}

fn tuple_search(
    bits: u128,
    n: u32,
    need: usize,
    min_elem: u32,
    sum: u32,
    stack: &mut Vec<u32>,
) -> bool {
    if need == 0 {
        return sum >= 1 && (bits >> sum) & 1 == 1;
    }
    let mut x = min_elem;
    // all remaining summands are >= x, so the final sum is at least
    // sum + x * need; stop once that passes n
    while sum + x * (need as u32) <= n {
        if (bits >> x) & 1 == 1 {
            stack.push(x);
            if tuple_search(bits, n, need - 1, x, sum + x, stack) {
                return true;
            }
            stack.pop();
        }
        x += 1;
    }
    false
}

/// True iff some nondecreasing choice of `k - 1` members of `bits` (repeats
/// allowed) sums to `target`. The incremental admissibility test.
pub(crate) fn sum_tuple_exists(bits: u128, target: u32, k: usize) -> bool {
    if k == 3 {
        // pair x + y = target with both ends in the class
        return bits & (bits.reverse_bits() >> (127 - target)) != 0;
    }
    sum_search(bits, target, k - 1, 1)
}

fn sum_search(bits: u128, remaining: u32, need: usize, min_elem: u32) -> bool {
    if need == 1 {
        return remaining >= min_elem && (bits >> remaining) & 1 == 1;
    }
    let mut x = min_elem;
    while x * (need as u32) <= remaining {
        if (bits >> x) & 1 == 1 && sum_search(bits, remaining - x, need - 1, x) {
            return true;
        }
        x += 1;
    }
    false
}

/// All tuple-free colorings of `1..=top`, canonically ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IssaiLevel {
    top: u32,
    colors: usize,
    data: Vec<u128>,
}

impl IssaiLevel {
    pub(crate) fn from_raw(top: u32, colors: usize, data: Vec<u128>) -> Self {
        debug_assert_eq!(data.len() % colors, 0);
        Self { top, colors, data }
    }

    /// Assembles a level from explicit colorings, restoring canonical order.
    /// All members must share one range top and color count.
    pub fn from_colorings(colorings: &[IntegerColoring]) -> Result<Self> {
        let first = colorings.first().ok_or(Error::NoTargets)?;
        let top = first.range_top();
        let colors = first.color_count();
        let mut members: Vec<&IntegerColoring> = colorings.iter().collect();
        for c in &members {
            if c.range_top() != top {
                return Err(Error::CapacityExceeded {
                    n: c.range_top(),
                    max: top,
                });
            }
            if c.color_count() != colors {
                return Err(Error::ColorCountMismatch {
                    colors: c.color_count(),
                    targets: colors,
                });
            }
        }
        members.sort_by_key(|c| c.assignment_string());
        members.dedup_by_key(|c| c.assignment_string());
        let mut data = Vec::with_capacity(members.len() * colors);
        for c in members {
            data.extend_from_slice(&c.classes);
        }
        Ok(Self { top, colors, data })
    }

    /// Top of the colored range for every member.
    pub fn top(&self) -> u32 {
        self.top
    }

    pub fn color_count(&self) -> usize {
        self.colors
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.colors
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn coloring(&self, idx: usize) -> IntegerColoring {
        let member = &self.data[idx * self.colors..(idx + 1) * self.colors];
        IntegerColoring::from_raw(self.top, member.to_vec())
    }

    pub fn colorings(&self) -> impl Iterator<Item = IntegerColoring> + '_ {
        (0..self.len()).map(|i| self.coloring(i))
    }

    pub fn assignment_strings(&self) -> Vec<String> {
        self.colorings().map(|c| c.assignment_string()).collect()
    }

    pub(crate) fn raw(&self) -> &[u128] {
        &self.data
    }
}

/// Final result of an Issai search.
#[derive(Clone, Debug)]
pub struct IssaiOutcome {
    pub status: SearchStatus,
    /// `S(k_1,...,k_r)` when exact, else a certified lower bound for it.
    pub value: u32,
    /// The last nonempty level: every maximal tuple-free coloring.
    pub maximal: IssaiLevel,
    /// Maximal colorings up to target-preserving color permutation.
    pub orbit_count: Option<u64>,
    pub targets: CliqueTargets,
}

impl IssaiOutcome {
    pub fn is_exact(&self) -> bool {
        self.status == SearchStatus::Exact
    }
}

pub struct IssaiExtension {
    pub level: IssaiLevel,
    pub truncated: bool,
}

/// Starting level: every coloring of `1..=m-2` is trivially tuple-free,
/// since a Schur `k`-tuple needs a sum of at least `k - 1 >= m - 1`.
pub fn initial_issai_level(targets: &CliqueTargets) -> Result<IssaiLevel> {
    let m = targets.min_size() as u32;
    let colors = targets.color_count();
    let data = level::all_colorings(m - 2, colors)?;
    Ok(IssaiLevel::from_raw(m - 2, colors, data))
}

/// Extends every coloring by the integer `top + 1` in every color, keeping
/// children that admit no tuple summing to the new integer.
pub fn extend_issai_level(
    current: &IssaiLevel,
    targets: &CliqueTargets,
    options: &SearchOptions,
) -> Result<IssaiExtension> {
    let new_int = current.top + 1;
    let (data, truncated) = level::extend_members(
        &current.data,
        current.colors,
        new_int,
        targets.sizes(),
        |bits, t, k| !sum_tuple_exists(bits, t, k),
        options.beam_cap,
        options.max_level_bytes,
    )?;
    Ok(IssaiExtension {
        level: IssaiLevel::from_raw(new_int, current.colors, data),
        truncated,
    })
}

/// Exhaustive Issai-number search.
pub fn issai_search(targets: &CliqueTargets, options: &SearchOptions) -> Result<IssaiOutcome> {
    let start = initial_issai_level(targets)?;
    resume_issai(start, targets, options)
}

/// Runs the Issai search from an existing level (typically a checkpoint).
pub fn resume_issai(
    start: IssaiLevel,
    targets: &CliqueTargets,
    options: &SearchOptions,
) -> Result<IssaiOutcome> {
    level::run_with_jobs(options.jobs, || resume_issai_inner(start, targets, options))
}

fn resume_issai_inner(
    start: IssaiLevel,
    targets: &CliqueTargets,
    options: &SearchOptions,
) -> Result<IssaiOutcome> {
    let mut current = start;
    let mut capped = false;
    loop {
        if let Some(path) = &options.checkpoint_path {
            crate::checkpoint::write_issai(path, targets, &current)?;
        }
        let step = extend_issai_level(&current, targets, options)?;
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
        SearchStatus::Exact => {
            let perms = targets.symmetry_permutations();
            Some(level::orbit_count(
                &current.data,
                current.colors,
                current.top,
                &perms,
            ))
        }
        SearchStatus::LowerBound => None,
    };
    Ok(IssaiOutcome {
        status,
        value: current.top() + 1,
        maximal: current,
        orbit_count,
        targets: targets.clone(),
    })
}

/// Pulls a monochromatic Schur tuple out of a monochromatic clique of a
/// difference coloring: with vertices `v_0 < ... < v_{k-1}` and
/// `d_i = v_i - v_0`, the first gap chain `d_1, d_2-d_1, ..., d_{k-1}-d_{k-2}`
/// sums to `d_{k-1}`, and every entry is a difference of the clique's color.
pub fn extract_schur_tuple(
    c: &DifferenceColoring,
    clique_vertices: &[u32],
) -> Result<SchurWitness> {
    let mut vs = clique_vertices.to_vec();
    vs.sort_unstable();
    if vs.len() < 2 {
        return Err(Error::BadCliqueVertices {
            reason: format!("need at least 2 vertices, got {}", vs.len()),
        });
    }
    if vs.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::BadCliqueVertices {
            reason: "vertices repeat".into(),
        });
    }
    if vs[0] < 1 || *vs.last().expect("nonempty") > c.vertex_count() {
        return Err(Error::BadCliqueVertices {
            reason: format!("vertices must lie in 1..={}, got {vs:?}", c.vertex_count()),
        });
    }
    let color = c.edge_color(vs[0], vs[1]);
    for i in 0..vs.len() {
        for j in (i + 1)..vs.len() {
            let found = c.edge_color(vs[i], vs[j]);
            if found != color {
                return Err(Error::NotMonochromatic {
                    a: vs[i],
                    b: vs[j],
                    expected: color,
                    found,
                });
            }
        }
    }
    let diffs: Vec<u32> = vs[1..].iter().map(|&v| v - vs[0]).collect();
    let mut entries = Vec::with_capacity(diffs.len() + 1);
    entries.push(diffs[0]);
    for w in diffs.windows(2) {
        entries.push(w[1] - w[0]);
    }
    entries.sort_unstable();
    entries.push(*diffs.last().expect("nonempty"));
    SchurWitness::new(entries, color)
}

/// The bound `S(k_1,...,k_r) <= D(k_1,...,k_r) - 1`, checkable once both
/// engines have run the same exact targets.
pub fn lemma2_bound(ramsey: &SearchOutcome, issai: &IssaiOutcome) -> Result<bool> {
    if !ramsey.is_exact() || !issai.is_exact() || ramsey.targets != issai.targets {
        return Err(Error::IncomparableOutcomes);
    }
    Ok(issai.value < ramsey.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn targets(sizes: &[usize]) -> CliqueTargets {
        CliqueTargets::new(sizes.to_vec()).unwrap()
    }

    #[test]
    fn schur_tuple_predicate() {
        assert!(is_schur_tuple(&[1, 3, 5, 9]));
        assert!(is_schur_tuple(&[1, 1, 2]));
        assert!(!is_schur_tuple(&[2, 3, 4]));
        assert!(!is_schur_tuple(&[3]));
        assert!(!is_schur_tuple(&[0, 1, 1]));
    }

    #[test]
    fn integer_coloring_validation() {
        let c = IntegerColoring::new(6, &[vec![1, 6], vec![2, 3, 4, 5]]).unwrap();
        assert_eq!(c.color_of(6), 1);
        assert_eq!(c.assignment_string(), "122221");
        assert!(IntegerColoring::new(6, &[vec![1, 6], vec![2, 3, 4]]).is_err());
        assert!(IntegerColoring::new(6, &[vec![1, 6, 2], vec![2, 3, 4, 5]]).is_err());
        assert!(IntegerColoring::new(6, &[vec![1, 6, 7], vec![2, 3, 4, 5]]).is_err());
    }

    #[test]
    fn conjecture2_counterexample_coloring() {
        // red {1,3,5,9} has a Schur 4-tuple but no Schur triple
        let c = IntegerColoring::new(9, &[vec![1, 3, 5, 9], vec![2, 4, 6, 7, 8]]).unwrap();

        let w = find_mono_schur_tuple(&c, &targets(&[4, 9]))
            .unwrap()
            .unwrap();
        // lex-least red 4-tuple is (1,1,1,3); (1,3,5,9) is in there too
        assert_eq!(w.entries(), &[1, 1, 1, 3]);
        assert_eq!(w.color(), 1);
        assert!(is_schur_tuple(&[1, 3, 5, 9]));
        assert!([1, 3, 5, 9].iter().all(|&x| c.contains(1, x)));

        // with a triple target on red, nothing red turns up; blue admits
        // plenty (2+2=4), so restrict attention to red by inspection
        assert!(smallest_tuple_in_class(c.classes[0], 9, 3).is_none());
    }

    #[test]
    fn exceptional_s34_coloring_is_tuple_free() {
        let c = IntegerColoring::new(6, &[vec![1, 6], vec![2, 3, 4, 5]]).unwrap();
        assert_eq!(find_mono_schur_tuple(&c, &targets(&[3, 4])).unwrap(), None);
    }

    #[test]
    fn find_tuple_respects_color_count() {
        let c = IntegerColoring::new(4, &[vec![1, 2, 3, 4]]).unwrap();
        assert!(find_mono_schur_tuple(&c, &targets(&[3, 3])).is_err());
    }

    #[test]
    fn small_issai_values() {
        let opts = SearchOptions::default();
        let s33 = issai_search(&targets(&[3, 3]), &opts).unwrap();
        assert_eq!(s33.value, 5);
        assert!(s33.is_exact());

        let s34 = issai_search(&targets(&[3, 4]), &opts).unwrap();
        assert_eq!(s34.value, 7);
        // the paper-listed 6-witness red={1,6} must be among the maximal set
        assert!(s34
            .maximal
            .assignment_strings()
            .contains(&"122221".to_string()));
    }

    #[test]
    fn extraction_examples() {
        // all differences one color
        let c = DifferenceColoring::new(8, &[vec![1, 2, 3, 4, 5, 6, 7]]).unwrap();
        let w = extract_schur_tuple(&c, &[1, 2, 4]).unwrap();
        assert_eq!(w.entries(), &[1, 2, 3]);

        let c8 = DifferenceColoring::new(8, &[(1..=7).collect::<Vec<u32>>()]).unwrap();
        let w = extract_schur_tuple(&c8, &[1, 2, 4, 8]).unwrap();
        assert_eq!(w.entries(), &[1, 2, 4, 7]);

        // order of the input list must not matter
        let w = extract_schur_tuple(&c8, &[8, 1, 4, 2]).unwrap();
        assert_eq!(w.entries(), &[1, 2, 4, 7]);
    }

    #[test]
    fn extraction_rejects_non_monochromatic() {
        // difference 3 colored differently from 1 and 2
        let c = DifferenceColoring::new(5, &[vec![1, 2, 4], vec![3]]).unwrap();
        let err = extract_schur_tuple(&c, &[1, 2, 4]).unwrap_err();
        assert!(matches!(err, Error::NotMonochromatic { a: 1, b: 4, .. }));

        assert!(extract_schur_tuple(&c, &[2]).is_err());
        assert!(extract_schur_tuple(&c, &[2, 2, 3]).is_err());
        assert!(extract_schur_tuple(&c, &[2, 9]).is_err());
    }

    #[test]
    fn incremental_sum_check() {
        // class {1,4}: 1+4 = 5 exists, 1+1 = 2 misses 2
        let bits = (1u128 << 1) | (1u128 << 4);
        assert!(sum_tuple_exists(bits, 5, 3));
        assert!(!sum_tuple_exists(bits, 6, 3));
        assert!(sum_tuple_exists(bits, 2, 3)); // 1 + 1
                                               // 4-tuples: 1+1+4 = 6, 1+4+4 = 9
        assert!(sum_tuple_exists(bits, 6, 4));
        assert!(sum_tuple_exists(bits, 9, 4));
        assert!(!sum_tuple_exists(bits, 7, 4));
    }
}
