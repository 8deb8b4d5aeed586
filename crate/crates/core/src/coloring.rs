//! Difference sets and difference colorings of complete graphs.
//!
//! A difference coloring assigns a color to every difference `1..n-1`; the
//! edge `{i,j}` of the complete graph on vertices `1..n` then carries the
//! color of `|j-i|`. Color classes are stored as fixed-width bit sets, which
//! keeps membership tests and the clique kernels branch-free.

use crate::error::{Error, Result};

/// Hard cap on vertex counts; differences then fit in the low 128 bits.
pub const MAX_VERTICES: u32 = 128;

/// Largest difference (or integer, for Issai colorings) a bit set can hold.
pub const MAX_ELEMENT: u32 = MAX_VERTICES - 1;

/// Colors are written as single digits in assignment strings and files.
pub const MAX_COLORS: usize = 9;

/// The tuple of forbidden monochromatic clique sizes, one per color.
///
/// Color indices are 1-based throughout, matching the `Color 1:`/`Color 2:`
/// convention of the coloring files.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTargets {
    sizes: Vec<usize>,
}

impl CliqueTargets {
    /// Validates and wraps a target tuple. Every size must be at least 3.
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::NoTargets);
        }
        if sizes.len() > MAX_COLORS {
            return Err(Error::TooManyColors {
                colors: sizes.len(),
                max: MAX_COLORS,
            });
        }
        for (i, &k) in sizes.iter().enumerate() {
            if k < 3 {
                return Err(Error::CliqueTargetTooSmall {
                    index: i + 1,
                    size: k,
                });
            }
        }
        Ok(Self { sizes })
    }

    /// Number of colors `r`.
    pub fn color_count(&self) -> usize {
        self.sizes.len()
    }

    /// Forbidden clique size for 1-based `color`.
    pub fn size_for(&self, color: usize) -> usize {
        self.sizes[color - 1]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Smallest target, the `m` from which the search level recursion starts.
    pub fn min_size(&self) -> usize {
        *self.sizes.iter().min().expect("targets nonempty")
    }

    /// All color permutations that map the target tuple onto itself.
    ///
    /// `perm[c-1]` is the new 1-based color for old color `c`. Only colors
    /// with equal targets may trade places, so for pairwise-distinct targets
    /// this is just the identity.
    pub fn symmetry_permutations(&self) -> Vec<Vec<usize>> {
        let r = self.sizes.len();
        let mut perms = Vec::new();
        let mut current: Vec<usize> = (1..=r).collect();
        self.fill_permutations(&mut current, 0, &mut perms);
        perms
    }

    fn fill_permutations(&self, current: &mut Vec<usize>, pos: usize, out: &mut Vec<Vec<usize>>) {
        let r = self.sizes.len();
        if pos == r {
            out.push(current.clone());
            return;
        }
        for cand in 1..=r {
            if current[..pos].contains(&cand) {
                continue;
            }
            if self.sizes[cand - 1] != self.sizes[pos] {
                continue;
            }
            current[pos] = cand;
            self.fill_permutations(current, pos + 1, out);
        }
        // restore a placeholder so `contains` above stays correct
        current[pos] = 0;
    }

    /// `targets=3,3,6` style rendering used by checkpoint and results files.
    pub fn to_compact_string(&self) -> String {
        self.sizes
            .iter()
            .map(|k| k.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl std::fmt::Display for CliqueTargets {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_compact_string())
    }
}

/// One color class of a difference coloring: a set of differences in
/// `1..=max_diff`, stored as a 128-bit mask (bit `d` set iff `d` is a member).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DifferenceSet {
    bits: u128,
    max_diff: u32,
}

impl DifferenceSet {
    /// Empty set over the domain `1..=max_diff`.
    pub fn empty(max_diff: u32) -> Result<Self> {
        if max_diff > MAX_ELEMENT {
            return Err(Error::CapacityExceeded {
                n: max_diff,
                max: MAX_ELEMENT,
            });
        }
        Ok(Self { bits: 0, max_diff })
    }

    /// Builds a set from explicit members, rejecting out-of-range values.
    pub fn from_members<I: IntoIterator<Item = u32>>(max_diff: u32, members: I) -> Result<Self> {
        let mut set = Self::empty(max_diff)?;
        for d in members {
            if d == 0 || d > max_diff {
                return Err(Error::OutOfRangeElement {
                    what: "difference",
                    value: d,
                    max: max_diff,
                });
            }
            set.bits |= 1u128 << d;
        }
        Ok(set)
    }

    pub(crate) fn from_bits(bits: u128, max_diff: u32) -> Self {
        debug_assert_eq!(bits & !domain_mask(max_diff), 0);
        Self { bits, max_diff }
    }

    pub fn contains(&self, d: u32) -> bool {
        d >= 1 && d <= self.max_diff && (self.bits >> d) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn max_diff(&self) -> u32 {
        self.max_diff
    }

    /// Largest member, or `None` when empty.
    pub fn max_member(&self) -> Option<u32> {
        if self.bits == 0 {
            None
        } else {
            Some(127 - self.bits.leading_zeros())
        }
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        BitIter(self.bits)
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub(crate) fn bits(&self) -> u128 {
        self.bits
    }
}

impl std::fmt::Display for DifferenceSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) struct BitIter(pub u128);

impl Iterator for BitIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let d = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(d)
    }
}

pub(crate) fn domain_mask(max_element: u32) -> u128 {
    if max_element >= 127 {
        !1u128
    } else {
        (!1u128) & ((1u128 << (max_element + 1)) - 1)
    }
}

/// A full assignment of colors to the differences `1..n-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceColoring {
    n: u32,
    classes: Vec<u128>,
}

impl DifferenceColoring {
    /// Builds a coloring from one difference list per color, validating that
    /// the lists partition `1..n-1` exactly.
    pub fn new(n: u32, class_lists: &[Vec<u32>]) -> Result<Self> {
        check_vertex_count(n)?;
        if class_lists.is_empty() {
            return Err(Error::NoTargets);
        }
        if class_lists.len() > MAX_COLORS {
            return Err(Error::TooManyColors {
                colors: class_lists.len(),
                max: MAX_COLORS,
            });
        }
        let max_diff = n - 1;
        let mut classes = vec![0u128; class_lists.len()];
        let mut seen: u128 = 0;
        for (ci, list) in class_lists.iter().enumerate() {
            for &d in list {
                if d == 0 || d > max_diff {
                    return Err(Error::OutOfRangeElement {
                        what: "difference",
                        value: d,
                        max: max_diff,
                    });
                }
                let bit = 1u128 << d;
                if seen & bit != 0 {
                    return Err(Error::DuplicateElement {
                        what: "difference",
                        value: d,
                    });
                }
                seen |= bit;
                classes[ci] |= bit;
            }
        }
        if let Some(missing) = first_missing(seen, max_diff) {
            return Err(Error::MissingElement {
                what: "difference",
                value: missing,
            });
        }
        Ok(Self { n, classes })
    }

    /// Rebuilds a coloring from an assignment string: the colors of the
    /// differences `1,2,...,n-1` in order, as digits `1..=r`.
    pub fn from_assignment(n: u32, colors: usize, assignment: &str) -> Result<Self> {
        check_vertex_count(n)?;
        if colors == 0 {
            return Err(Error::NoTargets);
        }
        if colors > MAX_COLORS {
            return Err(Error::TooManyColors {
                colors,
                max: MAX_COLORS,
            });
        }
        let digits: Vec<usize> = assignment
            .chars()
            .map(|ch| ch.to_digit(10).map(|v| v as usize).unwrap_or(0))
            .collect();
        if digits.len() != (n - 1) as usize {
            return Err(Error::MissingElement {
                what: "difference",
                value: digits.len() as u32 + 1,
            });
        }
        let mut classes = vec![0u128; colors];
        for (i, &c) in digits.iter().enumerate() {
            if c == 0 || c > colors {
                return Err(Error::BadColor { color: c, colors });
            }
            classes[c - 1] |= 1u128 << (i as u32 + 1);
        }
        Ok(Self { n, classes })
    }

    pub(crate) fn from_raw(n: u32, classes: Vec<u128>) -> Self {
        Self { n, classes }
    }

    /// Vertex count of the underlying complete graph.
    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    /// Largest difference, `n - 1` (0 for the single-vertex graph).
    pub fn max_diff(&self) -> u32 {
        self.n - 1
    }

    pub fn color_count(&self) -> usize {
        self.classes.len()
    }

    /// The class of a 1-based color.
    pub fn class(&self, color: usize) -> DifferenceSet {
        DifferenceSet::from_bits(self.classes[color - 1], self.n - 1)
    }

    /// 1-based color of difference `d`.
    pub fn color_of(&self, d: u32) -> usize {
        debug_assert!(d >= 1 && d < self.n);
        for (ci, &bits) in self.classes.iter().enumerate() {
            if (bits >> d) & 1 == 1 {
                return ci + 1;
            }
        }
        unreachable!("difference {d} is uncolored");
    }

    /// Color of the edge `{i, j}`, i.e. of the difference `|j - i|`.
    pub fn edge_color(&self, i: u32, j: u32) -> usize {
        self.color_of(i.abs_diff(j))
    }

    /// Colors of differences `1..n-1` as digit characters.
    pub fn assignment_string(&self) -> String {
        (1..self.n)
            .map(|d| char::from_digit(self.color_of(d) as u32, 10).unwrap())
            .collect()
    }

    pub(crate) fn raw_classes(&self) -> &[u128] {
        &self.classes
    }

    /// Expands to the explicit edge-colored complete graph.
    pub fn materialize(&self) -> crate::oracle::ExplicitGraph {
        crate::oracle::ExplicitGraph::from_coloring(self)
    }
}

fn check_vertex_count(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRangeElement {
            what: "vertex count",
            value: 0,
            max: MAX_VERTICES,
        });
    }
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

fn first_missing(seen: u128, max_element: u32) -> Option<u32> {
    let missing = !seen & domain_mask(max_element);
    if missing == 0 {
        None
    } else {
        Some(missing.trailing_zeros())
    }
}

/// A circulant coloring, listed only up to `n/2`; difference `d` and `n - d`
/// share a color by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicColoring {
    n: u32,
    half_classes: Vec<Vec<u32>>,
}

impl CyclicColoring {
    /// Builds a cyclic coloring from one half-difference list per color,
    /// validating that the lists partition `1..=n/2` exactly.
    pub fn new(n: u32, half_lists: &[Vec<u32>]) -> Result<Self> {
        check_vertex_count(n)?;
        if half_lists.is_empty() {
            return Err(Error::NoTargets);
        }
        if half_lists.len() > MAX_COLORS {
            return Err(Error::TooManyColors {
                colors: half_lists.len(),
                max: MAX_COLORS,
            });
        }
        let half = n / 2;
        let mut seen: u128 = 0;
        for list in half_lists {
            for &d in list {
                if d == 0 || d > half {
                    return Err(Error::OutOfRangeElement {
                        what: "half-difference",
                        value: d,
                        max: half,
                    });
                }
                let bit = 1u128 << d;
                if seen & bit != 0 {
                    return Err(Error::DuplicateElement {
                        what: "half-difference",
                        value: d,
                    });
                }
                seen |= bit;
            }
        }
        if half >= 1 {
            if let Some(missing) = first_missing(seen, half) {
                return Err(Error::MissingElement {
                    what: "half-difference",
                    value: missing,
                });
            }
        }
        Ok(Self {
            n,
            half_classes: half_lists.to_vec(),
        })
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn color_count(&self) -> usize {
        self.half_classes.len()
    }

    /// Half-difference list of a 1-based color, as given at construction.
    pub fn half_class(&self, color: usize) -> &[u32] {
        &self.half_classes[color - 1]
    }

    /// Full coloring with `color(d) = color(n - d)` for every difference.
    pub fn expand(&self) -> Result<DifferenceColoring> {
        let n = self.n;
        let full: Vec<Vec<u32>> = self
            .half_classes
            .iter()
            .map(|list| {
                let mut out = Vec::with_capacity(list.len() * 2);
                for &d in list {
                    out.push(d);
                    if n - d != d {
                        out.push(n - d);
                    }
                }
                out
            })
            .collect();
        DifferenceColoring::new(n, &full)
    }
}
