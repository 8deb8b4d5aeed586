//! Explicit edge-colored complete graphs and a naive monochromatic-clique
//! check over vertex subsets.
//!
//! This is the cross-validation side of the verifier: it enumerates vertex
//! subsets directly against a stored edge-color matrix and deliberately
//! shares nothing with the difference-set kernels in [`crate::clique`].

use crate::coloring::DifferenceColoring;

/// A complete graph on vertices `1..=n` with an explicit color per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitGraph {
    n: u32,
    // row-major n*n matrix of 1-based colors, 0 on the diagonal
    edge_colors: Vec<u8>,
}

impl ExplicitGraph {
    /// Materializes a difference coloring: edge `{i, j}` takes the color of
    /// the difference `|j - i|`.
    pub fn from_coloring(c: &DifferenceColoring) -> Self {
        let n = c.vertex_count();
        let mut edge_colors = vec![0u8; (n * n) as usize];
        for i in 1..=n {
            for j in (i + 1)..=n {
                let color = c.color_of(j - i) as u8;
                edge_colors[((i - 1) * n + (j - 1)) as usize] = color;
                edge_colors[((j - 1) * n + (i - 1)) as usize] = color;
            }
        }
        Self { n, edge_colors }
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    /// 1-based color of edge `{i, j}`, `i != j`.
    pub fn edge_color(&self, i: u32, j: u32) -> usize {
        debug_assert!(i != j && i >= 1 && j >= 1 && i <= self.n && j <= self.n);
        self.edge_colors[((i - 1) * self.n + (j - 1)) as usize] as usize
    }

    /// True iff some `k` vertices have all their pairwise edges in `color`.
    pub fn has_mono_clique(&self, k: usize, color: usize) -> bool {
        self.find_mono_clique(k, color).is_some()
    }

    /// Finds the lexicographically first monochromatic `k`-clique in `color`,
    /// as an increasing vertex list.
    pub fn find_mono_clique(&self, k: usize, color: usize) -> Option<Vec<u32>> {
        debug_assert!(k >= 2);
        if (k as u32) > self.n {
            return None;
        }
        let mut chosen: Vec<u32> = Vec::with_capacity(k);
        if self.extend_subset(k, color, 1, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    fn extend_subset(&self, k: usize, color: usize, start: u32, chosen: &mut Vec<u32>) -> bool {
        if chosen.len() == k {
            return true;
        }
        let remaining = k - chosen.len();
        let mut v = start;
        while v + (remaining as u32) - 1 <= self.n {
            if chosen.iter().all(|&u| self.edge_color(u, v) == color) {
                chosen.push(v);
                if self.extend_subset(k, color, v + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
            v += 1;
        }
        false
    }
}
