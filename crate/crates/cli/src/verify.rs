//! Double-checked verification of external colorings.
//!
//! Difference colorings are checked twice per color — the difference-subset
//! clique test and an exhaustive scan of the materialized graph — and the
//! two must agree. Integer colorings are scanned for monochromatic Schur
//! tuples. Failures carry a concrete witness.

use ramsey_core::{clique, find_schur_tuple_in_color, CliqueTargets};
use thiserror::Error;

use crate::files::{ColoringFile, ColoringKind, FileError};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    File(#[from] FileError),

    #[error(transparent)]
    Coloring(#[from] ramsey_core::Error),

    #[error(
        "internal disagreement on color {color}: subset test says {fast}, \
         explicit-graph scan says {slow}"
    )]
    ChecksDisagree {
        color: usize,
        fast: bool,
        slow: bool,
    },
}

/// Outcome for one color class.
#[derive(Clone, Debug)]
pub struct ColorCheck {
    pub color: usize,
    pub target: usize,
    /// Vertices of a monochromatic clique, or entries of a Schur tuple.
    pub witness: Option<Vec<u32>>,
}

impl ColorCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Full verification report for one coloring file.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub kind: ColoringKind,
    pub n: u32,
    pub targets: CliqueTargets,
    pub checks: Vec<ColorCheck>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(ColorCheck::passed)
    }

    /// One line per color plus a closing certificate or failure line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            match (&check.witness, self.kind) {
                (None, ColoringKind::Difference) => out.push_str(&format!(
                    "color {}: ok (no monochromatic K_{})\n",
                    check.color, check.target
                )),
                (None, ColoringKind::Integer) => out.push_str(&format!(
                    "color {}: ok (no Schur {}-tuple)\n",
                    check.color, check.target
                )),
                (Some(w), ColoringKind::Difference) => out.push_str(&format!(
                    "color {}: FAIL monochromatic K_{} on vertices {}\n",
                    check.color,
                    check.target,
                    join(w)
                )),
                (Some(w), ColoringKind::Integer) => out.push_str(&format!(
                    "color {}: FAIL Schur {}-tuple ({})\n",
                    check.color,
                    check.target,
                    join(w)
                )),
            }
        }
        let t = self.targets.to_compact_string();
        match (self.passed(), self.kind) {
            (true, ColoringKind::Difference) => out.push_str(&format!(
                "verified: coloring on {} vertices avoids all targets (certifies R({t}) >= {})\n",
                self.n,
                self.n + 1
            )),
            (true, ColoringKind::Integer) => out.push_str(&format!(
                "verified: coloring of 1..{} avoids all targets (certifies S({t}) > {})\n",
                self.n, self.n
            )),
            (false, _) => out.push_str("verification FAILED\n"),
        }
        out
    }
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Checks every color class of the file against its target.
pub fn verify_coloring_file(
    file: &ColoringFile,
    targets: &CliqueTargets,
) -> Result<VerifyReport, VerifyError> {
    if targets.color_count() != file.colors {
        return Err(ramsey_core::Error::ColorCountMismatch {
            colors: file.colors,
            targets: targets.color_count(),
        }
        .into());
    }
    let checks = match file.kind {
        ColoringKind::Difference => {
            let coloring = file.to_difference_coloring()?;
            let graph = coloring.materialize();
            let mut checks = Vec::with_capacity(file.colors);
            for color in 1..=file.colors {
                let k = targets.size_for(color);
                let fast = clique::has_clique(&coloring.class(color), k);
                let slow = graph.find_mono_clique(k, color);
                if fast != slow.is_some() {
                    return Err(VerifyError::ChecksDisagree {
                        color,
                        fast,
                        slow: slow.is_some(),
                    });
                }
                checks.push(ColorCheck {
                    color,
                    target: k,
                    witness: slow,
                });
            }
            checks
        }
        ColoringKind::Integer => {
            let coloring = file.to_integer_coloring()?;
            let mut checks = Vec::with_capacity(file.colors);
            for color in 1..=file.colors {
                let k = targets.size_for(color);
                let witness =
                    find_schur_tuple_in_color(&coloring, color, k).map(|w| w.entries().to_vec());
                checks.push(ColorCheck {
                    color,
                    target: k,
                    witness,
                });
            }
            checks
        }
    };
    Ok(VerifyReport {
        kind: file.kind,
        n: file.n,
        targets: targets.clone(),
        checks,
    })
}
