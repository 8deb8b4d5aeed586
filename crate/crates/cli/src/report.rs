//! Lower-bound documents generated from a results file.
//!
//! Output is deterministic: fixed wording, one witness (the canonically
//! first maximal coloring), and a verification statement backed by an
//! actual re-check at render time.

use ramsey_core::{clique, DifferenceColoring, SearchStatus};
use thiserror::Error;

use crate::files::{ColoringFile, FileError, ResultsFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Markdown,
    Latex,
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    File(#[from] FileError),

    #[error(transparent)]
    Coloring(#[from] ramsey_core::Error),

    #[error("results file lists no maximal colorings")]
    NoWitness,

    #[error("witness string has {found} colors but n={n} needs {expected}")]
    WitnessLength {
        found: usize,
        n: u32,
        expected: usize,
    },

    #[error("witness re-verification failed: color {color} contains a K_{target}")]
    WitnessInvalid { color: usize, target: usize },
}

/// Renders a Ramsey lower-bound document from a `search` results file.
pub fn render(results: &ResultsFile, format: ReportFormat) -> Result<String, ReportError> {
    let first = results.witnesses.first().ok_or(ReportError::NoWitness)?;
    let n = results.value - 1;
    let expected = (n - 1) as usize;
    if first.len() != expected {
        return Err(ReportError::WitnessLength {
            found: first.len(),
            n,
            expected,
        });
    }
    let colors = results.targets.color_count();
    let witness = DifferenceColoring::from_assignment(n, colors, first)?;

    // the document asserts verification, so actually verify
    let graph = witness.materialize();
    for color in 1..=colors {
        let k = results.targets.size_for(color);
        if clique::has_clique(&witness.class(color), k) || graph.has_mono_clique(k, color) {
            return Err(ReportError::WitnessInvalid { color, target: k });
        }
    }

    let t = results.targets.to_compact_string();
    let exact = results.status == SearchStatus::Exact;
    let coloring_file = ColoringFile::from_difference_coloring(&witness).emit();
    let clause = |c: usize, math: bool| {
        let k = results.targets.size_for(c);
        if math {
            format!("no monochromatic $K_{{{k}}}$ in color {c}")
        } else {
            format!("no monochromatic K_{k} in color {c}")
        }
    };
    let avoids_for = |math: bool| {
        (1..=colors)
            .map(|c| clause(c, math))
            .collect::<Vec<_>>()
            .join(" and ")
    };

    let text = match format {
        ReportFormat::Markdown => {
            let avoids = avoids_for(false);
            let mut s = String::new();
            s.push_str(&format!("# Lower bound for R({t})\n\n"));
            s.push_str(&format!(
                "A difference coloring of the complete graph on {n} vertices with {avoids} \
                 exists, so\n\n"
            ));
            s.push_str(&format!("    R({t}) >= {}\n\n", results.value));
            if exact {
                s.push_str(&format!(
                    "The level-by-level search over difference colorings was exhaustive: \
                     D({t}) = {} exactly",
                    results.value
                ));
                if let Some(count) = results.count {
                    s.push_str(&format!(
                        ", with {count} maximal coloring{} up to color symmetry",
                        if count == 1 { "" } else { "s" }
                    ));
                }
                s.push_str(".\n\n");
            } else {
                s.push_str(&format!(
                    "The search was truncated by a beam cap, so this is a certified lower \
                     bound: D({t}) >= {}.\n\n",
                    results.value
                ));
            }
            s.push_str("## Witness coloring\n\n```\n");
            s.push_str(&coloring_file);
            s.push_str("```\n\n## Verification\n\n");
            s.push_str(
                "Each color class of the witness was re-checked at generation time, both by \
                 the difference-subset clique test and by exhaustive enumeration over vertex \
                 subsets of the explicit edge-colored graph. To re-check independently, save \
                 the witness block above and run:\n\n",
            );
            s.push_str(&format!("    ramsey verify witness.txt --targets {t}\n"));
            s
        }
        ReportFormat::Latex => {
            let avoids = avoids_for(true);
            let mut s = String::new();
            s.push_str("\\documentclass{article}\n\\begin{document}\n");
            s.push_str(&format!("\\section*{{Lower bound for $R({t})$}}\n\n"));
            s.push_str(&format!(
                "A difference coloring of the complete graph on ${n}$ vertices with {avoids} \
                 exists, so\n"
            ));
            s.push_str(&format!("$$R({t}) \\geq {}.$$\n\n", results.value));
            if exact {
                s.push_str(&format!(
                    "The level-by-level search over difference colorings was exhaustive: \
                     $D({t}) = {}$ exactly",
                    results.value
                ));
                if let Some(count) = results.count {
                    s.push_str(&format!(
                        ", with ${count}$ maximal coloring{} up to color symmetry",
                        if count == 1 { "" } else { "s" }
                    ));
                }
                s.push_str(".\n\n");
            } else {
                s.push_str(&format!(
                    "The search was truncated by a beam cap, so this is a certified lower \
                     bound: $D({t}) \\geq {}$.\n\n",
                    results.value
                ));
            }
            s.push_str("\\subsection*{Witness coloring}\n\\begin{verbatim}\n");
            s.push_str(&coloring_file);
            s.push_str("\\end{verbatim}\n\n\\subsection*{Verification}\n\n");
            s.push_str(
                "Each color class of the witness was re-checked at generation time, both by \
                 the difference-subset clique test and by exhaustive enumeration over vertex \
                 subsets of the explicit edge-colored graph.\n",
            );
            s.push_str("\\end{document}\n");
            s
        }
    };
    Ok(text)
}
