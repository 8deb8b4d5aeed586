//! On-disk formats: coloring files and search results files.
//!
//! Coloring files carry `n=`, `r=`, `kind=`, `cyclic=` headers and one
//! `<color>: d1 d2 ...` line per color. Difference colorings list the
//! differences `1..n-1` (or only `1..=n/2` when cyclic); integer colorings
//! list the integers `1..=n`. `#` starts a comment, spacing is free, but
//! emitted files use the canonical layout below so round-trips are
//! byte-exact.

use ramsey_core::{
    CliqueTargets, CyclicColoring, DifferenceColoring, IntegerColoring, IssaiOutcome,
    SearchOutcome, SearchStatus,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error(transparent)]
    Coloring(#[from] ramsey_core::Error),
}

type Result<T> = std::result::Result<T, FileError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoringKind {
    Difference,
    Integer,
}

impl std::fmt::Display for ColoringKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ColoringKind::Difference => write!(f, "difference"),
            ColoringKind::Integer => write!(f, "integer"),
        }
    }
}

/// A parsed coloring file: header fields plus one member list per color,
/// kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringFile {
    pub n: u32,
    pub colors: usize,
    pub kind: ColoringKind,
    pub cyclic: bool,
    pub class_lists: Vec<Vec<u32>>,
}

impl ColoringFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<(u32, usize)> = None;
        let mut colors: Option<(usize, usize)> = None;
        let mut kind: Option<ColoringKind> = None;
        let mut cyclic = false;
        let mut classes: Vec<(usize, usize, Vec<u32>)> = Vec::new(); // (line, color, members)

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }

            if let Some((key, value)) = line.split_once('=') {
                let key = key.trim();
                let value = value.trim();
                match key {
                    "n" => {
                        let v = value.parse::<u32>().map_err(|_| FileError::Syntax {
                            line: line_no,
                            message: format!("bad n `{value}`"),
                        })?;
                        n = Some((v, line_no));
                    }
                    "r" => {
                        let v = value.parse::<usize>().map_err(|_| FileError::Syntax {
                            line: line_no,
                            message: format!("bad r `{value}`"),
                        })?;
                        colors = Some((v, line_no));
                    }
                    "kind" => {
                        kind = Some(match value {
                            "difference" => ColoringKind::Difference,
                            "integer" => ColoringKind::Integer,
                            other => {
                                return Err(FileError::Syntax {
                                    line: line_no,
                                    message: format!(
                                        "kind must be `difference` or `integer`, found `{other}`"
                                    ),
                                })
                            }
                        });
                    }
                    "cyclic" => {
                        cyclic = match value {
                            "0" => false,
                            "1" => true,
                            other => {
                                return Err(FileError::Syntax {
                                    line: line_no,
                                    message: format!("cyclic must be 0 or 1, found `{other}`"),
                                })
                            }
                        };
                    }
                    other => {
                        return Err(FileError::Syntax {
                            line: line_no,
                            message: format!("unknown header `{other}`"),
                        })
                    }
                }
            } else if let Some((label, rest)) = line.split_once(':') {
                let color = label
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| FileError::Syntax {
                        line: line_no,
                        message: format!("bad color label `{label}`"),
                    })?;
                let mut members = Vec::new();
                for tok in rest.split(|ch: char| ch.is_whitespace() || ch == ',') {
                    if tok.is_empty() {
                        continue;
                    }
                    let v = tok.parse::<u32>().map_err(|_| FileError::Syntax {
                        line: line_no,
                        message: format!("bad list entry `{tok}`"),
                    })?;
                    members.push(v);
                }
                classes.push((line_no, color, members));
            } else {
                return Err(FileError::Syntax {
                    line: line_no,
                    message: format!(
                        "expected a header or a `color: members` line, found `{line}`"
                    ),
                });
            }
        }

        let (n, _) = n.ok_or(FileError::Syntax {
            line: 1,
            message: "missing `n=` header".into(),
        })?;
        let (colors, r_line) = colors.ok_or(FileError::Syntax {
            line: 1,
            message: "missing `r=` header".into(),
        })?;
        let kind = kind.ok_or(FileError::Syntax {
            line: 1,
            message: "missing `kind=` header".into(),
        })?;
        if cyclic && kind == ColoringKind::Integer {
            return Err(FileError::Syntax {
                line: r_line,
                message: "cyclic applies only to difference colorings".into(),
            });
        }

        let mut class_lists: Vec<Option<Vec<u32>>> = vec![None; colors];
        for (line_no, color, mut members) in classes {
            if color == 0 || color > colors {
                return Err(FileError::Syntax {
                    line: line_no,
                    message: format!("color {color} is outside 1..={colors}"),
                });
            }
            if class_lists[color - 1].is_some() {
                return Err(FileError::Syntax {
                    line: line_no,
                    message: format!("color {color} listed twice"),
                });
            }
            members.sort_unstable();
            class_lists[color - 1] = Some(members);
        }
        let class_lists: Vec<Vec<u32>> = class_lists
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                c.ok_or(FileError::Syntax {
                    line: r_line,
                    message: format!("color {} has no class line", i + 1),
                })
            })
            .collect::<Result<_>>()?;

        let file = Self {
            n,
            colors,
            kind,
            cyclic,
            class_lists,
        };
        // validate the partition (and the cyclic expansion) up front
        match file.kind {
            ColoringKind::Difference => {
                file.to_difference_coloring()?;
            }
            ColoringKind::Integer => {
                file.to_integer_coloring()?;
            }
        }
        Ok(file)
    }

    /// Canonical emission; `parse` of the result reproduces `self` exactly.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("n={}\n", self.n));
        out.push_str(&format!("r={}\n", self.colors));
        out.push_str(&format!("kind={}\n", self.kind));
        out.push_str(&format!("cyclic={}\n", if self.cyclic { 1 } else { 0 }));
        for (i, list) in self.class_lists.iter().enumerate() {
            let members: Vec<String> = list.iter().map(|d| d.to_string()).collect();
            out.push_str(&format!("{}: {}\n", i + 1, members.join(" ")));
        }
        out
    }

    /// Builds the full difference coloring, applying cyclic expansion.
    pub fn to_difference_coloring(&self) -> Result<DifferenceColoring> {
        match self.kind {
            ColoringKind::Difference if self.cyclic => {
                let cyc = CyclicColoring::new(self.n, &self.class_lists)?;
                Ok(cyc.expand()?)
            }
            ColoringKind::Difference => Ok(DifferenceColoring::new(self.n, &self.class_lists)?),
            ColoringKind::Integer => Err(FileError::Syntax {
                line: 1,
                message: "integer coloring used where a difference coloring is required".into(),
            }),
        }
    }

    pub fn to_integer_coloring(&self) -> Result<IntegerColoring> {
        match self.kind {
            ColoringKind::Integer => Ok(IntegerColoring::new(self.n, &self.class_lists)?),
            ColoringKind::Difference => Err(FileError::Syntax {
                line: 1,
                message: "difference coloring used where an integer coloring is required".into(),
            }),
        }
    }

    pub fn from_difference_coloring(c: &DifferenceColoring) -> Self {
        Self {
            n: c.vertex_count(),
            colors: c.color_count(),
            kind: ColoringKind::Difference,
            cyclic: false,
            class_lists: (1..=c.color_count())
                .map(|color| c.class(color).to_vec())
                .collect(),
        }
    }

    pub fn from_integer_coloring(c: &IntegerColoring) -> Self {
        Self {
            n: c.range_top(),
            colors: c.color_count(),
            kind: ColoringKind::Integer,
            cyclic: false,
            class_lists: (1..=c.color_count())
                .map(|color| c.class_members(color))
                .collect(),
        }
    }
}

/// A machine-readable search outcome: status/value/targets/count headers,
/// then the maximal colorings as assignment strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultsFile {
    pub status: SearchStatus,
    pub value: u32,
    pub targets: CliqueTargets,
    pub count: Option<u64>,
    pub witnesses: Vec<String>,
}

impl ResultsFile {
    pub fn from_outcome(out: &SearchOutcome) -> Self {
        Self {
            status: out.status,
            value: out.value,
            targets: out.targets.clone(),
            count: out.orbit_count,
            witnesses: out.maximal.assignment_strings(),
        }
    }

    pub fn from_issai_outcome(out: &IssaiOutcome) -> Self {
        Self {
            status: out.status,
            value: out.value,
            targets: out.targets.clone(),
            count: out.orbit_count,
            witnesses: out.maximal.assignment_strings(),
        }
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "status={}\n",
            match self.status {
                SearchStatus::Exact => "exact",
                SearchStatus::LowerBound => "lower_bound",
            }
        ));
        out.push_str(&format!("value={}\n", self.value));
        out.push_str(&format!("targets={}\n", self.targets.to_compact_string()));
        if let Some(count) = self.count {
            out.push_str(&format!("count={count}\n"));
        }
        for w in &self.witnesses {
            out.push_str(w);
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut status: Option<SearchStatus> = None;
        let mut value: Option<u32> = None;
        let mut targets: Option<CliqueTargets> = None;
        let mut count: Option<u64> = None;
        let mut witnesses = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some((key, v)) = line.split_once('=') {
                match key {
                    "status" => {
                        status = Some(match v {
                            "exact" => SearchStatus::Exact,
                            "lower_bound" => SearchStatus::LowerBound,
                            other => {
                                return Err(FileError::Syntax {
                                    line: line_no,
                                    message: format!("bad status `{other}`"),
                                })
                            }
                        })
                    }
                    "value" => {
                        value = Some(v.parse().map_err(|_| FileError::Syntax {
                            line: line_no,
                            message: format!("bad value `{v}`"),
                        })?)
                    }
                    "targets" => {
                        let sizes = v
                            .split(',')
                            .map(|s| s.trim().parse::<usize>())
                            .collect::<std::result::Result<Vec<_>, _>>()
                            .map_err(|_| FileError::Syntax {
                                line: line_no,
                                message: format!("bad targets `{v}`"),
                            })?;
                        targets = Some(CliqueTargets::new(sizes)?);
                    }
                    "count" => {
                        count = Some(v.parse().map_err(|_| FileError::Syntax {
                            line: line_no,
                            message: format!("bad count `{v}`"),
                        })?)
                    }
                    other => {
                        return Err(FileError::Syntax {
                            line: line_no,
                            message: format!("unknown header `{other}`"),
                        })
                    }
                }
            } else {
                witnesses.push(line.to_string());
            }
        }

        let missing = |what: &str| FileError::Syntax {
            line: 1,
            message: format!("missing `{what}=` header"),
        };
        Ok(Self {
            status: status.ok_or_else(|| missing("status"))?,
            value: value.ok_or_else(|| missing("value"))?,
            targets: targets.ok_or_else(|| missing("targets"))?,
            count,
            witnesses,
        })
    }
}
