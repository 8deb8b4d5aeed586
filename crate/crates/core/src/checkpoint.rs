//! Line-oriented checkpoint files for interrupted searches.
//!
//! Layout: a `targets=k1,k2,...` header, a `j=<count>` header, then one
//! assignment string per surviving coloring, in level order. For Ramsey
//! levels `j` is the vertex count and strings cover the differences
//! `1..j-1`; for Issai levels `j` is the top of the colored range and
//! strings cover the integers `1..=j`. Round-trips are byte-exact.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::coloring::CliqueTargets;
use crate::error::{Error, Result};
use crate::issai::IssaiLevel;
use crate::search::SearchLevel;

pub fn write_ramsey(path: &Path, targets: &CliqueTargets, level: &SearchLevel) -> Result<()> {
    write_raw(
        path,
        targets,
        level.vertex_count(),
        level.raw(),
        level.color_count(),
        level.vertex_count() - 1,
    )
}

pub fn read_ramsey(path: &Path) -> Result<(CliqueTargets, SearchLevel)> {
    let (targets, j, data) = read_raw(path, |j| j.checked_sub(1))?;
    Ok((
        targets.clone(),
        SearchLevel::from_raw(j, targets.color_count(), data),
    ))
}

pub fn write_issai(path: &Path, targets: &CliqueTargets, level: &IssaiLevel) -> Result<()> {
    write_raw(
        path,
        targets,
        level.top(),
        level.raw(),
        level.color_count(),
        level.top(),
    )
}

pub fn read_issai(path: &Path) -> Result<(CliqueTargets, IssaiLevel)> {
    let (targets, j, data) = read_raw(path, Some)?;
    Ok((
        targets.clone(),
        IssaiLevel::from_raw(j, targets.color_count(), data),
    ))
}

fn write_raw(
    path: &Path,
    targets: &CliqueTargets,
    j: u32,
    data: &[u128],
    colors: usize,
    string_len: u32,
) -> Result<()> {
    let mut out = Vec::with_capacity(data.len() / colors.max(1) * (string_len as usize + 1) + 32);
    writeln!(out, "targets={}", targets.to_compact_string())?;
    writeln!(out, "j={j}")?;
    for member in data.chunks_exact(colors) {
        let digits = crate::level::assignment_digits(member, string_len);
        for d in digits {
            out.push(b'0' + d);
        }
        out.push(b'\n');
    }
    fs::write(path, out)?;
    Ok(())
}

fn read_raw(
    path: &Path,
    string_len_for: impl Fn(u32) -> Option<u32>,
) -> Result<(CliqueTargets, u32, Vec<u128>)> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines().enumerate();

    let (_, first) = lines.next().ok_or(Error::CheckpointParse {
        line: 1,
        message: "empty file".into(),
    })?;
    let targets_str = first
        .strip_prefix("targets=")
        .ok_or(Error::CheckpointParse {
            line: 1,
            message: format!("expected `targets=...`, found `{first}`"),
        })?;
    let sizes = targets_str
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| Error::CheckpointParse {
            line: 1,
            message: format!("bad targets list: {e}"),
        })?;
    let targets = CliqueTargets::new(sizes).map_err(|e| Error::CheckpointParse {
        line: 1,
        message: e.to_string(),
    })?;

    let (_, second) = lines.next().ok_or(Error::CheckpointParse {
        line: 2,
        message: "missing `j=` header".into(),
    })?;
    let j: u32 = second
        .strip_prefix("j=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or(Error::CheckpointParse {
            line: 2,
            message: format!("expected `j=<count>`, found `{second}`"),
        })?;
    let string_len = string_len_for(j).ok_or(Error::CheckpointParse {
        line: 2,
        message: format!("j={j} is too small"),
    })?;
    if string_len > crate::coloring::MAX_ELEMENT {
        return Err(Error::CheckpointParse {
            line: 2,
            message: format!(
                "j={j} exceeds the supported maximum of {}",
                crate::coloring::MAX_VERTICES
            ),
        });
    }

    let colors = targets.color_count();
    let mut data = Vec::new();
    let mut members = 0usize;
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.len() != string_len as usize {
            return Err(Error::CheckpointParse {
                line: lineno,
                message: format!(
                    "assignment string has {} colors, expected {string_len}",
                    line.len()
                ),
            });
        }
        let base = data.len();
        data.resize(base + colors, 0u128);
        for (i, ch) in line.chars().enumerate() {
            let c = ch.to_digit(10).unwrap_or(0) as usize;
            if c == 0 || c > colors {
                return Err(Error::CheckpointParse {
                    line: lineno,
                    message: format!("color `{ch}` is outside 1..={colors}"),
                });
            }
            data[base + c - 1] |= 1u128 << (i as u32 + 1);
        }
        members += 1;
    }
    if members == 0 {
        return Err(Error::CheckpointParse {
            line: 3,
            message: "no colorings listed".into(),
        });
    }
    Ok((targets, j, data))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{self, SearchOptions};

    #[test]
    fn ramsey_round_trip() {
        let targets = CliqueTargets::new(vec![3, 3]).unwrap();
        let mut level = search::initial_level(&targets).unwrap();
        let opts = SearchOptions::default();
        for _ in 0..3 {
            level = search::extend_level(&level, &targets, &opts).unwrap().level;
        }
        assert_eq!(level.vertex_count(), 5);
        assert_eq!(level.len(), 2);

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck.txt");
        write_ramsey(&path, &targets, &level).unwrap();

        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(text, "targets=3,3\nj=5\n1221\n2112\n");

        let (t2, l2) = read_ramsey(&path).unwrap();
        assert_eq!(t2, targets);
        assert_eq!(l2, level);

        // writing the reread level reproduces the file byte for byte
        let path2 = dir.path().join("ck2.txt");
        write_ramsey(&path2, &t2, &l2).unwrap();
        assert_eq!(fs::read_to_string(&path2).unwrap(), text);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.txt");

        fs::write(&path, "").unwrap();
        assert!(matches!(
            read_ramsey(&path).unwrap_err(),
            Error::CheckpointParse { line: 1, .. }
        ));

        fs::write(&path, "targets=3,3\nj=5\n12x1\n").unwrap();
        assert!(matches!(
            read_ramsey(&path).unwrap_err(),
            Error::CheckpointParse { line: 3, .. }
        ));

        fs::write(&path, "targets=3,3\nj=5\n121\n").unwrap();
        assert!(matches!(
            read_ramsey(&path).unwrap_err(),
            Error::CheckpointParse { line: 3, .. }
        ));

        fs::write(&path, "targets=3,3\nj=5\n").unwrap();
        assert!(matches!(
            read_ramsey(&path).unwrap_err(),
            Error::CheckpointParse { line: 3, .. }
        ));
    }
}
