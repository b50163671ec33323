//! Line-oriented fusion-ring text format (FRT).
//!
//! ```text
//! # Rep(S3)
//! rank 3
//! labels 1 s X
//! unit 0
//! dual 0 1 2
//! N 2 2 0 1
//! ...
//! ```
//!
//! `#` starts a comment, blank lines are ignored, indices are 0-based and
//! every `N <i> <j> <k> <v>` line needs `v >= 1`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::ring::{FusionRing, RingError, DEFAULT_MAX_RANK};

/// Parses with the default maximum rank.
pub fn parse_ring(text: &str) -> Result<FusionRing, RingError> {
    parse_ring_with_max_rank(text, DEFAULT_MAX_RANK)
}

pub fn parse_ring_with_max_rank(text: &str, max_rank: usize) -> Result<FusionRing, RingError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let mut header = |keyword: &str| -> Result<(usize, Vec<&str>), RingError> {
        let (line, content) = lines.next().ok_or(RingError::Parse {
            line: 0,
            message: format!("missing `{keyword}` line"),
        })?;
        let mut words = content.split_whitespace();
        if words.next() != Some(keyword) {
            return Err(RingError::Parse {
                line,
                message: format!("expected `{keyword}`"),
            });
        }
        Ok((line, words.collect()))
    };

    let (line, words) = header("rank")?;
    let rank = match words.as_slice() {
        [r] => parse_number(r, line)?,
        _ => return Err(perr(line, "expected `rank <r>`")),
    };
    if rank == 0 {
        return Err(perr(line, "rank must be positive"));
    }
    if rank > max_rank {
        return Err(RingError::RankTooLarge {
            rank,
            max: max_rank,
        });
    }

    let (line, words) = header("labels")?;
    if words.len() != rank {
        return Err(perr(
            line,
            &format!("expected {rank} labels, found {}", words.len()),
        ));
    }
    let labels: Vec<String> = words.iter().map(|s| s.to_string()).collect();
    if labels.iter().collect::<BTreeSet<_>>().len() != rank {
        return Err(perr(line, "labels must be distinct"));
    }

    let (line, words) = header("unit")?;
    let unit = match words.as_slice() {
        [u] => parse_index(u, line, rank)?,
        _ => return Err(perr(line, "expected `unit <index>`")),
    };

    let (line, words) = header("dual")?;
    if words.len() != rank {
        return Err(perr(
            line,
            &format!("expected {rank} dual indices, found {}", words.len()),
        ));
    }
    let dual = words
        .iter()
        .map(|w| parse_index(w, line, rank))
        .collect::<Result<Vec<_>, _>>()?;

    let mut seen = BTreeSet::new();
    let mut entries = Vec::new();
    for (line, content) in lines {
        let words: Vec<&str> = content.split_whitespace().collect();
        match words.as_slice() {
            ["N", i, j, k, v] => {
                let (i, j, k) = (
                    parse_index(i, line, rank)?,
                    parse_index(j, line, rank)?,
                    parse_index(k, line, rank)?,
                );
                let v: u32 = v
                    .parse()
                    .map_err(|_| perr(line, &format!("invalid multiplicity {v:?}")))?;
                if v == 0 {
                    return Err(perr(line, "multiplicity must be at least 1"));
                }
                if !seen.insert((i, j, k)) {
                    return Err(RingError::DuplicateEntry { line, i, j, k });
                }
                entries.push(((i, j, k), v));
            }
            _ => return Err(perr(line, "expected `N <i> <j> <k> <v>`")),
        }
    }

    FusionRing::new(labels, unit, dual, entries).map_err(|e| match e {
        RingError::Invalid(message) => RingError::Parse { line: 2, message },
        other => other,
    })
}

/// Canonical FRT rendering; entries in lexicographic `(i, j, k)` order.
pub fn serialize_ring(r: &FusionRing) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "rank {}", r.rank());
    let _ = writeln!(out, "labels {}", r.labels().join(" "));
    let _ = writeln!(out, "unit {}", r.unit());
    let duals: Vec<String> = r.duals().iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "dual {}", duals.join(" "));
    for (i, j, k, v) in r.entries() {
        let _ = writeln!(out, "N {i} {j} {k} {v}");
    }
    out
}

fn perr(line: usize, message: &str) -> RingError {
    RingError::Parse {
        line,
        message: message.to_string(),
    }
}

fn parse_number(word: &str, line: usize) -> Result<usize, RingError> {
    word.parse()
        .map_err(|_| perr(line, &format!("invalid integer {word:?}")))
}

fn parse_index(word: &str, line: usize, rank: usize) -> Result<usize, RingError> {
    let index = parse_number(word, line)?;
    if index >= rank {
        return Err(RingError::IndexOutOfRange { line, index, rank });
    }
    Ok(index)
}
