//! Slow, definitional reference implementations used to check the graphs.
//!
//! Nothing here shares code with the graph builders beyond the rank matrix
//! and the sequence types. Exponential in the worst case; meant for short
//! inputs.

use std::collections::HashSet;

use crate::enumerate::LcsResult;
use crate::error::{Error, Result};
use crate::sequence::{MatchPoint, RankMatrix, Sequence};

pub const DEFAULT_PATH_LIMIT: usize = 1_000_000;

/// Every complete path of the three-way backtrace from `(i, j)`.
///
/// From a match the walk may step diagonally, emitting the symbol; from
/// any cell it may step up or left onto a neighbour of equal rank. Branches
/// are tried diagonal, up, left. Duplicates are kept.
pub fn naive_backtrace(
    ranks: &RankMatrix,
    a: &Sequence,
    b: &Sequence,
    i: usize,
    j: usize,
    limit: usize,
) -> Result<Vec<LcsResult>> {
    ranks.check_cell(i, j)?;
    let mut out = Vec::new();
    let mut rev = Vec::new();
    walk(ranks, a, b, i, j, &mut rev, &mut out, limit)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    ranks: &RankMatrix,
    a: &Sequence,
    b: &Sequence,
    i: usize,
    j: usize,
    rev: &mut Vec<MatchPoint>,
    out: &mut Vec<LcsResult>,
    limit: usize,
) -> Result<()> {
    let r = ranks.get(i, j);
    if r == 0 {
        if out.len() >= limit {
            return Err(Error::PathLimitExceeded { limit });
        }
        out.push(LcsResult {
            text: rev.iter().rev().map(|p| p.symbol).collect(),
            pos_a: rev.iter().rev().map(|p| p.row).collect(),
            pos_b: rev.iter().rev().map(|p| p.col).collect(),
        });
        return Ok(());
    }
    if a.at(i) == b.at(j) {
        rev.push(MatchPoint::new(i, j, a.at(i)));
        walk(ranks, a, b, i - 1, j - 1, rev, out, limit)?;
        rev.pop();
    }
    if ranks.get(i - 1, j) == r {
        walk(ranks, a, b, i - 1, j, rev, out, limit)?;
    }
    if ranks.get(i, j - 1) == r {
        walk(ranks, a, b, i, j - 1, rev, out, limit)?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DedupKey {
    Text,
    Embedding,
}

/// Keeps the first result per key, preserving order.
pub fn dedup(results: Vec<LcsResult>, key: DedupKey) -> Vec<LcsResult> {
    let mut texts = HashSet::new();
    let mut embeddings = HashSet::new();
    results
        .into_iter()
        .filter(|r| match key {
            DedupKey::Text => texts.insert(r.text.clone()),
            DedupKey::Embedding => embeddings.insert((r.pos_a.clone(), r.pos_b.clone())),
        })
        .collect()
}

/// Matches of rank `L[i][j]` inside the prefixes, in contour order.
pub fn regional_same_rank(
    ranks: &RankMatrix,
    a: &Sequence,
    b: &Sequence,
    i: usize,
    j: usize,
) -> Result<Vec<MatchPoint>> {
    ranks.check_cell(i, j)?;
    let r = ranks.get(i, j);
    if r == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for row in 1..=i {
        for col in 1..=j {
            if a.at(row) == b.at(col) && ranks.get(row, col) == r {
                out.push(MatchPoint::new(row, col, a.at(row)));
            }
        }
    }
    out.sort_by_key(MatchPoint::contour_key);
    Ok(out)
}

/// Same-rank matches with no same-rank match in the region to their right
/// in the same row, nor below them in the same column.
pub fn regional_antidominant(
    ranks: &RankMatrix,
    a: &Sequence,
    b: &Sequence,
    i: usize,
    j: usize,
) -> Result<Vec<MatchPoint>> {
    let all = regional_same_rank(ranks, a, b, i, j)?;
    Ok(all
        .iter()
        .filter(|p| {
            !all.iter()
                .any(|q| (q.row == p.row && q.col > p.col) || (q.col == p.col && q.row > p.row))
        })
        .copied()
        .collect())
}

/// Embedding of `s` with every position as large as possible, chosen from
/// the end of `s` backwards. `None` if `s` is not a common subsequence.
pub fn greedy_anticanonical(a: &[u8], b: &[u8], s: &[u8]) -> Option<LcsResult> {
    fn place(seq: &[u8], s: &[u8]) -> Option<Vec<usize>> {
        let mut pos = vec![0; s.len()];
        let mut limit = seq.len();
        for (k, &c) in s.iter().enumerate().rev() {
            let p = seq[..limit].iter().rposition(|&x| x == c)?;
            pos[k] = p + 1;
            limit = p;
        }
        Some(pos)
    }
    Some(LcsResult {
        text: s.to_vec(),
        pos_a: place(a, s)?,
        pos_b: place(b, s)?,
    })
}

/// Whether `s` is a subsequence of `seq`.
pub fn is_subsequence(s: &[u8], seq: &[u8]) -> bool {
    let mut it = seq.iter();
    s.iter().all(|c| it.any(|x| x == c))
}
