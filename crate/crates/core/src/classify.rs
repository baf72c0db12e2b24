//! Partition of the matches into contours, with dominant and antidominant
//! flags computed over the full sequences.

use std::collections::HashMap;

use crate::sequence::{match_points, MatchPoint, RankMatrix, Sequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifiedMatch {
    pub point: MatchPoint,
    pub rank: u32,
    /// No same-contour match earlier in its row or its column.
    pub dominant: bool,
    /// No same-contour match later in its row or its column.
    pub antidominant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchClassification {
    /// `contours[r - 1]` holds the rank-`r` matches in contour order.
    contours: Vec<Vec<ClassifiedMatch>>,
}

impl MatchClassification {
    pub fn contours(&self) -> &[Vec<ClassifiedMatch>] {
        &self.contours
    }

    /// Contour of rank `r` (1-based). Empty for ranks without matches.
    pub fn contour(&self, r: u32) -> &[ClassifiedMatch] {
        r.checked_sub(1)
            .and_then(|k| self.contours.get(k as usize))
            .map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ClassifiedMatch> {
        self.contours.iter().flatten()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&ClassifiedMatch> {
        self.iter()
            .find(|c| c.point.row == row && c.point.col == col)
    }
}

struct Extent {
    min: usize,
    max: usize,
}

impl Default for Extent {
    fn default() -> Self {
        Self {
            min: usize::MAX,
            max: 0,
        }
    }
}

impl Extent {
    fn add(&mut self, v: usize) {
        self.min = self.min.min(v);
        self.max = self.max.max(v);
    }
}

/// Groups matches by rank and flags dominant and antidominant ones.
///
/// `ranks` must be the rank matrix of `a` and `b`.
pub fn classify_matches(a: &Sequence, b: &Sequence, ranks: &RankMatrix) -> MatchClassification {
    let mut by_rank: Vec<Vec<MatchPoint>> = vec![Vec::new(); ranks.lcs_len() as usize];
    for p in match_points(a, b) {
        let r = ranks.get(p.row, p.col);
        by_rank[r as usize - 1].push(p);
    }

    let contours = by_rank
        .into_iter()
        .enumerate()
        .map(|(k, mut points)| {
            points.sort_by_key(MatchPoint::contour_key);
            let mut rows: HashMap<usize, Extent> = HashMap::new();
            let mut cols: HashMap<usize, Extent> = HashMap::new();
            for p in &points {
                rows.entry(p.row).or_default().add(p.col);
                cols.entry(p.col).or_default().add(p.row);
            }
            points
                .into_iter()
                .map(|p| {
                    let (row, col) = (&rows[&p.row], &cols[&p.col]);
                    ClassifiedMatch {
                        point: p,
                        rank: k as u32 + 1,
                        dominant: row.min == p.col && col.min == p.row,
                        antidominant: row.max == p.col && col.max == p.row,
                    }
                })
                .collect()
        })
        .collect();

    MatchClassification { contours }
}
