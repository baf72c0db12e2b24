//! Property tests of the structural laws, against brute force where one exists.

mod common;

use common::seq;
use lcs_apg::oracle::{
    dedup, greedy_anticanonical, is_subsequence, naive_backtrace, DedupKey, DEFAULT_PATH_LIMIT,
};
use lcs_apg::{
    classify_matches, compute_ranks, count_results, enumerate, match_points, DistinctGraph,
    EmbeddingsGraph, LcsGraph, LcsResult, MatchPoint,
};
use proptest::prelude::*;

fn word(alphabet: &'static [u8], max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(prop::sample::select(alphabet), 0..=max)
}

fn pair(alphabet: &'static [u8], max: usize) -> impl Strategy<Value = (Vec<u8>, Vec<u8>)> {
    (word(alphabet, max), word(alphabet, max))
}

/// Longest strictly increasing chain of matches inside `a[..i] x b[..j]`.
fn longest_chain(a: &[u8], b: &[u8], i: usize, j: usize) -> u32 {
    let matches: Vec<(usize, usize)> = (1..=i)
        .flat_map(|r| (1..=j).map(move |c| (r, c)))
        .filter(|&(r, c)| a[r - 1] == b[c - 1])
        .collect();
    // matches are in row-major order, so every predecessor comes earlier
    let mut best = vec![1u32; matches.len()];
    for k in 0..matches.len() {
        for p in 0..k {
            if matches[p].0 < matches[k].0 && matches[p].1 < matches[k].1 {
                best[k] = best[k].max(best[p] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

fn check_result(a: &[u8], b: &[u8], r: &LcsResult) -> Result<(), TestCaseError> {
    prop_assert_eq!(r.text.len(), r.pos_a.len());
    prop_assert_eq!(r.text.len(), r.pos_b.len());
    prop_assert!(r.pos_a.windows(2).all(|w| w[0] < w[1]));
    prop_assert!(r.pos_b.windows(2).all(|w| w[0] < w[1]));
    for k in 0..r.text.len() {
        prop_assert_eq!(a[r.pos_a[k] - 1], r.text[k]);
        prop_assert_eq!(b[r.pos_b[k] - 1], r.text[k]);
    }
    Ok(())
}

fn is_ordered_subsequence(small: &[MatchPoint], big: &[MatchPoint]) -> bool {
    let mut it = big.iter();
    small.iter().all(|p| it.any(|q| q == p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ranks_are_longest_match_chains((a, b) in pair(b"abc", 8)) {
        let r = compute_ranks(&seq(&a), &seq(&b));
        for i in 0..=a.len() {
            for j in 0..=b.len() {
                prop_assert_eq!(r.get(i, j), longest_chain(&a, &b, i, j));
            }
        }
    }

    #[test]
    fn ranks_are_monotone((a, b) in pair(b"abcd", 12)) {
        let r = compute_ranks(&seq(&a), &seq(&b));
        for i in 0..=a.len() {
            prop_assert_eq!(r.get(i, 0), 0);
        }
        for j in 0..=b.len() {
            prop_assert_eq!(r.get(0, j), 0);
        }
        for i in 1..=a.len() {
            for j in 1..=b.len() {
                let here = r.get(i, j);
                prop_assert!(here - r.get(i - 1, j) <= 1);
                prop_assert!(here - r.get(i, j - 1) <= 1);
            }
        }
    }

    #[test]
    fn classification_matches_brute_force((a, b) in pair(b"abc", 10)) {
        let (sa, sb) = (seq(&a), seq(&b));
        let ranks = compute_ranks(&sa, &sb);
        let cls = classify_matches(&sa, &sb, &ranks);
        let points = match_points(&sa, &sb);
        prop_assert_eq!(cls.iter().count(), points.len());

        for p in &points {
            let rank = ranks.get(p.row, p.col);
            let same: Vec<&MatchPoint> =
                points.iter().filter(|q| ranks.get(q.row, q.col) == rank).collect();
            let dominant = !same.iter().any(|q| {
                (q.row == p.row && q.col < p.col) || (q.col == p.col && q.row < p.row)
            });
            let antidominant = !same.iter().any(|q| {
                (q.row == p.row && q.col > p.col) || (q.col == p.col && q.row > p.row)
            });
            let c = cls.get(p.row, p.col).unwrap();
            prop_assert_eq!(c.point, *p);
            prop_assert_eq!(c.rank, rank);
            prop_assert_eq!(c.dominant, dominant);
            prop_assert_eq!(c.antidominant, antidominant);
        }

        for (k, contour) in cls.contours().iter().enumerate() {
            let r = k as u32 + 1;
            prop_assert!(contour.iter().all(|c| c.rank == r));
            prop_assert!(contour
                .windows(2)
                .all(|w| w[0].point.contour_key() < w[1].point.contour_key()));
            if r > 1 {
                for c in contour {
                    let below = cls
                        .contour(r - 1)
                        .iter()
                        .any(|q| q.point.row < c.point.row && q.point.col < c.point.col);
                    prop_assert!(below);
                }
            }
        }
    }

    #[test]
    fn graph_laws((a, b) in pair(b"abcd", 12)) {
        let d = DistinctGraph::build(seq(&a), seq(&b));
        let e = EmbeddingsGraph::build(seq(&a), seq(&b));
        prop_assert!(d.store().is_frozen());
        prop_assert!(e.store().is_frozen());
        for (_, node) in d.store().iter().chain(e.store().iter()) {
            let p = node.point;
            prop_assert_eq!(a[p.row - 1], p.symbol);
            prop_assert_eq!(b[p.col - 1], p.symbol);
        }

        for i in 0..=a.len() {
            for j in 0..=b.len() {
                let da = d.adjacency(i, j).unwrap();
                let ea = e.adjacency(i, j).unwrap();
                prop_assert_eq!(&da, &d.adjacency(i, j).unwrap());
                prop_assert_eq!(&ea, &e.adjacency(i, j).unwrap());
                prop_assert!(is_ordered_subsequence(&da, &ea));
                prop_assert!(da.windows(2).all(|w| w[0].row > w[1].row && w[0].col < w[1].col));
                prop_assert_eq!(da.is_empty(), d.rank(i, j) == 0);
                prop_assert_eq!(ea.is_empty(), e.rank(i, j) == 0);

                if i > 0 && j > 0 && a[i - 1] == b[j - 1] {
                    let own = MatchPoint::new(i, j, a[i - 1]);
                    prop_assert_eq!(&da, &vec![own]);
                    prop_assert!(ea.contains(&own));
                    prop_assert!(ea.iter().all(|q| q.row == i || q.col == j));
                }

                let cell = d.cell(i, j).unwrap();
                prop_assert_eq!(cell.rank, d.rank(i, j));
                prop_assert_eq!(cell.tail.is_none(), cell.rank == 0);
                prop_assert_eq!(cell.head.is_none(), da.len() <= 1);
                prop_assert_eq!(cell.pretail.is_none(), cell.head.is_none());
                if let (Some(head), Some(pretail), Some(tail)) = (cell.head, cell.pretail, cell.tail) {
                    let mut at = head;
                    while at != pretail {
                        prop_assert_ne!(at, tail);
                        at = d.store().next(at).expect("run ends before pretail");
                    }
                }

                let rec = e.cell(i, j).unwrap();
                prop_assert_eq!(rec.rank, e.rank(i, j));
                prop_assert_eq!(rec.head.is_none(), rec.rank == 0);
                prop_assert_eq!(rec.tail.is_none(), rec.rank == 0);
            }
        }
    }

    #[test]
    fn naive_results_are_common_subsequences((a, b) in pair(b"abc", 7)) {
        let (sa, sb) = (seq(&a), seq(&b));
        let ranks = compute_ranks(&sa, &sb);
        for i in 0..=a.len() {
            for j in 0..=b.len() {
                let all = naive_backtrace(&ranks, &sa, &sb, i, j, DEFAULT_PATH_LIMIT).unwrap();
                prop_assert!(!all.is_empty());
                for r in &all {
                    prop_assert_eq!(r.len() as u32, ranks.get(i, j));
                    prop_assert!(is_subsequence(&r.text, &a[..i]));
                    prop_assert!(is_subsequence(&r.text, &b[..j]));
                    check_result(&a, &b, r)?;
                }
                let texts = dedup(all, DedupKey::Text);
                for r in &texts {
                    let g = greedy_anticanonical(&a[..i], &b[..j], &r.text).unwrap();
                    prop_assert_eq!(&g.text, &r.text);
                    check_result(&a, &b, &g)?;
                }
            }
        }
    }

    #[test]
    fn counts_equal_stream_lengths((a, b) in pair(b"abc", 10)) {
        let d = DistinctGraph::build(seq(&a), seq(&b));
        let e = EmbeddingsGraph::build(seq(&a), seq(&b));
        for i in 0..=a.len() {
            for j in 0..=b.len() {
                let listed: Vec<LcsResult> = enumerate(&d, i, j).unwrap().collect();
                for r in &listed {
                    prop_assert_eq!(r.len() as u32, d.rank(i, j));
                    check_result(&a, &b, r)?;
                }
                prop_assert_eq!(count_results(&d, i, j).unwrap().to_u64(), Some(listed.len() as u64));

                let embedded: Vec<LcsResult> = enumerate(&e, i, j).unwrap().collect();
                for r in &embedded {
                    check_result(&a, &b, r)?;
                }
                prop_assert_eq!(count_results(&e, i, j).unwrap().to_u64(), Some(embedded.len() as u64));
            }
        }
    }
}

#[test]
fn some_match_is_both_dominant_and_antidominant() {
    let (a, b) = (seq(b"bilabial"), seq(b"balaclava"));
    let cls = classify_matches(&a, &b, &compute_ranks(&a, &b));
    assert!(cls.iter().any(|c| c.dominant && c.antidominant));
}

#[test]
fn greedy_absent_for_non_subsequence() {
    assert!(greedy_anticanonical(b"abc", b"abc", b"cb").is_none());
    assert!(greedy_anticanonical(b"abc", b"", b"a").is_none());
    let empty = greedy_anticanonical(b"", b"", b"").unwrap();
    assert!(empty.is_empty());
}
