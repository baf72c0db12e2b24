//! Cross-checks both graphs against the oracle over every prefix pair.

use std::collections::BTreeSet;

use crate::distinct::DistinctGraph;
use crate::embeddings::EmbeddingsGraph;
use crate::enumerate::{enumerate, LcsResult, ResultCounter};
use crate::error::Result;
use crate::graph::LcsGraph;
use crate::oracle::{
    dedup, greedy_anticanonical, naive_backtrace, regional_antidominant, regional_same_rank,
    DedupKey,
};
use crate::sequence::Sequence;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    /// Prefix pairs examined.
    pub queries: usize,
    /// One line per failed comparison.
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares adjacency lists, enumerations, counts and anticanonical
/// embeddings of both graphs with the oracle at every `(i, j)`.
///
/// Fails with [`crate::Error::PathLimitExceeded`] when the naive backtrace
/// of some prefix pair has more than `path_limit` paths.
pub fn check_equivalence(a: &Sequence, b: &Sequence, path_limit: usize) -> Result<CheckReport> {
    let distinct = DistinctGraph::build(a.clone(), b.clone());
    let embeddings = EmbeddingsGraph::build(a.clone(), b.clone());
    let ranks = distinct.ranks();
    let mut distinct_counter = ResultCounter::new(&distinct);
    let mut embeddings_counter = ResultCounter::new(&embeddings);
    let mut report = CheckReport::default();

    for i in 0..=a.len() {
        for j in 0..=b.len() {
            report.queries += 1;
            let mut fail = |what: &str| report.failures.push(format!("({i},{j}): {what}"));

            if distinct.adjacency(i, j)? != regional_antidominant(ranks, a, b, i, j)? {
                fail("distinct adjacency differs from regional antidominant set");
            }
            if embeddings.adjacency(i, j)? != regional_same_rank(ranks, a, b, i, j)? {
                fail("embeddings adjacency differs from regional same-rank set");
            }

            let naive = naive_backtrace(ranks, a, b, i, j, path_limit)?;
            let want_texts: BTreeSet<Vec<u8>> = dedup(naive.clone(), DedupKey::Text)
                .into_iter()
                .map(|r| r.text)
                .collect();
            let want_embeddings: BTreeSet<(Vec<usize>, Vec<usize>)> =
                dedup(naive, DedupKey::Embedding)
                    .into_iter()
                    .map(|r| (r.pos_a, r.pos_b))
                    .collect();

            let listed: Vec<LcsResult> = enumerate(&distinct, i, j)?.collect();
            let texts: BTreeSet<Vec<u8>> = listed.iter().map(|r| r.text.clone()).collect();
            if texts.len() != listed.len() {
                fail("distinct enumeration repeats a string");
            }
            if texts != want_texts {
                fail("distinct enumeration differs from deduplicated naive backtrace");
            }
            for r in &listed {
                if greedy_anticanonical(&a.as_bytes()[..i], &b.as_bytes()[..j], &r.text).as_ref()
                    != Some(r)
                {
                    fail("distinct result is not the anticanonical embedding");
                }
            }

            let embedded: BTreeSet<(Vec<usize>, Vec<usize>)> = enumerate(&embeddings, i, j)?
                .map(|r| (r.pos_a, r.pos_b))
                .collect();
            if embedded != want_embeddings {
                fail("embedding enumeration differs from deduplicated naive backtrace");
            }

            if distinct_counter.count(i, j)?.to_u64() != Some(want_texts.len() as u64) {
                fail("distinct count differs");
            }
            if embeddings_counter.count(i, j)?.to_u64() != Some(want_embeddings.len() as u64) {
                fail("embeddings count differs");
            }
        }
    }
    Ok(report)
}
