#![allow(dead_code)]

use std::collections::BTreeSet;

use lcs_apg::oracle::{
    dedup, greedy_anticanonical, naive_backtrace, regional_antidominant, regional_same_rank,
    DedupKey, DEFAULT_PATH_LIMIT,
};
use lcs_apg::{
    count_results, enumerate, DistinctGraph, EmbeddingsGraph, LcsGraph, LcsResult, MatchPoint,
    Sequence,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn seq(s: &[u8]) -> Sequence {
    Sequence::new(s).unwrap()
}

/// Every string over `alphabet` of length at most `max_len`.
pub fn all_strings(alphabet: &[u8], max_len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|s: &Vec<u8>| {
                alphabet.iter().map(move |&c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn binary_corpus(max_len: usize) -> Vec<(Vec<u8>, Vec<u8>)> {
    let strings = all_strings(b"ab", max_len);
    let mut out = Vec::with_capacity(strings.len() * strings.len());
    for a in &strings {
        for b in &strings {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

pub fn random_corpus(
    count: usize,
    alphabet: &[u8],
    max_len: usize,
    seed: u64,
) -> Vec<(Vec<u8>, Vec<u8>)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let word = |rng: &mut StdRng| {
        let len = rng.random_range(0..=max_len);
        (0..len)
            .map(|_| alphabet[rng.random_range(0..alphabet.len())])
            .collect::<Vec<u8>>()
    };
    (0..count)
        .map(|_| {
            let a = word(&mut rng);
            let b = word(&mut rng);
            (a, b)
        })
        .collect()
}

pub fn abc_cba(k: usize) -> (Vec<u8>, Vec<u8>) {
    (b"abc".repeat(k), b"cba".repeat(k))
}

/// Tallies of one instance check, used for reporting.
#[derive(Debug, Default, Clone, Copy)]
pub struct Tally {
    pub instances: usize,
    pub queries: usize,
    pub failures: usize,
}

impl Tally {
    pub fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.queries += other.queries;
        self.failures += other.failures;
    }
}

fn pts(v: &[MatchPoint]) -> Vec<(usize, usize)> {
    v.iter().map(|p| (p.row, p.col)).collect()
}

fn show(a: &[u8], b: &[u8]) -> String {
    format!(
        "{:?}/{:?}",
        String::from_utf8_lossy(a),
        String::from_utf8_lossy(b)
    )
}

/// Set equality of the two enumerations against the deduplicated naive
/// backtrace, and agreement of the counts, at every prefix pair.
pub fn check_enumeration(a: &[u8], b: &[u8]) -> Result<Tally, String> {
    let (sa, sb) = (seq(a), seq(b));
    let d = DistinctGraph::build(sa.clone(), sb.clone());
    let e = EmbeddingsGraph::build(sa.clone(), sb.clone());
    let ranks = d.ranks();
    let mut tally = Tally {
        instances: 1,
        ..Tally::default()
    };
    for i in 0..=a.len() {
        for j in 0..=b.len() {
            tally.queries += 1;
            let naive = naive_backtrace(ranks, &sa, &sb, i, j, DEFAULT_PATH_LIMIT)
                .map_err(|e| format!("{}: {e}", show(a, b)))?;

            let by_text: BTreeSet<Vec<u8>> = dedup(naive.clone(), DedupKey::Text)
                .into_iter()
                .map(|r| r.text)
                .collect();
            let listed: Vec<LcsResult> = enumerate(&d, i, j).unwrap().collect();
            let listed_texts: BTreeSet<Vec<u8>> = listed.iter().map(|r| r.text.clone()).collect();
            if listed_texts.len() != listed.len() || listed_texts != by_text {
                return Err(format!("{} ({i},{j}): distinct set mismatch", show(a, b)));
            }

            let by_embedding: BTreeSet<(Vec<usize>, Vec<usize>)> =
                dedup(naive, DedupKey::Embedding)
                    .into_iter()
                    .map(|r| (r.pos_a, r.pos_b))
                    .collect();
            let embedded: Vec<LcsResult> = enumerate(&e, i, j).unwrap().collect();
            let embedded_set: BTreeSet<(Vec<usize>, Vec<usize>)> = embedded
                .iter()
                .map(|r| (r.pos_a.clone(), r.pos_b.clone()))
                .collect();
            if embedded_set.len() != embedded.len() || embedded_set != by_embedding {
                return Err(format!("{} ({i},{j}): embedding set mismatch", show(a, b)));
            }

            let cd = count_results(&d, i, j).unwrap().to_u64();
            let ce = count_results(&e, i, j).unwrap().to_u64();
            if cd != Some(by_text.len() as u64) || ce != Some(by_embedding.len() as u64) {
                return Err(format!("{} ({i},{j}): count mismatch", show(a, b)));
            }
        }
    }
    Ok(tally)
}

/// Adjacency lists of both graphs against the definitional regional sets.
pub fn check_adjacency(a: &[u8], b: &[u8]) -> Result<Tally, String> {
    let (sa, sb) = (seq(a), seq(b));
    let d = DistinctGraph::build(sa.clone(), sb.clone());
    let e = EmbeddingsGraph::build(sa.clone(), sb.clone());
    let ranks = d.ranks();
    let mut tally = Tally {
        instances: 1,
        ..Tally::default()
    };
    for i in 0..=a.len() {
        for j in 0..=b.len() {
            tally.queries += 1;
            let want = regional_antidominant(ranks, &sa, &sb, i, j).unwrap();
            let got = d.adjacency(i, j).unwrap();
            if got != want {
                return Err(format!(
                    "{} ({i},{j}): distinct adjacency {:?} != {:?}",
                    show(a, b),
                    pts(&got),
                    pts(&want)
                ));
            }
            let want = regional_same_rank(ranks, &sa, &sb, i, j).unwrap();
            let got = e.adjacency(i, j).unwrap();
            if got != want {
                return Err(format!(
                    "{} ({i},{j}): embeddings adjacency {:?} != {:?}",
                    show(a, b),
                    pts(&got),
                    pts(&want)
                ));
            }
        }
    }
    Ok(tally)
}

/// Both construction counters within `40 (m+1)(n+1)`.
pub fn check_construction_bound(a: &[u8], b: &[u8]) -> Result<(), String> {
    let bound = 40 * (a.len() as u64 + 1) * (b.len() as u64 + 1);
    let d = DistinctGraph::build(seq(a), seq(b));
    let e = EmbeddingsGraph::build(seq(a), seq(b));
    for (name, steps) in [
        ("distinct", d.construction_steps()),
        ("embeddings", e.construction_steps()),
    ] {
        if steps > bound {
            return Err(format!("{} {name}: {steps} steps > {bound}", show(a, b)));
        }
    }
    Ok(())
}

/// Traversal counter within `2 (total symbols + results + 1)` on every query.
pub fn check_traversal_bound(a: &[u8], b: &[u8]) -> Result<Tally, String> {
    let d = DistinctGraph::build(seq(a), seq(b));
    let e = EmbeddingsGraph::build(seq(a), seq(b));
    let mut tally = Tally {
        instances: 1,
        ..Tally::default()
    };
    for i in 0..=a.len() {
        for j in 0..=b.len() {
            tally.queries += 1;
            check_one_traversal(&d, i, j).map_err(|m| format!("{} distinct {m}", show(a, b)))?;
            check_one_traversal(&e, i, j).map_err(|m| format!("{} embeddings {m}", show(a, b)))?;
        }
    }
    Ok(tally)
}

fn check_one_traversal<G: LcsGraph>(g: &G, i: usize, j: usize) -> Result<(), String> {
    let mut it = enumerate(g, i, j).unwrap();
    let (mut symbols, mut results) = (0u64, 0u64);
    for r in it.by_ref() {
        symbols += r.len() as u64;
        results += 1;
    }
    let bound = 2 * (symbols + results + 1);
    if it.steps() > bound {
        return Err(format!("({i},{j}): {} steps > {bound}", it.steps()));
    }
    Ok(())
}

/// Distinct results carry the anticanonical embedding of their text.
pub fn check_anticanonical(a: &[u8], b: &[u8]) -> Result<Tally, String> {
    let d = DistinctGraph::build(seq(a), seq(b));
    let mut tally = Tally {
        instances: 1,
        ..Tally::default()
    };
    for i in 0..=a.len() {
        for j in 0..=b.len() {
            tally.queries += 1;
            for r in enumerate(&d, i, j).unwrap() {
                let want = greedy_anticanonical(&a[..i], &b[..j], &r.text);
                if want.as_ref() != Some(&r) {
                    return Err(format!(
                        "{} ({i},{j}): {:?} is not anticanonical",
                        show(a, b),
                        r
                    ));
                }
            }
        }
    }
    Ok(tally)
}
