//! Output-sensitive listing and exact counting of LCSs from any prefix pair.
//!
//! Paths through either graph variant, with a diagonal step after each
//! visited match, spell out the LCSs of the queried prefixes in reverse.
//! Walking them depth-first costs time proportional to the output.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::graph::{Cursor, LcsGraph};
use crate::store::NodeId;

/// One common subsequence together with its embedding.
///
/// Positions are 1-based and strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LcsResult {
    pub text: Vec<u8>,
    pub pos_a: Vec<usize>,
    pub pos_b: Vec<usize>,
}

impl LcsResult {
    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    pub fn text_lossy(&self) -> String {
        String::from_utf8_lossy(&self.text).into_owned()
    }
}

/// Arbitrary-precision result count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountValue(pub BigUint);

impl CountValue {
    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.0).ok()
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for CountValue {
    fn from(v: u64) -> Self {
        CountValue(BigUint::from(v))
    }
}

/// Lazy depth-first stream of the LCSs of one prefix pair.
///
/// Results come out in adjacency-list order, i.e. at every level the
/// lower-left matches are tried first. A rank-0 query yields exactly one
/// empty result.
pub struct Enumeration<'g, G: LcsGraph + ?Sized> {
    graph: &'g G,
    frames: Vec<Option<Cursor>>,
    path: Vec<NodeId>,
    pending_empty: bool,
    steps: u64,
}

impl<'g, G: LcsGraph + ?Sized> Enumeration<'g, G> {
    pub(crate) fn new(graph: &'g G, i: usize, j: usize) -> Result<Self> {
        graph.check_cell(i, j)?;
        let root = graph.span(i, j).map(Cursor::start);
        Ok(Enumeration {
            graph,
            pending_empty: root.is_none(),
            frames: root.into_iter().map(Some).collect(),
            path: Vec::new(),
            steps: 0,
        })
    }

    /// Traversal steps so far: node visits, emissions and frame pops.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    fn emit(&self) -> LcsResult {
        let store = self.graph.store();
        let mut out = LcsResult {
            text: Vec::with_capacity(self.path.len()),
            pos_a: Vec::with_capacity(self.path.len()),
            pos_b: Vec::with_capacity(self.path.len()),
        };
        for &id in self.path.iter().rev() {
            let p = store.point(id);
            out.text.push(p.symbol);
            out.pos_a.push(p.row);
            out.pos_b.push(p.col);
        }
        out
    }
}

impl<G: LcsGraph + ?Sized> Iterator for Enumeration<'_, G> {
    type Item = LcsResult;

    fn next(&mut self) -> Option<LcsResult> {
        if self.pending_empty {
            self.pending_empty = false;
            self.steps += 1;
            return Some(LcsResult::default());
        }
        let store = self.graph.store();
        loop {
            let top = self.frames.last_mut()?;
            let Some(cur) = top.take() else {
                self.frames.pop();
                self.path.pop();
                self.steps += 1;
                continue;
            };
            *top = cur.advance(store);
            self.steps += 1;

            let node = cur.node();
            let p = store.point(node);
            self.path.push(node);
            match self.graph.span(p.row - 1, p.col - 1) {
                None => {
                    let out = self.emit();
                    self.path.pop();
                    self.steps += 1;
                    return Some(out);
                }
                Some(span) => self.frames.push(Some(Cursor::start(span))),
            }
        }
    }
}

/// Streams every LCS of `a[..i]` and `b[..j]` represented by `graph`.
pub fn enumerate<G: LcsGraph + ?Sized>(
    graph: &G,
    i: usize,
    j: usize,
) -> Result<Enumeration<'_, G>> {
    Enumeration::new(graph, i, j)
}

/// Memoized path counter over one graph; reusable across queries.
///
/// The cache is keyed by match node: the count below a node depends only on
/// the cell diagonally before it.
pub struct ResultCounter<'g, G: LcsGraph + ?Sized> {
    graph: &'g G,
    memo: Vec<Option<BigUint>>,
}

impl<'g, G: LcsGraph + ?Sized> ResultCounter<'g, G> {
    pub fn new(graph: &'g G) -> Self {
        ResultCounter {
            graph,
            memo: vec![None; graph.store().len()],
        }
    }

    pub fn count(&mut self, i: usize, j: usize) -> Result<CountValue> {
        self.graph.check_cell(i, j)?;
        Ok(CountValue(self.cell_count(i, j)))
    }

    fn cell_count(&mut self, i: usize, j: usize) -> BigUint {
        let Some(span) = self.graph.span(i, j) else {
            return BigUint::one();
        };
        let store = self.graph.store();
        let mut total = BigUint::zero();
        let mut cur = Some(Cursor::start(span));
        while let Some(c) = cur {
            self.resolve(c.node());
            total += self.memo[c.node().index()].as_ref().unwrap();
            cur = c.advance(store);
        }
        total
    }

    /// Fills the memo entry of `root` and everything below it, without
    /// recursion: nodes are pushed until all children are known.
    fn resolve(&mut self, root: NodeId) {
        let graph = self.graph;
        let store = graph.store();
        let mut stack = vec![root];
        while let Some(&node) = stack.last() {
            if self.memo[node.index()].is_some() {
                stack.pop();
                continue;
            }
            let p = store.point(node);
            let Some(span) = graph.span(p.row - 1, p.col - 1) else {
                self.memo[node.index()] = Some(BigUint::one());
                stack.pop();
                continue;
            };
            let mut missing = false;
            let mut sum = BigUint::zero();
            let mut cur = Some(Cursor::start(span));
            while let Some(c) = cur {
                match &self.memo[c.node().index()] {
                    Some(v) if !missing => sum += v,
                    Some(_) => {}
                    None => {
                        missing = true;
                        stack.push(c.node());
                    }
                }
                cur = c.advance(store);
            }
            if !missing {
                self.memo[node.index()] = Some(sum);
                stack.pop();
            }
        }
    }
}

/// Number of results [`enumerate`] would yield for `(i, j)`.
pub fn count_results<G: LcsGraph + ?Sized>(graph: &G, i: usize, j: usize) -> Result<CountValue> {
    ResultCounter::new(graph).count(i, j)
}
