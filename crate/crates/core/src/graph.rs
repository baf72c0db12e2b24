//! Shared read interface over the two all-prefixes graph variants.

use crate::error::Result;
use crate::sequence::{MatchPoint, RankMatrix, Sequence};
use crate::store::{NodeId, NodeStore};

/// Location of one adjacency list inside the shared node store.
///
/// The list is walked by following `next` links from `head` until `stop` is
/// emitted; if `jump` is set, `jump` is emitted last. The link stored in
/// `stop` itself is never read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub head: NodeId,
    pub stop: NodeId,
    pub jump: Option<NodeId>,
}

/// Position within a [`Span`] walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Cursor {
    node: NodeId,
    stop: NodeId,
    jump: Option<NodeId>,
}

impl Cursor {
    pub(crate) fn start(span: Span) -> Self {
        Cursor {
            node: span.head,
            stop: span.stop,
            jump: span.jump,
        }
    }

    pub(crate) fn node(&self) -> NodeId {
        self.node
    }

    pub(crate) fn advance(self, store: &NodeStore) -> Option<Cursor> {
        if self.node == self.stop {
            self.jump.map(|t| Cursor {
                node: t,
                stop: t,
                jump: None,
            })
        } else {
            let next = store
                .next(self.node)
                .expect("contour list ends before the recorded stop node");
            Some(Cursor { node: next, ..self })
        }
    }
}

/// Either all-prefixes graph variant.
pub trait LcsGraph {
    fn a(&self) -> &Sequence;
    fn b(&self) -> &Sequence;
    fn ranks(&self) -> &RankMatrix;
    fn store(&self) -> &NodeStore;

    /// Adjacency span of cell `(i, j)`, absent when the rank is 0.
    /// Panics when out of range.
    fn span(&self, i: usize, j: usize) -> Option<Span>;

    /// Elementary steps spent by the builder.
    fn construction_steps(&self) -> u64;

    fn rank(&self, i: usize, j: usize) -> u32 {
        self.ranks().get(i, j)
    }

    fn check_cell(&self, i: usize, j: usize) -> Result<()> {
        self.ranks().check_cell(i, j)
    }

    fn adjacency_nodes(&self, i: usize, j: usize) -> Result<AdjacencyIter<'_>> {
        self.check_cell(i, j)?;
        Ok(AdjacencyIter {
            store: self.store(),
            cursor: self.span(i, j).map(Cursor::start),
        })
    }

    /// The matches adjacent to cell `(i, j)`, in contour order.
    fn adjacency(&self, i: usize, j: usize) -> Result<Vec<MatchPoint>> {
        let store = self.store();
        Ok(self
            .adjacency_nodes(i, j)?
            .map(|id| store.point(id))
            .collect())
    }
}

pub struct AdjacencyIter<'g> {
    store: &'g NodeStore,
    cursor: Option<Cursor>,
}

impl Iterator for AdjacencyIter<'_> {
    type Item = NodeId;

    fn next(&mut self) -> Option<NodeId> {
        let cur = self.cursor?;
        self.cursor = cur.advance(self.store);
        Some(cur.node())
    }
}
