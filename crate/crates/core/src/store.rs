//! Pooled match nodes with one successor link each.
//!
//! Adjacency lists of different cells are excerpts of the same linked
//! contour lists, so nodes are addressed by index and shared freely.

use crate::sequence::MatchPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchNode {
    pub point: MatchPoint,
    pub next: Option<NodeId>,
}

#[derive(Debug, Clone, Default)]
pub struct NodeStore {
    nodes: Vec<MatchNode>,
    frozen: bool,
}

impl NodeStore {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn push(&mut self, point: MatchPoint) -> NodeId {
        assert!(!self.frozen, "node store is frozen");
        let id = NodeId(u32::try_from(self.nodes.len()).expect("node pool exhausted"));
        self.nodes.push(MatchNode { point, next: None });
        id
    }

    pub(crate) fn set_next(&mut self, from: NodeId, to: Option<NodeId>) {
        assert!(!self.frozen, "node store is frozen");
        self.nodes[from.index()].next = to;
    }

    pub(crate) fn freeze(&mut self) {
        self.frozen = true;
    }

    pub fn is_frozen(&self) -> bool {
        self.frozen
    }

    #[inline]
    pub fn point(&self, id: NodeId) -> MatchPoint {
        self.nodes[id.index()].point
    }

    #[inline]
    pub fn next(&self, id: NodeId) -> Option<NodeId> {
        self.nodes[id.index()].next
    }

    pub fn get(&self, id: NodeId) -> &MatchNode {
        &self.nodes[id.index()]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, &MatchNode)> {
        self.nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (NodeId(i as u32), n))
    }
}
