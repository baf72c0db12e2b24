//! All-prefixes graph for distinct LCSs.
//!
//! Cell `(i, j)` points to every match of rank `L[i][j]` that is
//! antidominant within the prefixes `a[..i]`, `b[..j]`: no other match of
//! that rank in the region shares its row further right or its column
//! further down. Each list is stored as an ordinary linked run
//! `head ..= pretail` followed by a separately recorded `tail`, so lists of
//! neighbouring cells share nearly all of their nodes.

use crate::error::Result;
use crate::graph::{LcsGraph, Span};
use crate::sequence::{MatchPoint, RankMatrix, Sequence};
use crate::store::{NodeId, NodeStore};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CellRecord {
    pub rank: u32,
    pub head: Option<NodeId>,
    pub pretail: Option<NodeId>,
    pub tail: Option<NodeId>,
}

#[derive(Debug, Clone)]
pub struct DistinctGraph {
    a: Sequence,
    b: Sequence,
    ranks: RankMatrix,
    store: NodeStore,
    cells: Vec<CellRecord>,
    steps: u64,
}

impl DistinctGraph {
    /// Builds the graph in one row-major pass with constant work per cell.
    pub fn build(a: Sequence, b: Sequence) -> Self {
        let (m, n) = (a.len(), b.len());
        let width = n + 1;
        let mut ranks = RankMatrix::zeros(m, n);
        let mut store = NodeStore::new();
        let mut cells = vec![CellRecord::default(); (m + 1) * width];
        let mut steps: u64 = 0;
        // Per node: a later match in the same row has the same rank. Final
        // once the node's row is finished.
        let mut row_shadowed: Vec<bool> = Vec::new();

        for i in 1..=m {
            let ai = a.at(i);
            let mut prev_in_row: Option<(NodeId, u32)> = None;
            for j in 1..=n {
                let is_match = ai == b.at(j);
                let rank = ranks.fill(i, j, is_match);
                steps += 3;

                if is_match {
                    let id = store.push(MatchPoint::new(i, j, ai));
                    row_shadowed.push(false);
                    if let Some((prev, prev_rank)) = prev_in_row {
                        row_shadowed[prev.index()] = prev_rank == rank;
                    }
                    prev_in_row = Some((id, rank));
                    steps += 3;
                    cells[i * width + j] = CellRecord {
                        rank,
                        head: None,
                        pretail: None,
                        tail: Some(id),
                    };
                    steps += 2;
                    continue;
                }

                let mut rec = CellRecord {
                    rank,
                    ..CellRecord::default()
                };
                steps += 2;
                if rank == 0 {
                    cells[i * width + j] = rec;
                    continue;
                }

                let up = cells[(i - 1) * width + j];
                let left = cells[i * width + j - 1];
                steps += 1;
                if up.rank == rank {
                    rec.head = up.head;
                    rec.pretail = up.pretail;
                    rec.tail = up.tail;
                    steps += 3;
                }

                steps += 1;
                if left.rank == rank {
                    let left_tail = left.tail.expect("nonzero rank has a tail");
                    steps += 1;
                    match rec.tail {
                        None => {
                            // Only row-i matches of this rank are in the left
                            // region, so the left list is a single node.
                            rec.tail = Some(left_tail);
                            steps += 1;
                        }
                        Some(up_tail) => {
                            let tl = store.point(left_tail);
                            let tu = store.point(up_tail);
                            steps += 1;
                            if tl.row == tu.row {
                                // Same node, or shadowed by the column-j tail.
                                rec.pretail = left.pretail;
                            } else {
                                rec.pretail = Some(left_tail);
                            }
                            steps += 3;
                            if tl.col == tu.col && tl.row != tu.row {
                                // The up tail is shadowed by the row-i node,
                                // which is then the whole list.
                                rec.tail = Some(left_tail);
                                rec.head = None;
                                rec.pretail = None;
                                steps += 3;
                            } else {
                                steps += 1;
                                match rec.pretail {
                                    None => {
                                        rec.head = None;
                                        steps += 1;
                                    }
                                    Some(pt) => {
                                        // A tail with a same-rank match further
                                        // along its row never follows another
                                        // node in a walked run, and linking to
                                        // it could clobber a link still in use.
                                        if !row_shadowed[up_tail.index()] {
                                            store.set_next(pt, Some(up_tail));
                                        }
                                        rec.head = left.head.or(Some(pt));
                                        steps += 4;
                                    }
                                }
                            }
                        }
                    }
                }
                cells[i * width + j] = rec;
            }
        }
        store.freeze();

        DistinctGraph {
            a,
            b,
            ranks,
            store,
            cells,
            steps,
        }
    }

    pub fn cell(&self, i: usize, j: usize) -> Result<&CellRecord> {
        self.ranks.check_cell(i, j)?;
        Ok(&self.cells[i * (self.b.len() + 1) + j])
    }
}

impl LcsGraph for DistinctGraph {
    fn a(&self) -> &Sequence {
        &self.a
    }

    fn b(&self) -> &Sequence {
        &self.b
    }

    fn ranks(&self) -> &RankMatrix {
        &self.ranks
    }

    fn store(&self) -> &NodeStore {
        &self.store
    }

    fn span(&self, i: usize, j: usize) -> Option<Span> {
        let c = &self.cells[i * (self.b.len() + 1) + j];
        let tail = c.tail?;
        Some(match (c.head, c.pretail) {
            (Some(head), Some(stop)) => Span {
                head,
                stop,
                jump: Some(tail),
            },
            _ => Span {
                head: tail,
                stop: tail,
                jump: None,
            },
        })
    }

    fn construction_steps(&self) -> u64 {
        self.steps
    }
}
