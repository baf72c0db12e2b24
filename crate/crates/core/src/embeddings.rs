//! All-prefixes graph for all LCS embeddings.
//!
//! Cell `(i, j)` points to every match of rank `L[i][j]` inside the
//! prefixes `a[..i]`, `b[..j]`. Sorted in contour order these form a
//! contiguous run of the rank's contour, so each cell stores just the two
//! ends of an excerpt of a shared linked list.

use crate::error::Result;
use crate::graph::{LcsGraph, Span};
use crate::sequence::{MatchPoint, RankMatrix, Sequence};
use crate::store::{NodeId, NodeStore};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExcerptRecord {
    pub rank: u32,
    pub head: Option<NodeId>,
    pub tail: Option<NodeId>,
}

#[derive(Debug, Clone)]
pub struct EmbeddingsGraph {
    a: Sequence,
    b: Sequence,
    ranks: RankMatrix,
    store: NodeStore,
    cells: Vec<ExcerptRecord>,
    steps: u64,
}

impl EmbeddingsGraph {
    pub fn build(a: Sequence, b: Sequence) -> Self {
        let (m, n) = (a.len(), b.len());
        let width = n + 1;
        let mut ranks = RankMatrix::zeros(m, n);
        let mut store = NodeStore::new();
        let mut cells = vec![ExcerptRecord::default(); (m + 1) * width];
        let mut steps: u64 = 0;

        for i in 1..=m {
            let ai = a.at(i);
            for j in 1..=n {
                let is_match = ai == b.at(j);
                let rank = ranks.fill(i, j, is_match);
                steps += 3;

                let own = is_match.then(|| store.push(MatchPoint::new(i, j, ai)));
                let mut rec = ExcerptRecord {
                    rank,
                    head: own,
                    tail: own,
                };
                steps += 3;
                if rank == 0 {
                    cells[i * width + j] = rec;
                    continue;
                }

                let up = cells[(i - 1) * width + j];
                let left = cells[i * width + j - 1];
                steps += 1;
                if up.rank == rank {
                    // The up list lies entirely in column j above this cell.
                    match own {
                        Some(id) => store.set_next(id, up.head),
                        None => rec.head = up.head,
                    }
                    rec.tail = up.tail;
                    steps += 3;
                }

                steps += 1;
                if left.rank == rank {
                    let left_tail = left.tail.expect("nonzero rank has a tail");
                    steps += 1;
                    match rec.head {
                        None => {
                            rec.head = left.head;
                            rec.tail = left.tail;
                            steps += 2;
                        }
                        Some(head) => {
                            steps += 1;
                            if store.point(left_tail).row == i {
                                // Disjoint: the left list is all in row i.
                                store.set_next(left_tail, Some(head));
                                steps += 1;
                            }
                            // Otherwise the lists overlap and the left list
                            // already runs into the current one.
                            rec.head = left.head;
                            steps += 1;
                        }
                    }
                }
                cells[i * width + j] = rec;
            }
        }
        store.freeze();

        EmbeddingsGraph {
            a,
            b,
            ranks,
            store,
            cells,
            steps,
        }
    }

    pub fn cell(&self, i: usize, j: usize) -> Result<&ExcerptRecord> {
        self.ranks.check_cell(i, j)?;
        Ok(&self.cells[i * (self.b.len() + 1) + j])
    }
}

impl LcsGraph for EmbeddingsGraph {
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
        Some(Span {
            head: c.head?,
            stop: c.tail?,
            jump: None,
        })
    }

    fn construction_steps(&self) -> u64 {
        self.steps
    }
}
