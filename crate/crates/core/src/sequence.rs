//! Input sequences, match points, and the LCS rank matrix.
//!
//! Positions are 1-based throughout the public API: `a.at(1)` is the first
//! symbol, and cell `(i, j)` of a [`RankMatrix`] holds the LCS length of the
//! prefixes `a[..i]` and `b[..j]`. Rows index the first sequence, columns the
//! second.

use std::fmt;

use crate::error::{Error, Result};

/// Largest accepted sequence length. Storage is dense in `m * n`.
pub const MAX_LEN: usize = 1 << 20;

/// A byte sequence with 1-based positional access.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Sequence {
    symbols: Vec<u8>,
}

impl Sequence {
    pub fn new(symbols: impl Into<Vec<u8>>) -> Result<Self> {
        let symbols = symbols.into();
        if symbols.len() > MAX_LEN {
            return Err(Error::InputTooLarge {
                len: symbols.len(),
                max: MAX_LEN,
            });
        }
        Ok(Self { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol at 1-based position `p`.
    ///
    /// Panics if `p` is 0 or larger than the length.
    #[inline]
    pub fn at(&self, p: usize) -> u8 {
        assert!(p >= 1, "sequence positions are 1-based");
        self.symbols[p - 1]
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.symbols
    }

    /// The prefix of length `len` as a new sequence.
    pub fn prefix(&self, len: usize) -> Sequence {
        Sequence {
            symbols: self.symbols[..len].to_vec(),
        }
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sequence({:?})", String::from_utf8_lossy(&self.symbols))
    }
}

impl TryFrom<&str> for Sequence {
    type Error = Error;

    fn try_from(s: &str) -> Result<Self> {
        Sequence::new(s.as_bytes())
    }
}

impl TryFrom<&[u8]> for Sequence {
    type Error = Error;

    fn try_from(s: &[u8]) -> Result<Self> {
        Sequence::new(s)
    }
}

/// A cell `(row, col)` where `a[row] == b[col] == symbol`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchPoint {
    pub row: usize,
    pub col: usize,
    pub symbol: u8,
}

impl MatchPoint {
    pub fn new(row: usize, col: usize, symbol: u8) -> Self {
        Self { row, col, symbol }
    }

    /// Sort key for contour order: lower-left to upper-right, i.e. by
    /// increasing column, ties broken by decreasing row.
    pub fn contour_key(&self) -> (usize, std::cmp::Reverse<usize>) {
        (self.col, std::cmp::Reverse(self.row))
    }
}

impl fmt::Display for MatchPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// `(m+1) x (n+1)` grid of LCS lengths of all prefix pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct RankMatrix {
    m: usize,
    n: usize,
    ranks: Vec<u32>,
}

impl RankMatrix {
    /// All-zero matrix; rows and columns 0 are already final.
    pub(crate) fn zeros(m: usize, n: usize) -> Self {
        Self {
            m,
            n,
            ranks: vec![0; (m + 1) * (n + 1)],
        }
    }

    /// Fills cell `(i, j)` from its three predecessors and returns the rank.
    #[inline]
    pub(crate) fn fill(&mut self, i: usize, j: usize, is_match: bool) -> u32 {
        let rank = if is_match {
            self.get(i - 1, j - 1) + 1
        } else {
            self.get(i - 1, j).max(self.get(i, j - 1))
        };
        let idx = self.index(i, j);
        self.ranks[idx] = rank;
        rank
    }

    #[inline]
    fn index(&self, i: usize, j: usize) -> usize {
        i * (self.n + 1) + j
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    /// Rank of cell `(i, j)`. Panics when out of range.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i <= self.m && j <= self.n);
        self.ranks[self.index(i, j)]
    }

    /// Length of an LCS of the full sequences.
    pub fn lcs_len(&self) -> u32 {
        self.get(self.m, self.n)
    }

    pub fn check_cell(&self, i: usize, j: usize) -> Result<()> {
        if i > self.m || j > self.n {
            return Err(Error::IndexOutOfRange {
                i,
                j,
                m: self.m,
                n: self.n,
            });
        }
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[u32] {
        let start = self.index(i, 0);
        &self.ranks[start..start + self.n + 1]
    }
}

impl fmt::Debug for RankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..=self.m).map(|i| self.row(i)))
            .finish()
    }
}

/// Fills the rank matrix row by row.
pub fn compute_ranks(a: &Sequence, b: &Sequence) -> RankMatrix {
    let (m, n) = (a.len(), b.len());
    let mut ranks = RankMatrix::zeros(m, n);
    for i in 1..=m {
        let ai = a.at(i);
        for j in 1..=n {
            ranks.fill(i, j, ai == b.at(j));
        }
    }
    ranks
}

/// Every match of the two sequences, row-major.
pub fn match_points(a: &Sequence, b: &Sequence) -> Vec<MatchPoint> {
    let mut out = Vec::new();
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            if a.at(i) == b.at(j) {
                out.push(MatchPoint::new(i, j, a.at(i)));
            }
        }
    }
    out
}
