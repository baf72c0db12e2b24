//! All-prefixes LCS graphs.
//!
//! After an `O(mn)` build, the graphs list or count every longest common
//! subsequence of any prefix pair `a[..i]`, `b[..j]` in time proportional
//! to the output. [`DistinctGraph`] yields each distinct LCS string once,
//! with its anticanonical (rightmost) embedding; [`EmbeddingsGraph`] yields
//! every embedding once.
//!
//! ```
//! use lcs_apg::{enumerate, count_results, DistinctGraph, EmbeddingsGraph, Sequence};
//!
//! let a = Sequence::try_from("bilabial").unwrap();
//! let b = Sequence::try_from("balaclava").unwrap();
//! let distinct = DistinctGraph::build(a.clone(), b.clone());
//! let texts: Vec<_> = enumerate(&distinct, 8, 9).unwrap().map(|r| r.text_lossy()).collect();
//! assert_eq!(texts, ["baal", "blal", "blaa"]);
//!
//! let all = EmbeddingsGraph::build(a, b);
//! assert_eq!(count_results(&all, 8, 9).unwrap().to_string(), "7");
//! ```

pub mod check;
pub mod classify;
pub mod cli;
pub mod distinct;
pub mod embeddings;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod sequence;
pub mod store;

pub use check::{check_equivalence, CheckReport};
pub use classify::{classify_matches, ClassifiedMatch, MatchClassification};
pub use distinct::{CellRecord, DistinctGraph};
pub use embeddings::{EmbeddingsGraph, ExcerptRecord};
pub use enumerate::{count_results, enumerate, CountValue, Enumeration, LcsResult, ResultCounter};
pub use error::{Error, Result};
pub use graph::{LcsGraph, Span};
pub use sequence::{compute_ranks, match_points, MatchPoint, RankMatrix, Sequence, MAX_LEN};
pub use store::{MatchNode, NodeId, NodeStore};
