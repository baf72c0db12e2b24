//! Command-line front end.
//!
//! ```text
//! lcs-apg <length|list|count|graph|matrix|check> [OPTIONS] <A> <B>
//! ```
//!
//! `A` and `B` are literal byte strings, or `@path` to read a file verbatim
//! (trailing newlines included). A leading `@@` stands for a literal `@`.
//!
//! Exit codes: 0 success, 1 usage error, 2 input error (unreadable file,
//! prefix out of range, size cap, oracle path limit), 3 `check` found a
//! mismatch.

use std::collections::{HashMap, HashSet};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::check::check_equivalence;
use crate::classify::classify_matches;
use crate::distinct::DistinctGraph;
use crate::embeddings::EmbeddingsGraph;
use crate::enumerate::{count_results, enumerate, LcsResult};
use crate::error::Error;
use crate::graph::LcsGraph;
use crate::oracle::DEFAULT_PATH_LIMIT;
use crate::sequence::{compute_ranks, Sequence};
use crate::store::NodeId;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lcs-apg",
    version,
    about = "List or count every longest common subsequence of two byte strings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the LCS length of the selected prefixes.
    Length(CommonArgs),
    /// Stream every LCS (or every embedding) with its positions.
    List(CommonArgs),
    /// Print the exact number of results `list` would produce.
    Count(CommonArgs),
    /// Export the sub-graph reachable from the selected cell.
    Graph(CommonArgs),
    /// Render the rank matrix with matches and their classification.
    Matrix(CommonArgs),
    /// Compare both graphs with the naive oracle at every prefix pair.
    Check(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Each distinct LCS string once.
    Distinct,
    /// Each embedding once.
    Embeddings,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Args)]
struct CommonArgs {
    #[arg(long, value_enum, default_value_t = Mode::Distinct)]
    mode: Mode,

    /// Prefix lengths of A and B (default: full lengths).
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    prefix: Option<Vec<usize>>,

    /// text or json; graph accepts dot or json (default dot).
    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Cap on listed results; 0 means unlimited.
    #[arg(long, default_value_t = 10_000)]
    max_results: usize,

    /// First sequence, or @path.
    #[arg(value_parser = clap::value_parser!(OsString))]
    a: OsString,

    /// Second sequence, or @path.
    #[arg(value_parser = clap::value_parser!(OsString))]
    b: OsString,
}

/// Byte string carried as JSON text when it is valid UTF-8, otherwise as an
/// array of byte values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Symbols {
    Text(String),
    Bytes(Vec<u8>),
}

impl Symbols {
    pub fn from_bytes(bytes: &[u8]) -> Self {
        match std::str::from_utf8(bytes) {
            Ok(s) => Symbols::Text(s.to_owned()),
            Err(_) => Symbols::Bytes(bytes.to_vec()),
        }
    }

    pub fn into_bytes(self) -> Vec<u8> {
        match self {
            Symbols::Text(s) => s.into_bytes(),
            Symbols::Bytes(b) => b,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ResultDoc {
    pub text: Symbols,
    pub pos_a: Vec<usize>,
    pub pos_b: Vec<usize>,
}

impl From<&LcsResult> for ResultDoc {
    fn from(r: &LcsResult) -> Self {
        ResultDoc {
            text: Symbols::from_bytes(&r.text),
            pos_a: r.pos_a.clone(),
            pos_b: r.pos_b.clone(),
        }
    }
}

impl From<ResultDoc> for LcsResult {
    fn from(d: ResultDoc) -> Self {
        LcsResult {
            text: d.text.into_bytes(),
            pos_a: d.pos_a,
            pos_b: d.pos_b,
        }
    }
}

/// JSON document of `list --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ListDoc {
    pub a: Symbols,
    pub b: Symbols,
    pub mode: Mode,
    pub prefix_a: usize,
    pub prefix_b: usize,
    pub lcs_length: u32,
    pub truncated: bool,
    pub results: Vec<ResultDoc>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct LengthDoc {
    a: Symbols,
    b: Symbols,
    prefix_a: usize,
    prefix_b: usize,
    lcs_length: u32,
}

/// `count` as JSON; the count is a decimal string since it is unbounded.
#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct CountDoc {
    a: Symbols,
    b: Symbols,
    mode: Mode,
    prefix_a: usize,
    prefix_b: usize,
    lcs_length: u32,
    count: String,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct GraphNodeDoc {
    id: String,
    row: usize,
    col: usize,
    symbol: Symbols,
}

#[derive(Debug, Serialize)]
struct GraphEdgeDoc {
    from: String,
    to: String,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct GraphDoc {
    a: Symbols,
    b: Symbols,
    mode: Mode,
    prefix_a: usize,
    prefix_b: usize,
    nodes: Vec<GraphNodeDoc>,
    edges: Vec<GraphEdgeDoc>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct MatrixMatchDoc {
    row: usize,
    col: usize,
    symbol: Symbols,
    rank: u32,
    dominant: bool,
    antidominant: bool,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct MatrixDoc {
    a: Symbols,
    b: Symbols,
    ranks: Vec<Vec<u32>>,
    matches: Vec<MatrixMatchDoc>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct CheckDoc {
    a: Symbols,
    b: Symbols,
    queries: usize,
    passed: bool,
    failures: Vec<String>,
}

enum Failure {
    Usage(String),
    Input(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let status = match cli.command {
        Command::Length(c) => with_inputs(c, false, out, err, cmd_length),
        Command::List(c) => with_inputs(c, false, out, err, cmd_list),
        Command::Count(c) => with_inputs(c, false, out, err, cmd_count),
        Command::Graph(c) => with_inputs(c, true, out, err, cmd_graph),
        Command::Matrix(c) => with_inputs(c, false, out, err, cmd_matrix),
        Command::Check(c) => with_inputs(c, false, out, err, cmd_check),
    };
    match status {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

/// Resolved command-line inputs.
struct Query {
    a: Sequence,
    b: Sequence,
    mode: Mode,
    i: usize,
    j: usize,
    format: Format,
    max_results: usize,
}

impl Query {
    fn symbols(&self) -> (Symbols, Symbols) {
        (
            Symbols::from_bytes(self.a.as_bytes()),
            Symbols::from_bytes(self.b.as_bytes()),
        )
    }
}

type Handler = fn(&Query, &mut dyn Write, &mut dyn Write) -> Result<i32, Failure>;

fn with_inputs(
    args: CommonArgs,
    graph_cmd: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
    handler: Handler,
) -> Result<i32, Failure> {
    let format = args
        .format
        .unwrap_or(if graph_cmd { Format::Dot } else { Format::Text });
    match (graph_cmd, format) {
        (true, Format::Text) => {
            return Err(Failure::Usage("graph supports --format dot or json".into()))
        }
        (false, Format::Dot) => {
            return Err(Failure::Usage(
                "--format dot is only valid for graph".into(),
            ))
        }
        _ => {}
    }

    let a = Sequence::new(read_input(&args.a)?)?;
    let b = Sequence::new(read_input(&args.b)?)?;
    let (i, j) = match args.prefix.as_deref() {
        None => (a.len(), b.len()),
        Some(&[i, j]) => (i, j),
        Some(_) => unreachable!("clap enforces two prefix values"),
    };
    if i > a.len() || j > b.len() {
        return Err(Failure::Input(format!(
            "prefix ({i}, {j}) exceeds input lengths ({}, {})",
            a.len(),
            b.len()
        )));
    }
    let query = Query {
        a,
        b,
        mode: args.mode,
        i,
        j,
        format,
        max_results: args.max_results,
    };
    handler(&query, out, err)
}

fn read_input(arg: &OsString) -> Result<Vec<u8>, Failure> {
    let bytes = os_bytes(arg);
    if let Some(rest) = bytes.strip_prefix(b"@@") {
        let mut v = b"@".to_vec();
        v.extend_from_slice(rest);
        return Ok(v);
    }
    match bytes.strip_prefix(b"@") {
        Some(path) => {
            let path = String::from_utf8_lossy(path).into_owned();
            std::fs::read(&path).map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))
        }
        None => Ok(bytes),
    }
}

#[cfg(unix)]
fn os_bytes(s: &OsString) -> Vec<u8> {
    use std::os::unix::ffi::OsStrExt;
    s.as_bytes().to_vec()
}

#[cfg(not(unix))]
fn os_bytes(s: &OsString) -> Vec<u8> {
    s.to_string_lossy().into_owned().into_bytes()
}

fn cmd_length(q: &Query, out: &mut dyn Write, _err: &mut dyn Write) -> Result<i32, Failure> {
    let len = compute_ranks(&q.a, &q.b).get(q.i, q.j);
    match q.format {
        Format::Json => {
            let (a, b) = q.symbols();
            let doc = LengthDoc {
                a,
                b,
                prefix_a: q.i,
                prefix_b: q.j,
                lcs_length: len,
            };
            serde_json::to_writer(&mut *out, &doc)?;
            writeln!(out)?;
        }
        _ => writeln!(out, "{len}")?,
    }
    Ok(EXIT_OK)
}

fn cmd_list(q: &Query, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match q.mode {
        Mode::Distinct => list_from(&DistinctGraph::build(q.a.clone(), q.b.clone()), q, out, err),
        Mode::Embeddings => list_from(
            &EmbeddingsGraph::build(q.a.clone(), q.b.clone()),
            q,
            out,
            err,
        ),
    }
}

fn list_from<G: LcsGraph>(
    g: &G,
    q: &Query,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let cap = if q.max_results == 0 {
        usize::MAX
    } else {
        q.max_results
    };
    let mut stream = enumerate(g, q.i, q.j)?.peekable();
    let mut emitted = Vec::new();
    let mut n = 0usize;
    while n < cap {
        let Some(r) = stream.next() else { break };
        n += 1;
        match q.format {
            Format::Json => emitted.push(ResultDoc::from(&r)),
            _ => {
                out.write_all(&r.text)?;
                writeln!(out, "\t{}\t{}", join(&r.pos_a), join(&r.pos_b))?;
            }
        }
    }
    let truncated = stream.peek().is_some();
    match q.format {
        Format::Json => {
            let (a, b) = q.symbols();
            let doc = ListDoc {
                a,
                b,
                mode: q.mode,
                prefix_a: q.i,
                prefix_b: q.j,
                lcs_length: g.rank(q.i, q.j),
                truncated,
                results: emitted,
            };
            serde_json::to_writer(&mut *out, &doc)?;
            writeln!(out)?;
        }
        _ if truncated => writeln!(err, "note: output truncated after {n} results")?,
        _ => {}
    }
    Ok(EXIT_OK)
}

fn join(pos: &[usize]) -> String {
    let mut s = String::new();
    for (k, p) in pos.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "{p}");
    }
    s
}

fn cmd_count(q: &Query, out: &mut dyn Write, _err: &mut dyn Write) -> Result<i32, Failure> {
    let (count, rank) = match q.mode {
        Mode::Distinct => {
            let g = DistinctGraph::build(q.a.clone(), q.b.clone());
            (count_results(&g, q.i, q.j)?, g.rank(q.i, q.j))
        }
        Mode::Embeddings => {
            let g = EmbeddingsGraph::build(q.a.clone(), q.b.clone());
            (count_results(&g, q.i, q.j)?, g.rank(q.i, q.j))
        }
    };
    match q.format {
        Format::Json => {
            let (a, b) = q.symbols();
            let doc = CountDoc {
                a,
                b,
                mode: q.mode,
                prefix_a: q.i,
                prefix_b: q.j,
                lcs_length: rank,
                count: count.to_string(),
            };
            serde_json::to_writer(&mut *out, &doc)?;
            writeln!(out)?;
        }
        _ => writeln!(out, "{count}")?,
    }
    Ok(EXIT_OK)
}

fn cmd_graph(q: &Query, out: &mut dyn Write, _err: &mut dyn Write) -> Result<i32, Failure> {
    match q.mode {
        Mode::Distinct => graph_from(&DistinctGraph::build(q.a.clone(), q.b.clone()), q, out),
        Mode::Embeddings => graph_from(&EmbeddingsGraph::build(q.a.clone(), q.b.clone()), q, out),
    }
}

/// Reachable nodes in discovery order and the edges between them. Edge
/// `u -> v` means `v` is adjacent to the cell diagonally before `u`.
fn reachable<G: LcsGraph>(
    g: &G,
    i: usize,
    j: usize,
) -> (Vec<NodeId>, Vec<(Option<NodeId>, NodeId)>) {
    let store = g.store();
    let mut seen = HashSet::new();
    let mut order = Vec::new();
    let mut edges = Vec::new();
    let mut frontier: Vec<Option<NodeId>> = vec![None];
    let mut k = 0;
    while k < frontier.len() {
        let from = frontier[k];
        k += 1;
        let (r, c) = match from {
            None => (i, j),
            Some(u) => {
                let p = store.point(u);
                (p.row - 1, p.col - 1)
            }
        };
        for v in g.adjacency_nodes(r, c).expect("cell in range") {
            edges.push((from, v));
            if seen.insert(v) {
                order.push(v);
                frontier.push(Some(v));
            }
        }
    }
    (order, edges)
}

fn node_id(g: &impl LcsGraph, id: Option<NodeId>) -> String {
    match id {
        None => "start".into(),
        Some(id) => {
            let p = g.store().point(id);
            format!("{}_{}", p.row, p.col)
        }
    }
}

fn show_symbol(c: u8) -> String {
    match c {
        b'"' => "\\\"".into(),
        b'\\' => "\\\\".into(),
        0x21..=0x7e => (c as char).to_string(),
        _ => format!("\\\\x{c:02x}"),
    }
}

fn graph_from<G: LcsGraph>(g: &G, q: &Query, out: &mut dyn Write) -> Result<i32, Failure> {
    let (nodes, edges) = reachable(g, q.i, q.j);
    match q.format {
        Format::Json => {
            let (a, b) = q.symbols();
            let doc = GraphDoc {
                a,
                b,
                mode: q.mode,
                prefix_a: q.i,
                prefix_b: q.j,
                nodes: nodes
                    .iter()
                    .map(|&id| {
                        let p = g.store().point(id);
                        GraphNodeDoc {
                            id: node_id(g, Some(id)),
                            row: p.row,
                            col: p.col,
                            symbol: Symbols::from_bytes(&[p.symbol]),
                        }
                    })
                    .collect(),
                edges: edges
                    .iter()
                    .map(|&(u, v)| GraphEdgeDoc {
                        from: node_id(g, u),
                        to: node_id(g, Some(v)),
                    })
                    .collect(),
            };
            serde_json::to_writer(&mut *out, &doc)?;
            writeln!(out)?;
        }
        _ => {
            writeln!(out, "digraph lcs {{")?;
            writeln!(out, "  rankdir=LR;")?;
            writeln!(
                out,
                "  \"start\" [shape=box, label=\"start({},{})\"];",
                q.i, q.j
            )?;
            for &id in &nodes {
                let p = g.store().point(id);
                writeln!(
                    out,
                    "  \"{}\" [label=\"{}({},{})\"];",
                    node_id(g, Some(id)),
                    show_symbol(p.symbol),
                    p.row,
                    p.col
                )?;
            }
            for &(u, v) in &edges {
                writeln!(
                    out,
                    "  \"{}\" -> \"{}\";",
                    node_id(g, u),
                    node_id(g, Some(v))
                )?;
            }
            writeln!(out, "}}")?;
        }
    }
    Ok(EXIT_OK)
}

fn matrix_label(c: u8) -> String {
    match c {
        0x21..=0x7e => (c as char).to_string(),
        _ => format!("\\x{c:02x}"),
    }
}

fn cmd_matrix(q: &Query, out: &mut dyn Write, _err: &mut dyn Write) -> Result<i32, Failure> {
    let (a, b) = (q.a.prefix(q.i), q.b.prefix(q.j));
    let ranks = compute_ranks(&a, &b);
    let classes = classify_matches(&a, &b, &ranks);
    let flags: HashMap<(usize, usize), (bool, bool)> = classes
        .iter()
        .map(|c| ((c.point.row, c.point.col), (c.dominant, c.antidominant)))
        .collect();

    if q.format == Format::Json {
        let (sa, sb) = q.symbols();
        let doc = MatrixDoc {
            a: sa,
            b: sb,
            ranks: (0..=q.i).map(|i| ranks.row(i).to_vec()).collect(),
            matches: classes
                .iter()
                .map(|c| MatrixMatchDoc {
                    row: c.point.row,
                    col: c.point.col,
                    symbol: Symbols::from_bytes(&[c.point.symbol]),
                    rank: c.rank,
                    dominant: c.dominant,
                    antidominant: c.antidominant,
                })
                .collect(),
        };
        serde_json::to_writer(&mut *out, &doc)?;
        writeln!(out)?;
        return Ok(EXIT_OK);
    }

    let mut grid: Vec<Vec<String>> = Vec::with_capacity(q.i + 2);
    let mut header = vec![String::new(), String::new()];
    header.extend((1..=q.j).map(|j| matrix_label(b.at(j))));
    grid.push(header);
    for i in 0..=q.i {
        let mut row = vec![if i == 0 {
            String::new()
        } else {
            matrix_label(a.at(i))
        }];
        for j in 0..=q.j {
            let r = ranks.get(i, j);
            row.push(match flags.get(&(i, j)) {
                Some(&(dom, anti)) => format!(
                    "({r}){}{}",
                    if dom { "*" } else { "" },
                    if anti { "!" } else { "" }
                ),
                None => r.to_string(),
            });
        }
        grid.push(row);
    }
    let width = grid.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in &grid {
        let line: Vec<String> = row.iter().map(|c| format!("{c:<width$}")).collect();
        writeln!(out, "{}", line.join(" ").trim_end())?;
    }
    Ok(EXIT_OK)
}

fn cmd_check(q: &Query, out: &mut dyn Write, _err: &mut dyn Write) -> Result<i32, Failure> {
    let (a, b) = (q.a.prefix(q.i), q.b.prefix(q.j));
    let report = check_equivalence(&a, &b, DEFAULT_PATH_LIMIT)?;
    if q.format == Format::Json {
        let (sa, sb) = q.symbols();
        let doc = CheckDoc {
            a: sa,
            b: sb,
            queries: report.queries,
            passed: report.passed(),
            failures: report.failures.clone(),
        };
        serde_json::to_writer(&mut *out, &doc)?;
        writeln!(out)?;
    } else {
        for f in &report.failures {
            writeln!(out, "FAIL {f}")?;
        }
        writeln!(
            out,
            "{} {} prefix pairs, {} failures",
            if report.passed() { "PASS" } else { "FAIL" },
            report.queries,
            report.failures.len()
        )?;
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}
