//! Plain-text graph and labeling files, and the bounds CSV.
//!
//! Graph files:
//!
//! ```text
//! # comment
//! vertices 8
//! 0 1
//! 0 2
//! ```
//!
//! Edges are written `u v` with `u < v` in lexicographic order. Product graphs
//! also carry `# coord <id> <row> <col> <star>` comment lines.
//!
//! Labeling files hold `<vertex_id> <label>` lines sorted by id and end with a
//! `# span <S>` comment that is checked when read back.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::claims::{ClaimVerdict, SpanRow};
use crate::error::{Error, Result};
use crate::formulas::{format_rational, BoundRow, CountRow};
use crate::graph::Graph;
use crate::labeling::Labeling;
use crate::product::{ProductGraph, VertexCoord};

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "vertices {}", g.num_vertices()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_product_graph(pg: &ProductGraph) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "# {} m={} n={} indexing={}",
        pg.params,
        pg.params.m(),
        pg.params.n(),
        pg.indexing
    )
    .unwrap();
    for (id, c) in pg.coords() {
        writeln!(out, "# coord {id} {} {} {}", c.row, c.col, c.star).unwrap();
    }
    out.push_str(&write_graph(&pg.graph));
    out
}

/// A parsed graph file. `coords` is filled when every vertex had a
/// `# coord` line.
#[derive(Debug, Clone)]
pub struct GraphFile {
    pub graph: Graph,
    pub coords: Option<Vec<VertexCoord>>,
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("{what} '{tok}' is not a non-negative integer")))
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut vertices: Option<usize> = None;
    let mut edges = Vec::new();
    let mut coords: Vec<(usize, VertexCoord)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            let mut toks = comment.split_whitespace();
            if toks.next() == Some("coord") {
                let id = parse_num(toks.next(), line_no, "coord id")?;
                let row = parse_num(toks.next(), line_no, "row")?;
                let col = parse_num(toks.next(), line_no, "col")?;
                let star = parse_num(toks.next(), line_no, "star")?;
                coords.push((id, VertexCoord { row, col, star }));
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        match vertices {
            None => {
                if toks.next() != Some("vertices") {
                    return Err(Error::parse(line_no, "expected 'vertices N' header"));
                }
                vertices = Some(parse_num(toks.next(), line_no, "vertex count")?);
            }
            Some(n) => {
                let u = parse_num(toks.next(), line_no, "edge endpoint")?;
                let v = parse_num(toks.next(), line_no, "edge endpoint")?;
                if u >= v {
                    return Err(Error::parse(line_no, format!("edge '{u} {v}' must have u < v")));
                }
                if v >= n {
                    return Err(Error::parse(line_no, format!("vertex {v} is outside 0..{n}")));
                }
                edges.push((u, v));
            }
        }
        if toks.next().is_some() {
            return Err(Error::parse(line_no, "trailing tokens"));
        }
    }

    let n = vertices.ok_or_else(|| Error::parse(0, "no 'vertices N' header"))?;
    let before = edges.len();
    edges.sort_unstable();
    edges.dedup();
    if edges.len() != before {
        return Err(Error::parse(0, "duplicate edges"));
    }
    let graph = Graph::from_edges(n, edges)?;

    coords.sort_unstable();
    let coords = (coords.len() == n && coords.iter().enumerate().all(|(i, (id, _))| *id == i))
        .then(|| coords.into_iter().map(|(_, c)| c).collect());
    Ok(GraphFile { graph, coords })
}

pub fn read_graph(path: &Path) -> Result<GraphFile> {
    parse_graph(&read(path)?)
}

pub fn write_labeling(l: &Labeling) -> String {
    let mut out = String::new();
    for (v, label) in l.labels().iter().enumerate() {
        writeln!(out, "{v} {label}").unwrap();
    }
    writeln!(out, "# span {}", l.span()).unwrap();
    out
}

/// Reads a labeling file. Ids must be exactly `0..N` in order, and a
/// `# span` line, when present, must match the labels.
pub fn parse_labeling(text: &str) -> Result<Labeling> {
    let mut labels = Vec::new();
    let mut declared_span: Option<(usize, u64)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            let mut toks = comment.split_whitespace();
            if toks.next() == Some("span") {
                let s = parse_num(toks.next(), line_no, "span")? as u64;
                declared_span = Some((line_no, s));
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let v = parse_num(toks.next(), line_no, "vertex id")?;
        let label = parse_num(toks.next(), line_no, "label")? as u64;
        if toks.next().is_some() {
            return Err(Error::parse(line_no, "trailing tokens"));
        }
        if v != labels.len() {
            return Err(Error::parse(
                line_no,
                format!("expected vertex {} next, found {v}", labels.len()),
            ));
        }
        labels.push(label);
    }
    let l = Labeling::new(labels);
    if let Some((line_no, s)) = declared_span {
        if s != l.span() {
            return Err(Error::parse(
                line_no,
                format!("declared span {s} but the labels span {}", l.span()),
            ));
        }
    }
    Ok(l)
}

pub fn read_labeling(path: &Path) -> Result<Labeling> {
    parse_labeling(&read(path)?)
}

pub const BOUNDS_CSV_HEADER: &str = "bound_id,m,n,value_num,value_den,integral";

pub fn bounds_csv(rows: &[BoundRow]) -> String {
    let mut out = String::from(BOUNDS_CSV_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.label(),
            r.m,
            r.n,
            r.value.numer(),
            r.value.denom(),
            r.integral()
        )
        .unwrap();
    }
    out
}

pub const VERDICT_CSV_HEADER: &str = "claim_id,m,n,indexing,expected_num,expected_den,observed,verdict";

/// Verdict rows in the order given; see [`crate::claims::sort_verdicts`].
pub fn verdict_csv(rows: &[ClaimVerdict]) -> String {
    let mut out = String::from(VERDICT_CSV_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.claim_id,
            r.m,
            r.n,
            r.indexing_name(),
            r.expected.numer(),
            r.expected.denom(),
            r.observed,
            r.verdict
        )
        .unwrap();
    }
    out
}

pub const COUNTS_CSV_HEADER: &str = "m,n,product_count,star_path_count,ratio";

pub fn counts_csv(rows: &[CountRow]) -> String {
    let mut out = String::from(COUNTS_CSV_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.m,
            r.n,
            r.product_count,
            r.star_path_count,
            format_rational(&r.ratio)
        )
        .unwrap();
    }
    out
}

pub const SPANS_CSV_HEADER: &str = "m,n,indexing,bound_num,bound_den,greedy_span,consecutive_span,consecutive_valid";

pub fn spans_csv(rows: &[SpanRow]) -> String {
    let mut out = String::from(SPANS_CSV_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.m,
            r.n,
            r.indexing,
            r.bound.numer(),
            r.bound.denom(),
            r.greedy_span,
            r.consecutive_span,
            r.consecutive_valid
        )
        .unwrap();
    }
    out
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes `contents` to `path`, attaching the path to any failure.
pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
