//! The `eds-graph 1` text format.
//!
//! ```text
//! eds-graph 1
//! n 4
//! sides XYXY
//! e 0 1
//! e 1 2
//! e 2 3
//! ```
//!
//! Edges are written with the smaller id first, in ascending lexicographic
//! order. Lines starting with `#` are comments. Anything else is rejected.

use thiserror::Error;

use crate::graph::{BipartiteGraph, GraphError, Side};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing {0} line")]
    Missing(&'static str),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

pub fn write_graph(g: &BipartiteGraph) -> String {
    let mut out = String::from("eds-graph 1\n");
    out.push_str(&format!("n {}\n", g.n()));
    let sides: String = g.sides().iter().map(|s| s.as_char()).collect();
    out.push_str(&format!("sides {sides}\n"));
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

fn parse_id(tok: &str, line: usize) -> Result<usize, FormatError> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) || (tok.len() > 1 && tok.starts_with('0')) {
        return Err(syntax(line, format!("bad integer `{tok}`")));
    }
    tok.parse().map_err(|_| syntax(line, format!("bad integer `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<BipartiteGraph, FormatError> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body
        .split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('#'));

    let (ln, header) = lines.next().ok_or(FormatError::Missing("header"))?;
    if header != "eds-graph 1" {
        return Err(syntax(ln, "expected `eds-graph 1`"));
    }
    let (ln, nline) = lines.next().ok_or(FormatError::Missing("n"))?;
    let n = match nline.strip_prefix("n ") {
        Some(tok) => parse_id(tok, ln)?,
        None => return Err(syntax(ln, "expected `n <count>`")),
    };
    let (ln, sline) = lines.next().ok_or(FormatError::Missing("sides"))?;
    let sides_str = if sline == "sides" && n == 0 {
        ""
    } else {
        sline.strip_prefix("sides ").ok_or_else(|| syntax(ln, "expected `sides <XY..>`"))?
    };
    let side: Vec<Side> = sides_str
        .chars()
        .map(|c| Side::from_char(c).ok_or_else(|| syntax(ln, format!("bad side `{c}`"))))
        .collect::<Result<_, _>>()?;
    if side.len() != n {
        return Err(syntax(ln, format!("{} sides for n = {n}", side.len())));
    }

    let mut edges = Vec::new();
    let mut last: Option<(usize, usize)> = None;
    for (ln, l) in lines {
        let mut toks = l.split(' ');
        if toks.next() != Some("e") {
            return Err(syntax(ln, "expected `e <u> <v>`"));
        }
        let (Some(a), Some(b), None) = (toks.next(), toks.next(), toks.next()) else {
            return Err(syntax(ln, "expected `e <u> <v>`"));
        };
        let (u, v) = (parse_id(a, ln)?, parse_id(b, ln)?);
        if u >= v {
            return Err(syntax(ln, "edge must list the smaller id first"));
        }
        if let Some(prev) = last {
            if (u, v) <= prev {
                return Err(syntax(ln, "edges out of order or repeated"));
            }
        }
        last = Some((u, v));
        edges.push((u, v));
    }
    Ok(BipartiteGraph::new(n, side, &edges)?)
}
