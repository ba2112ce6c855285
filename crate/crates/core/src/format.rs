//! Line-oriented graph files.
//!
//! ```text
//! c optional comments
//! p bipartite <n1> <n2> <m>
//! e <a-index> <b-index>
//! ```
//!
//! Indices are 1-based. An endpoint may also be written with an explicit side
//! tag (`e a3 b1`), which is how same-side edges such as `e a1 a2` get
//! reported. Canonical output is the header followed by edges sorted by `(a, b)`.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{ParseError, ParseErrorKind};
use crate::graph::{BipartiteGraph, Side, Vertex};

pub fn serialize_graph(g: &BipartiteGraph) -> String {
    let mut out = String::with_capacity(16 * (g.edge_count() + 1));
    writeln!(
        out,
        "p bipartite {} {} {}",
        g.a_count(),
        g.b_count(),
        g.edge_count()
    )
    .unwrap();
    for (a, b) in g.edges() {
        writeln!(out, "e {a} {b}").unwrap();
    }
    out
}

struct Header {
    n1: usize,
    n2: usize,
    m: usize,
    line: usize,
}

fn parse_header<'a>(mut tokens: impl Iterator<Item = &'a str>) -> Option<(usize, usize, usize)> {
    if tokens.next()? != "bipartite" {
        return None;
    }
    let mut num = || tokens.next()?.parse::<usize>().ok();
    let (n1, n2, m) = (num()?, num()?, num()?);
    if tokens.next().is_some() || n1 == 0 || n2 == 0 {
        return None;
    }
    Some((n1, n2, m))
}

fn parse_endpoint(tok: &str, positional: Side) -> Option<Vertex> {
    let (side, digits) = match tok.as_bytes().first()? {
        b'a' => (Side::A, &tok[1..]),
        b'b' => (Side::B, &tok[1..]),
        _ => (positional, tok),
    };
    Some(Vertex {
        side,
        index: digits.parse().ok()?,
    })
}

pub fn parse_graph(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut header: Option<Header> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let mut tokens = raw.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                let (n1, n2, m) =
                    parse_header(tokens).ok_or_else(|| err(ParseErrorKind::MalformedHeader))?;
                header = Some(Header { n1, n2, m, line });
            }
            "e" => {
                let h = header
                    .as_ref()
                    .ok_or_else(|| err(ParseErrorKind::MissingHeader))?;
                let (Some(x), Some(y), None) = (tokens.next(), tokens.next(), tokens.next()) else {
                    return Err(err(ParseErrorKind::MalformedEdge));
                };
                let u =
                    parse_endpoint(x, Side::A).ok_or_else(|| err(ParseErrorKind::MalformedEdge))?;
                let v =
                    parse_endpoint(y, Side::B).ok_or_else(|| err(ParseErrorKind::MalformedEdge))?;
                if u.side == v.side {
                    return Err(err(ParseErrorKind::SameSideEdge(u, v)));
                }
                let (a, b) = if u.side == Side::A { (u, v) } else { (v, u) };
                for w in [a, b] {
                    let size = if w.side == Side::A { h.n1 } else { h.n2 };
                    if w.index == 0 || w.index as usize > size {
                        return Err(err(ParseErrorKind::IndexOutOfRange(w)));
                    }
                }
                if !seen.insert((a.index, b.index)) {
                    return Err(err(ParseErrorKind::DuplicateEdge(a.index, b.index)));
                }
                edges.push((a.index, b.index));
            }
            other => return Err(err(ParseErrorKind::UnknownRecord(other.to_string()))),
        }
    }

    let h = header.ok_or(ParseError {
        line: last_line.max(1),
        kind: ParseErrorKind::MissingHeader,
    })?;
    if edges.len() != h.m {
        return Err(ParseError {
            line: h.line,
            kind: ParseErrorKind::EdgeCountMismatch {
                declared: h.m,
                found: edges.len(),
            },
        });
    }
    Ok(BipartiteGraph::from_edges(h.n1, h.n2, edges).expect("edges validated while parsing"))
}
