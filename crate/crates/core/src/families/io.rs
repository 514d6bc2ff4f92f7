//! Text formats: graph6 and a plain edge list.
//!
//! graph6 follows the standard encoding: the order `N(n)` in one, four or
//! eight bytes, then the upper triangle read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six bits per byte, each byte
//! offset by 63.
//!
//! The edge list is one `u v` pair per line. `#` starts a comment and an
//! optional `n <count>` line declares the vertex count, so isolated
//! vertices survive a round trip.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";
const MAX_GRAPH6_ORDER: usize = (1 << 36) - 1;

fn encode_order(n: usize, out: &mut Vec<u8>) -> Result<()> {
    match n {
        0..=62 => out.push(n as u8 + 63),
        63..=258_047 => {
            out.push(126);
            out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        }
        _ if n <= MAX_GRAPH6_ORDER => {
            out.extend([126, 126]);
            out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        }
        _ => return Err(Error::Overflow(format!("graph6 order {n}"))),
    }
    Ok(())
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out = Vec::new();
    encode_order(n, &mut out)?;
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn sextet(bytes: &[u8], at: usize) -> Result<u8> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(Error::parse(format!("byte {at}"), format!("invalid graph6 byte {b:#04x}"))),
        None => Err(Error::parse(format!("byte {at}"), "unexpected end of graph6 data")),
    }
}

/// Parses one graph6 string. A leading `>>graph6<<` header and trailing
/// line break are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let text = text.trim_end_matches(['\n', '\r']);
    let bytes = text.as_bytes();
    let (n, mut at) = if bytes.first() == Some(&126) {
        if bytes.get(1) == Some(&126) {
            let n = (0..6).try_fold(0usize, |acc, k| Ok::<_, Error>((acc << 6) | sextet(bytes, 2 + k)? as usize))?;
            (n, 8)
        } else {
            let n = (0..3).try_fold(0usize, |acc, k| Ok::<_, Error>((acc << 6) | sextet(bytes, 1 + k)? as usize))?;
            (n, 4)
        }
    } else {
        (sextet(bytes, 0)? as usize, 1)
    };
    let bits = n.checked_mul(n.saturating_sub(1)).map(|b| b / 2).ok_or_else(|| Error::Overflow("graph6 order".into()))?;
    let needed = bits.div_ceil(6);
    if bytes.len() != at + needed {
        return Err(Error::parse(
            format!("byte {}", bytes.len().min(at + needed)),
            format!("expected {} data bytes for n = {n}, found {}", needed, bytes.len().saturating_sub(at)),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                current = sextet(bytes, at)?;
                at += 1;
            }
            if current >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && current & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(Error::parse(format!("byte {}", at - 1), "nonzero padding bits"));
    }
    Graph::from_edges(n, edges)
}

/// `n <count>` header followed by one `u v` line per edge, sorted.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let pos = format!("line {}", lineno + 1);
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if fields.len() != 2 || declared.is_some() {
                return Err(Error::parse(pos, "expected a single header line \"n <count>\""));
            }
            let count = fields[1]
                .parse()
                .map_err(|_| Error::parse(pos.clone(), format!("bad vertex count {:?}", fields[1])))?;
            if !edges.is_empty() {
                return Err(Error::parse(pos, "header must precede edges"));
            }
            declared = Some(count);
            continue;
        }
        if fields.len() != 2 {
            return Err(Error::parse(pos, format!("expected \"u v\", found {line:?}")));
        }
        let parse_vertex = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(pos.clone(), format!("bad vertex {s:?}")))
        };
        let (u, v) = (parse_vertex(fields[0])?, parse_vertex(fields[1])?);
        if u == v {
            return Err(Error::parse(pos, format!("self-loop at vertex {u}")));
        }
        if let Some(n) = declared {
            if u.max(v) >= n {
                return Err(Error::parse(pos, format!("vertex {} exceeds declared count {n}", u.max(v))));
            }
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(pos, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, edges)
}

/// Input formats understood by [`read_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

/// Picks graph6 when the first line looks like graph6 and decodes, the edge
/// list otherwise.
pub fn detect_format(text: &str) -> GraphFormat {
    let first = text.lines().next().unwrap_or("");
    let body = first.strip_prefix(GRAPH6_HEADER).unwrap_or(first);
    match body.as_bytes().first() {
        Some(b) if (63..=126).contains(b) && parse_graph6(first).is_ok() => GraphFormat::Graph6,
        _ => GraphFormat::EdgeList,
    }
}

/// Reads a graph in the given format, or the detected one when `None`.
/// graph6 input is read from its first line.
pub fn read_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph> {
    match format.unwrap_or_else(|| detect_format(text)) {
        GraphFormat::Graph6 => parse_graph6(text.lines().next().unwrap_or("")),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}
