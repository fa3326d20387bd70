//! Text encodings: graph6, a plain edge list, and DOT (output only).
//!
//! graph6 packs the upper triangle column by column (`(0,1), (0,2), (1,2),
//! (0,3), ...`) into 6-bit groups, each written as the byte `63 + group`,
//! after a size prefix. No `>>graph6<<` header is written or expected.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::graph::Graph;

/// Largest order graph6 can express with the 4-byte size prefix.
pub const GRAPH6_MAX_ORDER: usize = 258_047;
const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Graph6,
    Edgelist,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::Edgelist),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

/// A serialized graph together with its format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub format: Format,
    pub payload: String,
}

impl GraphDocument {
    pub fn parse(&self) -> Result<Graph, ParseError> {
        parse_graph(self.format, &self.payload)
    }
}

pub fn parse_graph(format: Format, payload: &str) -> Result<Graph, ParseError> {
    match format {
        Format::Graph6 => from_graph6(payload.trim()),
        Format::Edgelist => from_edgelist(payload),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::Edgelist => to_edgelist(g),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= GRAPH6_MAX_ORDER, "graph6 cannot encode {n} vertices");
    let mut out = String::new();
    if n < 63 {
        out.push((63 + n as u8) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((63 + ((n >> shift) & 0x3f) as u8) as char);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((63 + group) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (group << (6 - filled))) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<Graph, ParseError> {
    let body = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let base = text.len() - body.len();
    let bytes = body.as_bytes();
    let err = |offset: usize, message: String| ParseError::Offset {
        offset: base + offset,
        message,
    };
    let value = |i: usize| -> Result<usize, ParseError> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(err(i, format!("byte {b:#04x} is not a graph6 character"))),
            None => Err(err(i, "unexpected end of input".into())),
        }
    };
    let (n, start) = match value(0)? {
        63 => {
            if bytes.get(1) == Some(&126) {
                return Err(err(1, "orders beyond 258047 are not supported".into()));
            }
            let n = (value(1)? << 12) | (value(2)? << 6) | value(3)?;
            (n, 4)
        }
        n => (n, 1),
    };
    let total = n * n.saturating_sub(1) / 2;
    let groups = total.div_ceil(6);
    if bytes.len() != start + groups {
        return Err(err(
            bytes.len().min(start + groups),
            format!(
                "expected {groups} adjacency bytes for {n} vertices, found {}",
                bytes.len().saturating_sub(start)
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            let group = value(start + t / 6)?;
            if (group >> (5 - t % 6)) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            t += 1;
        }
    }
    if total % 6 != 0 {
        let last = value(start + groups - 1)?;
        if last & ((1 << (6 - total % 6)) - 1) != 0 {
            return Err(err(start + groups - 1, "nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// `n <count>` on the first line, then one `u v` pair per line.
pub fn to_edgelist(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Blank lines and lines starting with `#` are skipped.
pub fn from_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut order = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| ParseError::Line { line, message };
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("`{s}` is not a vertex index")))
        };
        match order {
            None => match fields.as_slice() {
                ["n", count] => order = Some(number(count)?),
                _ => return Err(err("expected `n <count>` header".into())),
            },
            Some(n) => match fields.as_slice() {
                [a, b] => {
                    let (u, v) = (number(a)?, number(b)?);
                    if u == v {
                        return Err(err(format!("self-loop at vertex {u}")));
                    }
                    if u >= n || v >= n {
                        return Err(err(format!("edge {u} {v} out of range for {n} vertices")));
                    }
                    edges.push((u, v));
                }
                _ => return Err(err(format!("expected `u v`, found `{content}`"))),
            },
        }
    }
    let n = order.ok_or(ParseError::Line {
        line: 1,
        message: "missing `n <count>` header".into(),
    })?;
    Ok(Graph::new(n, edges).expect("edges validated above"))
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
