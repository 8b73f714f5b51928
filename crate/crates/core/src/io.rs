//! Edge-list and graph6 text formats.
//!
//! The edge-list format is a vertex count on the first line followed by one
//! `u v` pair per line, 0-indexed. Blank lines and lines starting with `#`
//! are ignored.

use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;

/// Largest order representable with a single-byte graph6 length.
pub const GRAPH6_MAX: usize = 62;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(first, format!("bad vertex count {header:?}")))?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let mut tok = l.split_whitespace();
        let mut next = |what: &str| -> Result<usize> {
            let t = tok
                .next()
                .ok_or_else(|| parse_err(line, format!("missing {what} endpoint")))?;
            t.parse()
                .map_err(|_| parse_err(line, format!("bad vertex index {t:?}")))
        };
        let u = next("first")?;
        let v = next("second")?;
        if let Some(extra) = tok.next() {
            return Err(parse_err(line, format!("unexpected token {extra:?}")));
        }
        if u >= n || v >= n {
            return Err(parse_err(
                line,
                format!("vertex index {} out of range for n = {n}", u.max(v)),
            ));
        }
        if u == v {
            return Err(parse_err(line, format!("loop edge at vertex {u}")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, edges).map_err(|e| match e {
        Error::Size(msg) => parse_err(first, msg),
        other => other,
    })
}

/// Canonical edge list: sorted `u v` pairs with `u < v`.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses one graph6 string. Surrounding whitespace is ignored; errors
/// report the byte offset within the string.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim().as_bytes();
    let s = s.strip_prefix(b">>graph6<<").unwrap_or(s);
    let bad = |offset: usize, msg: &str| parse_err(1, format!("offset {offset}: {msg}"));
    let (&head, body) = s
        .split_first()
        .ok_or_else(|| bad(0, "empty graph6 string"))?;
    if !(63..=126).contains(&head) {
        return Err(bad(0, "invalid graph6 byte"));
    }
    let n = (head - 63) as usize;
    if n > GRAPH6_MAX {
        return Err(bad(0, "multi-byte graph6 lengths are not supported"));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(
            1 + body.len().min(expected),
            &format!(
                "expected {expected} data bytes for n = {n}, found {}",
                body.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for (idx, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(bad(idx + 1, "invalid graph6 byte"));
        }
        let x = b - 63;
        for shift in (0..6).rev() {
            let bit = (x >> shift) & 1 == 1;
            if k < bits {
                if bit {
                    edges.push(upper_pair(k));
                }
            } else if bit {
                return Err(bad(idx + 1, "nonzero padding bits"));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// The `k`-th pair `(i, j)`, `i < j`, in column-major upper-triangle order.
fn upper_pair(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX {
        return Err(Error::Size(format!(
            "graph6 output supports at most {GRAPH6_MAX} vertices, got {n}"
        )));
    }
    let mut out = vec![(n + 63) as u8];
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
