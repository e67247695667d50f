//! graph6 and plain edge-list text formats.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn g6err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(g6err("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6err(format!("byte {b:#x} outside the printable range 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(g6err("eight-byte order header implies more than 64 vertices"));
        }
        if bytes.len() < 4 {
            return Err(g6err("truncated order header"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 63 {
            return Err(g6err(format!("non-minimal order header for n = {n}")));
        }
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(g6err(format!("expected {expected} data bytes for n = {n}, found {}", body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in nbits..expected * 6 {
        if bit(k) {
            return Err(g6err("padding bits are set"));
        }
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1u64 << j;
                rows[j] |= 1u64 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows(rows)
}

/// First line `n`, then one `u v` pair per line (0-indexed).
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list format. Blank lines and `#` comments are ignored.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("missing vertex count".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count {header:?}")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
        }
    }
    Graph::from_edges(n, &edges)
}
