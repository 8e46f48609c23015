//! graph6 encoding (short form only, no `>>graph6<<` header).
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order `(0,1),(0,2),(1,2),(0,3),...`, packed big-endian into 6-bit
//! groups, each group offset by 63.

use thiserror::Error;

use super::{Graph, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 header")]
    BadHeader,
    #[error("invalid graph6 character {0:?} at byte {1}")]
    BadChar(char, usize),
    #[error("graph6 body too short: expected {expected} bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing garbage after graph6 body: {0:?}")]
    TrailingGarbage(String),
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
    #[error("graph has {0} vertices, cap is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("graph6 encodes a graph with no vertices")]
    NoVertices,
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

fn decode_char(c: u8, pos: usize) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&c) {
        Ok(c - 63)
    } else {
        Err(Graph6Error::BadChar(c as char, pos))
    }
}

/// Parses one graph6 string. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, header) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            // 8-byte form; any such n is above the cap.
            if bytes.len() < 8 {
                return Err(Graph6Error::BadHeader);
            }
            let mut n = 0usize;
            for (i, &c) in bytes[2..8].iter().enumerate() {
                n = n << 6 | decode_char(c, i + 2)? as usize;
            }
            return Err(Graph6Error::TooManyVertices(n));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader);
        }
        let mut n = 0usize;
        for (i, &c) in bytes[1..4].iter().enumerate() {
            n = n << 6 | decode_char(c, i + 1)? as usize;
        }
        if n < 63 {
            // Non-canonical long header for a small graph.
            return Err(Graph6Error::BadHeader);
        }
        (n, 4)
    } else {
        (decode_char(bytes[0], 0)? as usize, 1)
    };
    if n == 0 {
        return Err(Graph6Error::NoVertices);
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }

    let body = &bytes[header..];
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage(
            String::from_utf8_lossy(&body[expected..]).into_owned(),
        ));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0usize;
    for (pos, &c) in body.iter().enumerate() {
        let chunk = decode_char(c, header + pos)?;
        for b in (0..6).rev() {
            let bit = chunk >> b & 1 == 1;
            let idx = k;
            k += 1;
            let total = n * (n - 1) / 2;
            if idx >= total {
                if bit {
                    return Err(Graph6Error::NonZeroPadding);
                }
                continue;
            }
            if bit {
                let (i, j) = pair_at(idx);
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Maps a bit index of the column-order upper triangle to `(i, j)`, `i < j`.
fn pair_at(idx: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= idx {
        start += j;
        j += 1;
    }
    (idx - start, j)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(4 + body_len(n));
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 63) as u8 + 63) as char);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

impl Graph {
    pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
        parse_graph6(text)
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }
}
