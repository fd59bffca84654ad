//! graph6 text codec (short form, single-byte order field).
//!
//! One graph per ASCII line: byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column-major order ((0,1), (0,2), (1,2), (0,3), ...)
//! packed six bits per byte, each byte offset by 63. Only the `n <= 62`
//! encoding branch exists here, and decoding is further capped at the
//! 32-vertex limit of [`Graph`].

use alloc::string::String;
use alloc::vec;
use core::fmt;

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    /// A byte outside the printable 63..=126 range.
    BadByte { pos: usize, byte: u8 },
    /// Fewer payload bytes than the order requires.
    Truncated { expected: usize, got: usize },
    /// More payload bytes than the order requires.
    TrailingData { expected: usize, got: usize },
    /// Order outside the supported 1..=32 range.
    UnsupportedOrder { n: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::BadByte { pos, byte } => {
                write!(f, "graph6 byte {byte} at position {pos} outside 63..=126")
            }
            Graph6Error::Truncated { expected, got } => {
                write!(f, "graph6 payload truncated: expected {expected} bytes, got {got}")
            }
            Graph6Error::TrailingData { expected, got } => {
                write!(f, "graph6 line too long: expected {expected} bytes, got {got}")
            }
            Graph6Error::UnsupportedOrder { n } => {
                write!(f, "graph6 order {n} outside supported range 1..=32")
            }
        }
    }
}

impl core::error::Error for Graph6Error {}

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2 + 5) / 6
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + payload_len(n));
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes one graph6 line. The input must be exactly one encoded graph,
/// with no header and no surrounding whitespace.
pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Graph6Error::Empty);
    };
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::BadByte { pos: 0, byte: first });
    }
    let n = (first - 63) as usize;
    if n == 0 || n > 32 {
        return Err(Graph6Error::UnsupportedOrder { n });
    }
    let expected = payload_len(n);
    let payload = &bytes[1..];
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData {
            expected,
            got: payload.len(),
        });
    }
    for (i, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte { pos: i + 1, byte: b });
        }
    }

    let mut adj = vec![0u32; n];
    let mut idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = payload[idx / 6] - 63;
            if byte & (1 << (5 - idx % 6)) != 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            idx += 1;
        }
    }
    Ok(Graph::from_adj(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_complete, build_path};
    use crate::graph::Graph;

    #[test]
    fn known_encodings() {
        let k2 = build_complete(2).unwrap();
        assert_eq!(encode_graph6(&k2), "A_");
        let e2 = Graph::empty(2).unwrap();
        assert_eq!(encode_graph6(&e2), "A?");
        // single vertex: no payload bits at all
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()), "@");
    }

    #[test]
    fn round_trips() {
        for g in [
            build_path(7).unwrap(),
            build_complete(9).unwrap(),
            Graph::from_edge_list(6, &[(0, 3), (1, 4), (2, 5), (0, 5)]).unwrap(),
        ] {
            assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn decode_errors() {
        assert_eq!(decode_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(
            decode_graph6("A\x1f"),
            Err(Graph6Error::BadByte { pos: 1, .. })
        ));
        assert!(matches!(decode_graph6("D"), Err(Graph6Error::Truncated { .. })));
        assert!(matches!(
            decode_graph6("A__"),
            Err(Graph6Error::TrailingData { .. })
        ));
        // 40 vertices: valid graph6, beyond this crate's 32-vertex cap
        assert!(matches!(
            decode_graph6("g"),
            Err(Graph6Error::UnsupportedOrder { n: 40 })
        ));
        assert!(matches!(
            decode_graph6("?"),
            Err(Graph6Error::UnsupportedOrder { n: 0 })
        ));
    }
}
