//! graph6 codec for graphs on up to 62 vertices.
//!
//! The format, bit-exact:
//! - order byte `n + 63` (so `'?'` is the empty graph, `'}'` is n = 62);
//! - the upper-triangle adjacency bits in column-major order
//!   `(0,1),(0,2),(1,2),(0,3),...`, zero-padded to a multiple of 6;
//! - each 6-bit group encoded as `value + 63`, one graph per line.
//!
//! The serializer emits no header; the parser strips an optional
//! `>>graph6<<` header and trailing line terminators. Orders above 62
//! (multi-byte order fields starting with `'~'`) are rejected.

use crate::graph::{Graph, MAX_VERTICES};
use std::fmt;

/// Parse failure, carrying the byte offset within the (header-stripped)
/// record where the problem sits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Graph6Error {
    /// Empty record (no order byte).
    Empty,
    /// Order byte encodes n > 62 or is not a valid graph6 byte.
    OrderOutOfRange { byte: u8, offset: usize },
    /// Record length does not match the order.
    BadLength { expected: usize, actual: usize },
    /// A payload byte outside `63..=126`.
    InvalidByte { byte: u8, offset: usize },
    /// Padding bits beyond the last adjacency bit are not zero.
    NonZeroPadding { offset: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Graph6Error::Empty => write!(f, "empty graph6 record"),
            Graph6Error::OrderOutOfRange { byte, offset } => write!(
                f,
                "order byte 0x{byte:02x} at offset {offset} outside supported range (n <= 62)"
            ),
            Graph6Error::BadLength { expected, actual } => {
                write!(
                    f,
                    "malformed length: expected {expected} bytes, got {actual}"
                )
            }
            Graph6Error::InvalidByte { byte, offset } => {
                write!(f, "invalid graph6 byte 0x{byte:02x} at offset {offset}")
            }
            Graph6Error::NonZeroPadding { offset } => {
                write!(f, "non-zero padding bits in final byte at offset {offset}")
            }
        }
    }
}

impl std::error::Error for Graph6Error {}

const HEADER: &str = ">>graph6<<";

/// Number of payload bytes after the order byte for a graph on `n` vertices.
fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. Tolerates an optional `>>graph6<<` header
/// and trailing `\n`/`\r`.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let mut rec = line.trim_end_matches(['\n', '\r']);
    if let Some(rest) = rec.strip_prefix(HEADER) {
        rec = rest;
    }
    let bytes = rec.as_bytes();
    let &order = bytes.first().ok_or(Graph6Error::Empty)?;
    if order == b'~' {
        // Multi-byte order field: n > 62, out of supported range.
        return Err(Graph6Error::OrderOutOfRange {
            byte: order,
            offset: 0,
        });
    }
    if !(63..=63 + MAX_VERTICES as u8).contains(&order) {
        return Err(Graph6Error::OrderOutOfRange {
            byte: order,
            offset: 0,
        });
    }
    let n = (order - 63) as usize;
    let expected = 1 + payload_len(n);
    if bytes.len() != expected {
        return Err(Graph6Error::BadLength {
            expected,
            actual: bytes.len(),
        });
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let mut adj = vec![0u64; n];
    let mut bit = 0usize; // index into the upper-triangle bit sequence
    let mut col = 1usize;
    let mut row = 0usize;
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                byte: b,
                offset: i + 1,
            });
        }
        let group = b - 63;
        for k in (0..6).rev() {
            let set = group >> k & 1 == 1;
            if bit >= nbits {
                if set {
                    return Err(Graph6Error::NonZeroPadding { offset: i + 1 });
                }
            } else if set {
                adj[row] |= 1 << col;
                adj[col] |= 1 << row;
            }
            bit += 1;
            row += 1;
            if row == col {
                row = 0;
                col += 1;
            }
        }
    }
    Ok(Graph::from_adj_rows(adj))
}

/// Encodes a graph as one graph6 record (no header, no newline). Labels
/// are preserved, not canonicalized.
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(63 + n as u8);
    let mut group = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            group = group << 1 | g.has_edge(row, col) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    // All bytes are in 63..=126, so this is valid ASCII.
    String::from_utf8(out).unwrap()
}
