//! graph6 encoding (McKay) for simple undirected graphs.
//!
//! The order is written as `n + 63` for `n < 63`, as `126` plus three
//! six-bit groups for `n < 258048`, and as `126 126` plus six groups beyond
//! that. The upper triangle of the adjacency matrix follows column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed big-endian six bits per byte
//! and padded with zeros.

use thiserror::Error;

use super::Graph;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed order header at byte {offset}")]
    MalformedHeader { offset: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("adjacency data truncated at byte {offset}: expected {expected} data bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("{extra} unexpected trailing byte(s) starting at offset {offset}")]
    TrailingBytes { offset: usize, extra: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    let byte = bytes[offset];
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::ByteOutOfRange { byte, offset });
    }
    Ok(u64::from(byte - 63))
}

/// Decode one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let trimmed = text.trim();
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (trimmed, 0),
    };
    let lead = text.len() - text.trim_start().len();
    let base = base + lead;
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0).map_err(|e| shift(e, base))? as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::MalformedHeader { offset: base + bytes.len() });
        }
        let mut n = 0u64;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, base))?;
        }
        if n < 258_048 {
            return Err(Graph6Error::MalformedHeader { offset: base });
        }
        (n as usize, 8)
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedHeader { offset: base + bytes.len() });
        }
        let mut n = 0u64;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, base))?;
        }
        if n < 63 {
            return Err(Graph6Error::MalformedHeader { offset: base });
        }
        (n as usize, 4)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let data_len = bits.div_ceil(6);
    if bytes.len() < pos + data_len {
        // report the first missing byte, after validating what is present
        for i in pos..bytes.len() {
            sextet(bytes, i).map_err(|e| shift(e, base))?;
        }
        return Err(Graph6Error::Truncated {
            offset: base + bytes.len(),
            expected: data_len,
        });
    }
    if bytes.len() > pos + data_len {
        return Err(Graph6Error::TrailingBytes {
            offset: base + pos + data_len,
            extra: bytes.len() - pos - data_len,
        });
    }

    let mut g = Graph::empty(n);
    let mut k = 0usize;
    let mut current = 0u64;
    for v in 1..n {
        for u in 0..v {
            if k % 6 == 0 {
                current = sextet(bytes, pos).map_err(|e| shift(e, base))?;
                pos += 1;
            }
            if (current >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(u, v).expect("graph6 bits address distinct pairs");
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let used = bits % 6;
        if current & ((1 << (6 - used)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: base + pos - 1 });
        }
    }
    Ok(g)
}

fn shift(e: Graph6Error, base: usize) -> Graph6Error {
    match e {
        Graph6Error::ByteOutOfRange { byte, offset } => Graph6Error::ByteOutOfRange {
            byte,
            offset: offset + base,
        },
        other => other,
    }
}

/// Encode without the optional `>>graph6<<` header.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for i in (0..3).rev() {
            out.push(((n >> (6 * i)) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for i in (0..6).rev() {
            out.push(((n >> (6 * i)) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push(acc + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn decodes_small_examples() {
        let k5 = parse_graph6("D~{").unwrap();
        assert_eq!((k5.order(), k5.size()), (5, 10));
        assert_eq!(k5, complete(5));
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn encodes_small_examples() {
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&complete(2)), "A_");
        let c4 = to_graph6(&cycle(4));
        // bits x01 x02 x12 x03 x13 x23 = 1 0 1 1 0 1
        assert_eq!(c4, "Cl");
        assert_eq!(parse_graph6(&c4).unwrap(), cycle(4));
    }

    #[test]
    fn matches_reference_encoder() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn header_and_whitespace_are_ignored() {
        assert_eq!(parse_graph6(">>graph6<<D~{\n").unwrap(), complete(5));
        assert_eq!(parse_graph6("  A_ ").unwrap(), complete(2));
    }

    #[test]
    fn long_order_header() {
        let g = cycle(70);
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn reports_errors_with_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("D~"),
            Err(Graph6Error::Truncated { offset: 2, expected: 2 })
        );
        assert_eq!(
            parse_graph6("D~\u{7f}"),
            Err(Graph6Error::ByteOutOfRange { byte: 0x7f, offset: 2 })
        );
        assert_eq!(
            parse_graph6("D~{?"),
            Err(Graph6Error::TrailingBytes { offset: 3, extra: 1 })
        );
        assert_eq!(
            parse_graph6("~??"),
            Err(Graph6Error::MalformedHeader { offset: 3 })
        );
        // order 5 encoded with the long header is not canonical
        assert_eq!(
            parse_graph6("~??D~{"),
            Err(Graph6Error::MalformedHeader { offset: 0 })
        );
        assert_eq!(
            parse_graph6("A`"),
            Err(Graph6Error::NonzeroPadding { offset: 1 })
        );
        assert_eq!(
            parse_graph6(" D~ "),
            Err(Graph6Error::Truncated { offset: 3, expected: 2 })
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn round_trip(g in arb_graph(20)) {
            let s = to_graph6(&g);
            prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
