//! graph6 text encoding for graphs on up to 62 vertices.
//!
//! Byte 0 is `n + 63`; the upper-triangle adjacency bits follow in column
//! order, packed six per byte, each byte offset by 63. The optional
//! `>>graph6<<` header is tolerated on input and never emitted.

use crate::error::Graph6Error;
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push((acc + 63) as char);
    }
    out
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.strip_prefix(HEADER).unwrap_or(text).trim();
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let first = bytes[0];
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::InvalidByte {
            byte: first,
            pos: 0,
        });
    }
    let n = (first - 63) as usize;
    if n > crate::graph::MAX_VERTICES {
        return Err(Graph6Error::TooLarge { n });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if bytes.len() - 1 < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: bytes.len() - 1,
        });
    }
    if bytes.len() - 1 > expected {
        return Err(Graph6Error::TrailingData { expected });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::InvalidByte {
                    byte,
                    pos: 1 + bit / 6,
                });
            }
            let group = byte - 63;
            if group & (1 << (5 - (bit % 6))) != 0 {
                edges.push((i, j));
            }
            bit += 1;
            if bit >= nbits {
                break 'outer;
            }
        }
    }
    Graph::from_edges(n, &edges).map_err(|_| Graph6Error::TooLarge { n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_multipartite;

    #[test]
    fn known_small_encodings() {
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode(&Graph::empty(2).unwrap()), "A?");
        assert_eq!(encode(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode(&Graph::complete(3).unwrap()), "Bw");
        // path 0-1-2
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(encode(&p3), "Bg");
        assert_eq!(encode(&Graph::complete(5).unwrap()), "D~{");
    }

    #[test]
    fn decode_inverts_encode() {
        let graphs = vec![
            Graph::empty(0).unwrap(),
            Graph::empty(7).unwrap(),
            Graph::complete(9).unwrap(),
            complete_multipartite(&[4, 3, 2]).unwrap().0,
            complete_multipartite(&[5, 5]).unwrap().0,
        ];
        for g in graphs {
            assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }

    #[test]
    fn header_tolerated() {
        let enc = format!(">>graph6<<{}", encode(&Graph::complete(4).unwrap()));
        assert_eq!(decode(&enc).unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn decode_errors() {
        assert!(matches!(decode(""), Err(Graph6Error::Empty)));
        assert!(matches!(decode("B"), Err(Graph6Error::Truncated { .. })));
        assert!(matches!(
            decode("Bww"),
            Err(Graph6Error::TrailingData { .. })
        ));
        assert!(matches!(
            decode("B\u{1}"),
            Err(Graph6Error::InvalidByte { .. })
        ));
    }
}
