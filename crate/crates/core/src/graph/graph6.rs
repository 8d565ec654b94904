//! The graph6 text encoding.
//!
//! A line is a size header followed by the upper triangle of the adjacency
//! matrix, read column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed
//! six bits per byte, most significant bit first, zero padded. Every byte is
//! offset by 63 so the line stays printable.

use thiserror::Error;

use super::{Graph, VertexSet, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("malformed size header")]
    MalformedHeader,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("adjacency data truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage: expected {expected} bytes, found {found}")]
    TrailingGarbage { expected: usize, found: usize },
    #[error("padding bits in the final byte are not zero")]
    NonZeroPadding,
    #[error("graph has {0} vertices, more than the supported maximum")]
    TooLarge(usize),
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // n <= MAX_VERTICES < 258048, so the four-byte form always suffices.
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbours(j);
        for i in 0..j {
            acc = (acc << 1) | row.contains(i) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 line. A trailing newline and the optional `>>graph6<<`
/// prefix are accepted; anything else beyond the adjacency data is an error.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::NonPrintable { offset, byte });
    }
    let (n, data) = parse_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let expected = body_len(n);
    if data.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingGarbage { expected, found: data.len() });
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (total_bits..expected * 6).any(bit) {
        return Err(Graph6Error::NonZeroPadding);
    }
    let mut rows = vec![VertexSet::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(rows).expect("decoded rows are symmetric"))
}

fn parse_size(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let sextets = |bs: &[u8]| bs.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::MalformedHeader);
        }
        let n = sextets(&bytes[2..8]);
        if n <= 258047 {
            return Err(Graph6Error::MalformedHeader);
        }
        return Ok((n, &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::MalformedHeader);
    }
    let n = sextets(&bytes[1..4]);
    if n <= 62 {
        // Non-canonical long form for a small graph.
        return Err(Graph6Error::MalformedHeader);
    }
    Ok((n, &bytes[4..]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let g = decode("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(encode(&g), "D?{");

        let null = decode("?").unwrap();
        assert_eq!(null.n(), 0);
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");

        let k2 = Graph::complete(2).unwrap();
        assert_eq!(encode(&k2), "A_");
        assert_eq!(decode("A_").unwrap(), k2);
    }

    #[test]
    fn petgraph_reference_string() {
        // Edges a-c, a-e, b-d, d-e on five vertices.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::path(100).unwrap();
        let s = encode(&g);
        // 100 = 0b000000_000001_100100
        assert_eq!(&s[..4], "~?@c");
        assert_eq!(s.len(), 4 + (100 * 99 / 2usize).div_ceil(6));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("~?"), Err(Graph6Error::MalformedHeader));
        assert_eq!(decode("~??A"), Err(Graph6Error::MalformedHeader));
        assert_eq!(decode("A "), Err(Graph6Error::NonPrintable { offset: 1, byte: b' ' }));
        assert_eq!(decode("D?"), Err(Graph6Error::Truncated { expected: 2, found: 1 }));
        assert_eq!(decode("D?{?"), Err(Graph6Error::TrailingGarbage { expected: 2, found: 3 }));
        assert_eq!(decode("A`"), Err(Graph6Error::NonZeroPadding));
    }

    #[test]
    fn optional_prefix_and_newline() {
        assert_eq!(decode(">>graph6<<A_\n").unwrap(), Graph::complete(2).unwrap());
    }
}
