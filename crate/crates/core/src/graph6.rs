//! graph6 encoding as used by the nauty tools.
//!
//! A record is a size header followed by the upper triangle of the
//! adjacency matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte, big-endian, each byte offset by 63.

use crate::error::Graph6Error;
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Graph6Error {
    Graph6Error {
        offset,
        reason: reason.into(),
    }
}

/// Parses a single graph6 record.
///
/// A leading `>>graph6<<` header and a trailing line terminator are
/// stripped. Padding bits in the final byte are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(err(skip, "empty record"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(err(
                skip + i,
                format!("byte 0x{b:02x} outside printable graph6 range"),
            ));
        }
    }

    let (n, mut pos) = if bytes[0] != 126 {
        (usize::from(bytes[0] - OFFSET), 1)
    } else if bytes.len() > 1 && bytes[1] == 126 {
        return Err(err(
            skip + 1,
            "8-byte size header exceeds supported vertex count",
        ));
    } else {
        if bytes.len() < 4 {
            return Err(err(skip + bytes.len(), "truncated size header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | usize::from(b - OFFSET));
        (n, 4)
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(err(
            skip,
            format!("vertex count {n} outside supported range 1..=64"),
        ));
    }

    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    let data = &bytes[pos..];
    if data.len() < need {
        return Err(err(
            skip + bytes.len(),
            format!(
                "truncated bit data: expected {need} bytes, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > need {
        return Err(err(skip + pos + need, "trailing garbage after bit data"));
    }

    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Graph::from_rows(rows).map_err(|e| err(skip, e.to_string()))
}

/// Canonical graph6 text for `g` (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n).div_ceil(12));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses every non-empty line of a graph6 stream.
///
/// Errors carry the 1-based line number in the reason.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l).map_err(|e| Graph6Error {
                offset: e.offset,
                reason: format!("line {}: {}", i + 1, e.reason),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_on_five() {
        // '?' = 000000, '{' = 111100: bits x(0,4), x(1,4), x(2,4), x(3,4)
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 4), (1, 4), (2, 4), (3, 4)]
        );
        assert_eq!(write_graph6(&g), "D?{");
    }

    #[test]
    fn tiny_records() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(write_graph6(&Graph::complete(2).unwrap()), "A_");
    }

    #[test]
    fn path_three() {
        let p3 = Graph::path(3).unwrap();
        // bits x(0,1)=1, x(0,2)=0, x(1,2)=1 -> 101000 = 40 -> 'g'
        assert_eq!(write_graph6(&p3), "Bg");
        assert_eq!(parse_graph6("Bg").unwrap(), p3);
    }

    #[test]
    fn header_and_newline() {
        let g = parse_graph6(">>graph6<<A_\r\n").unwrap();
        assert_eq!(g, Graph::complete(2).unwrap());
    }

    #[test]
    fn long_header() {
        let g = Graph::path(64).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g63 = Graph::cycle(63).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&g63)).unwrap(), g63);
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(parse_graph6("D?").unwrap_err().offset, 2);
        assert_eq!(parse_graph6("D?{x").unwrap_err().offset, 3);
        assert_eq!(parse_graph6("A_ ").unwrap_err().offset, 2);
        assert_eq!(parse_graph6("?").unwrap_err().offset, 0);
        assert_eq!(parse_graph6("").unwrap_err().offset, 0);
        assert_eq!(parse_graph6("~?").unwrap_err().offset, 2);
        assert_eq!(parse_graph6(">>graph6<<D?").unwrap_err().offset, 12);
        // n = 65
        assert!(parse_graph6("~?@@").unwrap_err().reason.contains("65"));
    }
}
