//! graph6 encoding of labeled simple graphs.
//!
//! The header encodes `n` (one byte for `n <= 62`, `~` plus three bytes up to
//! 258047, `~~` plus six bytes beyond). The body is the upper triangle of the
//! adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed
//! big-endian into 6-bit groups, each offset by 63, zero-padded at the end.

use thiserror::Error;

use crate::graph::Graph;

const OFFSET: u8 = 63;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("byte {byte:#04x} at position {position} is outside the printable range 63..=126")]
    InvalidByte { position: usize, byte: u8 },
    #[error("empty graph6 string")]
    Empty,
    #[error("truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage: expected {expected} bytes, found {found}")]
    TrailingGarbage { expected: usize, found: usize },
    #[error("padding bits of the final byte are not zero")]
    NonZeroPadding,
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing line
/// terminators are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    for (position, &byte) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { position, byte });
        }
    }
    let (n, header_len) = decode_order(bytes)?;
    let pairs =
        n.checked_mul(n.saturating_sub(1))
            .map(|p| p / 2)
            .ok_or(Graph6Error::Truncated {
                expected: usize::MAX,
                found: bytes.len(),
            })?;
    let body_len = pairs.div_ceil(6);
    let expected = header_len + body_len;
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            expected,
            found: bytes.len(),
        });
    }
    let body = &bytes[header_len..];
    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;

    let mut lists: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                lists[i].push(j);
                lists[j].push(i);
            }
            k += 1;
        }
    }
    if (pairs..body_len * 6).any(bit) {
        return Err(Graph6Error::NonZeroPadding);
    }
    for list in &mut lists {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_lists(&lists))
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let group = |digits: &[u8]| {
        digits
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - OFFSET))
    };
    let need = |len: usize| {
        if bytes.len() < len {
            Err(Graph6Error::Truncated {
                expected: len,
                found: bytes.len(),
            })
        } else {
            Ok(())
        }
    };
    match bytes {
        [] => Err(Graph6Error::Empty),
        [b'~', b'~', ..] => {
            need(8)?;
            Ok((group(&bytes[2..8]), 8))
        }
        [b'~', ..] => {
            need(4)?;
            Ok((group(&bytes[1..4]), 4))
        }
        [b, ..] => Ok((usize::from(b - OFFSET), 1)),
    }
}

/// Encodes `g` as a graph6 string (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= SHORT_MAX {
        out.push(n as u8 + OFFSET);
    } else if n <= MEDIUM_MAX {
        out.push(b'~');
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + OFFSET));
    } else {
        out.extend(*b"~~");
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + OFFSET));
    }

    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let column = g.neighbors(j);
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(column.binary_search(&i).is_ok());
            filled += 1;
            if filled == 6 {
                out.push(chunk + OFFSET);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + OFFSET);
    }
    // Every byte is in 63..=126.
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
