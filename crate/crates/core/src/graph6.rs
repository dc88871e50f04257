//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use crate::error::Graph6Error;
use crate::graph::SimpleGraph;

const BIAS: u8 = 63;
const MAX_BYTE: u8 = 126;
const OPTIONAL_HEADER: &str = ">>graph6<<";

fn check_byte(position: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (BIAS..=MAX_BYTE).contains(&byte) {
        Ok(byte - BIAS)
    } else {
        Err(Graph6Error::OutOfRange { position, byte })
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first != MAX_BYTE {
        return Ok((check_byte(0, first)? as usize, 1));
    }
    let (offset, width) = if bytes.get(1) == Some(&MAX_BYTE) {
        (2, 6)
    } else {
        (1, 3)
    };
    if bytes.len() < offset + width {
        return Err(Graph6Error::MalformedHeader);
    }
    let mut n = 0usize;
    for (i, &b) in bytes[offset..offset + width].iter().enumerate() {
        n = (n << 6) | check_byte(offset + i, b)? as usize;
    }
    // The long forms are only valid for sizes the shorter forms cannot hold.
    let valid = if width == 3 {
        n >= 63
    } else {
        n >= 258_048
    };
    if !valid {
        return Err(Graph6Error::MalformedHeader);
    }
    Ok((n, offset + width))
}

fn encode_size(n: usize, out: &mut String) {
    if n < 63 {
        out.push((n as u8 + BIAS) as char);
    } else if n < 258_048 {
        out.push(MAX_BYTE as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    } else {
        out.push(MAX_BYTE as char);
        out.push(MAX_BYTE as char);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    }
}

/// Decodes one graph6 string. Surrounding whitespace and the optional
/// `>>graph6<<` prefix are ignored.
pub fn parse_graph6(text: &str) -> Result<SimpleGraph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(OPTIONAL_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, header) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let payload = &bytes[header..];
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData {
            extra: payload.len() - expected,
        });
    }
    let mut sextets = Vec::with_capacity(expected);
    for (i, &b) in payload.iter().enumerate() {
        sextets.push(check_byte(header + i, b)?);
    }
    let bit = |k: usize| (sextets[k / 6] >> (5 - k % 6)) & 1 == 1;
    for k in bits..expected * 6 {
        if bit(k) {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    let mut g = SimpleGraph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.add_edge(u, v).expect("decoded pairs are distinct and in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = String::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
    out
}
